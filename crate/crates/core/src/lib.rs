//! Exact arithmetic for the algebra of (r,s)-even functions.
//!
//! An arithmetic function f is (r,s)-even when f(n) = f((n, r^s)_s) for all
//! n, where (a,b)_s is the largest perfect s-th power dividing both
//! arguments. Such functions are periodic mod r^s and live in a space of
//! dimension tau(r). This crate provides
//!
//! - the generalized Ramanujan sum c_{r,s}(n) by three independent routes
//!   ([`ramanujan`]),
//! - the structured DFT/IDFT on the space, expansion coefficients, Cauchy
//!   convolution, inversion, and the classical identity checks ([`even`]),
//! - restricted linear congruence counting ([`congruence`]),
//! - completely even sequences and the generalized Holder identity
//!   ([`holder`]),
//! - exact integer foundations ([`arith`]) and the JSON/CSV record format
//!   ([`serial`]).
//!
//! Everything is computed in exact rational arithmetic; floating point is
//! confined to the test oracles.

pub mod arith;
pub mod congruence;
pub mod error;
pub mod even;
pub mod holder;
pub mod ramanujan;
pub mod serial;

pub use arith::{
    dirichlet_convolve, exact_sth_root, generalized_gcd, jordan_divisor_sum_holds, jordan_totient,
    mobius, Factored, MultiplicativeSpec, Rational, FACTOR_CEILING,
};
pub use congruence::{count_bruteforce, count_bruteforce_table, count_spectral, CongruenceQuery};
pub use error::{Error, Result};
pub use even::{
    alpha_bruteforce, alternating_sum_check, invert, orthogonality_check, parseval_check,
    plan_for, ramanujan_square_sum_check, AlphaCoefficients, CrsPlan, EvenFunction, Spectrum,
};
pub use holder::{
    holder_prime_power_case, CompletelyEvenSequence, StronglyMultiplicativeFn,
};
pub use ramanujan::{
    crs, crs_divisor_sum_holds, crs_exponential_oracle, crs_holder, crs_prime_power, CrsQuery,
    ExponentialOracle,
};
pub use serial::{format_rational, parse_rational, FlatEntry, FlatRecord};
