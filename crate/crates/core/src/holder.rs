//! Completely (r,s)-even sequences f_r(n) = F((n, r^s)_s) built from a
//! strongly multiplicative F, and the generalized Holder identity for their
//! spectra:
//!
//!   f^_r(n) = (F*mu)(m) (F*J_s)(r) / (F*J_s)(m),  m^s = r^s / (n, r^s)_s,
//!
//! valid whenever F(p) != 1 - p^s for every prime p dividing r. Taking
//! F = epsilon recovers c_{r,s}(n) = J_s(r) mu(m) / J_s(m).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{
    big_pow, exact_sth_root, generalized_gcd, rational_big, Factored, MultiplicativeSpec, Rational,
};
use crate::error::{Error, Result};
use crate::even::EvenFunction;

/// A strongly multiplicative function: multiplicative with F(p^a) = F(p)
/// for all a >= 1, so it is determined by its values on primes. Primes not
/// listed explicitly take the default value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StronglyMultiplicativeFn {
    default: Rational,
    primes: BTreeMap<u64, Rational>,
}

impl StronglyMultiplicativeFn {
    pub fn new(default: Rational, primes: BTreeMap<u64, Rational>) -> Self {
        StronglyMultiplicativeFn { default, primes }
    }

    /// F = epsilon: F(p) = 0 for every prime, so F(n) = [n = 1].
    pub fn epsilon() -> Self {
        Self::new(Rational::zero(), BTreeMap::new())
    }

    /// F = 1.
    pub fn one() -> Self {
        Self::new(Rational::one(), BTreeMap::new())
    }

    pub fn at_prime(&self, p: u64) -> Rational {
        self.primes.get(&p).unwrap_or(&self.default).clone()
    }

    /// F(n) = prod over primes p | n of F(p).
    pub fn eval(&self, n: &Factored) -> Rational {
        n.prime_factors()
            .iter()
            .map(|&(p, _)| self.at_prime(p))
            .fold(Rational::one(), |acc, v| acc * v)
    }

    /// View as a general multiplicative function on prime powers.
    pub fn as_multiplicative_spec(&self) -> MultiplicativeSpec {
        let f = self.clone();
        MultiplicativeSpec::new("F", move |p, _| f.at_prime(p))
    }
}

/// The family f_r(n) = F((n, r^s)_s) for a fixed strongly multiplicative F.
#[derive(Debug, Clone)]
pub struct CompletelyEvenSequence {
    f: StronglyMultiplicativeFn,
    s: u32,
}

impl CompletelyEvenSequence {
    pub fn new(f: StronglyMultiplicativeFn, s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::Domain("completely even sequences require s >= 1".into()));
        }
        Ok(CompletelyEvenSequence { f, s })
    }

    pub fn function(&self) -> &StronglyMultiplicativeFn {
        &self.f
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// The member f_r as an element of B_{r,s}. Strong multiplicativity
    /// collapses exponents, so the value at d^s is just prod_{p|d} F(p).
    pub fn realize(&self, r: &Factored) -> Result<EvenFunction> {
        EvenFunction::from_fn(r.clone(), self.s, |d| self.f.eval(d))
    }

    /// Every prime p | r must satisfy F(p) != 1 - p^s.
    pub fn check_hypothesis(&self, r: &Factored) -> Result<()> {
        for &(p, _) in r.prime_factors() {
            let forbidden = Rational::one() - rational_big(big_pow(p, self.s));
            if self.f.at_prime(p) == forbidden {
                return Err(Error::HolderHypothesis { p, s: self.s });
            }
        }
        Ok(())
    }

    /// (F * mu)(x) via the prime-power closed form: F(p) - 1 at p^1 and 0
    /// at p^a for a >= 2.
    pub fn convolve_mobius(&self, x: &Factored) -> Rational {
        let mut acc = Rational::one();
        for &(p, a) in x.prime_factors() {
            if a >= 2 {
                return Rational::zero();
            }
            acc *= self.f.at_prime(p) - Rational::one();
        }
        acc
    }

    /// (F * J_s)(x) via the prime-power closed form
    /// p^{s(a-1)} (p^s - 1 + F(p)).
    pub fn convolve_jordan(&self, x: &Factored) -> Rational {
        let mut acc = Rational::one();
        for &(p, a) in x.prime_factors() {
            let unit = rational_big(big_pow(p, self.s * (a - 1)));
            let factor = rational_big(big_pow(p, self.s)) - Rational::one() + self.f.at_prime(p);
            acc *= unit * factor;
        }
        acc
    }

    /// The spectrum value f^_r(n) by the Holder closed form. Equal to
    /// `self.realize(r)?.dft()?.evaluate(n)` whenever the hypothesis holds.
    pub fn holder_dft(&self, r: &Factored, n: u64) -> Result<Rational> {
        self.check_hypothesis(r)?;
        let modulus = r.pow_checked(self.s)?;
        let g = generalized_gcd(n % modulus, modulus, self.s)?;
        let root = exact_sth_root(g, self.s)
            .ok_or_else(|| Error::Internal("generalized gcd is not a perfect power".into()))?;
        let m = r.cofactor(&r.gcd_with_value(root));
        let denominator = self.convolve_jordan(&m);
        if denominator.is_zero() {
            return Err(Error::Internal(format!(
                "(F*J_{})({}) vanished although the hypothesis holds",
                self.s,
                m.value()
            )));
        }
        Ok(self.convolve_mobius(&m) * self.convolve_jordan(r) / denominator)
    }
}

/// The spectrum of f_{p^a} evaluated by the per-case closed form:
/// p^{s(a-1)}(F(p) + p^s - 1) when p^{sa} | n, then p^{s(a-1)}(F(p) - 1)
/// when only p^{s(a-1)} | n, and 0 otherwise.
pub fn holder_prime_power_case(p: u64, a: u32, s: u32, n: u64, fp: &Rational) -> Rational {
    assert!(a >= 1 && s >= 1);
    debug_assert!(p >= 2 && (2..p).all(|d| d * d > p || p % d != 0), "{p} must be prime");
    let n = BigInt::from(n);
    let high = big_pow(p, s * a);
    let low = big_pow(p, s * (a - 1));
    if (&n % &high).is_zero() {
        rational_big(low) * (fp + rational_big(big_pow(p, s)) - Rational::one())
    } else if (&n % &low).is_zero() {
        rational_big(low) * (fp - Rational::one())
    } else {
        Rational::zero()
    }
}
