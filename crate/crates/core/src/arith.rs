//! Exact integer foundations: factorization, divisor enumeration, classical
//! multiplicative functions, Dirichlet convolution, and the generalized gcd
//! `(a, b)_s` (the largest perfect s-th power dividing both arguments).

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used for every function value in the library.
pub type Rational = num_rational::BigRational;

/// Default ceiling for trial-division factorization.
pub const FACTOR_CEILING: u64 = 1_000_000_000;

pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rational_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `base^exp` as an unbounded integer.
pub fn big_pow(base: u64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// A positive integer paired with its prime factorization. Primes are kept
/// strictly increasing, exponents are >= 1, and 1 carries the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factored {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factored {
    /// Factor `n` by deterministic trial division, default ceiling.
    pub fn new(n: u64) -> Result<Self> {
        Self::with_ceiling(n, FACTOR_CEILING)
    }

    /// Factor `n` by trial division with an explicit ceiling on the value.
    pub fn with_ceiling(n: u64, ceiling: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("cannot factor 0".into()));
        }
        if n > ceiling {
            return Err(Error::Capacity(format!(
                "{n} exceeds the factorization ceiling {ceiling}"
            )));
        }
        let mut rest = n;
        let mut factors = Vec::new();
        let mut trial = |p: u64, rest: &mut u64| {
            let mut e = 0u32;
            while *rest % p == 0 {
                *rest /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
        };
        trial(2, &mut rest);
        let mut p = 3u64;
        while p.saturating_mul(p) <= rest {
            trial(p, &mut rest);
            p += 2;
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Ok(Factored { value: n, factors })
    }

    /// Build directly from a known factorization (callers guarantee primes
    /// ascending and the product matching; debug builds re-check).
    fn from_parts(value: u64, factors: Vec<(u64, u32)>) -> Self {
        debug_assert_eq!(
            factors
                .iter()
                .fold(1u64, |acc, &(p, e)| acc * p.pow(e)),
            value
        );
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        Factored { value, factors }
    }

    pub fn one() -> Self {
        Factored { value: 1, factors: Vec::new() }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn prime_factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    /// Number of divisors tau(n).
    pub fn tau(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }

    /// Exponent of `p` in `self`.
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// `self.value()^exp` if it fits in u64, otherwise a capacity error.
    pub fn pow_checked(&self, exp: u32) -> Result<u64> {
        self.value.checked_pow(exp).ok_or_else(|| {
            Error::Capacity(format!("{}^{} exceeds the native integer range", self.value, exp))
        })
    }

    /// All tau(n) divisors, ascending by value, each with its own factorization.
    pub fn divisors(&self) -> Vec<Factored> {
        let mut out = vec![Factored::one()];
        for &(p, e) in &self.factors {
            let prev = std::mem::take(&mut out);
            let mut pk = 1u64;
            for k in 0..=e {
                if k > 0 {
                    pk *= p;
                }
                for d in &prev {
                    let mut next = d.clone();
                    if k > 0 {
                        next.value *= pk;
                        next.factors.push((p, k));
                    }
                    out.push(next);
                }
            }
        }
        out.sort_by_key(|d| d.value);
        out
    }

    /// `self / d` for a divisor `d` of `self`.
    pub fn cofactor(&self, d: &Factored) -> Factored {
        assert!(self.value % d.value == 0, "{} does not divide {}", d.value, self.value);
        let factors: Vec<(u64, u32)> = self
            .factors
            .iter()
            .filter_map(|&(p, e)| {
                let rem = e - d.valuation(p);
                (rem > 0).then_some((p, rem))
            })
            .collect();
        Factored::from_parts(self.value / d.value, factors)
    }

    /// The divisor of `self` supported on the same primes as `self` with
    /// exponents capped by `other`'s valuations, i.e. gcd(self, other).
    pub fn gcd_with_value(&self, other: u64) -> Factored {
        let mut factors = Vec::new();
        let mut value = 1u64;
        for &(p, e) in &self.factors {
            let mut a = 0u32;
            let mut rest = other;
            while a < e && rest % p == 0 {
                rest /= p;
                a += 1;
            }
            if a > 0 {
                factors.push((p, a));
                value *= p.pow(a);
            }
        }
        Factored::from_parts(value, factors)
    }
}

/// Mobius function: 0 when any square divides n, else (-1)^(number of primes).
pub fn mobius(n: &Factored) -> i32 {
    if n.factors.iter().any(|&(_, e)| e >= 2) {
        0
    } else if n.factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Jordan totient J_s(n) = n^s * prod_{p|n} (1 - p^{-s}), exact.
/// J_1 is the Euler totient.
pub fn jordan_totient(n: &Factored, s: u32) -> BigInt {
    assert!(s >= 1, "jordan_totient requires s >= 1");
    let mut out = BigInt::one();
    for &(p, e) in &n.factors {
        out *= big_pow(p, s * (e - 1)) * (big_pow(p, s) - 1);
    }
    out
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Generalized gcd `(a, b)_s`: the largest l^s dividing both a and b.
/// `(a, b)_1` is the ordinary gcd. With a = 0 it is the largest l^s
/// dividing b, which keeps (r^s, r^s)_s = r^s at n = 0.
pub fn generalized_gcd(a: u64, b: u64, s: u32) -> Result<u64> {
    if s == 0 {
        return Err(Error::Domain("generalized gcd requires s >= 1".into()));
    }
    if a == 0 && b == 0 {
        return Err(Error::Domain(
            "generalized gcd requires at least one nonzero argument".into(),
        ));
    }
    let g = gcd_u64(a, b);
    if s == 1 {
        return Ok(g);
    }
    let mut best = 1u64;
    let mut l = 2u64;
    while let Some(ls) = l.checked_pow(s) {
        if ls > g {
            break;
        }
        if g % ls == 0 {
            best = ls;
        }
        l += 1;
    }
    Ok(best)
}

/// Exact integer s-th root, if `x` is a perfect s-th power.
pub fn exact_sth_root(x: u64, s: u32) -> Option<u64> {
    assert!(s >= 1);
    if s == 1 || x <= 1 {
        return Some(x);
    }
    let mut root = (x as f64).powf(1.0 / s as f64).round() as u64;
    while root > 0 && root.checked_pow(s).is_none_or(|v| v > x) {
        root -= 1;
    }
    while (root + 1).checked_pow(s).is_some_and(|v| v <= x) {
        root += 1;
    }
    (root.pow(s) == x).then_some(root)
}

/// A multiplicative arithmetic function defined by its values on prime
/// powers. Evaluation at n multiplies the rule over the prime powers of n;
/// the empty product gives f(1) = 1.
#[derive(Clone)]
pub struct MultiplicativeSpec {
    name: String,
    rule: Arc<dyn Fn(u64, u32) -> Rational + Send + Sync>,
}

impl MultiplicativeSpec {
    pub fn new(
        name: impl Into<String>,
        rule: impl Fn(u64, u32) -> Rational + Send + Sync + 'static,
    ) -> Self {
        MultiplicativeSpec { name: name.into(), rule: Arc::new(rule) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prime_power(&self, p: u64, a: u32) -> Rational {
        debug_assert!(a >= 1);
        (self.rule)(p, a)
    }

    pub fn eval(&self, n: &Factored) -> Rational {
        n.prime_factors()
            .iter()
            .map(|&(p, a)| (self.rule)(p, a))
            .fold(Rational::one(), |acc, v| acc * v)
    }

    /// The Mobius function mu.
    pub fn mobius() -> Self {
        Self::new("mu", |_, a| if a == 1 { -Rational::one() } else { Rational::zero() })
    }

    /// The constant function 1.
    pub fn one() -> Self {
        Self::new("1", |_, _| Rational::one())
    }

    /// The Dirichlet identity epsilon(n) = [1/n].
    pub fn epsilon() -> Self {
        Self::new("epsilon", |_, _| Rational::zero())
    }

    /// The Jordan totient J_s.
    pub fn jordan(s: u32) -> Self {
        assert!(s >= 1);
        Self::new(format!("J_{s}"), move |p, a| {
            rational_big(big_pow(p, s * (a - 1)) * (big_pow(p, s) - 1))
        })
    }
}

/// Dirichlet convolution (f * g)(n) = sum over d | n of f(d) g(n/d).
/// Operands may be `MultiplicativeSpec::eval` closures or any tabulated
/// function defined on the divisors of n.
pub fn dirichlet_convolve<F, G>(f: F, g: G, n: &Factored) -> Rational
where
    F: Fn(&Factored) -> Rational,
    G: Fn(&Factored) -> Rational,
{
    n.divisors()
        .iter()
        .map(|d| f(d) * g(&n.cofactor(d)))
        .fold(Rational::zero(), |acc, v| acc + v)
}

/// Checks the divisor-sum identity sum_{d|n} J_s(d) = n^s exactly.
pub fn jordan_divisor_sum_holds(n: &Factored, s: u32) -> bool {
    let sum: BigInt = n.divisors().iter().map(|d| jordan_totient(d, s)).sum();
    sum == big_pow(n.value(), s)
}
