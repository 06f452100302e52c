//! The generalized Ramanujan sum c_{r,s}(n): the sum of exp(2*pi*i*n*j/r^s)
//! over 1 <= j <= r^s with (j, r^s)_s = 1. Integer valued, periodic mod r^s,
//! multiplicative in r.
//!
//! Three independent routes are provided: the divisor formula (production
//! path, exact, O(tau(r)) after factorization), the Holder closed form, and
//! a floating-point evaluation of the defining exponential sum (test oracle).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{
    big_pow, exact_sth_root, generalized_gcd, jordan_totient, mobius, Factored,
};
use crate::error::{Error, Result};

/// Largest modulus r^s the exponential oracle will sum over.
pub const ORACLE_MODULUS_LIMIT: u64 = 1_000_000;

/// Residual tolerance for the exponential oracle.
pub const ORACLE_TOLERANCE: f64 = 1e-6;

/// A single Ramanujan-sum evaluation request. `n` is reduced mod r^s on
/// entry everywhere, so any nonnegative representative is accepted.
#[derive(Debug, Clone)]
pub struct CrsQuery {
    pub r: Factored,
    pub s: u32,
    pub n: u64,
}

impl CrsQuery {
    pub fn new(r: Factored, s: u32, n: u64) -> Result<Self> {
        if s == 0 {
            return Err(Error::Domain("c_{r,s} requires s >= 1".into()));
        }
        r.pow_checked(s)?;
        Ok(CrsQuery { r, s, n })
    }

    pub fn divisor_formula(&self) -> Result<BigInt> {
        crs(&self.r, self.s, self.n)
    }

    pub fn holder(&self) -> Result<BigInt> {
        crs_holder(&self.r, self.s, self.n)
    }

    pub fn exponential_oracle(&self) -> Result<BigInt> {
        ExponentialOracle::new(&self.r, self.s)?.eval(self.n)
    }
}

/// The generalized gcd (n, r^s)_s reduced to its s-th root m', so that
/// m'^s = (n, r^s)_s. m' always divides r.
fn gcd_root(r: &Factored, s: u32, n: u64) -> Result<Factored> {
    let modulus = r.pow_checked(s)?;
    let g = generalized_gcd(n % modulus, modulus, s)?;
    let root = exact_sth_root(g, s)
        .ok_or_else(|| Error::Internal(format!("({n}, {modulus})_{s} = {g} is not an s-th power")))?;
    Ok(r.gcd_with_value(root))
}

/// c_{r,s}(n) by the divisor formula: the sum of d^s * mu(r/d) over the
/// divisors d of r with d^s dividing (n, r^s)_s, i.e. over d | m' where
/// m'^s = (n, r^s)_s.
pub fn crs(r: &Factored, s: u32, n: u64) -> Result<BigInt> {
    assert!(s >= 1, "c_{{r,s}} requires s >= 1");
    let root = gcd_root(r, s, n)?;
    let mut sum = BigInt::zero();
    for d in root.divisors() {
        let mu = mobius(&r.cofactor(&d));
        if mu != 0 {
            sum += big_pow(d.value(), s) * mu;
        }
    }
    Ok(sum)
}

/// c_{r,s}(n) by the Holder closed form J_s(r) mu(m) / J_s(m) with
/// m^s = r^s / (n, r^s)_s. The division is exact; a nonzero remainder is
/// reported as an internal error.
pub fn crs_holder(r: &Factored, s: u32, n: u64) -> Result<BigInt> {
    assert!(s >= 1);
    let root = gcd_root(r, s, n)?;
    let m = r.cofactor(&root);
    let mu = mobius(&m);
    if mu == 0 {
        return Ok(BigInt::zero());
    }
    let numerator = jordan_totient(r, s) * mu;
    let denominator = jordan_totient(&m, s);
    let (q, rem) = numerator.div_rem(&denominator);
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "J_{s}({}) mu({}) not divisible by J_{s}({})",
            r.value(),
            m.value(),
            m.value()
        )));
    }
    Ok(q)
}

/// c_{p^lambda, s}(n) for prime p, by the three-case closed form:
/// p^{s*lambda} - p^{s(lambda-1)} when p^{s*lambda} | n, then
/// -p^{s(lambda-1)} when only p^{s(lambda-1)} | n, and 0 otherwise.
pub fn crs_prime_power(p: u64, lambda: u32, s: u32, n: u64) -> BigInt {
    assert!(lambda >= 1 && s >= 1);
    debug_assert!(p >= 2 && (2..p).all(|d| d * d > p || p % d != 0), "{p} must be prime");
    let n = BigInt::from(n);
    let high = big_pow(p, s * lambda);
    let low = big_pow(p, s * (lambda - 1));
    if (&n % &high).is_zero() {
        high - low
    } else if (&n % &low).is_zero() {
        -low
    } else {
        BigInt::zero()
    }
}

/// Checks sum_{d|r} c_{d,s}(n) = r^s when r^s | n and 0 otherwise, by
/// direct summation.
pub fn crs_divisor_sum_holds(r: &Factored, s: u32, n: u64) -> Result<bool> {
    let modulus = r.pow_checked(s)?;
    let mut sum = BigInt::zero();
    for d in r.divisors() {
        sum += crs(&d, s, n)?;
    }
    let expected = if n % modulus == 0 { BigInt::from(modulus) } else { BigInt::zero() };
    Ok(sum == expected)
}

/// Floating-point evaluation of the defining exponential sum. Tables of the
/// r^s-th roots of unity and of the admissible-index mask are built once,
/// then each `eval` walks the full period.
pub struct ExponentialOracle {
    modulus: u64,
    cos: Vec<f64>,
    sin: Vec<f64>,
    // admissible[j] = 1.0 when (j, r^s)_s = 1, with index 0 standing for j = r^s
    admissible: Vec<f64>,
}

impl ExponentialOracle {
    pub fn new(r: &Factored, s: u32) -> Result<Self> {
        assert!(s >= 1);
        let modulus = r.pow_checked(s)?;
        if modulus > ORACLE_MODULUS_LIMIT {
            return Err(Error::Capacity(format!(
                "exponential oracle limited to r^s <= {ORACLE_MODULUS_LIMIT}, got {modulus}"
            )));
        }
        let len = modulus as usize;
        let mut cos = Vec::with_capacity(len);
        let mut sin = Vec::with_capacity(len);
        let step = std::f64::consts::TAU / modulus as f64;
        for k in 0..len {
            let (s, c) = (step * k as f64).sin_cos();
            cos.push(c);
            sin.push(s);
        }
        let mut admissible = vec![0.0; len];
        admissible[0] = if modulus == 1 { 1.0 } else { 0.0 };
        for j in 1..len as u64 {
            if generalized_gcd(j, modulus, s)? == 1 {
                admissible[j as usize] = 1.0;
            }
        }
        Ok(ExponentialOracle { modulus, cos, sin, admissible })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Sum exp(2*pi*i*n*j/r^s) over admissible j, assert the imaginary part
    /// and the rounding residual stay below the tolerance, and round.
    pub fn eval(&self, n: u64) -> Result<BigInt> {
        let len = self.modulus as usize;
        let step = (n % self.modulus) as usize;
        // Four independent accumulator pairs keep the f64 dependency chains
        // short; indices walk k = n*j mod r^s incrementally.
        let mut re = [0.0f64; 4];
        let mut im = [0.0f64; 4];
        let mut k = 0usize;
        let mut j = 0usize;
        while j + 4 <= len {
            for lane in 0..4 {
                let a = self.admissible[j + lane];
                re[lane] += self.cos[k] * a;
                im[lane] += self.sin[k] * a;
                k += step;
                if k >= len {
                    k -= len;
                }
            }
            j += 4;
        }
        while j < len {
            let a = self.admissible[j];
            re[0] += self.cos[k] * a;
            im[0] += self.sin[k] * a;
            k += step;
            if k >= len {
                k -= len;
            }
            j += 1;
        }
        let re = re.iter().sum::<f64>();
        let im = im.iter().sum::<f64>();
        let rounded = re.round();
        if im.abs() >= ORACLE_TOLERANCE || (re - rounded).abs() >= ORACLE_TOLERANCE {
            return Err(Error::OracleInconsistency(format!(
                "exponential sum at modulus {}, n = {n}: {re} + {im}i exceeds tolerance {ORACLE_TOLERANCE}",
                self.modulus
            )));
        }
        Ok(BigInt::from(rounded as i64))
    }
}

/// One-shot oracle evaluation; prefer building an [`ExponentialOracle`] when
/// sweeping many n for the same (r, s).
pub fn crs_exponential_oracle(r: &Factored, s: u32, n: u64) -> Result<BigInt> {
    ExponentialOracle::new(r, s)?.eval(n)
}
