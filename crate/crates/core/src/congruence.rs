//! Counting solutions of x_1 + ... + x_k = n (mod r^s) with every
//! coordinate restricted by (x_i, r^s)_s = 1: the spectral closed form
//! N_{r,s}(n,k) = r^{-s} sum_{d|r} c_{r,s}((r/d)^s)^k c_{d,s}(n), and
//! the iterated-convolution brute force it is checked against.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{generalized_gcd, Factored};
use crate::error::{Error, Result};
use crate::even::plan_for;
use crate::ramanujan::crs;

/// Work ceiling for the brute-force path: k convolution passes over a
/// period cost about k * (r^s)^2 additions.
pub const BRUTEFORCE_WORK_LIMIT: u64 = 100_000_000;

/// A restricted congruence counting problem. Solutions are counted over
/// residues 1..=r^s per coordinate; `n` is interpreted mod r^s.
///
/// `k` has a soft documentation cap of 64 in the spectral path: the
/// c^k terms grow like (r^s)^k, which unbounded integers absorb at the
/// cost of time, not correctness.
#[derive(Debug, Clone)]
pub struct CongruenceQuery {
    pub r: Factored,
    pub s: u32,
    pub k: u32,
    pub n: u64,
}

impl CongruenceQuery {
    pub fn new(r: Factored, s: u32, k: u32, n: u64) -> Result<Self> {
        if s == 0 || k == 0 {
            return Err(Error::Domain("congruence counting requires s >= 1 and k >= 1".into()));
        }
        r.pow_checked(s)?;
        Ok(CongruenceQuery { r, s, k, n })
    }

    pub fn modulus(&self) -> u64 {
        self.r.value().pow(self.s)
    }
}

/// N_{r,s}(n,k) by the spectral formula. The division by r^s is exact;
/// a nonzero remainder or a negative count is reported as an internal error.
pub fn count_spectral(q: &CongruenceQuery) -> Result<BigInt> {
    let plan = plan_for(&q.r, q.s)?;
    let mut sum = BigInt::zero();
    for (di, d) in plan.divisors().iter().enumerate() {
        let c_n = crs(d, q.s, q.n)?;
        if c_n.is_zero() {
            continue;
        }
        let base = plan.crs_at_divisor_power(plan.complement(di));
        sum += base.pow(q.k) * c_n;
    }
    let (count, rem) = sum.div_rem(&BigInt::from(plan.modulus()));
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "spectral count for r={} s={} k={} n={} is not divisible by r^s",
            q.r.value(),
            q.s,
            q.k,
            q.n
        )));
    }
    if count.is_negative() {
        return Err(Error::Internal("spectral count came out negative".into()));
    }
    Ok(count)
}

/// N_{r,s}(n,k) for every residue class at once, as the k-fold Cauchy power
/// of the admissible-residue indicator, built by iterated circular
/// convolution (cost k * (r^s)^2 rather than raw (r^s)^k enumeration).
/// Entry t holds the count for n = t mod r^s.
pub fn count_bruteforce_table(q: &CongruenceQuery) -> Result<Vec<BigInt>> {
    let m = q.r.pow_checked(q.s)?;
    let work = (q.k as u64).saturating_mul(m.saturating_mul(m));
    if work > BRUTEFORCE_WORK_LIMIT {
        return Err(Error::Capacity(format!(
            "brute-force count needs about {work} operations, over the {BRUTEFORCE_WORK_LIMIT} ceiling"
        )));
    }
    // indicator of admissible residues, indexed by x mod m
    let mut admissible = Vec::with_capacity(m as usize);
    for x in 0..m {
        let rep = if x == 0 { m } else { x };
        admissible.push(generalized_gcd(rep, m, q.s)? == 1);
    }
    let indices: Vec<usize> = (0..m as usize).filter(|&x| admissible[x]).collect();

    let mut counts: Vec<BigInt> = admissible
        .iter()
        .map(|&a| if a { BigInt::from(1) } else { BigInt::zero() })
        .collect();
    for _ in 1..q.k {
        let mut next = vec![BigInt::zero(); m as usize];
        for (x, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &j in &indices {
                let t = (x + j) % m as usize;
                next[t] += c;
            }
        }
        counts = next;
    }
    Ok(counts)
}

/// N_{r,s}(n,k) by brute force; see [`count_bruteforce_table`].
pub fn count_bruteforce(q: &CongruenceQuery) -> Result<BigInt> {
    let m = q.r.pow_checked(q.s)?;
    let table = count_bruteforce_table(q)?;
    Ok(table[(q.n % m) as usize].clone())
}
