//! The algebra of (r,s)-even functions: arithmetic functions f with
//! f(n) = f((n, r^s)_s) for all n. The space B_{r,s} has dimension tau(r);
//! a function is stored as its tau(r) values f(d^s), one per divisor d of r.
//!
//! The structured DFT on B_{r,s} is the tau(r) x tau(r) matrix
//! [c_{r/d,s}(e^s)]. It is materialized once per (r, s) and shared by the
//! transform, its inverse, the expansion coefficients, and the identity
//! checks in this module. All values are exact rationals; floating point is
//! confined to the test oracles.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{
    exact_sth_root, generalized_gcd, jordan_totient, rational_big, Factored, Rational,
};
use crate::error::{Error, Result};
use crate::ramanujan::crs;

/// Largest modulus r^s for the full-period operations (brute-force
/// coefficients, Parseval sums).
pub const FULL_PERIOD_LIMIT: u64 = 100_000;

/// Largest modulus r^s for the quadratic-cost direct Cauchy convolution.
pub const DIRECT_CONVOLUTION_LIMIT: u64 = 10_000;

/// The shared transform data for one (r, s): the divisors of r and the
/// matrix entry\[e\]\[d\] = c_{r/d,s}(e^s).
pub struct CrsPlan {
    r: Factored,
    s: u32,
    modulus: u64,
    divisors: Vec<Factored>,
    matrix: Vec<Vec<BigInt>>,
}

impl CrsPlan {
    pub fn build(r: &Factored, s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::Domain("B_{r,s} requires s >= 1".into()));
        }
        let modulus = r.pow_checked(s)?;
        let divisors = r.divisors();
        let tau = divisors.len();
        let mut matrix = vec![vec![BigInt::zero(); tau]; tau];
        for (ei, e) in divisors.iter().enumerate() {
            let arg = e.pow_checked(s)?;
            for (di, d) in divisors.iter().enumerate() {
                matrix[ei][di] = crs(&r.cofactor(d), s, arg)?;
            }
        }
        Ok(CrsPlan { r: r.clone(), s, modulus, divisors, matrix })
    }

    /// A plan with one matrix entry off by one. Feeding it to
    /// [`EvenFunction::dft_with_plan`] must break the transform identities;
    /// the CLI uses this to prove its `verify` suites can fail.
    pub fn build_corrupted(r: &Factored, s: u32) -> Result<Self> {
        let mut plan = Self::build(r, s)?;
        plan.matrix[0][0] += 1;
        Ok(plan)
    }

    pub fn r(&self) -> &Factored {
        &self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn divisors(&self) -> &[Factored] {
        &self.divisors
    }

    pub fn tau(&self) -> usize {
        self.divisors.len()
    }

    /// Index of a divisor by value. Panics when the value is not a divisor
    /// of r; callers pass values produced by the plan itself.
    pub fn index_of(&self, divisor: u64) -> usize {
        self.divisors
            .binary_search_by_key(&divisor, |d| d.value())
            .unwrap_or_else(|_| panic!("{divisor} is not a divisor of {}", self.r.value()))
    }

    /// Index of the complementary divisor r/d.
    pub fn complement(&self, idx: usize) -> usize {
        self.index_of(self.r.value() / self.divisors[idx].value())
    }

    /// The matrix-vector product sum_d entry\[e\]\[d\] * values\[d\].
    fn apply(&self, values: &[Rational]) -> Vec<Rational> {
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(values)
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| v * rational_big(c.clone()))
                    .fold(Rational::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    /// c_{r,s}(e^s) for the divisor at `idx`, read off the first column.
    pub fn crs_at_divisor_power(&self, idx: usize) -> &BigInt {
        &self.matrix[idx][0]
    }

    /// The index of the class representative m' with m'^s = (n, r^s)_s.
    /// m' always divides r.
    fn class_index(&self, n: u64) -> usize {
        let g = generalized_gcd(n % self.modulus, self.modulus, self.s)
            .expect("modulus >= 1 by construction");
        let root = exact_sth_root(g, self.s).expect("generalized gcd is a perfect s-th power");
        self.index_of(root)
    }
}

fn plan_cache() -> &'static Mutex<HashMap<(u64, u32), Arc<CrsPlan>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Arc<CrsPlan>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The shared plan for (r, s), built on first use.
pub fn plan_for(r: &Factored, s: u32) -> Result<Arc<CrsPlan>> {
    let key = (r.value(), s);
    if let Some(plan) = plan_cache().lock().unwrap().get(&key) {
        return Ok(plan.clone());
    }
    let plan = Arc::new(CrsPlan::build(r, s)?);
    plan_cache().lock().unwrap().insert(key, plan.clone());
    Ok(plan)
}

/// An element of B_{r,s}: exact rational values indexed by the divisors d
/// of r, entry d holding f(d^s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenFunction {
    r: Factored,
    s: u32,
    modulus: u64,
    // ascending divisor values, kept alongside to make evaluate() cheap
    divisor_cache: Vec<u64>,
    values: Vec<Rational>,
}

impl EvenFunction {
    /// Values listed in ascending divisor order; the length must be tau(r).
    pub fn new(r: Factored, s: u32, values: Vec<Rational>) -> Result<Self> {
        if s == 0 {
            return Err(Error::Domain("B_{r,s} requires s >= 1".into()));
        }
        let modulus = r.pow_checked(s)?;
        if values.len() as u64 != r.tau() {
            return Err(Error::Domain(format!(
                "expected {} values (one per divisor of {}), got {}",
                r.tau(),
                r.value(),
                values.len()
            )));
        }
        let divisor_cache = r.divisors().iter().map(|d| d.value()).collect();
        Ok(EvenFunction { r, s, modulus, divisor_cache, values })
    }

    /// Build from a divisor -> value map; the key set must be exactly the
    /// divisors of r.
    pub fn from_map(r: Factored, s: u32, map: &BTreeMap<u64, Rational>) -> Result<Self> {
        let divisors = r.divisors();
        if divisors.len() != map.len() || divisors.iter().any(|d| !map.contains_key(&d.value())) {
            let got: Vec<u64> = map.keys().copied().collect();
            return Err(Error::Domain(format!(
                "divisor set {:?} does not match the divisors of {}",
                got,
                r.value()
            )));
        }
        let values = divisors.iter().map(|d| map[&d.value()].clone()).collect();
        Self::new(r, s, values)
    }

    pub fn from_fn(r: Factored, s: u32, mut f: impl FnMut(&Factored) -> Rational) -> Result<Self> {
        let values = r.divisors().iter().map(&mut f).collect();
        Self::new(r, s, values)
    }

    pub fn zero(r: Factored, s: u32) -> Result<Self> {
        Self::from_fn(r, s, |_| Rational::zero())
    }

    pub fn constant(r: Factored, s: u32, value: Rational) -> Result<Self> {
        Self::from_fn(r, s, |_| value.clone())
    }

    /// The basis indicator g_d: 1 where (n, r^s)_s = d^s, else 0.
    pub fn basis(r: Factored, s: u32, d: u64) -> Result<Self> {
        if r.value() % d != 0 {
            return Err(Error::Domain(format!("{d} is not a divisor of {}", r.value())));
        }
        Self::from_fn(r, s, |e| {
            if e.value() == d {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// rho_{r,s}: the indicator of (n, r^s)_s = 1. Its DFT is c_{r,s}.
    pub fn rho(r: Factored, s: u32) -> Result<Self> {
        Self::basis(r, s, 1)
    }

    /// c_{r,s} tabulated as an element of B_{r,s}.
    pub fn ramanujan(r: Factored, s: u32) -> Result<Self> {
        let divisors = r.divisors();
        let mut values = Vec::with_capacity(divisors.len());
        for d in &divisors {
            values.push(rational_big(crs(&r, s, d.pow_checked(s)?)?));
        }
        Self::new(r, s, values)
    }

    pub fn r(&self) -> &Factored {
        &self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn divisor_values(&self) -> &[u64] {
        &self.divisor_cache
    }

    /// f(n) through the class representative: values\[m'\] with
    /// m'^s = (n, r^s)_s. n = 0 lands on the n = r^s class.
    pub fn evaluate(&self, n: u64) -> Rational {
        let g = generalized_gcd(n % self.modulus, self.modulus, self.s)
            .expect("modulus >= 1 by construction");
        let root = exact_sth_root(g, self.s).expect("generalized gcd is a perfect s-th power");
        let idx = self
            .divisor_cache
            .binary_search(&root)
            .expect("class representative divides r");
        self.values[idx].clone()
    }

    /// The DFT f^(n) = sum_{d|r} f(d^s) c_{r/d,s}(n), returned on the same
    /// divisor grid (the spectrum is itself (r,s)-even).
    pub fn dft(&self) -> Result<Spectrum> {
        let plan = plan_for(&self.r, self.s)?;
        self.dft_with_plan(&plan)
    }

    /// The DFT through an explicit plan (used by the CLI self-test, which
    /// feeds a corrupted matrix).
    pub fn dft_with_plan(&self, plan: &CrsPlan) -> Result<Spectrum> {
        if plan.r.value() != self.r.value() || plan.s != self.s {
            return Err(Error::Domain("plan does not match the function's (r, s)".into()));
        }
        Ok(Spectrum {
            inner: EvenFunction {
                r: self.r.clone(),
                s: self.s,
                modulus: self.modulus,
                divisor_cache: self.divisor_cache.clone(),
                values: plan.apply(&self.values),
            },
        })
    }

    /// Cauchy convolution (f (*) g)(n) = sum_{k mod r^s} f(k) g(n-k),
    /// computed spectrally: idft(dft(f) . dft(g)).
    pub fn cauchy_convolve(&self, g: &EvenFunction) -> Result<EvenFunction> {
        if self.r.value() != g.r.value() || self.s != g.s {
            return Err(Error::Domain(format!(
                "operands live in different spaces: ({}, {}) vs ({}, {})",
                self.r.value(),
                self.s,
                g.r.value(),
                g.s
            )));
        }
        let fs = self.dft()?;
        let gs = g.dft()?;
        let product: Vec<Rational> = fs
            .inner
            .values
            .iter()
            .zip(&gs.inner.values)
            .map(|(a, b)| a * b)
            .collect();
        Spectrum { inner: EvenFunction::new(self.r.clone(), self.s, product)? }.idft()
    }

    /// Cauchy convolution by the defining sum over a full period. Quadratic
    /// in r^s; serves as the independent route checking the spectral path.
    pub fn cauchy_convolve_direct(&self, g: &EvenFunction) -> Result<EvenFunction> {
        if self.r.value() != g.r.value() || self.s != g.s {
            return Err(Error::Domain("operands live in different spaces".into()));
        }
        if self.modulus > DIRECT_CONVOLUTION_LIMIT {
            return Err(Error::Capacity(format!(
                "direct convolution limited to r^s <= {DIRECT_CONVOLUTION_LIMIT}, got {}",
                self.modulus
            )));
        }
        let m = self.modulus;
        let f_table: Vec<Rational> = (1..=m).map(|k| self.evaluate(k)).collect();
        let g_table: Vec<Rational> = (1..=m).map(|k| g.evaluate(k)).collect();
        let at = |n: u64| -> Rational {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let diff = (n + m - (k % m)) % m;
                let diff = if diff == 0 { m } else { diff };
                acc += &f_table[(k - 1) as usize] * &g_table[(diff - 1) as usize];
            }
            acc
        };
        EvenFunction::from_fn(self.r.clone(), self.s, |e| {
            at(e.value().pow(self.s) % m)
        })
    }
}

/// The DFT of an (r,s)-even function, stored on the same divisor grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    inner: EvenFunction,
}

impl Spectrum {
    /// Wrap an (r,s)-even function as a spectrum (every spectrum is itself
    /// (r,s)-even, and conversely any element of B_{r,s} may be inverted).
    pub fn from_even(f: EvenFunction) -> Self {
        Spectrum { inner: f }
    }

    pub fn as_even(&self) -> &EvenFunction {
        &self.inner
    }

    pub fn into_even(self) -> EvenFunction {
        self.inner
    }

    pub fn values(&self) -> &[Rational] {
        &self.inner.values
    }

    pub fn evaluate(&self, n: u64) -> Rational {
        self.inner.evaluate(n)
    }

    /// The exact inverse transform f(n) = r^{-s} sum_{d|r} f^(d^s) c_{r/d,s}(n).
    pub fn idft(&self) -> Result<EvenFunction> {
        let plan = plan_for(&self.inner.r, self.inner.s)?;
        self.idft_with_plan(&plan)
    }

    pub fn idft_with_plan(&self, plan: &CrsPlan) -> Result<EvenFunction> {
        if plan.r.value() != self.inner.r.value() || plan.s != self.inner.s {
            return Err(Error::Domain("plan does not match the spectrum's (r, s)".into()));
        }
        let scale = Rational::from_integer(BigInt::from(self.inner.modulus));
        let values = plan
            .apply(&self.inner.values)
            .into_iter()
            .map(|v| v / &scale)
            .collect();
        Ok(EvenFunction {
            r: self.inner.r.clone(),
            s: self.inner.s,
            modulus: self.inner.modulus,
            divisor_cache: self.inner.divisor_cache.clone(),
            values,
        })
    }

    /// Expansion coefficients from the spectrum: alpha(d) = f^((r/d)^s) / r^s.
    pub fn alpha(&self) -> Result<AlphaCoefficients> {
        let plan = plan_for(&self.inner.r, self.inner.s)?;
        let scale = Rational::from_integer(BigInt::from(self.inner.modulus));
        let alpha = (0..plan.tau())
            .map(|i| &self.inner.values[plan.complement(i)] / &scale)
            .collect();
        Ok(AlphaCoefficients { r: self.inner.r.clone(), s: self.inner.s, alpha })
    }
}

/// The unique coefficients alpha_f(d) with f = sum_{d|r} alpha_f(d) c_{d,s}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaCoefficients {
    r: Factored,
    s: u32,
    alpha: Vec<Rational>,
}

impl AlphaCoefficients {
    pub fn new(r: Factored, s: u32, alpha: Vec<Rational>) -> Result<Self> {
        if alpha.len() as u64 != r.tau() {
            return Err(Error::Domain("one coefficient per divisor of r required".into()));
        }
        Ok(AlphaCoefficients { r, s, alpha })
    }

    pub fn r(&self) -> &Factored {
        &self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn values(&self) -> &[Rational] {
        &self.alpha
    }

    /// sum_{d|r} alpha(d) c_{d,s}(n); reproduces the originating function.
    pub fn reconstruct(&self, n: u64) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (d, a) in self.r.divisors().iter().zip(&self.alpha) {
            if !a.is_zero() {
                acc += a * rational_big(crs(d, self.s, n)?);
            }
        }
        Ok(acc)
    }
}

/// alpha_f(d) by the direct full-period sum
/// (r^s J_s(d))^{-1} sum_{m=1}^{r^s} f(m) c_{d,s}(m); the independent route
/// checking [`Spectrum::alpha`].
pub fn alpha_bruteforce(f: &EvenFunction) -> Result<AlphaCoefficients> {
    let m = f.modulus();
    if m > FULL_PERIOD_LIMIT {
        return Err(Error::Capacity(format!(
            "brute-force coefficients limited to r^s <= {FULL_PERIOD_LIMIT}, got {m}"
        )));
    }
    let f_table: Vec<Rational> = (1..=m).map(|n| f.evaluate(n)).collect();
    let mut alpha = Vec::new();
    for d in f.r().divisors() {
        // c_{d,s} is periodic mod d^s; tabulate one period and wrap.
        let period = d.pow_checked(f.s())?;
        let mut c_table = Vec::with_capacity(period as usize);
        for n in 1..=period {
            c_table.push(crs(&d, f.s(), n)?);
        }
        let mut sum = Rational::zero();
        for n in 1..=m {
            let c = &c_table[((n - 1) % period) as usize];
            if !c.is_zero() {
                sum += &f_table[(n - 1) as usize] * rational_big(c.clone());
            }
        }
        let denom = rational_big(BigInt::from(m) * jordan_totient(&d, f.s()));
        alpha.push(sum / denom);
    }
    AlphaCoefficients::new(f.r().clone(), f.s(), alpha)
}

/// Inversion: given the coefficients g(d) of f(n) = sum_{d|r} g(d) c_{d,s}(n),
/// recover g(m) where m^s = r^s / (n, r^s)_s via
/// g(m) = r^{-s} sum_{d|r} f(r^s/d^s) c_{d,s}(n).
pub fn invert(r: &Factored, s: u32, coefficients: &BTreeMap<u64, Rational>, n: u64) -> Result<Rational> {
    let plan = plan_for(r, s)?;
    let divisors = plan.divisors();
    if divisors.len() != coefficients.len()
        || divisors.iter().any(|d| !coefficients.contains_key(&d.value()))
    {
        return Err(Error::Domain(format!(
            "coefficient keys must be exactly the divisors of {}",
            r.value()
        )));
    }
    // f(e^s) = sum_{d|r} g(d) c_{d,s}(e^s); c_{d,s}(e^s) sits at
    // matrix[e][index of r/d].
    let tau = plan.tau();
    let mut f_at_power = vec![Rational::zero(); tau];
    for (ei, val) in f_at_power.iter_mut().enumerate() {
        for (di, d) in divisors.iter().enumerate() {
            let g = &coefficients[&d.value()];
            if !g.is_zero() {
                *val += g * rational_big(plan.matrix[ei][plan.complement(di)].clone());
            }
        }
    }
    let mut acc = Rational::zero();
    for (di, d) in divisors.iter().enumerate() {
        // f(r^s/d^s) = f((r/d)^s) is the stored value at divisor r/d.
        let f_val = &f_at_power[plan.complement(di)];
        if !f_val.is_zero() {
            acc += f_val * rational_big(crs(d, s, n)?);
        }
    }
    Ok(acc / rational_big(BigInt::from(plan.modulus())))
}

/// Parseval for B_{r,s}:
/// sum_{n=1}^{r^s} f^(n)^2 = r^s sum_{d|r} f(d^s)^2 J_s(r/d),
/// where J_s(r/d) counts the n in one period with (n, r^s)_s = d^s. Both
/// the identity and the class counts are checked exactly.
pub fn parseval_check(f: &EvenFunction) -> Result<bool> {
    let m = f.modulus();
    if m > FULL_PERIOD_LIMIT {
        return Err(Error::Capacity(format!(
            "Parseval check limited to r^s <= {FULL_PERIOD_LIMIT}, got {m}"
        )));
    }
    let plan = plan_for(f.r(), f.s())?;
    let spectrum = f.dft_with_plan(&plan)?;
    let mut lhs = Rational::zero();
    let mut class_counts = vec![0u64; plan.tau()];
    for n in 1..=m {
        let idx = plan.class_index(n);
        class_counts[idx] += 1;
        let v = &spectrum.values()[idx];
        lhs += v * v;
    }
    let mut rhs = Rational::zero();
    for (di, d) in plan.divisors().iter().enumerate() {
        // the class of d^s holds J_s(r/d) residues; check the count as well
        let weight = jordan_totient(&f.r().cofactor(d), f.s());
        if BigInt::from(class_counts[di]) != weight {
            return Ok(false);
        }
        let fv = &f.values()[di];
        rhs += fv * fv * rational_big(weight);
    }
    Ok(lhs == rhs * rational_big(BigInt::from(m)))
}

/// Orthogonality: sum_{d|r} c_{d,s}(n) c_{r,s}((r/d)^s) equals r^s when
/// (n, r^s)_s = 1 and 0 otherwise.
pub fn orthogonality_check(r: &Factored, s: u32, n: u64) -> Result<bool> {
    let plan = plan_for(r, s)?;
    let mut sum = BigInt::zero();
    for (di, d) in plan.divisors().iter().enumerate() {
        let c_n = crs(d, s, n)?;
        if !c_n.is_zero() {
            sum += c_n * plan.crs_at_divisor_power(plan.complement(di));
        }
    }
    let coprime = generalized_gcd(n % plan.modulus(), plan.modulus(), s)? == 1;
    let expected = if coprime { BigInt::from(plan.modulus()) } else { BigInt::zero() };
    Ok(sum == expected)
}

/// Alternating divisor sum for even r:
/// sum_{d|r} (-1)^{d^s} c_{r/d,s}(n) against r^s [n = r^s/2 mod r^s].
///
/// The identity holds for s = 1 (the sign function (-1)^n is r-even when r
/// is even). For s >= 2 the right-hand indicator is not (r,s)-even, so no
/// divisor expansion can equal it and the check reports false; see the
/// boundary tests.
pub fn alternating_sum_check(r: &Factored, s: u32, n: u64) -> Result<bool> {
    if r.value() % 2 != 0 {
        return Err(Error::Domain(format!(
            "alternating sum requires even r, got {}",
            r.value()
        )));
    }
    let modulus = r.pow_checked(s)?;
    let mut sum = BigInt::zero();
    for d in r.divisors() {
        // d^s has the parity of d.
        let c = crs(&r.cofactor(&d), s, n)?;
        if d.value() % 2 == 0 {
            sum += c;
        } else {
            sum -= c;
        }
    }
    let half = modulus / 2;
    let expected = if n % modulus == half { BigInt::from(modulus) } else { BigInt::zero() };
    Ok(sum == expected)
}

/// sum_{n=1}^{r^s} c_{r,s}(n)^2 = r^s J_s(r), the Parseval consequence for
/// f = rho_{r,s}. (The count of admissible residues in one period is J_s(r),
/// which pins the right-hand side; verified against the full-period sum.)
pub fn ramanujan_square_sum_check(r: &Factored, s: u32) -> Result<bool> {
    let modulus = r.pow_checked(s)?;
    if modulus > FULL_PERIOD_LIMIT {
        return Err(Error::Capacity(format!(
            "square-sum check limited to r^s <= {FULL_PERIOD_LIMIT}, got {modulus}"
        )));
    }
    let c = EvenFunction::ramanujan(r.clone(), s)?;
    let mut lhs = Rational::zero();
    for n in 1..=modulus {
        let v = c.evaluate(n);
        lhs += &v * &v;
    }
    let rhs = rational_big(BigInt::from(modulus) * jordan_totient(r, s));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_int;

    fn f(n: u64) -> Factored {
        Factored::new(n).unwrap()
    }

    fn rat(n: i64) -> Rational {
        rational_int(n)
    }

    fn rho21() -> EvenFunction {
        EvenFunction::rho(f(2), 1).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let rho = rho21();
        assert_eq!(rho.evaluate(3), rat(1));
        assert_eq!(rho.evaluate(4), rat(0));
        let c22 = EvenFunction::ramanujan(f(2), 2).unwrap();
        assert_eq!(c22.evaluate(4), rat(3));
        assert_eq!(c22.evaluate(1), rat(-1));
        assert_eq!(c22.evaluate(0), rat(3));
    }

    #[test]
    fn from_map_validates_divisor_set() {
        let mut map = BTreeMap::new();
        map.insert(1u64, rat(1));
        map.insert(3u64, rat(0));
        assert!(matches!(EvenFunction::from_map(f(2), 1, &map), Err(Error::Domain(_))));
        let mut ok = BTreeMap::new();
        ok.insert(1u64, rat(1));
        ok.insert(2u64, rat(0));
        assert_eq!(EvenFunction::from_map(f(2), 1, &ok).unwrap(), rho21());
    }

    #[test]
    fn dft_of_rho_is_ramanujan() {
        for (rv, s) in [(6u64, 1u32), (12, 1), (4, 2), (2, 2)] {
            let rho = EvenFunction::rho(f(rv), s).unwrap();
            let spectrum = rho.dft().unwrap();
            let c = EvenFunction::ramanujan(f(rv), s).unwrap();
            assert_eq!(spectrum.as_even(), &c, "r={rv} s={s}");
        }
    }

    #[test]
    fn dft_maps_basis_to_ramanujan_column() {
        // dft(g_d)(n) = c_{r/d,s}(n): the basis indicators transform to
        // single Ramanujan sums.
        for (rv, s) in [(12u64, 1u32), (6, 2)] {
            let r = f(rv);
            for d in r.divisors() {
                let g = EvenFunction::basis(r.clone(), s, d.value()).unwrap();
                let spectrum = g.dft().unwrap();
                let complement = r.cofactor(&d);
                for e in r.divisors() {
                    let arg = e.value().pow(s);
                    assert_eq!(
                        spectrum.evaluate(arg),
                        rational_big(crs(&complement, s, arg).unwrap()),
                        "g_{} at {arg}, r={rv} s={s}",
                        d.value()
                    );
                }
            }
        }
    }

    #[test]
    fn dft_of_ramanujan_is_scaled_rho() {
        // the other half of the duality: c^ = r^s rho
        for (rv, s) in [(6u64, 1u32), (4, 2), (9, 1)] {
            let c = EvenFunction::ramanujan(f(rv), s).unwrap();
            let spectrum = c.dft().unwrap();
            let scale = rat(rv.pow(s) as i64);
            let rho = EvenFunction::rho(f(rv), s).unwrap();
            let scaled: Vec<Rational> = rho.values().iter().map(|v| v * &scale).collect();
            assert_eq!(spectrum.values(), &scaled[..], "r={rv} s={s}");
        }
    }

    #[test]
    fn dft_of_zero_and_constant() {
        let zero = EvenFunction::zero(f(12), 1).unwrap();
        assert_eq!(zero.dft().unwrap().as_even(), &zero);

        // dft(1)(n) = sum_{d|r} c_{d,s}(n) = r^s [r^s | n]: nonzero only at
        // the top divisor class.
        let one = EvenFunction::constant(f(4), 1, rat(1)).unwrap();
        let spectrum = one.dft().unwrap();
        assert_eq!(spectrum.values(), &[rat(0), rat(0), rat(4)]);
    }

    #[test]
    fn idft_round_trips() {
        let rho = EvenFunction::rho(f(6), 1).unwrap();
        assert_eq!(rho.dft().unwrap().idft().unwrap(), rho);

        let c = Spectrum::from_even(EvenFunction::ramanujan(f(6), 1).unwrap());
        assert_eq!(c.idft().unwrap(), rho);

        let zero = EvenFunction::zero(f(6), 1).unwrap();
        assert_eq!(Spectrum::from_even(zero.clone()).idft().unwrap(), zero);
    }

    #[test]
    fn involution_square_is_scaling() {
        for (rv, s) in [(1u64, 1u32), (6, 1), (12, 2), (7, 3)] {
            let c = EvenFunction::ramanujan(f(rv), s).unwrap();
            let twice = c.dft().unwrap().as_even().dft().unwrap();
            let scale = rat(rv.pow(s) as i64);
            let scaled: Vec<Rational> = c.values().iter().map(|v| v * &scale).collect();
            assert_eq!(twice.values(), &scaled[..], "r={rv} s={s}");
        }
    }

    #[test]
    fn alpha_examples() {
        let alpha = rho21().dft().unwrap().alpha().unwrap();
        assert_eq!(alpha.values(), &[Rational::new(1.into(), 2.into()), Rational::new((-1).into(), 2.into())]);

        let zero = EvenFunction::zero(f(10), 1).unwrap();
        assert!(zero.dft().unwrap().alpha().unwrap().values().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn alpha_bruteforce_matches_spectral_route() {
        let alpha = alpha_bruteforce(&rho21()).unwrap();
        assert_eq!(alpha.values(), &[Rational::new(1.into(), 2.into()), Rational::new((-1).into(), 2.into())]);

        // constant 1: f = c_{1,s}, so alpha = [d = 1].
        for rv in 1..=10u64 {
            let one = EvenFunction::constant(f(rv), 1, rat(1)).unwrap();
            let brute = alpha_bruteforce(&one).unwrap();
            let spectral = one.dft().unwrap().alpha().unwrap();
            assert_eq!(brute, spectral, "r={rv}");
            assert_eq!(brute.values()[0], rat(1));
            assert!(brute.values()[1..].iter().all(|v| v.is_zero()));
            for n in 1..=rv {
                assert_eq!(brute.reconstruct(n).unwrap(), rat(1));
            }
        }

        let zero = EvenFunction::zero(f(9), 2).unwrap();
        assert!(alpha_bruteforce(&zero).unwrap().values().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn reconstruct_examples() {
        let alpha = rho21().dft().unwrap().alpha().unwrap();
        assert_eq!(alpha.reconstruct(1).unwrap(), rat(1));
        assert_eq!(alpha.reconstruct(2).unwrap(), rat(0));

        let zeros = AlphaCoefficients::new(f(6), 1, vec![rat(0); 4]).unwrap();
        for n in 0..=7 {
            assert_eq!(zeros.reconstruct(n).unwrap(), rat(0));
        }
    }

    #[test]
    fn basis_reconstruction_round_trip() {
        for (rv, s) in [(12u64, 1u32), (6, 2), (8, 1)] {
            for d in f(rv).divisors() {
                let g = EvenFunction::basis(f(rv), s, d.value()).unwrap();
                let alpha = g.dft().unwrap().alpha().unwrap();
                for n in 1..=rv.pow(s) {
                    assert_eq!(alpha.reconstruct(n).unwrap(), g.evaluate(n), "g_{} at {n}", d.value());
                }
            }
        }
    }

    #[test]
    fn cauchy_examples() {
        let rho = rho21();
        let conv = rho.cauchy_convolve(&rho).unwrap();
        assert_eq!(conv.evaluate(2), rat(1));
        assert_eq!(conv.evaluate(1), rat(0));

        let zero = EvenFunction::zero(f(2), 1).unwrap();
        assert_eq!(rho.cauchy_convolve(&zero).unwrap(), zero);

        let other = EvenFunction::rho(f(3), 1).unwrap();
        assert!(matches!(rho.cauchy_convolve(&other), Err(Error::Domain(_))));
    }

    #[test]
    fn cauchy_spectral_matches_direct() {
        for (rv, s) in [(6u64, 1u32), (8, 1), (4, 2), (9, 1)] {
            let a = EvenFunction::ramanujan(f(rv), s).unwrap();
            let b = EvenFunction::rho(f(rv), s).unwrap();
            assert_eq!(
                a.cauchy_convolve(&b).unwrap(),
                a.cauchy_convolve_direct(&b).unwrap(),
                "r={rv} s={s}"
            );
        }
    }

    #[test]
    fn cauchy_alpha_identity() {
        // alpha_{f (*) g}(d) = r^s alpha_f(d) alpha_g(d)
        for (rv, s) in [(6u64, 1u32), (4, 2)] {
            let a = EvenFunction::ramanujan(f(rv), s).unwrap();
            let b = EvenFunction::rho(f(rv), s).unwrap();
            let conv = a.cauchy_convolve(&b).unwrap();
            let aa = a.dft().unwrap().alpha().unwrap();
            let ab = b.dft().unwrap().alpha().unwrap();
            let ac = conv.dft().unwrap().alpha().unwrap();
            let scale = rat(rv.pow(s) as i64);
            for ((x, y), z) in aa.values().iter().zip(ab.values()).zip(ac.values()) {
                assert_eq!(z, &(x * y * &scale));
            }
        }
    }

    #[test]
    fn invert_examples() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(1u64, Rational::new(1.into(), 2.into()));
        coeffs.insert(2u64, Rational::new((-1).into(), 2.into()));
        // these coefficients build f = rho_{2,1}
        assert_eq!(invert(&f(2), 1, &coeffs, 1).unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(invert(&f(2), 1, &coeffs, 2).unwrap(), Rational::new(1.into(), 2.into()));

        let zeros: BTreeMap<u64, Rational> =
            f(6).divisors().iter().map(|d| (d.value(), rat(0))).collect();
        for n in 1..=6 {
            assert_eq!(invert(&f(6), 1, &zeros, n).unwrap(), rat(0));
        }
    }

    #[test]
    fn invert_round_trip() {
        for (rv, s) in [(6u64, 1u32), (4, 2), (12, 1)] {
            let r = f(rv);
            let divisors = r.divisors();
            let coeffs: BTreeMap<u64, Rational> = divisors
                .iter()
                .enumerate()
                .map(|(i, d)| (d.value(), Rational::new(BigInt::from(2 * i as i64 - 3), BigInt::from(5))))
                .collect();
            let modulus = rv.pow(s);
            for n in 1..=modulus {
                let g = generalized_gcd(n, modulus, s).unwrap();
                let m = modulus / g;
                let m_root = exact_sth_root(m, s).unwrap();
                let got = invert(&r, s, &coeffs, n).unwrap();
                assert_eq!(got, coeffs[&m_root], "r={rv} s={s} n={n}");
            }
        }
    }

    #[test]
    fn parseval_examples() {
        assert!(parseval_check(&rho21()).unwrap());
        assert!(parseval_check(&EvenFunction::zero(f(5), 1).unwrap()).unwrap());
        assert!(parseval_check(&EvenFunction::rho(f(6), 1).unwrap()).unwrap());
        assert!(parseval_check(&EvenFunction::ramanujan(f(4), 2).unwrap()).unwrap());
    }

    #[test]
    fn ramanujan_square_sum() {
        // sum_n c_{r,s}(n)^2 over a period is r^s J_s(r); e.g. r=6, s=1
        // gives 6 * 2 = 12, and r=2, s=2 gives 4 * 3 = 12.
        for (rv, s) in [(6u64, 1u32), (2, 2), (12, 1), (10, 2)] {
            assert!(ramanujan_square_sum_check(&f(rv), s).unwrap(), "r={rv} s={s}");
        }
    }

    #[test]
    fn orthogonality_examples() {
        assert!(orthogonality_check(&f(2), 1, 1).unwrap());
        assert!(orthogonality_check(&f(2), 1, 2).unwrap());
        assert!(orthogonality_check(&f(1), 3, 7).unwrap());
    }

    #[test]
    fn alternating_examples() {
        assert!(alternating_sum_check(&f(2), 1, 1).unwrap());
        assert!(alternating_sum_check(&f(2), 1, 2).unwrap());
        assert!(alternating_sum_check(&f(4), 1, 2).unwrap());
        assert!(matches!(alternating_sum_check(&f(3), 1, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn alternating_sum_fails_beyond_s_one() {
        // The n = r^s/2 indicator is not (r,s)-even for s >= 2: its class
        // representative (r^s/2, r^s)_s differs from r^s/2. r = 2, s = 2 is
        // the smallest witness.
        assert!(!alternating_sum_check(&f(2), 2, 2).unwrap());
    }

    #[test]
    fn corrupted_plan_breaks_involution() {
        let r = f(6);
        let plan = CrsPlan::build_corrupted(&r, 1).unwrap();
        let rho = EvenFunction::rho(r, 1).unwrap();
        let twice = rho
            .dft_with_plan(&plan)
            .unwrap()
            .as_even()
            .dft_with_plan(&plan)
            .unwrap();
        let scaled: Vec<Rational> = rho.values().iter().map(|v| v * rat(6)).collect();
        assert_ne!(twice.values(), &scaled[..]);
    }

    #[test]
    fn degenerate_r_one() {
        let one = EvenFunction::constant(f(1), 2, rat(5)).unwrap();
        let spec = one.dft().unwrap();
        assert_eq!(spec.values(), &[rat(5)]);
        assert_eq!(spec.idft().unwrap(), one);
        assert!(parseval_check(&one).unwrap());
        assert!(orthogonality_check(&f(1), 2, 3).unwrap());
        assert_eq!(one.evaluate(0), rat(5));
    }
}
