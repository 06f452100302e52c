//! Python bindings: the main types and operations of the (r,s)-even
//! function algebra. Integers cross the boundary as arbitrary-precision
//! Python ints; exact rationals cross as (numerator, denominator) tuples.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use rs_even::{
    count_bruteforce, count_spectral, crs as crs_divisor, crs_exponential_oracle, crs_holder,
    parse_rational, CompletelyEvenSequence, CongruenceQuery, Error, Factored, FlatRecord,
    Rational, Spectrum, StronglyMultiplicativeFn,
};

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::Internal(_) | Error::OracleInconsistency(_) => {
            PyRuntimeError::new_err(err.to_string())
        }
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn factored(n: u64) -> PyResult<Factored> {
    Factored::new(n).map_err(to_py_err)
}

fn ratio_pair(v: &Rational) -> (BigInt, BigInt) {
    (v.numer().clone(), v.denom().clone())
}

#[pyfunction]
fn factor(n: u64) -> PyResult<Vec<(u64, u32)>> {
    Ok(factored(n)?.prime_factors().to_vec())
}

#[pyfunction]
fn divisors(n: u64) -> PyResult<Vec<u64>> {
    Ok(factored(n)?.divisors().iter().map(|d| d.value()).collect())
}

#[pyfunction]
fn mobius(n: u64) -> PyResult<i32> {
    Ok(rs_even::mobius(&factored(n)?))
}

#[pyfunction]
fn jordan_totient(n: u64, s: u32) -> PyResult<BigInt> {
    if s == 0 {
        return Err(PyValueError::new_err("s must be >= 1"));
    }
    Ok(rs_even::jordan_totient(&factored(n)?, s))
}

#[pyfunction]
fn generalized_gcd(a: u64, b: u64, s: u32) -> PyResult<u64> {
    rs_even::generalized_gcd(a, b, s).map_err(to_py_err)
}

fn crs_by(method: &str, r: &Factored, s: u32, n: u64) -> PyResult<BigInt> {
    match method {
        "divisor" => crs_divisor(r, s, n).map_err(to_py_err),
        "holder" => crs_holder(r, s, n).map_err(to_py_err),
        "oracle" => crs_exponential_oracle(r, s, n).map_err(to_py_err),
        other => Err(PyValueError::new_err(format!(
            "unknown method {other:?}; expected divisor, holder, or oracle"
        ))),
    }
}

/// The generalized Ramanujan sum c_{r,s}(n).
#[pyfunction]
#[pyo3(signature = (r, s, n, method = "divisor"))]
fn crs(r: u64, s: u32, n: u64, method: &str) -> PyResult<BigInt> {
    if s == 0 {
        return Err(PyValueError::new_err("s must be >= 1"));
    }
    crs_by(method, &factored(r)?, s, n)
}

/// c_{r,s}(n) for n = 1..r^s.
#[pyfunction]
#[pyo3(signature = (r, s, method = "divisor"))]
fn crs_table(r: u64, s: u32, method: &str) -> PyResult<Vec<BigInt>> {
    if s == 0 {
        return Err(PyValueError::new_err("s must be >= 1"));
    }
    let rf = factored(r)?;
    let modulus = rf.pow_checked(s).map_err(to_py_err)?;
    if modulus > 1_000_000 {
        return Err(PyValueError::new_err("table limited to r^s <= 10^6"));
    }
    (1..=modulus).map(|n| crs_by(method, &rf, s, n)).collect()
}

/// Number of solutions of x_1+...+x_k = n (mod r^s) with (x_i, r^s)_s = 1.
#[pyfunction]
#[pyo3(signature = (r, s, k, n, brute_force = false))]
fn count_congruence(r: u64, s: u32, k: u32, n: u64, brute_force: bool) -> PyResult<BigInt> {
    let query = CongruenceQuery::new(factored(r)?, s, k, n).map_err(to_py_err)?;
    if brute_force {
        count_bruteforce(&query).map_err(to_py_err)
    } else {
        count_spectral(&query).map_err(to_py_err)
    }
}

fn sequence_from(
    default: &str,
    primes: Option<BTreeMap<u64, String>>,
    s: u32,
) -> PyResult<CompletelyEvenSequence> {
    let default = parse_rational(default).map_err(to_py_err)?;
    let mut prime_map = BTreeMap::new();
    for (p, text) in primes.unwrap_or_default() {
        prime_map.insert(p, parse_rational(&text).map_err(to_py_err)?);
    }
    CompletelyEvenSequence::new(StronglyMultiplicativeFn::new(default, prime_map), s)
        .map_err(to_py_err)
}

/// Spectrum value of the completely even sequence f_r(n) = F((n, r^s)_s)
/// by the Holder closed form, as a (numerator, denominator) pair. F is
/// strongly multiplicative with the given prime values ("p/q" strings).
#[pyfunction]
#[pyo3(signature = (r, s, n, default = "1", primes = None))]
fn holder_dft(
    r: u64,
    s: u32,
    n: u64,
    default: &str,
    primes: Option<BTreeMap<u64, String>>,
) -> PyResult<(BigInt, BigInt)> {
    let seq = sequence_from(default, primes, s)?;
    let value = seq.holder_dft(&factored(r)?, n).map_err(to_py_err)?;
    Ok(ratio_pair(&value))
}

/// An element of B_{r,s}: exact rational values on the divisors of r.
#[pyclass(name = "EvenFunction")]
#[derive(Clone)]
struct PyEvenFunction {
    inner: rs_even::EvenFunction,
}

#[pymethods]
impl PyEvenFunction {
    /// rho_{r,s}, the indicator of (n, r^s)_s = 1.
    #[staticmethod]
    fn rho(r: u64, s: u32) -> PyResult<Self> {
        Ok(PyEvenFunction {
            inner: rs_even::EvenFunction::rho(factored(r)?, s).map_err(to_py_err)?,
        })
    }

    /// c_{r,s} tabulated as an even function.
    #[staticmethod]
    fn ramanujan(r: u64, s: u32) -> PyResult<Self> {
        Ok(PyEvenFunction {
            inner: rs_even::EvenFunction::ramanujan(factored(r)?, s).map_err(to_py_err)?,
        })
    }

    /// Build from {divisor: "p/q"} covering exactly the divisors of r.
    #[staticmethod]
    fn from_values(r: u64, s: u32, values: BTreeMap<u64, String>) -> PyResult<Self> {
        let mut map = BTreeMap::new();
        for (d, text) in values {
            map.insert(d, parse_rational(&text).map_err(to_py_err)?);
        }
        Ok(PyEvenFunction {
            inner: rs_even::EvenFunction::from_map(factored(r)?, s, &map).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let record = FlatRecord::from_json(text).map_err(to_py_err)?;
        Ok(PyEvenFunction { inner: record.to_even().map_err(to_py_err)? })
    }

    #[getter]
    fn r(&self) -> u64 {
        self.inner.r().value()
    }

    #[getter]
    fn s(&self) -> u32 {
        self.inner.s()
    }

    #[getter]
    fn modulus(&self) -> u64 {
        self.inner.modulus()
    }

    /// {divisor: (numerator, denominator)} for the stored values f(d^s).
    fn values(&self) -> BTreeMap<u64, (BigInt, BigInt)> {
        self.inner
            .divisor_values()
            .iter()
            .zip(self.inner.values())
            .map(|(&d, v)| (d, ratio_pair(v)))
            .collect()
    }

    /// f(n) as a (numerator, denominator) pair.
    fn evaluate(&self, n: u64) -> (BigInt, BigInt) {
        ratio_pair(&self.inner.evaluate(n))
    }

    /// The DFT, itself an (r,s)-even function on the same divisor grid.
    fn dft(&self) -> PyResult<Self> {
        Ok(PyEvenFunction { inner: self.inner.dft().map_err(to_py_err)?.into_even() })
    }

    /// The inverse transform, treating this function as a spectrum.
    fn idft(&self) -> PyResult<Self> {
        Ok(PyEvenFunction {
            inner: Spectrum::from_even(self.inner.clone()).idft().map_err(to_py_err)?,
        })
    }

    /// Expansion coefficients {divisor: (numerator, denominator)} with
    /// f = sum over d | r of alpha(d) c_{d,s}.
    fn alpha(&self) -> PyResult<BTreeMap<u64, (BigInt, BigInt)>> {
        let alpha = self.inner.dft().map_err(to_py_err)?.alpha().map_err(to_py_err)?;
        Ok(self
            .inner
            .divisor_values()
            .iter()
            .zip(alpha.values())
            .map(|(&d, v)| (d, ratio_pair(v)))
            .collect())
    }

    /// Cauchy convolution with another function over the same (r, s).
    fn cauchy(&self, other: &PyEvenFunction) -> PyResult<Self> {
        Ok(PyEvenFunction {
            inner: self.inner.cauchy_convolve(&other.inner).map_err(to_py_err)?,
        })
    }

    /// Exact Parseval identity check over one period.
    fn parseval(&self) -> PyResult<bool> {
        rs_even::parseval_check(&self.inner).map_err(to_py_err)
    }

    fn to_json(&self) -> String {
        FlatRecord::from_even(&self.inner).to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "EvenFunction(r={}, s={}, tau={})",
            self.r(),
            self.s(),
            self.inner.values().len()
        )
    }

    fn __eq__(&self, other: &PyEvenFunction) -> bool {
        self.inner == other.inner
    }
}

#[pymodule]
fn rs_even_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(divisors, m)?)?;
    m.add_function(wrap_pyfunction!(mobius, m)?)?;
    m.add_function(wrap_pyfunction!(jordan_totient, m)?)?;
    m.add_function(wrap_pyfunction!(generalized_gcd, m)?)?;
    m.add_function(wrap_pyfunction!(crs, m)?)?;
    m.add_function(wrap_pyfunction!(crs_table, m)?)?;
    m.add_function(wrap_pyfunction!(count_congruence, m)?)?;
    m.add_function(wrap_pyfunction!(holder_dft, m)?)?;
    m.add_class::<PyEvenFunction>()?;
    Ok(())
}
