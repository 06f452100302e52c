//! The `verify` subcommand: exhaustive and randomized sweeps over every
//! identity the library implements, with per-suite pass/fail counts and the
//! first counterexample when something breaks.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use rs_even::{
    alternating_sum_check, count_bruteforce_table, count_spectral, crs, crs_divisor_sum_holds,
    exact_sth_root, generalized_gcd, invert, orthogonality_check, parseval_check,
    ramanujan_square_sum_check, CompletelyEvenSequence, CongruenceQuery, CrsPlan, Error,
    EvenFunction, Factored, Rational, StronglyMultiplicativeFn,
};

use crate::Cli;

const FULL_PERIOD_LIMIT: u64 = 100_000;
const DIRECT_CONVOLUTION_LIMIT: u64 = 2_000;
const INVERSION_LIMIT: u64 = 10_000;
const HOLDER_LIMIT: u64 = 10_000;

pub const SUITES: &[&str] = &[
    "involution",
    "parseval",
    "orthogonality",
    "divisor-sum",
    "alternating",
    "convolution",
    "inversion",
    "multiplicativity",
    "holder",
    "congruence",
];

#[derive(Serialize)]
pub struct SuiteReport {
    suite: String,
    checks_passed: u64,
    checks_failed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_counterexample: Option<String>,
}

#[derive(Serialize)]
pub struct RunReport {
    command: String,
    parameters: BTreeMap<String, String>,
    results: Vec<SuiteReport>,
    checks_passed: u64,
    checks_failed: u64,
    elapsed_ms: u128,
}

struct Checker {
    passed: u64,
    failed: u64,
    first: Option<String>,
}

impl Checker {
    fn new() -> Self {
        Checker { passed: 0, failed: 0, first: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    fn report(self, suite: &str) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            checks_passed: self.passed,
            checks_failed: self.failed,
            first_counterexample: self.first,
        }
    }
}

struct Sweep {
    r_max: u64,
    s_max: u32,
    seed: u64,
    corrupt_dft: bool,
}

impl Sweep {
    fn rng(&self, salt: u64) -> StdRng {
        StdRng::seed_from_u64(self.seed.wrapping_add(salt.wrapping_mul(0x9e37_79b9)))
    }

    fn pairs(&self) -> impl Iterator<Item = (Factored, u32)> + '_ {
        (1..=self.s_max).flat_map(move |s| {
            (1..=self.r_max)
                .filter_map(move |r| r.checked_pow(s).map(|_| (Factored::new(r).unwrap(), s)))
        })
    }
}

fn random_rational(rng: &mut StdRng) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=6)))
}

fn random_even(rng: &mut StdRng, r: &Factored, s: u32) -> EvenFunction {
    let values = (0..r.tau()).map(|_| random_rational(rng)).collect();
    EvenFunction::new(r.clone(), s, values).expect("value count matches tau(r)")
}

/// Random strongly multiplicative F with prime values in [-3, 5], avoiding
/// the forbidden value 1 - p^s on every prime up to 31.
fn random_strongly_multiplicative(rng: &mut StdRng, s: u32) -> StronglyMultiplicativeFn {
    let mut primes = BTreeMap::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        let forbidden = 1i64 - (p as i64).pow(s);
        let mut value = rng.gen_range(-3i64..=5);
        while value == forbidden {
            value = rng.gen_range(-3i64..=5);
        }
        primes.insert(p, Rational::from_integer(BigInt::from(value)));
    }
    StronglyMultiplicativeFn::new(Rational::from_integer(BigInt::from(1)), primes)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn suite_involution(sw: &Sweep) -> Result<SuiteReport, Error> {
    let mut rng = sw.rng(1);
    let mut c = Checker::new();
    for (r, s) in sw.pairs() {
        let plan = if sw.corrupt_dft {
            CrsPlan::build_corrupted(&r, s)?
        } else {
            CrsPlan::build(&r, s)?
        };
        let scale = Rational::from_integer(BigInt::from(plan.modulus()));
        for _ in 0..3 {
            let f = random_even(&mut rng, &r, s);
            let twice = f.dft_with_plan(&plan)?.as_even().dft_with_plan(&plan)?;
            let bad = f
                .divisor_values()
                .iter()
                .zip(twice.values().iter().zip(f.values()))
                .find(|(_, (got, want))| **got != *want * &scale);
            c.check(bad.is_none(), || {
                let (d, (got, want)) = bad.unwrap();
                format!(
                    "involution at r={} s={s} divisor={d}: got {got}, want {}",
                    r.value(),
                    want * &scale
                )
            });
        }
    }
    Ok(c.report("involution"))
}

fn suite_parseval(sw: &Sweep) -> Result<SuiteReport, Error> {
    let mut rng = sw.rng(2);
    let mut c = Checker::new();
    for (r, s) in sw.pairs() {
        if r.pow_checked(s)? > FULL_PERIOD_LIMIT {
            continue;
        }
        for _ in 0..2 {
            let f = random_even(&mut rng, &r, s);
            c.check(parseval_check(&f)?, || {
                format!("parseval at r={} s={s} values={:?}", r.value(), f.values())
            });
        }
        c.check(ramanujan_square_sum_check(&r, s)?, || {
            format!("square sum of c_{{{},{s}}} over one period", r.value())
        });
    }
    Ok(c.report("parseval"))
}

fn suite_orthogonality(sw: &Sweep) -> Result<SuiteReport, Error> {
    let mut c = Checker::new();
    for (r, s) in sw.pairs() {
        let modulus = r.pow_checked(s)?;
        if modulus > FULL_PERIOD_LIMIT {
            continue;
        }
        for n in 1..=modulus {
            c.check(orthogonality_check(&r, s, n)?, || {
                format!("orthogonality at r={} s={s} n={n}", r.value())
            });
        }
    }
    Ok(c.report("orthogonality"))
}

fn suite_divisor_sum(sw: &Sweep) -> Result<SuiteReport, Error> {
    let mut c = Checker::new();
    for (r, s) in sw.pairs() {
        let modulus = r.pow_checked(s)?;
        if modulus > FULL_PERIOD_LIMIT {
            continue;
        }
        for n in 1..=modulus {
            c.check(crs_divisor_sum_holds(&r, s, n)?, || {
                format!("divisor sum at r={} s={s} n={n}", r.value())
            });
        }
    }
    Ok(c.report("divisor-sum"))
}

/// The alternating identity is an s = 1 statement: for s >= 2 the indicator
/// of n = r^s/2 (mod r^s) is not (r,s)-even, so it has no divisor-sum
/// expansion and the identity genuinely fails. The sweep therefore pins
/// s = 1 whatever --s-max says.
fn suite_alternating(sw: &Sweep) -> Result<SuiteReport, Error> {
    let mut c = Checker::new();
    for r in (2..=sw.r_max).step_by(2) {
        let rf = Factored::new(r)?;
        for n in 1..=r {
            c.check(alternating_sum_check(&rf, 1, n)?, || {
                format!("alternating sum at r={r} s=1 n={n}")
            });
        }
    }
    Ok(c.report("alternating"))
}

fn suite_convolution(sw: &Sweep) -> Result<SuiteReport, Error> {
    let mut rng = sw.rng(3);
    let mut c = Checker::new();
    for (r, s) in sw.pairs() {
        let modulus = r.pow_checked(s)?;
        let scale = Rational::from_integer(BigInt::from(modulus));
        for _ in 0..2 {
            let f = random_even(&mut rng, &r, s);
            let g = random_even(&mut rng, &r, s);
            let spectral = f.cauchy_convolve(&g)?;
            if modulus <= DIRECT_CONVOLUTION_LIMIT {
                let direct = f.cauchy_convolve_direct(&g)?;
                c.check(spectral == direct, || {
                    format!("convolution routes at r={} s={s}", r.value())
                });
            }
            // spectral product and coefficient identities
            let fs = f.dft()?;
            let gs = g.dft()?;
            let cs = spectral.dft()?;
            let product_ok = fs
                .values()
                .iter()
                .zip(gs.values())
                .zip(cs.values())
                .all(|((a, b), c)| c == &(a * b));
            c.check(product_ok, || {
                format!("spectrum of convolution at r={} s={s}", r.value())
            });
            let alpha_ok = fs
                .alpha()?
                .values()
                .iter()
                .zip(gs.alpha()?.values())
                .zip(cs.alpha()?.values())
                .all(|((a, b), c)| c == &(a * b * &scale));
            c.check(alpha_ok, || {
                format!("alpha of convolution at r={} s={s}", r.value())
            });
        }
    }
    Ok(c.report("convolution"))
}

fn suite_inversion(sw: &Sweep) -> Result<SuiteReport, Error> {
    let mut rng = sw.rng(4);
    let mut c = Checker::new();
    for (r, s) in sw.pairs() {
        let modulus = r.pow_checked(s)?;
        if modulus > INVERSION_LIMIT {
            continue;
        }
        let coefficients: BTreeMap<u64, Rational> = r
            .divisors()
            .iter()
            .map(|d| (d.value(), random_rational(&mut rng)))
            .collect();
        for n in 1..=modulus {
            let class = generalized_gcd(n, modulus, s)?;
            let m_root = exact_sth_root(modulus / class, s)
                .expect("r^s over an s-th power divisor is an s-th power");
            let got = invert(&r, s, &coefficients, n)?;
            c.check(got == coefficients[&m_root], || {
                format!("inversion at r={} s={s} n={n}", r.value())
            });
        }
    }
    Ok(c.report("inversion"))
}

fn suite_multiplicativity(sw: &Sweep) -> Result<SuiteReport, Error> {
    let mut rng = sw.rng(5);
    let mut c = Checker::new();
    for s in 1..=sw.s_max {
        let func = random_strongly_multiplicative(&mut rng, s);
        let seq = CompletelyEvenSequence::new(func, s)?;
        for q in 1..=sw.r_max {
            for r in (q + 1)..=sw.r_max {
                if gcd(q, r) != 1 || (q * r).checked_pow(s).is_none() {
                    continue;
                }
                let (qf, rf, qrf) = (Factored::new(q)?, Factored::new(r)?, Factored::new(q * r)?);
                let f_q = seq.realize(&qf)?;
                let f_r = seq.realize(&rf)?;
                let f_qr = seq.realize(&qrf)?;
                // f_{qr}(mn) = f_q(m) f_r(n) under the four coprimality hypotheses
                for _ in 0..6 {
                    let m = rng.gen_range(1u64..=30);
                    let n = rng.gen_range(1u64..=30);
                    if gcd(m, n) != 1 || gcd(m, r) != 1 || gcd(n, q) != 1 {
                        continue;
                    }
                    c.check(f_qr.evaluate(m * n) == f_q.evaluate(m) * f_r.evaluate(n), || {
                        format!("two-variable multiplicativity at q={q} r={r} m={m} n={n} s={s}")
                    });
                }
                // spectra multiply at every argument when (q, r) = 1
                let s_q = f_q.dft()?;
                let s_r = f_r.dft()?;
                let s_qr = f_qr.dft()?;
                let limit = (q * r).pow(s).min(40);
                for n in 1..=limit {
                    c.check(s_qr.evaluate(n) == s_q.evaluate(n) * s_r.evaluate(n), || {
                        format!("spectrum multiplicativity at q={q} r={r} n={n} s={s}")
                    });
                }
            }
        }
        // quasi-multiplicativity of the spectrum in its argument
        for r in 1..=sw.r_max {
            let rf = Factored::new(r)?;
            let spectrum = seq.realize(&rf)?.dft()?;
            let at_one = spectrum.evaluate(1);
            for _ in 0..10 {
                let m = rng.gen_range(1u64..=24);
                let n = rng.gen_range(1u64..=24);
                if gcd(m, n) != 1 {
                    continue;
                }
                c.check(
                    spectrum.evaluate(m) * spectrum.evaluate(n)
                        == &at_one * spectrum.evaluate(m * n),
                    || format!("quasi-multiplicativity at r={r} m={m} n={n} s={s}"),
                );
            }
        }
    }
    Ok(c.report("multiplicativity"))
}

fn suite_holder(sw: &Sweep) -> Result<SuiteReport, Error> {
    let mut rng = sw.rng(6);
    let mut c = Checker::new();
    for (r, s) in sw.pairs() {
        let modulus = r.pow_checked(s)?;
        if modulus > HOLDER_LIMIT {
            continue;
        }
        let seq = CompletelyEvenSequence::new(random_strongly_multiplicative(&mut rng, s), s)?;
        let spectrum = seq.realize(&r)?.dft()?;
        for n in 1..=modulus {
            c.check(seq.holder_dft(&r, n)? == spectrum.evaluate(n), || {
                format!("holder closed form at r={} s={s} n={n}", r.value())
            });
        }
        // F = epsilon reduces the closed form to c_{r,s}
        let eps = CompletelyEvenSequence::new(StronglyMultiplicativeFn::epsilon(), s)?;
        for n in 1..=modulus {
            let want = Rational::from_integer(crs(&r, s, n)?);
            c.check(eps.holder_dft(&r, n)? == want, || {
                format!("epsilon case at r={} s={s} n={n}", r.value())
            });
        }
    }
    Ok(c.report("holder"))
}

fn suite_congruence(sw: &Sweep) -> Result<SuiteReport, Error> {
    let mut c = Checker::new();
    for (r, s) in sw.pairs() {
        let modulus = r.pow_checked(s)?;
        for k in 1..=4u32 {
            let query = CongruenceQuery::new(r.clone(), s, k, 0)?;
            let table = match count_bruteforce_table(&query) {
                Ok(table) => table,
                Err(Error::Capacity(_)) => continue,
                Err(e) => return Err(e),
            };
            for n in 1..=modulus {
                let q = CongruenceQuery::new(r.clone(), s, k, n)?;
                let spectral = count_spectral(&q)?;
                c.check(spectral == table[(n % modulus) as usize], || {
                    format!("congruence count at r={} s={s} k={k} n={n}", r.value())
                });
            }
        }
    }
    Ok(c.report("congruence"))
}

fn run_suite(name: &str, sw: &Sweep) -> Result<SuiteReport, Error> {
    match name {
        "involution" => suite_involution(sw),
        "parseval" => suite_parseval(sw),
        "orthogonality" => suite_orthogonality(sw),
        "divisor-sum" => suite_divisor_sum(sw),
        "alternating" => suite_alternating(sw),
        "convolution" => suite_convolution(sw),
        "inversion" => suite_inversion(sw),
        "multiplicativity" => suite_multiplicativity(sw),
        "holder" => suite_holder(sw),
        "congruence" => suite_congruence(sw),
        other => Err(Error::Domain(format!(
            "unknown suite {other:?}; expected one of {}, or all",
            SUITES.join(", ")
        ))),
    }
}

pub fn cmd_verify(
    cli: &Cli,
    suite: &str,
    r_max: u64,
    s_max: u32,
    corrupt_dft: bool,
) -> Result<ExitCode, Error> {
    if r_max == 0 || s_max == 0 {
        return Err(Error::Domain("--r-max and --s-max must be positive".into()));
    }
    let sweep = Sweep { r_max, s_max, seed: cli.seed, corrupt_dft };
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        vec![suite]
    };
    // fail fast on unknown names before doing any work
    for name in &names {
        if !SUITES.contains(name) {
            return Err(Error::Domain(format!(
                "unknown suite {name:?}; expected one of {}, or all",
                SUITES.join(", ")
            )));
        }
    }

    let started = Instant::now();
    let mut results = Vec::new();
    for name in names {
        results.push(run_suite(name, &sweep)?);
    }
    let elapsed_ms = started.elapsed().as_millis();
    let checks_passed: u64 = results.iter().map(|r| r.checks_passed).sum();
    let checks_failed: u64 = results.iter().map(|r| r.checks_failed).sum();

    let mut parameters = BTreeMap::new();
    parameters.insert("suite".to_string(), suite.to_string());
    parameters.insert("r_max".to_string(), r_max.to_string());
    parameters.insert("s_max".to_string(), s_max.to_string());
    parameters.insert("seed".to_string(), cli.seed.to_string());
    if corrupt_dft {
        parameters.insert("corrupt_dft".to_string(), "true".to_string());
    }
    let report = RunReport {
        command: "verify".to_string(),
        parameters,
        results,
        checks_passed,
        checks_failed,
        elapsed_ms,
    };

    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("{:<18} {:>8} {:>8}", "suite", "passed", "failed");
        for r in &report.results {
            println!("{:<18} {:>8} {:>8}", r.suite, r.checks_passed, r.checks_failed);
        }
        println!("{:<18} {:>8} {:>8}   ({} ms)", "total", checks_passed, checks_failed, elapsed_ms);
        for r in &report.results {
            if let Some(example) = &r.first_counterexample {
                println!("counterexample [{}]: {}", r.suite, example);
            }
        }
    }

    Ok(if checks_failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
