//! Command-line surface for the (r,s)-even function algebra: Ramanujan sum
//! tables, transforms of stored functions, restricted congruence counts,
//! Holder evaluations, and the identity verification suites.
//!
//! Exit codes: 0 success, 1 verification failure (or an internal
//! inconsistency), 2 usage or domain error, 3 capacity error.

mod function_spec;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rs_even::{
    count_bruteforce, count_spectral, crs, crs_exponential_oracle, crs_holder,
    CompletelyEvenSequence, CongruenceQuery, Error, Factored, FlatRecord, Spectrum,
};

use function_spec::parse_function_argument;

const TABLE_LIMIT: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "rs-even", version, about = "Exact computations in the algebra of (r,s)-even functions")]
struct Cli {
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV where the output is tabular
    #[arg(long, global = true)]
    csv: bool,
    /// Seed for the randomized verification sweeps
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum, Default)]
enum Method {
    /// Divisor formula (exact, production path)
    #[default]
    Divisor,
    /// Holder closed form J_s(r) mu(m) / J_s(m)
    Holder,
    /// Floating-point exponential sum (r^s <= 10^6)
    Oracle,
}

impl Method {
    fn label(self) -> &'static str {
        match self {
            Method::Divisor => "divisor",
            Method::Holder => "holder",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the generalized Ramanujan sum c_{r,s}(n)
    Crs {
        r: u64,
        s: u32,
        /// Argument n; omit it and pass --table for a full period
        n: Option<u64>,
        /// Tabulate c_{r,s}(n) for n = 1..r^s
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value_t)]
        method: Method,
        /// Run every applicable method and require agreement
        #[arg(long)]
        cross_check: bool,
    },
    /// Transform a stored even function: DFT by default, --inverse for the
    /// IDFT of a spectrum, --alpha for expansion coefficients
    Dft {
        /// JSON record, or CSV with columns divisor,numerator,denominator
        input: PathBuf,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        alpha: bool,
        /// Power s when importing CSV (JSON records carry their own)
        #[arg(long)]
        s: Option<u32>,
    },
    /// Count solutions of x_1+...+x_k = n (mod r^s) with (x_i, r^s)_s = 1
    Count {
        r: u64,
        s: u32,
        k: u32,
        n: u64,
        /// Also run the convolution brute force and require agreement
        #[arg(long)]
        brute_force: bool,
    },
    /// Evaluate the spectrum of a completely even sequence by the Holder
    /// closed form
    Holder {
        r: u64,
        s: u32,
        /// Argument n; omit it and pass --table for a full period
        n: Option<u64>,
        /// Strongly multiplicative F as inline JSON or a path:
        /// {"default": "1", "primes": {"2": "5", "3": "-1/2"}}
        #[arg(long)]
        function: String,
        #[arg(long)]
        table: bool,
        /// Also evaluate through the transform and require agreement
        #[arg(long)]
        cross_check: bool,
    },
    /// Run an identity verification suite
    Verify {
        /// involution | parseval | orthogonality | divisor-sum | alternating |
        /// convolution | inversion | multiplicativity | holder | congruence | all
        suite: String,
        #[arg(long, default_value_t = 24)]
        r_max: u64,
        #[arg(long, default_value_t = 2)]
        s_max: u32,
        /// Self-test hook: corrupt one transform-matrix entry and prove the
        /// suites catch it
        #[arg(long, hide = true)]
        corrupt_dft: bool,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Domain(_) | Error::HolderHypothesis { .. } => 2,
        Error::Capacity(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("rs-even: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Crs { r, s, n, table, method, cross_check } => {
            cmd_crs(cli, *r, *s, *n, *table, *method, *cross_check)
        }
        Command::Dft { input, inverse, alpha, s } => cmd_dft(cli, input, *inverse, *alpha, *s),
        Command::Count { r, s, k, n, brute_force } => cmd_count(cli, *r, *s, *k, *n, *brute_force),
        Command::Holder { r, s, n, function, table, cross_check } => {
            cmd_holder(cli, *r, *s, *n, function, *table, *cross_check)
        }
        Command::Verify { suite, r_max, s_max, corrupt_dft } => {
            verify::cmd_verify(cli, suite, *r_max, *s_max, *corrupt_dft)
        }
    }
}

fn parse_r(r: u64) -> Result<Factored, Error> {
    if r == 0 {
        return Err(Error::Domain("r must be a positive integer".into()));
    }
    Factored::new(r)
}

fn require_s(s: u32) -> Result<(), Error> {
    if s == 0 {
        return Err(Error::Domain("s must be a positive integer".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct CrsValue {
    r: u64,
    s: u32,
    n: u64,
    method: &'static str,
    value: String,
}

#[derive(Serialize)]
struct ValueTable {
    r: u64,
    s: u32,
    method: &'static str,
    values: Vec<TableRow>,
}

#[derive(Serialize)]
struct TableRow {
    n: u64,
    value: String,
}

fn print_table(cli: &Cli, heading: &str, out: ValueTable) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else if cli.csv {
        println!("n,value");
        for row in &out.values {
            println!("{},{}", row.n, row.value);
        }
    } else {
        println!("{heading}");
        for row in &out.values {
            println!("{:>8}  {}", row.n, row.value);
        }
    }
}

fn crs_by(method: Method, r: &Factored, s: u32, n: u64) -> Result<num_bigint::BigInt, Error> {
    match method {
        Method::Divisor => crs(r, s, n),
        Method::Holder => crs_holder(r, s, n),
        Method::Oracle => crs_exponential_oracle(r, s, n),
    }
}

fn cmd_crs(
    cli: &Cli,
    r: u64,
    s: u32,
    n: Option<u64>,
    table: bool,
    method: Method,
    cross_check: bool,
) -> Result<ExitCode, Error> {
    let rf = parse_r(r)?;
    require_s(s)?;
    let modulus = rf.pow_checked(s)?;

    let evaluate = |n: u64| -> Result<(num_bigint::BigInt, bool), Error> {
        let value = crs_by(method, &rf, s, n)?;
        if !cross_check {
            return Ok((value, true));
        }
        let mut agree = value == crs(&rf, s, n)? && value == crs_holder(&rf, s, n)?;
        if modulus <= rs_even::ramanujan::ORACLE_MODULUS_LIMIT {
            agree = agree && value == crs_exponential_oracle(&rf, s, n)?;
        }
        Ok((value, agree))
    };

    if table {
        if modulus > TABLE_LIMIT {
            return Err(Error::Capacity(format!(
                "table output limited to r^s <= {TABLE_LIMIT}, got {modulus}"
            )));
        }
        let mut rows = Vec::with_capacity(modulus as usize);
        let mut mismatches = Vec::new();
        for n in 1..=modulus {
            let (value, agree) = evaluate(n)?;
            if !agree {
                mismatches.push(n);
            }
            rows.push(TableRow { n, value: value.to_string() });
        }
        print_table(
            cli,
            &format!("c_{{{r},{s}}}(n) for n = 1..{modulus} [{}]", method.label()),
            ValueTable { r, s, method: method.label(), values: rows },
        );
        if !mismatches.is_empty() {
            eprintln!(
                "rs-even: cross-check failed at n = {:?}",
                &mismatches[..mismatches.len().min(5)]
            );
            return Ok(ExitCode::from(1));
        }
        return Ok(ExitCode::SUCCESS);
    }

    let Some(n) = n else {
        return Err(Error::Domain("supply an argument n or pass --table".into()));
    };
    let (value, agree) = evaluate(n)?;
    if cli.json {
        let out = CrsValue { r, s, n, method: method.label(), value: value.to_string() };
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("{value}");
    }
    if !agree {
        eprintln!("rs-even: cross-check failed at n = {n}");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn read_record(path: &PathBuf, s_flag: Option<u32>) -> Result<FlatRecord, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    let is_csv = path.extension().is_some_and(|ext| ext.eq_ignore_ascii_case("csv"));
    if is_csv {
        let s = s_flag
            .ok_or_else(|| Error::Domain("CSV input carries no s; pass --s <power>".into()))?;
        require_s(s)?;
        FlatRecord::from_csv(&text, s)
    } else {
        FlatRecord::from_json(&text)
    }
}

fn cmd_dft(
    cli: &Cli,
    input: &PathBuf,
    inverse: bool,
    alpha: bool,
    s_flag: Option<u32>,
) -> Result<ExitCode, Error> {
    let record = read_record(input, s_flag)?;
    let out = match (inverse, alpha) {
        // f -> spectrum
        (false, false) => FlatRecord::from_spectrum(&record.to_even()?.dft()?),
        // spectrum -> f
        (true, false) => FlatRecord::from_even(&record.to_spectrum()?.idft()?),
        // f -> alpha coefficients
        (false, true) => FlatRecord::from_alpha(&record.to_even()?.dft()?.alpha()?),
        // spectrum -> alpha coefficients of the underlying f
        (true, true) => FlatRecord::from_alpha(&record.to_spectrum()?.alpha()?),
    };
    if cli.csv {
        print!("{}", out.to_csv());
    } else {
        println!("{}", out.to_json());
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CountOutput {
    r: u64,
    s: u32,
    k: u32,
    n: u64,
    count: String,
    method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute_force_count: Option<String>,
}

fn cmd_count(
    cli: &Cli,
    r: u64,
    s: u32,
    k: u32,
    n: u64,
    brute_force: bool,
) -> Result<ExitCode, Error> {
    let query = CongruenceQuery::new(parse_r(r)?, s, k, n)?;
    let count = count_spectral(&query)?;
    let brute = if brute_force { Some(count_bruteforce(&query)?) } else { None };
    let agree = brute.as_ref().is_none_or(|b| b == &count);
    if cli.json {
        let out = CountOutput {
            r,
            s,
            k,
            n,
            count: count.to_string(),
            method: if brute_force { "spectral+brute-force".into() } else { "spectral".into() },
            brute_force_count: brute.as_ref().map(|b| b.to_string()),
        };
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        match &brute {
            Some(b) => println!("{count} (spectral), {b} (brute force)"),
            None => println!("{count}"),
        }
    }
    if !agree {
        eprintln!("rs-even: spectral and brute-force counts disagree");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct HolderValue {
    r: u64,
    s: u32,
    n: u64,
    value: String,
}

fn cmd_holder(
    cli: &Cli,
    r: u64,
    s: u32,
    n: Option<u64>,
    function: &str,
    table: bool,
    cross_check: bool,
) -> Result<ExitCode, Error> {
    let rf = parse_r(r)?;
    require_s(s)?;
    let func = parse_function_argument(function)?;
    let seq = CompletelyEvenSequence::new(func, s)?;
    let modulus = rf.pow_checked(s)?;

    let spectrum: Option<Spectrum> =
        if cross_check { Some(seq.realize(&rf)?.dft()?) } else { None };
    let evaluate = |n: u64| -> Result<(rs_even::Rational, bool), Error> {
        let value = seq.holder_dft(&rf, n)?;
        let agree = spectrum.as_ref().is_none_or(|sp| sp.evaluate(n) == value);
        Ok((value, agree))
    };

    if table {
        if modulus > TABLE_LIMIT {
            return Err(Error::Capacity(format!(
                "table output limited to r^s <= {TABLE_LIMIT}, got {modulus}"
            )));
        }
        let mut rows = Vec::new();
        let mut mismatches = Vec::new();
        for n in 1..=modulus {
            let (value, agree) = evaluate(n)?;
            if !agree {
                mismatches.push(n);
            }
            rows.push(TableRow { n, value: rs_even::format_rational(&value) });
        }
        print_table(
            cli,
            &format!("spectrum of f_{{{r}}} for n = 1..{modulus} [holder]"),
            ValueTable { r, s, method: "holder", values: rows },
        );
        if !mismatches.is_empty() {
            eprintln!(
                "rs-even: holder/transform cross-check failed at n = {:?}",
                &mismatches[..mismatches.len().min(5)]
            );
            return Ok(ExitCode::from(1));
        }
        return Ok(ExitCode::SUCCESS);
    }

    let Some(n) = n else {
        return Err(Error::Domain("supply an argument n or pass --table".into()));
    };
    let (value, agree) = evaluate(n)?;
    if cli.json {
        let out = HolderValue { r, s, n, value: rs_even::format_rational(&value) };
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("{}", rs_even::format_rational(&value));
    }
    if !agree {
        eprintln!("rs-even: holder/transform cross-check failed at n = {n}");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
