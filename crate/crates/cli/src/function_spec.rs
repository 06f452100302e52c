//! Parsing of strongly multiplicative functions from the CLI:
//! {"default": "1", "primes": {"2": "5", "3": "-1/2"}}. The argument may be
//! inline JSON or a path to a JSON file.

use std::collections::BTreeMap;

use serde::Deserialize;

use rs_even::{parse_rational, Error, StronglyMultiplicativeFn};

#[derive(Deserialize)]
struct FunctionSpec {
    #[serde(default = "default_value")]
    default: String,
    #[serde(default)]
    primes: BTreeMap<String, String>,
}

fn default_value() -> String {
    "1".to_string()
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

pub fn parse_function_argument(argument: &str) -> Result<StronglyMultiplicativeFn, Error> {
    let text = if argument.trim_start().starts_with('{') {
        argument.to_string()
    } else {
        std::fs::read_to_string(argument)
            .map_err(|e| Error::Domain(format!("cannot read {argument}: {e}")))?
    };
    let spec: FunctionSpec = serde_json::from_str(&text)
        .map_err(|e| Error::Domain(format!("malformed function spec: {e}")))?;
    let default = parse_rational(&spec.default)?;
    let mut primes = BTreeMap::new();
    for (key, value) in &spec.primes {
        let p: u64 = key
            .parse()
            .map_err(|e| Error::Domain(format!("bad prime key {key:?}: {e}")))?;
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        primes.insert(p, parse_rational(value)?);
    }
    Ok(StronglyMultiplicativeFn::new(default, primes))
}
