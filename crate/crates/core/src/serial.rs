//! On-disk form of even functions, spectra, and expansion coefficients:
//! a flat record {r, s, entries: [{divisor, numerator, denominator}]},
//! written as JSON or as CSV with columns divisor,numerator,denominator.
//! Rationals travel as exact decimal strings, never as floats.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::arith::{Factored, Rational};
use crate::error::{Error, Result};
use crate::even::{AlphaCoefficients, EvenFunction, Spectrum};

pub const CSV_HEADER: &str = "divisor,numerator,denominator";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatEntry {
    pub divisor: u64,
    pub numerator: String,
    pub denominator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatRecord {
    pub r: u64,
    pub s: u32,
    pub entries: Vec<FlatEntry>,
}

/// Parse an exact rational from "p/q" or a bare integer string.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numerator = BigInt::from_str(num)
        .map_err(|e| Error::Domain(format!("bad numerator {num:?}: {e}")))?;
    let denominator = BigInt::from_str(den)
        .map_err(|e| Error::Domain(format!("bad denominator {den:?}: {e}")))?;
    if !denominator.is_positive() {
        return Err(Error::Domain(format!("denominator must be positive, got {den}")));
    }
    Ok(Rational::new(numerator, denominator))
}

/// Render a rational as "p" or "p/q", exactly.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

fn entries_from(divisors: &[u64], values: &[Rational]) -> Vec<FlatEntry> {
    divisors
        .iter()
        .zip(values)
        .map(|(&divisor, v)| FlatEntry {
            divisor,
            numerator: v.numer().to_string(),
            denominator: v.denom().to_string(),
        })
        .collect()
}

impl FlatRecord {
    pub fn from_even(f: &EvenFunction) -> Self {
        FlatRecord {
            r: f.r().value(),
            s: f.s(),
            entries: entries_from(f.divisor_values(), f.values()),
        }
    }

    pub fn from_spectrum(f: &Spectrum) -> Self {
        Self::from_even(f.as_even())
    }

    pub fn from_alpha(a: &AlphaCoefficients) -> Self {
        let divisors: Vec<u64> = a.r().divisors().iter().map(|d| d.value()).collect();
        FlatRecord { r: a.r().value(), s: a.s(), entries: entries_from(&divisors, a.values()) }
    }

    /// Reassemble the function; the entry divisors must be exactly the
    /// divisors of r.
    pub fn to_even(&self) -> Result<EvenFunction> {
        let r = Factored::new(self.r)?;
        let mut map = BTreeMap::new();
        for e in &self.entries {
            let value = parse_rational(&format!("{}/{}", e.numerator, e.denominator))?;
            if map.insert(e.divisor, value).is_some() {
                return Err(Error::Domain(format!("duplicate divisor {}", e.divisor)));
            }
        }
        EvenFunction::from_map(r, self.s, &map)
    }

    pub fn to_spectrum(&self) -> Result<Spectrum> {
        Ok(Spectrum::from_even(self.to_even()?))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("flat records always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Domain(format!("malformed JSON record: {e}")))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for e in &self.entries {
            out.push_str(&format!("{},{},{}\n", e.divisor, e.numerator, e.denominator));
        }
        out
    }

    /// Parse the CSV form. The column layout is fixed; r is inferred as the
    /// largest divisor listed and `s` must be supplied by the caller.
    pub fn from_csv(text: &str, s: u32) -> Result<Self> {
        let mut entries = Vec::new();
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, header)) if header.trim() == CSV_HEADER => {}
            Some((_, header)) => {
                return Err(Error::Domain(format!(
                    "line 1: expected header {CSV_HEADER:?}, got {header:?}"
                )))
            }
            None => return Err(Error::Domain("empty CSV input".into())),
        }
        for (idx, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(Error::Domain(format!(
                    "line {}: expected 3 fields, got {}",
                    idx + 1,
                    fields.len()
                )));
            }
            let divisor: u64 = fields[0].trim().parse().map_err(|e| {
                Error::Domain(format!("line {}: bad divisor {:?}: {e}", idx + 1, fields[0]))
            })?;
            parse_rational(&format!("{}/{}", fields[1], fields[2]))
                .map_err(|e| Error::Domain(format!("line {}: {e}", idx + 1)))?;
            entries.push(FlatEntry {
                divisor,
                numerator: fields[1].trim().to_string(),
                denominator: fields[2].trim().to_string(),
            });
        }
        let r = entries.iter().map(|e| e.divisor).max().ok_or_else(|| {
            Error::Domain("CSV input carries no entries".into())
        })?;
        Ok(FlatRecord { r, s, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for text in ["3", "-5", "1/2", "-7/3", "0"] {
            let v = parse_rational(text).unwrap();
            assert_eq!(format_rational(&v), text);
        }
        assert_eq!(parse_rational("4/6").unwrap(), Rational::new(2.into(), 3.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("2/-4").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn json_round_trip() {
        let rho = EvenFunction::rho(Factored::new(6).unwrap(), 1).unwrap();
        let record = FlatRecord::from_even(&rho);
        let back = FlatRecord::from_json(&record.to_json()).unwrap();
        assert_eq!(back, record);
        assert_eq!(back.to_even().unwrap(), rho);
    }

    #[test]
    fn csv_round_trip() {
        let c = EvenFunction::ramanujan(Factored::new(12).unwrap(), 1).unwrap();
        let record = FlatRecord::from_even(&c);
        let csv = record.to_csv();
        assert!(csv.starts_with("divisor,numerator,denominator\n"));
        let back = FlatRecord::from_csv(&csv, 1).unwrap();
        assert_eq!(back.to_even().unwrap(), c);
    }

    #[test]
    fn bad_inputs_are_domain_errors() {
        assert!(matches!(FlatRecord::from_json("{"), Err(Error::Domain(_))));
        assert!(matches!(FlatRecord::from_csv("", 1), Err(Error::Domain(_))));
        assert!(matches!(
            FlatRecord::from_csv("divisor,numerator,denominator\n1,2\n", 1),
            Err(Error::Domain(_))
        ));

        // divisor set not matching divisors(r)
        let record = FlatRecord {
            r: 6,
            s: 1,
            entries: vec![FlatEntry {
                divisor: 1,
                numerator: "1".into(),
                denominator: "1".into(),
            }],
        };
        assert!(matches!(record.to_even(), Err(Error::Domain(_))));
    }

    #[test]
    fn alpha_record() {
        let rho = EvenFunction::rho(Factored::new(2).unwrap(), 1).unwrap();
        let alpha = rho.dft().unwrap().alpha().unwrap();
        let record = FlatRecord::from_alpha(&alpha);
        assert_eq!(record.entries.len(), 2);
        assert_eq!(record.entries[0].numerator, "1");
        assert_eq!(record.entries[0].denominator, "2");
        assert_eq!(record.entries[1].numerator, "-1");
    }
}
