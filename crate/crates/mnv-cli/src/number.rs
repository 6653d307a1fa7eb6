//! Coordinate values that remember whether they were given exactly.
//!
//! Flags like `--s` accept `3`, `-1/2`, or `0.25`, all of which carry an
//! exact rational alongside the f64, and fall back to plain float syntax like
//! `1e-3` for which only the f64 survives. Exact evaluation demands the
//! former; everything numeric uses the f64.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct ExactReal {
    pub value: f64,
    pub exact: Option<BigRational>,
}

impl ExactReal {
    pub fn from_rational(q: BigRational) -> Self {
        ExactReal {
            value: q.to_f64().unwrap_or(f64::NAN),
            exact: Some(q),
        }
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "{}", self.value),
        }
    }
}

fn parse_plain_decimal(text: &str) -> Option<BigRational> {
    let (negative, rest) = match text.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int_part, frac_part) = match rest.split_once('.') {
        Some((a, b)) => (a, b),
        None => (rest, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}")
        .parse()
        .expect("digit string parses");
    let numer = if negative { -digits } else { digits };
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(BigRational::new(numer, denom))
}

impl FromStr for ExactReal {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let t = text.trim();
        if let Some((n, d)) = t.split_once('/') {
            let numer: BigInt = n
                .trim()
                .parse()
                .map_err(|_| format!("bad rational numerator in `{t}`"))?;
            let denom: BigInt = d
                .trim()
                .parse()
                .map_err(|_| format!("bad rational denominator in `{t}`"))?;
            if denom.is_zero() {
                return Err(format!("zero denominator in `{t}`"));
            }
            return Ok(ExactReal::from_rational(BigRational::new(numer, denom)));
        }
        if let Some(q) = parse_plain_decimal(t) {
            return Ok(ExactReal::from_rational(q));
        }
        let value: f64 = t.parse().map_err(|_| format!("not a number: `{t}`"))?;
        Ok(ExactReal { value, exact: None })
    }
}
