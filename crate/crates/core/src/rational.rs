//! Parsing of exact rationals written as integers or `p/q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

/// Comma-separated list, e.g. `1,1,-1/2,-3`.
pub fn parse_rationals(s: &str) -> Result<Vec<BigRational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

pub fn format_rationals(v: &[BigRational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
