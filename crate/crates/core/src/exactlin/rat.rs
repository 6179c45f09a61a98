use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Parses `"3"`, `"-1/2"` or `"−1/2"` (unicode minus accepted).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim().replace('\u{2212}', "-");
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t.as_str(), "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(p, q))
}

/// `"p/q"` with the denominator always present, so the string is exact and
/// uniform for serialization.
pub fn fmt_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short human form: integers without denominator.
pub fn fmt_rat_short(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn fmt_tuple(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_rat_short).collect();
    format!("({})", parts.join(","))
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-1/2").unwrap(), frac(-1, 2));
        assert_eq!(parse_rat("\u{2212}3/6").unwrap(), frac(-1, 2));
        assert_eq!(parse_rat(" 4 ").unwrap(), rat(4));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(fmt_rat(&rat(2)), "2/1");
        assert_eq!(fmt_rat(&frac(2, -4)), "-1/2");
        assert_eq!(fmt_rat_short(&rat(-3)), "-3");
    }
}
