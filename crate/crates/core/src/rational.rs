//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim().parse::<Rat>().map_err(|_| Error::Parse(format!("not a rational number: `{s}`")))
}

/// Returns the value as an `i64` when it is an integer that fits.
pub fn as_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// Largest integer `<= r`.
pub fn floor_i64(r: &Rat) -> i64 {
    let (n, d) = (r.numer(), r.denom());
    n.div_floor(d).to_i64().expect("floor out of i64 range")
}

/// Smallest integer `>= r`.
pub fn ceil_i64(r: &Rat) -> i64 {
    let (n, d) = (r.numer(), r.denom());
    let q = n.div_floor(d);
    let q = if (&q * d) == *n { q } else { q + 1 };
    q.to_i64().expect("ceil out of i64 range")
}

pub fn is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}

pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_and_ceil() {
        assert_eq!(floor_i64(&frac(-3, 2)), -2);
        assert_eq!(ceil_i64(&frac(-3, 2)), -1);
        assert_eq!(floor_i64(&int(4)), 4);
        assert_eq!(ceil_i64(&int(4)), 4);
        assert_eq!(ceil_i64(&frac(7, 3)), 3);
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "-3/2", "5", "7/4"] {
            assert_eq!(parse_rat(s).unwrap().to_string(), s);
        }
        assert!(parse_rat("x").is_err());
        assert_eq!(parse_rat("4/2").unwrap().to_string(), "2");
    }
}
