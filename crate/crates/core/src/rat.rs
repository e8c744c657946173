//! Helpers for exact rational arithmetic on top of [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Largest integer <= x.
pub fn rat_floor(x: &Rat) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Smallest integer >= x.
pub fn rat_ceil(x: &Rat) -> BigInt {
    x.numer().div_ceil(x.denom())
}

/// Fractional part reduced into [0, 1).
pub fn frac_part(x: &Rat) -> Rat {
    x - Rat::from_integer(rat_floor(x))
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64()
        .unwrap_or_else(|| x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN))
}

/// Parse "p/q", "p", or "-p/q" into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::SchemaError(format!("invalid rational literal: {s:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::SchemaError(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(num, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Render as "p/q", or "p" when the denominator is one.
pub fn format_rat(x: &Rat) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Least common multiple of the denominator of x with m.
pub fn lcm_with_denom(m: &BigInt, x: &Rat) -> BigInt {
    m.lcm(x.denom())
}

/// Sign as -1, 0, 1.
pub fn sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
