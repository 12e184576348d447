//! Exact rational helpers.
//!
//! All measures, densities and check sides are [`Rational`]s. Inequalities
//! with fractional exponents are compared after raising both sides to integer
//! powers, so no root is ever taken.

use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_usize(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn pow(x: &Rational, k: u32) -> Rational {
    Pow::pow(x, k)
}

/// Formats as `p/q`, always with an explicit denominator.
pub fn format(x: &Rational) -> String {
    let mut s = x.numer().to_string();
    s.push('/');
    s.push_str(&x.denom().to_string());
    s
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(alloc::format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Checks `0 < x <= 1`.
pub fn in_unit_interval(x: &Rational) -> bool {
    x.is_positive() && *x <= Rational::one()
}

pub fn to_f64(x: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

pub fn format_opt(x: &Option<Rational>) -> String {
    match x {
        Some(v) => format(v),
        None => "-".to_string(),
    }
}
