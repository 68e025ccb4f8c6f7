//! Exact rational scalars used by all code-construction algebra.
//!
//! Every construction-side quantity is a [`Scalar`]: an arbitrary-precision
//! rational kept in canonical reduced form with a positive denominator.
//! Floating point appears only in the channel, decode and sim modules.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Scalar = num_rational::BigRational;

/// Integer as a scalar.
pub fn rat(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

/// Reduced fraction `numer/denom`. Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Scalar {
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parse a rational token such as `-1`, `3/2` or `-5/4`.
pub fn parse_scalar(token: &str) -> Result<Scalar> {
    let bad = || Error::InvalidParameter(format!("`{token}` is not a rational number"));
    let (numer, denom) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = match denom {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(Error::InvalidParameter(format!(
            "`{token}` has a zero denominator"
        )));
    }
    Ok(Scalar::new(numer, denom))
}

/// Reduce into the half-open interval `[0, 2)`. Used for operator phases in
/// units of pi.
pub fn mod_two(x: &Scalar) -> Scalar {
    let two = rat(2);
    let q = (x / &two).floor();
    x - q * two
}

/// Convert to floating point. Exact for anything the simulation produces.
pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Absolute value.
pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}
