//! Exact rationals backed by `num-rational`, with the string and decimal
//! renderings used in reports.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `1 / 2^exp`.
pub fn inv_pow2(exp: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << exp)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// Renders as `p/q`, or `p` when the denominator is one.
pub fn to_fraction_string(value: &Rational) -> String {
    value.to_string()
}

/// Parses `p/q` or `p`.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

/// Six significant digits, for display only.
pub fn to_decimal(value: &Rational) -> f64 {
    let approx = value.to_f64().unwrap_or(f64::NAN);
    if approx == 0.0 || !approx.is_finite() {
        return approx;
    }
    format!("{approx:.5e}").parse().unwrap_or(approx)
}

pub mod serde_fraction {
    //! Serializes a [`Rational`] as a `"p/q"` string.
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&super::to_fraction_string(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(de)?;
        super::parse(&text).ok_or_else(|| D::Error::custom(format!("bad fraction `{text}`")))
    }
}
