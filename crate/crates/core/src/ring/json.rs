//! JSON encoding of exact values.
//!
//! Rationals are always written as `"p/q"` strings in lowest terms, so a
//! polynomial becomes `{"coeffs": [["a_num/a_den", "b_num/b_den"], ...]}` with
//! each pair the rational and √2 components of an ascending coefficient.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::ExactPoly;
use super::ratfn::RationalFn;
use super::scalar::SqrtTwoScalar;
use crate::error::{Error, Result};

/// `"p/q"`, including `"3/1"` for integers.
pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d == BigInt::from(0) {
                return Err(Error::Parse(format!("{s:?}: zero denominator")));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

impl Serialize for SqrtTwoScalar {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        [
            rational_to_string(self.rational_part()),
            rational_to_string(self.sqrt2_part()),
        ]
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SqrtTwoScalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[String; 2]>::deserialize(de)?;
        let a = parse_rational(&a).map_err(D::Error::custom)?;
        let b = parse_rational(&b).map_err(D::Error::custom)?;
        Ok(SqrtTwoScalar::new(a, b))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<SqrtTwoScalar>,
}

impl Serialize for ExactPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            coeffs: self.coeffs().to_vec(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ExactPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(de)?;
        Ok(ExactPoly::new(repr.coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct RationalFnRepr {
    numerator: ExactPoly,
    denominator: ExactPoly,
}

impl Serialize for RationalFn {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        RationalFnRepr {
            numerator: self.numerator().clone(),
            denominator: self.denominator().clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for RationalFn {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = RationalFnRepr::deserialize(de)?;
        RationalFn::new(repr.numerator, repr.denominator).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_schema() {
        let q11 = ExactPoly::monomial(SqrtTwoScalar::sqrt2(), 1);
        let s = serde_json::to_string(&q11).unwrap();
        assert_eq!(s, r#"{"coeffs":[["0/1","0/1"],["0/1","1/1"]]}"#);
        let back: ExactPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q11);
    }

    #[test]
    fn rationals_are_lowest_terms() {
        let r = BigRational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(rational_to_string(&r), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), r);
        assert_eq!(parse_rational("7").unwrap(), BigRational::from_integer(7.into()));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn rational_function_round_trip() {
        let r = RationalFn::new(ExactPoly::from_ints(&[0, 4]), ExactPoly::from_ints(&[3, 0, 2])).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let back: RationalFn = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
