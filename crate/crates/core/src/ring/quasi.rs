//! Functions of the form `R(x)·exp(s·x²/6)` with `R` rational.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::ExactPoly;
use super::ratfn::RationalFn;
use super::scalar::SqrtTwoScalar;
use crate::error::{Error, Result};

/// `rational_part · exp(gauss_exponent · x²/6)`.
///
/// Eigenfunctions use exponents in {−1, 0, +1}; products and Wronskians may
/// carry larger multiples, which are kept explicit rather than clamped.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuasiGaussian {
    rational_part: RationalFn,
    gauss_exponent: i32,
}

impl QuasiGaussian {
    pub fn new(rational_part: RationalFn, gauss_exponent: i32) -> Self {
        Self {
            rational_part,
            gauss_exponent,
        }
    }

    pub fn from_poly(p: ExactPoly, gauss_exponent: i32) -> Self {
        Self::new(RationalFn::from_poly(p), gauss_exponent)
    }

    /// The zero function (exponent 0 by convention).
    pub fn zero() -> Self {
        Self::new(RationalFn::zero(), 0)
    }

    pub fn rational_part(&self) -> &RationalFn {
        &self.rational_part
    }

    pub fn gauss_exponent(&self) -> i32 {
        self.gauss_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero()
    }

    /// `(R' + (s·x/3)·R)·exp(s·x²/6)`.
    pub fn derivative(&self) -> Self {
        let mut r = self.rational_part.derivative();
        if self.gauss_exponent != 0 {
            let sx3 = RationalFn::from_poly(ExactPoly::monomial(
                SqrtTwoScalar::from_ratio(self.gauss_exponent as i64, 3),
                1,
            ));
            r = &r + &(&sx3 * &self.rational_part);
        }
        Self::new(r, self.gauss_exponent)
    }

    pub fn mul_rational(&self, f: &RationalFn) -> Self {
        Self::new(&self.rational_part * f, self.gauss_exponent)
    }

    pub fn scale(&self, c: &SqrtTwoScalar) -> Self {
        Self::new(self.rational_part.scale(c), self.gauss_exponent)
    }

    /// `sign·g' + f·g`, the action of a first-order factor `±d/dx + f`.
    pub fn apply_first_order(&self, sign: i32, f: &RationalFn) -> Self {
        let d = self.derivative();
        let d = if sign < 0 { -d } else { d };
        let fg = self.mul_rational(f);
        d.checked_add(&fg).expect("both terms share the exponent")
    }

    /// Sum of two functions with the same exponent; zero operands adopt the
    /// other's exponent.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.gauss_exponent != other.gauss_exponent {
            return Err(Error::MixedKinds);
        }
        Ok(Self::new(
            &self.rational_part + &other.rational_part,
            self.gauss_exponent,
        ))
    }

    /// Returns `c` with `self = c · other` when both are scalar multiples.
    pub fn proportionality(&self, other: &Self) -> Option<SqrtTwoScalar> {
        if self.gauss_exponent != other.gauss_exponent || self.is_zero() || other.is_zero() {
            return None;
        }
        let (an, ad) = (self.rational_part.numerator(), self.rational_part.denominator());
        let (bn, bd) = (other.rational_part.numerator(), other.rational_part.denominator());
        if ad != bd {
            return None;
        }
        an.proportionality(bn)
    }
}

/// Free-function form of [`QuasiGaussian::apply_first_order`].
pub fn apply_first_order(op_sign: i32, f: &RationalFn, g: &QuasiGaussian) -> QuasiGaussian {
    g.apply_first_order(op_sign, f)
}

impl Add<&QuasiGaussian> for &QuasiGaussian {
    type Output = QuasiGaussian;
    /// Panics on mismatched nonzero exponents; see [`QuasiGaussian::checked_add`].
    fn add(self, rhs: &QuasiGaussian) -> QuasiGaussian {
        self.checked_add(rhs).expect("gaussian exponents must agree")
    }
}

impl Sub<&QuasiGaussian> for &QuasiGaussian {
    type Output = QuasiGaussian;
    fn sub(self, rhs: &QuasiGaussian) -> QuasiGaussian {
        self + &(-rhs)
    }
}

impl Mul<&QuasiGaussian> for &QuasiGaussian {
    type Output = QuasiGaussian;
    fn mul(self, rhs: &QuasiGaussian) -> QuasiGaussian {
        QuasiGaussian::new(
            &self.rational_part * &rhs.rational_part,
            self.gauss_exponent + rhs.gauss_exponent,
        )
    }
}

impl Neg for &QuasiGaussian {
    type Output = QuasiGaussian;
    fn neg(self) -> QuasiGaussian {
        QuasiGaussian::new(-&self.rational_part, self.gauss_exponent)
    }
}

impl Neg for QuasiGaussian {
    type Output = QuasiGaussian;
    fn neg(self) -> QuasiGaussian {
        -&self
    }
}

impl fmt::Display for QuasiGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gauss_exponent {
            0 => write!(f, "{}", self.rational_part),
            s => write!(f, "[{}] * exp({s}*x^2/6)", self.rational_part),
        }
    }
}

impl fmt::Debug for QuasiGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiGaussian({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(cs)
    }

    fn rf(cs: &[i64]) -> RationalFn {
        RationalFn::from_poly(p(cs))
    }

    #[test]
    fn ground_state_is_annihilated() {
        let g = QuasiGaussian::from_poly(ExactPoly::one(), -1);
        let w = RationalFn::from_poly(ExactPoly::monomial(SqrtTwoScalar::from_ratio(-1, 3), 1));
        // The annihilating factor is −d/dx + W; the + sign doubles instead.
        assert!(apply_first_order(-1, &w, &g).is_zero());
        let doubled = apply_first_order(1, &w, &g);
        assert_eq!(doubled, g.mul_rational(&w.scale(&SqrtTwoScalar::from_integer(2))));
    }

    #[test]
    fn plain_derivative() {
        let g = QuasiGaussian::from_poly(p(&[0, 1]), 0);
        let out = apply_first_order(1, &RationalFn::zero(), &g);
        assert_eq!(out, QuasiGaussian::from_poly(ExactPoly::one(), 0));
    }

    #[test]
    fn product_rule() {
        let g = QuasiGaussian::from_poly(ExactPoly::one(), -1);
        let f = RationalFn::from_poly(ExactPoly::monomial(SqrtTwoScalar::from_ratio(1, 3), 1));
        let out = apply_first_order(-1, &f, &g);
        let expect = ExactPoly::monomial(SqrtTwoScalar::from_ratio(2, 3), 1);
        assert_eq!(out, QuasiGaussian::from_poly(expect, -1));
    }

    #[test]
    fn exponents_add_under_multiplication() {
        let a = QuasiGaussian::new(rf(&[1, 1]), 1);
        let b = QuasiGaussian::new(rf(&[2]), -1);
        assert_eq!((&a * &b).gauss_exponent(), 0);
        assert!(a.checked_add(&b).is_err());
    }
}
