//! Reduced quotients of polynomials over Q(√2).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::ExactPoly;
use super::scalar::SqrtTwoScalar;
use crate::error::{Error, Result};

/// `numerator / denominator` with coprime parts and a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: ExactPoly,
    den: ExactPoly,
}

impl RationalFn {
    /// Reduces `num/den` to canonical form.
    pub fn new(num: ExactPoly, den: ExactPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: ExactPoly, den: ExactPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.divide_exact(&g).expect("gcd divides numerator"),
                    den.divide_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lead_now = den.leading().expect("nonzero").clone();
        if lead_now.is_one() {
            return Self { num, den };
        }
        let inv = lead_now.inv().expect("nonzero");
        Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    /// Scales an already coprime pair so the denominator is monic.
    fn monic_denominator(num: ExactPoly, den: ExactPoly) -> Self {
        let lead = den.leading().expect("nonzero").clone();
        if lead.is_one() {
            return Self { num, den };
        }
        let inv = lead.inv().expect("nonzero");
        Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: ExactPoly) -> Self {
        Self {
            num: p,
            den: ExactPoly::one(),
        }
    }

    pub fn constant(c: SqrtTwoScalar) -> Self {
        Self::from_poly(ExactPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(ExactPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(ExactPoly::one())
    }

    /// `x`.
    pub fn x() -> Self {
        Self::from_poly(ExactPoly::x())
    }

    /// Logarithmic derivative `p'/p`.
    pub fn log_derivative(p: &ExactPoly) -> Result<Self> {
        Self::new(p.derivative(), p.clone())
    }

    pub fn numerator(&self) -> &ExactPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ExactPoly {
        &self.den
    }

    pub fn into_parts(self) -> (ExactPoly, ExactPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator is constant.
    pub fn as_poly(&self) -> Option<ExactPoly> {
        self.den.is_constant().then(|| self.num.clone())
    }

    pub fn derivative(&self) -> Self {
        if self.den.is_constant() {
            return Self::from_poly(self.num.derivative());
        }
        // (N/D)' = (N'D − ND')/D²; with g = gcd(D, D') the common factor can be
        // divided out before squaring.
        let dp = self.den.derivative();
        let g = self.den.gcd(&dp);
        let d_over_g = self.den.divide_exact(&g).expect("gcd divides");
        let dp_over_g = dp.divide_exact(&g).expect("gcd divides");
        let num = &self.num.derivative() * &d_over_g - &self.num * &dp_over_g;
        Self::reduce(num, &self.den * &d_over_g)
    }

    pub fn scale(&self, c: &SqrtTwoScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &ExactPoly) -> Self {
        Self::reduce(&self.num * p, self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &SqrtTwoScalar) -> Option<SqrtTwoScalar> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(x) / &d)
    }
}

impl From<ExactPoly> for RationalFn {
    fn from(p: ExactPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<SqrtTwoScalar> for RationalFn {
    fn from(c: SqrtTwoScalar) -> Self {
        Self::constant(c)
    }
}

fn add_sub(a: &RationalFn, b: &RationalFn, negate: bool) -> RationalFn {
    let bn = if negate { -&b.num } else { b.num.clone() };
    if a.den == b.den {
        return RationalFn::reduce(&a.num + &bn, a.den.clone());
    }
    if b.den.is_constant() {
        return RationalFn::reduce(&a.num + &(&bn * &a.den), a.den.clone());
    }
    if a.den.is_constant() {
        return RationalFn::reduce(&(&a.num * &b.den) + &bn, b.den.clone());
    }
    // With g = gcd of the denominators, any factor shared by the new
    // numerator and denominator divides g.
    let g = a.den.gcd(&b.den);
    let ad = a.den.divide_exact(&g).expect("gcd divides");
    let bd = b.den.divide_exact(&g).expect("gcd divides");
    let num = &(&a.num * &bd) + &(&bn * &ad);
    if num.is_zero() {
        return RationalFn::zero();
    }
    if g.is_constant() {
        return RationalFn::monic_denominator(num, &a.den * &bd);
    }
    let h = num.gcd(&g);
    let num = num.divide_exact(&h).expect("gcd divides");
    let den = &ad * &b.den.divide_exact(&h).expect("gcd divides");
    RationalFn::monic_denominator(num, den)
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        add_sub(self, rhs, false)
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        add_sub(self, rhs, true)
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        // Cross-cancel before multiplying to keep the final gcd small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.divide_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.divide_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.divide_exact(&g2).expect("gcd divides");
        let d1 = self.den.divide_exact(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let inv = den.leading().expect("nonzero").inv().expect("nonzero");
        RationalFn {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }
}

impl Div<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    /// Panics when dividing by the zero function; see [`RationalFn::checked_div`].
    fn div(self, rhs: &RationalFn) -> RationalFn {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn { (&self).$m(&rhs) }
        }
        impl $tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: &RationalFn) -> RationalFn { (&self).$m(rhs) }
        }
        impl $tr<RationalFn> for &RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Zero for RationalFn {
    fn zero() -> Self {
        RationalFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFn {
    fn one() -> Self {
        RationalFn::one()
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(cs)
    }

    #[test]
    fn reduces_common_factors() {
        let r = RationalFn::new(p(&[-1, 0, 1]), p(&[2, 2])).unwrap();
        assert_eq!(r.numerator(), &p(&[-1, 1]).scale(&SqrtTwoScalar::from_ratio(1, 2)));
        assert_eq!(r.denominator(), &p(&[1]));
    }

    #[test]
    fn denominator_is_monic() {
        let r = RationalFn::new(p(&[1]), p(&[3, 0, 2])).unwrap();
        assert!(r.denominator().leading().unwrap().is_one());
    }

    #[test]
    fn quotient_rule() {
        // d/dx 1/(2x^2+3) = -4x/(2x^2+3)^2
        let r = RationalFn::new(p(&[1]), p(&[3, 0, 2])).unwrap();
        let expect = RationalFn::new(p(&[0, -4]), &p(&[3, 0, 2]) * &p(&[3, 0, 2])).unwrap();
        assert_eq!(r.derivative(), expect);
    }

    #[test]
    fn field_operations_round_trip() {
        let a = RationalFn::new(p(&[1, 1]), p(&[3, 0, 2])).unwrap();
        let b = RationalFn::new(p(&[0, 2]), p(&[1, 1])).unwrap();
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert!(RationalFn::new(p(&[1]), ExactPoly::zero()).is_err());
    }
}
