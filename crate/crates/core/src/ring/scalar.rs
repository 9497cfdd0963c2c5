//! Exact elements of the real quadratic field Q(√2).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact number `a + b·√2` with arbitrary-precision rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SqrtTwoScalar {
    a: BigRational,
    b: BigRational,
}

impl SqrtTwoScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a rational element; panics on a zero denominator.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The element √2.
    pub fn sqrt2() -> Self {
        Self {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    /// Rational component `a`.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient `b` of √2.
    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Returns the rational value when the √2 component vanishes.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Galois conjugate `a − b√2`.
    pub fn conj(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a² − 2b²`, equal to `self · self.conj()`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(2)) * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.b.is_zero() {
            return Some(Self::from_rational(self.a.recip()));
        }
        let n = self.norm();
        Some(Self {
            a: &self.a / &n,
            b: -(&self.b / &n),
        })
    }

    /// Exact sign: −1, 0 or +1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: the larger of a² and 2b² wins.
        let a2 = &self.a * &self.a;
        let b2 = BigRational::from_integer(BigInt::from(2)) * &self.b * &self.b;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Nearest-double approximation; not correctly rounded (see
    /// [`crate::numerics::round_scalar`] for that).
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        a + self.b.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Zero for SqrtTwoScalar {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for SqrtTwoScalar {
    fn one() -> Self {
        Self::from_rational(BigRational::one())
    }
}

impl From<BigRational> for SqrtTwoScalar {
    fn from(a: BigRational) -> Self {
        Self::from_rational(a)
    }
}

impl From<i64> for SqrtTwoScalar {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl PartialOrd for SqrtTwoScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SqrtTwoScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl Add<&SqrtTwoScalar> for &SqrtTwoScalar {
    type Output = SqrtTwoScalar;
    fn add(self, rhs: &SqrtTwoScalar) -> SqrtTwoScalar {
        SqrtTwoScalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub<&SqrtTwoScalar> for &SqrtTwoScalar {
    type Output = SqrtTwoScalar;
    fn sub(self, rhs: &SqrtTwoScalar) -> SqrtTwoScalar {
        SqrtTwoScalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul<&SqrtTwoScalar> for &SqrtTwoScalar {
    type Output = SqrtTwoScalar;
    fn mul(self, rhs: &SqrtTwoScalar) -> SqrtTwoScalar {
        match (self.b.is_zero(), rhs.b.is_zero()) {
            (true, true) => SqrtTwoScalar::from_rational(&self.a * &rhs.a),
            (true, false) => SqrtTwoScalar {
                a: &self.a * &rhs.a,
                b: &self.a * &rhs.b,
            },
            (false, true) => SqrtTwoScalar {
                a: &self.a * &rhs.a,
                b: &self.b * &rhs.a,
            },
            (false, false) => {
                let two = BigRational::from_integer(BigInt::from(2));
                SqrtTwoScalar {
                    a: &self.a * &rhs.a + two * &self.b * &rhs.b,
                    b: &self.a * &rhs.b + &self.b * &rhs.a,
                }
            }
        }
    }
}

impl Div<&SqrtTwoScalar> for &SqrtTwoScalar {
    type Output = SqrtTwoScalar;
    /// Panics on division by zero, like the integer types.
    fn div(self, rhs: &SqrtTwoScalar) -> SqrtTwoScalar {
        if rhs.b.is_zero() {
            assert!(!rhs.a.is_zero(), "division by zero in Q(sqrt 2)");
            return SqrtTwoScalar {
                a: &self.a / &rhs.a,
                b: &self.b / &rhs.a,
            };
        }
        let inv = rhs.inv().expect("division by zero in Q(sqrt 2)");
        self * &inv
    }
}

impl Neg for SqrtTwoScalar {
    type Output = SqrtTwoScalar;
    fn neg(self) -> SqrtTwoScalar {
        SqrtTwoScalar { a: -self.a, b: -self.b }
    }
}

impl Neg for &SqrtTwoScalar {
    type Output = SqrtTwoScalar;
    fn neg(self) -> SqrtTwoScalar {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<SqrtTwoScalar> for SqrtTwoScalar {
            type Output = SqrtTwoScalar;
            fn $m(self, rhs: SqrtTwoScalar) -> SqrtTwoScalar { (&self).$m(&rhs) }
        }
        impl $tr<&SqrtTwoScalar> for SqrtTwoScalar {
            type Output = SqrtTwoScalar;
            fn $m(self, rhs: &SqrtTwoScalar) -> SqrtTwoScalar { (&self).$m(rhs) }
        }
        impl $tr<SqrtTwoScalar> for &SqrtTwoScalar {
            type Output = SqrtTwoScalar;
            fn $m(self, rhs: SqrtTwoScalar) -> SqrtTwoScalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<&SqrtTwoScalar> for SqrtTwoScalar {
    fn add_assign(&mut self, rhs: &SqrtTwoScalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&SqrtTwoScalar> for SqrtTwoScalar {
    fn sub_assign(&mut self, rhs: &SqrtTwoScalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&SqrtTwoScalar> for SqrtTwoScalar {
    fn mul_assign(&mut self, rhs: &SqrtTwoScalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for SqrtTwoScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b.is_one() => write!(f, "sqrt2"),
            (true, false) => write!(f, "{}*sqrt2", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "({} - {}*sqrt2)", self.a, -self.b.clone())
                } else {
                    write!(f, "({} + {}*sqrt2)", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for SqrtTwoScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for a rational constant.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
