//! Dense univariate polynomials over Q(√2).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::SqrtTwoScalar;
use crate::error::{Error, Result};

/// Symmetry of a polynomial under `x → −x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Polynomial with ascending coefficients; the last stored coefficient is
/// nonzero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPoly {
    coeffs: Vec<SqrtTwoScalar>,
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<SqrtTwoScalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(SqrtTwoScalar::one())
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(SqrtTwoScalar::one(), 1)
    }

    pub fn constant(c: SqrtTwoScalar) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: SqrtTwoScalar, degree: usize) -> Self {
        let mut coeffs = vec![SqrtTwoScalar::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Integer coefficients in ascending order.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| SqrtTwoScalar::from_integer(c)).collect())
    }

    pub fn from_rationals(cs: Vec<BigRational>) -> Self {
        Self::new(cs.into_iter().map(SqrtTwoScalar::from_rational).collect())
    }

    pub fn coeffs(&self) -> &[SqrtTwoScalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<SqrtTwoScalar> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> SqrtTwoScalar {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&SqrtTwoScalar> {
        self.coeffs.last()
    }

    /// True when every coefficient lies in Q.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(SqrtTwoScalar::is_rational)
    }

    pub fn eval(&self, x: &SqrtTwoScalar) -> SqrtTwoScalar {
        let mut acc = SqrtTwoScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &SqrtTwoScalar::from_integer(i as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &SqrtTwoScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![SqrtTwoScalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?;
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = dl.inv().expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![SqrtTwoScalar::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    if !dj.is_zero() {
                        rem[i + j] -= &(&c * dj);
                    }
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// The quotient `self / d`, failing unless `d` divides `self` exactly.
    pub fn divide_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonZeroRemainder)
        }
    }

    /// Rescaled copy with leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if !self.is_constant() && !other.is_constant() && modular::coprime(self, other) {
            return Self::one();
        }
        let (mut a, mut b) = if self.coeffs.len() >= other.coeffs.len() {
            (self.monic(), other.monic())
        } else {
            (other.monic(), self.monic())
        };
        while !b.is_zero() {
            if b.is_constant() {
                return Self::one();
            }
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Returns `c` with `self = c · other` when the two are proportional by a
    /// nonzero scalar.
    pub fn proportionality(&self, other: &Self) -> Option<SqrtTwoScalar> {
        if self.coeffs.len() != other.coeffs.len() || self.is_zero() {
            return None;
        }
        let c = self.leading()? / other.leading()?;
        (other.scale(&c) == *self).then_some(c)
    }

    pub fn is_proportional(&self, other: &Self) -> bool {
        self.proportionality(other).is_some()
    }

    /// Even/odd symmetry, or `None` when mixed. The zero polynomial is even.
    pub fn parity(&self) -> Option<Parity> {
        let even = self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero);
        let odd = self.coeffs.iter().step_by(2).all(Zero::is_zero);
        match (even, odd) {
            (true, _) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            _ => None,
        }
    }

    /// `p(c·x)`.
    pub fn compose_scale(&self, c: &SqrtTwoScalar) -> Self {
        let mut pw = SqrtTwoScalar::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw = &pw * c;
        }
        Self::new(out)
    }

    /// `p(x) = r(x²)` for even `p`: returns `r`.
    pub fn even_to_y(&self) -> Option<Self> {
        (self.parity() == Some(Parity::Even)).then(|| Self::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    /// Multiplies out the exponent of √3 for a parity-definite polynomial:
    /// returns `q` with `p(√3·x) = (√3)^e · q(x)` where `e` is 0 for even and
    /// 1 for odd `p`, so that `q` stays in Q(√2)[x].
    pub fn sqrt3_rescale(&self) -> Option<Self> {
        let parity = self.parity()?;
        let start = match parity {
            Parity::Even => 0,
            Parity::Odd => 1,
        };
        let mut out = vec![SqrtTwoScalar::zero(); self.coeffs.len()];
        for i in (start..self.coeffs.len()).step_by(2) {
            // (√3)^i = (√3)^start · 3^((i − start)/2)
            let f = SqrtTwoScalar::from_integer(3).pow(((i - start) / 2) as u32);
            out[i] = &self.coeffs[i] * &f;
        }
        Some(Self::new(out))
    }

    /// Squarefree part `p / gcd(p, p')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        self.divide_exact(&g).expect("gcd divides p").monic()
    }

    /// Canonical representative up to scalar: positive leading coefficient
    /// rescaled to one.
    pub fn normalized(&self) -> Self {
        self.monic()
    }

    /// Sign of the leading coefficient (0 for the zero polynomial).
    pub fn leading_sign(&self) -> i32 {
        self.leading().map_or(0, SqrtTwoScalar::signum)
    }

    /// Rescale so that the leading coefficient is positive.
    pub fn with_positive_leading(&self) -> Self {
        if self.leading_sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }
}

impl From<SqrtTwoScalar> for ExactPoly {
    fn from(c: SqrtTwoScalar) -> Self {
        Self::constant(c)
    }
}

impl Add<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o += s;
        }
        ExactPoly::new(out)
    }
}

impl Sub<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = self.coeffs.clone();
        out.resize(n, SqrtTwoScalar::zero());
        for (o, s) in out.iter_mut().zip(&rhs.coeffs) {
            *o -= s;
        }
        ExactPoly::new(out)
    }
}

/// Coprimality test through the image in `F_p`, `p = 2³¹ − 1`, where `2`
/// has a square root. A constant gcd of the images proves the exact gcd is
/// constant; any other outcome is inconclusive.
mod modular {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{ToPrimitive, Zero};

    use super::ExactPoly;

    const P: u64 = (1 << 31) - 1;

    fn mul(a: u64, b: u64) -> u64 {
        a * b % P
    }

    fn pow(mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    }

    fn inv(a: u64) -> u64 {
        pow(a, P - 2)
    }

    fn reduce_int(n: &BigInt) -> u64 {
        let r = n % BigInt::from(P);
        let r = r.to_i64().expect("remainder fits");
        (if r < 0 { r + P as i64 } else { r }) as u64
    }

    fn reduce_rat(r: &BigRational) -> Option<u64> {
        let d = reduce_int(r.denom());
        (d != 0).then(|| mul(reduce_int(r.numer()), inv(d)))
    }

    /// Image with `√2 ↦ 2^((p+1)/4)`; `None` if a denominator or the leading
    /// coefficient vanishes mod p.
    fn image(p: &ExactPoly) -> Option<Vec<u64>> {
        let root = pow(2, (P + 1) / 4);
        let out = p
            .coeffs
            .iter()
            .map(|c| {
                let a = reduce_rat(c.rational_part())?;
                let b = if c.sqrt2_part().is_zero() {
                    0
                } else {
                    reduce_rat(c.sqrt2_part())?
                };
                Some((a + mul(b, root)) % P)
            })
            .collect::<Option<Vec<u64>>>()?;
        (*out.last()? != 0).then_some(out)
    }

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    fn rem(mut a: Vec<u64>, b: &[u64]) -> Vec<u64> {
        let lead_inv = inv(*b.last().expect("nonzero"));
        while a.len() >= b.len() {
            let c = mul(*a.last().expect("nonempty"), lead_inv);
            let shift = a.len() - b.len();
            for (i, &bi) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + P - mul(c, bi)) % P;
            }
            trim(&mut a);
        }
        a
    }

    pub(super) fn coprime(a: &ExactPoly, b: &ExactPoly) -> bool {
        let (Some(mut x), Some(mut y)) = (image(a), image(b)) else {
            return false;
        };
        while !y.is_empty() {
            if y.len() == 1 {
                return true;
            }
            let r = rem(x, &y);
            x = y;
            y = r;
        }
        false
    }
}

/// Coefficients as integer pairs `(a_i, b_i)` over one common denominator.
pub(crate) fn integer_form(p: &ExactPoly) -> (Vec<(BigInt, BigInt)>, BigInt) {
    let den = p.coeffs.iter().fold(BigInt::one(), |acc, c| {
        acc.lcm(c.rational_part().denom()).lcm(c.sqrt2_part().denom())
    });
    let lift = |r: &BigRational| r.numer() * (&den / r.denom());
    let ints = p
        .coeffs
        .iter()
        .map(|c| (lift(c.rational_part()), lift(c.sqrt2_part())))
        .collect();
    (ints, den)
}

impl Mul<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let (lhs_ints, lhs_den) = integer_form(self);
        let (rhs_ints, rhs_den) = integer_form(rhs);
        let rational = self.is_rational() && rhs.is_rational();
        let len = lhs_ints.len() + rhs_ints.len() - 1;
        let mut acc = vec![(BigInt::zero(), BigInt::zero()); len];
        for (i, (a, b)) in lhs_ints.iter().enumerate() {
            if a.is_zero() && b.is_zero() {
                continue;
            }
            for (j, (c, d)) in rhs_ints.iter().enumerate() {
                let slot = &mut acc[i + j];
                if rational {
                    slot.0 += a * c;
                    continue;
                }
                // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
                if !b.is_zero() && !d.is_zero() {
                    slot.0 += (b * d) << 1usize;
                }
                if !a.is_zero() {
                    slot.0 += a * c;
                    slot.1 += a * d;
                }
                if !b.is_zero() {
                    slot.1 += b * c;
                }
            }
        }
        let den = lhs_den * rhs_den;
        let out = acc
            .into_iter()
            .map(|(a, b)| SqrtTwoScalar::new(BigRational::new(a, den.clone()), BigRational::new(b, den.clone())))
            .collect();
        ExactPoly::new(out)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<ExactPoly> for ExactPoly {
            type Output = ExactPoly;
            fn $m(self, rhs: ExactPoly) -> ExactPoly { (&self).$m(&rhs) }
        }
        impl $tr<&ExactPoly> for ExactPoly {
            type Output = ExactPoly;
            fn $m(self, rhs: &ExactPoly) -> ExactPoly { (&self).$m(rhs) }
        }
        impl $tr<ExactPoly> for &ExactPoly {
            type Output = ExactPoly;
            fn $m(self, rhs: ExactPoly) -> ExactPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_rational() && c.rational_part().is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::scalar::rat;

    fn p(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(cs)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn self_division() {
        let q2 = p(&[3, 0, 2]);
        let sq = &q2 * &q2;
        assert_eq!(sq.divide_exact(&q2).unwrap(), q2);
    }

    #[test]
    fn sqrt2_x_squared() {
        let r = ExactPoly::monomial(SqrtTwoScalar::sqrt2(), 1);
        assert_eq!(&r * &r, p(&[0, 0, 2]));
    }

    #[test]
    fn division_by_one_is_identity() {
        let q3 = p(&[135, 0, 90, 0, 60, 0, 8]);
        assert_eq!(q3.divide_exact(&ExactPoly::one()).unwrap(), q3);
    }

    #[test]
    fn inexact_division_is_reported() {
        assert_eq!(p(&[1, 0, 1]).divide_exact(&p(&[1, 1])), Err(Error::NonZeroRemainder));
        assert_eq!(p(&[1]).divide_exact(&ExactPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_finds_common_factor() {
        let a = p(&[-1, 1]); // x - 1
        let b = p(&[3, 0, 2]);
        let c = p(&[1, 1]);
        assert_eq!((&a * &b).gcd(&(&a * &c)), a);
        assert_eq!(b.gcd(&c), ExactPoly::one());
    }

    #[test]
    fn parity_and_rescale() {
        let odd = p(&[0, -9, 0, 2]);
        assert_eq!(odd.parity(), Some(Parity::Odd));
        // 2(√3x)^3 − 9√3x = √3(6x^3 − 9x)
        assert_eq!(odd.sqrt3_rescale().unwrap(), p(&[0, -9, 0, 6]));
        assert_eq!(p(&[1, 1]).parity(), None);
    }

    #[test]
    fn proportionality_reports_scalar() {
        let a = p(&[0, 9, 0, 2]);
        let b = a.scale(&SqrtTwoScalar::from_rational(rat(-3, 7)));
        assert_eq!(b.proportionality(&a), Some(SqrtTwoScalar::from_ratio(-3, 7)));
        assert!(!a.is_proportional(&p(&[0, 8, 0, 2])));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[-9, 0, 12, 0, 4]).to_string(), "4*x^4 + 12*x^2 - 9");
        assert_eq!(ExactPoly::monomial(SqrtTwoScalar::sqrt2(), 1).to_string(), "sqrt2*x");
    }
}
