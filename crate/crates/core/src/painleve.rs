//! Rational solutions of Painlevé IV built from generalized Okamoto
//! polynomials, their exact residuals, Bäcklund transformations and the
//! bilinear identities those transformations imply.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::okamoto::okamoto;
use crate::ring::{rat, ExactPoly, RationalFn, SqrtTwoScalar};

/// A candidate solution `w(x)` with its parameters `(α, β)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PIVSolution {
    pub w: RationalFn,
    pub alpha: BigRational,
    pub beta: BigRational,
}

/// The three solution families of the −2x/3 hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    One,
    Two,
    Three,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::One, Family::Two, Family::Three];

    pub fn from_index(i: u8) -> Option<Family> {
        match i {
            1 => Some(Family::One),
            2 => Some(Family::Two),
            3 => Some(Family::Three),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Family::One => 1,
            Family::Two => 2,
            Family::Three => 3,
        }
    }

    /// `(α, β)` of the family member with indices `(m, n)`.
    pub fn parameters(self, m: i64, n: i64) -> (BigRational, BigRational) {
        let third = rat(1, 3);
        let int = |v: i64| BigRational::from_integer(BigInt::from(v));
        let beta_of = |v: BigRational| -(int(2) * &v * &v);
        match self {
            Family::One => (int(2 * m + n), beta_of(int(n) - third)),
            Family::Two => (int(-m - 2 * n), beta_of(int(m) - third)),
            Family::Three => (int(n - m), beta_of(int(m + n) + third)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

fn q(m: i64, n: i64) -> Result<ExactPoly> {
    Ok((*okamoto(m, n)?).clone())
}

/// `−2x/3`.
fn seed_line() -> RationalFn {
    RationalFn::from_poly(ExactPoly::monomial(SqrtTwoScalar::from_ratio(-2, 3), 1))
}

/// `(ln(a/b))' = a'/a − b'/b`, combined over the common denominator `ab`.
pub fn log_ratio_derivative(a: &ExactPoly, b: &ExactPoly) -> Result<RationalFn> {
    let num = &(&a.derivative() * b) - &(a * &b.derivative());
    RationalFn::new(num, a * b)
}

/// The log-derivative form of the family member `(m, n)`.
pub fn rational_solution(family: Family, m: i64, n: i64) -> Result<PIVSolution> {
    let (top, bottom) = match family {
        Family::One => ((m + 1, n), (m, n)),
        Family::Two => ((m, n), (m, n + 1)),
        Family::Three => ((m, n + 1), (m + 1, n)),
    };
    let a = q(top.0, top.1)?;
    let b = q(bottom.0, bottom.1)?;
    let w = &seed_line() + &log_ratio_derivative(&a, &b)?;
    let (alpha, beta) = family.parameters(m, n);
    let sol = PIVSolution { w, alpha, beta };
    if let Some(prod) = product_form(family, m, n) {
        let prod = prod?;
        if prod != sol.w {
            return Err(Error::InvalidIndices(format!(
                "family {family} ({m},{n}): product form disagrees with log form"
            )));
        }
    }
    Ok(sol)
}

/// The product form `−(√2/3)·(Q·Q)/(Q·Q)`, or `None` when one of its indices
/// leaves the cone.
pub fn product_form(family: Family, m: i64, n: i64) -> Option<Result<RationalFn>> {
    let (n1, n2, d1, d2) = match family {
        Family::One => ((m + 1, n - 1), (m, n + 1), (m, n), (m + 1, n)),
        Family::Two => ((m + 1, n), (m - 1, n + 1), (m, n + 1), (m, n)),
        Family::Three => ((m + 1, n + 1), (m, n), (m + 1, n), (m, n + 1)),
    };
    let in_cone = |(a, b): (i64, i64)| a >= 0 && b >= -1;
    if ![n1, n2, d1, d2].into_iter().all(in_cone) {
        return None;
    }
    let build = || -> Result<RationalFn> {
        let num =
            (&q(n1.0, n1.1)? * &q(n2.0, n2.1)?).scale(&(SqrtTwoScalar::sqrt2() * SqrtTwoScalar::from_ratio(-1, 3)));
        RationalFn::new(num, &q(d1.0, d1.1)? * &q(d2.0, d2.1)?)
    };
    Some(build())
}

/// Numerator of `2wD⁴·R` where `w = N/D` and `R` is the Painlevé IV residual;
/// it vanishes exactly when `R` does.
pub fn residual_numerator(s: &PIVSolution) -> Result<ExactPoly> {
    if s.w.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let n = s.w.numerator();
    let d = s.w.denominator();
    let (n1, n2) = (n.derivative(), n.derivative().derivative());
    let (d1, d2) = (d.derivative(), d.derivative().derivative());
    let c = |v: i64| SqrtTwoScalar::from_integer(v);
    let x = ExactPoly::x();
    let nn = n * n;
    let dd = d * d;

    let w2 = &(&(&n2 * &dd) - &(&(&n1 * &d1) * d).scale(&c(2))) - &(&(n * d) * &d2);
    let w2 = &w2 + &(n * &(&d1 * &d1)).scale(&c(2));
    let mut acc = (n * &w2).scale(&c(2));
    let wp = &(&n1 * d) - &(n * &d1);
    acc = &acc - &(&wp * &wp);
    acc = &acc - &(&nn * &nn).scale(&c(3));
    acc = &acc - &(&(&x * &(&nn * n)) * d).scale(&c(8));
    let quad = &(&x * &x) - &ExactPoly::constant(s.alpha.clone().into());
    acc = &acc - &(&quad * &(&nn * &dd)).scale(&c(4));
    let beta2 = SqrtTwoScalar::from_rational(&s.beta * BigRational::from_integer(2.into()));
    acc = &acc - &(&dd * &dd).scale(&beta2);
    Ok(acc)
}

/// `w'' − w'²/(2w) − (3/2)w³ − 4xw² − 2(x² − α)w − β/w`, reduced.
pub fn piv_residual(s: &PIVSolution) -> Result<RationalFn> {
    let num = residual_numerator(s)?;
    if num.is_zero() {
        return Ok(RationalFn::zero());
    }
    let d = s.w.denominator();
    let den = (s.w.numerator() * &(&(d * d) * d)).scale(&SqrtTwoScalar::from_integer(2));
    RationalFn::new(num, den)
}

/// True when `w` solves Painlevé IV with its parameters.
pub fn is_solution(s: &PIVSolution) -> bool {
    residual_numerator(s).is_ok_and(|p| p.is_zero())
}

/// Exact nonnegative rational square root, when it exists.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
}

/// `+` or `−` superscript of a Bäcklund map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }
}

/// The eight Bäcklund transformations `w_i^±`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BacklundMap {
    pub index: u8,
    pub branch: Branch,
}

impl BacklundMap {
    pub fn all() -> Vec<BacklundMap> {
        (1..=4)
            .flat_map(|index| {
                [Branch::Plus, Branch::Minus]
                    .into_iter()
                    .map(move |branch| BacklundMap { index, branch })
            })
            .collect()
    }
}

impl fmt::Display for BacklundMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.branch {
            Branch::Plus => '+',
            Branch::Minus => '-',
        };
        write!(f, "w{}{}", self.index, s)
    }
}

impl std::str::FromStr for BacklundMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown backlund map {s:?}; expected w1+ .. w4-"));
        let b = s.as_bytes();
        if b.len() != 3 || b[0] != b'w' {
            return Err(bad());
        }
        let index = match b[1] {
            c @ b'1'..=b'4' => c - b'0',
            _ => return Err(bad()),
        };
        let branch = match b[2] {
            b'+' | b'p' => Branch::Plus,
            b'-' | b'm' => Branch::Minus,
            _ => return Err(bad()),
        };
        Ok(BacklundMap { index, branch })
    }
}

/// How the superscript of `w_3^±`, `w_4^±` is paired with the sign of
/// `√(−2β₀)` in the denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pairing {
    /// `w_3^±` over `ℱ⁺ ± √(−2β₀)`, `w_4^±` over `ℱ⁻ ∓ √(−2β₀)`.
    AsPrinted,
    /// The opposite sign in both denominators.
    Swapped,
}

/// Sign of the `√(−2β₀)` term in `α_4^±`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alpha4Sign {
    /// `α_4^± = −3/2 − α₀/2 ± (3/4)√(−2β₀)`.
    AsPrinted,
    /// `α_4^± = −3/2 − α₀/2 ∓ (3/4)√(−2β₀)`.
    Flipped,
}

/// Conventions for the ambiguous parts of the transformation table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BacklundConvention {
    pub pairing: Pairing,
    pub alpha4: Alpha4Sign,
}

impl BacklundConvention {
    /// The table exactly as written.
    pub const PRINTED: BacklundConvention = BacklundConvention {
        pairing: Pairing::AsPrinted,
        alpha4: Alpha4Sign::AsPrinted,
    };
    /// The convention whose images all satisfy the equation (see tests).
    pub const RESOLVED: BacklundConvention = BacklundConvention {
        pairing: Pairing::AsPrinted,
        alpha4: Alpha4Sign::Flipped,
    };
}

/// Applies a Bäcklund map with the resolved convention.
pub fn backlund(s: &PIVSolution, map: BacklundMap) -> Result<PIVSolution> {
    backlund_with(s, map, BacklundConvention::RESOLVED)
}

/// Applies a Bäcklund map under an explicit convention.
pub fn backlund_with(s: &PIVSolution, map: BacklundMap, conv: BacklundConvention) -> Result<PIVSolution> {
    let singular = || Error::SingularMap(map.to_string());
    if s.w.is_zero() {
        return Err(singular());
    }
    let r = rational_sqrt(&(-(&s.beta) * BigRational::from_integer(2.into())))
        .ok_or_else(|| Error::SingularMap(format!("{map}: sqrt(-2 beta) is irrational")))?;
    let e = BigRational::from_integer(map.branch.sign().into());
    let one = BigRational::one();
    let half = rat(1, 2);
    let a0 = &s.alpha;
    let w = &s.w;
    let x = RationalFn::x();
    let two_xw_w2 = &(&x * w).scale(&SqrtTwoScalar::from_integer(2)) + &(w * w);
    let f_plus = &w.derivative() + &two_xw_w2;
    let f_minus = &w.derivative() - &two_xw_w2;
    let cst = |v: BigRational| RationalFn::constant(v.into());
    let two_w = w.scale(&SqrtTwoScalar::from_integer(2));
    let er = &e * &r;
    let pair = match conv.pairing {
        Pairing::AsPrinted => BigRational::one(),
        Pairing::Swapped => -BigRational::one(),
    };

    let (w_new, alpha, beta_inner) = match map.index {
        1 => {
            let w_new = (&f_minus - &cst(er.clone())).checked_div(&two_w)?;
            let alpha = (BigRational::from_integer(2.into()) - a0 * rat(2, 1) + &er * rat(3, 1)) * rat(1, 4);
            (w_new, alpha, &one + a0 + &er * &half)
        }
        2 => {
            let w_new = -(&f_plus - &cst(er.clone())).checked_div(&two_w)?;
            let alpha = -(BigRational::from_integer(2.into()) + a0 * rat(2, 1) + &er * rat(3, 1)) * rat(1, 4);
            (w_new, alpha, &one - a0 + &er * &half)
        }
        3 => {
            let den = &f_plus + &cst(&er * &pair);
            if den.is_zero() {
                return Err(singular());
            }
            let coeff = (&one - a0 - &er * &half) * rat(2, 1);
            let w_new = w + &(w.scale(&coeff.into())).checked_div(&den)?;
            let alpha = rat(3, 2) - a0 * &half - &er * rat(3, 4);
            (w_new, alpha, &one - a0 + &er * &half)
        }
        4 => {
            let den = &f_minus - &cst(&er * &pair);
            if den.is_zero() {
                return Err(singular());
            }
            let coeff = (&one + a0 + &er * &half) * rat(2, 1);
            let w_new = w + &(w.scale(&coeff.into())).checked_div(&den)?;
            let a_sign = match conv.alpha4 {
                Alpha4Sign::AsPrinted => BigRational::one(),
                Alpha4Sign::Flipped => -BigRational::one(),
            };
            let alpha = rat(-3, 2) - a0 * &half + &er * rat(3, 4) * a_sign;
            (w_new, alpha, -&one - a0 + &er * &half)
        }
        _ => return Err(Error::Parse(format!("backlund index {}", map.index))),
    };
    let beta = -(&beta_inner * &beta_inner) * &half;
    Ok(PIVSolution { w: w_new, alpha, beta })
}

/// Finds `(family, m, n)` in the hierarchy with the same `w` and parameters,
/// searching `0 ≤ m ≤ bound`, `−1 ≤ n ≤ bound`.
pub fn identify(s: &PIVSolution, bound: i64) -> Option<(Family, i64, i64)> {
    for family in Family::ALL {
        for m in 0..=bound {
            for n in -1..=bound {
                let (a, b) = family.parameters(m, n);
                if a != s.alpha || b != s.beta {
                    continue;
                }
                if let Ok(cand) = rational_solution(family, m, n) {
                    if cand.w == s.w {
                        return Some((family, m, n));
                    }
                }
            }
        }
    }
    None
}

/// `aQ_b' − a'Q_b` style bracket `a·b' − a'·b`.
fn cross(a: &ExactPoly, b: &ExactPoly) -> ExactPoly {
    &(a * &b.derivative()) - &(&a.derivative() * b)
}

/// `−2x·a·b + 3(a·b' − a'·b)`.
fn lhs_first_kind(a: &ExactPoly, b: &ExactPoly) -> ExactPoly {
    let x2 = ExactPoly::monomial(SqrtTwoScalar::from_integer(-2), 1);
    &(&x2 * &(a * b)) + &cross(a, b).scale(&SqrtTwoScalar::from_integer(3))
}

/// Checks the six bilinear identities at `(m, n)`; entry `i` reports the
/// `i`-th identity (two from each of the three comparisons).
pub fn bilinear_identities(m: i64, n: i64) -> Result<[bool; 6]> {
    let r2 = SqrtTwoScalar::sqrt2();
    let neg_r2 = -&r2;
    let c = |v: i64| SqrtTwoScalar::from_integer(v);
    let id1 = lhs_first_kind(&q(m + 1, n)?, &q(m, n + 1)?) == (&q(m, n)? * &q(m + 1, n + 1)?).scale(&neg_r2);
    let id2 = cross(&q(m + 1, n + 1)?, &q(m, n)?)
        == (&q(m + 1, n)? * &q(m, n + 1)?).scale(&(&neg_r2 * &c(3 * m + 3 * n + 1)));
    let id3 = lhs_first_kind(&q(m, n + 1)?, &q(m, n)?) == (&q(m + 1, n)? * &q(m - 1, n + 1)?).scale(&neg_r2);
    let id4 = cross(&q(m + 1, n)?, &q(m - 1, n + 1)?) == (&q(m, n + 1)? * &q(m, n)?).scale(&(&neg_r2 * &c(3 * m - 1)));
    let id5 = lhs_first_kind(&q(m, n)?, &q(m + 1, n)?) == (&q(m + 1, n - 1)? * &q(m, n + 1)?).scale(&neg_r2);
    let id6 = cross(&q(m + 1, n - 1)?, &q(m, n + 1)?) == (&q(m, n)? * &q(m + 1, n)?).scale(&(&r2 * &c(3 * n - 1)));
    Ok([id1, id2, id3, id4, id5, id6])
}
