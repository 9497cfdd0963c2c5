//! The Hamiltonian `H = −d²/dx² + V^(k)`, its superpotentials, zero-modes,
//! third-order ladder operators and spectrum.
//!
//! Every eigenfunction has the form `μ_k(x)·P(x)` with the common weight
//! `μ_k = e^{−x²/6}/Q_{k+1}` and a polynomial `P`.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::okamoto::okamoto;
use crate::painleve::{rational_solution, Branch, Family};
use crate::ring::{rat, ExactPoly, QuasiGaussian, RationalFn, SqrtTwoScalar};
use crate::rootcount::is_nodeless;

fn q(m: i64, n: i64) -> Arc<ExactPoly> {
    okamoto(m, n).expect("index inside the computed cone")
}

fn scalar(r: &BigRational) -> SqrtTwoScalar {
    SqrtTwoScalar::from_rational(r.clone())
}

fn constant(r: &BigRational) -> RationalFn {
    RationalFn::constant(scalar(r))
}

fn x_squared() -> RationalFn {
    RationalFn::from_poly(ExactPoly::from_ints(&[0, 0, 1]))
}

/// The constant value of `f`, if `f` is constant.
pub fn constant_value(f: &RationalFn) -> Option<SqrtTwoScalar> {
    f.as_poly().filter(|p| p.is_constant()).map(|p| p.coeff(0))
}

/// Hamiltonian data at level `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianK {
    pub k: i64,
    /// `−(4/9)·Q_{k+2}·Q_k / Q_{k+1}²`.
    pub potential_rational: RationalFn,
    /// `4k + 1`.
    pub potential_shift: BigRational,
    /// `μ_k = e^{−x²/6}/Q_{k+1}`.
    pub weight: QuasiGaussian,
}

/// `V^(k)(x) = x² − (4/9)·Q_{k+2}Q_k/Q_{k+1}² + 4k + 1`.
pub fn potential(k: i64) -> HamiltonianK {
    assert!(k >= 0, "level k must be nonnegative");
    let num = (&*q(k + 2, 0) * &*q(k, 0)).scale(&SqrtTwoScalar::from_ratio(-4, 9));
    let qk1 = q(k + 1, 0);
    let den = &*qk1 * &*qk1;
    let potential_rational = RationalFn::new(num, den).expect("Okamoto polynomials are nonzero");
    let weight = QuasiGaussian::new(RationalFn::new(ExactPoly::one(), (*qk1).clone()).expect("nonzero"), -1);
    HamiltonianK {
        k,
        potential_rational,
        potential_shift: BigRational::from_integer((4 * k + 1).into()),
        weight,
    }
}

impl HamiltonianK {
    /// The full potential as one rational function.
    pub fn potential(&self) -> RationalFn {
        &(&x_squared() + &self.potential_rational) + &constant(&self.potential_shift)
    }

    /// `V(x)` at an exact point; `None` at a pole.
    pub fn eval(&self, x: &SqrtTwoScalar) -> Option<SqrtTwoScalar> {
        self.potential().eval(x)
    }

    /// `Q_{k+1}` has no real zeros, so `V` and `μ_k` are smooth on the line.
    pub fn is_regular(&self) -> bool {
        is_nodeless(&q(self.k + 1, 0))
    }

    /// `lim (V(x) − x²/9)` as `|x| → ∞`, or `None` if `V` does not grow like
    /// `x²/9`.
    pub fn asymptotic_constant(&self) -> Option<SqrtTwoScalar> {
        let v = self.potential();
        let (quot, _) = v.numerator().div_rem(v.denominator()).ok()?;
        let ninth = SqrtTwoScalar::from_ratio(1, 9);
        (quot.degree() == Some(2) && quot.coeff(2) == ninth && quot.coeff(1).is_zero()).then(|| quot.coeff(0))
    }

    /// `−f'' + V·f`.
    pub fn apply(&self, f: &QuasiGaussian) -> QuasiGaussian {
        let d2 = f.derivative().derivative();
        &(-d2) + &f.mul_rational(&self.potential())
    }

    /// `μ_k · P`.
    pub fn weighted(&self, p: &ExactPoly) -> QuasiGaussian {
        self.weight.mul_rational(&RationalFn::from_poly(p.clone()))
    }

    /// Recovers `P` from `f = μ_k · P`.
    pub fn strip_weight(&self, f: &QuasiGaussian) -> Result<ExactPoly> {
        if f.is_zero() {
            return Ok(ExactPoly::zero());
        }
        if f.gauss_exponent() != -1 {
            return Err(Error::NonPolynomialResult(format!(
                "gaussian exponent {} where -1 was expected",
                f.gauss_exponent()
            )));
        }
        f.rational_part()
            .mul_poly(&q(self.k + 1, 0))
            .as_poly()
            .ok_or_else(|| Error::NonPolynomialResult(format!("{}", f.rational_part())))
    }
}

/// A superpotential `(s/3)·x + (ln top/bottom)'`, kept in factored form so
/// that `exp(±∫W)` stays exact.
#[derive(Debug, Clone, PartialEq)]
pub struct Superpotential {
    linear_sign: i32,
    top: Arc<ExactPoly>,
    bottom: Arc<ExactPoly>,
    function: RationalFn,
}

impl Superpotential {
    pub fn new(linear_sign: i32, top: Arc<ExactPoly>, bottom: Arc<ExactPoly>) -> Self {
        let lin = RationalFn::from_poly(ExactPoly::monomial(SqrtTwoScalar::from_ratio(linear_sign as i64, 3), 1));
        let log = &RationalFn::log_derivative(&top).expect("nonzero")
            - &RationalFn::log_derivative(&bottom).expect("nonzero");
        Self {
            linear_sign,
            top,
            bottom,
            function: &lin + &log,
        }
    }

    /// `W(x)` as a reduced rational function.
    pub fn function(&self) -> &RationalFn {
        &self.function
    }

    /// `exp(sign·∫W) = e^{sign·s·x²/6} (top/bottom)^sign`.
    pub fn exp_integral(&self, sign: i32) -> QuasiGaussian {
        let (n, d) = if sign > 0 {
            (&self.top, &self.bottom)
        } else {
            (&self.bottom, &self.top)
        };
        QuasiGaussian::new(
            RationalFn::new((**n).clone(), (**d).clone()).expect("nonzero"),
            sign * self.linear_sign,
        )
    }
}

/// `W`, `W₁` and `W₂` of one branch.
#[derive(Debug, Clone, PartialEq)]
pub struct Superpotentials {
    pub k: i64,
    pub branch: Branch,
    pub w: Superpotential,
    pub w1: Superpotential,
    pub w2: Superpotential,
}

/// The superpotentials of the `+` branch.
pub fn superpotentials(k: i64) -> Superpotentials {
    superpotentials_branch(k, Branch::Plus)
}

/// `W = −x/3 + (ln Q_k/Q_{k+1})'` together with `W₁^±`, `W₂^±`. The `+`
/// branch uses `Q_{k,1}` and the `−` branch `Q_{k+1,−1}`.
pub fn superpotentials_branch(k: i64, branch: Branch) -> Superpotentials {
    assert!(k >= 0, "level k must be nonnegative");
    let (qk, qk1) = (q(k, 0), q(k + 1, 0));
    let mid = match branch {
        Branch::Plus => q(k, 1),
        Branch::Minus => q(k + 1, -1),
    };
    Superpotentials {
        k,
        branch,
        w: Superpotential::new(-1, Arc::clone(&qk), Arc::clone(&qk1)),
        w1: Superpotential::new(1, Arc::clone(&mid), qk1),
        w2: Superpotential::new(1, qk, mid),
    }
}

/// `W`, `W₁^±`, `W₂^±` rebuilt from the Painlevé IV solution
/// `w̃_k = w^{[1]}_{k,0}` (with `β̃ = −2/9`):
/// `W = −(w̃ + x)`, `W₁^± = (F̃⁻ ± 2/3)/(2w̃) + x`, `W₂^± = −(F̃⁺ ± 2/3)/(2w̃) + x`.
pub fn superpotentials_from_piv(k: i64, branch: Branch) -> Result<[RationalFn; 3]> {
    let wt = rational_solution(Family::One, k, 0)?.w;
    let x = RationalFn::x();
    let d = wt.derivative();
    let quad = &(&x.scale(&SqrtTwoScalar::from_integer(2)) * &wt) + &(&wt * &wt);
    let f_minus = &d - &quad;
    let f_plus = &d + &quad;
    let r = constant(&rat(2 * branch.sign(), 3));
    let two_w = wt.scale(&SqrtTwoScalar::from_integer(2));
    let w = -(&wt + &x);
    let w1 = &(&f_minus + &r).checked_div(&two_w)? + &x;
    let w2 = &x - &(&f_plus + &r).checked_div(&two_w)?;
    Ok([w, w1, w2])
}

/// `(ε₁, ε₂) = (2k − 4/3, 2k − 2/3)`.
pub fn factorization_energies(k: i64) -> (BigRational, BigRational) {
    (rat(6 * k - 4, 3), rat(6 * k - 2, 3))
}

/// Results of the factorization identities for one branch.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorizationReport {
    /// `V = W² + W'`.
    pub h_is_q_dagger_q: bool,
    /// `V` agrees with `x² − (w̃' − 2xw̃ − w̃²) − 1`.
    pub potential_matches_piv: bool,
    /// `V₁ = x² + (w̃' + 2xw̃ + w̃²) − 1` equals `W² − W' − 2`.
    pub h1_is_q_q_dagger: bool,
    /// `V − W₁² − W₁'` if constant.
    pub eps1: Option<SqrtTwoScalar>,
    /// `V₁ − W₂² + W₂'` if constant.
    pub eps2: Option<SqrtTwoScalar>,
    /// `(W₁² − W₁' + ε₁) − (W₂² + W₂')` if constant; equals `ε₂` when the
    /// two expressions for `V₂` agree.
    pub eps2_via_h2: Option<SqrtTwoScalar>,
}

/// Checks `H = Q†Q`, `H₁ = QQ† − 2`, `H = M₁†M₁ + ε₁`, `H₂ = M₁M₁† + ε₁`,
/// `H₂ = M₂†M₂ + ε₂` and `H₁ = M₂M₂† + ε₂`.
pub fn factorization_report(k: i64, branch: Branch) -> Result<FactorizationReport> {
    let h = potential(k);
    let v = h.potential();
    let s = superpotentials_branch(k, branch);
    let (w, w1, w2) = (s.w.function(), s.w1.function(), s.w2.function());
    let wt = rational_solution(Family::One, k, 0)?.w;
    let x = RationalFn::x();
    let two_x_w = &x.scale(&SqrtTwoScalar::from_integer(2)) * &wt;
    let wt2 = &wt * &wt;
    let one = RationalFn::one();
    let v_piv = &(&x_squared() - &(&(&wt.derivative() - &two_x_w) - &wt2)) - &one;
    let v1 = &(&x_squared() + &(&(&wt.derivative() + &two_x_w) + &wt2)) - &one;
    let two = RationalFn::constant(SqrtTwoScalar::from_integer(2));

    let eps1 = constant_value(&(&(&v - &(w1 * w1)) - &w1.derivative()));
    let eps2 = constant_value(&(&(&v1 - &(w2 * w2)) + &w2.derivative()));
    let eps2_via_h2 = eps1.as_ref().and_then(|e1| {
        let v2 = &(&(w1 * w1) - &w1.derivative()) + &RationalFn::constant(e1.clone());
        constant_value(&(&(&v2 - &(w2 * w2)) - &w2.derivative()))
    });
    Ok(FactorizationReport {
        h_is_q_dagger_q: v == &(w * w) + &w.derivative(),
        potential_matches_piv: v == v_piv,
        h1_is_q_q_dagger: v1 == &(&(w * w) - &w.derivative()) - &two,
        eps1,
        eps2,
        eps2_via_h2,
    })
}

/// An eigenfunction `μ_k·P` with its energy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModeFunction {
    pub k: i64,
    pub j: u8,
    pub n: i64,
    pub poly: ExactPoly,
    #[serde(serialize_with = "serialize_rational")]
    pub energy: BigRational,
}

fn serialize_rational<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::ring::json::rational_to_string(r))
}

impl ModeFunction {
    /// `μ_k · P`.
    pub fn function(&self) -> QuasiGaussian {
        potential(self.k).weighted(&self.poly)
    }

    /// The same mode with its energy replaced, for mutation checks.
    pub fn with_energy(&self, energy: BigRational) -> Self {
        Self { energy, ..self.clone() }
    }
}

impl fmt::Display for ModeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "phi[k={}, j={}, n={}] E={} P={}",
            self.k, self.j, self.n, self.energy, self.poly
        )
    }
}

fn check_j(j: u8) {
    assert!((1..=3).contains(&j), "sequence index must be 1, 2 or 3");
}

/// `E_{n;1} = 2n`, `E_{n;2} = 2k + 2n + 2/3`, `E_{n;3} = 2k + 2n + 4/3`.
pub fn mode_energy(k: i64, j: u8, n: i64) -> BigRational {
    check_j(j);
    match j {
        1 => BigRational::from_integer((2 * n).into()),
        2 => rat(6 * k + 6 * n + 2, 3),
        _ => rat(6 * k + 6 * n + 4, 3),
    }
}

/// Degree of `P_{n;j}^{(k)}`.
pub fn mode_degree(k: i64, j: u8, n: i64) -> i64 {
    check_j(j);
    3 * n
        + match j {
            1 => k * k - k,
            2 => (k + 1) * (k + 1),
            _ => k * k + 2 * k + 2,
        }
}

/// The zero-mode of sequence `j` on the `+` branch: `P = Q_k`, `Q_{k+1,1}` or
/// `Q_{k+2,−1}`.
pub fn zero_mode(k: i64, j: u8) -> ModeFunction {
    check_j(j);
    let poly = match j {
        1 => q(k, 0),
        2 => q(k + 1, 1),
        _ => q(k + 2, -1),
    };
    ModeFunction {
        k,
        j,
        n: 0,
        poly: (*poly).clone(),
        energy: mode_energy(k, j, 0),
    }
}

/// Zero-mode computed from the superpotentials of one branch:
/// `e^{∫W}`, `(W − W₂)e^{−∫W₂}` and `(±2/3 + (W − W₂)(W₁ + W₂))e^{−∫W₁}`.
pub fn zero_mode_from_superpotentials(k: i64, j: u8, branch: Branch) -> QuasiGaussian {
    check_j(j);
    let s = superpotentials_branch(k, branch);
    let diff = s.w.function() - s.w2.function();
    match j {
        1 => s.w.exp_integral(1),
        2 => s.w2.exp_integral(-1).mul_rational(&diff),
        _ => {
            let shift = constant(&rat(2 * branch.sign(), 3));
            let f = &shift + &(&diff * &(s.w1.function() + s.w2.function()));
            s.w1.exp_integral(-1).mul_rational(&f)
        }
    }
}

/// `E_{0;2}^± = γ + 2 ∓ 1/3` and `E_{0;3}^± = γ + 2 ± 1/3` with `γ = 2k − 1`.
pub fn zero_mode_energy_branch(k: i64, j: u8, branch: Branch) -> BigRational {
    check_j(j);
    let gamma2 = BigRational::from_integer((2 * k + 1).into());
    let third = rat(branch.sign(), 3);
    match j {
        1 => BigRational::zero(),
        2 => gamma2 - third,
        _ => gamma2 + third,
    }
}

/// `(−d²/dx² + V − E)(μ_k·P)`.
pub fn hamiltonian_residual(mode: &ModeFunction) -> QuasiGaussian {
    let h = potential(mode.k);
    let f = h.weighted(&mode.poly);
    let ef = f.scale(&scalar(&mode.energy));
    &h.apply(&f) - &ef
}

/// Direction of a ladder operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Raise,
    Lower,
}

/// A product of first-order factors `(sign·d/dx + W)`, written left to right
/// and applied right to left.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderOp {
    pub factors: Vec<(i32, RationalFn)>,
}

impl LadderOp {
    pub fn apply(&self, f: &QuasiGaussian) -> QuasiGaussian {
        self.factors
            .iter()
            .rev()
            .fold(f.clone(), |g, (sign, w)| g.apply_first_order(*sign, w))
    }

    /// Formal adjoint: reversed order with each `d/dx` sign flipped.
    pub fn adjoint(&self) -> Self {
        Self {
            factors: self.factors.iter().rev().map(|(s, w)| (-s, w.clone())).collect(),
        }
    }
}

/// `raise = (d/dx + W)(−d/dx + W₂)(−d/dx + W₁)` and its adjoint
/// `lower = (d/dx + W₁)(d/dx + W₂)(−d/dx + W)`.
pub fn ladder(k: i64, direction: Direction) -> LadderOp {
    let s = superpotentials(k);
    let raise = LadderOp {
        factors: vec![
            (1, s.w.function().clone()),
            (-1, s.w2.function().clone()),
            (-1, s.w1.function().clone()),
        ],
    };
    match direction {
        Direction::Raise => raise,
        Direction::Lower => raise.adjoint(),
    }
}

/// `C²_{n+1;j}`, the eigenvalue of `lower∘raise` on `φ_{n;j}`.
pub fn ladder_constant_sq(k: i64, j: u8, n: i64) -> BigRational {
    check_j(j);
    let n1 = BigRational::from_integer((n + 1).into());
    let (a, b) = match j {
        1 => (rat(3 * (n - k) + 2, 3), rat(3 * (n - k) + 1, 3)),
        2 => (rat(3 * n + 2, 3), rat(3 * (n + k) + 4, 3)),
        _ => (rat(3 * n + 4, 3), rat(3 * (n + k) + 5, 3)),
    };
    BigRational::from_integer(8.into()) * n1 * a * b
}

/// `φ_{n+1;j}` from `raise(φ_{n;j})`, rescaled to a positive leading
/// coefficient.
pub fn raise_mode(mode: &ModeFunction) -> Result<ModeFunction> {
    let h = potential(mode.k);
    let raised = ladder(mode.k, Direction::Raise).apply(&h.weighted(&mode.poly));
    let poly = h.strip_weight(&raised)?.with_positive_leading();
    Ok(ModeFunction {
        k: mode.k,
        j: mode.j,
        n: mode.n + 1,
        poly,
        energy: &mode.energy + BigRational::from_integer(2.into()),
    })
}

/// `φ_{n;j}` by `n` applications of the raising operator to the zero-mode.
pub fn mode_by_ladder(k: i64, j: u8, n: i64) -> Result<ModeFunction> {
    let mut m = zero_mode(k, j);
    for _ in 0..n {
        m = raise_mode(&m)?;
    }
    Ok(m)
}

/// For `raise(φ_n) = ρ·φ_{n+1}` and `lower(φ_{n+1}) = τ·φ_n`, returns `ρ·τ`.
/// With unit-normalized modes `ρ = τ = C_{n+1}`, so the product is the
/// normalization-free form of the squared ladder constant.
pub fn ladder_ratio_product(lower_mode: &ModeFunction, upper_mode: &ModeFunction) -> Option<SqrtTwoScalar> {
    let h = potential(lower_mode.k);
    let f = h.weighted(&lower_mode.poly);
    let g = h.weighted(&upper_mode.poly);
    let rho = ladder(lower_mode.k, Direction::Raise).apply(&f).proportionality(&g)?;
    let tau = ladder(lower_mode.k, Direction::Lower).apply(&g).proportionality(&f)?;
    Some(rho * tau)
}

/// `H(raise f) − raise((H + 2) f)`, which vanishes for every `f` when
/// `H A† = A† (H + 2)`.
pub fn shape_invariance_defect(k: i64, f: &QuasiGaussian) -> QuasiGaussian {
    let h = potential(k);
    let raise = ladder(k, Direction::Raise);
    let two = SqrtTwoScalar::from_integer(2);
    let shifted = &h.apply(f) + &f.scale(&two);
    &h.apply(&raise.apply(f)) - &raise.apply(&shifted)
}

/// One level of the spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralLevel {
    #[serde(serialize_with = "serialize_rational")]
    pub energy: BigRational,
    pub j: u8,
    pub n: i64,
}

/// The lowest `count` levels of `H^(k)` in increasing order.
pub fn spectrum(k: i64, count: usize) -> Vec<SpectralLevel> {
    let per = count as i64 + 1;
    let mut levels: Vec<SpectralLevel> = (1..=3u8)
        .flat_map(|j| {
            (0..per).map(move |n| SpectralLevel {
                energy: mode_energy(k, j, n),
                j,
                n,
            })
        })
        .collect();
    levels.sort_by(|a, b| a.energy.cmp(&b.energy).then(a.j.cmp(&b.j)));
    levels.truncate(count);
    levels
}

/// Position of `φ_{n;j}` in the increasing spectrum.
pub fn spectral_rank(k: i64, j: u8, n: i64) -> usize {
    let e = mode_energy(k, j, n);
    (1..=3u8)
        .map(|jj| (0..=n + k + 1).filter(|&nn| mode_energy(k, jj, nn) < e).count())
        .sum()
}

/// Whether the three energy progressions share no value among their first
/// `levels` terms.
pub fn sequences_are_disjoint(k: i64, levels: i64) -> bool {
    let mut all: Vec<BigRational> = (1..=3u8)
        .flat_map(|j| (0..levels).map(move |n| mode_energy(k, j, n)))
        .collect();
    let total = all.len();
    all.sort();
    all.dedup();
    all.len() == total
}

/// `E_{n;j}` reduced to the unit of `1/3`, useful for integer keys.
pub fn energy_in_thirds(e: &BigRational) -> Option<i64> {
    let t = e * BigRational::from_integer(3.into());
    t.is_integer().then(|| i64::try_from(t.to_integer()).ok()).flatten()
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Raise => "raise",
            Direction::Lower => "lower",
        })
    }
}

impl std::str::FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raise" => Ok(Direction::Raise),
            "lower" => Ok(Direction::Lower),
            _ => Err(Error::Parse(format!("unknown direction {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(cs)
    }

    fn s(num: i64, den: i64) -> SqrtTwoScalar {
        SqrtTwoScalar::from_ratio(num, den)
    }

    #[test]
    fn oscillator_limit() {
        let v = potential(0).potential();
        let expect = RationalFn::from_poly(ExactPoly::new(vec![s(-1, 3), s(0, 1), s(1, 9)]));
        assert_eq!(v, expect);
    }

    #[test]
    fn potential_values_at_k1() {
        let h = potential(1);
        assert_eq!(h.eval(&s(0, 1)).unwrap(), s(-5, 3));
        assert_eq!(h.eval(&s(1, 1)).unwrap(), s(178, 225));
        assert!(h.is_regular());
        assert_eq!(h.asymptotic_constant(), Some(s(1, 1)));
        assert_eq!(potential(0).asymptotic_constant(), Some(s(-1, 3)));
    }

    #[test]
    fn superpotential_examples() {
        let s0 = superpotentials(0);
        let third = RationalFn::from_poly(ExactPoly::monomial(s(1, 3), 1));
        assert_eq!(s0.w.function(), &-third.clone());
        assert_eq!(s0.w1.function(), &third);
        assert_eq!(s0.w2.function(), &third);
        // −x/3 − 4x/(2x²+3)
        let w = superpotentials(1).w.function().clone();
        let expect = &-third - &RationalFn::new(p(&[0, 4]), p(&[3, 0, 2])).unwrap();
        assert_eq!(w, expect);
    }

    #[test]
    fn superpotentials_agree_with_piv_form() {
        for k in 0..4 {
            for b in [Branch::Plus, Branch::Minus] {
                let sp = superpotentials_branch(k, b);
                let [w, w1, w2] = superpotentials_from_piv(k, b).unwrap();
                assert_eq!(&w, sp.w.function(), "W k={k}");
                assert_eq!(&w1, sp.w1.function(), "W1 k={k} {b:?}");
                assert_eq!(&w2, sp.w2.function(), "W2 k={k} {b:?}");
            }
        }
    }

    #[test]
    fn factorization_constants() {
        for k in 0..4 {
            let (e1, e2) = factorization_energies(k);
            let plus = factorization_report(k, Branch::Plus).unwrap();
            let minus = factorization_report(k, Branch::Minus).unwrap();
            for r in [&plus, &minus] {
                assert!(r.h_is_q_dagger_q && r.potential_matches_piv && r.h1_is_q_q_dagger);
                assert_eq!(r.eps2, r.eps2_via_h2, "k={k}");
            }
            // The listed pair (ε₁, ε₂) is realized by the − branch; the +
            // branch carries the same two constants in the opposite order.
            assert_eq!(
                (minus.eps1, minus.eps2),
                (Some(scalar(&e1)), Some(scalar(&e2))),
                "k={k}"
            );
            assert_eq!((plus.eps1, plus.eps2), (Some(scalar(&e2)), Some(scalar(&e1))), "k={k}");
        }
        assert_eq!(factorization_energies(0), (rat(-4, 3), rat(-2, 3)));
        assert_eq!(factorization_energies(2), (rat(8, 3), rat(10, 3)));
    }

    #[test]
    fn zero_modes_match_okamoto_entries() {
        assert_eq!(zero_mode(1, 2).poly, p(&[-9, 0, 12, 0, 4]));
        assert_eq!(zero_mode(1, 3).energy, rat(10, 3));
        for k in 0..4 {
            let h = potential(k);
            for j in 1..=3u8 {
                let f = zero_mode_from_superpotentials(k, j, Branch::Plus);
                let got = h.strip_weight(&f).unwrap();
                assert!(got.is_proportional(&zero_mode(k, j).poly), "k={k} j={j}");
                assert_eq!(zero_mode_energy_branch(k, j, Branch::Plus), mode_energy(k, j, 0));
            }
        }
    }

    #[test]
    fn minus_branch_swaps_sequences_two_and_three() {
        for k in 0..4 {
            let h = potential(k);
            for (j, other) in [(2u8, 3u8), (3, 2)] {
                let f = zero_mode_from_superpotentials(k, j, Branch::Minus);
                let got = h.strip_weight(&f).unwrap();
                assert!(got.is_proportional(&zero_mode(k, other).poly), "k={k} j={j}");
                assert_eq!(
                    zero_mode_energy_branch(k, j, Branch::Minus),
                    zero_mode_energy_branch(k, other, Branch::Plus)
                );
            }
        }
    }

    #[test]
    fn eigen_equation_and_mutation() {
        assert!(hamiltonian_residual(&zero_mode(2, 1)).is_zero());
        assert!(hamiltonian_residual(&zero_mode(3, 2)).is_zero());
        let bad = zero_mode(1, 1).with_energy(rat(1, 7));
        assert!(!hamiltonian_residual(&bad).is_zero());
    }

    #[test]
    fn lower_annihilates_zero_modes() {
        for k in 0..4 {
            let h = potential(k);
            let lower = ladder(k, Direction::Lower);
            for j in 1..=3u8 {
                assert!(lower.apply(&h.weighted(&zero_mode(k, j).poly)).is_zero());
            }
        }
    }

    #[test]
    fn raise_on_oscillator_ground_state() {
        let m = raise_mode(&zero_mode(0, 1)).unwrap();
        assert!(m.poly.is_proportional(&p(&[0, -9, 0, 2])));
        assert_eq!(m.energy, rat(2, 1));
    }

    #[test]
    fn ladder_product_is_squared_constant() {
        for k in 0..3 {
            for j in 1..=3u8 {
                let mut m = zero_mode(k, j);
                for n in 0..3 {
                    let next = raise_mode(&m).unwrap();
                    assert!(hamiltonian_residual(&next).is_zero());
                    assert_eq!(next.poly.degree(), Some(mode_degree(k, j, n + 1) as usize));
                    let prod = ladder_ratio_product(&m, &next).unwrap();
                    assert_eq!(prod, scalar(&ladder_constant_sq(k, j, n)), "k={k} j={j} n={n}");
                    assert!(shape_invariance_defect(k, &m.function()).is_zero());
                    m = next;
                }
            }
        }
    }

    #[test]
    fn ladder_constants() {
        assert_eq!(ladder_constant_sq(0, 1, 0), rat(16, 9));
        assert_eq!(ladder_constant_sq(1, 1, 0), rat(16, 9));
        assert_eq!(ladder_constant_sq(0, 2, 0), rat(64, 9));
    }

    #[test]
    fn adjoint_is_an_involution() {
        let r = ladder(1, Direction::Raise);
        assert_eq!(r.adjoint().adjoint(), r);
        assert_eq!(r.adjoint(), ladder(1, Direction::Lower));
    }

    #[test]
    fn spectrum_order_and_disjointness() {
        let sp = spectrum(1, 8);
        let e: Vec<_> = sp.iter().map(|l| l.energy.clone()).collect();
        assert_eq!(
            e,
            vec![
                rat(0, 1),
                rat(2, 1),
                rat(8, 3),
                rat(10, 3),
                rat(4, 1),
                rat(14, 3),
                rat(16, 3),
                rat(6, 1)
            ]
        );
        for k in 0..6 {
            assert!(sequences_are_disjoint(k, 50));
        }
        assert_eq!(spectral_rank(1, 1, 2), 4);
        assert_eq!(spectral_rank(1, 2, 0), 2);
    }
}
