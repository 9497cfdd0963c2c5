//! Floating-point cross-checks: correctly rounded evaluation of exact
//! expressions, a finite-difference eigenvalue solver for `H^(k)`, and
//! Gauss-Legendre inner products of eigenfunctions.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::okamoto::okamoto;
use crate::ring::{ExactPoly, QuasiGaussian, RationalFn, SqrtTwoScalar};
use crate::spectral::{ladder, potential, Direction, ModeFunction};

/// Every numeric tolerance and discretization default in one place.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Half-width `L` of the truncated domain.
    pub half_width: f64,
    /// Grid points `N` of the coarsest finite-difference grid.
    pub points: usize,
    /// Allowed eigenvalue change between successive refinements.
    pub eigen_tol: f64,
    /// Bound on normalized cross inner products.
    pub orthogonality_tol: f64,
    /// Relative tolerance of numeric norm ratios.
    pub norm_rel_tol: f64,
    /// Width of one Gauss-Legendre panel.
    pub panel_width: f64,
    /// Nodes per panel.
    pub gauss_points: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            half_width: 25.0,
            points: 8001,
            eigen_tol: 1e-6,
            orthogonality_tol: 1e-8,
            norm_rel_tol: 1e-6,
            panel_width: 0.5,
            gauss_points: 10,
        }
    }
}

/// Symmetric grid on `[−L, L]` with `N` points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericGrid {
    pub half_width: f64,
    pub points: usize,
}

impl NumericGrid {
    pub fn new(half_width: f64, points: usize) -> Result<Self> {
        if half_width.is_nan() || half_width <= 0.0 || points < 3 || points & 1 == 0 {
            return Err(Error::InvalidIndices(format!(
                "grid needs L > 0 and odd N >= 3, got L={half_width}, N={points}"
            )));
        }
        Ok(Self { half_width, points })
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.points - 1) as f64
    }

    /// The grid with the spacing halved.
    pub fn refined(&self) -> Self {
        Self {
            half_width: self.half_width,
            points: 2 * self.points - 1,
        }
    }

    pub fn point(&self, i: usize) -> f64 {
        -self.half_width + i as f64 * self.spacing()
    }
}

impl Default for NumericGrid {
    fn default() -> Self {
        let t = Tolerances::default();
        Self {
            half_width: t.half_width,
            points: t.points,
        }
    }
}

/// Rounds a rational to the nearest float with a `bits`-bit significand,
/// ties to even.
pub fn round_rational(r: &BigRational, bits: u32) -> f64 {
    assert!((2..=53).contains(&bits), "precision must be 2..=53 bits");
    if r.is_zero() {
        return 0.0;
    }
    let n = r.numer().abs().to_biguint().expect("absolute value");
    let d = r.denom().to_biguint().expect("positive denominator");
    let mut e = n.bits() as i64 - d.bits() as i64 - bits as i64;
    let (q, rem, den) = loop {
        let (num, den) = if e >= 0 {
            (n.clone(), &d << e as usize)
        } else {
            (&n << (-e) as usize, d.clone())
        };
        let q = &num / &den;
        match q.bits().cmp(&(bits as u64)) {
            std::cmp::Ordering::Greater => e += 1,
            std::cmp::Ordering::Less => e -= 1,
            std::cmp::Ordering::Equal => {
                let rem = num - &q * &den;
                break (q, rem, den);
            }
        }
    };
    let twice: BigUint = rem << 1usize;
    let q = match twice.cmp(&den) {
        std::cmp::Ordering::Greater => q + 1u32,
        std::cmp::Ordering::Equal if q.bit(0) => q + 1u32,
        _ => q,
    };
    let mag = q.to_f64().expect("fits in a double") * 2f64.powi(e as i32);
    if r.is_negative() {
        -mag
    } else {
        mag
    }
}

/// Correctly rounded value of `a + b√2`. The irrational part is bracketed
/// with an integer square root until both ends round to the same float.
pub fn round_sqrt2(v: &SqrtTwoScalar, bits: u32) -> f64 {
    let (a, b) = (v.rational_part(), v.sqrt2_part());
    if b.is_zero() {
        return round_rational(a, bits);
    }
    let mut g = bits as usize + 64;
    loop {
        let s = (BigInt::from(2) << (2 * g)).sqrt();
        let scale = BigRational::from_integer(BigInt::from(1) << g);
        let lo_root = BigRational::from_integer(s.clone()) / &scale;
        let hi_root = BigRational::from_integer(s + 1) / &scale;
        let (x, y) = (a + b * &lo_root, a + b * &hi_root);
        let (fx, fy) = (round_rational(&x, bits), round_rational(&y, bits));
        if fx == fy {
            return fx;
        }
        g *= 2;
    }
}

/// Expressions that can be evaluated at a float point.
pub trait FloatEval {
    fn eval_float(&self, x: f64, bits: u32) -> Result<f64>;
}

/// Exact value at a float point by integer Horner: with `x = m·2^e` and
/// coefficients `(a_i + b_i√2)/D`, the sum is accumulated over integers and
/// divided once at the end.
fn eval_at_float(p: &ExactPoly, x: f64) -> Result<SqrtTwoScalar> {
    if !x.is_finite() {
        return Err(Error::InvalidIndices(format!("{x} is not a finite number")));
    }
    let (coeffs, den) = crate::ring::poly::integer_form(p);
    let Some(deg) = coeffs.len().checked_sub(1) else {
        return Ok(SqrtTwoScalar::zero());
    };
    let xr = BigRational::from_float(x).expect("finite");
    let (m, q) = (xr.numer().clone(), xr.denom().clone());
    let (mut a, mut b) = (BigInt::zero(), BigInt::zero());
    let mut qpow = BigInt::from(1);
    // Σ c_i m^i q^(deg−i), built from the top coefficient down.
    for (ai, bi) in coeffs.iter().rev() {
        a = &a * &m + ai * &qpow;
        b = &b * &m + bi * &qpow;
        qpow *= &q;
    }
    let scale = den * num_traits::pow(q, deg);
    Ok(SqrtTwoScalar::new(
        BigRational::new(a, scale.clone()),
        BigRational::new(b, scale),
    ))
}

impl FloatEval for ExactPoly {
    /// Correctly rounded.
    fn eval_float(&self, x: f64, bits: u32) -> Result<f64> {
        Ok(round_sqrt2(&eval_at_float(self, x)?, bits))
    }
}

impl FloatEval for RationalFn {
    /// Correctly rounded.
    fn eval_float(&self, x: f64, bits: u32) -> Result<f64> {
        let d = eval_at_float(self.denominator(), x)?;
        if d.is_zero() {
            return Err(Error::PoleAtPoint(x));
        }
        Ok(round_sqrt2(&(&eval_at_float(self.numerator(), x)? / &d), bits))
    }
}

impl FloatEval for QuasiGaussian {
    /// The rational part is correctly rounded; the Gaussian factor carries
    /// the error of the platform `exp`.
    fn eval_float(&self, x: f64, bits: u32) -> Result<f64> {
        let r = self.rational_part().eval_float(x, bits)?;
        Ok(r * (self.gauss_exponent() as f64 * x * x / 6.0).exp())
    }
}

/// Free-function form of [`FloatEval::eval_float`].
pub fn eval_float<E: FloatEval + ?Sized>(expr: &E, x: f64, bits: u32) -> Result<f64> {
    expr.eval_float(x, bits)
}

/// Horner evaluator on double-precision copies of exact coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatPoly {
    coeffs: Vec<f64>,
}

impl FloatPoly {
    pub fn new(p: &ExactPoly) -> Self {
        Self {
            coeffs: p.coeffs().iter().map(|c| round_sqrt2(c, 53)).collect(),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }
}

/// `V^(k)` sampled on the interior grid points.
fn potential_samples(k: i64, grid: &NumericGrid) -> Vec<f64> {
    let v = potential(k).potential();
    let (num, den) = (FloatPoly::new(v.numerator()), FloatPoly::new(v.denominator()));
    (1..grid.points - 1)
        .map(|i| {
            let x = grid.point(i);
            num.eval(x) / den.eval(x)
        })
        .collect()
}

/// Number of eigenvalues below `lambda` of the symmetric tridiagonal matrix
/// with diagonal `diag` and constant off-diagonal `off`.
fn count_below(diag: &[f64], off: f64, lambda: f64) -> usize {
    let off2 = off * off;
    let mut count = 0;
    let mut d = 1.0;
    for (i, &a) in diag.iter().enumerate() {
        d = if i == 0 { a - lambda } else { a - lambda - off2 / d };
        if d == 0.0 {
            d = f64::EPSILON * (a.abs() + lambda.abs() + 1.0);
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Lowest `count` eigenvalues of the central-difference discretization of
/// `−d²/dx² + V` with Dirichlet ends, by bisection on Sturm counts.
pub fn fd_eigenvalues_raw(k: i64, grid: &NumericGrid, count: usize) -> Vec<f64> {
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let diag: Vec<f64> = potential_samples(k, grid)
        .into_iter()
        .map(|v| v + 2.0 * inv_h2)
        .collect();
    let off = -inv_h2;
    let lo0 = diag.iter().cloned().fold(f64::INFINITY, f64::min) - 2.0 * inv_h2;
    let hi0 = diag.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + 2.0 * inv_h2;
    (0..count)
        .map(|i| {
            let (mut lo, mut hi) = (lo0, hi0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if count_below(&diag, off, mid) > i {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

/// Lowest `count` eigenvalues of `H^(k)`, extrapolated from three grids
/// (`h`, `h/2`, `h/4`) by Richardson steps on the `O(h²)` error. Fails with
/// `GridTooCoarse` if the two extrapolations differ by more than `tol`.
pub fn fd_eigensolve(k: i64, grid: &NumericGrid, count: usize, tol: f64) -> Result<Vec<f64>> {
    let g1 = grid.refined();
    let g2 = g1.refined();
    let (e0, (e1, e2)) = rayon::join(
        || fd_eigenvalues_raw(k, grid, count),
        || {
            rayon::join(
                || fd_eigenvalues_raw(k, &g1, count),
                || fd_eigenvalues_raw(k, &g2, count),
            )
        },
    );
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let r1 = (4.0 * e1[i] - e0[i]) / 3.0;
        let r2 = (4.0 * e2[i] - e1[i]) / 3.0;
        if (r2 - r1).abs() > tol {
            return Err(Error::GridTooCoarse {
                index: i,
                shift: (r2 - r1).abs(),
            });
        }
        out.push(r2);
    }
    Ok(out)
}

/// Gauss-Legendre nodes and weights on `[−1, 1]` by Newton iteration on
/// `P_n`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1, "need at least one node");
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for m in 2..=n {
                let p2 = ((2 * m - 1) as f64 * x * p1 - (m - 1) as f64 * p0) / m as f64;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 1 { x } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * p - pm) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

/// Composite Gauss-Legendre rule on `[−L, L]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Quadrature {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Quadrature {
    pub fn new(half_width: f64, panel_width: f64, points: usize) -> Self {
        let panels = (2.0 * half_width / panel_width).ceil() as usize;
        let w = 2.0 * half_width / panels as f64;
        let rule = gauss_legendre(points);
        let mut nodes = Vec::with_capacity(panels * points);
        let mut weights = Vec::with_capacity(panels * points);
        for p in 0..panels {
            let mid = -half_width + (p as f64 + 0.5) * w;
            for &(t, wt) in &rule {
                nodes.push(mid + 0.5 * w * t);
                weights.push(0.5 * w * wt);
            }
        }
        Self { nodes, weights }
    }

    pub fn from_tolerances(t: &Tolerances) -> Self {
        Self::new(t.half_width, t.panel_width, t.gauss_points)
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Values of `μ_k·P` at the quadrature nodes, with `P` and `Q_{k+1}`
/// correctly rounded at each node.
pub fn mode_samples(k: i64, poly: &ExactPoly, quad: &Quadrature) -> Result<Vec<f64>> {
    let weight = weight_samples(k, quad)?;
    quad.nodes
        .par_iter()
        .zip(&weight)
        .map(|(&x, w)| Ok(poly.eval_float(x, 53)? * w))
        .collect()
}

/// `μ_k` at the quadrature nodes.
fn weight_samples(k: i64, quad: &Quadrature) -> Result<Vec<f64>> {
    let qk1 = okamoto(k + 1, 0)?;
    quad.nodes
        .iter()
        .map(|&x| Ok((-x * x / 6.0).exp() / qk1.eval_float(x, 53)?))
        .collect()
}

fn dot(q: &Quadrature, a: &[f64], b: &[f64]) -> f64 {
    q.weights.iter().zip(a).zip(b).map(|((w, x), y)| w * x * y).sum()
}

/// `∫ a·b dx` over `[−L, L]`, refining the panels until two successive rules
/// agree to `tol` relative to `‖a‖‖b‖`.
pub fn quadrature_inner(a: &ModeFunction, b: &ModeFunction, grid: &NumericGrid, tol: f64) -> Result<f64> {
    if a.k != b.k {
        return Err(Error::InvalidIndices(format!(
            "inner product needs one level k, got {} and {}",
            a.k, b.k
        )));
    }
    let t = Tolerances::default();
    let mut width = t.panel_width;
    let mut prev: Option<f64> = None;
    for _ in 0..6 {
        let q = Quadrature::new(grid.half_width, width, t.gauss_points);
        let sa = mode_samples(a.k, &a.poly, &q)?;
        let sb = mode_samples(b.k, &b.poly, &q)?;
        let val = dot(&q, &sa, &sb);
        let scale = (dot(&q, &sa, &sa) * dot(&q, &sb, &sb)).sqrt().max(f64::MIN_POSITIVE);
        if let Some(p) = prev {
            if (val - p).abs() <= tol * scale {
                return Ok(val);
            }
        }
        prev = Some(val);
        width /= 2.0;
    }
    Ok(prev.expect("at least one rule evaluated"))
}

/// `⟨a, b⟩ / (‖a‖ ‖b‖)` on one quadrature rule.
pub fn normalized_inner(a: &ModeFunction, b: &ModeFunction, quad: &Quadrature) -> Result<f64> {
    let sa = mode_samples(a.k, &a.poly, quad)?;
    let sb = mode_samples(b.k, &b.poly, quad)?;
    Ok(dot(quad, &sa, &sb) / (dot(quad, &sa, &sa) * dot(quad, &sb, &sb)).sqrt())
}

/// Largest normalized cross inner product among distinct modes.
pub fn max_cross_overlap(modes: &[ModeFunction], quad: &Quadrature) -> Result<f64> {
    let samples: Vec<Vec<f64>> = modes
        .iter()
        .map(|m| mode_samples(m.k, &m.poly, quad))
        .collect::<Result<_>>()?;
    let norms: Vec<f64> = samples.iter().map(|s| dot(quad, s, s).sqrt()).collect();
    let mut worst: f64 = 0.0;
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            let c = dot(quad, &samples[i], &samples[j]) / (norms[i] * norms[j]);
            worst = worst.max(c.abs());
        }
    }
    Ok(worst)
}

/// `‖raise φ‖² / ‖φ‖²` by quadrature.
pub fn ladder_norm_ratio(mode: &ModeFunction, quad: &Quadrature) -> Result<f64> {
    let h = potential(mode.k);
    let raised = ladder(mode.k, Direction::Raise).apply(&h.weighted(&mode.poly));
    let r = h.strip_weight(&raised)?;
    let sa = mode_samples(mode.k, &mode.poly, quad)?;
    let sr = mode_samples(mode.k, &r, quad)?;
    Ok(dot(quad, &sr, &sr) / dot(quad, &sa, &sa))
}

/// `(x, V^(k)(x))` at `samples` evenly spaced points of `[a, b]`.
pub fn sample_potential(k: i64, a: f64, b: f64, samples: usize) -> Result<Vec<(f64, f64)>> {
    sample(&potential(k).potential(), a, b, samples)
}

/// `(x, μ_k(x)·P(x))` at `samples` evenly spaced points of `[a, b]`.
pub fn sample_mode(mode: &ModeFunction, a: f64, b: f64, samples: usize) -> Result<Vec<(f64, f64)>> {
    sample(&mode.function(), a, b, samples)
}

/// `(x, f(x))` at `samples` evenly spaced points of `[a, b]`.
pub fn sample<E: FloatEval + ?Sized>(expr: &E, a: f64, b: f64, samples: usize) -> Result<Vec<(f64, f64)>> {
    linspace(a, b, samples)
        .into_iter()
        .map(|x| Ok((x, expr.eval_float(x, 53)?)))
        .collect()
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![a],
        _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// Sign of a big integer as `−1`, `0` or `1`.
pub fn bigint_sign(v: &BigInt) -> i32 {
    match v.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
