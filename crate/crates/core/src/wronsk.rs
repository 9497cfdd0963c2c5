//! Hermite-Wronskian representations: Okamoto polynomials as Wronskians of
//! scaled Hermite seeds, the potential as a Darboux-Crum transform of the
//! oscillator, Wronskian eigenfunctions and exceptional Hermite polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::okamoto::okamoto;
use crate::ring::{rat, wronskian_poly, wronskian_quasi, ExactPoly, QuasiGaussian, RationalFn, SqrtTwoScalar};
use crate::rootcount::sturm_count;
use crate::spectral::{mode_energy, potential, ModeFunction};
use crate::ttrr::ttrr_sequence;

/// Which generating function a seed comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeedKind {
    /// `ψ_r`: coefficient of `ξ^r` in `exp(2xξ − 3ξ²)`.
    Plain,
    /// `Ψ_r`: coefficient of `ξ^r` in `exp(2xξ + 3ξ²)`.
    Pseudo,
}

/// A scaled Hermite polynomial `ψ_r` or `Ψ_r`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HermiteSeed {
    pub r: i64,
    pub kind: SeedKind,
    pub poly: ExactPoly,
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Expands the generating function: the `x^{r−2m}` coefficient is
/// `2^{r−2m}(∓3)^m / ((r−2m)! m!)`.
pub fn hermite_seed(r: i64, kind: SeedKind) -> HermiteSeed {
    assert!(r >= 0, "seed index must be nonnegative");
    let sign = match kind {
        SeedKind::Plain => -1,
        SeedKind::Pseudo => 1,
    };
    let mut coeffs = vec![BigRational::zero(); r as usize + 1];
    for m in 0..=r / 2 {
        let p = r - 2 * m;
        let num = BigInt::from(2).pow(p as u32) * BigInt::from(3 * sign).pow(m as u32);
        coeffs[p as usize] = BigRational::new(num, factorial(p) * factorial(m));
    }
    HermiteSeed {
        r,
        kind,
        poly: ExactPoly::from_rationals(coeffs),
    }
}

/// Physicists' Hermite polynomial from `H_{r+1} = 2x H_r − 2r H_{r−1}`.
pub fn physicist_hermite(r: i64) -> ExactPoly {
    assert!(r >= 0, "degree must be nonnegative");
    let two_x = ExactPoly::from_ints(&[0, 2]);
    let (mut prev, mut cur) = (ExactPoly::zero(), ExactPoly::one());
    for i in 0..r {
        let next = &(&two_x * &cur) - &prev.scale(&SqrtTwoScalar::from_integer(2 * i));
        prev = cur;
        cur = next;
    }
    cur
}

fn check_indices(indices: &[i64]) -> Result<()> {
    for (i, &a) in indices.iter().enumerate() {
        if a < 0 {
            return Err(Error::MalformedIndexList(format!("negative index {a}")));
        }
        if indices[..i].contains(&a) {
            return Err(Error::DuplicateIndex(a));
        }
    }
    Ok(())
}

/// `Wr(ψ_{i₁}, …)` or `Wr(Ψ_{i₁}, …)`; the empty Wronskian is 1.
pub fn index_wronskian(indices: &[i64], kind: SeedKind) -> Result<ExactPoly> {
    check_indices(indices)?;
    if indices.is_empty() {
        return Ok(ExactPoly::one());
    }
    let seeds: Vec<ExactPoly> = indices.iter().map(|&r| hermite_seed(r, kind).poly).collect();
    wronskian_poly(&seeds)
}

/// Wronskian of the dressed seeds `e^{−x²/6}ψ_r` or `e^{x²/6}Ψ_r`.
pub fn dressed_wronskian(indices: &[i64], kind: SeedKind) -> Result<QuasiGaussian> {
    check_indices(indices)?;
    if indices.is_empty() {
        return Ok(QuasiGaussian::from_poly(ExactPoly::one(), 0));
    }
    let s = match kind {
        SeedKind::Plain => -1,
        SeedKind::Pseudo => 1,
    };
    let seeds: Vec<QuasiGaussian> = indices
        .iter()
        .map(|&r| QuasiGaussian::from_poly(hermite_seed(r, kind).poly, s))
        .collect();
    wronskian_quasi(&seeds)
}

/// A partition `λ₁ ≤ … ≤ λ_ℓ` and the Wronskian indices of its double
/// partition `(λ₁, λ₁, …, λ_ℓ, λ_ℓ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionIndex {
    lambda: Vec<i64>,
}

impl PartitionIndex {
    pub fn new(lambda: Vec<i64>) -> Result<Self> {
        if lambda.iter().any(|&l| l < 0) || lambda.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::MalformedIndexList(format!(
                "partition {lambda:?} must be nonnegative and nondecreasing"
            )));
        }
        Ok(Self { lambda })
    }

    /// `λ_k = (1, 2, …, k)`.
    pub fn staircase(k: i64) -> Self {
        Self {
            lambda: (1..=k).collect(),
        }
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    /// `ν_p = λ²_p + p − 1` over the double partition; consecutive pairs
    /// `(λ_j + 2j − 2, λ_j + 2j − 1)`.
    pub fn wronskian_indices(&self) -> Vec<i64> {
        self.lambda
            .iter()
            .flat_map(|&l| [l, l])
            .enumerate()
            .map(|(p, l)| l + p as i64)
            .collect()
    }
}

/// `I^(k) = {1, 2, 4, 5, …, 3k − 2, 3k − 1}`.
pub fn index_set(k: i64) -> Vec<i64> {
    (1..=k).flat_map(|i| [3 * i - 2, 3 * i - 1]).collect()
}

/// `{2, 5, …, 3k − 1}`, the seeds of the state-adding form.
pub fn adding_index_set(k: i64) -> Vec<i64> {
    (1..=k).map(|i| 3 * i - 1).collect()
}

/// Which Wronskian form represents `Q_{m,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OkamotoForm {
    /// Seeds `ψ_r`.
    Plain,
    /// Seeds `Ψ_r`.
    Pseudo,
}

fn steps(first: i64, last: i64) -> impl Iterator<Item = i64> {
    (0..).map(move |i| first + 3 * i).take_while(move |&v| v <= last)
}

/// Seed indices for `Q_{m,n}`. With `A(s) = {1, 4, …, 3s − 5}` and
/// `B(t) = {2, 5, …, 3t − 4}`: the plain form uses `A(m+n) ∪ B(m)` (only
/// `B(n)` when `m = 0`), the pseudo form `A(m+n) ∪ B(n)` (only `B(m)` when
/// `n = 0`).
pub fn okamoto_index_list(m: i64, n: i64, form: OkamotoForm) -> Result<Vec<i64>> {
    if m < 0 || n < 0 || m + n < 1 {
        return Err(Error::MalformedIndexList(format!(
            "need m, n >= 0 and m + n >= 1, got ({m}, {n})"
        )));
    }
    let a = |s: i64| steps(1, 3 * s - 5);
    let b = |t: i64| steps(2, 3 * t - 4);
    let (outer, inner) = match form {
        OkamotoForm::Plain => (m, n),
        OkamotoForm::Pseudo => (n, m),
    };
    Ok(if outer == 0 {
        b(inner).collect()
    } else {
        a(m + n).chain(b(outer)).collect()
    })
}

/// `Q_{m,n}` up to a constant as a Wronskian of `ψ` or `Ψ` seeds; fails if
/// the result is not proportional to the recurrence table entry.
pub fn okamoto_via_wronskian(m: i64, n: i64, form: OkamotoForm) -> Result<ExactPoly> {
    let kind = match form {
        OkamotoForm::Plain => SeedKind::Plain,
        OkamotoForm::Pseudo => SeedKind::Pseudo,
    };
    let w = index_wronskian(&okamoto_index_list(m, n, form)?, kind)?;
    if !w.is_proportional(&*okamoto(m, n)?) {
        return Err(Error::InvalidIndices(format!(
            "wronskian for ({m}, {n}) is not proportional to the table entry"
        )));
    }
    Ok(w)
}

/// `(ln g)''` for `g = R·e^{s x²/6}`.
pub fn log_second_derivative(g: &QuasiGaussian) -> Result<RationalFn> {
    let r = g.rational_part();
    let log1 = r.derivative().checked_div(r)?;
    Ok(&log1.derivative() + &RationalFn::constant(SqrtTwoScalar::from_ratio(g.gauss_exponent() as i64, 3)))
}

fn oscillator() -> RationalFn {
    RationalFn::from_poly(ExactPoly::new(vec![
        SqrtTwoScalar::from_ratio(-1, 3),
        SqrtTwoScalar::zero(),
        SqrtTwoScalar::from_ratio(1, 9),
    ]))
}

/// State-deleting or state-adding Wronskian form of the potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PotentialForm {
    Deleting,
    Adding,
}

/// Constant term of the state-adding form that makes it equal to the other
/// representations: `2k − 1/3`.
pub fn adding_form_constant(k: i64) -> BigRational {
    rat(6 * k - 1, 3)
}

/// The constant `8k/3 − 1/3` as published for the state-adding form.
pub fn adding_form_constant_as_printed(k: i64) -> BigRational {
    rat(8 * k - 1, 3)
}

/// `x²/9 − 2(ln W̃)'' + c` with `W̃` the dressed Wronskian of `I^(k)` and
/// `c = −1/3` (deleting), or of `{2, 5, …, 3k − 1}` with
/// `c = adding_form_constant(k)` (adding).
pub fn wronskian_potential(k: i64, form: PotentialForm) -> Result<RationalFn> {
    let (w, c) = match form {
        PotentialForm::Deleting => (dressed_wronskian(&index_set(k), SeedKind::Plain)?, rat(-1, 3)),
        PotentialForm::Adding => (
            dressed_wronskian(&adding_index_set(k), SeedKind::Pseudo)?,
            adding_form_constant(k),
        ),
    };
    wronskian_potential_with_constant(&w, &c)
}

fn wronskian_potential_with_constant(w: &QuasiGaussian, c: &BigRational) -> Result<RationalFn> {
    let x2 = RationalFn::from_poly(ExactPoly::monomial(SqrtTwoScalar::from_ratio(1, 9), 2));
    let l2 = log_second_derivative(w)?.scale(&SqrtTwoScalar::from_integer(-2));
    Ok(&(&x2 + &l2) + &RationalFn::constant(SqrtTwoScalar::from_rational(c.clone())))
}

/// The state-adding form evaluated with the published constant.
pub fn wronskian_potential_adding_as_printed(k: i64) -> Result<RationalFn> {
    let w = dressed_wronskian(&adding_index_set(k), SeedKind::Pseudo)?;
    wronskian_potential_with_constant(&w, &adding_form_constant_as_printed(k))
}

/// `σ_{n;1} = 3n`, `σ_{n;2} = 3n + 3k + 1`, `σ_{n;3} = 3n + 3k + 2`.
pub fn mode_index(k: i64, j: u8, n: i64) -> i64 {
    match j {
        1 => 3 * n,
        2 => 3 * n + 3 * k + 1,
        3 => 3 * n + 3 * k + 2,
        _ => panic!("sequence index must be 1, 2 or 3"),
    }
}

/// `μ_k · P` from `e^{−x²/6}·𝒲_{I^(k) ∪ {σ}} / 𝒲_{I^(k)}`.
pub fn wronskian_mode(k: i64, j: u8, n: i64) -> Result<ModeFunction> {
    let base = index_set(k);
    let sigma = mode_index(k, j, n);
    if base.contains(&sigma) {
        return Err(Error::DuplicateIndex(sigma));
    }
    let mut all = base.clone();
    all.push(sigma);
    let num = index_wronskian(&all, SeedKind::Plain)?;
    let den = index_wronskian(&base, SeedKind::Plain)?;
    let f = QuasiGaussian::new(RationalFn::new(num, den)?, -1);
    let poly = potential(k).strip_weight(&f)?;
    Ok(ModeFunction {
        k,
        j,
        n,
        poly,
        energy: mode_energy(k, j, n),
    })
}

/// `Wr[H_{ν₁}, H_{ν₁+1}, …, H_{ν_ℓ}, H_{ν_ℓ+1}, H_n]` in the plain Hermite
/// argument.
pub fn exceptional_hermite(lambda: &PartitionIndex, n: i64) -> Result<ExactPoly> {
    let mut idx = lambda.wronskian_indices();
    if idx.contains(&n) {
        return Err(Error::ExcludedDegree(n));
    }
    idx.push(n);
    let hs: Vec<ExactPoly> = idx.iter().map(|&r| physicist_hermite(r)).collect();
    wronskian_poly(&hs)
}

/// `P_{n;j}^{(k)}(√3·x)` from the recurrence, with the odd power of `√3`
/// dropped; fails unless it is proportional to the exceptional Hermite
/// polynomial of the staircase partition at degree `σ_{n;j}`.
pub fn xhermite_from_ttrr(k: i64, j: u8, n: i64) -> Result<ExactPoly> {
    let seq = ttrr_sequence(k, j, n as usize)?;
    let p = &seq[n as usize].poly;
    let scaled = p
        .sqrt3_rescale()
        .ok_or_else(|| Error::InvalidIndices(format!("P for ({k}, {j}, {n}) has mixed parity")))?;
    let h = exceptional_hermite(&PartitionIndex::staircase(k), mode_index(k, j, n))?;
    if !scaled.is_proportional(&h) {
        return Err(Error::InvalidIndices(format!(
            "rescaled P for ({k}, {j}, {n}) is not proportional to the exceptional Hermite polynomial"
        )));
    }
    Ok(scaled)
}

/// The published proportionality constant
/// `3^{k(k+1)/4 + 3k²/2 + σ/2} · (∏_{p≤k} ν_p!) · σ!` split into its power
/// of three and its integer factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XHermiteConstant {
    #[serde(serialize_with = "serialize_rational")]
    pub three_exponent: BigRational,
    #[serde(serialize_with = "serialize_bigint")]
    pub factor: BigInt,
}

fn serialize_rational<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::ring::json::rational_to_string(r))
}

fn serialize_bigint<S: serde::Serializer>(r: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn xhermite_constant(k: i64, j: u8, n: i64) -> XHermiteConstant {
    let sigma = mode_index(k, j, n);
    let nu = index_set(k);
    let three_exponent = rat(k * (k + 1), 4) + rat(3 * k * k, 2) + rat(sigma, 2);
    let factor = nu
        .iter()
        .take(k as usize)
        .fold(factorial(sigma), |acc, &v| acc * factorial(v));
    XHermiteConstant { three_exponent, factor }
}

/// Darboux-Crum chain from the oscillator `x²/9 − 1/3` that deletes the
/// listed levels, built one first-order step at a time: with seeds
/// `u_r = e^{−x²/6} ψ_r`, each step takes `β = −(ln u)'`, adds `2β'` to the
/// potential and maps the remaining seeds by `d/dx + β`.
pub fn susy_chain_potential(levels: &[i64]) -> Result<RationalFn> {
    check_indices(levels)?;
    if let Some(&l) = levels.iter().find(|&&l| l < 1) {
        return Err(Error::MalformedIndexList(format!("level {l} must be at least 1")));
    }
    let mut seeds: Vec<QuasiGaussian> = levels
        .iter()
        .map(|&r| QuasiGaussian::from_poly(hermite_seed(r, SeedKind::Plain).poly, -1))
        .collect();
    let mut v = oscillator();
    let third = RationalFn::from_poly(ExactPoly::monomial(SqrtTwoScalar::from_ratio(1, 3), 1));
    let two = SqrtTwoScalar::from_integer(2);
    while !seeds.is_empty() {
        let u = seeds.remove(0);
        let r = u.rational_part();
        // −(ln u)' = x/3 − R'/R for u = R·e^{−x²/6}
        let beta = &third - &r.derivative().checked_div(r)?;
        v = &v + &beta.derivative().scale(&two);
        seeds = seeds.iter().map(|s| s.apply_first_order(1, &beta)).collect();
    }
    let real_poles = sturm_count(v.denominator()).n_total;
    if real_poles > 0 {
        return Err(Error::SingularWronskian(real_poles));
    }
    Ok(v)
}

fn entries(base: &[i64], extra: &[i64], kind: SeedKind) -> Result<ExactPoly> {
    let mut all = base.to_vec();
    all.extend_from_slice(extra);
    index_wronskian(&all, kind)
}

/// Jacobi form of the Wronskian identity:
/// `Wr[Wr(F, a), Wr(F, b)] ∝ Wr(F)·Wr(F, a, b)`.
pub fn wronskian_identity_check(base: &[i64], extra: (i64, i64), kind: SeedKind) -> Result<bool> {
    let (a, b) = extra;
    let lhs = wronskian_poly(&[entries(base, &[a], kind)?, entries(base, &[b], kind)?])?;
    let rhs = &index_wronskian(base, kind)? * &entries(base, &[a, b], kind)?;
    Ok(lhs.is_proportional(&rhs) || (lhs.is_zero() && rhs.is_zero()))
}

/// The identity in its published arrangement:
/// `Wr[Wr(F), Wr(F, a, b)] ∝ Wr(F, a)·Wr(F, b)`.
pub fn wronskian_identity_as_printed(base: &[i64], extra: (i64, i64), kind: SeedKind) -> Result<bool> {
    let (a, b) = extra;
    let lhs = wronskian_poly(&[index_wronskian(base, kind)?, entries(base, &[a, b], kind)?])?;
    let rhs = &entries(base, &[a], kind)? * &entries(base, &[b], kind)?;
    Ok(lhs.is_proportional(&rhs) || (lhs.is_zero() && rhs.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::zero_mode;

    fn p(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(cs)
    }

    fn s(num: i64, den: i64) -> SqrtTwoScalar {
        SqrtTwoScalar::from_ratio(num, den)
    }

    #[test]
    fn seed_examples() {
        assert_eq!(hermite_seed(2, SeedKind::Plain).poly, p(&[-3, 0, 2]));
        let psi3 = ExactPoly::new(vec![s(0, 1), s(-6, 1), s(0, 1), s(4, 3)]);
        assert_eq!(hermite_seed(3, SeedKind::Plain).poly, psi3);
        assert_eq!(hermite_seed(2, SeedKind::Pseudo).poly, *okamoto(2, 0).unwrap());
    }

    #[test]
    fn derivative_ladder() {
        for kind in [SeedKind::Plain, SeedKind::Pseudo] {
            for r in 1..=30 {
                let d = hermite_seed(r, kind).poly.derivative();
                assert_eq!(d, hermite_seed(r - 1, kind).poly.scale(&s(2, 1)), "r={r}");
            }
        }
    }

    #[test]
    fn seeds_are_rescaled_hermite() {
        for r in 0..12i64 {
            let q = hermite_seed(r, SeedKind::Plain).poly.sqrt3_rescale().unwrap();
            // ψ_r(x) = 3^{r/2} H_r(x/√3) / r!, so H_r(x) = r! q(x) / 3^{⌊r/2⌋}.
            let f = BigRational::new(factorial(r), BigInt::from(3).pow((r / 2) as u32));
            assert_eq!(q.scale(&SqrtTwoScalar::from_rational(f)), physicist_hermite(r), "r={r}");
        }
        assert_eq!(physicist_hermite(3), p(&[0, -12, 0, 8]));
    }

    #[test]
    fn okamoto_wronskians() {
        assert!(okamoto_via_wronskian(2, 0, OkamotoForm::Pseudo)
            .unwrap()
            .is_proportional(&p(&[3, 0, 2])));
        assert_eq!(okamoto_index_list(3, 0, OkamotoForm::Plain).unwrap(), vec![1, 4, 2, 5]);
        for m in 0..5 {
            for n in 0..5 {
                if m + n == 0 {
                    continue;
                }
                for form in [OkamotoForm::Plain, OkamotoForm::Pseudo] {
                    okamoto_via_wronskian(m, n, form).unwrap_or_else(|e| panic!("({m},{n}) {form:?}: {e}"));
                }
            }
        }
        assert!(okamoto_index_list(0, 0, OkamotoForm::Plain).is_err());
    }

    #[test]
    fn three_potential_forms_agree() {
        for k in 0..4 {
            let v = potential(k).potential();
            assert_eq!(
                wronskian_potential(k, PotentialForm::Deleting).unwrap(),
                v,
                "deleting k={k}"
            );
            assert_eq!(
                wronskian_potential(k, PotentialForm::Adding).unwrap(),
                v,
                "adding k={k}"
            );
            assert_eq!(susy_chain_potential(&index_set(k)).unwrap(), v, "chain k={k}");
        }
        let v1 = wronskian_potential(1, PotentialForm::Deleting).unwrap();
        assert_eq!(v1.eval(&s(1, 1)).unwrap(), s(178, 225));
    }

    #[test]
    fn printed_adding_constant_is_off_by_two_thirds_k() {
        for k in 1..4 {
            let printed = wronskian_potential_adding_as_printed(k).unwrap();
            let diff = &printed - &potential(k).potential();
            assert_eq!(diff, RationalFn::constant(s(2 * k, 3)), "k={k}");
        }
    }

    #[test]
    fn chain_rejects_singular_deletions() {
        assert_eq!(susy_chain_potential(&[]).unwrap(), oscillator());
        assert!(matches!(susy_chain_potential(&[1]), Err(Error::SingularWronskian(_))));
        assert!(susy_chain_potential(&[0]).is_err());
    }

    #[test]
    fn wronskian_modes_match_closed_forms() {
        for k in 0..4 {
            for j in 1..=3u8 {
                let w = wronskian_mode(k, j, 0).unwrap();
                assert!(w.poly.is_proportional(&zero_mode(k, j).poly), "k={k} j={j}");
            }
        }
        let m = wronskian_mode(1, 1, 2).unwrap();
        assert!(m.poly.is_proportional(&p(&[81, 0, -162, 0, -36, 0, 8])));
        for n in 0..5 {
            let m = wronskian_mode(0, 1, n).unwrap();
            assert!(m.poly.is_proportional(&hermite_seed(3 * n, SeedKind::Plain).poly));
        }
    }

    #[test]
    fn partition_indices() {
        assert_eq!(PartitionIndex::staircase(3).wronskian_indices(), index_set(3));
        assert_eq!(index_set(2), vec![1, 2, 4, 5]);
        assert!(PartitionIndex::new(vec![2, 1]).is_err());
    }

    #[test]
    fn exceptional_hermite_examples() {
        let empty = PartitionIndex::staircase(0);
        assert_eq!(exceptional_hermite(&empty, 2).unwrap(), p(&[-2, 0, 4]));
        // Wr[H1, H2, H0] = H0 · Wr[H1', H2'] for constant H0 = 1
        let one = PartitionIndex::staircase(1);
        let (h1, h2) = (physicist_hermite(1), physicist_hermite(2));
        let by_hand = wronskian_poly(&[h1.derivative(), h2.derivative()]).unwrap();
        assert_eq!(exceptional_hermite(&one, 0).unwrap(), by_hand);
        assert_eq!(exceptional_hermite(&one, 2), Err(Error::ExcludedDegree(2)));
        assert!(xhermite_from_ttrr(1, 1, 1).is_ok());
        assert!(xhermite_from_ttrr(1, 2, 0).is_ok());
        assert!(xhermite_from_ttrr(2, 3, 0).is_ok());
    }

    #[test]
    fn wronskian_identities() {
        assert!(wronskian_identity_check(&[1], (2, 3), SeedKind::Plain).unwrap());
        assert!(wronskian_identity_check(&[], (1, 2), SeedKind::Plain).unwrap());
        assert!(wronskian_identity_check(&[1, 2], (4, 5), SeedKind::Plain).unwrap());
        assert!(wronskian_identity_check(&[2, 5], (1, 7), SeedKind::Pseudo).unwrap());
    }

    #[test]
    fn printed_identity_arrangement_fails() {
        assert!(!wronskian_identity_as_printed(&[1], (2, 3), SeedKind::Plain).unwrap());
    }
}
