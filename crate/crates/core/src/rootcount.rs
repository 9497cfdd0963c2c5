//! Exact real-root counting with Sturm sequences over Q(√2), and the zero
//! counts predicted for Okamoto polynomials, eigenfunctions and Hermite
//! Wronskians.

use serde::Serialize;

use crate::ring::{ExactPoly, Parity, SqrtTwoScalar};

/// Real zeros of a polynomial, split by location.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCountReport {
    /// Multiplicity of the root at `x = 0`.
    pub n0: usize,
    /// Distinct positive roots.
    pub n_plus: usize,
    /// Distinct negative roots.
    pub n_minus: usize,
    /// `n0 + n_plus + n_minus`.
    pub n_total: usize,
    /// Whether `p / x^n0` is squarefree, so the nonzero roots are simple.
    pub squarefree: bool,
}

/// Number of sign changes in a sequence, zeros skipped.
fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Rescales by a positive constant so that the leading coefficient has
/// absolute value one; signs are untouched.
fn positive_normalize(p: &ExactPoly) -> ExactPoly {
    match p.leading() {
        None => ExactPoly::zero(),
        Some(l) => p.scale(&l.abs().inv().expect("nonzero leading coefficient")),
    }
}

/// Sturm chain `f, f', −rem(…)`.
pub fn sturm_chain(f: &ExactPoly) -> Vec<ExactPoly> {
    let mut chain = vec![positive_normalize(f)];
    let d = f.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(positive_normalize(&d));
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(positive_normalize(&-r));
    }
    chain
}

fn sign_at_zero(p: &ExactPoly) -> i32 {
    p.coeff(0).signum()
}

fn sign_at_pos_inf(p: &ExactPoly) -> i32 {
    p.leading_sign()
}

fn sign_at_neg_inf(p: &ExactPoly) -> i32 {
    let s = p.leading_sign();
    match p.degree() {
        Some(d) if d % 2 == 1 => -s,
        _ => s,
    }
}

/// Distinct roots in `(0, ∞)` and `(−∞, 0)` of `f` with `f(0) ≠ 0`.
fn count_split(f: &ExactPoly) -> (usize, usize) {
    let chain = sturm_chain(f);
    let v0 = variations(chain.iter().map(sign_at_zero));
    let vp = variations(chain.iter().map(sign_at_pos_inf));
    let vm = variations(chain.iter().map(sign_at_neg_inf));
    (v0 - vp, vm - v0)
}

/// Counts the real roots of a nonzero polynomial.
///
/// The root at zero is removed by exact division by `x`; an even remainder is
/// counted through `y = x²`, where each positive root gives a `±` pair.
pub fn sturm_count(p: &ExactPoly) -> RootCountReport {
    assert!(!p.is_zero(), "root counting needs a nonzero polynomial");
    let n0 = p.coeffs().iter().take_while(|c| num_traits::Zero::is_zero(*c)).count();
    let rest = ExactPoly::new(p.coeffs()[n0..].to_vec());
    let sqf = rest.squarefree_part();
    let squarefree = sqf.degree() == rest.degree();
    let (n_plus, n_minus) = if sqf.is_constant() {
        (0, 0)
    } else if let Some(r) = sqf.even_to_y() {
        let (pos, _) = count_split(&r);
        (pos, pos)
    } else {
        count_split(&sqf)
    };
    RootCountReport {
        n0,
        n_plus,
        n_minus,
        n_total: n0 + n_plus + n_minus,
        squarefree,
    }
}

/// True when `p` has no real zeros.
pub fn is_nodeless(p: &ExactPoly) -> bool {
    sturm_count(p).n_total == 0
}

/// The zero-count table for generalized Okamoto polynomials, indexed by the
/// parities of `m` and `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OkamotoCountPrediction {
    pub n0: usize,
    /// The positive-root column as published.
    pub n_plus_listed: usize,
    /// The total column, treated as normative.
    pub n_total: usize,
}

impl OkamotoCountPrediction {
    /// Whether the published columns satisfy `n_total = n0 + 2·n_plus`.
    pub fn is_consistent(&self) -> bool {
        self.n0 + 2 * self.n_plus_listed == self.n_total
    }

    /// Positive roots implied by the total column.
    pub fn n_plus_from_total(&self) -> usize {
        (self.n_total - self.n0) / 2
    }
}

/// Predicted zero counts of `Q_{m,n}` for `m, n ≥ 0`.
pub fn predicted_okamoto_count(m: i64, n: i64) -> OkamotoCountPrediction {
    assert!(m >= 0 && n >= 0, "prediction covers m, n >= 0");
    let (hm, hn) = ((m / 2) as usize, (n / 2) as usize);
    let (n0, n_plus_listed, n_total) = match (m % 2, n % 2) {
        (0, 0) => (0, hn, 2 * hn),
        (0, _) => (0, hn + hm, 2 * (hn + hm)),
        (_, 0) => (0, hn, 2 * hn),
        _ => (1, hn, 2 * (hn + hm) + 1),
    };
    OkamotoCountPrediction {
        n0,
        n_plus_listed,
        n_total,
    }
}

/// Predicted number of real zeros of the eigenfunction `φ_{n;j}` at level `k`.
pub fn predicted_mode_count(k: i64, j: u8, n: i64) -> i64 {
    match j {
        1 if n <= k => n,
        1 => 3 * n - 2 * k,
        2 => 3 * n + k + 1,
        3 => 3 * n + k + 2,
        _ => panic!("sequence index must be 1, 2 or 3"),
    }
}

/// Root counts predicted for `Wr(H_ξ₁, …, H_ξℓ)` by the counting conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConjectureCount {
    pub n0: usize,
    /// `4·n₊` as evaluated from the formula; not divisible by four means the
    /// formula does not give an integer for this index set.
    pub four_n_plus: i64,
}

impl ConjectureCount {
    /// The prediction as a report, or `None` if `n₊` is not a nonnegative
    /// integer.
    pub fn report(&self) -> Option<RootCountReport> {
        if self.four_n_plus < 0 || self.four_n_plus % 4 != 0 {
            return None;
        }
        let np = (self.four_n_plus / 4) as usize;
        Some(RootCountReport {
            n0: self.n0,
            n_plus: np,
            n_minus: np,
            n_total: self.n0 + 2 * np,
            squarefree: true,
        })
    }
}

/// Evaluates the counting formula exactly as stated:
/// `n0 = d(d+1)/2` with `d = #odd − #even`, and
/// `n₊ = ½(Σ_j (−1)^{ℓ−j} λ̃_j − |d + (ℓ mod 2)|/2)` with `λ̃_j = ξ_j − j + 1`.
pub fn felder_conjecture_count(xi: &[i64]) -> ConjectureCount {
    assert!(
        xi.windows(2).all(|w| w[0] < w[1]) && xi.first().is_none_or(|&x| x >= 0),
        "indices must be strictly increasing and nonnegative"
    );
    let l = xi.len() as i64;
    let odd = xi.iter().filter(|&&v| v % 2 != 0).count() as i64;
    let d = odd - (l - odd);
    let n0 = (d * (d + 1) / 2) as usize;
    let alt: i64 = xi
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let j = i as i64 + 1;
            let lam = x - j + 1;
            if (l - j) % 2 == 0 {
                lam
            } else {
                -lam
            }
        })
        .sum();
    let four_n_plus = 2 * alt - (d + l % 2).abs();
    ConjectureCount { n0, four_n_plus }
}

/// Sign of a polynomial at a point, exactly.
pub fn sign_at(p: &ExactPoly, x: &SqrtTwoScalar) -> i32 {
    p.eval(x).signum()
}

/// True if `p` is parity-definite.
pub fn is_parity_definite(p: &ExactPoly) -> bool {
    matches!(p.parity(), Some(Parity::Even | Parity::Odd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::okamoto::okamoto;

    fn p(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(cs)
    }

    #[test]
    fn quartic_with_one_positive_root() {
        let r = sturm_count(&p(&[-9, 0, 12, 0, 4]));
        assert_eq!((r.n0, r.n_plus, r.n_minus, r.n_total), (0, 1, 1, 2));
        assert!(r.squarefree);
    }

    #[test]
    fn okamoto_k3_is_nodeless() {
        assert_eq!(sturm_count(&okamoto(3, 0).unwrap()).n_total, 0);
    }

    #[test]
    fn mode_polynomial_count() {
        assert_eq!(sturm_count(&p(&[81, 0, -162, 0, -36, 0, 8])).n_total, 4);
    }

    #[test]
    fn zero_at_origin_and_repeated_roots() {
        // x^3 (x - 1)^2 (x + 2)
        let f = &(&p(&[0, 0, 0, 1]) * &p(&[1, -2, 1])) * &p(&[2, 1]);
        let r = sturm_count(&f);
        assert_eq!((r.n0, r.n_plus, r.n_minus), (3, 1, 1));
        assert!(!r.squarefree);
    }

    #[test]
    fn sqrt2_coefficients() {
        // x^2 − √2 has two real roots; x^2 + √2 − 1 has none.
        let r2 = SqrtTwoScalar::sqrt2();
        let a = ExactPoly::new(vec![-&r2, SqrtTwoScalar::from_integer(0), 1.into()]);
        assert_eq!(sturm_count(&a).n_total, 2);
        let b = ExactPoly::new(vec![&r2 - &SqrtTwoScalar::from_integer(1), 0.into(), 1.into()]);
        assert_eq!(sturm_count(&b).n_total, 0);
    }

    #[test]
    fn table_predictions() {
        assert_eq!(predicted_okamoto_count(2, 1).n_total, 2);
        for k in 0..6 {
            assert_eq!(predicted_okamoto_count(k, 0).n_total, 0);
        }
        let q31 = predicted_okamoto_count(3, 1);
        assert_eq!(q31.n_total, 3);
        assert!(!q31.is_consistent());
        assert_eq!(q31.n_plus_from_total(), 1);
        assert_eq!(predicted_mode_count(1, 1, 1), 1);
        assert_eq!(predicted_mode_count(3, 1, 0), 0);
        assert_eq!(predicted_mode_count(1, 3, 0), 3);
    }

    #[test]
    fn conjecture_small_cases() {
        assert_eq!(felder_conjecture_count(&[]).report().unwrap().n_total, 0);
        let two = felder_conjecture_count(&[2]).report().unwrap();
        assert_eq!((two.n0, two.n_total), (0, 2));
        assert_eq!(sturm_count(&p(&[-3, 0, 2])).n_total, 2);
        assert_eq!(felder_conjecture_count(&[1, 2, 6]).report().unwrap().n_total, 4);
    }
}
