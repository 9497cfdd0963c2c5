//! Higher-mode polynomials `P_{n;j}^{(k)}` from a three-term recurrence in
//! `n`, starting from the zero-mode alone.
//!
//! With `𝒢_n = (2/9)·Q_{k+2}Q_k/Q_{k+1}² − E_n`, the coefficient functions
//! `w^{[p]} = w^{[p]}_{k,0}` and `C²_{n+1} = ladder_constant_sq(k, j, n)`:
//!
//! ```text
//! C²_{n+2} P_{n+2} = [−w² 𝒢_{n+2} + E_{n+1} w¹ 𝒢_{n+2}/𝒢_{n+1} + w³ (2/3 − 2k + E_{n+1})] P_{n+1}
//!                    − (𝒢_{n+2}/𝒢_{n+1}) P_n
//! ```
//!
//! and the first step is the same relation with the `P_n` term absent.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::okamoto::okamoto;
use crate::painleve::{rational_solution, Family};
use crate::ring::{rat, ExactPoly, RationalFn, SqrtTwoScalar};
use crate::spectral::{ladder_constant_sq, mode_energy, zero_mode, ModeFunction};

fn q(m: i64, n: i64) -> Result<Arc<ExactPoly>> {
    okamoto(m, n)
}

fn scalar(r: &BigRational) -> SqrtTwoScalar {
    SqrtTwoScalar::from_rational(r.clone())
}

fn constant(r: &BigRational) -> RationalFn {
    RationalFn::constant(scalar(r))
}

/// `(2/9)·Q_{k+2}Q_k/Q_{k+1}²`, the energy-independent part of `𝒢`.
pub fn g_base(k: i64) -> Result<RationalFn> {
    let qk1 = q(k + 1, 0)?;
    RationalFn::new(
        (&*q(k + 2, 0)? * &*q(k, 0)?).scale(&SqrtTwoScalar::from_ratio(2, 9)),
        &*qk1 * &*qk1,
    )
}

/// `(2/9)·Q_{k+1,1}Q_{k+1,−1}/Q_{k+1}² + 2/3 + 2k`, the second closed form of
/// the same function.
pub fn g_base_alternative(k: i64) -> Result<RationalFn> {
    let qk1 = q(k + 1, 0)?;
    let frac = RationalFn::new(
        (&*q(k + 1, 1)? * &*q(k + 1, -1)?).scale(&SqrtTwoScalar::from_ratio(2, 9)),
        &*qk1 * &*qk1,
    )?;
    Ok(&frac + &constant(&rat(6 * k + 2, 3)))
}

/// Recurrence data and generated entries for one sequence `(k, j)`.
#[derive(Debug, Clone)]
pub struct RecurrenceState {
    pub k: i64,
    pub j: u8,
    entries: Vec<ExactPoly>,
    g_cache: Vec<RationalFn>,
    g_base: RationalFn,
    w: [RationalFn; 3],
}

impl RecurrenceState {
    /// Seeds the sequence with the zero-mode. Fails if the two closed forms
    /// of `𝒢` disagree.
    pub fn new(k: i64, j: u8) -> Result<Self> {
        assert!(k >= 0 && (1..=3).contains(&j), "need k >= 0 and j in 1..=3");
        let base = g_base(k)?;
        if base != g_base_alternative(k)? {
            return Err(Error::NonPolynomialResult(format!(
                "closed forms of the recurrence coefficient disagree at k={k}"
            )));
        }
        let w = [
            rational_solution(Family::One, k, 0)?.w,
            rational_solution(Family::Two, k, 0)?.w,
            rational_solution(Family::Three, k, 0)?.w,
        ];
        Ok(Self {
            k,
            j,
            entries: vec![zero_mode(k, j).poly],
            g_cache: Vec::new(),
            g_base: base,
            w,
        })
    }

    /// Generated entries `P_0, …`.
    pub fn entries(&self) -> &[ExactPoly] {
        &self.entries
    }

    pub fn energy(&self, n: i64) -> BigRational {
        mode_energy(self.k, self.j, n)
    }

    /// `𝒢_{n;j}`.
    pub fn g(&mut self, n: usize) -> &RationalFn {
        while self.g_cache.len() <= n {
            let e = self.energy(self.g_cache.len() as i64);
            let g = &self.g_base - &constant(&e);
            self.g_cache.push(g);
        }
        &self.g_cache[n]
    }

    /// Bracketed coefficient of `P_{m}` in the step that produces `P_{m+1}`.
    fn bracket(&mut self, m: usize) -> Result<RationalFn> {
        let e = self.energy(m as i64);
        let g_next = self.g(m + 1).clone();
        let g_cur = self.g(m).clone();
        let [w1, w2, w3] = &self.w;
        let ratio_term = (w1 * &g_next).checked_div(&g_cur)?.scale(&scalar(&e));
        let shift = &rat(2 - 6 * self.k, 3) + &e;
        Ok(&(&(-&(w2 * &g_next)) + &ratio_term) + &w3.scale(&scalar(&shift)))
    }

    fn finish(&self, r: RationalFn, step: i64) -> Result<ExactPoly> {
        let p = r.as_poly().ok_or_else(|| {
            Error::NonPolynomialResult(format!(
                "step {step} of sequence (k={}, j={}) left denominator {}",
                self.k,
                self.j,
                r.denominator()
            ))
        })?;
        let c2 = ladder_constant_sq(self.k, self.j, step);
        Ok(p.scale(&scalar(&(BigRational::one() / c2))))
    }

    /// Extends the sequence through `P_n`.
    pub fn extend_to(&mut self, n: usize) -> Result<&ExactPoly> {
        while self.entries.len() <= n {
            let len = self.entries.len();
            let p = if len == 1 {
                ttrr_first_in(self)?
            } else {
                ttrr_next(self, len - 2)?
            };
            self.entries.push(p);
        }
        Ok(&self.entries[n])
    }
}

fn ttrr_first_in(state: &mut RecurrenceState) -> Result<ExactPoly> {
    let b = state.bracket(0)?;
    let r = b.mul_poly(&state.entries[0]);
    state.finish(r, 0)
}

/// `P_{1;j}^{(k)}` from the zero-mode.
pub fn ttrr_first(k: i64, j: u8) -> Result<ExactPoly> {
    let mut s = RecurrenceState::new(k, j)?;
    ttrr_first_in(&mut s)
}

/// `P_{n+2}` from stored `P_n` and `P_{n+1}`.
pub fn ttrr_next(state: &mut RecurrenceState, n: usize) -> Result<ExactPoly> {
    assert!(state.entries.len() >= n + 2, "entries n and n+1 must be present");
    let b = state.bracket(n + 1)?;
    let g_cur = state.g(n + 1).clone();
    let ratio = state.g(n + 2).checked_div(&g_cur)?;
    let r = &b.mul_poly(&state.entries[n + 1]) - &ratio.mul_poly(&state.entries[n]);
    state.finish(r, n as i64 + 1)
}

/// `P_{0;j}, …, P_{max_n;j}` as modes with energies.
pub fn ttrr_sequence(k: i64, j: u8, max_n: usize) -> Result<Vec<ModeFunction>> {
    let mut s = RecurrenceState::new(k, j)?;
    s.extend_to(max_n)?;
    Ok(s.entries
        .iter()
        .enumerate()
        .map(|(n, p)| ModeFunction {
            k,
            j,
            n: n as i64,
            poly: p.clone(),
            energy: mode_energy(k, j, n as i64),
        })
        .collect())
}

/// `Q_{k+1}·[P'' − (2x/3 + 2Q'_{k+1}/Q_{k+1})P' + (Q''_{k+1}/Q_{k+1} +
/// (2x/3)Q'_{k+1}/Q_{k+1} − 4k/3 + E_{n;j})P]`, a polynomial that vanishes
/// exactly when `μ_k·P` solves the eigenvalue equation at `E_{n;j}`.
pub fn ode_residual(k: i64, j: u8, n: i64, p: &ExactPoly) -> Result<ExactPoly> {
    let qk = q(k + 1, 0)?;
    let dq = qk.derivative();
    let d2q = dq.derivative();
    let two_x3 = ExactPoly::monomial(SqrtTwoScalar::from_ratio(2, 3), 1);
    let e = mode_energy(k, j, n) - rat(4 * k, 3);
    let dp = p.derivative();
    let t2 = &*qk * &dp.derivative();
    let t1 = &(&two_x3 * &*qk) + &dq.scale(&SqrtTwoScalar::from_integer(2));
    let t0 = &(&d2q + &(&two_x3 * &dq)) + &qk.scale(&scalar(&e));
    Ok(&(&t2 - &(&t1 * &dp)) + &(&t0 * p))
}

/// `∏_{p<n} C²_{p+1;j}`, the squared ratio of normalization constants.
pub fn normalization_sq(k: i64, j: u8, n: i64) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, p| acc * ladder_constant_sq(k, j, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::hamiltonian_residual;

    fn p(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(cs)
    }

    #[test]
    fn first_steps() {
        assert!(ttrr_first(0, 1).unwrap().is_proportional(&p(&[0, -9, 0, 2])));
        assert!(ttrr_first(1, 1).unwrap().is_proportional(&p(&[0, 9, 0, 2])));
        assert!(ttrr_first(1, 3)
            .unwrap()
            .is_proportional(&p(&[-1215, 0, 3240, 0, 360, 0, -288, 0, 16])));
    }

    #[test]
    fn second_steps() {
        let mut s = RecurrenceState::new(1, 1).unwrap();
        assert!(s
            .extend_to(2)
            .unwrap()
            .is_proportional(&p(&[81, 0, -162, 0, -36, 0, 8])));
        let mut s = RecurrenceState::new(1, 2).unwrap();
        let want = p(&[25515, 0, -85050, 0, 0, 0, 10080, 0, -1200, 0, 32]);
        assert!(s.extend_to(2).unwrap().is_proportional(&want));
    }

    #[test]
    fn sequences_solve_the_eigenvalue_equation() {
        for k in 0..3 {
            for j in 1..=3u8 {
                for m in ttrr_sequence(k, j, 4).unwrap() {
                    assert!(ode_residual(k, j, m.n, &m.poly).unwrap().is_zero(), "{m}");
                    assert!(hamiltonian_residual(&m).is_zero(), "{m}");
                }
            }
        }
    }

    #[test]
    fn ode_residual_examples() {
        assert!(ode_residual(1, 1, 1, &p(&[0, 9, 0, 2])).unwrap().is_zero());
        assert!(ode_residual(0, 1, 0, &p(&[1])).unwrap().is_zero());
        assert!(!ode_residual(1, 1, 1, &p(&[0, 8, 0, 2])).unwrap().is_zero());
    }

    #[test]
    fn closed_forms_agree() {
        for k in 0..5 {
            assert_eq!(g_base(k).unwrap(), g_base_alternative(k).unwrap());
        }
    }

    #[test]
    fn normalization_products() {
        assert_eq!(normalization_sq(0, 1, 1), rat(16, 9));
        assert_eq!(normalization_sq(2, 3, 0), BigRational::one());
        assert_eq!(normalization_sq(0, 2, 2), rat(35840, 81));
    }
}
