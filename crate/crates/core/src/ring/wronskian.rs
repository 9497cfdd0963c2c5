//! Wronskian determinants of polynomials and quasi-Gaussian functions.

use rayon::prelude::*;

use super::poly::ExactPoly;
use super::quasi::QuasiGaussian;
use super::ratfn::RationalFn;
use crate::error::{Error, Result};

/// An entry of a Wronskian; all entries of one call must share a kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WronskianEntry {
    Poly(ExactPoly),
    Quasi(QuasiGaussian),
}

/// Dispatches on the entry kind; mixing kinds is an error.
pub fn wronskian(fs: &[WronskianEntry]) -> Result<WronskianEntry> {
    match fs.first() {
        None => Err(Error::EmptyList),
        Some(WronskianEntry::Poly(_)) => {
            let ps = fs
                .iter()
                .map(|f| match f {
                    WronskianEntry::Poly(p) => Ok(p.clone()),
                    WronskianEntry::Quasi(_) => Err(Error::MixedKinds),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(WronskianEntry::Poly(wronskian_poly(&ps)?))
        }
        Some(WronskianEntry::Quasi(_)) => {
            let qs = fs
                .iter()
                .map(|f| match f {
                    WronskianEntry::Quasi(q) => Ok(q.clone()),
                    WronskianEntry::Poly(_) => Err(Error::MixedKinds),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(WronskianEntry::Quasi(wronskian_quasi(&qs)?))
        }
    }
}

/// Wronskian of polynomials by fraction-free (Bareiss) elimination.
pub fn wronskian_poly(fs: &[ExactPoly]) -> Result<ExactPoly> {
    if fs.is_empty() {
        return Err(Error::EmptyList);
    }
    let n = fs.len();
    let mut m: Vec<Vec<ExactPoly>> = Vec::with_capacity(n);
    let mut row: Vec<ExactPoly> = fs.to_vec();
    for _ in 0..n {
        let next = row.iter().map(ExactPoly::derivative).collect();
        m.push(row);
        row = next;
    }
    Ok(bareiss_det(m))
}

fn bareiss_det(mut m: Vec<Vec<ExactPoly>>) -> ExactPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev = ExactPoly::one();
    for k in 0..n.saturating_sub(1) {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return ExactPoly::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let update = |row: &mut Vec<ExactPoly>| {
            for j in k + 1..n {
                let v = &(&row[j] * &pivot_row[k]) - &(&row[k] * &pivot_row[j]);
                row[j] = v.divide_exact(&prev).expect("bareiss division is exact");
            }
            row[k] = ExactPoly::zero();
        };
        if n >= 5 {
            tail.par_iter_mut().for_each(update);
        } else {
            tail.iter_mut().for_each(update);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Wronskian of quasi-Gaussians sharing one exponent `s`. Uses
/// `Wr(h·f₁, …, h·f_ℓ) = h^ℓ·Wr(f₁, …, f_ℓ)`, so the result carries exponent
/// `ℓ·s`.
pub fn wronskian_quasi(fs: &[QuasiGaussian]) -> Result<QuasiGaussian> {
    let first = fs.first().ok_or(Error::EmptyList)?;
    let s = first.gauss_exponent();
    if fs.iter().any(|f| f.gauss_exponent() != s) {
        return Err(Error::MixedKinds);
    }
    let total = s * fs.len() as i32;
    let parts: Vec<&RationalFn> = fs.iter().map(QuasiGaussian::rational_part).collect();
    let polys: Option<Vec<ExactPoly>> = parts.iter().map(|r| r.as_poly()).collect();
    let rational = match polys {
        Some(ps) => RationalFn::from_poly(wronskian_poly(&ps)?),
        None => {
            // Clear the common denominator: Wr(g/D) for each entry is handled
            // by Wr(h·u_i) = h^ℓ Wr(u_i) with h = 1/D.
            let d = parts.iter().fold(ExactPoly::one(), |acc, r| lcm(&acc, r.denominator()));
            let ps: Vec<ExactPoly> = parts
                .iter()
                .map(|r| {
                    let cof = d.divide_exact(r.denominator()).expect("lcm is a multiple");
                    r.numerator() * &cof
                })
                .collect();
            let w = wronskian_poly(&ps)?;
            RationalFn::new(w, d.pow(fs.len() as u32))?
        }
    };
    Ok(QuasiGaussian::new(rational, total))
}

fn lcm(a: &ExactPoly, b: &ExactPoly) -> ExactPoly {
    let g = a.gcd(b);
    (a * b).divide_exact(&g).expect("gcd divides the product").monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(cs)
    }

    #[test]
    fn two_by_two_by_hand() {
        // Wr(2x, 2x^2 - 3) = 2x·4x − 2·(2x^2 − 3) = 4x^2 + 6
        let w = wronskian_poly(&[p(&[0, 2]), p(&[-3, 0, 2])]).unwrap();
        assert_eq!(w, p(&[6, 0, 4]));
    }

    #[test]
    fn single_entry_is_identity() {
        let f = p(&[1, 2, 3]);
        assert_eq!(wronskian_poly(std::slice::from_ref(&f)).unwrap(), f);
    }

    #[test]
    fn monomials_give_superfactorial_scale() {
        // Wr(1, x, x^2) = 2
        let w = wronskian_poly(&[p(&[1]), p(&[0, 1]), p(&[0, 0, 1])]).unwrap();
        assert_eq!(w, p(&[2]));
        // Pivot swap path: the first column starts with a zero entry.
        let w = wronskian_poly(&[p(&[0, 1]), p(&[1]), p(&[0, 0, 1])]).unwrap();
        assert_eq!(w, p(&[-2]));
    }

    #[test]
    fn dependent_entries_vanish() {
        let w = wronskian_poly(&[p(&[1, 1]), p(&[2, 2])]).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn errors_on_bad_input() {
        assert_eq!(wronskian(&[]), Err(Error::EmptyList));
        let mixed = [
            WronskianEntry::Poly(p(&[1])),
            WronskianEntry::Quasi(QuasiGaussian::from_poly(p(&[1]), 1)),
        ];
        assert_eq!(wronskian(&mixed), Err(Error::MixedKinds));
    }

    #[test]
    fn quasi_wronskian_factors_the_gaussian() {
        let a = QuasiGaussian::from_poly(p(&[0, 2]), -1);
        let b = QuasiGaussian::from_poly(p(&[-3, 0, 2]), -1);
        let w = wronskian_quasi(&[a, b]).unwrap();
        assert_eq!(w.gauss_exponent(), -2);
        assert_eq!(w.rational_part().as_poly().unwrap(), p(&[6, 0, 4]));
    }

    #[test]
    fn quasi_wronskian_with_denominators() {
        // Wr(1/x, 1) = (1/x)·0 − 1·(−1/x²) = 1/x²
        let a = QuasiGaussian::new(RationalFn::new(ExactPoly::one(), p(&[0, 1])).unwrap(), 0);
        let b = QuasiGaussian::from_poly(ExactPoly::one(), 0);
        let w = wronskian_quasi(&[a, b]).unwrap();
        let expect = RationalFn::new(ExactPoly::one(), p(&[0, 0, 1])).unwrap();
        assert_eq!(w.rational_part(), &expect);
    }
}
