//! Generalized Okamoto polynomials `Q_{m,n}` from their Toda-type recurrences.
//!
//! Two bilinear recurrences connect neighbouring polynomials:
//!
//! ```text
//! Q_{m+1,n} Q_{m-1,n} = 9/2 (Q Q'' - Q'^2) + (2x^2 + 3(2m + n - 1)) Q^2,   Q = Q_{m,n}
//! Q_{m,n+1} Q_{m,n-1} = 9/2 (Q Q'' - Q'^2) + (2x^2 + 3(1 - m - 2n)) Q^2,   Q = Q_{m,n}
//! ```
//!
//! Starting from `Q_{0,0} = Q_{1,0} = Q_{0,1} = 1` and `Q_{1,1} = √2 x`, rows
//! `m ∈ {0, 1}` advance in `n` with the second relation, every other entry with
//! `n ≥ 0` advances in `m` with the first, and the `n = −1` column is solved
//! from the second relation at `n = 0`.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::ring::{ExactPoly, SqrtTwoScalar};

/// Environment variable naming a directory for persisted polynomials.
pub const CACHE_DIR_ENV: &str = "TSI_CACHE_DIR";

/// Degree `m² + n² + mn − m − n` of `Q_{m,n}`.
pub fn okamoto_degree(m: i64, n: i64) -> i64 {
    m * m + n * n + m * n - m - n
}

/// Right-hand side `9/2 (QQ'' − Q'²) + (2x² + 3c) Q²` shared by both
/// recurrences.
pub fn toda_rhs(q: &ExactPoly, c: i64) -> ExactPoly {
    let d1 = q.derivative();
    let d2 = d1.derivative();
    let bracket = &(q * &d2) - &(&d1 * &d1);
    let quad = ExactPoly::from_ints(&[3 * c, 0, 2]);
    &bracket.scale(&SqrtTwoScalar::from_ratio(9, 2)) + &(&quad * &(q * q))
}

/// Memoized table of `Q_{m,n}` for `m ≥ 0`, `n ≥ −1`.
///
/// Entries are immutable once inserted; concurrent fills of one key compute
/// the same polynomial, so the first insert wins without changing the result.
#[derive(Default)]
pub struct OkamotoTable {
    memo: RwLock<HashMap<(i64, i64), Arc<ExactPoly>>>,
    cache_dir: Option<PathBuf>,
}

impl OkamotoTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// A table that also reads and writes `okamoto_M_N.json` files in `dir`.
    pub fn with_cache_dir(dir: impl Into<PathBuf>) -> Self {
        Self {
            memo: RwLock::default(),
            cache_dir: Some(dir.into()),
        }
    }

    /// The process-wide table, persisted when `TSI_CACHE_DIR` is set.
    pub fn global() -> &'static OkamotoTable {
        static TABLE: OnceLock<OkamotoTable> = OnceLock::new();
        TABLE.get_or_init(|| match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => OkamotoTable::with_cache_dir(dir),
            _ => OkamotoTable::new(),
        })
    }

    /// Number of memoized entries.
    pub fn len(&self) -> usize {
        self.memo.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Q_{m,n}`.
    pub fn get(&self, m: i64, n: i64) -> Result<Arc<ExactPoly>> {
        if m < 0 || n < -1 {
            return Err(Error::IndexOutOfCone { m, n });
        }
        if let Some(p) = self.memo.read().get(&(m, n)) {
            return Ok(Arc::clone(p));
        }
        let p = match self.load(m, n) {
            Some(p) => p,
            None => {
                let p = self.compute(m, n)?;
                self.store(m, n, &p);
                p
            }
        };
        let mut memo = self.memo.write();
        Ok(Arc::clone(memo.entry((m, n)).or_insert_with(|| Arc::new(p))))
    }

    fn compute(&self, m: i64, n: i64) -> Result<ExactPoly> {
        let x = ExactPoly::x();
        match (m, n) {
            (0, 0) | (1, 0) | (0, 1) => Ok(ExactPoly::one()),
            (1, 1) | (1, -1) => Ok(x.scale(&SqrtTwoScalar::sqrt2())),
            (0, -1) => Ok(ExactPoly::from_ints(&[3, 0, 2])),
            (0 | 1, _) if n >= 2 => {
                // Second relation at (m, n − 1).
                let q = self.get(m, n - 1)?;
                let rhs = toda_rhs(&q, 1 - m - 2 * (n - 1));
                rhs.divide_exact(&*self.get(m, n - 2)?)
            }
            (_, -1) => {
                // Second relation at (m, 0), solved for Q_{m,−1}.
                let q = self.get(m, 0)?;
                let rhs = toda_rhs(&q, 1 - m);
                rhs.divide_exact(&*self.get(m, 1)?)
            }
            _ => {
                // First relation at (m − 1, n).
                let q = self.get(m - 1, n)?;
                let rhs = toda_rhs(&q, 2 * (m - 1) + n - 1);
                rhs.divide_exact(&*self.get(m - 2, n)?)
            }
        }
    }

    fn cache_path(&self, m: i64, n: i64) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(format!("okamoto_{m}_{n}.json")))
    }

    fn load(&self, m: i64, n: i64) -> Option<ExactPoly> {
        let text = std::fs::read_to_string(self.cache_path(m, n)?).ok()?;
        let p: ExactPoly = serde_json::from_str(&text).ok()?;
        // A stale or foreign file is ignored rather than trusted.
        (p.degree() == Some(okamoto_degree(m, n) as usize)).then_some(p)
    }

    fn store(&self, m: i64, n: i64, p: &ExactPoly) {
        let Some(path) = self.cache_path(m, n) else {
            return;
        };
        if let Some(dir) = path.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        if let Ok(text) = serde_json::to_string(p) {
            let tmp = path.with_extension(format!("tmp{}", std::process::id()));
            if std::fs::write(&tmp, text).is_ok() {
                let _ = std::fs::rename(&tmp, &path);
            }
        }
    }
}

/// `Q_{m,n}` from the global table.
pub fn okamoto(m: i64, n: i64) -> Result<Arc<ExactPoly>> {
    OkamotoTable::global().get(m, n)
}

/// Conventional Okamoto polynomial `Q_k = Q_{k,0}`.
pub fn okamoto_k(k: i64) -> Result<Arc<ExactPoly>> {
    okamoto(k, 0)
}
