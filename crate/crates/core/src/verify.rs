//! Verification suites: each check is an independent job, run on the current
//! rayon pool, and reported in a fixed order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{fd_eigensolve, max_cross_overlap, round_rational, NumericGrid, Quadrature, Tolerances};
use crate::okamoto::okamoto;
use crate::painleve::{backlund, bilinear_identities, is_solution, rational_solution, BacklundMap, Family};
use crate::reference::{mode_entry, okamoto_entry, parse_latex_poly};
use crate::ring::json::rational_to_string;
use crate::rootcount::{predicted_mode_count, predicted_okamoto_count, sturm_count};
use crate::spectral::{
    hamiltonian_residual, ladder, ladder_constant_sq, ladder_ratio_product, potential, spectral_rank, spectrum,
    zero_mode, Direction,
};
use crate::ttrr::ttrr_sequence;
use crate::wronsk::{
    exceptional_hermite, index_set, mode_index, susy_chain_potential, wronskian_mode, wronskian_potential,
    PartitionIndex, PotentialForm,
};

/// The closed set of suite names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Tables,
    Piv,
    Backlund,
    Identities,
    Ladder,
    Ode,
    Wronskian,
    Zeros,
    SpectrumNumeric,
    Orthogonality,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Tables,
        Suite::Piv,
        Suite::Backlund,
        Suite::Identities,
        Suite::Ladder,
        Suite::Ode,
        Suite::Wronskian,
        Suite::Zeros,
        Suite::SpectrumNumeric,
        Suite::Orthogonality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Piv => "piv",
            Suite::Backlund => "backlund",
            Suite::Identities => "identities",
            Suite::Ladder => "ladder",
            Suite::Ode => "ode",
            Suite::Wronskian => "wronskian",
            Suite::Zeros => "zeros",
            Suite::SpectrumNumeric => "spectrum-numeric",
            Suite::Orthogonality => "orthogonality",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Which suites to run and how far to go.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySuiteConfig {
    pub k_max: i64,
    pub n_max: i64,
    pub which: BTreeSet<Suite>,
    pub tolerances: Tolerances,
}

impl VerifySuiteConfig {
    pub fn new(k_max: i64, n_max: i64, which: impl IntoIterator<Item = Suite>) -> Result<Self> {
        if k_max < 0 || n_max < 0 {
            return Err(Error::InvalidIndices(format!(
                "k_max and n_max must be >= 0, got {k_max}, {n_max}"
            )));
        }
        Ok(Self {
            k_max,
            n_max,
            which: which.into_iter().collect(),
            tolerances: Tolerances::default(),
        })
    }
}

impl Default for VerifySuiteConfig {
    fn default() -> Self {
        Self {
            k_max: 2,
            n_max: 3,
            which: Suite::ALL.into_iter().collect(),
            tolerances: Tolerances::default(),
        }
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub subject: String,
    pub passed: bool,
    /// Exact mismatch or float deviation, when there is one to report.
    pub discrepancy: Option<String>,
    /// What the check certifies.
    pub certifies: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub config: VerifySuiteConfig,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Job = Box<dyn Fn() -> CheckResult + Send + Sync>;

fn job(
    suite: Suite,
    subject: String,
    certifies: &'static str,
    f: impl Fn() -> Result<Option<String>> + Send + Sync + 'static,
) -> Job {
    Box::new(move || {
        let (passed, discrepancy) = match f() {
            Ok(None) => (true, None),
            Ok(Some(d)) => (false, Some(d)),
            Err(e) => (false, Some(format!("error: {e}"))),
        };
        CheckResult {
            suite,
            subject: subject.clone(),
            passed,
            discrepancy,
            certifies,
        }
    })
}

fn expect(ok: bool, why: impl FnOnce() -> String) -> Result<Option<String>> {
    Ok(if ok { None } else { Some(why()) })
}

fn table_jobs(c: &VerifySuiteConfig, out: &mut Vec<Job>) {
    for k in 0..=c.k_max.min(5) {
        for n in [0, 1, -1] {
            out.push(job(
                Suite::Tables,
                format!("Q({k},{n})"),
                "published Okamoto tables",
                move || {
                    let want = parse_latex_poly(okamoto_entry(k as usize, n).expect("table entry"))?;
                    let got = okamoto(k, n)?;
                    expect(*got == want, || format!("computed {got}"))
                },
            ));
        }
    }
    for k in [1, 3].into_iter().filter(|&k| k <= c.k_max) {
        for j in 1..=3u8 {
            let top = c.n_max.min(4);
            out.push(job(
                Suite::Tables,
                format!("P(k={k},j={j},n<={top})"),
                "published mode tables",
                move || {
                    let seq = ttrr_sequence(k, j, top as usize)?;
                    for m in &seq {
                        let want = parse_latex_poly(mode_entry(k, j, m.n as usize).expect("table entry"))?;
                        let ratio = m.poly.proportionality(&want);
                        if !ratio.is_some_and(|r| r.signum() > 0) {
                            return Ok(Some(format!("n={} not a positive multiple of the table entry", m.n)));
                        }
                    }
                    Ok(None)
                },
            ));
        }
    }
}

fn piv_jobs(c: &VerifySuiteConfig, out: &mut Vec<Job>) {
    for fam in Family::ALL {
        for m in 0..=c.k_max {
            for n in 0..=c.k_max {
                out.push(job(
                    Suite::Piv,
                    format!("family {fam} ({m},{n})"),
                    "rational solutions",
                    move || {
                        let s = rational_solution(fam, m, n)?;
                        expect(is_solution(&s), || "nonzero residual".into())
                    },
                ));
            }
        }
    }
}

fn backlund_jobs(c: &VerifySuiteConfig, out: &mut Vec<Job>) {
    let top = c.k_max.min(3);
    for m in 0..=top {
        for n in 0..=top {
            out.push(job(
                Suite::Backlund,
                format!("seed family 1 ({m},{n})"),
                "Bäcklund images",
                move || {
                    let s = rational_solution(Family::One, m, n)?;
                    for map in BacklundMap::all() {
                        if !is_solution(&backlund(&s, map)?) {
                            return Ok(Some(format!("{map} image fails")));
                        }
                    }
                    Ok(None)
                },
            ));
        }
    }
}

fn identity_jobs(c: &VerifySuiteConfig, out: &mut Vec<Job>) {
    let top = c.k_max.clamp(1, 3);
    for m in 1..=top {
        for n in 1..=top {
            out.push(job(
                Suite::Identities,
                format!("({m},{n})"),
                "bilinear Okamoto identities",
                move || {
                    let ids = bilinear_identities(m, n)?;
                    let bad: Vec<usize> = (0..6).filter(|&i| !ids[i]).map(|i| i + 1).collect();
                    expect(bad.is_empty(), || format!("identities {bad:?} fail"))
                },
            ));
        }
    }
}

fn ladder_jobs(c: &VerifySuiteConfig, out: &mut Vec<Job>) {
    for k in 0..=c.k_max {
        for j in 1..=3u8 {
            out.push(job(
                Suite::Ladder,
                format!("lower zero-mode (k={k},j={j})"),
                "zero-modes",
                move || {
                    let z = zero_mode(k, j);
                    expect(ladder(k, Direction::Lower).apply(&z.function()).is_zero(), || {
                        "not annihilated".into()
                    })
                },
            ));
            let top = c.n_max;
            out.push(job(
                Suite::Ladder,
                format!("raise (k={k},j={j},n<={top})"),
                "ladder constants",
                move || {
                    let seq = ttrr_sequence(k, j, top as usize + 1)?;
                    for w in seq.windows(2) {
                        let got = ladder_ratio_product(&w[0], &w[1]);
                        let want = ladder_constant_sq(k, j, w[0].n);
                        if got.as_ref().and_then(|g| g.to_rational()) != Some(want.clone()) {
                            return Ok(Some(format!(
                                "n={}: expected {}, got {:?}",
                                w[0].n,
                                rational_to_string(&want),
                                got.map(|g| g.to_string())
                            )));
                        }
                    }
                    Ok(None)
                },
            ));
        }
    }
}

fn ode_jobs(c: &VerifySuiteConfig, out: &mut Vec<Job>) {
    for k in 0..=c.k_max {
        for j in 1..=3u8 {
            let top = c.n_max;
            out.push(job(
                Suite::Ode,
                format!("(k={k},j={j},n<={top})"),
                "eigenvalue equation",
                move || {
                    for m in ttrr_sequence(k, j, top as usize)? {
                        if !hamiltonian_residual(&m).is_zero() {
                            return Ok(Some(format!("recurrence mode n={}", m.n)));
                        }
                        if !hamiltonian_residual(&wronskian_mode(k, j, m.n)?).is_zero() {
                            return Ok(Some(format!("Wronskian mode n={}", m.n)));
                        }
                    }
                    Ok(None)
                },
            ));
        }
    }
}

fn wronskian_jobs(c: &VerifySuiteConfig, out: &mut Vec<Job>) {
    for k in 0..=c.k_max {
        out.push(job(
            Suite::Wronskian,
            format!("potential k={k}"),
            "Darboux-Crum potentials",
            move || {
                let v = potential(k).potential();
                let del = wronskian_potential(k, PotentialForm::Deleting)?;
                let add = wronskian_potential(k, PotentialForm::Adding)?;
                let chain = susy_chain_potential(&index_set(k))?;
                expect(v == del && v == add && v == chain, || {
                    format!("deleting {} adding {} chain {}", v == del, v == add, v == chain)
                })
            },
        ));
        for j in 1..=3u8 {
            let top = c.n_max;
            out.push(job(
                Suite::Wronskian,
                format!("modes (k={k},j={j},n<={top})"),
                "Wronskian modes",
                move || {
                    for m in ttrr_sequence(k, j, top as usize)? {
                        if !wronskian_mode(k, j, m.n)?.poly.is_proportional(&m.poly) {
                            return Ok(Some(format!("n={}", m.n)));
                        }
                        let h = exceptional_hermite(&PartitionIndex::staircase(k), mode_index(k, j, m.n))?;
                        let scaled = m.poly.sqrt3_rescale();
                        if !scaled.is_some_and(|s| s.is_proportional(&h)) {
                            return Ok(Some(format!("exceptional Hermite n={}", m.n)));
                        }
                    }
                    Ok(None)
                },
            ));
        }
    }
}

fn zero_jobs(c: &VerifySuiteConfig, out: &mut Vec<Job>) {
    for k in 0..=c.k_max {
        for j in 1..=3u8 {
            let top = c.n_max;
            out.push(job(
                Suite::Zeros,
                format!("modes (k={k},j={j},n<={top})"),
                "zero counts and rank law",
                move || {
                    for m in ttrr_sequence(k, j, top as usize)? {
                        let got = sturm_count(&m.poly).n_total as i64;
                        let table = predicted_mode_count(k, j, m.n);
                        let rank = spectral_rank(k, j, m.n) as i64;
                        if got != table || got != rank {
                            return Ok(Some(format!("n={}: sturm {got}, table {table}, rank {rank}", m.n)));
                        }
                    }
                    Ok(None)
                },
            ));
        }
    }
    let total = 2 * c.k_max.max(1);
    for s in 1..=total {
        for m in 0..=s {
            let n = s - m;
            out.push(job(
                Suite::Zeros,
                format!("Q({m},{n})"),
                "Okamoto zero counts",
                move || {
                    let got = sturm_count(&*okamoto(m, n)?);
                    let want = predicted_okamoto_count(m, n);
                    expect(got.n0 == want.n0 && got.n_total == want.n_total, || {
                        format!(
                            "sturm ({}, {}), table ({}, {})",
                            got.n0, got.n_total, want.n0, want.n_total
                        )
                    })
                },
            ));
        }
    }
}

fn spectrum_jobs(c: &VerifySuiteConfig, out: &mut Vec<Job>) {
    let t = c.tolerances;
    for k in 0..=c.k_max {
        out.push(job(
            Suite::SpectrumNumeric,
            format!("k={k} lowest 9"),
            "energy progressions",
            move || {
                let grid = NumericGrid::new(t.half_width, t.points)?;
                let numeric = fd_eigensolve(k, &grid, 9, t.eigen_tol)?;
                let exact = spectrum(k, 9);
                let worst = numeric
                    .iter()
                    .zip(&exact)
                    .map(|(a, b)| (a - round_rational(&b.energy, 53)).abs())
                    .fold(0.0, f64::max);
                expect(worst <= t.eigen_tol, || format!("max |ΔE| = {worst:.3e}"))
            },
        ));
    }
}

fn orthogonality_jobs(c: &VerifySuiteConfig, out: &mut Vec<Job>) {
    let t = c.tolerances;
    for k in 0..=c.k_max {
        let top = c.n_max;
        out.push(job(
            Suite::Orthogonality,
            format!("k={k} n<={top}"),
            "orthogonality of distinct states",
            move || {
                let mut modes = Vec::new();
                for j in 1..=3u8 {
                    modes.extend(ttrr_sequence(k, j, top as usize)?);
                }
                let worst = max_cross_overlap(&modes, &Quadrature::from_tolerances(&t))?;
                expect(worst <= t.orthogonality_tol, || format!("max overlap {worst:.3e}"))
            },
        ));
    }
}

/// Runs the selected suites. Failures are recorded in the report, never
/// raised.
pub fn run_verify(config: &VerifySuiteConfig) -> VerifyReport {
    let mut jobs: Vec<Job> = Vec::new();
    for suite in &config.which {
        let add = match suite {
            Suite::Tables => table_jobs,
            Suite::Piv => piv_jobs,
            Suite::Backlund => backlund_jobs,
            Suite::Identities => identity_jobs,
            Suite::Ladder => ladder_jobs,
            Suite::Ode => ode_jobs,
            Suite::Wronskian => wronskian_jobs,
            Suite::Zeros => zero_jobs,
            Suite::SpectrumNumeric => spectrum_jobs,
            Suite::Orthogonality => orthogonality_jobs,
        };
        add(config, &mut jobs);
    }
    let checks = jobs.par_iter().map(|j| j()).collect();
    VerifyReport {
        config: config.clone(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn small_exact_suites_pass() {
        let cfg = VerifySuiteConfig::new(1, 2, [Suite::Tables, Suite::Piv, Suite::Ladder, Suite::Zeros]).unwrap();
        let report = run_verify(&cfg);
        assert!(!report.checks.is_empty());
        let failed: Vec<_> = report.failures().collect();
        assert!(failed.is_empty(), "{failed:?}");
    }

    #[test]
    fn report_order_is_stable() {
        let cfg = VerifySuiteConfig::new(1, 1, [Suite::Identities, Suite::Piv]).unwrap();
        let a = run_verify(&cfg);
        let b = run_verify(&cfg);
        assert_eq!(a, b);
        assert_eq!(a.checks[0].suite, Suite::Piv);
    }
}
