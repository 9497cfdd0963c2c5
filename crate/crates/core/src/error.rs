use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("exact division left a nonzero remainder")]
    NonZeroRemainder,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("wronskian entries mix kinds or gaussian exponents")]
    MixedKinds,
    #[error("wronskian of an empty list")]
    EmptyList,
    #[error("index ({m}, {n}) is outside the supported cone m >= 0, n >= -1")]
    IndexOutOfCone { m: i64, n: i64 },
    #[error("rational function has an identically zero denominator")]
    ZeroDenominator,
    #[error("backlund map {0} is singular for this seed")]
    SingularMap(String),
    #[error("expected a polynomial but the result has a nontrivial denominator: {0}")]
    NonPolynomialResult(String),
    #[error("malformed wronskian index list: {0}")]
    MalformedIndexList(String),
    #[error("index {0} appears twice in the wronskian index set")]
    DuplicateIndex(i64),
    #[error("degree {0} is excluded by the partition")]
    ExcludedDegree(i64),
    #[error("wronskian has {0} real zero(s); the potential is singular")]
    SingularWronskian(usize),
    #[error("expression has a pole at x = {0}")]
    PoleAtPoint(f64),
    #[error("grid too coarse: eigenvalue {index} moved by {shift:e} under refinement")]
    GridTooCoarse { index: usize, shift: f64 },
    #[error("invalid indices: {0}")]
    InvalidIndices(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
