//! Exact arithmetic over Q(√2): scalars, polynomials, rational functions,
//! quasi-Gaussian functions and Wronskians.

pub mod json;
pub mod poly;
pub mod quasi;
pub mod ratfn;
pub mod scalar;
pub mod wronskian;

pub use poly::{ExactPoly, Parity};
pub use quasi::{apply_first_order, QuasiGaussian};
pub use ratfn::RationalFn;
pub use scalar::{rat, SqrtTwoScalar};
pub use wronskian::{wronskian, wronskian_poly, wronskian_quasi, WronskianEntry};

/// Multiplication or exact division of polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MulDivMode {
    Multiply,
    DivideExact,
}

/// `p·q` or the exact quotient `p/q`.
pub fn poly_mul_div(p: &ExactPoly, q: &ExactPoly, mode: MulDivMode) -> crate::Result<ExactPoly> {
    match mode {
        MulDivMode::Multiply => Ok(p * q),
        MulDivMode::DivideExact => p.divide_exact(q),
    }
}
