//! Third-order shape-invariant Hamiltonians built from the rational solutions
//! of Painlevé IV asymptotic to −2x/3.
//!
//! Everything symbolic is exact over Q(√2); the `numerics` module provides
//! independent floating-point cross-checks.

pub mod error;
pub mod numerics;
pub mod okamoto;
pub mod painleve;
pub mod reference;
pub mod ring;
pub mod rootcount;
pub mod spectral;
pub mod ttrr;
pub mod verify;
pub mod wronsk;

pub use error::{Error, Result};
pub use ring::{ExactPoly, QuasiGaussian, RationalFn, SqrtTwoScalar};
