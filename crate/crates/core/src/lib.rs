//! Macaulay dual spaces of polynomial ideals at a point, eliminating dual
//! spaces, local Hilbert data and a test for embedded points on curves.
//!
//! Computations run over exact rationals ([`scalar::Rational`]) or complex
//! doubles ([`scalar::Complex`]); see [`scalar::Scalar`].

pub mod dual;
pub mod elim;
pub mod embedded;
pub mod error;
pub mod hilbert;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod text;

pub use error::{Error, Result};
