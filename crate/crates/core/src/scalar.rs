//! The two coefficient fields: exact rationals and complex doubles.
//!
//! Everything downstream is generic over [`Scalar`]. The trait is sealed, so
//! the set of fields is closed; the linear-algebra hooks dispatch to exact
//! Gaussian elimination for [`Rational`] and to SVD-based rank decisions for
//! [`Complex`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Result;
use crate::linalg::{exact, numeric, RankPolicy};

pub type Rational = num_rational::BigRational;
pub type Complex = num_complex::Complex64;

mod sealed {
    pub trait Sealed {}
    impl Sealed for super::Rational {}
    impl Sealed for super::Complex {}
}

/// A coefficient field.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + sealed::Sealed
{
    /// Exact fields never round and ignore rank tolerances.
    const EXACT: bool;
    /// Name used in reports: `"exact"` or `"complex"`.
    const MODE: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    /// Structural zero test (no tolerance).
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// `None` when the value is not representable (a non-real complex number
    /// in the rational field).
    fn from_complex(c: Complex) -> Option<Self>;
    fn to_complex(&self) -> Complex;
    fn magnitude(&self) -> f64;
    fn conj(&self) -> Self;

    /// Basis of `{ v : rows · v = 0 }` for a matrix with `ncols` columns.
    fn kernel(rows: &[Vec<Self>], ncols: usize, policy: &RankPolicy) -> Result<Vec<Vec<Self>>>;

    /// Fully reduced row echelon form of the row span, as `(pivot, row)`
    /// pairs ordered by pivot column. Pivot columns are zero in every other
    /// row. Exact rows are monic at the pivot; numeric rows have unit
    /// 2-norm and a real positive pivot.
    fn echelon(rows: &[Vec<Self>], ncols: usize, policy: &RankPolicy) -> Result<Vec<(usize, Vec<Self>)>>;

    /// Relative residual of `v` after projection onto the row span of
    /// `basis`; exact fields return `0.0` (member) or `1.0`.
    fn span_residual(basis: &[Vec<Self>], v: &[Self], policy: &RankPolicy) -> Result<f64>;

    /// Whether `v` lies in the row span of `basis` under `policy`.
    fn in_span(basis: &[Vec<Self>], v: &[Self], policy: &RankPolicy) -> Result<bool> {
        let r = Self::span_residual(basis, v, policy)?;
        Ok(if Self::EXACT { r == 0.0 } else { r <= policy.tol })
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
    const MODE: &'static str = "exact";

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn from_complex(c: Complex) -> Option<Self> {
        if c.im != 0.0 {
            return None;
        }
        Rational::from_float(c.re)
    }
    fn to_complex(&self) -> Complex {
        Complex::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn conj(&self) -> Self {
        self.clone()
    }

    fn kernel(rows: &[Vec<Self>], ncols: usize, _policy: &RankPolicy) -> Result<Vec<Vec<Self>>> {
        Ok(exact::kernel(rows, ncols))
    }
    fn echelon(rows: &[Vec<Self>], ncols: usize, _policy: &RankPolicy) -> Result<Vec<(usize, Vec<Self>)>> {
        Ok(exact::echelon(rows, ncols))
    }
    fn span_residual(basis: &[Vec<Self>], v: &[Self], _policy: &RankPolicy) -> Result<f64> {
        Ok(if exact::in_span(basis, v) { 0.0 } else { 1.0 })
    }
}

impl Scalar for Complex {
    const EXACT: bool = false;
    const MODE: &'static str = "complex";

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn from_i64(v: i64) -> Self {
        Complex::new(v as f64, 0.0)
    }
    fn from_rational(r: &Rational) -> Self {
        Complex::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn from_complex(c: Complex) -> Option<Self> {
        Some(c)
    }
    fn to_complex(&self) -> Complex {
        *self
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn kernel(rows: &[Vec<Self>], ncols: usize, policy: &RankPolicy) -> Result<Vec<Vec<Self>>> {
        numeric::kernel(rows, ncols, policy)
    }
    fn echelon(rows: &[Vec<Self>], ncols: usize, policy: &RankPolicy) -> Result<Vec<(usize, Vec<Self>)>> {
        numeric::echelon(rows, ncols, policy)
    }
    fn span_residual(basis: &[Vec<Self>], v: &[Self], policy: &RankPolicy) -> Result<f64> {
        numeric::span_residual(basis, v, policy)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_field_is_exact() {
        let a = Rational::new(BigInt::from(1), BigInt::from(3));
        let b = a.clone() + a.clone() + a;
        assert_eq!(b, <Rational as Scalar>::one());
        assert!(Rational::from_complex(Complex::new(0.5, 0.0)).is_some());
        assert!(Rational::from_complex(Complex::new(0.5, 1.0)).is_none());
    }

    #[test]
    fn complex_magnitude() {
        assert_eq!(Complex::new(3.0, 4.0).magnitude(), 5.0);
        assert!(!<Complex as Scalar>::is_zero(&Complex::new(0.0, 1e-300)));
    }
}
