//! Sparse multivariate polynomials over a [`Scalar`] field.
//!
//! Elements of the local ring at the origin are only ever handled through
//! polynomial truncations, so there is no rational-function arithmetic here.

mod ideal;
mod order;
mod transform;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use ideal::Ideal;
pub use order::{OrderKind, OrderSpec};
pub use transform::{invertible, linear_substitution};

/// Dense exponent vector `α ∈ ℤ≥0^N`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(num_vars: usize) -> Self {
        Exponent(vec![0; num_vars])
    }

    pub fn unit(num_vars: usize, var: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[var] = 1;
        Exponent(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Total degree `|α|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree restricted to the variables flagged in `mask`.
    pub fn partial_degree(&self, mask: &[bool]) -> u32 {
        self.0.iter().zip(mask).filter(|(_, &m)| m).map(|(e, _)| e).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − other`, or `None` when some entry would go negative.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[u32; N]> for Exponent {
    fn from(v: [u32; N]) -> Self {
        Exponent(v.to_vec())
    }
}

/// All exponents of total degree exactly `d` in `n` variables, in
/// lexicographically decreasing order.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Exponent(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Exponent(Vec::new()));
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All exponents with `|α| ≤ k`, by increasing degree.
pub fn exponents_up_to(n: usize, k: u32) -> Vec<Exponent> {
    (0..=k).flat_map(|d| exponents_of_degree(n, d)).collect()
}

/// Number of exponents with `|α| ≤ k` in `n` variables: `C(n + k, n)`.
pub fn count_up_to(n: usize, k: u32) -> usize {
    let (n, k) = (n as u128, k as u128);
    let mut c: u128 = 1;
    for i in 1..=n {
        c = c * (k + i) / i;
    }
    c as usize
}

/// A polynomial stored as a map from exponents to nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F: Scalar> {
    num_vars: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Scalar> Polynomial<F> {
    pub fn zero(num_vars: usize) -> Self {
        Polynomial { num_vars, terms: BTreeMap::new() }
    }

    pub fn constant(num_vars: usize, c: F) -> Self {
        Self::monomial(Exponent::zero(num_vars), c)
    }

    pub fn monomial(exp: Exponent, c: F) -> Self {
        let mut p = Polynomial::zero(exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn variable(num_vars: usize, var: usize) -> Self {
        Self::monomial(Exponent::unit(num_vars, var), F::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, F)>,
    {
        let mut p = Polynomial::zero(num_vars);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::DimensionMismatch { expected: num_vars, found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(&Exponent::zero(self.num_vars))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::degree).max()
    }

    /// Lowest total degree of a term, `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.valuation()
    }

    pub fn max_coeff_magnitude(&self) -> f64 {
        self.terms.values().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.num_vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Polynomial { num_vars: self.num_vars, terms }
    }

    /// Keeps exactly the terms with `|α| ≤ k`.
    pub fn truncate(&self, k: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.degree() <= k)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Polynomial { num_vars: self.num_vars, terms }
    }

    /// Multiplies by the monomial `x^β`.
    pub fn shift(&self, beta: &Exponent) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.add(beta), c.clone())).collect();
        Polynomial { num_vars: self.num_vars, terms }
    }

    /// The initial term under a local order: the largest monomial with a
    /// nonzero coefficient.
    pub fn initial_term(&self, order: &OrderSpec) -> Result<(Exponent, F)> {
        order.check_vars(self.num_vars)?;
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Zeroes coefficients with magnitude at most `tol`.
    pub fn chop(&self, tol: f64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(_, c)| c.magnitude() > tol)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Polynomial { num_vars: self.num_vars, terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Polynomial::constant(self.num_vars, F::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a point.
    pub fn eval(&self, point: &[F]) -> Result<F> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: point.len() });
        }
        let mut total = F::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.as_slice()) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            total = total + t;
        }
        Ok(total)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.num_vars, other.num_vars, "polynomials over different rings");
    }
}

impl<F: Scalar> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<F: Scalar> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.check_same(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<F: Scalar> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.check_same(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<F: Scalar> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.check_same(rhs);
        let mut out = Polynomial::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.add(eb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<F: Scalar> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&-F::one())
    }
}
