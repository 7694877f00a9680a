//! Differential functionals at the origin and dual spaces of ideals.
//!
//! A functional `q = Σ c_α ∂^α` uses the normalized derivatives
//! `∂^α = (1/α!) ∂^{|α|}/∂x^α` evaluated at 0, so `∂^α(x^β) = δ_{αβ}` and
//! the pairing with a polynomial is a plain coefficient dot product.

mod completion;
mod macaulay;
mod space;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Exponent, OrderSpec, Polynomial};
use crate::scalar::Scalar;

pub use completion::{full_dual_zero_dim, truncated_dual_completion, Filtration, FullDual};
pub use macaulay::{truncated_dual_direct, MacaulayMatrix};
pub use space::{initial_support, intersect_spans, reduce_basis, span_contains, span_equal, TruncatedDualSpace};

/// A finite linear combination of normalized differential monomials.
#[derive(Clone, PartialEq)]
pub struct DualFunctional<F: Scalar> {
    num_vars: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Scalar> DualFunctional<F> {
    pub fn zero(num_vars: usize) -> Self {
        DualFunctional { num_vars, terms: BTreeMap::new() }
    }

    /// `∂^α` with coefficient `c`.
    pub fn monomial(exp: Exponent, c: F) -> Self {
        let mut q = DualFunctional::zero(exp.len());
        if !c.is_zero() {
            q.terms.insert(exp, c);
        }
        q
    }

    /// The evaluation functional `∂^0`.
    pub fn evaluation(num_vars: usize) -> Self {
        Self::monomial(Exponent::zero(num_vars), F::one())
    }

    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, F)>,
    {
        let mut q = DualFunctional::zero(num_vars);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::DimensionMismatch { expected: num_vars, found: e.len() });
            }
            q.add_term(e, c);
        }
        Ok(q)
    }

    fn add_term(&mut self, e: Exponent, c: F) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(e, s);
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn coeff(&self, e: &Exponent) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    /// `ord q`: the largest `|α|` in the support, 0 for the zero functional.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(Exponent::degree).max().unwrap_or(0)
    }

    /// `ord_A q`: the largest degree in the variables flagged by `mask`.
    pub fn order_in(&self, mask: &[bool]) -> u32 {
        self.terms.keys().map(|e| e.partial_degree(mask)).max().unwrap_or(0)
    }

    /// Initial term under the dual order of `order`, i.e. the support
    /// element that is smallest in the primal order.
    pub fn initial_term(&self, order: &OrderSpec) -> Option<(&Exponent, &F)> {
        self.terms.iter().min_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = DualFunctional::zero(self.num_vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, v) in &other.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }

    /// The pairing `q(f) = Σ_α q_α f_α`.
    pub fn apply(&self, f: &Polynomial<F>) -> Result<F> {
        if f.num_vars() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: f.num_vars() });
        }
        let mut total = F::zero();
        // iterate over the smaller side
        if self.terms.len() <= f.len() {
            for (e, c) in &self.terms {
                let fc = f.coeff(e);
                if !fc.is_zero() {
                    total = total + c.clone() * fc;
                }
            }
        } else {
            for (e, fc) in f.terms() {
                if let Some(c) = self.terms.get(e) {
                    total = total + c.clone() * fc.clone();
                }
            }
        }
        Ok(total)
    }

    /// The action `(g·q)(f) = q(g f)`: each pair of terms `c_β x^β` of `g`
    /// and `c_α ∂^α` of `q` contributes `c_β c_α ∂^{α−β}` when `β ≤ α`.
    pub fn contract(&self, g: &Polynomial<F>) -> Result<Self> {
        if g.num_vars() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: g.num_vars() });
        }
        let mut out = DualFunctional::zero(self.num_vars);
        for (b, cb) in g.terms() {
            for (a, ca) in &self.terms {
                if let Some(d) = a.checked_sub(b) {
                    out.add_term(d, ca.clone() * cb.clone());
                }
            }
        }
        Ok(out)
    }

    /// Contraction by the single variable `x_var`.
    pub fn contract_var(&self, var: usize) -> Self {
        let mut out = DualFunctional::zero(self.num_vars);
        for (a, c) in &self.terms {
            if a.as_slice()[var] > 0 {
                let mut d = a.as_slice().to_vec();
                d[var] -= 1;
                out.add_term(Exponent::new(d), c.clone());
            }
        }
        out
    }

    /// Zeroes coefficients of magnitude at most `tol`.
    pub fn chop(&self, tol: f64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(_, c)| c.magnitude() > tol)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        DualFunctional { num_vars: self.num_vars, terms }
    }
}

impl<F: Scalar> fmt::Debug for DualFunctional<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Free-function form of [`DualFunctional::contract`].
pub fn contract<F: Scalar>(g: &Polynomial<F>, q: &DualFunctional<F>) -> Result<DualFunctional<F>> {
    q.contract(g)
}
