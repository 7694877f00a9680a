use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::Exponent;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderKind {
    /// Lower total degree is larger.
    GradedLocal,
    /// Block order: local degree order on the eliminated variables first,
    /// then a local degree order on the rest.
    EliminationLocal,
}

/// A local monomial order (the monomial 1 is the largest) and, through
/// [`OrderSpec::dual_cmp`], the opposite order on differential monomials.
///
/// Ties inside a degree block are broken reverse-lexicographically along the
/// variable permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpec {
    kind: OrderKind,
    perm: Vec<usize>,
    eliminated: Vec<bool>,
}

impl OrderSpec {
    pub fn graded_local(num_vars: usize) -> Self {
        OrderSpec {
            kind: OrderKind::GradedLocal,
            perm: (0..num_vars).collect(),
            eliminated: vec![true; num_vars],
        }
    }

    /// Elimination order for the variables in `block`.
    pub fn elimination(num_vars: usize, block: &[usize]) -> Result<Self> {
        let mut eliminated = vec![false; num_vars];
        for &v in block {
            if v >= num_vars {
                return Err(Error::InvalidArgument(format!(
                    "variable index {v} out of range for {num_vars} variables"
                )));
            }
            eliminated[v] = true;
        }
        Ok(OrderSpec {
            kind: OrderKind::EliminationLocal,
            perm: (0..num_vars).collect(),
            eliminated,
        })
    }

    /// Replaces the tie-breaking permutation.
    pub fn with_permutation(mut self, perm: Vec<usize>) -> Result<Self> {
        let n = self.num_vars();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        self.perm = perm;
        Ok(self)
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn num_vars(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// Membership mask of the most significant block.
    pub fn eliminated(&self) -> &[bool] {
        &self.eliminated
    }

    pub fn eliminated_vars(&self) -> Vec<usize> {
        (0..self.num_vars()).filter(|&i| self.eliminated[i]).collect()
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::GradedLocal => "graded-local",
            OrderKind::EliminationLocal => "elimination-local",
        }
    }

    pub(crate) fn check_vars(&self, n: usize) -> Result<()> {
        if n != self.num_vars() {
            return Err(Error::DimensionMismatch { expected: self.num_vars(), found: n });
        }
        Ok(())
    }

    /// Primal comparison with dimension checks.
    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering> {
        self.check_vars(a.len())?;
        self.check_vars(b.len())?;
        Ok(self.cmp(a, b))
    }

    /// Primal comparison; `Greater` means `x^a > x^b`.
    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        self.cmp_block(a, b, true).then_with(|| self.cmp_block(a, b, false))
    }

    /// Dual comparison: `∂^a ⪰ ∂^b` exactly when `x^a ≤ x^b`.
    pub fn dual_cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        self.cmp(b, a)
    }

    fn cmp_block(&self, a: &Exponent, b: &Exponent, in_block: bool) -> Ordering {
        let (a, b) = (a.as_slice(), b.as_slice());
        let vars = || self.perm.iter().copied().filter(|&i| self.eliminated[i] == in_block);
        let da: u32 = vars().map(|i| a[i]).sum();
        let db: u32 = vars().map(|i| b[i]).sum();
        if da != db {
            return db.cmp(&da);
        }
        let vars: Vec<usize> = vars().collect();
        for &i in vars.iter().rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    }
}
