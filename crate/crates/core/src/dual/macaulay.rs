use std::collections::HashMap;

use crate::dual::{DualFunctional, TruncatedDualSpace};
use crate::error::Result;
use crate::linalg::RankPolicy;
use crate::poly::{exponents_up_to, Exponent, Ideal, OrderSpec};
use crate::scalar::Scalar;

/// Rows `truncate(x^β f_i, k)` for `|β| ≤ k − 1`, over the columns `|α| ≤ k`.
///
/// Shifts of degree `k` or more would be truncated to zero, since every
/// generator vanishes at the origin.
#[derive(Debug, Clone)]
pub struct MacaulayMatrix<F: Scalar> {
    k: u32,
    columns: Vec<Exponent>,
    row_labels: Vec<(usize, Exponent)>,
    rows: Vec<Vec<F>>,
}

impl<F: Scalar> MacaulayMatrix<F> {
    /// Assembles the matrix for `ideal`, which must vanish at the origin.
    pub fn new(ideal: &Ideal<F>, k: u32) -> Result<Self> {
        ideal.check_vanishes_at_origin()?;
        let n = ideal.num_vars();
        let columns = exponents_up_to(n, k);
        let index: HashMap<&Exponent, usize> = columns.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let shifts = if k == 0 { Vec::new() } else { exponents_up_to(n, k - 1) };
        let mut row_labels = Vec::new();
        let mut rows = Vec::new();
        for (i, f) in ideal.normalized().generators().iter().enumerate() {
            for beta in &shifts {
                let p = f.shift(beta).truncate(k);
                if p.is_zero() {
                    continue;
                }
                let mut row = vec![F::zero(); columns.len()];
                for (e, c) in p.terms() {
                    row[index[e]] = c.clone();
                }
                row_labels.push((i, beta.clone()));
                rows.push(row);
            }
        }
        Ok(MacaulayMatrix { k, columns, row_labels, rows })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn columns(&self) -> &[Exponent] {
        &self.columns
    }

    /// `(generator index, shift β)` of each stored row.
    pub fn row_labels(&self) -> &[(usize, Exponent)] {
        &self.row_labels
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Null vectors read as functionals `Σ v_α ∂^α`.
    pub fn null_functionals(&self, policy: &RankPolicy) -> Result<Vec<DualFunctional<F>>> {
        let n = self.columns[0].len();
        let kernel = F::kernel(&self.rows, self.columns.len(), policy)?;
        kernel
            .into_iter()
            .map(|v| DualFunctional::from_terms(n, self.columns.iter().cloned().zip(v)))
            .collect()
    }
}

/// `D₀^k[I]` as the null space of the degree-`k` Macaulay matrix, reduced
/// under the dual order of `order`.
pub fn truncated_dual_direct<F: Scalar>(
    ideal: &Ideal<F>,
    k: u32,
    order: &OrderSpec,
    policy: &RankPolicy,
) -> Result<TruncatedDualSpace<F>> {
    order.check_vars(ideal.num_vars())?;
    let m = MacaulayMatrix::new(ideal, k)?;
    let null = m.null_functionals(policy)?;
    TruncatedDualSpace::from_functionals(k, order.clone(), &null, ideal.fingerprint(), policy)
}
