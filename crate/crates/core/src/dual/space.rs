use std::collections::{BTreeSet, HashMap};

use crate::dual::DualFunctional;
use crate::error::{Error, Result};
use crate::linalg::RankPolicy;
use crate::poly::{exponents_up_to, Exponent, OrderSpec};
use crate::scalar::Scalar;

fn union_support<'a, F: Scalar>(fs: impl IntoIterator<Item = &'a DualFunctional<F>>) -> Vec<Exponent> {
    let set: BTreeSet<&Exponent> = fs.into_iter().flat_map(|q| q.support()).collect();
    set.into_iter().cloned().collect()
}

fn dense<F: Scalar>(q: &DualFunctional<F>, index: &HashMap<&Exponent, usize>, ncols: usize) -> Vec<F> {
    let mut row = vec![F::zero(); ncols];
    for (e, c) in q.terms() {
        row[index[e]] = c.clone();
    }
    row
}

fn sparse<F: Scalar>(row: &[F], columns: &[Exponent]) -> DualFunctional<F> {
    let n = columns.first().map_or(0, Exponent::len);
    let mut q = DualFunctional::zero(n);
    for (c, e) in row.iter().zip(columns) {
        if !c.is_zero() {
            q.terms.insert(e.clone(), c.clone());
        }
    }
    q
}

fn check_vars<F: Scalar>(fs: &[DualFunctional<F>], n: usize) -> Result<()> {
    match fs.iter().find(|q| q.num_vars() != n) {
        Some(q) => Err(Error::DimensionMismatch { expected: n, found: q.num_vars() }),
        None => Ok(()),
    }
}

/// Gaussian elimination in the dual order: the result spans the same space,
/// has pairwise distinct initial terms, and each initial term is absent from
/// every other element. Output is sorted by increasing initial term (so
/// `∂^0` comes first when present). Dependent inputs are pruned.
pub fn reduce_basis<F: Scalar>(
    functionals: &[DualFunctional<F>],
    order: &OrderSpec,
    policy: &RankPolicy,
) -> Result<Vec<DualFunctional<F>>> {
    check_vars(functionals, order.num_vars())?;
    let mut columns = union_support(functionals);
    // dual-largest first, so the echelon pivot of a row is its initial term
    columns.sort_by(|a, b| order.dual_cmp(b, a));
    let index: HashMap<&Exponent, usize> = columns.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let rows: Vec<Vec<F>> = functionals
        .iter()
        .filter(|q| !q.is_zero())
        .map(|q| dense(q, &index, columns.len()))
        .collect();
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    let ech = F::echelon(&rows, columns.len(), policy)?;
    Ok(ech.iter().rev().map(|(_, row)| sparse(row, &columns)).collect())
}

/// Initial terms of a basis, failing when two coincide.
pub fn initial_support<F: Scalar>(basis: &[DualFunctional<F>], order: &OrderSpec) -> Result<Vec<Exponent>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(basis.len());
    for q in basis {
        let (e, _) = q.initial_term(order).ok_or(Error::UnreducedBasis)?;
        if !seen.insert(e.clone()) {
            return Err(Error::UnreducedBasis);
        }
        out.push(e.clone());
    }
    Ok(out)
}

/// Whether `span(b) ⊆ span(a)`, with the largest relative residual seen.
pub fn span_contains<F: Scalar>(
    a: &[DualFunctional<F>],
    b: &[DualFunctional<F>],
    policy: &RankPolicy,
) -> Result<(bool, f64)> {
    let columns = union_support(a.iter().chain(b));
    let index: HashMap<&Exponent, usize> = columns.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let rows: Vec<Vec<F>> = a.iter().map(|q| dense(q, &index, columns.len())).collect();
    let mut worst: f64 = 0.0;
    let mut all = true;
    for q in b {
        let v = dense(q, &index, columns.len());
        let r = F::span_residual(&rows, &v, policy)?;
        worst = worst.max(r);
        all &= if F::EXACT { r == 0.0 } else { r <= policy.tol };
    }
    Ok((all, worst))
}

pub fn span_equal<F: Scalar>(a: &[DualFunctional<F>], b: &[DualFunctional<F>], policy: &RankPolicy) -> Result<bool> {
    Ok(span_contains(a, b, policy)?.0 && span_contains(b, a, policy)?.0)
}

/// Reduced basis of `span(a) ∩ span(b)`.
pub fn intersect_spans<F: Scalar>(
    a: &[DualFunctional<F>],
    b: &[DualFunctional<F>],
    order: &OrderSpec,
    policy: &RankPolicy,
) -> Result<Vec<DualFunctional<F>>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let columns = union_support(a.iter().chain(b));
    let index: HashMap<&Exponent, usize> = columns.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let av: Vec<Vec<F>> = a.iter().map(|q| dense(q, &index, columns.len())).collect();
    let bv: Vec<Vec<F>> = b.iter().map(|q| dense(q, &index, columns.len())).collect();
    // unknowns (s, t) with Σ s_i a_i − Σ t_j b_j = 0; one equation per coordinate
    let rows: Vec<Vec<F>> = (0..columns.len())
        .map(|c| {
            av.iter()
                .map(|v| v[c].clone())
                .chain(bv.iter().map(|v| -v[c].clone()))
                .collect()
        })
        .collect();
    let kernel = F::kernel(&rows, a.len() + b.len(), policy)?;
    let n = order.num_vars();
    let combos: Vec<DualFunctional<F>> = kernel
        .iter()
        .map(|s| {
            a.iter()
                .zip(s)
                .fold(DualFunctional::zero(n), |acc, (q, c)| acc.add(&q.scale(c)))
        })
        .collect();
    reduce_basis(&combos, order, policy)
}

/// A reduced basis of the truncated dual space `D₀^k[I]` together with the
/// order it was reduced under.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedDualSpace<F: Scalar> {
    num_vars: usize,
    k: u32,
    order: OrderSpec,
    basis: Vec<DualFunctional<F>>,
    fingerprint: String,
}

impl<F: Scalar> TruncatedDualSpace<F> {
    /// Reduces `functionals` under `order`; every element must have order at
    /// most `k`.
    pub fn from_functionals(
        k: u32,
        order: OrderSpec,
        functionals: &[DualFunctional<F>],
        fingerprint: impl Into<String>,
        policy: &RankPolicy,
    ) -> Result<Self> {
        if let Some(q) = functionals.iter().find(|q| q.order() > k) {
            return Err(Error::InvalidArgument(format!(
                "functional of order {} exceeds the truncation degree {k}",
                q.order()
            )));
        }
        let basis = reduce_basis(functionals, &order, policy)?;
        Ok(TruncatedDualSpace {
            num_vars: order.num_vars(),
            k,
            order,
            basis,
            fingerprint: fingerprint.into(),
        })
    }

    pub(crate) fn from_reduced(k: u32, order: OrderSpec, basis: Vec<DualFunctional<F>>, fingerprint: String) -> Self {
        TruncatedDualSpace { num_vars: order.num_vars(), k, order, basis, fingerprint }
    }

    /// `D₀^k` of the zero ideal: every `∂^α` with `|α| ≤ k`.
    pub fn ambient(k: u32, order: OrderSpec) -> Self {
        let n = order.num_vars();
        let mut exps = exponents_up_to(n, k);
        exps.sort_by(|a, b| order.dual_cmp(a, b));
        let basis = exps.into_iter().map(|e| DualFunctional::monomial(e, F::one())).collect();
        TruncatedDualSpace { num_vars: n, k, order, basis, fingerprint: "ambient".into() }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[DualFunctional<F>] {
        &self.basis
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    /// Initial terms of the basis under the dual order.
    pub fn initial_support(&self) -> Result<Vec<Exponent>> {
        initial_support(&self.basis, &self.order)
    }

    pub fn contains(&self, q: &DualFunctional<F>, policy: &RankPolicy) -> Result<bool> {
        Ok(span_contains(&self.basis, std::slice::from_ref(q), policy)?.0)
    }

    pub fn contains_space(&self, other: &Self, policy: &RankPolicy) -> Result<bool> {
        Ok(span_contains(&self.basis, &other.basis, policy)?.0)
    }

    pub fn span_eq(&self, other: &Self, policy: &RankPolicy) -> Result<bool> {
        span_equal(&self.basis, &other.basis, policy)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, found: other.num_vars });
        }
        if self.k != other.k {
            return Err(Error::IncompatibleSpaces(format!("truncation degrees {} and {}", self.k, other.k)));
        }
        if self.order != other.order {
            return Err(Error::IncompatibleSpaces("spaces were reduced under different orders".into()));
        }
        Ok(())
    }

    /// Reduced basis of `span(self ∪ other)`.
    pub fn sum(&self, other: &Self, policy: &RankPolicy) -> Result<Self> {
        self.check_compatible(other)?;
        let all: Vec<_> = self.basis.iter().chain(&other.basis).cloned().collect();
        let basis = reduce_basis(&all, &self.order, policy)?;
        Ok(TruncatedDualSpace {
            basis,
            fingerprint: format!("{}+{}", self.fingerprint, other.fingerprint),
            ..self.clone()
        })
    }

    /// Reduced basis of `span(self) ∩ span(other)`.
    pub fn intersect(&self, other: &Self, policy: &RankPolicy) -> Result<Self> {
        self.check_compatible(other)?;
        let basis = intersect_spans(&self.basis, &other.basis, &self.order, policy)?;
        Ok(TruncatedDualSpace {
            basis,
            fingerprint: format!("{}&{}", self.fingerprint, other.fingerprint),
            ..self.clone()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Complex, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn d(e: [u32; 2], c: i64) -> DualFunctional<Rational> {
        DualFunctional::monomial(Exponent::from(e), q(c))
    }

    #[test]
    fn reduce_eliminates_shared_terms() {
        let ord = OrderSpec::graded_local(2);
        let pol = RankPolicy::default();
        let input = vec![d([1, 0], 1), d([1, 0], 1).add(&d([0, 1], 1))];
        let out = reduce_basis(&input, &ord, &pol).unwrap();
        assert_eq!(out.len(), 2);
        assert!(span_equal(&out, &[d([1, 0], 1), d([0, 1], 1)], &pol).unwrap());
        let supp = initial_support(&out, &ord).unwrap();
        assert_eq!(supp.len(), 2);
    }

    #[test]
    fn reduce_prunes_dependent_inputs() {
        let ord = OrderSpec::graded_local(2);
        let out = reduce_basis(&[d([0, 0], 1), d([0, 0], 2)], &ord, &RankPolicy::default()).unwrap();
        assert_eq!(out, vec![d([0, 0], 1)]);
    }

    #[test]
    fn reduced_initial_term_is_monic_and_unique() {
        let ord = OrderSpec::graded_local(2);
        let input = vec![d([0, 2], 3).add(&d([1, 0], 1)), d([0, 2], 1).add(&d([0, 1], 2)), d([0, 0], 5)];
        let out = reduce_basis(&input, &ord, &RankPolicy::default()).unwrap();
        let supp = initial_support(&out, &ord).unwrap();
        for (qf, e) in out.iter().zip(&supp) {
            assert_eq!(qf.coeff(e), q(1));
            for other in out.iter().filter(|o| *o != qf) {
                assert_eq!(other.coeff(e), q(0));
            }
        }
    }

    #[test]
    fn unreduced_basis_is_detected() {
        let ord = OrderSpec::graded_local(2);
        let bad = vec![d([1, 0], 1), d([1, 0], 1).add(&d([0, 0], 1))];
        assert_eq!(initial_support(&bad, &ord).unwrap_err(), Error::UnreducedBasis);
    }

    #[test]
    fn complex_reduce_matches_exact_support() {
        let ord = OrderSpec::graded_local(2);
        let c = |e: [u32; 2], re: f64| DualFunctional::monomial(Exponent::from(e), Complex::new(re, 0.0));
        let input = vec![c([1, 0], 1.0), c([1, 0], 1.0).add(&c([0, 1], 1.0)), c([0, 0], 2.0)];
        let out = reduce_basis(&input, &ord, &RankPolicy::default()).unwrap();
        let supp = initial_support(&out, &ord).unwrap();
        let exact = reduce_basis(
            &[d([1, 0], 1), d([1, 0], 1).add(&d([0, 1], 1)), d([0, 0], 2)],
            &ord,
            &RankPolicy::default(),
        )
        .unwrap();
        assert_eq!(supp, initial_support(&exact, &ord).unwrap());
    }

    #[test]
    fn intersection_of_coordinate_spans() {
        let ord = OrderSpec::graded_local(2);
        let pol = RankPolicy::default();
        let a = vec![d([0, 0], 1), d([0, 1], 1)];
        let b = vec![d([0, 0], 1), d([1, 0], 1)];
        let i = intersect_spans(&a, &b, &ord, &pol).unwrap();
        assert_eq!(i, vec![d([0, 0], 1)]);
    }

    #[test]
    fn sum_rejects_mismatched_degrees() {
        let ord = OrderSpec::graded_local(2);
        let pol = RankPolicy::default();
        let a = TruncatedDualSpace::<Rational>::ambient(1, ord.clone());
        let b = TruncatedDualSpace::<Rational>::ambient(2, ord);
        assert!(matches!(a.sum(&b, &pol), Err(Error::IncompatibleSpaces(_))));
        assert_eq!(a.sum(&a, &pol).unwrap().dim(), 3);
    }
}
