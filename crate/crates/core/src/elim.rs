//! Eliminating truncated dual spaces `E^d[I, A] = D₀[I + ⟨A⟩^{d+1}]` and
//! duals of colon ideals through the differentiation action.

use crate::dual::{full_dual_zero_dim, reduce_basis, span_contains, DualFunctional, TruncatedDualSpace};
use crate::error::{Error, Result};
use crate::linalg::RankPolicy;
use crate::poly::{exponents_of_degree, Exponent, Ideal, OrderSpec, Polynomial};
use crate::scalar::Scalar;

/// `ord_A q`: the largest total degree in the variables of `a` over the
/// support of `q`; 0 for the zero functional.
pub fn ord_a<F: Scalar>(q: &DualFunctional<F>, a: &[usize]) -> u32 {
    let mut mask = vec![false; q.num_vars()];
    for &i in a {
        if i < mask.len() {
            mask[i] = true;
        }
    }
    q.order_in(&mask)
}

/// A reduced basis of `E^d[I, A]` under the elimination order for `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct EliminatingDualSpace<F: Scalar> {
    basis: Vec<DualFunctional<F>>,
    a: Vec<usize>,
    d: u32,
    cap_used: u32,
    complete: bool,
    order: OrderSpec,
}

impl<F: Scalar> EliminatingDualSpace<F> {
    pub fn basis(&self) -> &[DualFunctional<F>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The eliminated variables, sorted.
    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Degree cap of the underlying stabilization loop.
    pub fn cap_used(&self) -> u32 {
        self.cap_used
    }

    /// Whether the underlying dual stabilized below the cap.
    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn num_vars(&self) -> usize {
        self.order.num_vars()
    }

    pub fn initial_support(&self) -> Result<Vec<Exponent>> {
        crate::dual::initial_support(&self.basis, &self.order)
    }
}

fn normalize_vars(n: usize, a: &[usize]) -> Result<Vec<usize>> {
    let mut v = a.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.is_empty() {
        return Err(Error::InvalidArgument("the eliminated set is empty".into()));
    }
    if let Some(&bad) = v.iter().find(|&&i| i >= n) {
        return Err(Error::InvalidArgument(format!("variable index {bad} out of range for {n} variables")));
    }
    Ok(v)
}

/// Every monomial of degree `deg` in the variables `a`.
fn block_monomials<F: Scalar>(n: usize, a: &[usize], deg: u32) -> Vec<Polynomial<F>> {
    exponents_of_degree(a.len(), deg)
        .into_iter()
        .map(|e| {
            let mut full = vec![0; n];
            for (&v, &p) in a.iter().zip(e.as_slice()) {
                full[v] = p;
            }
            Polynomial::monomial(Exponent::new(full), F::one())
        })
        .collect()
}

/// Default cap on the stabilization degree: `d + 2·Σ deg f_i`.
pub fn default_cap<F: Scalar>(ideal: &Ideal<F>, d: u32) -> u32 {
    d + 2 * ideal.degree_sum()
}

/// `E^d[I, A]`, computed as the full dual of `I + ⟨A⟩^{d+1}`.
///
/// When the dual does not stabilize by `max_degree` (default
/// [`default_cap`]) the last truncation is returned with
/// `complete() == false`; this happens when `I` has a component inside
/// `{A = 0}`.
pub fn eliminating_dual<F: Scalar>(
    ideal: &Ideal<F>,
    a: &[usize],
    d: u32,
    policy: &RankPolicy,
    max_degree: Option<u32>,
) -> Result<EliminatingDualSpace<F>> {
    let n = ideal.num_vars();
    let a = normalize_vars(n, a)?;
    let order = OrderSpec::elimination(n, &a)?;
    let cap = max_degree.unwrap_or_else(|| default_cap(ideal, d));
    let aug = ideal.augmented(block_monomials(n, &a, d + 1))?;
    let full = full_dual_zero_dim(&aug, &order, policy, cap)?;
    let basis = full.space.basis().to_vec();
    if let Some(q) = basis.iter().find(|q| ord_a(q, &a) > d) {
        return Err(Error::InvalidArgument(format!(
            "computed functional has A-order {} above the bound {d}",
            ord_a(q, &a)
        )));
    }
    Ok(EliminatingDualSpace { basis, a, d, cap_used: cap, complete: full.complete, order })
}

/// `x₁·E^{d+1}[I, {x₁}]`, which equals `E^d[I : ⟨x₁⟩, {x₁}]`.
pub fn quotient_eliminating_dual<F: Scalar>(
    e: &EliminatingDualSpace<F>,
    x1: usize,
    policy: &RankPolicy,
) -> Result<EliminatingDualSpace<F>> {
    if e.a != [x1] {
        return Err(Error::InvalidArgument(format!(
            "eliminating dual was computed for {:?}, not for the single variable {x1}",
            e.a
        )));
    }
    if !e.complete {
        return Err(Error::IncompleteEliminatingDual { cap: e.cap_used as usize });
    }
    if e.d == 0 {
        return Err(Error::InvalidArgument("contraction needs a bound d + 1 ≥ 1".into()));
    }
    let contracted: Vec<_> = e.basis.iter().map(|q| q.contract_var(x1)).collect();
    let basis = reduce_basis(&contracted, &e.order, policy)?;
    Ok(EliminatingDualSpace { basis, d: e.d - 1, ..e.clone() })
}

/// `g·D` for a truncated dual `D`, at degree `k − val(g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientDual<F: Scalar> {
    pub space: TruncatedDualSpace<F>,
    /// The span is contained in, and possibly smaller than, the truncated
    /// dual of `I : ⟨g⟩`. False only for `g` a unit at the origin.
    pub lower_bound_only: bool,
}

/// The contraction `g·D` of a truncated dual space, re-reduced under its
/// order.
pub fn quotient_dual_truncated<F: Scalar>(
    space: &TruncatedDualSpace<F>,
    g: &Polynomial<F>,
    policy: &RankPolicy,
) -> Result<QuotientDual<F>> {
    let val = g.valuation().ok_or(Error::ZeroPolynomial)?;
    let contracted = space.basis().iter().map(|q| q.contract(g)).collect::<Result<Vec<_>>>()?;
    let k = space.k().saturating_sub(val);
    let out = TruncatedDualSpace::from_functionals(k, space.order().clone(), &contracted, space.fingerprint(), policy)?;
    Ok(QuotientDual { space: out, lower_bound_only: val > 0 })
}

/// Checks `Σ_i x_i·E^{d+1}[I, vars] ⊆ E^d[J, vars]`, where `J` is the
/// supplied colon ideal `I : ⟨vars⟩`, or `I` itself when none is given.
pub fn colon_inclusion_check<F: Scalar>(
    ideal: &Ideal<F>,
    vars: &[usize],
    d: u32,
    policy: &RankPolicy,
    colon: Option<&Ideal<F>>,
) -> Result<bool> {
    let vars = normalize_vars(ideal.num_vars(), vars)?;
    let upper = eliminating_dual(ideal, &vars, d + 1, policy, None)?;
    if !upper.complete {
        return Err(Error::IncompleteEliminatingDual { cap: upper.cap_used as usize });
    }
    let target = eliminating_dual(colon.unwrap_or(ideal), &vars, d, policy, None)?;
    if !target.complete {
        return Err(Error::IncompleteEliminatingDual { cap: target.cap_used as usize });
    }
    let sum: Vec<_> = vars
        .iter()
        .flat_map(|&v| upper.basis.iter().map(move |q| q.contract_var(v)))
        .collect();
    let sum = reduce_basis(&sum, &upper.order, policy)?;
    Ok(span_contains(&target.basis, &sum, policy)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::span_equal;
    use crate::scalar::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> Polynomial<Rational> {
        Polynomial::from_terms(n, terms.iter().map(|(e, c)| (Exponent::new(e.to_vec()), r(*c)))).unwrap()
    }

    fn dual(n: usize, terms: &[(&[u32], i64)]) -> DualFunctional<Rational> {
        DualFunctional::from_terms(n, terms.iter().map(|(e, c)| (Exponent::new(e.to_vec()), r(*c)))).unwrap()
    }

    fn cusp() -> Ideal<Rational> {
        Ideal::new(
            3,
            vec![poly(3, &[(&[2, 0, 0], 1), (&[0, 0, 3], -1)]), poly(3, &[(&[0, 1, 0], 1), (&[0, 0, 2], -1)])],
        )
        .unwrap()
    }

    #[test]
    fn ord_a_examples() {
        assert_eq!(ord_a(&dual(3, &[(&[1, 0, 2], 1)]), &[0]), 1);
        assert_eq!(ord_a(&dual(3, &[(&[2, 1, 0], 1), (&[0, 0, 1], 1)]), &[0, 1]), 3);
        let q = dual(3, &[(&[1, 1, 1], 1)]);
        assert_eq!(ord_a(&q, &[0, 1, 2]), q.order());
    }

    #[test]
    fn cusp_eliminating_dual_degree_one() {
        let pol = RankPolicy::default();
        let e = eliminating_dual(&cusp(), &[0], 1, &pol, None).unwrap();
        assert!(e.complete());
        let want = vec![
            dual(3, &[(&[0, 0, 0], 1)]),
            dual(3, &[(&[0, 0, 2], 1), (&[0, 1, 0], 1)]),
            dual(3, &[(&[0, 0, 1], 1)]),
            dual(3, &[(&[1, 0, 0], 1)]),
            dual(3, &[(&[1, 0, 2], 1), (&[1, 1, 0], 1)]),
            dual(3, &[(&[1, 0, 1], 1)]),
        ];
        assert_eq!(e.dim(), 6);
        assert!(span_equal(e.basis(), &want, &pol).unwrap());
        let xe = quotient_eliminating_dual(&e, 0, &pol).unwrap();
        assert_eq!(xe.dim(), 3);
        assert!(span_equal(xe.basis(), &want[..3], &pol).unwrap());
    }

    #[test]
    fn all_variables_recovers_truncated_dual() {
        let pol = RankPolicy::default();
        let e = eliminating_dual(&cusp(), &[0, 1, 2], 2, &pol, None).unwrap();
        let d = crate::dual::truncated_dual_direct(&cusp(), 2, &OrderSpec::graded_local(3), &pol).unwrap();
        assert!(span_equal(e.basis(), d.basis(), &pol).unwrap());
    }

    #[test]
    fn line_with_embedded_origin() {
        let pol = RankPolicy::default();
        let i = Ideal::new(2, vec![poly(2, &[(&[0, 2], 1)]), poly(2, &[(&[1, 1], 1)])]).unwrap();
        let e = eliminating_dual(&i, &[0], 2, &pol, None).unwrap();
        let want = vec![
            dual(2, &[(&[0, 0], 1)]),
            dual(2, &[(&[1, 0], 1)]),
            dual(2, &[(&[2, 0], 1)]),
            dual(2, &[(&[0, 1], 1)]),
        ];
        assert!(span_equal(e.basis(), &want, &pol).unwrap());
        let xe = quotient_eliminating_dual(&e, 0, &pol).unwrap();
        assert!(span_equal(xe.basis(), &want[..2], &pol).unwrap());
    }

    #[test]
    fn quotient_requires_single_variable_and_completeness() {
        let pol = RankPolicy::default();
        let e = eliminating_dual(&cusp(), &[0, 1], 1, &pol, None).unwrap();
        assert!(matches!(quotient_eliminating_dual(&e, 0, &pol), Err(Error::InvalidArgument(_))));
        // ⟨x⟩ is the line {x = 0} itself, so E^d[⟨x⟩, {x}] is infinite
        let i = Ideal::new(2, vec![poly(2, &[(&[1, 0], 1)])]).unwrap();
        let e = eliminating_dual(&i, &[0], 1, &pol, Some(4)).unwrap();
        assert!(!e.complete());
        assert!(matches!(quotient_eliminating_dual(&e, 0, &pol), Err(Error::IncompleteEliminatingDual { .. })));
    }

    #[test]
    fn truncated_quotient_examples() {
        let pol = RankPolicy::default();
        let ord = OrderSpec::graded_local(1);
        let i = Ideal::new(1, vec![poly(1, &[(&[2], 1)])]).unwrap();
        let d3 = crate::dual::truncated_dual_direct(&i, 3, &ord, &pol).unwrap();
        let one = quotient_dual_truncated(&d3, &poly(1, &[(&[0], 1)]), &pol).unwrap();
        assert!(!one.lower_bound_only);
        assert_eq!(one.space.basis(), d3.basis());
        let x = quotient_dual_truncated(&d3, &poly(1, &[(&[1], 1)]), &pol).unwrap();
        assert!(x.lower_bound_only);
        assert_eq!(x.space.k(), 2);
        assert_eq!(x.space.basis(), &[DualFunctional::evaluation(1)]);
    }

    #[test]
    fn inclusion_on_square_of_maximal_ideal() {
        let pol = RankPolicy::default();
        let m2 = Ideal::new(
            2,
            vec![poly(2, &[(&[2, 0], 1)]), poly(2, &[(&[1, 1], 1)]), poly(2, &[(&[0, 2], 1)])],
        )
        .unwrap();
        let m = Ideal::new(2, vec![poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 1], 1)])]).unwrap();
        assert!(colon_inclusion_check(&m2, &[0, 1], 0, &pol, Some(&m)).unwrap());
        assert!(colon_inclusion_check(&m2, &[0, 1], 0, &pol, None).unwrap());
    }
}
