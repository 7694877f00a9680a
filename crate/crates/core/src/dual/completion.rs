//! The completion scheme: `D^i` is obtained from `D^{i−1}` as the functionals
//! whose every first-order contraction lies in `D^{i−1}` and which annihilate
//! the generators.

use std::collections::{BTreeSet, HashMap};

use crate::dual::{reduce_basis, DualFunctional, TruncatedDualSpace};
use crate::error::Result;
use crate::linalg::RankPolicy;
use crate::poly::{Exponent, Ideal, OrderSpec};
use crate::scalar::Scalar;

/// The filtration `D₀^0 ⊆ D₀^1 ⊆ …` of an ideal, advanced one degree at a
/// time.
#[derive(Debug, Clone)]
pub struct Filtration<F: Scalar> {
    ideal: Ideal<F>,
    order: OrderSpec,
    policy: RankPolicy,
    degree: u32,
    basis: Vec<DualFunctional<F>>,
    fingerprint: String,
}

impl<F: Scalar> Filtration<F> {
    /// Starts at `D₀^0 = span{∂^0}`.
    pub fn new(ideal: &Ideal<F>, order: &OrderSpec, policy: &RankPolicy) -> Result<Self> {
        order.check_vars(ideal.num_vars())?;
        ideal.check_vanishes_at_origin()?;
        Ok(Filtration {
            ideal: ideal.normalized(),
            order: order.clone(),
            policy: *policy,
            degree: 0,
            basis: vec![DualFunctional::evaluation(ideal.num_vars())],
            fingerprint: ideal.fingerprint(),
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[DualFunctional<F>] {
        &self.basis
    }

    pub fn space(&self) -> TruncatedDualSpace<F> {
        TruncatedDualSpace::from_reduced(self.degree, self.order.clone(), self.basis.clone(), self.fingerprint.clone())
    }

    /// Moves to the next degree and returns its dimension.
    pub fn advance(&mut self) -> Result<usize> {
        let n = self.ideal.num_vars();
        let i = self.degree + 1;
        let r = self.basis.len();
        // unknowns: u0, then c[j][s] at 1 + j*r + s, with x_j·q = Σ_s c[j][s] b_s
        let nunk = 1 + n * r;
        let prev: Vec<HashMap<&Exponent, &F>> = self.basis.iter().map(|b| b.terms().collect()).collect();
        // coefficient of ∂^α in x_j·q as a linear form in the unknowns
        let form = |alpha: &Exponent, j: usize| -> Option<Vec<F>> {
            let beta = alpha.checked_sub(&Exponent::unit(n, j))?;
            let mut row = vec![F::zero(); nunk];
            for (s, b) in prev.iter().enumerate() {
                if let Some(c) = b.get(&beta) {
                    row[1 + j * r + s] = (*c).clone();
                }
            }
            Some(row)
        };

        // q_α can only be nonzero when α − e_j lies in the previous support
        let mut alphas: BTreeSet<Exponent> = self
            .basis
            .iter()
            .flat_map(|b| b.support())
            .flat_map(|beta| (0..n).map(move |j| beta.add(&Exponent::unit(n, j))))
            .collect();
        alphas.insert(Exponent::zero(n));
        let mut rows: Vec<Vec<F>> = Vec::new();
        // q_α as a linear form, for every α
        let mut coeff_forms: Vec<(Exponent, Vec<F>)> = Vec::with_capacity(alphas.len());
        for alpha in &alphas {
            if alpha.is_zero() {
                let mut row = vec![F::zero(); nunk];
                row[0] = F::one();
                coeff_forms.push((alpha.clone(), row));
                continue;
            }
            let forms: Vec<Vec<F>> = (0..n).filter_map(|j| form(alpha, j)).collect();
            for other in &forms[1..] {
                let diff: Vec<F> = other.iter().zip(&forms[0]).map(|(a, b)| a.clone() - b.clone()).collect();
                if diff.iter().any(|c| !c.is_zero()) {
                    rows.push(diff);
                }
            }
            coeff_forms.push((alpha.clone(), forms[0].clone()));
        }
        for f in self.ideal.generators() {
            let mut row = vec![F::zero(); nunk];
            for (alpha, form) in &coeff_forms {
                let c = f.coeff(alpha);
                if c.is_zero() {
                    continue;
                }
                for (dst, src) in row.iter_mut().zip(form) {
                    if !src.is_zero() {
                        *dst = dst.clone() + src.clone() * c.clone();
                    }
                }
            }
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }

        let kernel = F::kernel(&rows, nunk, &self.policy)?;
        let candidates: Vec<DualFunctional<F>> = kernel
            .iter()
            .map(|v| {
                let terms = coeff_forms.iter().map(|(alpha, form)| {
                    let c = form
                        .iter()
                        .zip(v)
                        .filter(|(a, _)| !a.is_zero())
                        .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone());
                    (alpha.clone(), c)
                });
                DualFunctional::from_terms(n, terms)
            })
            .collect::<Result<_>>()?;
        let candidates: Vec<_> = if F::EXACT {
            candidates
        } else {
            candidates.iter().map(|q| q.chop(self.policy.tol * 1e-3)).collect()
        };
        self.basis = reduce_basis(&candidates, &self.order, &self.policy)?;
        self.degree = i;
        Ok(self.basis.len())
    }
}

/// `D₀^k[I]` by the completion scheme.
pub fn truncated_dual_completion<F: Scalar>(
    ideal: &Ideal<F>,
    k: u32,
    order: &OrderSpec,
    policy: &RankPolicy,
) -> Result<TruncatedDualSpace<F>> {
    let mut filt = Filtration::new(ideal, order, policy)?;
    while filt.degree() < k {
        filt.advance()?;
    }
    Ok(filt.space())
}

/// Result of [`full_dual_zero_dim`].
#[derive(Debug, Clone)]
pub struct FullDual<F: Scalar> {
    /// `D₀^i` at the first `i` with `dim D₀^i = dim D₀^{i+1}`, or the last
    /// computed truncation when the cap was hit.
    pub space: TruncatedDualSpace<F>,
    /// Whether stabilization was observed.
    pub complete: bool,
    /// `dim D₀^0, dim D₀^1, …` as computed (including the confirming degree).
    pub dims: Vec<usize>,
}

/// The full local dual space of an ideal that is expected to be
/// 0-dimensional at the origin, computed up to degree `max_degree`.
pub fn full_dual_zero_dim<F: Scalar>(
    ideal: &Ideal<F>,
    order: &OrderSpec,
    policy: &RankPolicy,
    max_degree: u32,
) -> Result<FullDual<F>> {
    let mut filt = Filtration::new(ideal, order, policy)?;
    let mut dims = vec![filt.dim()];
    let mut last = filt.space();
    while filt.degree() < max_degree {
        let d = filt.advance()?;
        dims.push(d);
        if d == last.dim() {
            return Ok(FullDual { space: last, complete: true, dims });
        }
        last = filt.space();
    }
    Ok(FullDual { space: last, complete: false, dims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::{span_equal, truncated_dual_direct};
    use crate::poly::Polynomial;
    use crate::scalar::{Complex, Rational};

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> Polynomial<Rational> {
        Polynomial::from_terms(n, terms.iter().map(|(e, c)| (Exponent::new(e.to_vec()), Rational::from_i64(*c))))
            .unwrap()
    }

    fn cusp() -> Ideal<Rational> {
        Ideal::new(
            3,
            vec![poly(3, &[(&[2, 0, 0], 1), (&[0, 0, 3], -1)]), poly(3, &[(&[0, 1, 0], 1), (&[0, 0, 2], -1)])],
        )
        .unwrap()
    }

    #[test]
    fn degree_zero_is_evaluation() {
        let d = truncated_dual_completion(&cusp(), 0, &OrderSpec::graded_local(3), &RankPolicy::default()).unwrap();
        assert_eq!(d.basis(), &[DualFunctional::evaluation(3)]);
    }

    #[test]
    fn agrees_with_direct_on_cusp() {
        let ord = OrderSpec::graded_local(3);
        let pol = RankPolicy::default();
        for k in 0..5 {
            let a = truncated_dual_completion(&cusp(), k, &ord, &pol).unwrap();
            let b = truncated_dual_direct(&cusp(), k, &ord, &pol).unwrap();
            assert_eq!(a.basis(), b.basis(), "k = {k}");
        }
    }

    #[test]
    fn complex_agrees_with_exact_dimensions() {
        let ord = OrderSpec::graded_local(3);
        let pol = RankPolicy::default();
        let ci = Ideal::new(
            3,
            cusp()
                .generators()
                .iter()
                .map(|f| {
                    Polynomial::from_terms(3, f.terms().map(|(e, c)| (e.clone(), Complex::from_rational(c)))).unwrap()
                })
                .collect(),
        )
        .unwrap();
        for k in 0..5 {
            let a = truncated_dual_completion(&ci, k, &ord, &pol).unwrap();
            let b = truncated_dual_direct(&cusp(), k, &ord, &pol).unwrap();
            assert_eq!(a.dim(), b.dim());
            assert_eq!(a.initial_support().unwrap(), b.initial_support().unwrap());
        }
    }

    #[test]
    fn full_dual_of_maximal_ideal_stops_at_zero() {
        let i = Ideal::new(2, vec![poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 1], 1)])]).unwrap();
        let fd = full_dual_zero_dim(&i, &OrderSpec::graded_local(2), &RankPolicy::default(), 5).unwrap();
        assert!(fd.complete);
        assert_eq!(fd.space.k(), 0);
        assert_eq!(fd.space.dim(), 1);
    }

    #[test]
    fn full_dual_of_squares() {
        let i = Ideal::new(2, vec![poly(2, &[(&[2, 0], 1)]), poly(2, &[(&[0, 2], 1)])]).unwrap();
        let fd = full_dual_zero_dim(&i, &OrderSpec::graded_local(2), &RankPolicy::default(), 6).unwrap();
        assert!(fd.complete);
        let want: Vec<DualFunctional<Rational>> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|e| DualFunctional::monomial(Exponent::from(*e), Rational::from_i64(1)))
            .collect();
        assert!(span_equal(fd.space.basis(), &want, &RankPolicy::default()).unwrap());
    }

    #[test]
    fn curve_does_not_stabilize() {
        let fd = full_dual_zero_dim(&cusp(), &OrderSpec::graded_local(3), &RankPolicy::default(), 4).unwrap();
        assert!(!fd.complete);
        assert_eq!(fd.dims, vec![1, 3, 5, 7, 9]);
    }
}
