use std::cmp::Ordering;

use proptest::prelude::*;

use dualspace::dual::{span_contains, span_equal, truncated_dual_completion, truncated_dual_direct, DualFunctional};
use dualspace::elim::eliminating_dual;
use dualspace::hilbert::{hilbert_function, standard_monomials};
use dualspace::linalg::RankPolicy;
use dualspace::poly::{exponents_up_to, invertible, Exponent, Ideal, OrderSpec, Polynomial};
use dualspace::scalar::{Complex, Rational, Scalar};

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn exponent(n: usize, max: u32) -> impl Strategy<Value = Exponent> {
    prop::collection::vec(0..=max, n).prop_map(Exponent::new)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| q(a) / q(b))
}

fn polynomial(n: usize, max: u32, min_degree: u32) -> impl Strategy<Value = Polynomial<Rational>> {
    let exps: Vec<Exponent> = exponents_up_to(n, max).into_iter().filter(|e| e.degree() >= min_degree).collect();
    prop::collection::vec((prop::sample::select(exps), rational()), 1..=4)
        .prop_map(move |terms| Polynomial::from_terms(n, terms).unwrap())
}

fn functional(n: usize, max: u32) -> impl Strategy<Value = DualFunctional<Rational>> {
    prop::collection::vec((exponent(n, max), rational()), 1..=5)
        .prop_map(move |terms| DualFunctional::from_terms(n, terms).unwrap())
}

/// Up to three generators of degree ≤ 3 vanishing at the origin.
fn ideal(n: usize) -> impl Strategy<Value = Ideal<Rational>> {
    prop::collection::vec(polynomial(n, 3, 1), 1..=3)
        .prop_filter_map("zero generator", move |gens| Ideal::new(n, gens).ok())
}

fn sized_ideal() -> impl Strategy<Value = Ideal<Rational>> {
    (1usize..=3).prop_flat_map(ideal)
}

fn order(n: usize) -> impl Strategy<Value = OrderSpec> {
    let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
    let block = prop::collection::vec(any::<bool>(), n);
    (perm, block, any::<bool>()).prop_map(move |(perm, block, graded)| {
        let base = if graded {
            OrderSpec::graded_local(n)
        } else {
            let a: Vec<usize> = (0..n).filter(|&i| block[i]).collect();
            OrderSpec::elimination(n, &a).unwrap()
        };
        base.with_permutation(perm).unwrap()
    })
}

fn to_complex(f: &Polynomial<Rational>) -> Polynomial<Complex> {
    Polynomial::from_terms(f.num_vars(), f.terms().map(|(e, c)| (e.clone(), c.to_complex()))).unwrap()
}

fn policy() -> RankPolicy {
    RankPolicy::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn order_is_total_and_antisymmetric(ord in order(3), a in exponent(3, 6), b in exponent(3, 6)) {
        let ab = ord.cmp(&a, &b);
        prop_assert_eq!(ab, ord.cmp(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(ord.dual_cmp(&a, &b), ab.reverse());
    }

    #[test]
    fn order_is_transitive(ord in order(3), a in exponent(3, 4), b in exponent(3, 4), c in exponent(3, 4)) {
        let mut v = [a, b, c];
        v.sort_by(|x, y| ord.cmp(x, y));
        prop_assert_ne!(ord.cmp(&v[0], &v[2]), Ordering::Greater);
    }

    #[test]
    fn one_is_the_largest_monomial(ord in order(3), a in exponent(3, 5)) {
        let one = Exponent::zero(3);
        if a != one {
            prop_assert_eq!(ord.cmp(&one, &a), Ordering::Greater);
        }
    }

    #[test]
    fn truncation_is_idempotent_and_linear(
        f in polynomial(3, 5, 0),
        g in polynomial(3, 5, 0),
        k in 0u32..=5,
    ) {
        prop_assert_eq!(f.truncate(k).truncate(k), f.truncate(k));
        prop_assert_eq!((&f + &g).truncate(k), &f.truncate(k) + &g.truncate(k));
        prop_assert!(f.truncate(k).degree().unwrap_or(0) <= k);
    }

    #[test]
    fn translation_round_trips(f in polynomial(3, 4, 0), y in prop::collection::vec(rational(), 3)) {
        let minus: Vec<Rational> = y.iter().map(|c| -c.clone()).collect();
        let there = f.translate_to_point(&y, 1e-8).unwrap();
        prop_assert_eq!(there.translate_to_point(&minus, 1e-8).unwrap(), f);
    }

    #[test]
    fn adjunction_exact(
        g in polynomial(3, 4, 0),
        f in polynomial(3, 4, 0),
        qf in functional(3, 4),
    ) {
        let lhs = qf.contract(&g).unwrap().apply(&f).unwrap();
        let rhs = qf.apply(&(&g * &f)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjunction_complex(
        g in polynomial(3, 4, 0),
        f in polynomial(3, 4, 0),
        qf in functional(3, 4),
        phase in 0.0f64..std::f64::consts::TAU,
    ) {
        let w = Complex::from_polar(1.0, phase);
        let gc = to_complex(&g).scale(&w);
        let fc = to_complex(&f);
        let qc = DualFunctional::from_terms(3, qf.terms().map(|(e, c)| (e.clone(), c.to_complex() * w))).unwrap();
        let lhs = qc.contract(&gc).unwrap().apply(&fc).unwrap();
        let rhs = qc.apply(&(&gc * &fc)).unwrap();
        let scale = 1.0 + rhs.norm();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * scale, "{lhs} vs {rhs}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn direct_dual_annihilates_truncated_shifts(i in sized_ideal(), k in 1u32..=3) {
        let n = i.num_vars();
        let d = truncated_dual_direct(&i, k, &OrderSpec::graded_local(n), &policy()).unwrap();
        for qf in d.basis() {
            for f in i.generators() {
                for beta in exponents_up_to(n, k - 1) {
                    let shifted = f.shift(&beta).truncate(k);
                    prop_assert!(qf.apply(&shifted).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn completion_matches_direct(i in sized_ideal()) {
        let ord = OrderSpec::graded_local(i.num_vars());
        for k in 0..=4 {
            let a = truncated_dual_direct(&i, k, &ord, &policy()).unwrap();
            let b = truncated_dual_completion(&i, k, &ord, &policy()).unwrap();
            prop_assert!(a.span_eq(&b, &policy()).unwrap(), "k = {}", k);
        }
    }

    #[test]
    fn filtration_is_monotone_and_closed(i in sized_ideal()) {
        let n = i.num_vars();
        let ord = OrderSpec::graded_local(n);
        let spaces: Vec<_> = (0..=4).map(|k| truncated_dual_completion(&i, k, &ord, &policy()).unwrap()).collect();
        for w in spaces.windows(2) {
            prop_assert!(w[0].dim() <= w[1].dim());
            prop_assert!(w[1].contains_space(&w[0], &policy()).unwrap());
            for qf in w[1].basis() {
                for j in 0..n {
                    prop_assert!(w[0].contains(&qf.contract_var(j), &policy()).unwrap());
                }
            }
        }
    }

    #[test]
    fn dimension_is_invariant_under_linear_change(
        i in ideal(3),
        m in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 3),
    ) {
        let m: Vec<Vec<Rational>> = m.into_iter().map(|r| r.into_iter().map(q).collect()).collect();
        prop_assume!(invertible(&m, &policy()).unwrap());
        let changed = i.apply_linear_change(&m, &policy()).unwrap();
        let ord = OrderSpec::graded_local(3);
        for k in 0..=3 {
            let a = truncated_dual_completion(&i, k, &ord, &policy()).unwrap().dim();
            let b = truncated_dual_completion(&changed, k, &ord, &policy()).unwrap().dim();
            prop_assert_eq!(a, b, "k = {}", k);
        }
    }

    #[test]
    fn sum_of_ideals_intersects_duals(a in ideal(2), b in ideal(2), k in 1u32..=3) {
        let ord = OrderSpec::graded_local(2);
        let both = Ideal::new(2, a.generators().iter().chain(b.generators()).cloned().collect()).unwrap();
        let da = truncated_dual_direct(&a, k, &ord, &policy()).unwrap();
        let db = truncated_dual_direct(&b, k, &ord, &policy()).unwrap();
        let dab = truncated_dual_direct(&both, k, &ord, &policy()).unwrap();
        prop_assert!(da.intersect(&db, &policy()).unwrap().span_eq(&dab, &policy()).unwrap());
    }

    #[test]
    fn eliminating_dual_with_every_variable_is_truncated_dual(i in sized_ideal(), d in 0u32..=3) {
        let n = i.num_vars();
        let all: Vec<usize> = (0..n).collect();
        let e = eliminating_dual(&i, &all, d, &policy(), None).unwrap();
        prop_assert!(e.complete());
        let t = truncated_dual_direct(&i, d, &OrderSpec::graded_local(n), &policy()).unwrap();
        prop_assert!(span_equal(e.basis(), t.basis(), &policy()).unwrap());
    }

    #[test]
    fn hilbert_values_do_not_depend_on_the_order(i in sized_ideal(), perm_seed in any::<u64>()) {
        let n = i.num_vars();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left((perm_seed % n as u64) as usize);
        let ord = OrderSpec::graded_local(n).with_permutation(perm).unwrap();
        let dims: Vec<usize> =
            (0..=3).map(|k| truncated_dual_completion(&i, k, &ord, &policy()).unwrap().dim()).collect();
        let h = hilbert_function(&i, 3, &policy()).unwrap();
        let from_dims: Vec<usize> =
            (0..dims.len()).map(|k| if k == 0 { dims[0] } else { dims[k] - dims[k - 1] }).collect();
        prop_assert_eq!(h, from_dims);
    }
}

fn monomial_generators(n: usize) -> impl Strategy<Value = Vec<Exponent>> {
    prop::collection::vec(exponent(n, 3).prop_filter("constant", |e| !e.is_zero()), 1..=3)
}

fn monomial_ideal(n: usize, gens: &[Exponent]) -> Ideal<Rational> {
    Ideal::new(n, gens.iter().map(|e| Polynomial::monomial(e.clone(), q(1))).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn staircase_of_monomial_ideal(gens in monomial_generators(3), k in 0u32..=4) {
        let i = monomial_ideal(3, &gens);
        let ord = OrderSpec::graded_local(3);
        let s = standard_monomials(&i, k, &ord, &policy()).unwrap();
        let lattice = exponents_up_to(3, k);
        prop_assert_eq!(s.standard.len() + s.initial_ideal.len(), lattice.len());
        for e in &lattice {
            let inside = gens.iter().any(|g| g.divides(e));
            prop_assert_eq!(s.initial_ideal.contains(e), inside);
            prop_assert_eq!(s.standard.contains(e), !inside);
        }
        let dim = truncated_dual_direct(&i, k, &ord, &policy()).unwrap().dim();
        prop_assert_eq!(dim, s.standard.len());
    }

    #[test]
    fn eliminating_duals_are_nested(gens in monomial_generators(3), py in 1u32..=3, pz in 1u32..=3) {
        let mut gens = gens;
        gens.push(Exponent::new(vec![0, py, 0]));
        gens.push(Exponent::new(vec![0, 0, pz]));
        let i = monomial_ideal(3, &gens);
        let es: Vec<_> = (0..=3).map(|d| eliminating_dual(&i, &[0], d, &policy(), None).unwrap()).collect();
        for w in es.windows(2) {
            prop_assert!(w[0].complete() && w[1].complete());
            prop_assert!(span_contains(w[1].basis(), w[0].basis(), &policy()).unwrap().0);
            prop_assert!(w[0].dim() <= w[1].dim());
        }
    }

    #[test]
    fn contraction_kernel_is_the_dual_of_the_principal_ideal(g in exponent(2, 2), qf in functional(2, 4)) {
        prop_assume!(!g.is_zero());
        let gp = Polynomial::monomial(g.clone(), q(1));
        let killed = qf.contract(&gp).unwrap().is_zero();
        let principal = Ideal::new(2, vec![gp]).unwrap();
        let d = truncated_dual_direct(&principal, qf.order(), &OrderSpec::graded_local(2), &policy()).unwrap();
        prop_assert_eq!(killed, d.contains(&qf, &policy()).unwrap());
    }
}
