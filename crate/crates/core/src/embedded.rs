//! Deciding whether a point of a curve is an embedded component.
//!
//! After translating the point to the origin and a random linear change of
//! coordinates, the origin is embedded exactly when
//! `x₁·E^k[I, {x₁}] ⊊ E^{k−1}[I, {x₁}]` for `k = max(ρ₀, μ₀ − 1, 1)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dual::{reduce_basis, span_contains, DualFunctional};
use crate::elim::{eliminating_dual, quotient_eliminating_dual, EliminatingDualSpace};
use crate::error::{Error, Result};
use crate::hilbert::{regularity_and_multiplicity, HilbertData, HilbertOptions};
use crate::linalg::{numeric, RankPolicy};
use crate::poly::{invertible, Ideal, Polynomial};
use crate::scalar::{Complex, Rational, Scalar};

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_RETRIES: usize = 5;
/// Largest accepted condition number of a random complex change.
pub const MAX_CONDITION: f64 = 100.0;

/// Random invertible matrices over a scalar field.
pub trait RandomChange: Scalar {
    fn random_change(n: usize, rng: &mut ChaCha8Rng, policy: &RankPolicy) -> Result<Vec<Vec<Self>>>;
}

impl RandomChange for Complex {
    /// Entries uniform on the unit disk, resampled until the condition
    /// number is below [`MAX_CONDITION`].
    fn random_change(n: usize, rng: &mut ChaCha8Rng, _policy: &RankPolicy) -> Result<Vec<Vec<Self>>> {
        loop {
            let m: Vec<Vec<Complex>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let r = rng.random::<f64>().sqrt();
                            let t = rng.random::<f64>() * std::f64::consts::TAU;
                            Complex::from_polar(r, t)
                        })
                        .collect()
                })
                .collect();
            if numeric::condition_number(&m) < MAX_CONDITION {
                return Ok(m);
            }
        }
    }
}

impl RandomChange for Rational {
    /// Integer entries in `[-9, 9]`, resampled until invertible.
    fn random_change(n: usize, rng: &mut ChaCha8Rng, policy: &RankPolicy) -> Result<Vec<Vec<Self>>> {
        loop {
            let m: Vec<Vec<Rational>> = (0..n)
                .map(|_| (0..n).map(|_| Rational::from_i64(rng.random_range(-9..=9))).collect())
                .collect();
            if invertible(&m, policy)? {
                return Ok(m);
            }
        }
    }
}

/// Settings for the embedded-point test.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedOptions {
    pub hilbert: HilbertOptions,
    /// Stabilization cap for the eliminating duals (default `k + 2·Σ deg f_i`).
    pub max_degree: Option<u32>,
    /// First seed of the retry chain; attempt `t` uses `seed + t`.
    pub seed: u64,
    /// Extra attempts after a failure to reach regular position.
    pub retries: usize,
    /// Apply a random linear change before testing.
    pub random_change: bool,
    /// Relative tolerance for the translated constant terms.
    pub point_tol: f64,
    /// Keep the three bases in the verdict.
    pub verbose: bool,
}

impl Default for EmbeddedOptions {
    fn default() -> Self {
        EmbeddedOptions {
            hilbert: HilbertOptions::default(),
            max_degree: None,
            seed: DEFAULT_SEED,
            retries: DEFAULT_RETRIES,
            random_change: true,
            point_tol: 1e-8,
            verbose: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerdictBases<F: Scalar> {
    pub e_k: Vec<DualFunctional<F>>,
    pub xe_k: Vec<DualFunctional<F>>,
    pub e_km1: Vec<DualFunctional<F>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedVerdict<F: Scalar> {
    pub embedded: bool,
    pub k: u32,
    pub hilbert: HilbertData,
    pub dim_e_k: usize,
    pub dim_xe_k: usize,
    pub dim_e_km1: usize,
    /// Largest residual of `x₁·E^k` against `E^{k−1}`.
    pub containment_residual: f64,
    pub cap_used: u32,
    /// Seed of the successful attempt, when a random change was used.
    pub seed: Option<u64>,
    pub matrix: Option<Vec<Vec<F>>>,
    /// Every seed tried, in order.
    pub seeds_tried: Vec<u64>,
    /// Failed attempts before the successful one.
    pub retries: usize,
    pub bases: Option<VerdictBases<F>>,
}

impl<F: Scalar> EmbeddedVerdict<F> {
    pub fn rho(&self) -> usize {
        self.hilbert.rho
    }

    pub fn mu(&self) -> usize {
        self.hilbert.mu
    }
}

/// `span(b) ⊊ span(a)`. Fails with [`Error::ContainmentViolation`] when
/// `span(b) ⊄ span(a)`.
pub fn subspace_strictly_contains<F: Scalar>(
    a: &EliminatingDualSpace<F>,
    b: &[DualFunctional<F>],
    policy: &RankPolicy,
) -> Result<bool> {
    let (contained, residual) = span_contains(a.basis(), b, policy)?;
    if !contained {
        return Err(Error::ContainmentViolation { residual });
    }
    Ok(reduce_basis(b, a.order(), policy)?.len() < a.dim())
}

/// Certifies that no curve component through the origin lies in
/// `{x₁ = 0}`, i.e. that `I + ⟨x₁⟩` is 0-dimensional at the origin.
///
/// A Hilbert function of `I + ⟨x₁⟩` that reaches 0 proves it. One that
/// settles at a positive value, or fails to settle, is reported as
/// [`Error::NotRegularPosition`]; that judgement only selects another
/// change of coordinates and never decides a verdict.
pub fn check_regular_position<F: Scalar>(ideal: &Ideal<F>, policy: &RankPolicy) -> Result<()> {
    let slice = ideal.augmented([Polynomial::variable(ideal.num_vars(), 0)])?;
    match regularity_and_multiplicity(&slice, &HilbertOptions::default(), policy) {
        Ok(h) if h.zero_dimensional => Ok(()),
        Ok(h) => Err(Error::NotRegularPosition(format!(
            "the Hilbert function of I + <x1> settles at {} ({:?})",
            h.mu, h.values
        ))),
        Err(Error::HilbertNotStable { values, .. }) => Err(Error::NotRegularPosition(format!(
            "the Hilbert function of I + <x1> does not reach 0 ({values:?})"
        ))),
        Err(e) => Err(e),
    }
}

/// Runs the test on an ideal that is a curve at the origin, in regular
/// position with respect to the first variable.
pub fn is_origin_embedded_in_curve<F: Scalar>(
    ideal: &Ideal<F>,
    options: &EmbeddedOptions,
    policy: &RankPolicy,
) -> Result<EmbeddedVerdict<F>> {
    ideal.check_vanishes_at_origin()?;
    let hilbert = regularity_and_multiplicity(ideal, &options.hilbert, policy)?;
    if hilbert.zero_dimensional {
        return Err(Error::NotACurve(format!(
            "the origin is an isolated point of multiplicity {}",
            hilbert.mu
        )));
    }
    check_regular_position(ideal, policy)?;
    let k = (hilbert.rho.max(hilbert.mu.saturating_sub(1)).max(1)) as u32;
    let e = eliminating_dual(ideal, &[0], k, policy, options.max_degree)?;
    if !e.complete() {
        return Err(Error::IncompleteEliminatingDual { cap: e.cap_used() as usize });
    }
    let xe = quotient_eliminating_dual(&e, 0, policy)?;
    let e_km1 = eliminating_dual(ideal, &[0], k - 1, policy, options.max_degree)?;
    if !e_km1.complete() {
        return Err(Error::IncompleteEliminatingDual { cap: e_km1.cap_used() as usize });
    }
    let (_, residual) = span_contains(e_km1.basis(), xe.basis(), policy)?;
    let embedded = subspace_strictly_contains(&e_km1, xe.basis(), policy)?;
    Ok(EmbeddedVerdict {
        embedded,
        k,
        hilbert,
        dim_e_k: e.dim(),
        dim_xe_k: xe.dim(),
        dim_e_km1: e_km1.dim(),
        containment_residual: residual,
        cap_used: e.cap_used(),
        seed: None,
        matrix: None,
        seeds_tried: Vec::new(),
        retries: 0,
        bases: options.verbose.then(|| VerdictBases {
            e_k: e.basis().to_vec(),
            xe_k: xe.basis().to_vec(),
            e_km1: e_km1.basis().to_vec(),
        }),
    })
}

/// Whether `point` is an embedded component of the curve `V(I)`.
///
/// The point is moved to the origin and, unless disabled, a seeded random
/// linear change is applied. A failure to reach regular position (rejected
/// by [`check_regular_position`] or an incomplete eliminating dual)
/// triggers a retry with the next seed.
pub fn embedded_point_test<F: RandomChange>(
    ideal: &Ideal<F>,
    point: &[F],
    options: &EmbeddedOptions,
    policy: &RankPolicy,
) -> Result<EmbeddedVerdict<F>> {
    let local = ideal.translate_to_point(point, options.point_tol)?;
    if !options.random_change {
        return is_origin_embedded_in_curve(&local, options, policy);
    }
    let mut seeds = Vec::new();
    for attempt in 0..=options.retries {
        let seed = options.seed.wrapping_add(attempt as u64);
        seeds.push(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = F::random_change(ideal.num_vars(), &mut rng, policy)?;
        let changed = local.apply_linear_change(&m, policy)?;
        match is_origin_embedded_in_curve(&changed, options, policy) {
            Ok(mut v) => {
                v.seed = Some(seed);
                v.matrix = Some(m);
                v.seeds_tried = seeds;
                v.retries = attempt;
                return Ok(v);
            }
            Err(Error::IncompleteEliminatingDual { .. } | Error::NotRegularPosition(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetryExhausted { attempts: seeds.len(), seeds })
}
