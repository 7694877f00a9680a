//! Local Hilbert function, regularity index and multiplicity from truncated
//! dual dimensions, plus staircases and homogeneous membership.

use std::collections::BTreeSet;

use crate::dual::{truncated_dual_completion, Filtration};
use crate::error::{Error, Result};
use crate::linalg::RankPolicy;
use crate::poly::{exponents_up_to, Exponent, Ideal, OrderSpec, Polynomial};
use crate::scalar::Scalar;

/// `H_I(0..=k_max)`, the first differences of `dim D₀^k[I]`.
pub fn hilbert_function<F: Scalar>(ideal: &Ideal<F>, k_max: u32, policy: &RankPolicy) -> Result<Vec<usize>> {
    let mut filt = Filtration::new(ideal, &OrderSpec::graded_local(ideal.num_vars()), policy)?;
    let mut values = vec![filt.dim()];
    let mut prev = filt.dim();
    while filt.degree() < k_max {
        let d = filt.advance()?;
        values.push(d - prev);
        prev = d;
    }
    Ok(values)
}

/// Settings for [`regularity_and_multiplicity`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HilbertOptions {
    /// Number of consecutive equal values taken as stabilization; default
    /// is the largest generator degree plus 2.
    pub window: Option<usize>,
    /// Largest degree examined; default [`DEFAULT_K_CAP`].
    pub k_cap: Option<u32>,
    /// Externally known regularity index.
    pub assume_rho: Option<usize>,
    /// Externally known multiplicity.
    pub assume_mu: Option<usize>,
}

pub const DEFAULT_K_CAP: u32 = 30;

/// Hilbert values with the detected regularity index and multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// `H_I(0), H_I(1), …` as far as they were computed.
    pub values: Vec<usize>,
    /// The stable value (curves), or `dim D₀[I]` for an isolated point.
    pub hp_value: usize,
    pub rho: usize,
    pub mu: usize,
    /// True only when the ideal was found 0-dimensional, where
    /// `D^i = D^{i+1}` proves stabilization.
    pub certified: bool,
    /// Whether `rho` or `mu` was supplied by the caller.
    pub assumed: bool,
    pub zero_dimensional: bool,
    pub window: usize,
    pub k_max: usize,
}

/// Regularity index and multiplicity at the origin.
///
/// For a curve, `H_I` is computed until `window` consecutive values agree;
/// `mu` is that value and `rho` the start of the run. This is a heuristic and
/// is reported with `certified = false`. A zero value means the ideal is
/// 0-dimensional; then `mu = dim D₀[I]` and the result is certified.
pub fn regularity_and_multiplicity<F: Scalar>(
    ideal: &Ideal<F>,
    options: &HilbertOptions,
    policy: &RankPolicy,
) -> Result<HilbertData> {
    let window = options.window.unwrap_or(ideal.max_degree() as usize + 2).max(1);
    let k_cap = options.k_cap.unwrap_or(DEFAULT_K_CAP);
    let assumed = options.assume_rho.is_some() || options.assume_mu.is_some();
    if let (Some(rho), Some(mu)) = (options.assume_rho, options.assume_mu) {
        return Ok(HilbertData {
            values: Vec::new(),
            hp_value: mu,
            rho,
            mu,
            certified: false,
            assumed,
            zero_dimensional: false,
            window,
            k_max: 0,
        });
    }
    let mut filt = Filtration::new(ideal, &OrderSpec::graded_local(ideal.num_vars()), policy)?;
    let mut values = vec![filt.dim()];
    let mut prev = filt.dim();
    loop {
        let k = values.len() - 1;
        let last = values[k];
        if last == 0 {
            let mu = prev;
            return Ok(HilbertData {
                hp_value: mu,
                rho: options.assume_rho.unwrap_or(k),
                mu: options.assume_mu.unwrap_or(mu),
                certified: true,
                assumed,
                zero_dimensional: true,
                window,
                k_max: k,
                values,
            });
        }
        let start = values.iter().rposition(|&v| v != last).map_or(0, |i| i + 1);
        if k + 1 - start >= window {
            return Ok(HilbertData {
                hp_value: last,
                rho: options.assume_rho.unwrap_or(start),
                mu: options.assume_mu.unwrap_or(last),
                certified: false,
                assumed,
                zero_dimensional: false,
                window,
                k_max: k,
                values,
            });
        }
        if filt.degree() >= k_cap {
            return Err(Error::HilbertNotStable { k_cap: k_cap as usize, values });
        }
        let d = filt.advance()?;
        values.push(d - prev);
        prev = d;
    }
}

/// Standard monomials of `I` up to degree `k` and their complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseReport {
    pub k: u32,
    /// Initial support of `D₀^k[I]`, sorted by degree.
    pub standard: Vec<Exponent>,
    /// The remaining exponents of degree at most `k`: the initial ideal in
    /// that range.
    pub initial_ideal: Vec<Exponent>,
}

pub fn standard_monomials<F: Scalar>(
    ideal: &Ideal<F>,
    k: u32,
    order: &OrderSpec,
    policy: &RankPolicy,
) -> Result<StaircaseReport> {
    let space = truncated_dual_completion(ideal, k, order, policy)?;
    let standard: BTreeSet<Exponent> = space.initial_support()?.into_iter().collect();
    let (mut std, rest): (Vec<_>, Vec<_>) = exponents_up_to(ideal.num_vars(), k)
        .into_iter()
        .partition(|e| standard.contains(e));
    std.sort_by_key(|e| (e.degree(), e.clone()));
    Ok(StaircaseReport { k, standard: std, initial_ideal: rest })
}

/// Membership of `f` in a homogeneous ideal: `f ∈ I` exactly when
/// `D₀^{deg f}[I]` annihilates `f`.
pub fn homogeneous_membership<F: Scalar>(f: &Polynomial<F>, ideal: &Ideal<F>, policy: &RankPolicy) -> Result<bool> {
    if f.num_vars() != ideal.num_vars() {
        return Err(Error::DimensionMismatch { expected: ideal.num_vars(), found: f.num_vars() });
    }
    if let Some(index) = ideal.generators().iter().position(|g| !g.is_homogeneous()) {
        return Err(Error::NonHomogeneous { index });
    }
    if f.is_zero() || ideal.generators().iter().any(|g| g.degree() == Some(0)) {
        return Ok(true);
    }
    let d = f.degree().unwrap_or(0);
    let space = truncated_dual_completion(ideal, d, &OrderSpec::graded_local(ideal.num_vars()), policy)?;
    let fnorm = coeff_norm(f.terms().map(|(_, c)| c));
    for q in space.basis() {
        let v = q.apply(f)?;
        let ok = if F::EXACT {
            v.is_zero()
        } else {
            v.magnitude() < policy.tol * fnorm * coeff_norm(q.terms().map(|(_, c)| c))
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn coeff_norm<'a, F: Scalar>(it: impl Iterator<Item = &'a F>) -> f64 {
    it.map(|c| c.magnitude().powi(2)).sum::<f64>().sqrt()
}
