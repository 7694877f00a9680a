//! Command-line driver: reads a system file, runs one subcommand and builds
//! a JSON report.
//!
//! Exit codes: 0 on success, 1 for usage and input errors, 2 when the
//! mathematics fails (rank ambiguity, no stabilization, no regular
//! position).

pub mod config;
pub mod report;

use serde_json::{json, Value};

use dualspace::dual::{full_dual_zero_dim, truncated_dual_completion, truncated_dual_direct, DualFunctional};
use dualspace::elim::{colon_inclusion_check, eliminating_dual, quotient_eliminating_dual};
use dualspace::embedded::{embedded_point_test, EmbeddedOptions, RandomChange};
use dualspace::hilbert::{
    hilbert_function, homogeneous_membership, regularity_and_multiplicity, standard_monomials, HilbertOptions,
};
use dualspace::linalg::RankPolicy;
use dualspace::poly::{Ideal, OrderSpec, Polynomial};
use dualspace::scalar::{Complex, Rational};
use dualspace::text::{parse_polynomial, parse_system, Mode, SystemFile};
use dualspace::{Error, Result};

pub use config::{Cli, RunConfig};
use config::{Method, ModeArg, Stabilization};

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_mathematical() {
        2
    } else {
        1
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::ZeroPolynomial => "zero-polynomial",
        Error::EmptyIdeal => "empty-ideal",
        Error::ZeroGenerator { .. } => "zero-generator",
        Error::PointNotOnVariety { .. } => "point-not-on-variety",
        Error::SingularChange => "singular-change",
        Error::RankAmbiguity { .. } => "rank-ambiguity",
        Error::UnreducedBasis => "unreduced-basis",
        Error::IncompatibleSpaces(_) => "incompatible-spaces",
        Error::NotStabilized { .. } => "not-stabilized",
        Error::IncompleteEliminatingDual { .. } => "incomplete-eliminating-dual",
        Error::NotRegularPosition(_) => "not-regular-position",
        Error::HilbertNotStable { .. } => "hilbert-not-stable",
        Error::ContainmentViolation { .. } => "containment-violation",
        Error::NonHomogeneous { .. } => "non-homogeneous",
        Error::NotACurve(_) => "not-a-curve",
        Error::RetryExhausted { .. } => "retry-exhausted",
        Error::Parse { .. } => "parse",
        Error::InvalidArgument(_) => "invalid-argument",
    }
}

/// The error report for a failed run.
pub fn error_report(config: &RunConfig, e: &Error) -> Value {
    json!({
        "command": config.name(),
        "config": config,
        "error": {
            "kind": error_kind(e),
            "message": e.to_string(),
            "mathematical": e.is_mathematical(),
        },
    })
}

/// Runs `config` on the system text and returns the report and exit code.
pub fn run(config: &RunConfig, input: &str) -> (Value, i32) {
    match execute(config, input) {
        Ok(v) => (v, 0),
        Err(e) => (error_report(config, &e), exit_code(&e)),
    }
}

fn check_tolerance(name: &str, t: f64) -> Result<()> {
    if t > 0.0 && t < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{name} must lie in (0, 1), got {t}")))
    }
}

fn execute(config: &RunConfig, input: &str) -> Result<Value> {
    let common = config.common();
    check_tolerance("--tol", common.tol)?;
    check_tolerance("--point-tol", common.point_tol)?;
    let sys = parse_system(input)?;
    let mode = match common.mode {
        Some(ModeArg::Exact) => Mode::Exact,
        Some(ModeArg::Complex) => Mode::Complex,
        None => sys.effective_mode(),
    };
    let (result, m2, fingerprint) = match mode {
        Mode::Exact => execute_in::<Rational>(config, &sys)?,
        Mode::Complex => execute_in::<Complex>(config, &sys)?,
    };
    let mut out = json!({
        "command": config.name(),
        "mode": mode.name(),
        "vars": sys.vars,
        "fingerprint": fingerprint,
        "config": config,
        "result": result,
    });
    if common.m2 {
        out["m2"] = Value::String(m2.unwrap_or_default());
    }
    Ok(out)
}

fn hilbert_options(s: &Stabilization) -> HilbertOptions {
    HilbertOptions { window: s.window, k_cap: s.k_cap, assume_rho: s.assume_rho, assume_mu: s.assume_mu }
}

fn var_indices(sys: &SystemFile, names: &[String]) -> Result<Vec<usize>> {
    names.iter().map(|n| sys.var_index(n.trim())).collect()
}

/// The ideal at the origin: translated when the file gives a point.
fn local_ideal<F: RandomChange>(sys: &SystemFile, point_tol: f64) -> Result<(Ideal<F>, Ideal<F>)> {
    let ideal: Ideal<F> = sys.ideal()?;
    let local = match sys.point_as::<F>()? {
        Some(p) => ideal.translate_to_point(&p, point_tol)?,
        None => ideal.clone(),
    };
    Ok((ideal, local))
}

fn parse_poly<F: RandomChange>(text: &str, sys: &SystemFile) -> Result<Polynomial<F>> {
    let terms = parse_polynomial(text, &sys.vars)?;
    let conv = terms
        .into_iter()
        .map(|(e, c)| {
            let v = c
                .to_scalar::<F>()
                .ok_or_else(|| Error::InvalidArgument("complex coefficient in exact mode".into()))?;
            Ok((e, v))
        })
        .collect::<Result<Vec<_>>>()?;
    Polynomial::from_terms(sys.vars.len(), conv)
}

type Outcome = (Value, Option<String>, String);

fn execute_in<F: RandomChange>(config: &RunConfig, sys: &SystemFile) -> Result<Outcome> {
    let common = config.common();
    let policy = RankPolicy::new(common.tol)?;
    let vars = &sys.vars;
    let n = vars.len();
    let m2 = |b: &[DualFunctional<F>]| Some(report::m2_snippet(vars, b));
    let (ideal, local) = local_ideal::<F>(sys, common.point_tol)?;
    let fp = ideal.fingerprint();
    let ord = OrderSpec::graded_local(n);
    Ok(match config {
        RunConfig::Dual(a) => {
            let space = match a.method {
                Method::Direct => truncated_dual_direct(&local, a.k, &ord, &policy)?,
                Method::Completion => truncated_dual_completion(&local, a.k, &ord, &policy)?,
            };
            (report::truncated(&space), m2(space.basis()), fp)
        }
        RunConfig::Fulldual(a) => {
            let full = full_dual_zero_dim(&local, &ord, &policy, a.max_degree)?;
            if !full.complete {
                return Err(Error::NotStabilized { max_degree: a.max_degree as usize });
            }
            let mut v = report::truncated(&full.space);
            v["complete"] = json!(full.complete);
            v["dims"] = json!(full.dims);
            (v, m2(full.space.basis()), fp)
        }
        RunConfig::Elimdual(a) => {
            let idx = var_indices(sys, &a.a)?;
            let e = eliminating_dual(&local, &idx, a.d, &policy, a.max_degree)?;
            if !e.complete() {
                return Err(Error::IncompleteEliminatingDual { cap: e.cap_used() as usize });
            }
            (report::eliminating(&e, vars), m2(e.basis()), fp)
        }
        RunConfig::ColonElim(a) => {
            let idx = var_indices(sys, &a.a)?;
            if idx.len() == 1 {
                let upper = eliminating_dual(&local, &idx, a.d + 1, &policy, a.max_degree)?;
                let quotient = quotient_eliminating_dual(&upper, idx[0], &policy)?;
                let same = eliminating_dual(&local, &idx, a.d, &policy, a.max_degree)?;
                if !same.complete() {
                    return Err(Error::IncompleteEliminatingDual { cap: same.cap_used() as usize });
                }
                let (contained, _) = dualspace::dual::span_contains(same.basis(), quotient.basis(), &policy)?;
                let equal = contained && quotient.dim() == same.dim();
                let mut v = report::eliminating(&quotient, vars);
                v["E_d"] = report::eliminating(&same, vars);
                v["contained_in_E_d"] = json!(contained);
                v["equal_to_E_d"] = json!(equal);
                (v, m2(quotient.basis()), fp)
            } else {
                let colon = a
                    .colon
                    .as_ref()
                    .map(|text| {
                        let gens = text
                            .split(';')
                            .filter(|g| !g.trim().is_empty())
                            .map(|g| parse_poly::<F>(g, sys))
                            .collect::<Result<Vec<_>>>()?;
                        let j = Ideal::new(n, gens)?;
                        match sys.point_as::<F>()? {
                            Some(p) => j.translate_to_point(&p, common.point_tol),
                            None => Ok(j),
                        }
                    })
                    .transpose()?;
                let holds = colon_inclusion_check(&local, &idx, a.d, &policy, colon.as_ref())?;
                (json!({ "inclusion_holds": holds, "symbolic_colon": colon.is_some(), "d": a.d }), None, fp)
            }
        }
        RunConfig::Hilbert(a) => {
            let opts = hilbert_options(&a.stab);
            let v = match a.kmax {
                None => report::hilbert(&regularity_and_multiplicity(&local, &opts, &policy)?),
                Some(kmax) => {
                    let values = hilbert_function(&local, kmax, &policy)?;
                    match regularity_and_multiplicity(&local, &opts, &policy) {
                        Ok(h) => {
                            let mut v = report::hilbert(&h);
                            v["H"] = json!(values);
                            v["k_max"] = json!(kmax);
                            v
                        }
                        Err(Error::HilbertNotStable { .. }) => json!({
                            "H": values,
                            "rho": null,
                            "mu": null,
                            "certified": false,
                            "k_max": kmax,
                        }),
                        Err(e) => return Err(e),
                    }
                }
            };
            (v, None, fp)
        }
        RunConfig::Staircase(a) => {
            let s = standard_monomials(&local, a.k, &ord, &policy)?;
            (report::staircase(&s), None, fp)
        }
        RunConfig::Member(a) => {
            let f = parse_poly::<F>(&a.poly, sys)?;
            let member = homogeneous_membership(&f, &ideal, &policy)?;
            (json!({ "member": member, "poly": a.poly }), None, fp)
        }
        RunConfig::Embedded(a) => {
            let point = sys.point_as::<F>()?.unwrap_or_else(|| vec![F::zero(); n]);
            let opts = EmbeddedOptions {
                hilbert: hilbert_options(&a.stab),
                max_degree: a.max_degree,
                seed: a.seed,
                retries: a.retries,
                random_change: !a.no_change,
                point_tol: common.point_tol,
                verbose: common.verbose,
            };
            let v = embedded_point_test(&ideal, &point, &opts, &policy)?;
            let basis = v.bases.as_ref().map(|b| b.e_k.clone());
            let snippet = basis.and_then(|b| m2(&b));
            (report::verdict(&v, common.tol, common.point_tol), snippet, fp)
        }
    })
}
