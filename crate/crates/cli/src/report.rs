//! JSON encodings of the library's results.

use serde_json::{json, Value};

use dualspace::dual::{DualFunctional, TruncatedDualSpace};
use dualspace::elim::EliminatingDualSpace;
use dualspace::embedded::EmbeddedVerdict;
use dualspace::hilbert::{HilbertData, StaircaseReport};
use dualspace::poly::Exponent;
use dualspace::scalar::Scalar;

/// `{"re", "im"}`: strings `p/q` in exact mode, doubles in complex mode.
pub fn scalar<F: Scalar>(c: &F) -> (Value, Value) {
    if F::EXACT {
        (Value::String(c.to_string()), Value::String("0".into()))
    } else {
        let z = c.to_complex();
        (json!(z.re), json!(z.im))
    }
}

fn exps(es: &[Exponent]) -> Value {
    es.iter().map(|e| e.as_slice().to_vec()).collect::<Vec<_>>().into()
}

pub fn functional<F: Scalar>(q: &DualFunctional<F>) -> Value {
    let terms: Vec<Value> = q
        .terms()
        .map(|(e, c)| {
            let (re, im) = scalar(c);
            json!({ "exp": e.as_slice(), "re": re, "im": im })
        })
        .collect();
    json!({ "terms": terms, "order": q.order() })
}

fn basis<F: Scalar>(b: &[DualFunctional<F>]) -> Value {
    b.iter().map(functional).collect::<Vec<_>>().into()
}

pub fn truncated<F: Scalar>(s: &TruncatedDualSpace<F>) -> Value {
    let support = s.initial_support().map(|v| exps(&v)).unwrap_or(Value::Null);
    json!({
        "k": s.k(),
        "dim": s.dim(),
        "order": s.order().name(),
        "fingerprint": s.fingerprint(),
        "basis": basis(s.basis()),
        "initial_support": support,
    })
}

pub fn eliminating<F: Scalar>(e: &EliminatingDualSpace<F>, vars: &[String]) -> Value {
    let support = e.initial_support().map(|v| exps(&v)).unwrap_or(Value::Null);
    let names: Vec<&str> = e.a().iter().map(|&i| vars[i].as_str()).collect();
    json!({
        "A": names,
        "d": e.d(),
        "dim": e.dim(),
        "complete": e.complete(),
        "cap_used": e.cap_used(),
        "order": e.order().name(),
        "basis": basis(e.basis()),
        "initial_support": support,
    })
}

pub fn hilbert(h: &HilbertData) -> Value {
    json!({
        "H": h.values,
        "rho": h.rho,
        "mu": h.mu,
        "hp_value": h.hp_value,
        "certified": h.certified,
        "assumed": h.assumed,
        "zero_dimensional": h.zero_dimensional,
        "window": h.window,
        "k_max": h.k_max,
    })
}

pub fn staircase(s: &StaircaseReport) -> Value {
    json!({ "k": s.k, "standard": exps(&s.standard), "initial_ideal": exps(&s.initial_ideal) })
}

pub fn verdict<F: Scalar>(v: &EmbeddedVerdict<F>, tol: f64, point_tol: f64) -> Value {
    let matrix = v.matrix.as_ref().map(|m| {
        m.iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        let (re, im) = scalar(c);
                        json!({ "re": re, "im": im })
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    });
    let mut out = json!({
        "embedded": v.embedded,
        "k": v.k,
        "rho": v.rho(),
        "mu": v.mu(),
        "certified_hilbert": v.hilbert.certified,
        "hilbert": hilbert(&v.hilbert),
        "dims": { "E_k": v.dim_e_k, "xE_k": v.dim_xe_k, "E_km1": v.dim_e_km1 },
        "containment_residual": v.containment_residual,
        "cap_used": v.cap_used,
        "seed": v.seed,
        "seeds_tried": v.seeds_tried,
        "matrix": matrix,
        "tolerances": { "rank": tol, "point": point_tol },
        "retries": v.retries,
    });
    if let Some(b) = &v.bases {
        out["bases"] = json!({ "E_k": basis(&b.e_k), "xE_k": basis(&b.xe_k), "E_km1": basis(&b.e_km1) });
    }
    out
}

fn m2_coeff<F: Scalar>(c: &F) -> String {
    if F::EXACT {
        let s = c.to_string();
        if s.contains('/') || s.starts_with('-') {
            format!("({s})")
        } else {
            s
        }
    } else {
        let z = c.to_complex();
        format!("({:e}+({:e})*ii)", z.re, z.im)
    }
}

/// A Macaulay2 snippet listing a dual basis as polynomials, with `x^α`
/// standing for `∂^α`.
pub fn m2_snippet<F: Scalar>(vars: &[String], b: &[DualFunctional<F>]) -> String {
    let ring = if F::EXACT { "QQ" } else { "CC" };
    let elems: Vec<String> = b
        .iter()
        .map(|q| {
            let terms: Vec<String> = q
                .terms()
                .map(|(e, c)| {
                    let mono: Vec<String> = e
                        .as_slice()
                        .iter()
                        .zip(vars)
                        .filter(|(p, _)| **p > 0)
                        .map(|(p, v)| if *p == 1 { v.clone() } else { format!("{v}^{p}") })
                        .collect();
                    if mono.is_empty() {
                        m2_coeff(c)
                    } else if F::EXACT && *c == F::one() {
                        mono.join("*")
                    } else {
                        format!("{}*{}", m2_coeff(c), mono.join("*"))
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        })
        .collect();
    format!("R = {ring}[{}];\ndualBasis = {{{}}};\n", vars.join(","), elems.join(", "))
}
