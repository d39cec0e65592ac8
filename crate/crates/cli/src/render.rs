//! JSON forms of core and Monte Carlo results.

use serde_json::{json, Map, Number, Value};
use ugap_core::combinatorics::Signature;
use ugap_core::gap::{EnumerationReport, GapCertificate};
use ugap_core::peak::{PeakPlan, PeakVerification};
use ugap_core::rational::{self, Rational};
use ugap_core::spectra::ProductSignature;
use ugap_montecarlo::SampleStats;

pub const SCHEMA_VERSION: &str = "1";

/// `"p/q"` in lowest terms.
pub fn q(r: &Rational) -> Value {
    Value::String(rational::to_pq(r))
}

/// A float with 17 significant digits; non-finite values become `null`.
pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let text = format!("{x:.16e}");
    text.parse::<Number>().map(Value::Number).unwrap_or(Value::Null)
}

pub fn signature(s: &Signature) -> Value {
    json!({
        "n": s.n(),
        "lambda": s.lambda().to_string(),
        "d": s.d(),
        "weights": s.weights(),
    })
}

pub fn product_signature(p: &ProductSignature) -> Value {
    Value::String(p.to_string())
}

fn enumeration(e: &EnumerationReport) -> Value {
    json!({
        "weight_cap": e.weight_cap,
        "d_cap": e.d_cap,
        "checked": e.checked,
        "max_value": q(&e.max_value),
        "argmax": signature(&e.argmax),
        "violations": e.violations.iter().map(|v| json!({
            "signature": signature(&v.signature),
            "quantity": v.quantity,
            "value": q(&v.value),
            "bound": q(&v.bound),
        })).collect::<Vec<_>>(),
    })
}

pub fn certificate(c: &GapCertificate) -> Value {
    json!({
        "n": c.n,
        "measure": c.measure.to_string(),
        "delta": q(&c.delta),
        "delta_conjugate": q(&c.delta_conjugate),
        "gamma_analytic": q(&c.gamma_analytic),
        "gamma_basis": c.gamma_basis,
        "case_table": c.case_table.iter().map(|r| json!({
            "k": r.k,
            "case_id": r.case.id(),
            "variant": r.variant.id(),
            "predicate": r.predicate,
            "bound": q(&r.bound),
        })).collect::<Vec<_>>(),
        "joint_table": c.joint_table.iter().map(|r| json!({
            "class": r.class.id(),
            "bound": q(&r.bound),
        })).collect::<Vec<_>>(),
        "enumeration": c.enumeration.as_ref().map(enumeration),
        "verdict": c.verdict,
        "failure": c.failure,
        "offending": c.offending.as_ref().map(signature),
    })
}

pub fn plan(p: &PeakPlan) -> Value {
    let audit = p.audit().ok();
    json!({
        "group": p.group(),
        "target_set": p.target_set.iter().map(product_signature).collect::<Vec<_>>(),
        "spectrum": p.spectrum.to_string(),
        "epsilon": q(&p.epsilon),
        "epsilon_float": float(rational::to_f64(&p.epsilon)),
        "weight_w": q(&p.weight_w),
        "steps": p.steps.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "audit": {
            "epsilon": audit.as_ref().map(|a| q(&a.0)),
            "weight_w": audit.as_ref().map(|a| q(&a.1)),
            "ok": p.audit_ok(),
        },
    })
}

pub fn verification(v: &PeakVerification, weight_cap: u32, d_cap: u32, max_nontrivial: usize) -> Value {
    json!({
        "weight_cap": weight_cap,
        "d_cap": d_cap,
        "max_nontrivial": max_nontrivial,
        "checked": v.checked,
        "on_target": v.on_target,
        "max_off_target": q(&v.max_off_target),
        "argmax": v.argmax.as_ref().map(product_signature),
        "ok": v.ok,
        "failure": v.failure,
    })
}

pub fn stats(s: &SampleStats) -> Value {
    let (lo, hi) = s.interval();
    json!({
        "estimator": s.estimator,
        "seed": s.seed,
        "samples": s.samples,
        "estimate": float(s.estimate),
        "stderr": float(s.stderr),
        "interval": [float(lo), float(hi)],
    })
}

/// The outer document every command prints.
pub fn envelope(command: &str, inputs: Value, output: Value, exit_code: i32) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), Value::String(SCHEMA_VERSION.into()));
    m.insert("command".into(), Value::String(command.into()));
    m.insert("inputs".into(), inputs);
    m.insert("output".into(), output);
    m.insert("exit_code".into(), json!(exit_code));
    Value::Object(m)
}
