//! JSON reports and their text rendering.

use eva_inject::engine::{Bounds, Point, Verdict};
use serde_json::{json, Map, Value};

/// Version of `schema/report.schema.json`.
pub const SCHEMA_VERSION: &str = "1.0.0";

/// The schema the JSON output validates against.
pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

/// Inputs echoed in canonical form, so that re-running with them reproduces
/// the computation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Inputs {
    pub poly: Option<String>,
    pub field: Option<String>,
    pub n: Option<usize>,
    pub vars: Option<usize>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

pub fn point_json(p: &Point) -> Value {
    match p {
        Point::Scalar(x) => Value::String(x.to_string()),
        Point::Tuple(xs) => Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect()),
        Point::Matrix(a) => json!(a.to_json_rows()),
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    let witness = match v.witness() {
        Some(w) => json!({
            "kind": w.lhs().kind(),
            "lhs": point_json(w.lhs()),
            "rhs": point_json(w.rhs()),
            "image": point_json(w.image()),
        }),
        None => Value::Null,
    };
    json!({
        "status": v.status().as_str(),
        "reason": v.reason().tag(),
        "clause": v.clause(),
        "detail": v.detail(),
        "witness": witness,
    })
}

pub fn bounds_json(b: &Bounds) -> Value {
    json!({
        "height": b.height,
        "scalar_cap": b.scalar_cap,
        "matrix_cap": b.matrix_cap,
        "seed": b.seed,
    })
}

pub fn build(
    command: &str,
    inputs: &Inputs,
    bounds: &Bounds,
    verdict: &Verdict,
    extra: Map<String, Value>,
    timing_ms: f64,
) -> Value {
    let mut echoed = Map::new();
    let opt_str = |s: &Option<String>| s.clone().map_or(Value::Null, Value::String);
    echoed.insert("poly".into(), opt_str(&inputs.poly));
    echoed.insert("field".into(), opt_str(&inputs.field));
    echoed.insert("n".into(), inputs.n.map_or(Value::Null, |n| json!(n)));
    echoed.insert("vars".into(), inputs.vars.map_or(Value::Null, |m| json!(m)));
    echoed.insert("lhs".into(), opt_str(&inputs.lhs));
    echoed.insert("rhs".into(), opt_str(&inputs.rhs));
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": echoed,
        "bounds": bounds_json(bounds),
        "verdict": verdict_json(verdict),
        "extra": extra,
        "timing_ms": timing_ms,
    })
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(Value::is_string) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            format!("({})", parts.join(", "))
        }
        Value::Array(rows) => {
            let parts: Vec<String> = rows
                .iter()
                .map(|r| match r {
                    Value::Array(es) => format!(
                        "[{}]",
                        es.iter().map(scalar_text).collect::<Vec<_>>().join(", ")
                    ),
                    other => scalar_text(other),
                })
                .collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Human-readable rendering of a JSON report.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    let verdict = &report["verdict"];
    out.push_str(&format!(
        "{}: {} ({})\n",
        report["command"].as_str().unwrap_or("?"),
        verdict["status"].as_str().unwrap_or("?"),
        verdict["reason"].as_str().unwrap_or("?"),
    ));
    out.push_str(&format!(
        "  clause:  {}\n",
        verdict["clause"].as_str().unwrap_or("?")
    ));
    out.push_str(&format!(
        "  detail:  {}\n",
        verdict["detail"].as_str().unwrap_or("")
    ));
    let inputs = &report["inputs"];
    if let Some(obj) = inputs.as_object() {
        let parts: Vec<String> = obj
            .iter()
            .filter(|(_, v)| !v.is_null())
            .map(|(k, v)| format!("{k}={}", scalar_text(v)))
            .collect();
        out.push_str(&format!("  inputs:  {}\n", parts.join(" ")));
    }
    let w = &verdict["witness"];
    if !w.is_null() {
        out.push_str(&format!(
            "  witness: {} {} vs {}\n",
            scalar_text(&w["kind"]),
            scalar_text(&w["lhs"]),
            scalar_text(&w["rhs"])
        ));
        out.push_str(&format!("  image:   {}\n", scalar_text(&w["image"])));
    }
    if let Some(extra) = report["extra"].as_object() {
        for (k, v) in extra {
            let shown = match v {
                Value::Object(_) => v.to_string(),
                other => scalar_text(other),
            };
            out.push_str(&format!("  {k}: {shown}\n"));
        }
    }
    let b = &report["bounds"];
    out.push_str(&format!(
        "  bounds:  height={} scalar_cap={} matrix_cap={} seed={}\n",
        b["height"], b["scalar_cap"], b["matrix_cap"], b["seed"]
    ));
    out.push_str(&format!(
        "  time:    {:.3} ms\n",
        report["timing_ms"].as_f64().unwrap_or(0.0)
    ));
    out
}
