//! JSON summaries. Keys are fixed: "params", "trials", "quantiles", "ks",
//! "pass".

use betajacobi::{ks_two_sample, quantiles, EmpiricalDistribution};
use serde_json::{json, Map, Value};

use crate::{CliResult, Failure};

/// Probabilities reported in every quantile table.
pub const PROBS: [f64; 9] = [0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99];

pub fn distribution(values: Vec<f64>, what: &str) -> CliResult<EmpiricalDistribution<f64>> {
    EmpiricalDistribution::new(values).map_err(|e| Failure::parameter(format!("{what}: {e}")))
}

pub fn quantile_table(d: &EmpiricalDistribution<f64>) -> Vec<f64> {
    quantiles(d, &PROBS).expect("probabilities lie in [0, 1]")
}

/// Summary of one sample, optionally against a reference sample.
pub fn sample_summary(
    params: Map<String, Value>,
    sample: &EmpiricalDistribution<f64>,
    reference: Option<&EmpiricalDistribution<f64>>,
    threshold: f64,
) -> (Value, Option<bool>) {
    let mut q = Map::new();
    q.insert("probs".into(), json!(PROBS));
    q.insert("sample".into(), json!(quantile_table(sample)));
    let (ks, pass) = match reference {
        Some(r) => {
            q.insert("reference".into(), json!(quantile_table(r)));
            let ks = ks_two_sample(sample, r);
            (Some(ks), Some(ks < threshold))
        }
        None => (None, None),
    };
    let mut params = params;
    if reference.is_some() {
        params.insert("threshold".into(), json!(threshold));
    }
    let trials = match reference {
        Some(r) => json!({ "sample": sample.count(), "reference": r.count() }),
        None => json!(sample.count()),
    };
    let v = json!({
        "params": params,
        "trials": trials,
        "quantiles": q,
        "ks": ks,
        "pass": pass,
    });
    (v, pass)
}

pub fn compare_summary(
    params: Map<String, Value>,
    a: &EmpiricalDistribution<f64>,
    b: &EmpiricalDistribution<f64>,
    threshold: f64,
) -> (Value, bool) {
    let ks = ks_two_sample(a, b);
    let pass = ks < threshold;
    let v = json!({
        "params": params,
        "trials": { "a": a.count(), "b": b.count() },
        "quantiles": { "probs": PROBS, "a": quantile_table(a), "b": quantile_table(b) },
        "ks": ks,
        "pass": pass,
    });
    (v, pass)
}
