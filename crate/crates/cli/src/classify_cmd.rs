//! `classify`: dichotomy verdict for a width-≤2 poset file.

use crate::{emit, load_poset, CmdResult, Failure};
use ffchain::classify::{dichotomy_verdict, BoundKind, ClassifierVerdict, ClassifyError};
use serde_json::json;
use std::path::Path;

pub fn run(poset: &Path, gamma: f64, out: Option<&Path>) -> CmdResult {
    if gamma <= 0.0 {
        return Err(Failure::Schema("gamma must be positive".into()));
    }
    let p = load_poset(poset)?;
    let verdict = match dichotomy_verdict(&p, gamma) {
        Ok(v) => v,
        Err(e @ ClassifyError::WidthOutOfScope { .. }) => {
            return Err(Failure::Schema(e.to_string()))
        }
        Err(e) => return Err(Failure::schema(e)),
    };
    emit(out, &serde_json::to_string_pretty(&verdict_json(&verdict)).unwrap())
}

pub fn verdict_json(v: &ClassifierVerdict) -> serde_json::Value {
    let blocks: Vec<serde_json::Value> = v
        .blocks
        .iter()
        .map(|b| {
            let (c1, c2) = match &b.witness {
                Some((c1, c2)) => (json!(c1), json!(c2)),
                None => (json!(null), json!(null)),
            };
            json!({ "elements": b.elements, "c1": c1, "c2": c2 })
        })
        .collect();
    let bound = match v.bound {
        BoundKind::SubexponentialUpper => json!({
            "kind": "subexponentialUpper",
            "k": v.block_sizes.len(),
            "blockSizes": v.block_sizes,
            "gamma": v.gamma,
            "C": v.upper_c,
        }),
        BoundKind::ExponentialLower => json!({
            "kind": "exponentialLower",
            "lowerBound": "2^w - 1",
        }),
        BoundKind::NotApplicable => json!({ "kind": "notApplicable" }),
    };
    json!({
        "width": v.width,
        "inQ": v.in_q,
        "blocks": blocks,
        "bound": bound,
    })
}
