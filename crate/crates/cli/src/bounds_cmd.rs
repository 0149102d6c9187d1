//! `bounds eval`: closed-form bound evaluation from the command line.

use crate::{emit, CmdResult, Failure};
use clap::Subcommand;
use ffchain::bounds::{BoundExpression, BoundValue};
use serde_json::json;
use std::collections::HashMap;
use std::path::PathBuf;

#[derive(Subcommand)]
pub enum BoundsAction {
    /// Evaluate a bound formula at a width w
    Eval {
        /// One of seriesComposition, corollarySeries, ksLadder,
        /// dichotomyUpper, reservoirLower, butterflyAsymptotic,
        /// stackedButterfly
        #[arg(long)]
        kind: String,
        /// Comma-separated key=value pairs; list values use ':'
        /// (e.g. s=1,t=2,w=4 or cs=1:1,w=4)
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn run(action: BoundsAction) -> CmdResult {
    let BoundsAction::Eval { kind, params, out } = action;
    let map = parse_params(&params)?;
    let get_u64 = |key: &str| -> Result<u64, Failure> {
        map.get(key)
            .ok_or_else(|| Failure::Schema(format!("missing parameter '{key}'")))?
            .parse()
            .map_err(|e| Failure::Schema(format!("parameter '{key}': {e}")))
    };
    let get_f64 = |key: &str| -> Result<f64, Failure> {
        map.get(key)
            .ok_or_else(|| Failure::Schema(format!("missing parameter '{key}'")))?
            .parse()
            .map_err(|e| Failure::Schema(format!("parameter '{key}': {e}")))
    };
    let get_list = |key: &str| -> Result<Vec<f64>, Failure> {
        let raw = map
            .get(key)
            .ok_or_else(|| Failure::Schema(format!("missing parameter '{key}'")))?;
        if raw.is_empty() {
            return Ok(vec![]);
        }
        raw.split(':')
            .map(|v| {
                v.parse()
                    .map_err(|e| Failure::Schema(format!("parameter '{key}': {e}")))
            })
            .collect()
    };

    let expr = match kind.as_str() {
        "seriesComposition" => BoundExpression::SeriesComposition {
            s: get_u64("s")?,
            t: get_u64("t")?,
        },
        "corollarySeries" => BoundExpression::CorollarySeries { cs: get_list("cs")? },
        "ksLadder" => BoundExpression::KsLadder {
            n: get_u64("n")?,
            gamma: get_f64("gamma")?,
        },
        "dichotomyUpper" => BoundExpression::DichotomyUpper {
            block_sizes: get_list("ns")?.iter().map(|&v| v as u64).collect(),
            gamma: get_f64("gamma")?,
        },
        "reservoirLower" => BoundExpression::ReservoirLower,
        "butterflyAsymptotic" => BoundExpression::ButterflyAsymptotic,
        "stackedButterfly" => BoundExpression::StackedButterfly { k: get_u64("k")? },
        other => return Err(Failure::Schema(format!("unknown bound kind '{other}'"))),
    };

    let w = get_u64("w")?;
    let value = expr.value_at(w).map_err(Failure::schema)?;
    let mut report = match value {
        BoundValue::Exact(v) => {
            // big integers as strings once they leave u64 territory
            match u64::try_from(&v) {
                Ok(small) => json!({ "kind": expr.kind_name(), "w": w, "value": small }),
                Err(_) => json!({ "kind": expr.kind_name(), "w": w, "value": v.to_string() }),
            }
        }
        BoundValue::Log2(e) => json!({ "kind": expr.kind_name(), "w": w, "exponentLog2": e }),
    };
    if let Some(note) = expr.asymptotic_note() {
        report["note"] = json!(note);
    }
    emit(out.as_deref(), &serde_json::to_string_pretty(&report).unwrap())
}

fn parse_params(params: &str) -> Result<HashMap<String, String>, Failure> {
    let mut map = HashMap::new();
    for part in params.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Failure::Schema(format!("parameter '{part}' is not key=value")))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}
