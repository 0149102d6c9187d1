//! `firstfit` and `maxwall`: run the simulator on a poset file.

use crate::{emit, load_poset, CmdResult, Failure};
use ffchain::firstfit::{first_fit, first_fit_traced, max_wall, PresentationOrder};
use ffchain::random::random_order;
use rand::{RngCore, SeedableRng};
use serde_json::json;
use std::path::Path;

pub fn run(
    poset: &Path,
    order_file: Option<&Path>,
    random_orders: Option<usize>,
    seed: u64,
    trace: bool,
    out: Option<&Path>,
) -> CmdResult {
    let p = load_poset(poset)?;
    let width = p.width();

    let orders: Vec<(String, PresentationOrder)> = match (order_file, random_orders) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Schema(format!("cannot read {}: {e}", path.display())))?;
            let order = ffchain::io::order_from_json(&text, &p).map_err(Failure::schema)?;
            vec![("file".to_string(), order)]
        }
        (None, Some(count)) => {
            let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(seed);
            (0..count)
                .map(|i| {
                    // per-run stream, so single runs can be replayed
                    let sub = rng.next_u64();
                    let mut sub_rng = rand_chacha::ChaCha12Rng::seed_from_u64(sub);
                    (format!("random[{i}]"), random_order(&mut sub_rng, p.len()))
                })
                .collect()
        }
        (None, None) => vec![("identity".to_string(), PresentationOrder::identity(p.len()))],
    };

    let mut runs = Vec::new();
    let mut max_chains = 0;
    for (name, order) in &orders {
        let (result, steps) = first_fit_traced(&p, order);
        let chains = result.chains.len();
        max_chains = max_chains.max(chains);
        let mut record = json!({
            "order": name,
            "chainsUsed": chains,
            "colors": result.color,
        });
        if trace {
            record["trace"] = serde_json::to_value(&steps).expect("trace serializes");
        }
        runs.push(record);
    }

    let report = json!({
        "poset": poset.display().to_string(),
        "n": p.len(),
        "width": width,
        "seed": seed,
        "runs": runs,
        "maxChainsObserved": max_chains,
    });
    emit(out, &serde_json::to_string_pretty(&report).unwrap())
}

pub fn run_maxwall(poset: &Path, budget: u64, out: Option<&Path>) -> CmdResult {
    let p = load_poset(poset)?;
    let r = max_wall(&p, budget);
    // cross-check: replaying the wall through First-Fit reproduces it
    let order = ffchain::firstfit::wall_to_order(&p, &r.wall).map_err(Failure::schema)?;
    let replay = first_fit(&p, &order);
    let report = json!({
        "poset": poset.display().to_string(),
        "n": p.len(),
        "width": p.width(),
        "maxWallSize": r.size,
        "exact": r.exact,
        "wall": { "chains": r.wall.chains },
        "replayMatches": replay.chains == r.wall,
    });
    emit(out, &serde_json::to_string_pretty(&report).unwrap())
}
