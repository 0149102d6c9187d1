//! `verify`: run an invariant suite against one of the constructions and
//! report per-instance records; exits 1 on the first failed assertion.

use crate::{emit, CmdResult, Failure};
use ffchain::classify::{in_family_q, in_family_q_oracle, reservoir_membership};
use ffchain::constructions::{butterfly_lower_bound, projective_plane_graph, reservoir};
use ffchain::enumerate::{enumerate_posets, max_antichain_brute};
use ffchain::firstfit::{
    analyze_butterfly_wall, dilworth_wall, first_fit, is_wall,
};
use rayon::prelude::*;
use serde_json::json;
use std::path::Path;
use std::time::Instant;

pub fn run(
    target: &str,
    kmax: usize,
    q: u64,
    nmax: usize,
    seed: u64,
    out: Option<&Path>,
) -> CmdResult {
    let started = Instant::now();
    let (parameters, instances, failures) = match target {
        "reservoir" => verify_reservoir(kmax)?,
        "butterfly" => verify_butterfly(q)?,
        "classifier" => verify_classifier(nmax)?,
        "dilworth" => verify_dilworth(nmax)?,
        other => {
            return Err(Failure::Schema(format!(
                "unknown verify target '{other}'; expected reservoir, butterfly, classifier, or dilworth"
            )))
        }
    };
    let pass = failures.is_empty();
    let report = json!({
        "target": target,
        "parameters": parameters,
        "seed": seed,
        "instances": instances,
        "failures": failures,
        "pass": pass,
        "timingMs": started.elapsed().as_millis() as u64,
    });
    emit(out, &serde_json::to_string_pretty(&report).unwrap())?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Assertion(failures[0].clone()))
    }
}

type Verification = (serde_json::Value, Vec<serde_json::Value>, Vec<String>);

fn verify_reservoir(kmax: usize) -> Result<Verification, Failure> {
    let mut instances = Vec::new();
    let mut failures = Vec::new();
    for k in 1..=kmax {
        let art = reservoir(k).map_err(Failure::schema)?;
        let width = art.poset.width();
        let expected = (1usize << k) - 1;
        let wall_ok = is_wall(&art.poset, &art.wall);
        let replay = first_fit(&art.poset, &art.order).chains == art.wall;
        if width != k {
            failures.push(format!("reservoir k={k}: width {width} != {k}"));
        }
        if art.wall.len() != expected {
            failures.push(format!(
                "reservoir k={k}: wall size {} != 2^{k}-1 = {expected}",
                art.wall.len()
            ));
        }
        if !wall_ok {
            failures.push(format!("reservoir k={k}: output fails the wall condition"));
        }
        if !replay {
            failures.push(format!("reservoir k={k}: First-Fit does not reproduce the wall"));
        }
        instances.push(json!({
            "k": k,
            "n": art.poset.len(),
            "width": width,
            "wallSize": art.wall.len(),
            "expectedWallSize": expected,
            "isWall": wall_ok,
            "firstFitReproducesWall": replay,
        }));
    }
    Ok((json!({ "kmax": kmax }), instances, failures))
}

fn verify_butterfly(q: u64) -> Result<Verification, Failure> {
    let mut failures = Vec::new();
    let graph = projective_plane_graph(q).map_err(Failure::schema)?;
    let degree = (q + 1) as usize;
    if !graph.is_regular(degree) {
        failures.push(format!("plane q={q}: graph is not {degree}-regular"));
    }
    if graph.has_four_cycle() {
        failures.push(format!("plane q={q}: incidence graph contains a 4-cycle"));
    }

    let art = butterfly_lower_bound(q).map_err(Failure::schema)?;
    let w = (q * q + q + 1) as usize;
    let expected_wall = degree * w;
    let width = art.poset.width();
    let wall_ok = is_wall(&art.poset, &art.wall);
    let replay = first_fit(&art.poset, &art.order).chains == art.wall;
    let bfree = art.poset.butterfly_witness().is_none();
    if width != w {
        failures.push(format!("butterfly q={q}: width {width} != {w}"));
    }
    if art.wall.len() != expected_wall {
        failures.push(format!(
            "butterfly q={q}: wall size {} != (q+1)(q²+q+1) = {expected_wall}",
            art.wall.len()
        ));
    }
    if !wall_ok {
        failures.push(format!("butterfly q={q}: wall condition fails"));
    }
    if !replay {
        failures.push(format!("butterfly q={q}: First-Fit does not reproduce the wall"));
    }
    if !bfree {
        failures.push(format!("butterfly q={q}: poset contains a butterfly"));
    }

    let dw = dilworth_wall(&art.poset);
    let analysis = analyze_butterfly_wall(&art.poset, &art.wall, &dw);
    let (cprime, sig_edges, analysis_ok) = match &analysis {
        Ok(a) => (a.cprime.len(), a.siggraph.len(), true),
        Err(e) => {
            failures.push(format!("butterfly q={q}: wall analysis failed: {e}"));
            (0, 0, false)
        }
    };

    let instances = vec![json!({
        "q": q,
        "n": art.poset.len(),
        "width": width,
        "wallSize": art.wall.len(),
        "expectedWallSize": expected_wall,
        "graphEdges": graph.edge_count(),
        "regular": degree,
        "fourCycleFree": !graph.has_four_cycle(),
        "butterflyFree": bfree,
        "isWall": wall_ok,
        "firstFitReproducesWall": replay,
        "analysisOk": analysis_ok,
        "cPrimeChains": cprime,
        "signatureEdges": sig_edges,
    })];
    Ok((json!({ "q": q }), instances, failures))
}

fn verify_classifier(nmax: usize) -> Result<Verification, Failure> {
    let mut instances = Vec::new();
    let mut failures = Vec::new();
    for n in 0..=nmax {
        let posets: Vec<ffchain::Poset> = enumerate_posets(n).map_err(Failure::schema)?.collect();
        let count = posets.len();
        let results: Vec<Result<(bool, Option<usize>), String>> = posets
            .par_iter()
            .filter(|p| p.width() <= 2)
            .map(|p| {
                let v = in_family_q(p).map_err(|e| e.to_string())?;
                let o = in_family_q_oracle(p).map_err(|e| e.to_string())?;
                if v.in_q != o {
                    return Err(format!(
                        "classifier/oracle disagree on {:?}: {} vs {o}",
                        p, v.in_q
                    ));
                }
                let k = reservoir_membership(p, 4).map_err(|e| e.to_string())?;
                if v.in_q != k.is_some() {
                    return Err(format!(
                        "classifier/reservoir disagree on {:?}: inQ = {} but k = {k:?}",
                        p, v.in_q
                    ));
                }
                Ok((v.in_q, k))
            })
            .collect();
        let mut in_q = 0usize;
        let mut out_q = 0usize;
        let mut kdist = vec![0usize; 6];
        for r in results {
            match r {
                Ok((true, Some(k))) => {
                    in_q += 1;
                    kdist[k] += 1;
                }
                Ok(_) => out_q += 1,
                Err(msg) => failures.push(format!("n={n}: {msg}")),
            }
        }
        instances.push(json!({
            "n": n,
            "labeledPosets": count,
            "widthAtMost2": in_q + out_q,
            "inFamily": in_q,
            "outsideFamily": out_q,
            "leastKDistribution": kdist,
        }));
    }
    Ok((json!({ "nmax": nmax }), instances, failures))
}

fn verify_dilworth(nmax: usize) -> Result<Verification, Failure> {
    let mut instances = Vec::new();
    let mut failures = Vec::new();
    for n in 0..=nmax {
        let posets: Vec<ffchain::Poset> = enumerate_posets(n).map_err(Failure::schema)?.collect();
        let mismatches: Vec<String> = posets
            .par_iter()
            .filter_map(|p| {
                let cp = p.dilworth_partition();
                let brute = max_antichain_brute(p);
                (cp.len() != brute).then(|| {
                    format!(
                        "n={n} {:?}: partition size {} vs brute-force antichain {brute}",
                        p,
                        cp.len()
                    )
                })
            })
            .collect();
        instances.push(json!({
            "n": n,
            "labeledPosets": posets.len(),
            "mismatches": mismatches.len(),
        }));
        failures.extend(mismatches);
    }
    Ok((json!({ "nmax": nmax }), instances, failures))
}
