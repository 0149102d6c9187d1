//! Stable file formats: poset and wall JSON, artifact bundles, graph edge
//! lists, and the Hasse-diagram DOT export.
//!
//! A poset file stores its cover relations; loading closes them again, so
//! a save/load/save cycle is byte-identical.

use crate::constructions::{BipartiteGraph, ButterflyArtifact, ReservoirArtifact};
use crate::firstfit::PresentationOrder;
use crate::poset::{ChainPartition, Poset, PosetError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("schema error: {0}")]
    Schema(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub relations: Vec<(usize, usize)>,
}

impl PosetJson {
    pub fn from_poset(p: &Poset) -> PosetJson {
        PosetJson {
            n: p.len(),
            labels: p.labels().map(<[String]>::to_vec),
            relations: p.cover_relations(),
        }
    }

    pub fn into_poset(self) -> Result<Poset, LoadError> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(LoadError::Schema(format!(
                    "{} labels for {} elements",
                    labels.len(),
                    self.n
                )));
            }
        }
        let mut p = Poset::transitive_closure(&self.relations, self.n)?;
        if let Some(labels) = self.labels {
            p = p.with_labels(labels);
        }
        Ok(p)
    }
}

pub fn poset_to_json(p: &Poset) -> String {
    serde_json::to_string_pretty(&PosetJson::from_poset(p)).expect("poset serializes")
}

pub fn poset_from_json(s: &str) -> Result<Poset, LoadError> {
    serde_json::from_str::<PosetJson>(s)?.into_poset()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WallJson {
    pub chains: Vec<Vec<usize>>,
}

pub fn wall_to_json(cp: &ChainPartition) -> String {
    serde_json::to_string_pretty(&WallJson {
        chains: cp.chains.clone(),
    })
    .expect("wall serializes")
}

pub fn wall_from_json(s: &str, poset: &Poset) -> Result<ChainPartition, LoadError> {
    let w: WallJson = serde_json::from_str(s)?;
    Ok(ChainPartition::new(poset, w.chains)?)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderJson {
    pub order: Vec<usize>,
}

pub fn order_from_json(s: &str, poset: &Poset) -> Result<PresentationOrder, LoadError> {
    let o: OrderJson = serde_json::from_str(s)?;
    Ok(PresentationOrder::new(o.order, poset.len())?)
}

/// Artifact bundle: poset, its adversarial wall, the presentation order
/// that realizes it, and construction metadata.
#[derive(Serialize)]
pub struct BundleJson<'a> {
    pub poset: PosetJson,
    pub wall: WallJson,
    pub order: &'a [usize],
    pub meta: serde_json::Value,
}

pub fn reservoir_bundle(artifact: &ReservoirArtifact) -> String {
    let bundle = BundleJson {
        poset: PosetJson::from_poset(&artifact.poset),
        wall: WallJson {
            chains: artifact.wall.chains.clone(),
        },
        order: artifact.order.as_slice(),
        meta: serde_json::json!({
            "family": "reservoir",
            "k": artifact.k,
            "blocks": artifact.blocks,
            "xElements": artifact.x_elements,
        }),
    };
    serde_json::to_string_pretty(&bundle).expect("bundle serializes")
}

pub fn graph_json(g: &BipartiteGraph) -> serde_json::Value {
    serde_json::json!({
        "left": g.left,
        "right": g.right,
        "edges": g.edges(),
    })
}

pub fn butterfly_bundle(artifact: &ButterflyArtifact) -> String {
    let bundle = BundleJson {
        poset: PosetJson::from_poset(&artifact.poset),
        wall: WallJson {
            chains: artifact.wall.chains.clone(),
        },
        order: artifact.order.as_slice(),
        meta: serde_json::json!({
            "family": "butterfly-lb",
            "q": artifact.q,
            "width": artifact.width,
            "graph": graph_json(&artifact.graph),
            "matching": artifact.matching,
            "edgeOrder": artifact.edge_order,
        }),
    };
    serde_json::to_string_pretty(&bundle).expect("bundle serializes")
}

/// Hasse diagram in DOT: one node per element, one directed edge per cover
/// relation, drawn bottom to top.
pub fn dot_export(p: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
    for i in p.elements() {
        out.push_str(&format!("  e{} [label=\"{}\"];\n", i, p.label(i)));
    }
    for (u, v) in p.cover_relations() {
        out.push_str(&format!("  e{u} -> e{v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{butterfly, reservoir, skewed_butterfly};

    #[test]
    fn poset_roundtrip_is_byte_identical() {
        for p in [butterfly(), skewed_butterfly(), Poset::chain(4)] {
            let once = poset_to_json(&p);
            let back = poset_from_json(&once).unwrap();
            assert_eq!(back, p);
            assert_eq!(poset_to_json(&back), once);
        }
    }

    #[test]
    fn cycle_in_file_reports_offending_pair() {
        let s = r#"{"n": 2, "relations": [[0, 1], [1, 0]]}"#;
        match poset_from_json(s) {
            Err(LoadError::Poset(PosetError::Cycle { .. })) => {}
            other => panic!("expected cycle error, got {other:?}"),
        }
    }

    #[test]
    fn label_count_mismatch_is_a_schema_error() {
        let s = r#"{"n": 2, "labels": ["a"], "relations": []}"#;
        assert!(matches!(poset_from_json(s), Err(LoadError::Schema(_))));
    }

    #[test]
    fn wall_json_roundtrip() {
        let p = butterfly();
        let w = crate::firstfit::dilworth_wall(&p);
        let s = wall_to_json(&w);
        assert_eq!(wall_from_json(&s, &p).unwrap(), w);
        assert!(wall_from_json(r#"{"chains": [[0, 1]]}"#, &p).is_err());
    }

    #[test]
    fn dot_export_of_chain_is_a_path() {
        let dot = dot_export(&Poset::chain(3));
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("e0 -> e1;"));
        assert!(dot.contains("e1 -> e2;"));
    }

    #[test]
    fn dot_export_of_butterfly_has_four_edges() {
        let dot = dot_export(&butterfly());
        assert_eq!(dot.matches("->").count(), 4);
    }

    #[test]
    fn dot_export_of_reservoir_two_matches_covers() {
        let p = reservoir(2).unwrap().poset;
        let dot = dot_export(&p);
        assert_eq!(dot.matches("->").count(), p.cover_relations().len());
        assert_eq!(dot.matches("label=").count(), 4);
    }

    #[test]
    fn reservoir_bundle_mentions_its_parts() {
        let a = reservoir(2).unwrap();
        let s = reservoir_bundle(&a);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["meta"]["k"], 2);
        assert_eq!(v["order"].as_array().unwrap().len(), 4);
        assert_eq!(v["wall"]["chains"].as_array().unwrap().len(), 3);
    }
}
