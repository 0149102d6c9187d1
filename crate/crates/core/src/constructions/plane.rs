//! The point–line incidence graph of the projective plane of prime order:
//! a (q+1)-regular bipartite graph on (q²+q+1) + (q²+q+1) vertices with no
//! 4-cycle, the extremal C4-free construction.

use super::{is_prime, ConstructionError};
use crate::matching;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteGraph {
    pub left: usize,
    pub right: usize,
    /// adj[u] = right neighbors of left vertex u, ascending.
    pub adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        let mut rdeg = vec![0usize; self.right];
        for vs in &self.adj {
            if vs.len() != degree {
                return false;
            }
            for &v in vs {
                rdeg[v] += 1;
            }
        }
        rdeg.iter().all(|&d| d == degree)
    }

    /// Exhaustive 4-cycle scan: some pair of left vertices with two common
    /// neighbors.
    pub fn has_four_cycle(&self) -> bool {
        for u in 0..self.left {
            for v in u + 1..self.left {
                let common = self.adj[u]
                    .iter()
                    .filter(|x| self.adj[v].binary_search(x).is_ok())
                    .count();
                if common >= 2 {
                    return true;
                }
            }
        }
        false
    }
}

/// Builds the incidence graph of PG(2, q) for prime q. Points and lines are
/// the normalized nonzero homogeneous triples over the q-element field in
/// lexicographic order; point p lies on line l when p·l ≡ 0 (mod q).
pub fn projective_plane_graph(q: u64) -> Result<BipartiteGraph, ConstructionError> {
    if !is_prime(q) {
        return Err(ConstructionError::NotPrime(q));
    }
    let triples = normalized_triples(q);
    let n = triples.len();
    debug_assert_eq!(n as u64, q * q + q + 1);
    let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(q as usize + 1); n];
    for (p, pt) in triples.iter().enumerate() {
        for (l, ln) in triples.iter().enumerate() {
            let dot: u64 = pt.iter().zip(ln).map(|(a, b)| a * b).sum();
            if dot % q == 0 {
                adj[p].push(l);
            }
        }
    }
    Ok(BipartiteGraph {
        left: n,
        right: n,
        adj,
    })
}

/// All triples over F_q with first nonzero coordinate equal to 1, in
/// lexicographic order: the canonical representatives of the projective
/// points.
fn normalized_triples(q: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let t = [a, b, c];
                let first = t.iter().find(|&&x| x != 0);
                if first == Some(&1) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Perfect matching of a regular bipartite graph with equal sides, as an
/// edge list, by the deterministic augmenting-path search.
pub fn bipartite_perfect_matching(
    g: &BipartiteGraph,
) -> Result<Vec<(usize, usize)>, ConstructionError> {
    if g.left != g.right {
        return Err(ConstructionError::NoPerfectMatching);
    }
    let pair = matching::kuhn(g.left, g.right, &g.adj);
    let mut edges = Vec::with_capacity(g.left);
    for (u, &v) in pair.iter().enumerate() {
        if v == usize::MAX {
            return Err(ConstructionError::NoPerfectMatching);
        }
        edges.push((u, v));
    }
    Ok(edges)
}
