//! The butterfly-free adversarial instance built from a projective plane:
//! a poset of width w = q²+q+1 with a wall of size (q+1)w, matching the
//! w^{3/2} growth of worst-case First-Fit on butterfly-free posets.

use super::plane::{bipartite_perfect_matching, projective_plane_graph, BipartiteGraph};
use super::{ConstructionError, BUTTERFLY_MAX_Q};
use crate::bitset::BitSet;
use crate::firstfit::{first_fit, is_wall, wall_to_order, PresentationOrder};
use crate::poset::{ChainPartition, Poset};

#[derive(Clone, Debug)]
pub struct ButterflyArtifact {
    pub q: u64,
    /// Width of the poset, q² + q + 1.
    pub width: usize,
    pub poset: Poset,
    /// (q+1)·width chains: a 2-chain per non-matching edge in L order,
    /// then one singleton per matched pair.
    pub wall: ChainPartition,
    pub order: PresentationOrder,
    /// The full incidence graph G.
    pub graph: BipartiteGraph,
    /// The perfect matching M removed from G.
    pub matching: Vec<(usize, usize)>,
    /// L: the ordering of E(G − M), lexicographic.
    pub edge_order: Vec<(usize, usize)>,
}

/// Builds the butterfly-free lower-bound poset for prime q.
///
/// Elements: for each edge e = xy of G' = G − M, a bottom point (x, e) and
/// a top point (y, e); plus one middle point per matching edge. The points
/// of one left vertex x form a chain ascending along L, capped by x's
/// middle point; the points of one right vertex y continue above y's middle
/// point, descending along L. Bottom point (x, e) is covered by top point
/// (y, e) exactly when e = xy.
pub fn butterfly_lower_bound(q: u64) -> Result<ButterflyArtifact, ConstructionError> {
    if q > BUTTERFLY_MAX_Q {
        return Err(ConstructionError::CapExceeded {
            param: "q",
            value: q as usize,
            max: BUTTERFLY_MAX_Q as usize,
        });
    }
    let graph = projective_plane_graph(q)?;
    let w = graph.left;
    let matching = bipartite_perfect_matching(&graph)?;
    let matched_right: Vec<usize> = {
        let mut mr = vec![usize::MAX; w];
        for &(x, y) in &matching {
            mr[x] = y;
        }
        mr
    };

    // L: lexicographic order on the non-matching edges
    let edge_order: Vec<(usize, usize)> = graph
        .edges()
        .into_iter()
        .filter(|&(x, y)| matched_right[x] != y)
        .collect();
    let ne = edge_order.len();
    let n = 2 * ne + w;

    // Layout: bottom points (x, e) at the L position of e; middle points
    // next, indexed by left vertex; top points (y, e) at reversed L
    // positions so that ascending index follows the order inside chains.
    let bottom = |e: usize| e;
    let middle = |x: usize| ne + x;
    let top = |e: usize| ne + w + (ne - 1 - e);

    let mut covers: Vec<(usize, usize)> = Vec::new();
    // per-left-vertex chains in I_X, capped by the middle point
    let mut edges_at_left: Vec<Vec<usize>> = vec![Vec::new(); w];
    let mut edges_at_right: Vec<Vec<usize>> = vec![Vec::new(); w];
    for (e, &(x, y)) in edge_order.iter().enumerate() {
        edges_at_left[x].push(e);
        edges_at_right[y].push(e);
    }
    for x in 0..w {
        for pair in edges_at_left[x].windows(2) {
            covers.push((bottom(pair[0]), bottom(pair[1])));
        }
        if let Some(&last) = edges_at_left[x].last() {
            covers.push((bottom(last), middle(x)));
        }
    }
    // per-right-vertex chains in I_Y above the middle point, descending
    // along L: the first edge of L incident to y ends up on top
    for (x, &y) in matched_right.iter().enumerate() {
        if let Some(&last) = edges_at_right[y].last() {
            covers.push((middle(x), top(last)));
        }
        for pair in edges_at_right[y].windows(2) {
            covers.push((top(pair[1]), top(pair[0])));
        }
    }
    // the cross covers (x, e) < (y, e)
    for e in 0..ne {
        covers.push((bottom(e), top(e)));
    }

    let poset = close_covers(n, &covers);

    let mut chains: Vec<Vec<usize>> = Vec::with_capacity(ne + w);
    for e in 0..ne {
        chains.push(vec![bottom(e), top(e)]);
    }
    for x in 0..w {
        chains.push(vec![middle(x)]);
    }
    let wall = ChainPartition::new(&poset, chains)?;
    debug_assert!(is_wall(&poset, &wall));
    let order = wall_to_order(&poset, &wall).expect("the construction yields a wall");
    debug_assert_eq!(first_fit(&poset, &order).chains, wall);

    Ok(ButterflyArtifact {
        q,
        width: w,
        poset,
        wall,
        order,
        graph,
        matching,
        edge_order,
    })
}

/// Transitive closure of a cover list, without cycle checking (the input
/// is acyclic by construction) and without the element cap (341 elements
/// at q = 5 stay well inside it).
fn close_covers(n: usize, covers: &[(usize, usize)]) -> Poset {
    let mut above: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
    for &(u, v) in covers {
        above[u].set(v);
    }
    for k in 0..n {
        let row = above[k].clone();
        for i in 0..n {
            if i != k && above[i].get(k) {
                above[i].union_with(&row);
            }
        }
    }
    Poset::from_above(above)
}
