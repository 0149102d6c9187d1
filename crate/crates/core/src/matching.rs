//! Bipartite maximum matching.
//!
//! Two implementations: Hopcroft–Karp for the comparability split graph
//! behind `Poset::width` (the hot path), and a plain augmenting-path
//! search with a greedy pre-pass whose output order is easy to predict,
//! used for the perfect matchings in the graph constructions.

use crate::poset::Poset;

const NONE: usize = usize::MAX;

/// Maximum matching size in the split graph with an edge (i, j) per strict
/// pair i < j. By Dilworth/König, width = n − matching.
pub fn max_matching_size(poset: &Poset) -> usize {
    hopcroft_karp_poset(poset).0
}

/// successor[i] = Some(j) when the min chain cover links i directly to j.
pub fn chain_successors(poset: &Poset) -> Vec<Option<usize>> {
    hopcroft_karp_poset(poset)
        .1
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

fn hopcroft_karp_poset(poset: &Poset) -> (usize, Vec<usize>) {
    let n = poset.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|i| poset.above_set(i)).collect();
    hopcroft_karp(n, n, &adj)
}

/// Hopcroft–Karp; returns (matching size, pair_left).
pub fn hopcroft_karp(nl: usize, nr: usize, adj: &[Vec<usize>]) -> (usize, Vec<usize>) {
    let mut pair_l = vec![NONE; nl];
    let mut pair_r = vec![NONE; nr];
    let mut dist = vec![0usize; nl];
    let mut size = 0;

    // Greedy seed matching.
    for u in 0..nl {
        for &v in &adj[u] {
            if pair_r[v] == NONE {
                pair_l[u] = v;
                pair_r[v] = u;
                size += 1;
                break;
            }
        }
    }

    loop {
        // BFS layering from free left vertices.
        let mut queue = std::collections::VecDeque::new();
        for u in 0..nl {
            if pair_l[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = pair_r[v];
                if w == NONE {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        for u in 0..nl {
            if pair_l[u] == NONE && dfs(u, adj, &mut pair_l, &mut pair_r, &mut dist) {
                size += 1;
            }
        }
    }
    (size, pair_l)
}

fn dfs(
    u: usize,
    adj: &[Vec<usize>],
    pair_l: &mut [usize],
    pair_r: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &v in &adj[u] {
        let w = pair_r[v];
        if w == NONE || (dist[w] == dist[u] + 1 && dfs(w, adj, pair_l, pair_r, dist)) {
            pair_l[u] = v;
            pair_r[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Deterministic augmenting-path matching: left vertices in ascending
/// order, each first taking the lowest free right neighbor, augmenting
/// only when none is free. Returns pair_left.
pub fn kuhn(nl: usize, nr: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut pair_l = vec![NONE; nl];
    let mut pair_r = vec![NONE; nr];
    for u in 0..nl {
        if let Some(&v) = adj[u].iter().find(|&&v| pair_r[v] == NONE) {
            pair_l[u] = v;
            pair_r[v] = u;
            continue;
        }
        let mut seen = vec![false; nr];
        try_augment(u, adj, &mut pair_l, &mut pair_r, &mut seen);
    }
    pair_l
}

fn try_augment(
    u: usize,
    adj: &[Vec<usize>],
    pair_l: &mut [usize],
    pair_r: &mut [usize],
    seen: &mut [bool],
) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if pair_r[v] == NONE || try_augment(pair_r[v], adj, pair_l, pair_r, seen) {
            pair_l[u] = v;
            pair_r[v] = u;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn width_of_small_posets_matches_brute_force() {
        // every subset checked for being an antichain
        fn brute_width(p: &Poset) -> usize {
            let n = p.len();
            let mut best = 0;
            for mask in 0u32..(1 << n) {
                let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                if p.is_antichain_set(&set) {
                    best = best.max(set.len());
                }
            }
            best
        }
        let posets = [
            Poset::chain(4),
            Poset::antichain(4),
            Poset::transitive_closure(&[(0, 2), (1, 2), (1, 3)], 4).unwrap(),
            Poset::chain(2).disjoint_union(&Poset::chain(3)),
        ];
        for p in &posets {
            assert_eq!(p.width(), brute_width(p));
        }
    }

    #[test]
    fn kuhn_identity_on_complete_bipartite() {
        let adj: Vec<Vec<usize>> = (0..3).map(|_| vec![0, 1, 2]).collect();
        assert_eq!(kuhn(3, 3, &adj), vec![0, 1, 2]);
    }

    #[test]
    fn kuhn_on_one_regular_graph_is_the_graph() {
        let adj = vec![vec![2], vec![0], vec![1]];
        assert_eq!(kuhn(3, 3, &adj), vec![2, 0, 1]);
    }
}
