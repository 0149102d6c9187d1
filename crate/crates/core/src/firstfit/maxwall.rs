//! Search for the largest wall of a poset, which equals the worst-case
//! First-Fit performance on it.
//!
//! Small posets are solved exactly by branch and bound over ordered chain
//! assignments in a fixed element order. When the node budget runs out the
//! search degrades to a heuristic: First-Fit over random orders followed by
//! wall-preserving chain splits.

use super::{first_fit, is_wall, PresentationOrder};
use crate::poset::{ChainPartition, Poset};
use rand::seq::SliceRandom;
use rand::SeedableRng;

pub const DEFAULT_MAX_WALL_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug)]
pub struct MaxWallResult {
    pub wall: ChainPartition,
    pub size: usize,
    /// True only when the branch-and-bound search ran to completion, so the
    /// size is the exact maximum.
    pub exact: bool,
}

pub fn max_wall(poset: &Poset, budget: u64) -> MaxWallResult {
    if poset.is_empty() {
        return MaxWallResult {
            wall: ChainPartition::from_sorted(vec![]),
            size: 0,
            exact: true,
        };
    }
    let seed_wall = heuristic_wall(poset);
    let mut search = BranchAndBound {
        poset,
        chains: Vec::new(),
        best: seed_wall.clone(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    search.dfs(0);
    let exact = !search.exhausted;
    let wall = search.best;
    debug_assert!(is_wall(poset, &wall));
    MaxWallResult {
        size: wall.len(),
        wall,
        exact,
    }
}

struct BranchAndBound<'a> {
    poset: &'a Poset,
    chains: Vec<Vec<usize>>,
    best: ChainPartition,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl BranchAndBound<'_> {
    fn dfs(&mut self, x: usize) {
        if self.exhausted {
            return;
        }
        let n = self.poset.len();
        if x == n {
            let cand = ChainPartition::from_sorted(self.chains.clone());
            if cand.len() > self.best.len() && is_wall(self.poset, &cand) {
                self.best = cand;
            }
            return;
        }
        // optimistic bound: every remaining element opens a chain
        if self.chains.len() + (n - x) <= self.best.len() {
            return;
        }
        for j in 0..=self.chains.len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            if j < self.chains.len() {
                if !self.chains[j].iter().all(|&y| self.poset.comparable(x, y)) {
                    continue;
                }
            } else {
                self.chains.push(Vec::new());
            }
            if self.feasible_so_far(x, j) {
                let pos = self.chains[j]
                    .iter()
                    .take_while(|&&y| self.poset.lt(y, x))
                    .count();
                self.chains[j].insert(pos, x);
                self.dfs(x + 1);
                self.chains[j].remove(pos);
            }
            if j == self.chains.len() - 1 && self.chains[j].is_empty() {
                self.chains.pop();
            }
        }
    }

    /// Conservative blocking check after tentatively placing x in chain j:
    /// each earlier chain must already hold a witness incomparable to x, or
    /// some still-unassigned element incomparable to x must remain.
    fn feasible_so_far(&self, x: usize, j: usize) -> bool {
        let n = self.poset.len();
        let has_free_witness = (x + 1..n).any(|z| self.poset.incomparable(x, z));
        for i in 0..j {
            if self.chains[i].iter().any(|&y| self.poset.incomparable(x, y)) {
                continue;
            }
            if !has_free_witness {
                return false;
            }
        }
        true
    }
}

/// First-Fit over a few seeded orders, then greedy wall-preserving chain
/// splits until no split applies.
fn heuristic_wall(poset: &Poset) -> ChainPartition {
    let n = poset.len();
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x57a11);
    let mut best = first_fit(poset, &PresentationOrder::identity(n)).chains;
    for _ in 0..16 {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let r = first_fit(poset, &PresentationOrder::from_vec_unchecked(order));
        if r.chains.len() > best.len() {
            best = r.chains;
        }
    }
    loop {
        match split_once(poset, &best) {
            Some(better) => best = better,
            None => return best,
        }
    }
}

/// Tries to split one chain into two adjacent chains while keeping the wall
/// property.
fn split_once(poset: &Poset, wall: &ChainPartition) -> Option<ChainPartition> {
    for (c, chain) in wall.chains.iter().enumerate() {
        for cut in 1..chain.len() {
            let mut chains = Vec::with_capacity(wall.len() + 1);
            chains.extend_from_slice(&wall.chains[..c]);
            chains.push(chain[..cut].to_vec());
            chains.push(chain[cut..].to_vec());
            chains.extend_from_slice(&wall.chains[c + 1..]);
            let cand = ChainPartition::from_sorted(chains);
            if is_wall(poset, &cand) {
                return Some(cand);
            }
        }
    }
    None
}
