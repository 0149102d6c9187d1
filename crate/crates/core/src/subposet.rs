//! Subposet containment: exhaustive backtracking search for an injective
//! order-preserving-and-reflecting map of a pattern poset into a host.

use crate::poset::Poset;
use thiserror::Error;

/// Default node-expansion budget for the backtracking search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 20_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("containment search budget of {budget} node expansions exhausted")]
pub struct BudgetExceeded {
    pub budget: u64,
}

/// A witness that a pattern poset occurs inside a host: `map[q]` is the
/// host element playing the role of pattern element `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that the map both preserves and reflects the
    /// strict order.
    pub fn verify(&self, pattern: &Poset, host: &Poset) -> bool {
        if self.map.len() != pattern.len() {
            return false;
        }
        if self.map.iter().any(|&c| c >= host.len()) {
            return false;
        }
        for (q1, &c1) in self.map.iter().enumerate() {
            for (q2, &c2) in self.map.iter().enumerate() {
                if q1 != q2 && c1 == c2 {
                    return false;
                }
                if pattern.lt(q1, q2) != host.lt(c1, c2) {
                    return false;
                }
            }
        }
        true
    }
}

/// Searches for `pattern` as a subposet of `host` with the default budget.
pub fn contains_subposet(host: &Poset, pattern: &Poset) -> Result<Option<Embedding>, BudgetExceeded> {
    contains_subposet_with_budget(host, pattern, DEFAULT_SEARCH_BUDGET)
}

/// Backtracking search. Pattern elements are processed along a linear
/// extension; host candidates are prefiltered by degree and height/depth
/// compatibility and tried in ascending index order, so the first embedding
/// found is deterministic. `Ok(None)` means the search space was exhausted
/// and no embedding exists.
pub fn contains_subposet_with_budget(
    host: &Poset,
    pattern: &Poset,
    budget: u64,
) -> Result<Option<Embedding>, BudgetExceeded> {
    let np = pattern.len();
    let nh = host.len();
    if np == 0 {
        return Ok(Some(Embedding { map: vec![] }));
    }
    if np > nh {
        return Ok(None);
    }

    // Linear extension of the pattern: below-counts are strictly monotone
    // along the order.
    let mut order: Vec<usize> = (0..np).collect();
    order.sort_by_key(|&q| (pattern.below_set(q).len(), q));

    let ph = pattern.element_heights();
    let pd = pattern.element_depths();
    let hh = host.element_heights();
    let hd = host.element_depths();

    let mut cands: Vec<Vec<usize>> = Vec::with_capacity(np);
    for &q in &order {
        let (qa, qb) = (pattern.above_set(q).len(), pattern.below_set(q).len());
        let list: Vec<usize> = (0..nh)
            .filter(|&c| {
                host.above_set(c).len() >= qa
                    && host.below_set(c).len() >= qb
                    && hh[c] >= ph[q]
                    && hd[c] >= pd[q]
            })
            .collect();
        if list.is_empty() {
            return Ok(None);
        }
        cands.push(list);
    }

    let mut state = Search {
        host,
        pattern,
        order: &order,
        cands: &cands,
        assigned: vec![usize::MAX; np],
        used: vec![false; nh],
        nodes: 0,
        budget,
    };
    match state.dfs(0) {
        Ok(true) => Ok(Some(Embedding {
            map: state.assigned,
        })),
        Ok(false) => Ok(None),
        Err(e) => Err(e),
    }
}

struct Search<'a> {
    host: &'a Poset,
    pattern: &'a Poset,
    order: &'a [usize],
    cands: &'a [Vec<usize>],
    assigned: Vec<usize>, // pattern element -> host element
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn dfs(&mut self, depth: usize) -> Result<bool, BudgetExceeded> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let q = self.order[depth];
        for ci in 0..self.cands[depth].len() {
            let c = self.cands[depth][ci];
            if self.used[c] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(BudgetExceeded {
                    budget: self.budget,
                });
            }
            if self.consistent(q, c, depth) {
                self.assigned[q] = c;
                self.used[c] = true;
                if self.dfs(depth + 1)? {
                    return Ok(true);
                }
                self.used[c] = false;
                self.assigned[q] = usize::MAX;
            }
        }
        Ok(false)
    }

    fn consistent(&self, q: usize, c: usize, depth: usize) -> bool {
        for &p in &self.order[..depth] {
            let a = self.assigned[p];
            if self.pattern.lt(p, q) != self.host.lt(a, c)
                || self.pattern.lt(q, p) != self.host.lt(c, a)
            {
                return false;
            }
        }
        true
    }
}
