//! Seeded generators for randomized sweeps: random presentation orders,
//! random posets, and rejection-sampled pattern-free posets.

use crate::firstfit::PresentationOrder;
use crate::poset::Poset;
use crate::subposet::contains_subposet;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_order<R: Rng>(rng: &mut R, n: usize) -> PresentationOrder {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    PresentationOrder::new(order, n).expect("shuffle keeps the permutation")
}

/// Random poset: each pair (i, j) with i < j becomes a relation with the
/// given density under a shuffled relabeling, then the closure is taken.
/// The DAG orientation follows the hidden relabeling, so all labeled shapes
/// occur.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rel = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rel.push((perm[i], perm[j]));
            }
        }
    }
    Poset::transitive_closure(&rel, n).expect("relations follow a permutation, hence acyclic")
}

/// Rejection-samples a poset containing no copy of `pattern`. Panics after
/// `max_tries` failures, which signals a density mismatch in the caller.
pub fn random_pattern_free_poset<R: Rng>(
    rng: &mut R,
    n: usize,
    density: f64,
    pattern: &Poset,
    max_tries: usize,
) -> Poset {
    for _ in 0..max_tries {
        let p = random_poset(rng, n, density);
        if contains_subposet(&p, pattern)
            .expect("small instances stay within budget")
            .is_none()
        {
            return p;
        }
    }
    panic!("no {}-free poset found in {max_tries} tries", pattern.len())
}
