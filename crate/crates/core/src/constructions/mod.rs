//! Generators for the named posets and the two adversarial constructions:
//! the reservoir (exponential lower bound) and the projective-plane
//! butterfly instance (w^{3/2} lower bound).

mod butterfly;
mod plane;
mod reservoir;

pub use butterfly::{butterfly_lower_bound, ButterflyArtifact};
pub use plane::{bipartite_perfect_matching, projective_plane_graph, BipartiteGraph};
pub use reservoir::{reservoir, PosetBlock, ReservoirArtifact, RESERVOIR_MAX_K};

use crate::poset::Poset;
use thiserror::Error;

/// Largest prime accepted by the butterfly construction; q = 7 already
/// yields an 855-element poset.
pub const BUTTERFLY_MAX_Q: u64 = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{0} is not prime (prime powers are not supported)")]
    NotPrime(u64),
    #[error("parameter {param} = {value} exceeds the cap of {max}")]
    CapExceeded {
        param: &'static str,
        value: usize,
        max: usize,
    },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error(transparent)]
    Poset(#[from] crate::poset::PosetError),
}

/// The chain with r elements.
pub fn chain(r: usize) -> Poset {
    Poset::chain(r)
}

/// The antichain with k elements.
pub fn antichain(k: usize) -> Poset {
    Poset::antichain(k)
}

/// The ladder of height n: chains x_1 < ... < x_n (indices 0..n) and
/// y_1 < ... < y_n (indices n..2n) with x_i < y_j exactly when i ≤ j.
pub fn ladder(n: usize) -> Poset {
    let mut rel = Vec::new();
    for i in 0..n.saturating_sub(1) {
        rel.push((i, i + 1));
        rel.push((n + i, n + i + 1));
    }
    for i in 0..n {
        for j in i..n {
            rel.push((i, n + j));
        }
    }
    let labels = (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=n).map(|i| format!("y{i}")))
        .collect();
    Poset::transitive_closure(&rel, 2 * n)
        .expect("ladder relations are acyclic")
        .with_labels(labels)
}

/// The N poset: elements a, b, c, d with a < c, b < c, b < d.
pub fn n_poset() -> Poset {
    Poset::transitive_closure(&[(0, 2), (1, 2), (1, 3)], 4)
        .expect("N relations are acyclic")
        .with_labels(vec!["a".into(), "b".into(), "c".into(), "d".into()])
}

/// The butterfly: a 2-element antichain over a 2-element antichain.
pub fn butterfly() -> Poset {
    stacked_butterfly(2)
}

/// The stacked butterfly of height t: t stacked 2-element antichains.
pub fn stacked_butterfly(t: usize) -> Poset {
    let a2 = Poset::antichain(2);
    let parts: Vec<&Poset> = (0..t).map(|_| &a2).collect();
    Poset::series_compose(&parts)
}

/// The skewed butterfly: chains x1 < x2 < x3 and y1 < y2 with the extra
/// cover relations x1 < y2 and y1 < x3. The smallest width-2 poset outside
/// the subexponential family.
pub fn skewed_butterfly() -> Poset {
    Poset::transitive_closure(&[(0, 1), (1, 2), (3, 4), (0, 4), (3, 2)], 5)
        .expect("skewed butterfly relations are acyclic")
        .with_labels(vec![
            "x1".into(),
            "x2".into(),
            "x3".into(),
            "y1".into(),
            "y2".into(),
        ])
}

/// Largest prime ≤ x, by trial division.
pub fn next_prime_leq(x: u64) -> u64 {
    assert!(x >= 2, "no prime below 2");
    (2..=x).rev().find(|&p| is_prime(p)).unwrap()
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
