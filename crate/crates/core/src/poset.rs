//! Finite strict partial orders on indexed elements, with the classical
//! structure algorithms: transitive closure, width and height, Dilworth
//! partitions, series composition, disjoint union, induced subposets, and
//! cover relations.
//!
//! The order is kept as a dense boolean strict-order matrix, transitively
//! closed at all times, so comparability queries are O(1).

use crate::bitset::BitSet;
use crate::matching;
use thiserror::Error;

/// Practical cap on element count; keeps the dense matrix and the matching
/// pass tractable. Large enough for the width-5 reservoir (~1.6k elements).
pub const MAX_ELEMENTS: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation ({u},{v}) closes a cycle; input is not a partial order")]
    Cycle { u: usize, v: usize },
    #[error("element index {index} out of range for n={n}")]
    IndexOutOfBounds { index: usize, n: usize },
    #[error("{n} elements exceeds the supported maximum of {max}")]
    TooManyElements { n: usize, max: usize },
    #[error("invalid chain partition: {0}")]
    BadPartition(String),
}

/// A finite poset on elements `0..n`, stored as a transitively closed
/// strict-order matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    above: Vec<BitSet>, // above[i] = { j : i < j }
    below: Vec<BitSet>, // below[i] = { j : j < i }
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, lt={:?})", self.n, self.strict_pairs())
    }
}

impl Poset {
    /// The poset on `n` elements with no relations.
    pub fn antichain(n: usize) -> Poset {
        Poset {
            n,
            above: (0..n).map(|_| BitSet::new(n)).collect(),
            below: (0..n).map(|_| BitSet::new(n)).collect(),
            labels: None,
        }
    }

    /// The `n`-element chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Poset {
        let mut above = Vec::with_capacity(n);
        let mut below = Vec::with_capacity(n);
        for i in 0..n {
            let mut a = BitSet::new(n);
            for j in i + 1..n {
                a.set(j);
            }
            let mut b = BitSet::new(n);
            for j in 0..i {
                b.set(j);
            }
            above.push(a);
            below.push(b);
        }
        Poset {
            n,
            above,
            below,
            labels: None,
        }
    }

    /// Builds the poset given by the transitive closure of `relations`,
    /// where a pair `(i, j)` declares `i < j`.
    ///
    /// Fails with `Cycle` if the closure would relate some element to
    /// itself, i.e. the input digraph is not acyclic.
    pub fn transitive_closure(relations: &[(usize, usize)], n: usize) -> Result<Poset, PosetError> {
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let mut above: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for &(u, v) in relations {
            for &idx in &[u, v] {
                if idx >= n {
                    return Err(PosetError::IndexOutOfBounds { index: idx, n });
                }
            }
            above[u].set(v);
        }
        // Warshall over bitset rows.
        for k in 0..n {
            let row_k = above[k].clone();
            for i in 0..n {
                if i != k && above[i].get(k) {
                    above[i].union_with(&row_k);
                }
            }
        }
        for i in 0..n {
            if above[i].get(i) {
                // Report an input pair lying on a cycle.
                let &(u, v) = relations
                    .iter()
                    .find(|&&(u, v)| above[v].get(u) || u == v)
                    .expect("cycle implies some input pair is reversed by the closure");
                return Err(PosetError::Cycle { u, v });
            }
        }
        Ok(Self::from_above(above))
    }

    /// Assembles a poset from closed `above` rows; computes `below` rows.
    /// Caller must guarantee irreflexivity, antisymmetry and closure.
    pub(crate) fn from_above(above: Vec<BitSet>) -> Poset {
        let n = above.len();
        let mut below: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for i in 0..n {
            for j in above[i].iter() {
                below[j].set(i);
            }
        }
        if cfg!(debug_assertions) {
            for i in 0..n {
                debug_assert!(!above[i].get(i), "irreflexivity violated at {i}");
                for j in above[i].iter() {
                    debug_assert!(!above[j].get(i), "antisymmetry violated at ({i},{j})");
                }
            }
            // the cubic closure check only for small instances
            if n <= 128 {
                for i in 0..n {
                    for j in above[i].iter() {
                        for k in above[j].iter() {
                            debug_assert!(above[i].get(k), "closure violated at ({i},{j},{k})");
                        }
                    }
                }
            }
        }
        Poset {
            n,
            above,
            below,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Poset {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Strict order test: `i < j`.
    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.above[i].get(j)
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) || self.lt(j, i)
    }

    #[inline]
    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        i != j && !self.comparable(i, j)
    }

    /// A(x) = { y : y > x }.
    pub fn above_set(&self, x: usize) -> Vec<usize> {
        self.above[x].to_vec()
    }

    /// B(x) = { y : y < x }.
    pub fn below_set(&self, x: usize) -> Vec<usize> {
        self.below[x].to_vec()
    }

    /// A[x] = A(x) ∪ {x}.
    pub fn above_closed(&self, x: usize) -> Vec<usize> {
        let mut v = self.above_set(x);
        v.push(x);
        v.sort_unstable();
        v
    }

    /// B[x] = B(x) ∪ {x}.
    pub fn below_closed(&self, x: usize) -> Vec<usize> {
        let mut v = self.below_set(x);
        v.push(x);
        v.sort_unstable();
        v
    }

    /// A(S) = ∪_{x∈S} A(x).
    pub fn above_set_of(&self, s: &[usize]) -> Vec<usize> {
        let mut acc = BitSet::new(self.n);
        for &x in s {
            acc.union_with(&self.above[x]);
        }
        acc.to_vec()
    }

    /// B(S) = ∪_{x∈S} B(x).
    pub fn below_set_of(&self, s: &[usize]) -> Vec<usize> {
        let mut acc = BitSet::new(self.n);
        for &x in s {
            acc.union_with(&self.below[x]);
        }
        acc.to_vec()
    }

    pub(crate) fn above_bits(&self, x: usize) -> &BitSet {
        &self.above[x]
    }

    pub(crate) fn below_bits(&self, x: usize) -> &BitSet {
        &self.below[x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All strict pairs (i, j) with i < j in the order, sorted by index.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.above[i].iter() {
                out.push((i, j));
            }
        }
        out
    }

    pub fn is_chain_set(&self, set: &[usize]) -> bool {
        for (a, &x) in set.iter().enumerate() {
            for &y in &set[a + 1..] {
                if !self.comparable(x, y) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_antichain_set(&self, set: &[usize]) -> bool {
        for (a, &x) in set.iter().enumerate() {
            for &y in &set[a + 1..] {
                if self.comparable(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// Size of a maximum chain; 0 for the empty poset.
    pub fn height(&self) -> usize {
        let mut h = vec![0usize; self.n];
        let mut order: Vec<usize> = (0..self.n).collect();
        // below-counts increase along the order, so sorting by them gives a
        // linear extension
        order.sort_by_key(|&i| self.below[i].count());
        let mut best = 0;
        for &i in &order {
            let mut hi = 1;
            for j in self.below[i].iter() {
                hi = hi.max(h[j] + 1);
            }
            h[i] = hi;
            best = best.max(hi);
        }
        best
    }

    /// Per-element height: size of a maximum chain with top x.
    pub fn element_heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.n];
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| self.below[i].count());
        for &i in &order {
            let mut hi = 1;
            for j in self.below[i].iter() {
                hi = hi.max(h[j] + 1);
            }
            h[i] = hi;
        }
        h
    }

    /// Per-element depth: size of a maximum chain with bottom x.
    pub fn element_depths(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| self.above[i].count());
        for &i in &order {
            let mut di = 1;
            for j in self.above[i].iter() {
                di = di.max(d[j] + 1);
            }
            d[i] = di;
        }
        d
    }

    /// Size of a maximum antichain, via Dilworth's equality with a minimum
    /// chain cover computed by bipartite matching on the comparability
    /// split graph.
    pub fn width(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        self.n - matching::max_matching_size(self)
    }

    /// A minimum chain partition. The number of chains equals the width.
    /// Chains are sorted ascending in the poset order.
    pub fn dilworth_partition(&self) -> ChainPartition {
        let successor = matching::chain_successors(self);
        let mut is_start = vec![true; self.n];
        for &s in successor.iter().flatten() {
            is_start[s] = false;
        }
        let mut chains = Vec::new();
        for i in 0..self.n {
            if is_start[i] {
                let mut chain = vec![i];
                let mut cur = i;
                while let Some(next) = successor[cur] {
                    chain.push(next);
                    cur = next;
                }
                chains.push(chain);
            }
        }
        let cp = ChainPartition { chains };
        debug_assert!(cp.validate(self).is_ok());
        cp
    }

    /// Dilworth coloring φ: elements → [1..w], each color class a chain.
    pub fn dilworth_coloring(&self) -> DilworthColoring {
        let cp = self.dilworth_partition();
        let mut color = vec![0usize; self.n];
        for (c, chain) in cp.chains.iter().enumerate() {
            for &x in chain {
                color[x] = c + 1;
            }
        }
        DilworthColoring {
            color,
            w: cp.chains.len(),
        }
    }

    /// Series composition: disjoint copies of `parts` stacked so that every
    /// element of an earlier part lies below every element of a later part.
    pub fn series_compose(parts: &[&Poset]) -> Poset {
        let n: usize = parts.iter().map(|p| p.n).sum();
        let mut above: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        let mut offset = 0;
        let mut offsets = Vec::with_capacity(parts.len());
        for p in parts {
            offsets.push(offset);
            for i in 0..p.n {
                for j in p.above[i].iter() {
                    above[offset + i].set(offset + j);
                }
                // everything in later blocks is above
                for j in offset + p.n..n {
                    above[offset + i].set(j);
                }
            }
            offset += p.n;
        }
        Poset::from_above(above)
    }

    /// Index ranges of the blocks a series composition of `parts` occupies.
    pub fn series_block_ranges(parts: &[&Poset]) -> Vec<std::ops::Range<usize>> {
        let mut offset = 0;
        parts
            .iter()
            .map(|p| {
                let r = offset..offset + p.n;
                offset += p.n;
                r
            })
            .collect()
    }

    /// Disjoint union P + Q: no relations between the parts.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let n = self.n + other.n;
        let mut above: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for i in 0..self.n {
            for j in self.above[i].iter() {
                above[i].set(j);
            }
        }
        for i in 0..other.n {
            for j in other.above[i].iter() {
                above[self.n + i].set(self.n + j);
            }
        }
        Poset::from_above(above)
    }

    /// Induced subposet on `subset`, together with the map from new indices
    /// back to the original ones (ascending).
    pub fn induced(&self, subset: &[usize]) -> (Poset, Vec<usize>) {
        let mut old: Vec<usize> = subset.to_vec();
        old.sort_unstable();
        old.dedup();
        let m = old.len();
        let mut above: Vec<BitSet> = (0..m).map(|_| BitSet::new(m)).collect();
        for (a, &x) in old.iter().enumerate() {
            for (b, &y) in old.iter().enumerate() {
                if self.lt(x, y) {
                    above[a].set(b);
                }
            }
        }
        let mut p = Poset::from_above(above);
        if let Some(ls) = &self.labels {
            p = p.with_labels(old.iter().map(|&i| ls[i].clone()).collect());
        }
        (p, old)
    }

    /// Cover relations (the transitive reduction): pairs (i, j) with i < j
    /// and no z strictly between.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for i in 0..self.n {
            for j in self.above[i].iter() {
                if !self.above[i].intersects(&self.below[j]) {
                    covers.push((i, j));
                }
            }
        }
        covers
    }

    /// Elements with empty below set.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.below[i].is_empty()).collect()
    }

    /// Elements with empty above set.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.above[i].is_empty()).collect()
    }

    /// The maximum element, if the poset has one.
    pub fn maximum_element(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.below[i].count() == self.n - 1)
    }

    /// Searches for a butterfly occurrence: incomparable a, b whose common
    /// above set contains an incomparable pair c, d. Returns [a, b, c, d]
    /// if found; `None` means the poset is butterfly-free (the scan over
    /// incomparable pairs is exhaustive).
    pub fn butterfly_witness(&self) -> Option<[usize; 4]> {
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.comparable(a, b) {
                    continue;
                }
                let common = self.above[a].intersection(&self.above[b]);
                let ups = common.to_vec();
                for (i, &c) in ups.iter().enumerate() {
                    for &d in &ups[i + 1..] {
                        if self.incomparable(c, d) {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }
}

/// An ordered partition of a poset's elements into nonempty chains.
/// Each chain is stored sorted ascending in the poset order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainPartition {
    pub chains: Vec<Vec<usize>>,
}

impl ChainPartition {
    pub fn new(poset: &Poset, chains: Vec<Vec<usize>>) -> Result<ChainPartition, PosetError> {
        let cp = ChainPartition { chains };
        cp.validate(poset)?;
        Ok(cp)
    }

    pub(crate) fn from_sorted(chains: Vec<Vec<usize>>) -> ChainPartition {
        ChainPartition { chains }
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Index of the chain containing each element.
    pub fn chain_index(&self, n: usize) -> Vec<usize> {
        let mut idx = vec![usize::MAX; n];
        for (c, chain) in self.chains.iter().enumerate() {
            for &x in chain {
                idx[x] = c;
            }
        }
        idx
    }

    /// Checks the chain-partition invariants against `poset`: chains
    /// nonempty, disjoint, covering, pairwise comparable, sorted ascending.
    pub fn validate(&self, poset: &Poset) -> Result<(), PosetError> {
        let mut seen = vec![false; poset.len()];
        for chain in &self.chains {
            if chain.is_empty() {
                return Err(PosetError::BadPartition("empty chain".into()));
            }
            for &x in chain {
                if x >= poset.len() {
                    return Err(PosetError::IndexOutOfBounds {
                        index: x,
                        n: poset.len(),
                    });
                }
                if seen[x] {
                    return Err(PosetError::BadPartition(format!("element {x} repeated")));
                }
                seen[x] = true;
            }
            for w in chain.windows(2) {
                if !poset.lt(w[0], w[1]) {
                    return Err(PosetError::BadPartition(format!(
                        "{} and {} not ascending in a chain",
                        w[0], w[1]
                    )));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(PosetError::BadPartition(format!(
                "element {missing} not covered"
            )));
        }
        Ok(())
    }
}

/// A function φ: elements → [1..w] whose color classes form a Dilworth
/// partition.
#[derive(Clone, Debug)]
pub struct DilworthColoring {
    pub color: Vec<usize>,
    pub w: usize,
}
