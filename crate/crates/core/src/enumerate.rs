//! Exhaustive enumeration of all labeled posets on a small ground set,
//! used as the oracle substrate for sweep-style tests.

use crate::bitset::BitSet;
use crate::poset::Poset;
use thiserror::Error;

/// Hard cap: 3^(n(n-1)/2) candidate relation matrices get scanned.
pub const ENUMERATE_MAX_N: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("enumeration of posets on {n} elements exceeds the cap of {max}")]
pub struct CapExceeded {
    pub n: usize,
    pub max: usize,
}

/// Streams every labeled poset on `n` elements exactly once, in a fixed
/// deterministic order. Each unordered element pair independently takes one
/// of the states incomparable / i<j / j<i; candidates failing transitivity
/// are skipped.
pub fn enumerate_posets(n: usize) -> Result<impl Iterator<Item = Poset>, CapExceeded> {
    if n > ENUMERATE_MAX_N {
        return Err(CapExceeded {
            n,
            max: ENUMERATE_MAX_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Ok(PosetEnumerator {
        n,
        pairs,
        code: None,
        done: false,
    })
}

struct PosetEnumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    code: Option<Vec<u8>>,
    done: bool,
}

impl PosetEnumerator {
    fn advance(&mut self) -> bool {
        match &mut self.code {
            None => {
                self.code = Some(vec![0; self.pairs.len()]);
                true
            }
            Some(code) => {
                for digit in code.iter_mut() {
                    if *digit < 2 {
                        *digit += 1;
                        return true;
                    }
                    *digit = 0;
                }
                false
            }
        }
    }

    fn build(&self) -> Option<Poset> {
        let code = self.code.as_ref().unwrap();
        let mut lt = vec![false; self.n * self.n];
        for (&(i, j), &state) in self.pairs.iter().zip(code) {
            match state {
                1 => lt[i * self.n + j] = true,
                2 => lt[j * self.n + i] = true,
                _ => {}
            }
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && lt[a * self.n + b] {
                    for c in 0..self.n {
                        if c != a && c != b && lt[b * self.n + c] && !lt[a * self.n + c] {
                            return None;
                        }
                    }
                }
            }
        }
        let mut above: Vec<BitSet> = (0..self.n).map(|_| BitSet::new(self.n)).collect();
        for i in 0..self.n {
            for j in 0..self.n {
                if lt[i * self.n + j] {
                    above[i].set(j);
                }
            }
        }
        Some(Poset::from_above(above))
    }
}

impl Iterator for PosetEnumerator {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        if self.done {
            return None;
        }
        loop {
            if !self.advance() {
                self.done = true;
                return None;
            }
            if let Some(p) = self.build() {
                return Some(p);
            }
        }
    }
}

/// Maximum antichain size by exhaustive subset enumeration. This is the
/// independent oracle against the matching-based width; it never goes near
/// the matching code. Only for small posets (2^n subsets).
pub fn max_antichain_brute(p: &Poset) -> usize {
    assert!(p.len() <= 20, "exhaustive antichain scan is exponential");
    let n = p.len();
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        if (mask.count_ones() as usize) <= best {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if p.is_antichain_set(&set) {
            best = set.len();
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_poset_counts() {
        // 1, 1, 3, 19, 219 labeled posets on 0..=4 elements
        assert_eq!(enumerate_posets(0).unwrap().count(), 1);
        assert_eq!(enumerate_posets(1).unwrap().count(), 1);
        assert_eq!(enumerate_posets(2).unwrap().count(), 3);
        assert_eq!(enumerate_posets(3).unwrap().count(), 19);
        assert_eq!(enumerate_posets(4).unwrap().count(), 219);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(enumerate_posets(7).is_err());
    }

    #[test]
    fn emitted_posets_are_valid_and_distinct() {
        let all: Vec<Poset> = enumerate_posets(3).unwrap().collect();
        for p in &all {
            // re-closing the strict pairs must reproduce the poset
            let again = Poset::transitive_closure(&p.strict_pairs(), 3).unwrap();
            assert_eq!(&again, p);
        }
        for (a, p) in all.iter().enumerate() {
            for q in &all[a + 1..] {
                assert_ne!(p, q);
            }
        }
    }
}
