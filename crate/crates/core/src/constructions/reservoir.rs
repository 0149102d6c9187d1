//! The reservoir: a recursively built width-k poset together with a
//! presentation order forcing First-Fit to use 2^k − 1 chains.
//!
//! The width-k reservoir stacks, bottom to top, the subposets spanned by
//! the wall-chain prefixes of the previous reservoir (largest prefix
//! lowest), with a full copy of the previous reservoir on top, and hangs a
//! chain X beside the stack: x_i lies above exactly the prefix copies
//! S_i, ..., S_m and below nothing. Presenting prefix copies and X elements
//! alternately and then replaying the wall on the top copy makes First-Fit
//! spend one fresh color on each x_i and all old colors again on top.

use super::ConstructionError;
use crate::bitset::BitSet;
use crate::firstfit::{first_fit, PresentationOrder};
use crate::poset::{ChainPartition, Poset, MAX_ELEMENTS};
use serde::Serialize;

pub const RESERVOIR_MAX_K: usize = 6;

/// Index range of one structural block, for reports and serialization.
#[derive(Clone, Debug, Serialize)]
pub struct PosetBlock {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

#[derive(Clone, Debug)]
pub struct ReservoirArtifact {
    pub k: usize,
    pub poset: Poset,
    /// The First-Fit output on `order`; has 2^k − 1 chains.
    pub wall: ChainPartition,
    pub order: PresentationOrder,
    /// Structural blocks, bottom block first, then the top copy, then X.
    pub blocks: Vec<PosetBlock>,
    /// Element indices of x_1, ..., x_{m+1} (x_1 is the top of X).
    pub x_elements: Vec<usize>,
}

/// Builds the width-k reservoir with its adversarial presentation order.
pub fn reservoir(k: usize) -> Result<ReservoirArtifact, ConstructionError> {
    if k < 1 || k > RESERVOIR_MAX_K {
        return Err(ConstructionError::CapExceeded {
            param: "k",
            value: k,
            max: RESERVOIR_MAX_K,
        });
    }
    let mut art = base_artifact();
    for _ in 2..=k {
        art = grow(&art)?;
    }
    Ok(art)
}

fn base_artifact() -> ReservoirArtifact {
    let poset = Poset::chain(1);
    let order = PresentationOrder::identity(1);
    let wall = first_fit(&poset, &order).chains;
    ReservoirArtifact {
        k: 1,
        poset,
        wall,
        order,
        blocks: vec![PosetBlock {
            name: "R1".into(),
            start: 0,
            len: 1,
        }],
        x_elements: vec![],
    }
}

fn grow(prev: &ReservoirArtifact) -> Result<ReservoirArtifact, ConstructionError> {
    let m = prev.wall.len();
    let chain_sizes: Vec<usize> = prev.wall.chains.iter().map(Vec::len).collect();

    // |S_i| = size of the union of the first i wall chains
    let prefix_sizes: Vec<usize> = (0..=m)
        .map(|i| chain_sizes[..i].iter().sum::<usize>())
        .collect();
    let n: usize =
        prefix_sizes[1..].iter().sum::<usize>() + prev.poset.len() + (m + 1);
    if n > MAX_ELEMENTS {
        return Err(ConstructionError::CapExceeded {
            param: "elements",
            value: n,
            max: MAX_ELEMENTS,
        });
    }

    // Layout: copies of S_m, S_{m-1}, ..., S_1, then the top copy of the
    // previous reservoir, then X with ascending index = ascending order.
    let mut blocks = Vec::new();
    let mut offset = 0;
    // copy_maps[i] maps previous-poset indices to global indices of the
    // copy of S_{i+1} (only prefix elements are meaningful).
    let mut copies: Vec<(usize, Vec<usize>)> = Vec::new(); // (prefix i, map old -> global)
    for i in (1..=m).rev() {
        let members: Vec<usize> = prev.wall.chains[..i]
            .iter()
            .flatten()
            .copied()
            .collect();
        let mut sorted = members.clone();
        sorted.sort_unstable();
        let mut map = vec![usize::MAX; prev.poset.len()];
        for (local, &old) in sorted.iter().enumerate() {
            map[old] = offset + local;
        }
        copies.push((i, map));
        blocks.push(PosetBlock {
            name: format!("S{i}"),
            start: offset,
            len: sorted.len(),
        });
        offset += sorted.len();
    }
    let top_start = offset;
    let top_map: Vec<usize> = (0..prev.poset.len()).map(|old| top_start + old).collect();
    blocks.push(PosetBlock {
        name: format!("R{}", prev.k),
        start: top_start,
        len: prev.poset.len(),
    });
    offset += prev.poset.len();
    let x_start = offset;
    blocks.push(PosetBlock {
        name: "X".into(),
        start: x_start,
        len: m + 1,
    });
    // x_i sits at x_start + (m + 1 - i): x_{m+1} lowest, x_1 highest
    let x_of = |i: usize| x_start + (m + 1 - i);

    let mut above: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();

    // in-copy relations, inherited from the previous poset
    let mut all_maps: Vec<&Vec<usize>> = copies.iter().map(|(_, map)| map).collect();
    all_maps.push(&top_map);
    for map in &all_maps {
        for old_a in 0..prev.poset.len() {
            if map[old_a] == usize::MAX {
                continue;
            }
            for old_b in prev.poset.above_bits(old_a).iter() {
                if map[old_b] != usize::MAX {
                    above[map[old_a]].set(map[old_b]);
                }
            }
        }
    }

    // series relations between stacked blocks (everything before x_start)
    for b in 0..blocks.len() - 2 {
        let lo = &blocks[b];
        for later in &blocks[b + 1..blocks.len() - 1] {
            for u in lo.start..lo.start + lo.len {
                for v in later.start..later.start + later.len {
                    above[u].set(v);
                }
            }
        }
    }

    // the X chain itself
    for i in 1..=m + 1 {
        for j in 1..i {
            above[x_of(i)].set(x_of(j));
        }
    }

    // x_i is above exactly the copies of S_i, ..., S_m
    for &(i, ref map) in &copies {
        // this block is the copy of S_i; it lies below x_1, ..., x_i
        for xi in 1..=i {
            for &g in map.iter().filter(|&&g| g != usize::MAX) {
                above[g].set(x_of(xi));
            }
        }
    }

    let poset = Poset::from_above(above);

    // Presentation order: Ŝ_m, x_{m+1}, Ŝ_{m-1}, x_m, ..., Ŝ_0, x_1, then
    // the top copy replayed along the previous wall.
    let mut order = Vec::with_capacity(n);
    for j in (1..=m + 1).rev() {
        if j >= 2 {
            let (_, map) = copies
                .iter()
                .find(|(i, _)| *i == j - 1)
                .expect("copy of every nonempty prefix exists");
            for chain in &prev.wall.chains[..j - 1] {
                for &x in chain {
                    order.push(map[x]);
                }
            }
        }
        order.push(x_of(j));
    }
    for chain in &prev.wall.chains {
        for &x in chain {
            order.push(top_map[x]);
        }
    }
    let order = PresentationOrder::new(order, n)?;

    let wall = first_fit(&poset, &order).chains;
    assert_eq!(
        wall.len(),
        2 * m + 1,
        "First-Fit must spend exactly 2^k - 1 colors on the reservoir"
    );

    Ok(ReservoirArtifact {
        k: prev.k + 1,
        poset,
        wall,
        order,
        blocks,
        x_elements: (1..=m + 1).map(x_of).collect(),
    })
}
