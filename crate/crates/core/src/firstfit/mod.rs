//! The First-Fit chain-partitioning simulator and the wall machinery.
//!
//! First-Fit processes elements in a presentation order and assigns each to
//! the earliest chain it extends. Its outputs are exactly the walls: ordered
//! chain partitions in which every element of a later chain is blocked by an
//! incomparable witness in each earlier chain. Both directions are
//! implemented here, along with subwalls and the wall-ification of an
//! arbitrary chain partition.

mod analysis;
mod maxwall;

pub use analysis::{
    analyze_butterfly_wall, analyze_series_wall, c_depth, c_height, c_heights_depths,
    minimal_feasible_st, AnalysisError, ButterflyWallAnalysis, WallAnalysis,
};
pub use maxwall::{max_wall, MaxWallResult, DEFAULT_MAX_WALL_BUDGET};

use crate::poset::{ChainPartition, Poset, PosetError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FirstFitError {
    #[error("chain partition is not a wall")]
    NotAWall,
    #[error(transparent)]
    BadPartition(#[from] PosetError),
}

/// A permutation of the element indices giving the order of arrival.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationOrder {
    order: Vec<usize>,
}

impl PresentationOrder {
    pub fn new(order: Vec<usize>, n: usize) -> Result<PresentationOrder, PosetError> {
        if order.len() != n {
            return Err(PosetError::BadPartition(format!(
                "order has {} entries for {} elements",
                order.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &x in &order {
            if x >= n {
                return Err(PosetError::IndexOutOfBounds { index: x, n });
            }
            if seen[x] {
                return Err(PosetError::BadPartition(format!("element {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(PresentationOrder { order })
    }

    pub fn identity(n: usize) -> PresentationOrder {
        PresentationOrder {
            order: (0..n).collect(),
        }
    }

    pub(crate) fn from_vec_unchecked(order: Vec<usize>) -> PresentationOrder {
        PresentationOrder { order }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Output of one First-Fit run: the 1-based color per element and the
/// chains listed in color order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstFitResult {
    pub color: Vec<usize>,
    pub chains: ChainPartition,
}

/// One step of a traced run: which colors rejected the element before one
/// accepted it.
#[derive(Clone, Debug, serde::Serialize)]
pub struct TraceStep {
    pub element: usize,
    pub chosen: usize,
    pub rejected: Vec<usize>,
}

/// Runs First-Fit on `poset` in the given order.
pub fn first_fit(poset: &Poset, order: &PresentationOrder) -> FirstFitResult {
    first_fit_traced(poset, order).0
}

pub fn first_fit_traced(
    poset: &Poset,
    order: &PresentationOrder,
) -> (FirstFitResult, Vec<TraceStep>) {
    assert_eq!(order.len(), poset.len(), "order does not fit the poset");
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut color = vec![0usize; poset.len()];
    let mut trace = Vec::with_capacity(poset.len());
    for &x in &order.order {
        let mut rejected = Vec::new();
        let mut chosen = None;
        for (j, chain) in chains.iter_mut().enumerate() {
            if chain.iter().all(|&y| poset.comparable(x, y)) {
                // insert keeping the chain ascending
                let pos = chain.iter().take_while(|&&y| poset.lt(y, x)).count();
                chain.insert(pos, x);
                chosen = Some(j);
                break;
            }
            rejected.push(j + 1);
        }
        let j = chosen.unwrap_or_else(|| {
            chains.push(vec![x]);
            chains.len() - 1
        });
        color[x] = j + 1;
        trace.push(TraceStep {
            element: x,
            chosen: j + 1,
            rejected,
        });
    }
    let chains = ChainPartition::from_sorted(chains);
    debug_assert!(chains.validate(poset).is_ok());
    debug_assert!(is_wall(poset, &chains));
    (FirstFitResult { color, chains }, trace)
}

/// The blocking condition: for each element x of a chain and each earlier
/// chain, some element of the earlier chain is incomparable to x.
pub fn is_wall(poset: &Poset, cp: &ChainPartition) -> bool {
    for (j, chain) in cp.chains.iter().enumerate() {
        for &x in chain {
            for earlier in &cp.chains[..j] {
                if !earlier.iter().any(|&y| poset.incomparable(x, y)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Presentation order that makes First-Fit output `wall` chain-for-chain:
/// the chains in wall order, each chain ascending.
pub fn wall_to_order(poset: &Poset, wall: &ChainPartition) -> Result<PresentationOrder, FirstFitError> {
    wall.validate(poset)?;
    if !is_wall(poset, wall) {
        return Err(FirstFitError::NotAWall);
    }
    let order: Vec<usize> = wall.chains.iter().flatten().copied().collect();
    Ok(PresentationOrder { order })
}

/// Restriction of a wall to the chains in `keep` (ascending positions),
/// returning the induced subposet and the reindexed wall over it.
pub fn subwall(
    poset: &Poset,
    wall: &ChainPartition,
    keep: &[usize],
) -> (Poset, ChainPartition) {
    let mut keep: Vec<usize> = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let union: Vec<usize> = keep
        .iter()
        .flat_map(|&c| wall.chains[c].iter().copied())
        .collect();
    let (sub, old) = poset.induced(&union);
    let new_of_old: std::collections::HashMap<usize, usize> =
        old.iter().enumerate().map(|(new, &o)| (o, new)).collect();
    let chains = keep
        .iter()
        .map(|&c| wall.chains[c].iter().map(|x| new_of_old[x]).collect())
        .collect();
    (sub, ChainPartition::from_sorted(chains))
}

/// Turns an arbitrary chain partition into a wall by repeatedly moving
/// elements to the earliest earlier chain that stays a chain, until no move
/// applies; emptied chains are dropped. The fixpoint satisfies the wall
/// condition by definition.
pub fn to_wall(poset: &Poset, cp: &ChainPartition) -> Result<ChainPartition, FirstFitError> {
    cp.validate(poset)?;
    let mut chains = cp.chains.clone();
    loop {
        let mut moved = false;
        let mut j = 0;
        while j < chains.len() {
            let mut x_pos = 0;
            while x_pos < chains[j].len() {
                let x = chains[j][x_pos];
                let target = (0..j).find(|&i| chains[i].iter().all(|&y| poset.comparable(x, y)));
                if let Some(i) = target {
                    chains[j].remove(x_pos);
                    let pos = chains[i].iter().take_while(|&&y| poset.lt(y, x)).count();
                    chains[i].insert(pos, x);
                    moved = true;
                } else {
                    x_pos += 1;
                }
            }
            j += 1;
        }
        chains.retain(|c| !c.is_empty());
        if !moved {
            break;
        }
    }
    let wall = ChainPartition::from_sorted(chains);
    debug_assert!(is_wall(poset, &wall));
    Ok(wall)
}

/// A wall with exactly width-many chains, obtained by wall-ifying a
/// Dilworth partition.
pub fn dilworth_wall(poset: &Poset) -> ChainPartition {
    to_wall(poset, &poset.dilworth_partition()).expect("Dilworth partition is always valid")
}
