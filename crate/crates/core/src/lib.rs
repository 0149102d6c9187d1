//! Posets, First-Fit chain partitioning, walls, and the adversarial
//! constructions that force First-Fit to perform badly.
//!
//! The crate is organized around the wall characterization: the ordered
//! chain partitions First-Fit can output are exactly the walls, so
//! worst-case analysis and adversarial construction both happen on walls.
//!
//! - [`poset`]: the dense-matrix poset with closure, width, height, and
//!   Dilworth machinery.
//! - [`firstfit`]: the simulator, wall predicates, maximum-wall search, and
//!   the two mechanized counting arguments.
//! - [`constructions`]: named posets plus the reservoir and the
//!   projective-plane butterfly instance.
//! - [`classify`]: ladder-like recognition, the series-composition family,
//!   and the dichotomy verdict.
//! - [`bounds`]: closed-form evaluators for the quantitative bounds.
//! - [`io`]: stable JSON formats and DOT export.

pub mod bitset;
pub mod bounds;
pub mod classify;
pub mod constructions;
pub mod enumerate;
pub mod firstfit;
pub mod io;
pub mod matching;
pub mod poset;
pub mod random;
pub mod subposet;

pub use poset::{ChainPartition, DilworthColoring, Poset, PosetError};
pub use subposet::{contains_subposet, contains_subposet_with_budget, BudgetExceeded, Embedding};
