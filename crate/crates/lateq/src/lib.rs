//! Finite lattices, ordinal complementarity conditions, and the order
//! structure of Nash equilibria in lattice games.
//!
//! The crate decides a taxonomy of complementarity properties for
//! chain-valued functions on finite lattices (quasisupermodularity and its
//! weakenings, one-sided extremality, crossing conditions for two-variable
//! maps), establishes argmin/argmax structure, and computes Nash equilibria
//! of finite normal-form games on product lattices two ways: by brute-force
//! enumeration and by Tarski iteration over an increasing selection of the
//! best-response correspondence. Hypothesis reports tie every game-level
//! conclusion (existence, largest equilibrium, complete-lattice equilibrium
//! set) back to the per-player conditions that imply it.
//!
//! Start with the `examples/` directory: each runnable example exercises one
//! capability end to end. The `lateq` binary exposes the same operations on
//! files in the interchange formats accepted by [`interchange`].

pub mod builtins;
pub mod catalog;
pub mod cli;
pub mod crossing;
pub mod game;
pub mod interchange;
pub mod lattice;
pub mod optima;
pub mod properties;
pub mod search;

use serde::Serialize;
use thiserror::Error;

/// Default cap on exhaustive enumeration, in candidate evaluations.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Error, PartialEq, Eq, Serialize)]
#[error("enumeration space of size {space} exceeds budget {budget}")]
pub struct BudgetExceeded {
    pub space: u128,
    pub budget: u64,
}

pub use crossing::{CrossingProperty, CrossingVerdict, TwoVarFunction};
pub use game::{NormalFormGame, Polarity, SelectionPolicy, TheoremId};
pub use lattice::{
    chain_predicates, induced_structure, is_quasisublattice, product, validate_lattice,
    FiniteChain, FiniteLattice, FinitePoset, Subset, Verdict,
};
pub use optima::{
    argopt, increasing_selection, is_weakly_ascending, tarski_fixed_point, verify_extremum_structure,
    Correspondence, FixpointSide, MonotoneMap, OptMode, Selection,
};
pub use properties::{
    check_equivalence_family, verify_implication, LatticeFunction, PropertyId, ALL_PROPERTIES,
};
