//! Independent oracles for tests: bounded proof search and seeded
//! generators.

pub mod gen;
pub mod search;

pub use gen::{gen_formula, gen_proof, GenConfig, Generator};
pub use search::{bounded_derivable, bounded_derivable_with_budget, SearchVerdict};
