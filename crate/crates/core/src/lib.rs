//! Proof kernel and proof synthesis for the arithmetics NA, MA, HA and PA in
//! all finite types.

pub mod atrans;
pub mod classes;
pub mod derived;
pub mod error;
pub mod formula;
pub mod kernel;
pub mod oracle;
pub mod sexp;
pub mod syntax;
pub mod theory;

pub use error::{Error, Result};
pub use formula::{Formula, FormulaKind};
pub use kernel::{Assumption, AssumptionId, Axiom, Judgement, Proof, ProofKind, Rule, Side};
pub use syntax::{Const, NameSupply, Term, TermKind, Type, Var};
pub use theory::Theory;
