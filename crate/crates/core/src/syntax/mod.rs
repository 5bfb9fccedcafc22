//! Types, object variables and typed terms.

pub(crate) mod canon;
mod supply;
mod term;
mod types;

pub use supply::NameSupply;
pub use term::{alpha_eq, Const, Term, TermKind, Var};
pub use types::Type;
