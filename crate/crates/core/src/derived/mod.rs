//! Proof synthesizers for the standard lemmas: ex-falso, ⊥-substitution in
//! proofs, equivalence with the negative translation and case distinction.

mod bot_subst;
mod cases;
mod efq;
mod gg;

pub use bot_subst::{subst_bot_proof, subst_bot_proof_traced};
pub use cases::{case_formula, prove_case_distinction};
pub use efq::prove_efq;
pub use gg::prove_gg_equiv;

pub(crate) use cases::case_distinction_with;
pub(crate) use efq::efq_with;

use crate::error::Result;
use crate::formula::Formula;
use crate::kernel::{Assumption, Axiom, Proof, Side};
use crate::syntax::{NameSupply, Term, Type, Var};
use crate::theory::Theory;

/// A proof paired with the formula its synthesizer promised.
#[derive(Clone, Debug)]
pub struct SynthesisResult {
    pub proof: Proof,
    pub target: Formula,
}

impl SynthesisResult {
    /// Whether the proof's conclusion is the promised formula.
    pub fn is_faithful(&self) -> bool {
        self.proof.conclusion() == &self.target
    }
}

// Small combinators over the checked kernel constructors, so the
// synthesizers below read close to the proof terms they build.

/// A fresh assumption together with its one-node proof.
pub(crate) fn hyp(name: &str, f: Formula, supply: &mut NameSupply) -> Result<(Assumption, Proof)> {
    let u = Assumption::fresh(name, f, supply);
    let p = Proof::assume(u.clone())?;
    Ok((u, p))
}

pub(crate) fn app(m: &Proof, n: Proof) -> Result<Proof> {
    Proof::imp_elim(m.clone(), n)
}

pub(crate) fn app2(m: &Proof, n: Proof, k: Proof) -> Result<Proof> {
    Proof::imp_elim(Proof::imp_elim(m.clone(), n)?, k)
}

pub(crate) fn lam(u: &Assumption, m: Proof) -> Result<Proof> {
    Proof::imp_intro(u.clone(), m)
}

pub(crate) fn inst(m: &Proof, t: Term, supply: &mut NameSupply) -> Result<Proof> {
    Proof::all_elim(m.clone(), t, supply)
}

pub(crate) fn fst(m: &Proof) -> Result<Proof> {
    Proof::proj(Side::Left, m.clone())
}

pub(crate) fn snd(m: &Proof) -> Result<Proof> {
    Proof::proj(Side::Right, m.clone())
}

pub(crate) fn truth() -> Result<Proof> {
    Proof::axiom(Axiom::Truth, Theory::NA)
}

/// `λu:F. u`, which also proves `¬F`.
pub(crate) fn falsity_id(supply: &mut NameSupply) -> Result<Proof> {
    let (u, pu) = hyp("u", Formula::falsity(), supply)?;
    lam(&u, pu)
}

pub(crate) fn fresh_bool(supply: &mut NameSupply) -> Var {
    Var::new("b", supply.draw(), Type::Bool)
}

/// A supply whose draws stay clear of every index in `fs`.
pub(crate) fn supply_above<'a>(fs: impl IntoIterator<Item = &'a Formula>) -> NameSupply {
    let mut s = NameSupply::new();
    for f in fs {
        s.reserve(f.max_index());
    }
    s
}
