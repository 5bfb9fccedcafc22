use std::collections::BTreeMap;

use super::efq_with;
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::kernel::{Assumption, AssumptionId, Axiom, Proof, ProofKind};
use crate::syntax::{NameSupply, Term, Var};
use crate::theory::Theory;

/// From an MA proof `M : A` with open assumptions `u_i : A_i`, a proof of
/// `A^S` with open assumptions `ũ_i : A_i^S` under new assumption variables.
pub fn subst_bot_proof(m: &Proof, s: &Formula, supply: &mut NameSupply) -> Result<Proof> {
    Ok(subst_bot_proof_traced(m, s, supply)?.0)
}

/// Like [`subst_bot_proof`], also returning which new assumption replaced
/// each open assumption of `m`.
pub fn subst_bot_proof_traced(
    m: &Proof,
    s: &Formula,
    supply: &mut NameSupply,
) -> Result<(Proof, BTreeMap<AssumptionId, Assumption>)> {
    if !m.theory().le(Theory::MA) {
        return Err(Error::Language(format!(
            "⊥-substitution applies to MA proofs; this one needs {}",
            m.theory()
        )));
    }
    let s_lang = s.min_theory().ok_or_else(|| {
        Error::Language(format!("{s} mixes ⊥ with ∨/∃"))
    })?;
    supply.reserve(m.max_index().max(s.max_index()));

    // Rename the free variables of S apart from everything in the proof.
    let originals: Vec<Var> = s.free_vars().into_iter().collect();
    let mut s_fresh = s.clone();
    let mut renamed = Vec::new();
    for y in &originals {
        let z = supply.fresh_var(y);
        s_fresh = s_fresh.subst_var(y, &Term::var(z.clone()), supply)?;
        renamed.push((y.clone(), z));
    }

    let mut walk = Walk {
        s: &s_fresh,
        s_lang,
        scope: Vec::new(),
        free: BTreeMap::new(),
        supply,
    };
    let mut out = walk.proof(m)?;
    let free = std::mem::take(&mut walk.free);

    for (y, z) in &renamed {
        out = out.subst_var(z, &Term::var(y.clone()), supply)?;
    }
    let mut trace = BTreeMap::new();
    for (id, u) in free {
        let f = u.formula().clone();
        let mut back = f;
        for (y, z) in &renamed {
            back = back.subst_var(z, &Term::var(y.clone()), supply)?;
        }
        trace.insert(id, Assumption::new(u.name(), u.index(), back));
    }
    Ok((out, trace))
}

struct Walk<'a> {
    s: &'a Formula,
    s_lang: Theory,
    /// Assumptions bound by enclosing `λu`, innermost last.
    scope: Vec<(AssumptionId, Assumption)>,
    /// Replacements for the open assumptions of the input proof.
    free: BTreeMap<AssumptionId, Assumption>,
    supply: &'a mut NameSupply,
}

impl Walk<'_> {
    fn renamed(&mut self, u: &Assumption) -> Result<Assumption> {
        let f = u.formula().subst_bot(self.s, self.supply)?;
        Ok(Assumption::fresh(u.name(), f, self.supply))
    }

    fn proof(&mut self, m: &Proof) -> Result<Proof> {
        match m.kind() {
            ProofKind::Assume(u) => {
                if let Some((_, v)) = self.scope.iter().rev().find(|(id, _)| id == u.id()) {
                    return Proof::assume(v.clone());
                }
                if let Some(v) = self.free.get(u.id()) {
                    return Proof::assume(v.clone());
                }
                let v = self.renamed(u)?;
                self.free.insert(u.id().clone(), v.clone());
                Proof::assume(v)
            }
            ProofKind::Axiom(Axiom::BotPlus) => efq_with(self.s, self.s_lang, self.supply),
            ProofKind::Axiom(ax) => {
                let ax = ax.subst_bot(self.s, self.supply)?;
                let th = ax.min_theory()?;
                Proof::axiom(ax, th)
            }
            ProofKind::AndIntro(a, b) => {
                let a = self.proof(a)?;
                Proof::and_intro(a, self.proof(b)?)
            }
            ProofKind::Proj(side, a) => Proof::proj(*side, self.proof(a)?),
            ProofKind::ImpElim(a, b) => {
                let a = self.proof(a)?;
                Proof::imp_elim(a, self.proof(b)?)
            }
            ProofKind::ImpIntro(u, body) => {
                let v = self.renamed(u)?;
                self.scope.push((u.id().clone(), v.clone()));
                let body = self.proof(body);
                self.scope.pop();
                Proof::imp_intro(v, body?)
            }
            ProofKind::AllElim(a, t) => {
                let a = self.proof(a)?;
                Proof::all_elim(a, t.clone(), self.supply)
            }
            ProofKind::AllIntro(x, a) => Proof::all_intro(x.clone(), self.proof(a)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Type;

    fn atom(v: &Var) -> Formula {
        Formula::atom(Term::var(v.clone())).unwrap()
    }

    #[test]
    fn botplus_becomes_efq() {
        let m = Proof::axiom(Axiom::BotPlus, Theory::MA).unwrap();
        let s = Formula::truth();
        let out = subst_bot_proof(&m, &s, &mut NameSupply::new()).unwrap();
        assert_eq!(out.conclusion(), &Formula::imp(Formula::falsity(), s));
        assert_eq!(out.theory(), Theory::NA);
    }

    #[test]
    fn assumption_is_renamed() {
        let u = Assumption::new("u", 0, Formula::bot());
        let m = Proof::assume(u.clone()).unwrap();
        let p = Formula::atom(Term::var(Var::new("p", 3, Type::Bool))).unwrap();
        let (out, trace) = subst_bot_proof_traced(&m, &p, &mut NameSupply::new()).unwrap();
        assert_eq!(out.conclusion(), &p);
        let v = &trace[u.id()];
        assert_ne!(v.id(), u.id());
        assert_eq!(v.formula(), &p);
        assert_eq!(out.free_assumptions().get(v.id()), Some(&p));
    }

    #[test]
    fn eigenvariable_free_in_s() {
        // λx. λu:⊥. u  proves ∀x(⊥ → ⊥); substitute S = atom x.
        let x = Var::new("x", 0, Type::Bool);
        let u = Assumption::new("u", 1, Formula::bot());
        let m = Proof::all_intro(
            x.clone(),
            Proof::imp_intro(u.clone(), Proof::assume(u).unwrap()).unwrap(),
        )
        .unwrap();
        let s = atom(&x);
        let mut supply = NameSupply::new();
        let out = subst_bot_proof(&m, &s, &mut supply).unwrap();
        let want = m.conclusion().subst_bot(&s, &mut supply).unwrap();
        assert_eq!(out.conclusion(), &want);
        assert!(out.is_closed());
        assert!(out.conclusion().has_free(&x));
    }

    #[test]
    fn rejects_ha_proofs() {
        let p = Formula::truth();
        let m = Proof::axiom(Axiom::OrIntroL(p.clone(), p.clone()), Theory::HA).unwrap();
        assert!(subst_bot_proof(&m, &p, &mut NameSupply::new()).is_err());
    }
}
