//! Construction-checked natural-deduction proof terms.
//!
//! A [`Proof`] can only be produced by the checked constructors in this
//! module, so every value carries a valid conclusion, its open assumptions
//! and the least theory it lives in.

mod axiom;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use axiom::Axiom;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::syntax::{NameSupply, Term, Var};
use crate::theory::Theory;

/// Identity of an assumption variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AssumptionId {
    pub name: Arc<str>,
    pub index: u64,
}

impl fmt::Debug for AssumptionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.name, self.index)
    }
}

/// An assumption variable `u^A`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Assumption {
    id: AssumptionId,
    formula: Formula,
}

impl Assumption {
    pub fn new(name: &str, index: u64, formula: Formula) -> Assumption {
        Assumption {
            id: AssumptionId {
                name: name.into(),
                index,
            },
            formula,
        }
    }

    /// A new assumption variable whose index comes from `supply`.
    pub fn fresh(name: &str, formula: Formula, supply: &mut NameSupply) -> Assumption {
        Assumption::new(name, supply.draw(), formula)
    }

    pub fn id(&self) -> &AssumptionId {
        &self.id
    }

    pub fn name(&self) -> &str {
        &self.id.name
    }

    pub fn index(&self) -> u64 {
        self.id.index
    }

    pub fn formula(&self) -> &Formula {
        &self.formula
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone)]
pub enum ProofKind {
    Assume(Assumption),
    Axiom(Axiom),
    AndIntro(Proof, Proof),
    Proj(Side, Proof),
    ImpElim(Proof, Proof),
    ImpIntro(Assumption, Proof),
    AllElim(Proof, Term),
    AllIntro(Var, Proof),
}

/// Inference rules taking proofs as premises, for [`Proof::build`].
#[derive(Clone, Debug)]
pub enum Rule {
    AndIntro,
    Proj(Side),
    ImpElim,
    ImpIntro(Assumption),
    AllElim(Term),
    AllIntro(Var),
}

struct ProofNode {
    kind: ProofKind,
    conclusion: Formula,
    free: BTreeMap<AssumptionId, Formula>,
    theory: Theory,
}

#[derive(Clone)]
pub struct Proof(Arc<ProofNode>);

/// What a proof establishes: `theory, assumptions ⊢ conclusion`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Judgement {
    pub theory: Theory,
    pub assumptions: BTreeMap<AssumptionId, Formula>,
    pub conclusion: Formula,
}

fn lang(f: &Formula) -> Result<Theory> {
    f.min_theory().ok_or_else(|| {
        Error::Theory(format!(
            "{f} mixes ⊥ with ∨/∃; no theory contains both"
        ))
    })
}

fn join(a: Theory, b: Theory) -> Result<Theory> {
    a.join(b).ok_or_else(|| {
        Error::Theory(format!(
            "cannot combine {a} and {b} material in one proof"
        ))
    })
}

fn merge(
    a: &BTreeMap<AssumptionId, Formula>,
    b: &BTreeMap<AssumptionId, Formula>,
) -> Result<BTreeMap<AssumptionId, Formula>> {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut out = large.clone();
    for (id, f) in small {
        match out.get(id) {
            Some(g) if g != f => {
                return Err(Error::Shape(format!(
                    "assumption {id:?} is used both at {f} and at {g}"
                )))
            }
            Some(_) => {}
            None => {
                out.insert(id.clone(), f.clone());
            }
        }
    }
    Ok(out)
}

impl Proof {
    fn mk(
        kind: ProofKind,
        conclusion: Formula,
        free: BTreeMap<AssumptionId, Formula>,
        theory: Theory,
    ) -> Proof {
        Proof(Arc::new(ProofNode {
            kind,
            conclusion,
            free,
            theory,
        }))
    }

    /// `u : A`
    pub fn assume(u: Assumption) -> Result<Proof> {
        let theory = lang(&u.formula)?;
        let mut free = BTreeMap::new();
        free.insert(u.id.clone(), u.formula.clone());
        let conclusion = u.formula.clone();
        Ok(Proof::mk(ProofKind::Assume(u), conclusion, free, theory))
    }

    /// An axiom instance, checked against the theory `th` it is claimed in.
    pub fn axiom(ax: Axiom, th: Theory) -> Result<Proof> {
        let conclusion = ax.formula()?;
        let theory = ax.min_theory()?;
        if !theory.le(th) {
            return Err(Error::Theory(format!(
                "{} is not available in {th}; it needs {theory}",
                ax.name()
            )));
        }
        Ok(Proof::mk(ProofKind::Axiom(ax), conclusion, BTreeMap::new(), theory))
    }

    /// `(M, N) : A ∧ B`
    pub fn and_intro(m: Proof, n: Proof) -> Result<Proof> {
        let conclusion = Formula::and(m.conclusion().clone(), n.conclusion().clone());
        let free = merge(&m.0.free, &n.0.free)?;
        let theory = join(m.theory(), n.theory())?;
        Ok(Proof::mk(ProofKind::AndIntro(m, n), conclusion, free, theory))
    }

    /// `π0 M : A` or `π1 M : B` from `M : A ∧ B`
    pub fn proj(side: Side, m: Proof) -> Result<Proof> {
        let Some((a, b)) = m.conclusion().as_and() else {
            return Err(Error::Shape(format!(
                "projection needs a conjunction, got {}",
                m.conclusion()
            )));
        };
        let conclusion = match side {
            Side::Left => a.clone(),
            Side::Right => b.clone(),
        };
        let free = m.0.free.clone();
        let theory = m.theory();
        Ok(Proof::mk(ProofKind::Proj(side, m), conclusion, free, theory))
    }

    /// `M N : B` from `M : A → B` and `N : A`
    pub fn imp_elim(m: Proof, n: Proof) -> Result<Proof> {
        let Some((a, b)) = m.conclusion().as_imp() else {
            return Err(Error::Shape(format!(
                "cannot apply a proof of {}, which is not an implication",
                m.conclusion()
            )));
        };
        if a != n.conclusion() {
            return Err(Error::Shape(format!(
                "premise mismatch: function expects {a}, argument proves {}",
                n.conclusion()
            )));
        }
        let conclusion = b.clone();
        let free = merge(&m.0.free, &n.0.free)?;
        let theory = join(m.theory(), n.theory())?;
        Ok(Proof::mk(ProofKind::ImpElim(m, n), conclusion, free, theory))
    }

    /// `λu M : A → B`, discharging `u : A` whether or not it occurs.
    pub fn imp_intro(u: Assumption, m: Proof) -> Result<Proof> {
        if let Some(f) = m.0.free.get(&u.id) {
            if f != &u.formula {
                return Err(Error::Shape(format!(
                    "assumption {:?} is discharged at {} but used at {f}",
                    u.id, u.formula
                )));
            }
        }
        let conclusion = Formula::imp(u.formula.clone(), m.conclusion().clone());
        let mut free = m.0.free.clone();
        free.remove(&u.id);
        let theory = join(m.theory(), lang(&u.formula)?)?;
        Ok(Proof::mk(ProofKind::ImpIntro(u, m), conclusion, free, theory))
    }

    /// `M t : A[x := t]` from `M : ∀x A`
    pub fn all_elim(m: Proof, t: Term, supply: &mut NameSupply) -> Result<Proof> {
        let Some((x, a)) = m.conclusion().as_all() else {
            return Err(Error::Shape(format!(
                "cannot instantiate {}, which is not universally quantified",
                m.conclusion()
            )));
        };
        if t.ty() != x.ty() {
            return Err(Error::Type(format!(
                "instantiating {x:?} with {t} of type {}",
                t.ty()
            )));
        }
        supply.reserve(m.conclusion().max_index().max(t.max_index()));
        let conclusion = a.subst_var(x, &t, supply)?;
        let free = m.0.free.clone();
        let theory = m.theory();
        Ok(Proof::mk(ProofKind::AllElim(m, t), conclusion, free, theory))
    }

    /// `λx M : ∀x A`, provided `x` is not free in any open assumption.
    pub fn all_intro(x: Var, m: Proof) -> Result<Proof> {
        if let Some((id, f)) = m.0.free.iter().find(|(_, f)| f.has_free(&x)) {
            return Err(Error::Eigenvariable(format!(
                "cannot generalize {x:?}: it is free in open assumption {id:?} : {f}"
            )));
        }
        let conclusion = Formula::all(x.clone(), m.conclusion().clone());
        let free = m.0.free.clone();
        let theory = m.theory();
        Ok(Proof::mk(ProofKind::AllIntro(x, m), conclusion, free, theory))
    }

    /// Apply `rule` to `premises`.
    pub fn build(rule: Rule, premises: &[Proof], supply: &mut NameSupply) -> Result<Proof> {
        let arity = match rule {
            Rule::AndIntro | Rule::ImpElim => 2,
            _ => 1,
        };
        if premises.len() != arity {
            return Err(Error::Shape(format!(
                "{rule:?} takes {arity} premise(s), got {}",
                premises.len()
            )));
        }
        let p0 = premises[0].clone();
        match rule {
            Rule::AndIntro => Proof::and_intro(p0, premises[1].clone()),
            Rule::ImpElim => Proof::imp_elim(p0, premises[1].clone()),
            Rule::Proj(side) => Proof::proj(side, p0),
            Rule::ImpIntro(u) => Proof::imp_intro(u, p0),
            Rule::AllElim(t) => Proof::all_elim(p0, t, supply),
            Rule::AllIntro(x) => Proof::all_intro(x, p0),
        }
    }

    pub fn kind(&self) -> &ProofKind {
        &self.0.kind
    }

    pub fn conclusion(&self) -> &Formula {
        &self.0.conclusion
    }

    pub fn free_assumptions(&self) -> &BTreeMap<AssumptionId, Formula> {
        &self.0.free
    }

    pub fn is_closed(&self) -> bool {
        self.0.free.is_empty()
    }

    pub fn theory(&self) -> Theory {
        self.0.theory
    }

    pub fn inspect(&self) -> Judgement {
        Judgement {
            theory: self.theory(),
            assumptions: self.0.free.clone(),
            conclusion: self.conclusion().clone(),
        }
    }

    /// Immediate sub-proofs.
    pub fn children(&self) -> Vec<&Proof> {
        match self.kind() {
            ProofKind::Assume(_) | ProofKind::Axiom(_) => vec![],
            ProofKind::AndIntro(m, n) | ProofKind::ImpElim(m, n) => vec![m, n],
            ProofKind::Proj(_, m)
            | ProofKind::ImpIntro(_, m)
            | ProofKind::AllElim(m, _)
            | ProofKind::AllIntro(_, m) => vec![m],
        }
    }

    /// Number of rule applications.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    /// Whether the axiom `⊥⁺` is used anywhere.
    pub fn uses_botplus(&self) -> bool {
        matches!(self.kind(), ProofKind::Axiom(Axiom::BotPlus))
            || self.children().iter().any(|c| c.uses_botplus())
    }

    /// Largest object-variable or assumption index anywhere in the proof.
    pub fn max_index(&self) -> u64 {
        let own = match self.kind() {
            ProofKind::Assume(u) | ProofKind::ImpIntro(u, _) => {
                u.index().max(u.formula().max_index())
            }
            ProofKind::Axiom(ax) => ax.max_index(),
            ProofKind::AllElim(_, t) => t.max_index(),
            ProofKind::AllIntro(x, _) => x.index(),
            _ => 0,
        };
        self.children()
            .iter()
            .map(|c| c.max_index())
            .fold(own.max(self.conclusion().max_index()), u64::max)
    }

    /// Capture-avoiding substitution of `t` for the object variable `x`
    /// throughout the proof, rebuilt through the checked constructors.
    /// Eigenvariables occurring free in `t` are renamed.
    pub fn subst_var(&self, x: &Var, t: &Term, supply: &mut NameSupply) -> Result<Proof> {
        if t.ty() != x.ty() {
            return Err(Error::Type(format!(
                "cannot substitute {t} of type {} for variable {x:?}",
                t.ty()
            )));
        }
        supply.reserve(self.max_index().max(t.max_index()));
        self.subst_var_rec(x, t, supply)
    }

    fn subst_var_rec(&self, x: &Var, t: &Term, supply: &mut NameSupply) -> Result<Proof> {
        let sub_u = |u: &Assumption, supply: &mut NameSupply| -> Result<Assumption> {
            Ok(Assumption {
                id: u.id.clone(),
                formula: u.formula.subst_var(x, t, supply)?,
            })
        };
        match self.kind() {
            ProofKind::Assume(u) => Proof::assume(sub_u(u, supply)?),
            ProofKind::Axiom(ax) => {
                let ax = ax.subst_var(x, t, supply)?;
                Proof::axiom(ax, self.theory())
            }
            ProofKind::AndIntro(m, n) => Proof::and_intro(
                m.subst_var_rec(x, t, supply)?,
                n.subst_var_rec(x, t, supply)?,
            ),
            ProofKind::Proj(side, m) => Proof::proj(*side, m.subst_var_rec(x, t, supply)?),
            ProofKind::ImpElim(m, n) => Proof::imp_elim(
                m.subst_var_rec(x, t, supply)?,
                n.subst_var_rec(x, t, supply)?,
            ),
            ProofKind::ImpIntro(u, m) => {
                Proof::imp_intro(sub_u(u, supply)?, m.subst_var_rec(x, t, supply)?)
            }
            ProofKind::AllElim(m, s) => Proof::all_elim(
                m.subst_var_rec(x, t, supply)?,
                s.subst(x, t, supply)?,
                supply,
            ),
            ProofKind::AllIntro(y, m) => {
                if y == x {
                    return Ok(self.clone());
                }
                if t.has_free(y) {
                    let fresh = supply.fresh_var(y);
                    let renamed = m.subst_var_rec(y, &Term::var(fresh.clone()), supply)?;
                    Proof::all_intro(fresh, renamed.subst_var_rec(x, t, supply)?)
                } else {
                    Proof::all_intro(y.clone(), m.subst_var_rec(x, t, supply)?)
                }
            }
        }
    }
}

/// Structural equality; embedded formulas and terms compare up to
/// alpha-equivalence.
impl PartialEq for Proof {
    fn eq(&self, other: &Proof) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (self.kind(), other.kind()) {
            (ProofKind::Assume(u), ProofKind::Assume(v)) => u == v,
            (ProofKind::Axiom(a), ProofKind::Axiom(b)) => a == b,
            (ProofKind::AndIntro(m, n), ProofKind::AndIntro(m2, n2))
            | (ProofKind::ImpElim(m, n), ProofKind::ImpElim(m2, n2)) => m == m2 && n == n2,
            (ProofKind::Proj(s, m), ProofKind::Proj(s2, m2)) => s == s2 && m == m2,
            (ProofKind::ImpIntro(u, m), ProofKind::ImpIntro(v, m2)) => u == v && m == m2,
            (ProofKind::AllElim(m, t), ProofKind::AllElim(m2, t2)) => m == m2 && t == t2,
            (ProofKind::AllIntro(x, m), ProofKind::AllIntro(y, m2)) => x == y && m == m2,
            _ => false,
        }
    }
}

impl Eq for Proof {}

impl fmt::Debug for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Structural recomputation of a proof's judgement, independent of the
/// cached fields. Used to audit caching.
pub fn recheck(p: &Proof, supply: &mut NameSupply) -> Result<Judgement> {
    let rebuilt = rebuild(p, supply)?;
    Ok(rebuilt.inspect())
}

/// Recheck `p` and confirm it is a proof in `th`. The returned judgement is
/// stated at `th`.
pub fn check(p: &Proof, th: Theory, supply: &mut NameSupply) -> Result<Judgement> {
    let mut j = recheck(p, supply)?;
    if !j.theory.le(th) {
        return Err(Error::Theory(format!("the proof needs {}, not available in {th}", j.theory)));
    }
    j.theory = th;
    Ok(j)
}

fn rebuild(p: &Proof, supply: &mut NameSupply) -> Result<Proof> {
    match p.kind() {
        ProofKind::Assume(u) => Proof::assume(u.clone()),
        ProofKind::Axiom(ax) => Proof::axiom(ax.clone(), ax.min_theory()?),
        ProofKind::AndIntro(m, n) => Proof::and_intro(rebuild(m, supply)?, rebuild(n, supply)?),
        ProofKind::Proj(s, m) => Proof::proj(*s, rebuild(m, supply)?),
        ProofKind::ImpElim(m, n) => Proof::imp_elim(rebuild(m, supply)?, rebuild(n, supply)?),
        ProofKind::ImpIntro(u, m) => Proof::imp_intro(u.clone(), rebuild(m, supply)?),
        ProofKind::AllElim(m, t) => Proof::all_elim(rebuild(m, supply)?, t.clone(), supply),
        ProofKind::AllIntro(x, m) => Proof::all_intro(x.clone(), rebuild(m, supply)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Type;

    fn p() -> Formula {
        Formula::atom(Term::var(Var::new("p", 0, Type::Bool))).unwrap()
    }

    #[test]
    fn truth_is_na() {
        let j = Proof::axiom(Axiom::Truth, Theory::NA).unwrap().inspect();
        assert_eq!(j.theory, Theory::NA);
        assert!(j.assumptions.is_empty());
        assert!(j.conclusion.is_truth());
    }

    #[test]
    fn botplus_needs_ma() {
        let e = Proof::axiom(Axiom::BotPlus, Theory::NA).unwrap_err();
        assert_eq!(e.code(), "theory-error");
        assert!(Proof::axiom(Axiom::BotPlus, Theory::MA).is_ok());
        assert_eq!(Proof::axiom(Axiom::BotPlus, Theory::HA).unwrap_err().code(), "theory-error");
    }

    #[test]
    fn lem_needs_pa() {
        assert!(Proof::axiom(Axiom::Lem(p()), Theory::HA).is_err());
        let j = Proof::axiom(Axiom::Lem(p()), Theory::PA).unwrap().inspect();
        assert_eq!(j.conclusion, Formula::or(p(), Formula::neg(p())));
        assert_eq!(j.theory, Theory::PA);
    }

    #[test]
    fn identity_discharges() {
        let u = Assumption::new("u", 0, p());
        let m = Proof::imp_intro(u.clone(), Proof::assume(u).unwrap()).unwrap();
        assert!(m.is_closed());
        assert_eq!(m.conclusion(), &Formula::imp(p(), p()));
    }

    #[test]
    fn vacuous_discharge() {
        let u = Assumption::new("u", 0, p());
        let v = Assumption::new("v", 1, Formula::truth());
        let m = Proof::imp_intro(v, Proof::assume(u).unwrap()).unwrap();
        assert_eq!(m.free_assumptions().len(), 1);
    }

    #[test]
    fn assume_bot_is_ma() {
        let m = Proof::assume(Assumption::new("u", 0, Formula::bot())).unwrap();
        assert_eq!(m.theory(), Theory::MA);
    }

    #[test]
    fn eigenvariable_condition() {
        let x = Var::new("p", 0, Type::Bool);
        let m = Proof::assume(Assumption::new("u", 0, p())).unwrap();
        assert_eq!(Proof::all_intro(x, m).unwrap_err().code(), "eigenvariable-error");
    }

    #[test]
    fn imp_elim_shape() {
        let t = Proof::axiom(Axiom::Truth, Theory::NA).unwrap();
        assert_eq!(Proof::imp_elim(t.clone(), t).unwrap_err().code(), "shape-error");
    }

    #[test]
    fn mixing_bot_and_or_is_a_theory_error() {
        let u = Assumption::new("u", 0, Formula::bot());
        let m = Proof::assume(u).unwrap();
        let or = Proof::axiom(Axiom::OrIntroL(p(), p()), Theory::HA).unwrap();
        assert_eq!(Proof::and_intro(m, or).unwrap_err().code(), "theory-error");
    }

    #[test]
    fn conflicting_assumption_formulas() {
        let a = Proof::assume(Assumption::new("u", 0, p())).unwrap();
        let b = Proof::assume(Assumption::new("u", 0, Formula::truth())).unwrap();
        assert_eq!(Proof::and_intro(a, b).unwrap_err().code(), "shape-error");
    }

    #[test]
    fn all_elim_types() {
        let b = Var::new("b", 0, Type::Bool);
        let body = Formula::atom(Term::var(b.clone())).unwrap();
        let ax = Proof::axiom(Axiom::BoolCases { var: b, body }, Theory::NA).unwrap();
        let mut s = NameSupply::new();
        assert_eq!(
            Proof::all_elim(ax.clone(), Term::zero(), &mut s).unwrap_err().code(),
            "type-error"
        );
        let inst = Proof::all_elim(ax, Term::tt(), &mut s).unwrap();
        assert_eq!(
            inst.conclusion(),
            &Formula::imps([Formula::truth(), Formula::falsity()], Formula::truth())
        );
    }

    #[test]
    fn ex_elim_side_condition() {
        let x = Var::new("x", 0, Type::Bool);
        let a = Formula::atom(Term::var(x.clone())).unwrap();
        let ax = Axiom::ExElim { body: a.clone(), var: x, concl: a };
        assert_eq!(Proof::axiom(ax, Theory::HA).unwrap_err().code(), "eigenvariable-error");
    }

    #[test]
    fn subst_var_renames_eigenvariable() {
        // λy (Truth) : ∀y T, then substitute nothing relevant; and a proof
        // with a free x under a ∀y where t mentions y.
        let x = Var::new("x", 0, Type::Bool);
        let y = Var::new("y", 1, Type::Bool);
        let ax = Proof::axiom(
            Axiom::BoolCases {
                var: y.clone(),
                body: Formula::imp(
                    Formula::atom(Term::var(x.clone())).unwrap(),
                    Formula::atom(Term::var(y.clone())).unwrap(),
                ),
            },
            Theory::NA,
        )
        .unwrap();
        let mut s = NameSupply::new();
        let out = ax.subst_var(&x, &Term::var(y.clone()), &mut s).unwrap();
        let fv = out.conclusion().free_vars();
        assert!(fv.contains(&y));
        assert_eq!(fv.len(), 1);
    }
}
