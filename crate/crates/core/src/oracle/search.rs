//! Bounded goal-directed proof search. Sound but deliberately incomplete:
//! a failed search says nothing about derivability.

use std::fmt;

use crate::derived::{app, efq_with, hyp, inst, lam, truth};
use crate::error::{Error, Result};
use crate::formula::{in_language, Formula, FormulaKind};
use crate::kernel::{Axiom, Proof, Side};
use crate::syntax::{NameSupply, Term, Type, Var};
use crate::theory::Theory;

/// Expanded goals allowed per query.
pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchVerdict {
    /// A closed proof of the query within the queried theory.
    Derivable(Proof),
    /// The search gave up at this depth.
    Unknown(usize),
}

impl SearchVerdict {
    pub fn witness(&self) -> Option<&Proof> {
        match self {
            SearchVerdict::Derivable(p) => Some(p),
            SearchVerdict::Unknown(_) => None,
        }
    }
}

impl fmt::Display for SearchVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchVerdict::Derivable(p) => write!(f, "(derivable {p})"),
            SearchVerdict::Unknown(d) => write!(f, "(unknown {d})"),
        }
    }
}

pub fn bounded_derivable(a: &Formula, th: Theory, depth: usize) -> Result<SearchVerdict> {
    bounded_derivable_with_budget(a, th, depth, DEFAULT_BUDGET)
}

pub fn bounded_derivable_with_budget(
    a: &Formula,
    th: Theory,
    depth: usize,
    budget: usize,
) -> Result<SearchVerdict> {
    if !in_language(a, th) {
        return Err(Error::Language(format!("{a} is not a formula of {th}")));
    }
    let mut supply = NameSupply::new();
    supply.reserve(a.max_index());
    let mut pool = vec![Term::tt(), Term::ff(), Term::zero()];
    for t in a.atoms() {
        for s in t.subterms() {
            if !pool.contains(&s) {
                pool.push(s);
            }
        }
    }
    let mut search = Search {
        th,
        pool,
        supply,
        budget,
        ctx: Vec::new(),
    };
    let found = search.prove(a, depth);
    Ok(match found {
        Some(p) if p.is_closed() && p.theory().le(th) && p.conclusion() == a => {
            SearchVerdict::Derivable(p)
        }
        _ => SearchVerdict::Unknown(depth),
    })
}

enum Step {
    Arg(Formula),
    Proj(Side),
    Inst(Term),
}

struct Search {
    th: Theory,
    pool: Vec<Term>,
    supply: NameSupply,
    budget: usize,
    ctx: Vec<(Formula, Proof)>,
}

impl Search {
    fn prove(&mut self, goal: &Formula, depth: usize) -> Option<Proof> {
        if depth == 0 || self.budget == 0 {
            return None;
        }
        self.budget -= 1;
        if let Some((_, p)) = self.ctx.iter().rev().find(|(f, _)| f == goal) {
            return Some(p.clone());
        }
        if goal.is_truth() {
            return truth().ok();
        }
        // Introduction rules for →, ∧ and ∀ are invertible.
        match goal.kind() {
            FormulaKind::Imp(a, b) => {
                let (u, pu) = hyp("u", a.clone(), &mut self.supply).ok()?;
                self.ctx.push((a.clone(), pu));
                let body = self.prove(b, depth - 1);
                self.ctx.pop();
                return lam(&u, body?).ok();
            }
            FormulaKind::And(a, b) => {
                let l = self.prove(a, depth - 1)?;
                let r = self.prove(b, depth - 1)?;
                return Proof::and_intro(l, r).ok();
            }
            FormulaKind::All(x, a) => {
                let y = self.eigenvariable(x, goal);
                let body = a.subst_var(x, &Term::var(y.clone()), &mut self.supply).ok()?;
                self.pool.push(Term::var(y.clone()));
                let p = self.prove(&body, depth - 1);
                self.pool.pop();
                return Proof::all_intro(y, p?).ok();
            }
            _ => {}
        }
        self.eliminate(goal, depth)
            .or_else(|| self.strong_intro(goal, depth))
            .or_else(|| self.strong_elim(goal, depth))
            .or_else(|| self.ex_falso(goal, depth))
    }

    fn eigenvariable(&mut self, x: &Var, goal: &Formula) -> Var {
        let ctx = &self.ctx;
        self.supply.fresh_var_avoiding(x, |v| {
            goal.has_free(v) || ctx.iter().any(|(f, _)| f.has_free(v))
        })
    }

    fn pool_of(&self, ty: &Type) -> Vec<Term> {
        self.pool.iter().filter(|t| t.ty() == ty).cloned().collect()
    }

    /// Every way of reaching a formula from `h` by applying, projecting and
    /// instantiating, at most `len` steps deep.
    fn paths(&mut self, h: &Formula, len: usize, out: &mut Vec<(Formula, Vec<Step>)>, prefix: &mut Vec<Step>) {
        let here = |p: &Vec<Step>| p.iter().map(clone_step).collect::<Vec<_>>();
        out.push((h.clone(), here(prefix)));
        if len == 0 {
            return;
        }
        match h.kind() {
            FormulaKind::Imp(a, b) => {
                prefix.push(Step::Arg(a.clone()));
                self.paths(b, len - 1, out, prefix);
                prefix.pop();
            }
            FormulaKind::And(a, b) => {
                for (side, c) in [(Side::Left, a), (Side::Right, b)] {
                    prefix.push(Step::Proj(side));
                    self.paths(c, len - 1, out, prefix);
                    prefix.pop();
                }
            }
            FormulaKind::All(x, a) => {
                for t in self.pool_of(x.ty()) {
                    let Ok(b) = a.subst_var(x, &t, &mut self.supply) else { continue };
                    prefix.push(Step::Inst(t));
                    self.paths(&b, len - 1, out, prefix);
                    prefix.pop();
                }
            }
            _ => {}
        }
    }

    fn eliminate(&mut self, goal: &Formula, depth: usize) -> Option<Proof> {
        let hyps = self.ctx.clone();
        for (h, ph) in hyps.iter().rev() {
            let mut found = Vec::new();
            self.paths(h, depth, &mut found, &mut Vec::new());
            let mut matching: Vec<_> = found.into_iter().filter(|(t, _)| t == goal).collect();
            matching.sort_by_key(|(_, s)| s.iter().filter(|s| matches!(s, Step::Arg(_))).count());
            for (_, steps) in matching {
                if let Some(p) = self.follow(ph.clone(), &steps, depth) {
                    return Some(p);
                }
            }
        }
        None
    }

    fn follow(&mut self, mut p: Proof, steps: &[Step], depth: usize) -> Option<Proof> {
        for s in steps {
            p = match s {
                Step::Arg(a) => {
                    let q = self.prove(a, depth - 1)?;
                    app(&p, q).ok()?
                }
                Step::Proj(side) => Proof::proj(*side, p).ok()?,
                Step::Inst(t) => inst(&p, t.clone(), &mut self.supply).ok()?,
            };
        }
        Some(p)
    }

    fn axiom(&self, ax: Axiom) -> Option<Proof> {
        Proof::axiom(ax, self.th).ok()
    }

    fn strong_intro(&mut self, goal: &Formula, depth: usize) -> Option<Proof> {
        if !Theory::HA.le(self.th) {
            return None;
        }
        match goal.kind() {
            FormulaKind::Or(a, b) => {
                if self.th == Theory::PA && b == &Formula::neg(a.clone()) {
                    return self.axiom(Axiom::Lem(a.clone()));
                }
                if let Some(p) = self.prove(a, depth - 1) {
                    return app(&self.axiom(Axiom::OrIntroL(a.clone(), b.clone()))?, p).ok();
                }
                let p = self.prove(b, depth - 1)?;
                app(&self.axiom(Axiom::OrIntroR(a.clone(), b.clone()))?, p).ok()
            }
            FormulaKind::Ex(x, a) => {
                for t in self.pool_of(x.ty()) {
                    let Ok(at) = a.subst_var(x, &t, &mut self.supply) else { continue };
                    if let Some(p) = self.prove(&at, depth - 1) {
                        let ax = Axiom::ExIntro {
                            body: a.clone(),
                            var: x.clone(),
                            witness: t,
                        };
                        return app(&self.axiom(ax)?, p).ok();
                    }
                }
                None
            }
            _ => None,
        }
    }

    /// Case analysis on a disjunction or existential in the context.
    fn strong_elim(&mut self, goal: &Formula, depth: usize) -> Option<Proof> {
        if !Theory::HA.le(self.th) {
            return None;
        }
        let hyps = self.ctx.clone();
        for (h, ph) in hyps.iter().rev() {
            match h.kind() {
                FormulaKind::Or(a, b) => {
                    let l = self.prove(&Formula::imp(a.clone(), goal.clone()), depth - 1);
                    let Some(l) = l else { continue };
                    let Some(r) = self.prove(&Formula::imp(b.clone(), goal.clone()), depth - 1) else {
                        continue;
                    };
                    let ax = self.axiom(Axiom::OrElim(a.clone(), b.clone(), goal.clone()))?;
                    return app(&app(&app(&ax, ph.clone()).ok()?, l).ok()?, r).ok();
                }
                FormulaKind::Ex(x, a) => {
                    let y = self.eigenvariable(x, goal);
                    let Ok(ay) = a.subst_var(x, &Term::var(y.clone()), &mut self.supply) else {
                        continue;
                    };
                    let step = Formula::all(y.clone(), Formula::imp(ay.clone(), goal.clone()));
                    let Some(q) = self.prove(&step, depth - 1) else { continue };
                    let ax = self.axiom(Axiom::ExElim {
                        body: ay,
                        var: y,
                        concl: goal.clone(),
                    })?;
                    return app(&app(&ax, ph.clone()).ok()?, q).ok();
                }
                _ => {}
            }
        }
        None
    }

    /// `F` proves anything; in MA this covers `⊥` through `⊥⁺`.
    fn ex_falso(&mut self, goal: &Formula, depth: usize) -> Option<Proof> {
        if goal.is_falsity() || !in_language(goal, self.th) {
            return None;
        }
        let f = self.prove(&Formula::falsity(), depth - 1)?;
        let efq = efq_with(goal, self.th, &mut self.supply).ok()?;
        app(&efq, f).ok()
    }
}

fn clone_step(s: &Step) -> Step {
    match s {
        Step::Arg(a) => Step::Arg(a.clone()),
        Step::Proj(side) => Step::Proj(*side),
        Step::Inst(t) => Step::Inst(t.clone()),
    }
}
