//! Nameless (de Bruijn) forms used for alpha-equivalence and hashing.

use super::term::{Const, Term, TermKind, Var};
use super::types::Type;
use crate::formula::{Formula, FormulaKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum CanonTerm {
    Bound(usize),
    Free(Var),
    Const(Const),
    App(Box<CanonTerm>, Box<CanonTerm>),
    Lam(Type, Box<CanonTerm>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum CanonFormula {
    Bot,
    Atom(CanonTerm),
    Imp(Box<CanonFormula>, Box<CanonFormula>),
    And(Box<CanonFormula>, Box<CanonFormula>),
    All(Type, Box<CanonFormula>),
    Or(Box<CanonFormula>, Box<CanonFormula>),
    Ex(Type, Box<CanonFormula>),
}

pub(crate) fn term(t: &Term) -> CanonTerm {
    term_in(t, &mut Vec::new())
}

pub(crate) fn formula(a: &Formula) -> CanonFormula {
    formula_in(a, &mut Vec::new())
}

fn lookup(env: &[Var], v: &Var) -> Option<usize> {
    env.iter().rev().position(|b| b == v)
}

fn term_in(t: &Term, env: &mut Vec<Var>) -> CanonTerm {
    match t.kind() {
        TermKind::Var(v) => match lookup(env, v) {
            Some(i) => CanonTerm::Bound(i),
            None => CanonTerm::Free(v.clone()),
        },
        TermKind::Const(c) => CanonTerm::Const(c.clone()),
        TermKind::App(f, a) => {
            CanonTerm::App(Box::new(term_in(f, env)), Box::new(term_in(a, env)))
        }
        TermKind::Lam(x, b) => {
            env.push(x.clone());
            let body = term_in(b, env);
            env.pop();
            CanonTerm::Lam(x.ty().clone(), Box::new(body))
        }
    }
}

fn formula_in(a: &Formula, env: &mut Vec<Var>) -> CanonFormula {
    let bin = |l: &Formula, r: &Formula, env: &mut Vec<Var>| {
        (Box::new(formula_in(l, env)), Box::new(formula_in(r, env)))
    };
    match a.kind() {
        FormulaKind::Bot => CanonFormula::Bot,
        FormulaKind::Atom(t) => CanonFormula::Atom(term_in(t, env)),
        FormulaKind::Imp(l, r) => {
            let (l, r) = bin(l, r, env);
            CanonFormula::Imp(l, r)
        }
        FormulaKind::And(l, r) => {
            let (l, r) = bin(l, r, env);
            CanonFormula::And(l, r)
        }
        FormulaKind::Or(l, r) => {
            let (l, r) = bin(l, r, env);
            CanonFormula::Or(l, r)
        }
        FormulaKind::All(x, b) | FormulaKind::Ex(x, b) => {
            env.push(x.clone());
            let body = Box::new(formula_in(b, env));
            env.pop();
            if matches!(a.kind(), FormulaKind::All(..)) {
                CanonFormula::All(x.ty().clone(), body)
            } else {
                CanonFormula::Ex(x.ty().clone(), body)
            }
        }
    }
}
