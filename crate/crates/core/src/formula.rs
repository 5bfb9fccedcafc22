//! Formulas of the four arithmetics, ⊥-substitution and the Gödel–Gentzen
//! negative translation.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::syntax::canon;
use crate::syntax::{Const, NameSupply, Term, Type, Var};
use crate::theory::Theory;

#[derive(Clone)]
pub enum FormulaKind {
    Bot,
    Atom(Term),
    Imp(Formula, Formula),
    And(Formula, Formula),
    All(Var, Formula),
    Or(Formula, Formula),
    Ex(Var, Formula),
}

/// Immutable, shareable formula. Equality and hashing are up to
/// alpha-equivalence.
#[derive(Clone)]
pub struct Formula(Arc<FormulaKind>);

impl Formula {
    fn mk(kind: FormulaKind) -> Formula {
        Formula(Arc::new(kind))
    }

    pub fn bot() -> Formula {
        Formula::mk(FormulaKind::Bot)
    }

    pub fn atom(t: Term) -> Result<Formula> {
        if t.ty() != &Type::Bool {
            return Err(Error::Type(format!(
                "atom payload {t} has type {}, expected (bool)",
                t.ty()
            )));
        }
        Ok(Formula::mk(FormulaKind::Atom(t)))
    }

    /// `T := atom(tt)`
    pub fn truth() -> Formula {
        Formula::mk(FormulaKind::Atom(Term::tt()))
    }

    /// `F := atom(ff)`
    pub fn falsity() -> Formula {
        Formula::mk(FormulaKind::Atom(Term::ff()))
    }

    pub fn imp(prem: Formula, concl: Formula) -> Formula {
        Formula::mk(FormulaKind::Imp(prem, concl))
    }

    /// `a1 → a2 → ... → concl`
    pub fn imps<I>(prems: I, concl: Formula) -> Formula
    where
        I: IntoIterator<Item = Formula>,
        I::IntoIter: DoubleEndedIterator,
    {
        prems
            .into_iter()
            .rev()
            .fold(concl, |acc, p| Formula::imp(p, acc))
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::mk(FormulaKind::And(left, right))
    }

    pub fn all(bound: Var, body: Formula) -> Formula {
        Formula::mk(FormulaKind::All(bound, body))
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::mk(FormulaKind::Or(left, right))
    }

    pub fn ex(bound: Var, body: Formula) -> Formula {
        Formula::mk(FormulaKind::Ex(bound, body))
    }

    /// `¬A := A → F`
    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Formula) -> Formula {
        Formula::imp(a, Formula::falsity())
    }

    /// `A ∨̃ B := ¬(¬A ∧ ¬B)`
    pub fn weak_or(a: Formula, b: Formula) -> Formula {
        Formula::neg(Formula::and(Formula::neg(a), Formula::neg(b)))
    }

    /// `∃̃x A := ¬∀x ¬A`
    pub fn weak_exists(x: Var, a: Formula) -> Formula {
        Formula::neg(Formula::all(x, Formula::neg(a)))
    }

    /// `A ∧̃ B := ¬(A → ¬B)`
    pub fn weak_and(a: Formula, b: Formula) -> Formula {
        Formula::neg(Formula::imp(a, Formula::neg(b)))
    }

    pub fn kind(&self) -> &FormulaKind {
        &self.0
    }

    pub fn ptr_eq(&self, other: &Formula) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn is_bot(&self) -> bool {
        matches!(self.kind(), FormulaKind::Bot)
    }

    pub fn is_atom_of(&self, c: &Const) -> bool {
        matches!(self.kind(), FormulaKind::Atom(t) if t.is_const(c))
    }

    pub fn is_falsity(&self) -> bool {
        self.is_atom_of(&Const::Ff)
    }

    pub fn is_truth(&self) -> bool {
        self.is_atom_of(&Const::Tt)
    }

    pub fn as_imp(&self) -> Option<(&Formula, &Formula)> {
        match self.kind() {
            FormulaKind::Imp(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_and(&self) -> Option<(&Formula, &Formula)> {
        match self.kind() {
            FormulaKind::And(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_all(&self) -> Option<(&Var, &Formula)> {
        match self.kind() {
            FormulaKind::All(x, a) => Some((x, a)),
            _ => None,
        }
    }

    /// Number of formula nodes; atoms count as one regardless of their term.
    pub fn size(&self) -> usize {
        match self.kind() {
            FormulaKind::Bot | FormulaKind::Atom(_) => 1,
            FormulaKind::Imp(a, b) | FormulaKind::And(a, b) | FormulaKind::Or(a, b) => {
                1 + a.size() + b.size()
            }
            FormulaKind::All(_, a) | FormulaKind::Ex(_, a) => 1 + a.size(),
        }
    }

    pub fn has_bot(&self) -> bool {
        match self.kind() {
            FormulaKind::Bot => true,
            FormulaKind::Atom(_) => false,
            FormulaKind::Imp(a, b) | FormulaKind::And(a, b) | FormulaKind::Or(a, b) => {
                a.has_bot() || b.has_bot()
            }
            FormulaKind::All(_, a) | FormulaKind::Ex(_, a) => a.has_bot(),
        }
    }

    /// Whether `∨` or `∃` occurs.
    pub fn has_strong(&self) -> bool {
        match self.kind() {
            FormulaKind::Bot | FormulaKind::Atom(_) => false,
            FormulaKind::Or(..) | FormulaKind::Ex(..) => true,
            FormulaKind::Imp(a, b) | FormulaKind::And(a, b) => a.has_strong() || b.has_strong(),
            FormulaKind::All(_, a) => a.has_strong(),
        }
    }

    /// Least language containing this formula: `NA`, `MA` (uses ⊥) or `HA`
    /// (uses ∨/∃). `None` when both ⊥ and ∨/∃ occur.
    pub fn min_theory(&self) -> Option<Theory> {
        match (self.has_bot(), self.has_strong()) {
            (false, false) => Some(Theory::NA),
            (true, false) => Some(Theory::MA),
            (false, true) => Some(Theory::HA),
            (true, true) => None,
        }
    }

    pub fn has_free(&self, x: &Var) -> bool {
        match self.kind() {
            FormulaKind::Bot => false,
            FormulaKind::Atom(t) => t.has_free(x),
            FormulaKind::Imp(a, b) | FormulaKind::And(a, b) | FormulaKind::Or(a, b) => {
                a.has_free(x) || b.has_free(x)
            }
            FormulaKind::All(y, a) | FormulaKind::Ex(y, a) => y != x && a.has_free(x),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>) {
        match self.kind() {
            FormulaKind::Bot => {}
            FormulaKind::Atom(t) => t.collect_free(bound, out),
            FormulaKind::Imp(a, b) | FormulaKind::And(a, b) | FormulaKind::Or(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            FormulaKind::All(y, a) | FormulaKind::Ex(y, a) => {
                bound.push(y.clone());
                a.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn max_index(&self) -> u64 {
        match self.kind() {
            FormulaKind::Bot => 0,
            FormulaKind::Atom(t) => t.max_index(),
            FormulaKind::Imp(a, b) | FormulaKind::And(a, b) | FormulaKind::Or(a, b) => {
                a.max_index().max(b.max_index())
            }
            FormulaKind::All(y, a) | FormulaKind::Ex(y, a) => y.index().max(a.max_index()),
        }
    }

    /// Atoms' payload terms, in order of occurrence.
    pub fn atoms(&self) -> Vec<Term> {
        let mut out = Vec::new();
        self.visit_atoms(&mut |t| out.push(t.clone()));
        out
    }

    fn visit_atoms(&self, f: &mut impl FnMut(&Term)) {
        match self.kind() {
            FormulaKind::Bot => {}
            FormulaKind::Atom(t) => f(t),
            FormulaKind::Imp(a, b) | FormulaKind::And(a, b) | FormulaKind::Or(a, b) => {
                a.visit_atoms(f);
                b.visit_atoms(f);
            }
            FormulaKind::All(_, a) | FormulaKind::Ex(_, a) => a.visit_atoms(f),
        }
    }

    /// Capture-avoiding `self[x := t]`.
    pub fn subst_var(&self, x: &Var, t: &Term, supply: &mut NameSupply) -> Result<Formula> {
        if t.ty() != x.ty() {
            return Err(Error::Type(format!(
                "cannot substitute {t} of type {} for variable {x:?}",
                t.ty()
            )));
        }
        let fv = t.free_vars();
        Ok(self.subst_with(x, t, &fv, supply))
    }

    pub(crate) fn subst_with(
        &self,
        x: &Var,
        t: &Term,
        fv_t: &BTreeSet<Var>,
        supply: &mut NameSupply,
    ) -> Formula {
        match self.kind() {
            FormulaKind::Bot => self.clone(),
            FormulaKind::Atom(s) => {
                if s.has_free(x) {
                    Formula::mk(FormulaKind::Atom(s.subst_with(x, t, fv_t, supply)))
                } else {
                    self.clone()
                }
            }
            FormulaKind::Imp(a, b) => Formula::imp(
                a.subst_with(x, t, fv_t, supply),
                b.subst_with(x, t, fv_t, supply),
            ),
            FormulaKind::And(a, b) => Formula::and(
                a.subst_with(x, t, fv_t, supply),
                b.subst_with(x, t, fv_t, supply),
            ),
            FormulaKind::Or(a, b) => Formula::or(
                a.subst_with(x, t, fv_t, supply),
                b.subst_with(x, t, fv_t, supply),
            ),
            FormulaKind::All(y, a) | FormulaKind::Ex(y, a) => {
                if y == x || !a.has_free(x) {
                    return self.clone();
                }
                let (y, a) = if fv_t.contains(y) {
                    let fresh =
                        supply.fresh_var_avoiding(y, |v| fv_t.contains(v) || a.has_free(v));
                    let renamed = a.rename(y, &fresh, supply);
                    (fresh, renamed)
                } else {
                    (y.clone(), a.clone())
                };
                let body = a.subst_with(x, t, fv_t, supply);
                self.rebind(y, body)
            }
        }
    }

    /// `self[y := fresh]` where `fresh` is known not to occur in `self`.
    pub(crate) fn rename(&self, y: &Var, fresh: &Var, supply: &mut NameSupply) -> Formula {
        let mut fv = BTreeSet::new();
        fv.insert(fresh.clone());
        self.subst_with(y, &Term::var(fresh.clone()), &fv, supply)
    }

    /// Same quantifier as `self` (which must be `All` or `Ex`) over a new
    /// binder and body.
    fn rebind(&self, x: Var, body: Formula) -> Formula {
        match self.kind() {
            FormulaKind::Ex(..) => Formula::ex(x, body),
            _ => Formula::all(x, body),
        }
    }

    /// `A^S`: every ⊥ replaced by `s`. Quantifiers binding a free variable of
    /// `s` are renamed first.
    pub fn subst_bot(&self, s: &Formula, supply: &mut NameSupply) -> Result<Formula> {
        if self.has_strong() {
            return Err(Error::Language(format!(
                "⊥-substitution needs an MA formula, got {self}"
            )));
        }
        let fv = s.free_vars();
        Ok(self.subst_bot_with(s, &fv, supply))
    }

    fn subst_bot_with(&self, s: &Formula, fv_s: &BTreeSet<Var>, supply: &mut NameSupply) -> Formula {
        if !self.has_bot() {
            return self.clone();
        }
        match self.kind() {
            FormulaKind::Bot => s.clone(),
            FormulaKind::Imp(a, b) => Formula::imp(
                a.subst_bot_with(s, fv_s, supply),
                b.subst_bot_with(s, fv_s, supply),
            ),
            FormulaKind::And(a, b) => Formula::and(
                a.subst_bot_with(s, fv_s, supply),
                b.subst_bot_with(s, fv_s, supply),
            ),
            FormulaKind::All(x, a) => {
                if fv_s.contains(x) {
                    let fresh =
                        supply.fresh_var_avoiding(x, |v| fv_s.contains(v) || a.has_free(v));
                    let renamed = a.rename(x, &fresh, supply);
                    Formula::all(fresh, renamed.subst_bot_with(s, fv_s, supply))
                } else {
                    Formula::all(x.clone(), a.subst_bot_with(s, fv_s, supply))
                }
            }
            FormulaKind::Atom(_) | FormulaKind::Or(..) | FormulaKind::Ex(..) => {
                unreachable!("no ⊥ below atoms; ∨/∃ rejected by subst_bot")
            }
        }
    }

    /// `A^F`, the instance used by the formula classes.
    pub fn bot_to_falsity(&self) -> Result<Formula> {
        // F is closed, so no renaming happens and the supply is never drawn.
        self.subst_bot(&Formula::falsity(), &mut NameSupply::new())
    }

    /// Gödel–Gentzen negative translation. The result lies in the NA
    /// language.
    pub fn gg_translate(&self) -> Result<Formula> {
        Ok(match self.kind() {
            FormulaKind::Bot => {
                return Err(Error::Language(
                    "the negative translation is defined on HA/PA formulas; ⊥ is not one".into(),
                ))
            }
            FormulaKind::Atom(_) if self.is_falsity() => self.clone(),
            FormulaKind::Atom(_) => Formula::neg(Formula::neg(self.clone())),
            FormulaKind::Imp(a, b) => Formula::imp(a.gg_translate()?, b.gg_translate()?),
            FormulaKind::And(a, b) => Formula::and(a.gg_translate()?, b.gg_translate()?),
            FormulaKind::All(x, a) => Formula::all(x.clone(), a.gg_translate()?),
            FormulaKind::Or(a, b) => Formula::neg(Formula::and(
                Formula::neg(a.gg_translate()?),
                Formula::neg(b.gg_translate()?),
            )),
            FormulaKind::Ex(x, a) => {
                Formula::neg(Formula::all(x.clone(), Formula::neg(a.gg_translate()?)))
            }
        })
    }
}

/// Whether `a` uses only the connectives of `th`'s language.
pub fn in_language(a: &Formula, th: Theory) -> bool {
    a.min_theory().is_some_and(|m| m.le(th))
}

/// `A^S` as a free function.
pub fn subst_bot(a: &Formula, s: &Formula, supply: &mut NameSupply) -> Result<Formula> {
    a.subst_bot(s, supply)
}

pub fn gg_translate(a: &Formula) -> Result<Formula> {
    a.gg_translate()
}

impl PartialEq for Formula {
    fn eq(&self, other: &Formula) -> bool {
        self.ptr_eq(other) || canon::formula(self) == canon::formula(other)
    }
}

impl Eq for Formula {}

impl Hash for Formula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        canon::formula(self).hash(state)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bvar(name: &str, i: u64) -> Var {
        Var::new(name, i, Type::Bool)
    }

    fn atom_var(v: &Var) -> Formula {
        Formula::atom(Term::var(v.clone())).unwrap()
    }

    #[test]
    fn atom_requires_bool() {
        let e = Formula::atom(Term::zero()).unwrap_err();
        assert_eq!(e.code(), "type-error");
    }

    #[test]
    fn language_membership() {
        let x = bvar("x", 0);
        assert!(!in_language(&Formula::bot(), Theory::NA));
        assert!(in_language(&Formula::bot(), Theory::MA));
        assert!(!in_language(&Formula::bot(), Theory::HA));
        let ex = Formula::ex(x, Formula::truth());
        assert!(!in_language(&ex, Theory::MA));
        assert!(!in_language(&ex, Theory::NA));
        assert!(in_language(&ex, Theory::HA));
        assert!(in_language(&ex, Theory::PA));
        let mixed = Formula::or(Formula::bot(), Formula::truth());
        assert_eq!(mixed.min_theory(), None);
        for th in Theory::ALL {
            assert!(in_language(&Formula::truth(), th));
            assert!(!in_language(&mixed, th));
        }
    }

    #[test]
    fn bot_substitution_clauses() {
        let mut s = NameSupply::new();
        let target = Formula::truth();
        assert_eq!(Formula::bot().subst_bot(&target, &mut s).unwrap(), target);
        let p = atom_var(&bvar("p", 0));
        assert_eq!(p.subst_bot(&target, &mut s).unwrap(), p);
        let f = Formula::imp(Formula::bot(), Formula::and(p.clone(), Formula::bot()));
        assert_eq!(
            f.subst_bot(&target, &mut s).unwrap(),
            Formula::imp(target.clone(), Formula::and(p, target))
        );
        let e = Formula::or(Formula::bot(), Formula::bot())
            .subst_bot(&Formula::truth(), &mut s)
            .unwrap_err();
        assert_eq!(e.code(), "language-error");
    }

    #[test]
    fn bot_substitution_renames_binder() {
        let mut s = NameSupply::starting_at(50);
        let x = bvar("x", 0);
        let ax = atom_var(&x);
        let got = Formula::all(x.clone(), Formula::bot())
            .subst_bot(&ax, &mut s)
            .unwrap();
        let (bound, body) = got.as_all().unwrap();
        assert_ne!(bound, &x);
        assert_eq!(body, &ax);
        // the free x of the substituted formula stays free
        assert!(got.free_vars().contains(&x));
    }

    #[test]
    fn gg_examples() {
        let t = Formula::atom(Term::var(bvar("b", 0))).unwrap();
        assert_eq!(
            Formula::falsity().gg_translate().unwrap(),
            Formula::falsity()
        );
        assert_eq!(
            t.gg_translate().unwrap(),
            Formula::neg(Formula::neg(t.clone()))
        );
        let x = Var::new("x", 0, Type::Nat);
        assert_eq!(
            Formula::ex(x.clone(), t.clone()).gg_translate().unwrap(),
            Formula::neg(Formula::all(
                x,
                Formula::neg(Formula::neg(Formula::neg(t.clone())))
            ))
        );
        assert_eq!(
            Formula::or(t.clone(), Formula::falsity())
                .gg_translate()
                .unwrap(),
            Formula::neg(Formula::and(
                Formula::neg(Formula::neg(Formula::neg(t))),
                Formula::neg(Formula::falsity())
            ))
        );
        assert_eq!(
            Formula::bot().gg_translate().unwrap_err().code(),
            "language-error"
        );
    }

    #[test]
    fn weak_connectives_expand_literally() {
        let a = Formula::truth();
        let b = Formula::falsity();
        let x = bvar("x", 0);
        assert_eq!(
            Formula::weak_or(a.clone(), b.clone()),
            Formula::neg(Formula::and(Formula::neg(a.clone()), Formula::neg(b.clone())))
        );
        assert_eq!(
            Formula::weak_exists(x.clone(), a.clone()),
            Formula::neg(Formula::all(x, Formula::neg(a.clone())))
        );
        assert_eq!(
            Formula::weak_and(a.clone(), b.clone()),
            Formula::neg(Formula::imp(a, Formula::neg(b)))
        );
    }

    #[test]
    fn var_substitution_examples() {
        let mut s = NameSupply::starting_at(10);
        let x = bvar("x", 0);
        let y = bvar("y", 1);
        let bound = Formula::all(x.clone(), atom_var(&x));
        assert_eq!(bound.subst_var(&x, &Term::tt(), &mut s).unwrap(), bound);
        assert_eq!(
            atom_var(&x).subst_var(&x, &Term::tt(), &mut s).unwrap(),
            Formula::truth()
        );
        let f = Formula::all(y.clone(), atom_var(&x));
        let got = f.subst_var(&x, &Term::var(y.clone()), &mut s).unwrap();
        let (b, body) = got.as_all().unwrap();
        assert_ne!(b, &y);
        assert_eq!(body, &atom_var(&y));
        assert_eq!(got.free_vars().into_iter().collect::<Vec<_>>(), vec![y]);
        assert_eq!(
            f.subst_var(&x, &Term::zero(), &mut s).unwrap_err().code(),
            "type-error"
        );
    }

    #[test]
    fn alpha_equality_under_binders() {
        let x = bvar("x", 0);
        let y = bvar("y", 0);
        assert_eq!(
            Formula::all(x.clone(), atom_var(&x)),
            Formula::all(y.clone(), atom_var(&y))
        );
        assert_ne!(
            Formula::all(x.clone(), atom_var(&x)),
            Formula::ex(y.clone(), atom_var(&y))
        );
        assert_ne!(
            Formula::all(x.clone(), atom_var(&y)),
            Formula::all(y.clone(), atom_var(&y))
        );
    }
}
