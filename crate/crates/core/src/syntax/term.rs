use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::canon;
use super::supply::NameSupply;
use super::types::Type;
use crate::error::{Error, Result};

/// Object variable. Identity is the full `(name, index, type)` triple.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    name: Arc<str>,
    index: u64,
    ty: Type,
}

impl Var {
    pub fn new(name: &str, index: u64, ty: Type) -> Var {
        Var {
            name: name.into(),
            index,
            ty,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn ty(&self) -> &Type {
        &self.ty
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}:{}", self.name, self.index, self.ty)
    }
}

/// Constructors and destructors, each carrying the type parameters that
/// fix its type.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Const {
    /// `τ → ρ → τ×ρ`
    Pair(Type, Type),
    Tt,
    Ff,
    Zero,
    Succ,
    /// `nil : L(τ)`
    Nil(Type),
    /// `τ → L(τ) → L(τ)`
    Cons(Type),
    /// `split_{ρ,σ}^τ : ρ×σ → (ρ→σ→τ) → τ`, stored as `(ρ, σ, τ)`
    Split(Type, Type, Type),
    /// `Cases^τ : 𝔹 → τ → τ → τ`
    Cases(Type),
    /// `R_ℕ^τ : ℕ → τ → (ℕ→τ→τ) → τ`
    RecNat(Type),
    /// `R_{L(ρ)}^τ : L(ρ) → τ → (ρ→L(ρ)→τ→τ) → τ`, stored as `(ρ, τ)`
    RecList(Type, Type),
}

impl Const {
    pub fn ty(&self) -> Type {
        use Type::{Bool, Nat};
        match self {
            Const::Pair(t, r) => Type::arrows([t.clone(), r.clone()], Type::prod(t.clone(), r.clone())),
            Const::Tt | Const::Ff => Bool,
            Const::Zero => Nat,
            Const::Succ => Type::arrow(Nat, Nat),
            Const::Nil(t) => Type::list(t.clone()),
            Const::Cons(t) => Type::arrows(
                [t.clone(), Type::list(t.clone())],
                Type::list(t.clone()),
            ),
            Const::Split(r, s, t) => Type::arrows(
                [
                    Type::prod(r.clone(), s.clone()),
                    Type::arrows([r.clone(), s.clone()], t.clone()),
                ],
                t.clone(),
            ),
            Const::Cases(t) => Type::arrows([Bool, t.clone(), t.clone()], t.clone()),
            Const::RecNat(t) => Type::arrows(
                [Nat, t.clone(), Type::arrows([Nat, t.clone()], t.clone())],
                t.clone(),
            ),
            Const::RecList(r, t) => Type::arrows(
                [
                    Type::list(r.clone()),
                    t.clone(),
                    Type::arrows([r.clone(), Type::list(r.clone()), t.clone()], t.clone()),
                ],
                t.clone(),
            ),
        }
    }
}

#[derive(Clone)]
pub enum TermKind {
    Var(Var),
    Const(Const),
    App(Term, Term),
    Lam(Var, Term),
}

struct TermNode {
    kind: TermKind,
    ty: Type,
}

/// A well-typed lambda term. Only the checked constructors below can make
/// one, so every `Term` value has a type.
///
/// Equality is alpha-equivalence.
#[derive(Clone)]
pub struct Term(Arc<TermNode>);

impl Term {
    fn mk(kind: TermKind, ty: Type) -> Term {
        Term(Arc::new(TermNode { kind, ty }))
    }

    pub fn var(v: Var) -> Term {
        let ty = v.ty().clone();
        Term::mk(TermKind::Var(v), ty)
    }

    pub fn constant(c: Const) -> Term {
        let ty = c.ty();
        Term::mk(TermKind::Const(c), ty)
    }

    pub fn tt() -> Term {
        Term::constant(Const::Tt)
    }

    pub fn ff() -> Term {
        Term::constant(Const::Ff)
    }

    pub fn zero() -> Term {
        Term::constant(Const::Zero)
    }

    pub fn succ(n: Term) -> Result<Term> {
        Term::app(Term::constant(Const::Succ), n)
    }

    pub fn app(fun: Term, arg: Term) -> Result<Term> {
        let Some((dom, cod)) = fun.ty().as_arrow() else {
            return Err(Error::Type(format!(
                "cannot apply {fun} of non-function type {}",
                fun.ty()
            )));
        };
        if dom != arg.ty() {
            return Err(Error::Type(format!(
                "argument {arg} has type {}, expected {dom}",
                arg.ty()
            )));
        }
        let cod = cod.clone();
        Ok(Term::mk(TermKind::App(fun, arg), cod))
    }

    /// Left-nested application `f a1 ... an`.
    pub fn apps(fun: Term, args: impl IntoIterator<Item = Term>) -> Result<Term> {
        args.into_iter().try_fold(fun, Term::app)
    }

    pub fn lam(bound: Var, body: Term) -> Term {
        let ty = Type::arrow(bound.ty().clone(), body.ty().clone());
        Term::mk(TermKind::Lam(bound, body), ty)
    }

    pub fn kind(&self) -> &TermKind {
        &self.0.kind
    }

    pub fn ty(&self) -> &Type {
        &self.0.ty
    }

    pub fn as_var(&self) -> Option<&Var> {
        match self.kind() {
            TermKind::Var(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_const(&self, c: &Const) -> bool {
        matches!(self.kind(), TermKind::Const(k) if k == c)
    }

    pub fn ptr_eq(&self, other: &Term) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn size(&self) -> usize {
        match self.kind() {
            TermKind::Var(_) | TermKind::Const(_) => 1,
            TermKind::App(f, a) => 1 + f.size() + a.size(),
            TermKind::Lam(_, b) => 1 + b.size(),
        }
    }

    pub fn has_free(&self, x: &Var) -> bool {
        match self.kind() {
            TermKind::Var(v) => v == x,
            TermKind::Const(_) => false,
            TermKind::App(f, a) => f.has_free(x) || a.has_free(x),
            TermKind::Lam(y, b) => y != x && b.has_free(x),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    pub(crate) fn collect_free(&self, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>) {
        match self.kind() {
            TermKind::Var(v) => {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
            TermKind::Const(_) => {}
            TermKind::App(f, a) => {
                f.collect_free(bound, out);
                a.collect_free(bound, out);
            }
            TermKind::Lam(y, b) => {
                bound.push(y.clone());
                b.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Largest variable index occurring anywhere, bound or free.
    pub fn max_index(&self) -> u64 {
        match self.kind() {
            TermKind::Var(v) => v.index(),
            TermKind::Const(_) => 0,
            TermKind::App(f, a) => f.max_index().max(a.max_index()),
            TermKind::Lam(y, b) => y.index().max(b.max_index()),
        }
    }

    /// Capture-avoiding substitution `self[x := s]`. Bound variables that
    /// would capture a free variable of `s` are renamed with indices drawn
    /// from `supply`.
    pub fn subst(&self, x: &Var, s: &Term, supply: &mut NameSupply) -> Result<Term> {
        if s.ty() != x.ty() {
            return Err(Error::Type(format!(
                "cannot substitute {s} of type {} for variable {x:?}",
                s.ty()
            )));
        }
        let fv = s.free_vars();
        Ok(self.subst_with(x, s, &fv, supply))
    }

    pub(crate) fn subst_with(
        &self,
        x: &Var,
        s: &Term,
        fv_s: &BTreeSet<Var>,
        supply: &mut NameSupply,
    ) -> Term {
        match self.kind() {
            TermKind::Var(v) if v == x => s.clone(),
            TermKind::Var(_) | TermKind::Const(_) => self.clone(),
            TermKind::App(f, a) => {
                let f2 = f.subst_with(x, s, fv_s, supply);
                let a2 = a.subst_with(x, s, fv_s, supply);
                Term::mk(TermKind::App(f2, a2), self.ty().clone())
            }
            TermKind::Lam(y, body) => {
                if y == x || !body.has_free(x) {
                    return self.clone();
                }
                if fv_s.contains(y) {
                    let fresh =
                        supply.fresh_var_avoiding(y, |v| fv_s.contains(v) || body.has_free(v));
                    let mut none = BTreeSet::new();
                    none.insert(fresh.clone());
                    let renamed = body.subst_with(y, &Term::var(fresh.clone()), &none, supply);
                    Term::lam(fresh, renamed.subst_with(x, s, fv_s, supply))
                } else {
                    Term::lam(y.clone(), body.subst_with(x, s, fv_s, supply))
                }
            }
        }
    }

    /// Subterms in pre-order, including `self`.
    pub fn subterms(&self) -> Vec<Term> {
        let mut out = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(t) = stack.pop() {
            match t.kind() {
                TermKind::App(f, a) => {
                    stack.push(a.clone());
                    stack.push(f.clone());
                }
                TermKind::Lam(_, b) => stack.push(b.clone()),
                _ => {}
            }
            out.push(t);
        }
        out
    }
}

/// Equality up to consistent renaming of bound variables.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    a == b
}

impl PartialEq for Term {
    fn eq(&self, other: &Term) -> bool {
        self.ptr_eq(other) || canon::term(self) == canon::term(other)
    }
}

impl Eq for Term {}

impl Hash for Term {
    fn hash<H: Hasher>(&self, state: &mut H) {
        canon::term(self).hash(state)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
