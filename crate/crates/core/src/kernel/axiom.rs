use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::syntax::{Const, NameSupply, Term, Type, Var};
use crate::theory::Theory;

/// Axiom schemes, instantiated explicitly by their parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `T`
    Truth,
    /// `∀b (A(tt) → A(ff) → A(b))`
    BoolCases { var: Var, body: Formula },
    /// `∀n (A(0) → ∀n (A(n) → A(S n)) → A(n))`
    IndNat { var: Var, body: Formula },
    /// `∀l (A(nil) → ∀x ∀l (A(l) → A(x :: l)) → A(l))`
    IndList { list: Var, elem: Var, body: Formula },
    /// `F → ⊥`
    BotPlus,
    /// `A → A ∨ B`
    OrIntroL(Formula, Formula),
    /// `B → A ∨ B`
    OrIntroR(Formula, Formula),
    /// `A ∨ B → (A → C) → (B → C) → C`
    OrElim(Formula, Formula, Formula),
    /// `A(t) → ∃x A(x)`
    ExIntro { body: Formula, var: Var, witness: Term },
    /// `∃x A → ∀x (A → C) → C`, with `x` not free in `C`
    ExElim { body: Formula, var: Var, concl: Formula },
    /// `A ∨ ¬A`
    Lem(Formula),
}

impl Axiom {
    /// Least theory offering this axiom, ignoring the language of its
    /// formula parameters.
    pub fn base_theory(&self) -> Theory {
        match self {
            Axiom::Truth | Axiom::BoolCases { .. } | Axiom::IndNat { .. } | Axiom::IndList { .. } => {
                Theory::NA
            }
            Axiom::BotPlus => Theory::MA,
            Axiom::OrIntroL(..)
            | Axiom::OrIntroR(..)
            | Axiom::OrElim(..)
            | Axiom::ExIntro { .. }
            | Axiom::ExElim { .. } => Theory::HA,
            Axiom::Lem(_) => Theory::PA,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Truth => "truth",
            Axiom::BoolCases { .. } => "bool-cases",
            Axiom::IndNat { .. } => "ind-nat",
            Axiom::IndList { .. } => "ind-list",
            Axiom::BotPlus => "botplus",
            Axiom::OrIntroL(..) => "or-intro-l",
            Axiom::OrIntroR(..) => "or-intro-r",
            Axiom::OrElim(..) => "or-elim",
            Axiom::ExIntro { .. } => "ex-intro",
            Axiom::ExElim { .. } => "ex-elim",
            Axiom::Lem(_) => "lem",
        }
    }

    /// The instantiated formula, after checking the scheme's side
    /// conditions.
    pub fn formula(&self) -> Result<Formula> {
        // Renamed binders only need indices above everything in the
        // parameters.
        let mut supply = NameSupply::new();
        supply.reserve(self.max_index());
        match self {
            Axiom::Truth => Ok(Formula::truth()),
            Axiom::BotPlus => Ok(Formula::imp(Formula::falsity(), Formula::bot())),
            Axiom::BoolCases { var, body } => {
                expect_type(var, &Type::Bool, "bool-cases")?;
                let at_tt = body.subst_var(var, &Term::tt(), &mut supply)?;
                let at_ff = body.subst_var(var, &Term::ff(), &mut supply)?;
                Ok(Formula::all(
                    var.clone(),
                    Formula::imps([at_tt, at_ff], body.clone()),
                ))
            }
            Axiom::IndNat { var, body } => {
                expect_type(var, &Type::Nat, "ind-nat")?;
                let at_zero = body.subst_var(var, &Term::zero(), &mut supply)?;
                let succ = Term::succ(Term::var(var.clone()))?;
                let at_succ = body.subst_var(var, &succ, &mut supply)?;
                let step = Formula::all(var.clone(), Formula::imp(body.clone(), at_succ));
                Ok(Formula::all(
                    var.clone(),
                    Formula::imps([at_zero, step], body.clone()),
                ))
            }
            Axiom::IndList { list, elem, body } => {
                let Some(elem_ty) = list.ty().list_elem() else {
                    return Err(Error::Type(format!(
                        "ind-list: {list:?} does not have a list type"
                    )));
                };
                expect_type(elem, elem_ty, "ind-list element")?;
                if body.has_free(elem) {
                    return Err(Error::Eigenvariable(format!(
                        "ind-list: element variable {elem:?} is free in the induction formula"
                    )));
                }
                let nil = Term::constant(Const::Nil(elem_ty.clone()));
                let cons = Term::apps(
                    Term::constant(Const::Cons(elem_ty.clone())),
                    [Term::var(elem.clone()), Term::var(list.clone())],
                )?;
                let at_nil = body.subst_var(list, &nil, &mut supply)?;
                let at_cons = body.subst_var(list, &cons, &mut supply)?;
                let step = Formula::all(
                    elem.clone(),
                    Formula::all(list.clone(), Formula::imp(body.clone(), at_cons)),
                );
                Ok(Formula::all(
                    list.clone(),
                    Formula::imps([at_nil, step], body.clone()),
                ))
            }
            Axiom::OrIntroL(a, b) => Ok(Formula::imp(a.clone(), Formula::or(a.clone(), b.clone()))),
            Axiom::OrIntroR(a, b) => Ok(Formula::imp(b.clone(), Formula::or(a.clone(), b.clone()))),
            Axiom::OrElim(a, b, c) => Ok(Formula::imps(
                [
                    Formula::or(a.clone(), b.clone()),
                    Formula::imp(a.clone(), c.clone()),
                    Formula::imp(b.clone(), c.clone()),
                ],
                c.clone(),
            )),
            Axiom::ExIntro { body, var, witness } => {
                let instance = body.subst_var(var, witness, &mut supply)?;
                Ok(Formula::imp(instance, Formula::ex(var.clone(), body.clone())))
            }
            Axiom::ExElim { body, var, concl } => {
                if concl.has_free(var) {
                    return Err(Error::Eigenvariable(format!(
                        "ex-elim: {var:?} is free in the conclusion {concl}"
                    )));
                }
                Ok(Formula::imps(
                    [
                        Formula::ex(var.clone(), body.clone()),
                        Formula::all(var.clone(), Formula::imp(body.clone(), concl.clone())),
                    ],
                    concl.clone(),
                ))
            }
            Axiom::Lem(a) => Ok(Formula::or(a.clone(), Formula::neg(a.clone()))),
        }
    }

    pub fn max_index(&self) -> u64 {
        let fs = self.formula_params();
        let vs = self.var_params();
        let mut m = fs.iter().map(|f| f.max_index()).max().unwrap_or(0);
        m = m.max(vs.iter().map(|v| v.index()).max().unwrap_or(0));
        if let Axiom::ExIntro { witness, .. } = self {
            m = m.max(witness.max_index());
        }
        m
    }

    pub fn formula_params(&self) -> Vec<&Formula> {
        match self {
            Axiom::Truth | Axiom::BotPlus => vec![],
            Axiom::BoolCases { body, .. }
            | Axiom::IndNat { body, .. }
            | Axiom::IndList { body, .. }
            | Axiom::ExIntro { body, .. } => vec![body],
            Axiom::ExElim { body, concl, .. } => vec![body, concl],
            Axiom::OrIntroL(a, b) | Axiom::OrIntroR(a, b) => vec![a, b],
            Axiom::OrElim(a, b, c) => vec![a, b, c],
            Axiom::Lem(a) => vec![a],
        }
    }

    fn var_params(&self) -> Vec<&Var> {
        match self {
            Axiom::BoolCases { var, .. }
            | Axiom::IndNat { var, .. }
            | Axiom::ExIntro { var, .. }
            | Axiom::ExElim { var, .. } => vec![var],
            Axiom::IndList { list, elem, .. } => vec![list, elem],
            _ => vec![],
        }
    }

    /// Least theory that offers the axiom and contains its formula.
    pub fn min_theory(&self) -> Result<Theory> {
        let f = self.formula()?;
        let lang = f.min_theory().ok_or_else(|| {
            Error::Theory(format!(
                "{} instance {f} mixes ⊥ with ∨/∃; no theory contains it",
                self.name()
            ))
        })?;
        self.base_theory().join(lang).ok_or_else(|| {
            Error::Theory(format!(
                "{} is an {} axiom but its formula needs {lang}",
                self.name(),
                self.base_theory()
            ))
        })
    }

    /// Replace a free object variable in the parameters, renaming the
    /// scheme's own bound variables if `t` mentions them.
    pub fn subst_var(&self, x: &Var, t: &Term, supply: &mut NameSupply) -> Result<Axiom> {
        let sub = |f: &Formula, supply: &mut NameSupply| f.subst_var(x, t, supply);
        Ok(match self {
            Axiom::Truth | Axiom::BotPlus => self.clone(),
            Axiom::BoolCases { var, body } | Axiom::IndNat { var, body } => {
                if var == x {
                    return Ok(self.clone());
                }
                let (var, body) = rebind(var, body, t, supply);
                let body = sub(&body, supply)?;
                if matches!(self, Axiom::BoolCases { .. }) {
                    Axiom::BoolCases { var, body }
                } else {
                    Axiom::IndNat { var, body }
                }
            }
            Axiom::IndList { list, elem, body } => {
                if list == x {
                    return Ok(self.clone());
                }
                let (list, body) = rebind(list, body, t, supply);
                let elem = if t.has_free(elem) {
                    supply.fresh_var_avoiding(elem, |v| t.has_free(v) || body.has_free(v))
                } else {
                    elem.clone()
                };
                let body = sub(&body, supply)?;
                Axiom::IndList { list, elem, body }
            }
            Axiom::OrIntroL(a, b) => Axiom::OrIntroL(sub(a, supply)?, sub(b, supply)?),
            Axiom::OrIntroR(a, b) => Axiom::OrIntroR(sub(a, supply)?, sub(b, supply)?),
            Axiom::OrElim(a, b, c) => {
                Axiom::OrElim(sub(a, supply)?, sub(b, supply)?, sub(c, supply)?)
            }
            Axiom::Lem(a) => Axiom::Lem(sub(a, supply)?),
            Axiom::ExIntro { body, var, witness } => {
                let witness = witness.subst(x, t, supply)?;
                if var == x {
                    Axiom::ExIntro { body: body.clone(), var: var.clone(), witness }
                } else {
                    let (var, body) = rebind(var, body, t, supply);
                    let body = sub(&body, supply)?;
                    Axiom::ExIntro { body, var, witness }
                }
            }
            Axiom::ExElim { body, var, concl } => {
                let concl = sub(concl, supply)?;
                if var == x {
                    Axiom::ExElim { body: body.clone(), var: var.clone(), concl }
                } else {
                    let (var, body) = if t.has_free(var) {
                        let fresh = supply.fresh_var_avoiding(var, |v| {
                            t.has_free(v) || body.has_free(v) || concl.has_free(v)
                        });
                        let renamed = body.rename(var, &fresh, supply);
                        (fresh, renamed)
                    } else {
                        (var.clone(), body.clone())
                    };
                    let body = sub(&body, supply)?;
                    Axiom::ExElim { body, var, concl }
                }
            }
        })
    }

    /// The same scheme with `s` substituted for ⊥ in every formula
    /// parameter. Only schemes available in MA are accepted.
    pub fn subst_bot(&self, s: &Formula, supply: &mut NameSupply) -> Result<Axiom> {
        let fv = s.free_vars();
        let avoid = |var: &Var, body: &Formula, supply: &mut NameSupply| {
            if fv.contains(var) {
                let fresh = supply.fresh_var_avoiding(var, |v| fv.contains(v) || body.has_free(v));
                let renamed = body.rename(var, &fresh, supply);
                (fresh, renamed)
            } else {
                (var.clone(), body.clone())
            }
        };
        Ok(match self {
            Axiom::Truth => Axiom::Truth,
            Axiom::BotPlus => {
                return Err(Error::Shape(
                    "⊥⁺ has no ⊥-substitution instance as an axiom".into(),
                ))
            }
            Axiom::BoolCases { var, body } => {
                let (var, body) = avoid(var, body, supply);
                Axiom::BoolCases { body: body.subst_bot(s, supply)?, var }
            }
            Axiom::IndNat { var, body } => {
                let (var, body) = avoid(var, body, supply);
                Axiom::IndNat { body: body.subst_bot(s, supply)?, var }
            }
            Axiom::IndList { list, elem, body } => {
                let (list, body) = avoid(list, body, supply);
                let elem = if fv.contains(elem) {
                    supply.fresh_var_avoiding(elem, |v| fv.contains(v) || body.has_free(v))
                } else {
                    elem.clone()
                };
                Axiom::IndList { list, elem, body: body.subst_bot(s, supply)? }
            }
            _ => {
                return Err(Error::Language(format!(
                    "{} is not an MA axiom",
                    self.name()
                )))
            }
        })
    }
}

/// Rename `var` (bound in `body`) if the incoming term mentions it.
fn rebind(var: &Var, body: &Formula, t: &Term, supply: &mut NameSupply) -> (Var, Formula) {
    if t.has_free(var) {
        let fresh = supply.fresh_var_avoiding(var, |v| t.has_free(v) || body.has_free(v));
        let renamed = body.rename(var, &fresh, supply);
        (fresh, renamed)
    } else {
        (var.clone(), body.clone())
    }
}

fn expect_type(v: &Var, ty: &Type, what: &str) -> Result<()> {
    if v.ty() != ty {
        return Err(Error::Type(format!(
            "{what}: variable {v:?} must have type {ty}"
        )));
    }
    Ok(())
}
