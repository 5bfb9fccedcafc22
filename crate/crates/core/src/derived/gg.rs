use super::{app, falsity_id, fresh_bool, fst, hyp, inst, lam, snd, supply_above, truth};
use crate::error::{Error, Result};
use crate::formula::{Formula, FormulaKind};
use crate::kernel::{Axiom, Proof};
use crate::syntax::{NameSupply, Term};
use crate::theory::Theory;

/// A closed NA proof of `(A → A^¬¬) ∧ (A^¬¬ → A)`.
pub fn prove_gg_equiv(a: &Formula) -> Result<Proof> {
    if a.has_bot() || a.has_strong() {
        return Err(Error::Language(format!("{a} is not an NA formula")));
    }
    let mut supply = supply_above([a]);
    let (to, from) = equiv(a, &mut supply)?;
    Proof::and_intro(to, from)
}

/// Proofs of `A → A^¬¬` and `A^¬¬ → A`.
fn equiv(a: &Formula, supply: &mut NameSupply) -> Result<(Proof, Proof)> {
    let ga = a.gg_translate()?;
    match a.kind() {
        FormulaKind::Atom(_) if a.is_falsity() => Ok((falsity_id(supply)?, falsity_id(supply)?)),
        FormulaKind::Atom(t) => {
            // A → ¬¬A:  λu λv. v u
            let (u, pu) = hyp("u", a.clone(), supply)?;
            let (v, pv) = hyp("v", Formula::neg(a.clone()), supply)?;
            let to = lam(&u, lam(&v, app(&pv, pu)?)?)?;

            // ¬¬A → A by cases on B(b) := ¬¬atom b → atom b.
            let b = fresh_bool(supply);
            let ab = Formula::atom(Term::var(b.clone()))?;
            let body = Formula::imp(Formula::neg(Formula::neg(ab.clone())), ab);
            let cases = Proof::axiom(Axiom::BoolCases { var: b, body }, Theory::NA)?;
            let (w, _) = hyp("w", Formula::neg(Formula::neg(Formula::truth())), supply)?;
            let at_tt = lam(&w, truth()?)?;
            let nnf = Formula::neg(Formula::neg(Formula::falsity()));
            let (v, pv) = hyp("v", nnf, supply)?;
            let at_ff = lam(&v, app(&pv, falsity_id(supply)?)?)?;
            let from = app(&app(&inst(&cases, t.clone(), supply)?, at_tt)?, at_ff)?;
            Ok((to, from))
        }
        FormulaKind::Imp(b, c) => {
            let (b_to, b_from) = equiv(b, supply)?;
            let (c_to, c_from) = equiv(c, supply)?;
            let (gb, _) = ga.as_imp().expect("translation keeps →");

            let (f, pf) = hyp("f", a.clone(), supply)?;
            let (u, pu) = hyp("u", gb.clone(), supply)?;
            let to = lam(&f, lam(&u, app(&c_to, app(&pf, app(&b_from, pu)?)?)?)?)?;

            let (g, pg) = hyp("g", ga.clone(), supply)?;
            let (u, pu) = hyp("u", b.clone(), supply)?;
            let from = lam(&g, lam(&u, app(&c_from, app(&pg, app(&b_to, pu)?)?)?)?)?;
            Ok((to, from))
        }
        FormulaKind::And(b, c) => {
            let (b_to, b_from) = equiv(b, supply)?;
            let (c_to, c_from) = equiv(c, supply)?;

            let (p, pp) = hyp("p", a.clone(), supply)?;
            let to = lam(
                &p,
                Proof::and_intro(app(&b_to, fst(&pp)?)?, app(&c_to, snd(&pp)?)?)?,
            )?;
            let (q, pq) = hyp("q", ga.clone(), supply)?;
            let from = lam(
                &q,
                Proof::and_intro(app(&b_from, fst(&pq)?)?, app(&c_from, snd(&pq)?)?)?,
            )?;
            Ok((to, from))
        }
        FormulaKind::All(x, b) => {
            let (b_to, b_from) = equiv(b, supply)?;
            let xt = Term::var(x.clone());

            let (h, ph) = hyp("h", a.clone(), supply)?;
            let body = app(&b_to, inst(&ph, xt.clone(), supply)?)?;
            let to = lam(&h, Proof::all_intro(x.clone(), body)?)?;

            let (h, ph) = hyp("h", ga.clone(), supply)?;
            let body = app(&b_from, inst(&ph, xt, supply)?)?;
            let from = lam(&h, Proof::all_intro(x.clone(), body)?)?;
            Ok((to, from))
        }
        FormulaKind::Bot | FormulaKind::Or(..) | FormulaKind::Ex(..) => {
            Err(Error::Language(format!("{a} is not an NA formula")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{Type, Var};

    fn check(a: &Formula) {
        let p = prove_gg_equiv(a).unwrap();
        let g = a.gg_translate().unwrap();
        assert!(p.is_closed());
        assert_eq!(p.theory(), Theory::NA);
        assert_eq!(
            p.conclusion(),
            &Formula::and(Formula::imp(a.clone(), g.clone()), Formula::imp(g, a.clone()))
        );
    }

    #[test]
    fn base_cases() {
        check(&Formula::falsity());
        check(&Formula::truth());
        let x = Var::new("x", 0, Type::Bool);
        check(&Formula::atom(Term::var(x.clone())).unwrap());
        check(&Formula::all(x, Formula::truth()));
    }

    #[test]
    fn compound() {
        let x = Var::new("x", 0, Type::Bool);
        let px = Formula::atom(Term::var(x.clone())).unwrap();
        let f = Formula::all(
            x,
            Formula::imp(Formula::and(px.clone(), Formula::falsity()), Formula::neg(px)),
        );
        check(&f);
    }

    #[test]
    fn rejects_bot() {
        assert!(prove_gg_equiv(&Formula::bot()).is_err());
    }
}
