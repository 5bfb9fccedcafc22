use super::{app, app2, efq_with, falsity_id, fst, hyp, inst, lam, snd, supply_above, truth};
use crate::classes::in_q;
use crate::error::{Error, Result};
use crate::formula::{in_language, Formula, FormulaKind};
use crate::kernel::{Axiom, Proof};
use crate::syntax::{NameSupply, Term, Type, Var};
use crate::theory::Theory;

/// `(A → S) → (¬A → S) → S`
pub fn case_formula(a: &Formula, s: &Formula) -> Formula {
    Formula::imps(
        [
            Formula::imp(a.clone(), s.clone()),
            Formula::imp(Formula::neg(a.clone()), s.clone()),
        ],
        s.clone(),
    )
}

/// A closed proof of `(A → S) → (¬A → S) → S` for `A ∈ Q`.
pub fn prove_case_distinction(a: &Formula, s: &Formula, th: Theory) -> Result<Proof> {
    if !in_q(a) {
        return Err(Error::Class(format!("{a} is not in Q")));
    }
    if !in_language(s, th) {
        return Err(Error::Language(format!("{s} is not a formula of {th}")));
    }
    let mut supply = supply_above([a, s]);
    case_distinction_with(a, s, &mut supply)
}

pub(crate) fn case_distinction_with(
    a: &Formula,
    s: &Formula,
    supply: &mut NameSupply,
) -> Result<Proof> {
    match a.kind() {
        FormulaKind::Atom(t) => {
            // C^{b, B(b)} with B(b) := (atom b → S) → (¬atom b → S) → S
            let b = supply.fresh_var_avoiding(&Var::new("b", 0, Type::Bool), |v| s.has_free(v));
            let body = case_formula(&Formula::atom(Term::var(b.clone()))?, s);
            let ax = Axiom::BoolCases { var: b, body };
            let cases = Proof::axiom(ax.clone(), ax.min_theory()?)?;

            let (h1, p1) = hyp("h", Formula::imp(Formula::truth(), s.clone()), supply)?;
            let (h2, _) = hyp("k", Formula::imp(Formula::neg(Formula::truth()), s.clone()), supply)?;
            let at_tt = lam(&h1, lam(&h2, app(&p1, truth()?)?)?)?;

            let (h1, _) = hyp("h", Formula::imp(Formula::falsity(), s.clone()), supply)?;
            let (h2, p2) = hyp("k", Formula::imp(Formula::neg(Formula::falsity()), s.clone()), supply)?;
            let at_ff = lam(&h1, lam(&h2, app(&p2, falsity_id(supply)?)?)?)?;

            app2(&inst(&cases, t.clone(), supply)?, at_tt, at_ff)
        }
        FormulaKind::Imp(b, c) => {
            let neg_c = Formula::neg(c.clone());
            let ih_b = case_distinction_with(b, &Formula::imp(neg_c.clone(), s.clone()), supply)?;
            let ih_c = case_distinction_with(c, s, supply)?;
            let efq_c = efq_with(c, Theory::NA, supply)?;

            let (h1, p1) = hyp("h", Formula::imp(a.clone(), s.clone()), supply)?;
            let (h2, p2) = hyp("k", Formula::imp(Formula::neg(a.clone()), s.clone()), supply)?;

            // C → S:  λc. h1 (λb. c)
            let (cu, pc) = hyp("c", c.clone(), supply)?;
            let (bu, _) = hyp("b", b.clone(), supply)?;
            let c_to_s = lam(&cu, app(&p1, lam(&bu, pc)?)?)?;

            // B → ¬C → S:  λb λnc. h2 (λf. nc (f b))
            let (bu, pb) = hyp("b", b.clone(), supply)?;
            let (nc, pnc) = hyp("nc", neg_c.clone(), supply)?;
            let (f, pf) = hyp("f", a.clone(), supply)?;
            let left = lam(&bu, lam(&nc, app(&p2, lam(&f, app(&pnc, app(&pf, pb)?)?)?)?)?)?;

            // ¬B → ¬C → S:  λnb λnc. h1 (λb. efq_C (nb b))
            let (nb, pnb) = hyp("nb", Formula::neg(b.clone()), supply)?;
            let (nc, _) = hyp("nc", neg_c, supply)?;
            let (bu, pb) = hyp("b", b.clone(), supply)?;
            let b_to_c = lam(&bu, app(&efq_c, app(&pnb, pb)?)?)?;
            let right = lam(&nb, lam(&nc, app(&p1, b_to_c)?)?)?;

            let nc_to_s = app2(&ih_b, left, right)?;
            lam(&h1, lam(&h2, app2(&ih_c, c_to_s, nc_to_s)?)?)
        }
        FormulaKind::And(b, c) => {
            let ih_b = case_distinction_with(b, &Formula::imp(c.clone(), s.clone()), supply)?;
            let ih_c = case_distinction_with(c, s, supply)?;

            let (h1, p1) = hyp("h", Formula::imp(a.clone(), s.clone()), supply)?;
            let (h2, p2) = hyp("k", Formula::imp(Formula::neg(a.clone()), s.clone()), supply)?;

            // B → C → S:  λb λc. h1 (b, c)
            let (bu, pb) = hyp("b", b.clone(), supply)?;
            let (cu, pc) = hyp("c", c.clone(), supply)?;
            let left = lam(&bu, lam(&cu, app(&p1, Proof::and_intro(pb, pc)?)?)?)?;

            // ¬B → C → S:  λnb λc. h2 (λp. nb (π0 p))
            let (nb, pnb) = hyp("nb", Formula::neg(b.clone()), supply)?;
            let (cu, _) = hyp("c", c.clone(), supply)?;
            let (p, pp) = hyp("p", a.clone(), supply)?;
            let right = lam(&nb, lam(&cu, app(&p2, lam(&p, app(&pnb, fst(&pp)?)?)?)?)?)?;

            // ¬C → S:  λnc. h2 (λp. nc (π1 p))
            let (nc, pnc) = hyp("nc", Formula::neg(c.clone()), supply)?;
            let (p, pp) = hyp("p", a.clone(), supply)?;
            let nc_to_s = lam(&nc, app(&p2, lam(&p, app(&pnc, snd(&pp)?)?)?)?)?;

            let c_to_s = app2(&ih_b, left, right)?;
            lam(&h1, lam(&h2, app2(&ih_c, c_to_s, nc_to_s)?)?)
        }
        FormulaKind::All(x, body) if x.ty() == &Type::Bool => {
            // ∀b B(b) ↔ B(tt) ∧ B(ff), then the conjunction case.
            let at_tt = body.subst_var(x, &Term::tt(), supply)?;
            let at_ff = body.subst_var(x, &Term::ff(), supply)?;
            let k = Formula::and(at_tt, at_ff);
            let ih = case_distinction_with(&k, s, supply)?;

            // to: ∀b B → K
            let (h, ph) = hyp("h", a.clone(), supply)?;
            let to = lam(
                &h,
                Proof::and_intro(inst(&ph, Term::tt(), supply)?, inst(&ph, Term::ff(), supply)?)?,
            )?;
            // from: K → ∀b B
            let ax = Axiom::BoolCases {
                var: x.clone(),
                body: body.clone(),
            };
            let cases = Proof::axiom(ax.clone(), ax.min_theory()?)?;
            let (ku, pk) = hyp("q", k.clone(), supply)?;
            let at_x = app2(&inst(&cases, Term::var(x.clone()), supply)?, fst(&pk)?, snd(&pk)?)?;
            let from = lam(&ku, Proof::all_intro(x.clone(), at_x)?)?;

            let (h1, p1) = hyp("h", Formula::imp(a.clone(), s.clone()), supply)?;
            let (h2, p2) = hyp("k", Formula::imp(Formula::neg(a.clone()), s.clone()), supply)?;
            let (ku, pk) = hyp("q", k.clone(), supply)?;
            let k_to_s = lam(&ku, app(&p1, app(&from, pk)?)?)?;
            let (nk, pnk) = hyp("nq", Formula::neg(k), supply)?;
            let (au, pa) = hyp("a", a.clone(), supply)?;
            let nk_to_s = lam(&nk, app(&p2, lam(&au, app(&pnk, app(&to, pa)?)?)?)?)?;
            lam(&h1, lam(&h2, app2(&ih, k_to_s, nk_to_s)?)?)
        }
        _ => Err(Error::Class(format!("{a} is not in Q"))),
    }
}
