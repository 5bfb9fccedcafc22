//! Refined A-translation: from an MA proof of `D → ∀x(G → ⊥) → ⊥` to an HA
//! proof of `D^F → ∃x G^F`.

use crate::classes::{certify, flags, ClassId};
use crate::derived::{app, app2, hyp, inst, lam, subst_bot_proof};
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::kernel::{Axiom, Proof};
use crate::syntax::{NameSupply, Term, Var};
use crate::theory::Theory;

/// A checked premise together with the two certificates the translation
/// consumes.
#[derive(Clone, Debug)]
pub struct TranslationInput {
    premise: Proof,
    d: Formula,
    g: Formula,
    x: Var,
    cert_d: Proof,
    cert_g: Proof,
}

/// Reads `D`, `x`, `G` off `D → ∀x(G → ⊥) → ⊥`.
pub fn premise_parts(a: &Formula) -> Result<(Formula, Var, Formula)> {
    premise_shape(a).ok_or_else(|| {
        Error::Shape(format!("premise proves {a}, expected D → ∀x(G → ⊥) → ⊥"))
    })
}

fn premise_shape(a: &Formula) -> Option<(Formula, Var, Formula)> {
    let (d, rest) = a.as_imp()?;
    let (all, bot) = rest.as_imp()?;
    let (x, body) = all.as_all()?;
    let (g, bot2) = body.as_imp()?;
    (bot.is_bot() && bot2.is_bot()).then(|| (d.clone(), x.clone(), g.clone()))
}

fn check_certificate(p: &Proof, want: &Formula, what: &str) -> Result<()> {
    if !p.is_closed() {
        return Err(Error::Certificate(format!("{what} certificate has open assumptions")));
    }
    if !p.theory().le(Theory::MA) {
        return Err(Error::Certificate(format!(
            "{what} certificate needs {}, expected MA",
            p.theory()
        )));
    }
    if p.conclusion() != want {
        return Err(Error::Certificate(format!(
            "{what} certificate proves {}, expected {want}",
            p.conclusion()
        )));
    }
    Ok(())
}

impl TranslationInput {
    pub fn new(premise: Proof, cert_d: Proof, cert_g: Proof) -> Result<TranslationInput> {
        if !premise.theory().le(Theory::MA) {
            return Err(Error::Theory(format!(
                "premise needs {}, expected a proof in MA",
                premise.theory()
            )));
        }
        if !premise.is_closed() {
            return Err(Error::Shape("premise has open assumptions".into()));
        }
        let (d, x, g) = premise_parts(premise.conclusion())?;
        let df = d.bot_to_falsity()?;
        let gf = g.bot_to_falsity()?;
        check_certificate(&cert_d, &Formula::imp(df, d.clone()), "D")?;
        let bot = Formula::bot();
        let want_g = Formula::all(
            x.clone(),
            Formula::imps([g.clone(), Formula::imp(gf, bot.clone())], bot),
        );
        check_certificate(&cert_g, &want_g, "G")?;
        Ok(TranslationInput {
            premise,
            d,
            g,
            x,
            cert_d,
            cert_g,
        })
    }

    pub fn premise(&self) -> &Proof {
        &self.premise
    }
    pub fn d(&self) -> &Formula {
        &self.d
    }
    pub fn g(&self) -> &Formula {
        &self.g
    }
    pub fn x(&self) -> &Var {
        &self.x
    }

    fn reserve(&self, supply: &mut NameSupply) {
        for p in [&self.premise, &self.cert_d, &self.cert_g] {
            supply.reserve(p.max_index());
        }
    }
}

/// The MA proof of `D^F → ∀x(G^F → ⊥) → ⊥`:
/// `λd λk. P (c_D d) (λx'. λg. c_G x' g (k x'))`.
pub fn negative_form(input: &TranslationInput, supply: &mut NameSupply) -> Result<Proof> {
    input.reserve(supply);
    let df = input.d.bot_to_falsity()?;
    let gf = input.g.bot_to_falsity()?;
    let bot = Formula::bot();
    let kf = Formula::all(input.x.clone(), Formula::imp(gf, bot));

    let (d, pd) = hyp("d", df, supply)?;
    let (k, pk) = hyp("k", kf, supply)?;
    let y = supply.fresh_var(&input.x);
    let yt = Term::var(y.clone());
    let gy = input.g.subst_var(&input.x, &yt, supply)?;
    let (gu, pg) = hyp("g", gy, supply)?;
    let step = app2(&inst(&input.cert_g, yt.clone(), supply)?, pg, inst(&pk, yt, supply)?)?;
    let all_neg_g = Proof::all_intro(y, lam(&gu, step)?)?;
    let body = app2(&input.premise, app(&input.cert_d, pd)?, all_neg_g)?;
    lam(&d, lam(&k, body)?)
}

/// A closed HA proof of `D^F → ∃x G^F`.
pub fn refined_a_translate(input: &TranslationInput, supply: &mut NameSupply) -> Result<Proof> {
    let n = negative_form(input, supply)?;
    let gf = input.g.bot_to_falsity()?;
    let df = input.d.bot_to_falsity()?;
    let goal = Formula::ex(input.x.clone(), gf.clone());
    let n = subst_bot_proof(&n, &goal, supply)?;

    // ∀x'(G^F[x'] → ∃x G^F) from the introduction axiom for ∃
    let y = supply.fresh_var(&input.x);
    let intro = Proof::axiom(
        Axiom::ExIntro {
            body: gf,
            var: input.x.clone(),
            witness: Term::var(y.clone()),
        },
        Theory::HA,
    )?;
    let e = Proof::all_intro(y, intro)?;

    let (d, pd) = hyp("d", df.clone(), supply)?;
    let out = lam(&d, app2(&n, pd, e)?)?;

    let want = Formula::imp(df, goal);
    if !out.is_closed() || !out.theory().le(Theory::HA) || out.conclusion() != &want {
        return Err(Error::Shape(format!(
            "internal: translation produced {} instead of {want}",
            out.conclusion()
        )));
    }
    Ok(out)
}

/// The translation with both certificates synthesized from the classes.
pub fn a_translate_classified(
    d: &Formula,
    g: &Formula,
    x: &Var,
    premise: &Proof,
    supply: &mut NameSupply,
) -> Result<Proof> {
    if !flags(d)?.d {
        return Err(Error::Class(format!("{d} is not in D")));
    }
    if !flags(g)?.g {
        return Err(Error::Class(format!("{g} is not in G")));
    }
    let bot = Formula::bot();
    let neg_all = Formula::all(x.clone(), Formula::imp(g.clone(), bot.clone()));
    let want = Formula::imp(d.clone(), Formula::imp(neg_all, bot));
    if premise.conclusion() != &want {
        return Err(Error::Shape(format!(
            "premise proves {}, expected {want}",
            premise.conclusion()
        )));
    }
    let cert_d = certify(d, ClassId::Definite)?.expect("d ∈ D");
    // The certificate has no open assumptions, so x can be generalized.
    let cert_g = Proof::all_intro(x.clone(), certify(g, ClassId::Goal)?.expect("g ∈ G"))?;
    let input = TranslationInput::new(premise.clone(), cert_d, cert_g)?;
    refined_a_translate(&input, supply)
}

/// Packs several hypotheses and goals into one `D` and one `G` by
/// right-nested conjunction. No hypotheses give `T`.
pub fn pack_premises(ds: &[Formula], gs: &[Formula]) -> Result<(Formula, Formula)> {
    fn conj(fs: &[Formula]) -> Option<Formula> {
        let (last, init) = fs.split_last()?;
        Some(init.iter().rev().fold(last.clone(), |acc, f| Formula::and(f.clone(), acc)))
    }
    let g = conj(gs).ok_or(Error::EmptyGoal)?;
    Ok((conj(ds).unwrap_or_else(Formula::truth), g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::boundary_example;
    use crate::syntax::Type;

    /// `λd λk. k t w` for a given proof `w` of `G[x:=t]` from `d : D`.
    fn premise(
        d: &Formula,
        g: &Formula,
        x: &Var,
        t: Term,
        w: impl FnOnce(Proof) -> Result<Proof>,
    ) -> Proof {
        let mut s = NameSupply::new();
        s.reserve(d.max_index().max(g.max_index()).max(x.index()));
        let k = Formula::all(x.clone(), Formula::imp(g.clone(), Formula::bot()));
        let (du, pd) = hyp("d", d.clone(), &mut s).unwrap();
        let (ku, pk) = hyp("k", k, &mut s).unwrap();
        let body = app(&inst(&pk, t, &mut s).unwrap(), w(pd).unwrap()).unwrap();
        lam(&du, lam(&ku, body).unwrap()).unwrap()
    }

    #[test]
    fn truth_instance() {
        let n = Var::new("n", 0, Type::Nat);
        let t = Formula::truth();
        let p = premise(&t, &t, &n, Term::zero(), |_| crate::derived::truth());
        let out = a_translate_classified(&t, &t, &n, &p, &mut NameSupply::new()).unwrap();
        assert!(out.is_closed());
        assert_eq!(out.conclusion(), &Formula::imp(t.clone(), Formula::ex(n, t)));
    }

    #[test]
    fn boolean_witness() {
        let b = Var::new("b", 0, Type::Bool);
        let g = Formula::atom(Term::var(b.clone())).unwrap();
        let t = Formula::truth();
        let p = premise(&t, &g, &b, Term::tt(), |_| crate::derived::truth());
        let out = a_translate_classified(&t, &g, &b, &p, &mut NameSupply::new()).unwrap();
        assert_eq!(out.conclusion(), &Formula::imp(t, Formula::ex(b, g)));
        assert_eq!(out.theory(), Theory::HA);
    }

    #[test]
    fn bot_instance() {
        let n = Var::new("n", 0, Type::Nat);
        let bot = Formula::bot();
        let p = premise(&bot, &bot, &n, Term::zero(), Ok);
        let out = a_translate_classified(&bot, &bot, &n, &p, &mut NameSupply::new()).unwrap();
        let f = Formula::falsity();
        assert_eq!(out.conclusion(), &Formula::imp(f.clone(), Formula::ex(n, f)));
    }

    #[test]
    fn classified_and_certified_agree() {
        let n = Var::new("n", 0, Type::Nat);
        let bot = Formula::bot();
        let p = premise(&bot, &bot, &n, Term::zero(), Ok);
        let cd = certify(&bot, ClassId::Definite).unwrap().unwrap();
        let cg = Proof::all_intro(n.clone(), certify(&bot, ClassId::Goal).unwrap().unwrap()).unwrap();
        let input = TranslationInput::new(p.clone(), cd, cg).unwrap();
        let mut s = NameSupply::new();
        let neg = negative_form(&input, &mut s).unwrap();
        assert!(neg.theory().le(Theory::MA) && neg.is_closed());
        let a = refined_a_translate(&input, &mut s).unwrap();
        let b = a_translate_classified(&bot, &bot, &n, &p, &mut s).unwrap();
        assert_eq!(a.conclusion(), b.conclusion());
    }

    #[test]
    fn shape_and_certificate_errors() {
        let t = crate::derived::truth().unwrap();
        let e = TranslationInput::new(t.clone(), t.clone(), t.clone()).unwrap_err();
        assert_eq!(e.code(), "shape-error");

        let n = Var::new("n", 0, Type::Nat);
        let tf = Formula::truth();
        let p = premise(&tf, &tf, &n, Term::zero(), |_| crate::derived::truth());
        let e = TranslationInput::new(p, t.clone(), t).unwrap_err();
        assert_eq!(e.code(), "certificate-error");
    }

    #[test]
    fn unclassified_hypothesis() {
        let (st, _) = boundary_example().unwrap();
        let n = Var::new("n", 900, Type::Nat);
        let t = Formula::truth();
        let p = premise(&st, &t, &n, Term::zero(), |_| crate::derived::truth());
        let e = a_translate_classified(&st, &t, &n, &p, &mut NameSupply::new()).unwrap_err();
        assert_eq!(e.code(), "class-error");
    }

    #[test]
    fn packing() {
        let p = Formula::atom(Term::var(Var::new("p", 0, Type::Bool))).unwrap();
        let q = Formula::atom(Term::var(Var::new("q", 1, Type::Bool))).unwrap();
        assert_eq!(pack_premises(&[], std::slice::from_ref(&p)).unwrap(), (Formula::truth(), p.clone()));
        assert_eq!(
            pack_premises(&[p.clone(), q.clone()], &[q.clone(), p.clone()]).unwrap(),
            (Formula::and(p.clone(), q.clone()), Formula::and(q.clone(), p.clone()))
        );
        assert_eq!(pack_premises(std::slice::from_ref(&p), std::slice::from_ref(&q)).unwrap(), (p.clone(), q));
        assert_eq!(pack_premises(&[p], &[]).unwrap_err().code(), "empty-goal");
    }
}
