use super::{app, fresh_bool, hyp, inst, lam, supply_above, truth};
use crate::error::{Error, Result};
use crate::formula::{in_language, Formula, FormulaKind};
use crate::kernel::{Axiom, Proof};
use crate::syntax::{NameSupply, Term};
use crate::theory::Theory;

/// A closed proof of `F → A` in `th`.
pub fn prove_efq(a: &Formula, th: Theory) -> Result<Proof> {
    if !in_language(a, th) {
        return Err(Error::Language(format!("{a} is not a formula of {th}")));
    }
    let mut supply = supply_above([a]);
    efq_with(a, th, &mut supply)
}

pub(crate) fn efq_with(a: &Formula, th: Theory, supply: &mut NameSupply) -> Result<Proof> {
    let (u, pu) = hyp("u", Formula::falsity(), supply)?;
    match a.kind() {
        FormulaKind::Bot => Proof::axiom(Axiom::BotPlus, th),
        FormulaKind::Atom(t) => {
            // C^{b, atom b} at t gives T → F → atom t.
            let b = fresh_bool(supply);
            let cases = Proof::axiom(
                Axiom::BoolCases {
                    body: Formula::atom(Term::var(b.clone()))?,
                    var: b,
                },
                th,
            )?;
            app(&inst(&cases, t.clone(), supply)?, truth()?)
        }
        FormulaKind::Imp(b, c) => {
            let ec = efq_with(c, th, supply)?;
            let (v, _) = hyp("v", b.clone(), supply)?;
            lam(&u, lam(&v, app(&ec, pu)?)?)
        }
        FormulaKind::And(b, c) => {
            let eb = efq_with(b, th, supply)?;
            let ec = efq_with(c, th, supply)?;
            lam(&u, Proof::and_intro(app(&eb, pu.clone())?, app(&ec, pu)?)?)
        }
        FormulaKind::All(x, b) => {
            let eb = efq_with(b, th, supply)?;
            lam(&u, Proof::all_intro(x.clone(), app(&eb, pu)?)?)
        }
        FormulaKind::Or(b, c) => {
            let eb = efq_with(b, th, supply)?;
            let intro = Proof::axiom(Axiom::OrIntroL(b.clone(), c.clone()), th)?;
            lam(&u, app(&intro, app(&eb, pu)?)?)
        }
        FormulaKind::Ex(x, b) => {
            let eb = efq_with(b, th, supply)?;
            let intro = Proof::axiom(
                Axiom::ExIntro {
                    body: b.clone(),
                    var: x.clone(),
                    witness: Term::var(x.clone()),
                },
                th,
            )?;
            lam(&u, app(&intro, app(&eb, pu)?)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::ProofKind;
    use crate::syntax::{Type, Var};

    fn check(a: &Formula, th: Theory) -> Proof {
        let p = prove_efq(a, th).unwrap();
        assert!(p.is_closed());
        assert_eq!(p.conclusion(), &Formula::imp(Formula::falsity(), a.clone()));
        assert!(p.theory().le(th));
        p
    }

    #[test]
    fn bot_is_botplus() {
        let p = check(&Formula::bot(), Theory::MA);
        assert!(matches!(p.kind(), ProofKind::Axiom(Axiom::BotPlus)));
    }

    #[test]
    fn atoms_and_connectives() {
        let x = Var::new("x", 0, Type::Nat);
        let p = Formula::atom(Term::var(Var::new("p", 1, Type::Bool))).unwrap();
        check(&Formula::truth(), Theory::NA);
        check(&Formula::and(p.clone(), Formula::truth()), Theory::NA);
        check(&Formula::all(x.clone(), Formula::imp(p.clone(), p.clone())), Theory::NA);
        check(&Formula::ex(x, Formula::or(p.clone(), p)), Theory::HA);
    }

    #[test]
    fn language_checked() {
        assert_eq!(prove_efq(&Formula::bot(), Theory::NA).unwrap_err().code(), "language-error");
    }
}
