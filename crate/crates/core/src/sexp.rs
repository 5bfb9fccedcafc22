//! S-expression syntax for types, terms, formulas and proofs.
//!
//! Printing goes through `Display`; reading goes through `lexpr` and then
//! the checked constructors, so anything read back is well-formed.

use std::fmt;

use lexpr::Value;
use thiserror::Error;

use crate::error::Error;
use crate::formula::{Formula, FormulaKind};
use crate::kernel::{Assumption, Axiom, Judgement, Proof, ProofKind, Side};
use crate::syntax::{Const, NameSupply, Term, TermKind, Type, Var};

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error(transparent)]
    Kernel(#[from] Error),
}

type Result<T> = std::result::Result<T, ReadError>;

fn syntax<T>(msg: impl Into<String>) -> Result<T> {
    Err(ReadError::Syntax(msg.into()))
}

// ---------------------------------------------------------------- printing

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Type::Var(name) => write!(f, "(tvar {name})"),
            Type::Bool => write!(f, "(bool)"),
            Type::Nat => write!(f, "(nat)"),
            Type::List(t) => write!(f, "(list {t})"),
            Type::Arrow(a, b) => write!(f, "(arrow {a} {b})"),
            Type::Prod(a, b) => write!(f, "(prod {a} {b})"),
        }
    }
}

struct VarForm<'a>(&'a Var);

impl fmt::Display for VarForm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.0;
        write!(f, "(var {} {} {})", v.name(), v.index(), v.ty())
    }
}

impl fmt::Display for Const {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Const::Pair(t, r) => write!(f, "(pair {t} {r})"),
            Const::Tt => write!(f, "(tt)"),
            Const::Ff => write!(f, "(ff)"),
            Const::Zero => write!(f, "(zero)"),
            Const::Succ => write!(f, "(succ)"),
            Const::Nil(t) => write!(f, "(nil {t})"),
            Const::Cons(t) => write!(f, "(cons {t})"),
            Const::Split(r, s, t) => write!(f, "(split {r} {s} {t})"),
            Const::Cases(t) => write!(f, "(cases {t})"),
            Const::RecNat(t) => write!(f, "(recnat {t})"),
            Const::RecList(r, t) => write!(f, "(reclist {r} {t})"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            TermKind::Var(v) => VarForm(v).fmt(f),
            TermKind::Const(c) => c.fmt(f),
            TermKind::App(a, b) => write!(f, "(app {a} {b})"),
            TermKind::Lam(x, b) => write!(f, "(lam {} {b})", VarForm(x)),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FormulaKind::Bot => write!(f, "(bot)"),
            FormulaKind::Atom(t) => write!(f, "(atom {t})"),
            FormulaKind::Imp(a, b) => write!(f, "(imp {a} {b})"),
            FormulaKind::And(a, b) => write!(f, "(and {a} {b})"),
            FormulaKind::Or(a, b) => write!(f, "(or {a} {b})"),
            FormulaKind::All(x, a) => write!(f, "(all {} {a})", VarForm(x)),
            FormulaKind::Ex(x, a) => write!(f, "(ex {} {a})", VarForm(x)),
        }
    }
}

impl fmt::Display for Assumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(assume {} {} {})", self.name(), self.index(), self.formula())
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(axiom {}", self.name())?;
        match self {
            Axiom::Truth | Axiom::BotPlus => {}
            Axiom::BoolCases { var, body } | Axiom::IndNat { var, body } => {
                write!(f, " {} {body}", VarForm(var))?
            }
            Axiom::IndList { list, elem, body } => {
                write!(f, " {} {} {body}", VarForm(list), VarForm(elem))?
            }
            Axiom::OrIntroL(a, b) | Axiom::OrIntroR(a, b) => write!(f, " {a} {b}")?,
            Axiom::OrElim(a, b, c) => write!(f, " {a} {b} {c}")?,
            Axiom::ExIntro { body, var, witness } => {
                write!(f, " {body} {} {witness}", VarForm(var))?
            }
            Axiom::ExElim { body, var, concl } => write!(f, " {body} {} {concl}", VarForm(var))?,
            Axiom::Lem(a) => write!(f, " {a}")?,
        }
        write!(f, ")")
    }
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ProofKind::Assume(u) => u.fmt(f),
            ProofKind::Axiom(ax) => ax.fmt(f),
            ProofKind::AndIntro(m, n) => write!(f, "(pair-pf {m} {n})"),
            ProofKind::Proj(Side::Left, m) => write!(f, "(proj0 {m})"),
            ProofKind::Proj(Side::Right, m) => write!(f, "(proj1 {m})"),
            ProofKind::ImpElim(m, n) => write!(f, "(app-pf {m} {n})"),
            ProofKind::ImpIntro(u, m) => write!(f, "(lam-pf {u} {m})"),
            ProofKind::AllElim(m, t) => write!(f, "(inst {m} {t})"),
            ProofKind::AllIntro(x, m) => write!(f, "(gen {} {m})", VarForm(x)),
        }
    }
}

impl fmt::Display for Judgement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.theory)?;
        for (id, a) in &self.assumptions {
            write!(f, " (assume {} {} {a})", id.name, id.index)?;
        }
        write!(f, " ⊢ {}", self.conclusion)
    }
}

// ----------------------------------------------------------------- reading

fn parse_value(src: &str) -> Result<Value> {
    lexpr::from_str(src).map_err(|e| ReadError::Syntax(e.to_string()))
}

/// Head symbol and argument list of a form `(head arg...)`.
fn form(v: &Value) -> Result<(&str, Vec<&Value>)> {
    let Some(iter) = v.list_iter() else {
        return syntax(format!("expected a parenthesized form, got {v}"));
    };
    let items: Vec<&Value> = iter.collect();
    let Some((head, rest)) = items.split_first() else {
        return syntax("empty form ()");
    };
    let Some(sym) = head.as_symbol() else {
        return syntax(format!("form head must be a symbol, got {head}"));
    };
    Ok((sym, rest.to_vec()))
}

fn arity(head: &str, args: &[&Value], n: usize) -> Result<()> {
    if args.len() != n {
        return syntax(format!("({head} ...) takes {n} argument(s), got {}", args.len()));
    }
    Ok(())
}

fn ident(v: &Value) -> Result<String> {
    if let Some(s) = v.as_symbol() {
        return Ok(s.to_string());
    }
    if let Some(s) = v.as_str() {
        return Ok(s.to_string());
    }
    syntax(format!("expected an identifier, got {v}"))
}

fn index(v: &Value) -> Result<u64> {
    v.as_u64()
        .map_or_else(|| syntax(format!("expected a natural number, got {v}")), Ok)
}

fn max_number(v: &Value) -> u64 {
    match v {
        Value::Number(n) => n.as_u64().unwrap_or(0),
        Value::Cons(c) => max_number(c.car()).max(max_number(c.cdr())),
        _ => 0,
    }
}

fn ty(v: &Value) -> Result<Type> {
    let (head, args) = form(v)?;
    let t = match head {
        "bool" => {
            arity(head, &args, 0)?;
            Type::Bool
        }
        "nat" => {
            arity(head, &args, 0)?;
            Type::Nat
        }
        "tvar" => {
            arity(head, &args, 1)?;
            Type::var(&ident(args[0])?)
        }
        "list" => {
            arity(head, &args, 1)?;
            Type::list(ty(args[0])?)
        }
        "arrow" => {
            arity(head, &args, 2)?;
            Type::arrow(ty(args[0])?, ty(args[1])?)
        }
        "prod" => {
            arity(head, &args, 2)?;
            Type::prod(ty(args[0])?, ty(args[1])?)
        }
        other => return syntax(format!("unknown type form ({other} ...)")),
    };
    Ok(t)
}

fn var(v: &Value) -> Result<Var> {
    let (head, args) = form(v)?;
    if head != "var" {
        return syntax(format!("expected (var NAME IDX TYPE), got ({head} ...)"));
    }
    arity(head, &args, 3)?;
    Ok(Var::new(&ident(args[0])?, index(args[1])?, ty(args[2])?))
}

fn term(v: &Value) -> Result<Term> {
    let (head, args) = form(v)?;
    let c = |c: Const| Ok(Term::constant(c));
    match head {
        "var" => Ok(Term::var(var(v)?)),
        "app" => {
            arity(head, &args, 2)?;
            Ok(Term::app(term(args[0])?, term(args[1])?)?)
        }
        "lam" => {
            arity(head, &args, 2)?;
            Ok(Term::lam(var(args[0])?, term(args[1])?))
        }
        "tt" | "ff" | "zero" | "succ" => {
            arity(head, &args, 0)?;
            c(match head {
                "tt" => Const::Tt,
                "ff" => Const::Ff,
                "zero" => Const::Zero,
                _ => Const::Succ,
            })
        }
        "nil" | "cons" | "cases" | "recnat" => {
            arity(head, &args, 1)?;
            let t = ty(args[0])?;
            c(match head {
                "nil" => Const::Nil(t),
                "cons" => Const::Cons(t),
                "cases" => Const::Cases(t),
                _ => Const::RecNat(t),
            })
        }
        "pair" | "reclist" => {
            arity(head, &args, 2)?;
            let (a, b) = (ty(args[0])?, ty(args[1])?);
            c(if head == "pair" { Const::Pair(a, b) } else { Const::RecList(a, b) })
        }
        "split" => {
            arity(head, &args, 3)?;
            c(Const::Split(ty(args[0])?, ty(args[1])?, ty(args[2])?))
        }
        other => syntax(format!("unknown term form ({other} ...)")),
    }
}

fn formula(v: &Value) -> Result<Formula> {
    let (head, args) = form(v)?;
    let f = match head {
        "bot" => {
            arity(head, &args, 0)?;
            Formula::bot()
        }
        "atom" => {
            arity(head, &args, 1)?;
            Formula::atom(term(args[0])?)?
        }
        "imp" | "and" | "or" => {
            arity(head, &args, 2)?;
            let (a, b) = (formula(args[0])?, formula(args[1])?);
            match head {
                "imp" => Formula::imp(a, b),
                "and" => Formula::and(a, b),
                _ => Formula::or(a, b),
            }
        }
        "all" | "ex" => {
            arity(head, &args, 2)?;
            let (x, a) = (var(args[0])?, formula(args[1])?);
            if head == "all" {
                Formula::all(x, a)
            } else {
                Formula::ex(x, a)
            }
        }
        other => return syntax(format!("unknown formula form ({other} ...)")),
    };
    Ok(f)
}

fn assumption(v: &Value) -> Result<Assumption> {
    let (head, args) = form(v)?;
    if head != "assume" {
        return syntax(format!("expected (assume NAME IDX FORMULA), got ({head} ...)"));
    }
    arity(head, &args, 3)?;
    Ok(Assumption::new(&ident(args[0])?, index(args[1])?, formula(args[2])?))
}

fn axiom(args: &[&Value]) -> Result<Axiom> {
    let Some((id, ps)) = args.split_first() else {
        return syntax("(axiom ID PARAMS...) needs an axiom name");
    };
    let id = ident(id)?;
    let want = |n: usize| arity(&format!("axiom {id}"), ps, n);
    let ax = match id.as_str() {
        "truth" => {
            want(0)?;
            Axiom::Truth
        }
        "botplus" => {
            want(0)?;
            Axiom::BotPlus
        }
        "bool-cases" | "ind-nat" => {
            want(2)?;
            let (var, body) = (var(ps[0])?, formula(ps[1])?);
            if id == "bool-cases" {
                Axiom::BoolCases { var, body }
            } else {
                Axiom::IndNat { var, body }
            }
        }
        "ind-list" => {
            want(3)?;
            Axiom::IndList {
                list: var(ps[0])?,
                elem: var(ps[1])?,
                body: formula(ps[2])?,
            }
        }
        "or-intro-l" | "or-intro-r" => {
            want(2)?;
            let (a, b) = (formula(ps[0])?, formula(ps[1])?);
            if id == "or-intro-l" {
                Axiom::OrIntroL(a, b)
            } else {
                Axiom::OrIntroR(a, b)
            }
        }
        "or-elim" => {
            want(3)?;
            Axiom::OrElim(formula(ps[0])?, formula(ps[1])?, formula(ps[2])?)
        }
        "ex-intro" => {
            want(3)?;
            Axiom::ExIntro {
                body: formula(ps[0])?,
                var: var(ps[1])?,
                witness: term(ps[2])?,
            }
        }
        "ex-elim" => {
            want(3)?;
            Axiom::ExElim {
                body: formula(ps[0])?,
                var: var(ps[1])?,
                concl: formula(ps[2])?,
            }
        }
        "lem" => {
            want(1)?;
            Axiom::Lem(formula(ps[0])?)
        }
        other => return syntax(format!("unknown axiom {other}")),
    };
    Ok(ax)
}

fn proof(v: &Value, supply: &mut NameSupply) -> Result<Proof> {
    let (head, args) = form(v)?;
    let p = match head {
        "assume" => Proof::assume(assumption(v)?)?,
        "axiom" => {
            let ax = axiom(&args)?;
            let th = ax.min_theory()?;
            Proof::axiom(ax, th)?
        }
        "pair-pf" | "app-pf" => {
            arity(head, &args, 2)?;
            let (m, n) = (proof(args[0], supply)?, proof(args[1], supply)?);
            if head == "pair-pf" {
                Proof::and_intro(m, n)?
            } else {
                Proof::imp_elim(m, n)?
            }
        }
        "proj0" | "proj1" => {
            arity(head, &args, 1)?;
            let side = if head == "proj0" { Side::Left } else { Side::Right };
            Proof::proj(side, proof(args[0], supply)?)?
        }
        "lam-pf" => {
            arity(head, &args, 2)?;
            Proof::imp_intro(assumption(args[0])?, proof(args[1], supply)?)?
        }
        "inst" => {
            arity(head, &args, 2)?;
            let m = proof(args[0], supply)?;
            Proof::all_elim(m, term(args[1])?, supply)?
        }
        "gen" => {
            arity(head, &args, 2)?;
            Proof::all_intro(var(args[0])?, proof(args[1], supply)?)?
        }
        other => return syntax(format!("unknown proof form ({other} ...)")),
    };
    Ok(p)
}

pub fn read_type(src: &str) -> Result<Type> {
    ty(&parse_value(src)?)
}

pub fn read_term(src: &str) -> Result<Term> {
    term(&parse_value(src)?)
}

pub fn read_formula(src: &str) -> Result<Formula> {
    formula(&parse_value(src)?)
}

/// Read a proof. Variables renamed during instantiation get indices above
/// every number in the input.
pub fn read_proof(src: &str) -> Result<Proof> {
    let v = parse_value(src)?;
    let mut supply = NameSupply::starting_at(max_number(&v).saturating_add(1));
    proof(&v, &mut supply)
}

/// Any toplevel form, dispatched on its head symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Type(Type),
    Term(Term),
    Formula(Formula),
    Proof(Proof),
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Type(t) => t.fmt(f),
            Item::Term(t) => t.fmt(f),
            Item::Formula(a) => a.fmt(f),
            Item::Proof(p) => p.fmt(f),
        }
    }
}

pub fn read_item(src: &str) -> Result<Item> {
    let v = parse_value(src)?;
    let (head, _) = form(&v)?;
    Ok(match head {
        "bool" | "nat" | "tvar" | "list" | "arrow" | "prod" => Item::Type(ty(&v)?),
        "bot" | "atom" | "imp" | "and" | "or" | "all" | "ex" => Item::Formula(formula(&v)?),
        "assume" | "axiom" | "pair-pf" | "app-pf" | "proj0" | "proj1" | "lam-pf" | "inst"
        | "gen" => {
            let mut supply = NameSupply::starting_at(max_number(&v).saturating_add(1));
            Item::Proof(proof(&v, &mut supply)?)
        }
        _ => Item::Term(term(&v)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::Theory;

    #[test]
    fn types_round_trip() {
        for s in ["(bool)", "(list (nat))", "(arrow (tvar a) (prod (bool) (nat)))"] {
            assert_eq!(read_type(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn term_forms() {
        let t = read_term("(app (succ) (zero))").unwrap();
        assert_eq!(t.ty(), &Type::Nat);
        let id = read_term("(lam (var x 0 (nat)) (var x 0 (nat)))").unwrap();
        assert_eq!(id.ty(), &Type::arrow(Type::Nat, Type::Nat));
        assert!(matches!(read_term("(app (zero) (zero))"), Err(ReadError::Kernel(_))));
        assert!(matches!(read_term("(frob)"), Err(ReadError::Syntax(_))));
    }

    #[test]
    fn truth_judgement() {
        let p = read_proof("(axiom truth)").unwrap();
        assert_eq!(p.inspect().to_string(), "NA ⊢ (atom (tt))");
    }

    #[test]
    fn proof_round_trip() {
        let src = "(lam-pf (assume u 0 (bot)) (assume u 0 (bot)))";
        let p = read_proof(src).unwrap();
        assert_eq!(p.to_string(), src);
        assert_eq!(p.theory(), Theory::MA);
        assert_eq!(read_proof(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn botplus_reads_at_ma() {
        let p = read_proof("(axiom botplus)").unwrap();
        assert_eq!(p.theory(), Theory::MA);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(read_proof("(app-pf (axiom truth)"), Err(ReadError::Syntax(_))));
        assert!(matches!(read_formula("(imp (bot))"), Err(ReadError::Syntax(_))));
    }
}
