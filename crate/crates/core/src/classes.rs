//! The classes Q, Q_F, D, G, R, I and certificates for their derivability
//! properties:
//!
//! * D: `D^F → D`
//! * G: `G → (G^F → ⊥) → ⊥`
//! * R: `(¬R^F → ⊥) → R`
//! * I: `I → I^F`

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::derived::{app, app2, case_distinction_with, efq_with, fst, hyp, inst, lam, snd, truth};
use crate::error::{Error, Result};
use crate::formula::{Formula, FormulaKind};
use crate::kernel::{Axiom, Proof};
use crate::syntax::{Const, NameSupply, Term, Type, Var};
use crate::theory::Theory;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum ClassId {
    Q,
    QF,
    Definite,
    Goal,
    Relevant,
    Irrelevant,
}

impl ClassId {
    pub const ALL: [ClassId; 6] = [
        ClassId::Definite,
        ClassId::Goal,
        ClassId::Relevant,
        ClassId::Irrelevant,
        ClassId::Q,
        ClassId::QF,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassId::Q => "Q",
            ClassId::QF => "QF",
            ClassId::Definite => "D",
            ClassId::Goal => "G",
            ClassId::Relevant => "R",
            ClassId::Irrelevant => "I",
        }
    }

    /// The property a certificate for `a` in this class proves. For Q it is
    /// case distinction into ⊥; for Q_F the same for `A^F`.
    pub fn property(self, a: &Formula) -> Result<Formula> {
        let af = a.bot_to_falsity()?;
        let bot = Formula::bot();
        Ok(match self {
            ClassId::Definite => Formula::imp(af, a.clone()),
            ClassId::Goal => Formula::imps([a.clone(), Formula::imp(af, bot.clone())], bot),
            ClassId::Relevant => {
                Formula::imp(Formula::imp(Formula::neg(af), bot), a.clone())
            }
            ClassId::Irrelevant => Formula::imp(a.clone(), af),
            ClassId::Q => crate::derived::case_formula(a, &bot),
            ClassId::QF => crate::derived::case_formula(&af, &bot),
        })
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassId {
    type Err = Error;
    fn from_str(s: &str) -> Result<ClassId> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Class(format!("unknown class {s}")))
    }
}

/// Membership flags, computed by structural recursion.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Flags {
    pub q: bool,
    pub qf: bool,
    pub d: bool,
    pub g: bool,
    pub r: bool,
    pub i: bool,
}

impl Flags {
    pub fn get(&self, c: ClassId) -> bool {
        match c {
            ClassId::Q => self.q,
            ClassId::QF => self.qf,
            ClassId::Definite => self.d,
            ClassId::Goal => self.g,
            ClassId::Relevant => self.r,
            ClassId::Irrelevant => self.i,
        }
    }
}

/// `A ∈ Q`. Formulas with ∨, ∃ or ⊥ are never in Q.
pub fn in_q(a: &Formula) -> bool {
    match a.kind() {
        FormulaKind::Atom(_) => true,
        FormulaKind::Bot | FormulaKind::Or(..) | FormulaKind::Ex(..) => false,
        FormulaKind::Imp(b, c) | FormulaKind::And(b, c) => in_q(b) && in_q(c),
        FormulaKind::All(x, b) => x.ty() == &Type::Bool && {
            let (t, f) = bool_instances(x, b);
            in_q(&t) && in_q(&f)
        },
    }
}

fn bool_instances(x: &crate::syntax::Var, b: &Formula) -> (Formula, Formula) {
    let mut supply = NameSupply::new();
    supply.reserve(b.max_index());
    let t = b.subst_var(x, &Term::tt(), &mut supply).expect("x is boolean");
    let f = b.subst_var(x, &Term::ff(), &mut supply).expect("x is boolean");
    (t, f)
}

fn check_ma(a: &Formula) -> Result<()> {
    if a.has_strong() {
        return Err(Error::Language(format!(
            "formula classes are defined on MA formulas, got {a}"
        )));
    }
    Ok(())
}

/// All six flags for an MA formula.
pub fn flags(a: &Formula) -> Result<Flags> {
    check_ma(a)?;
    Ok(Classifier::default().flags(a))
}

#[derive(Default)]
struct Classifier {
    memo: HashMap<Formula, Flags>,
}

impl Classifier {
    fn flags(&mut self, a: &Formula) -> Flags {
        if let Some(f) = self.memo.get(a) {
            return *f;
        }
        let out = match a.kind() {
            FormulaKind::Bot => Flags {
                q: false,
                qf: true,
                d: true,
                g: true,
                r: true,
                i: false,
            },
            FormulaKind::Atom(t) => Flags {
                q: true,
                qf: true,
                d: true,
                g: true,
                r: t.is_const(&Const::Tt),
                i: true,
            },
            FormulaKind::Imp(a, b) => {
                let (fa, fb) = (self.flags(a), self.flags(b));
                Flags {
                    q: fa.q && fb.q,
                    qf: fa.qf && fb.qf,
                    d: (fa.i && fb.d) || (fa.g && fb.r),
                    g: ((fa.r || (fa.d && fa.qf)) && fb.g) || (fa.d && fb.i),
                    r: fa.g && fb.r,
                    i: fa.d && fb.i,
                }
            }
            FormulaKind::And(a, b) => {
                let (fa, fb) = (self.flags(a), self.flags(b));
                Flags {
                    q: fa.q && fb.q,
                    qf: fa.qf && fb.qf,
                    d: fa.d && fb.d,
                    g: fa.g && fb.g,
                    r: fa.r && fb.r,
                    i: fa.i && fb.i,
                }
            }
            FormulaKind::All(x, body) => {
                let fb = self.flags(body);
                let boolean = if x.ty() == &Type::Bool {
                    let (t, f) = bool_instances(x, body);
                    Some((self.flags(&t), self.flags(&f)))
                } else {
                    None
                };
                let both = |p: fn(&Flags) -> bool| boolean.is_some_and(|(t, f)| p(&t) && p(&f));
                Flags {
                    q: both(|f| f.q),
                    qf: both(|f| f.qf),
                    d: fb.d || fb.r,
                    g: fb.i || both(|f| f.g),
                    r: fb.r,
                    i: fb.i,
                }
            }
            FormulaKind::Or(..) | FormulaKind::Ex(..) => Flags::default(),
        };
        self.memo.insert(a.clone(), out);
        out
    }
}

/// A closed MA proof of `c`'s property for `a`, or `None` when `a ∉ c`.
pub fn certify(a: &Formula, c: ClassId) -> Result<Option<Proof>> {
    check_ma(a)?;
    Certifier::new(a).cert(a, c)
}

struct Certifier {
    classes: Classifier,
    memo: HashMap<(Formula, ClassId), Option<Proof>>,
    supply: NameSupply,
}

impl Certifier {
    fn new(a: &Formula) -> Certifier {
        let mut supply = NameSupply::new();
        supply.reserve(a.max_index());
        Certifier {
            classes: Classifier::default(),
            memo: HashMap::new(),
            supply,
        }
    }

    fn cert(&mut self, a: &Formula, c: ClassId) -> Result<Option<Proof>> {
        if !self.classes.flags(a).get(c) {
            return Ok(None);
        }
        let key = (a.clone(), c);
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        let p = self.build(a, c)?;
        debug_assert_eq!(p.conclusion(), &c.property(a)?);
        self.memo.insert(key, Some(p.clone()));
        Ok(Some(p))
    }

    /// Certificate for a class the caller has already established.
    fn must(&mut self, a: &Formula, c: ClassId) -> Result<Proof> {
        self.cert(a, c)?.ok_or_else(|| {
            Error::Class(format!("internal: expected {a} to be in {c}"))
        })
    }

    fn build(&mut self, a: &Formula, c: ClassId) -> Result<Proof> {
        match c {
            ClassId::Q => case_distinction_with(a, &Formula::bot(), &mut self.supply),
            ClassId::QF => {
                let af = a.bot_to_falsity()?;
                case_distinction_with(&af, &Formula::bot(), &mut self.supply)
            }
            _ => match a.kind() {
                FormulaKind::Bot => self.bot(c),
                FormulaKind::Atom(_) => self.atom(a, c),
                FormulaKind::Imp(x, y) => self.imp(a, x, y, c),
                FormulaKind::And(x, y) => self.and(a, x, y, c),
                FormulaKind::All(..) => self.all(a, c),
                FormulaKind::Or(..) | FormulaKind::Ex(..) => {
                    Err(Error::Language(format!("{a} is not an MA formula")))
                }
            },
        }
    }

    fn bot(&mut self, c: ClassId) -> Result<Proof> {
        let s = &mut self.supply;
        let bot = Formula::bot();
        match c {
            // F → ⊥
            ClassId::Definite => Proof::axiom(Axiom::BotPlus, Theory::MA),
            // ⊥ → (F → ⊥) → ⊥
            ClassId::Goal => {
                let (u, pu) = hyp("u", bot.clone(), s)?;
                let (v, _) = hyp("v", Formula::imp(Formula::falsity(), bot), s)?;
                lam(&u, lam(&v, pu)?)
            }
            // (¬F → ⊥) → ⊥
            ClassId::Relevant => {
                let (h, ph) = hyp("h", Formula::imp(Formula::neg(Formula::falsity()), bot), s)?;
                let (u, pu) = hyp("u", Formula::falsity(), s)?;
                lam(&h, app(&ph, lam(&u, pu)?)?)
            }
            _ => unreachable!("⊥ ∉ I"),
        }
    }

    fn atom(&mut self, a: &Formula, c: ClassId) -> Result<Proof> {
        let s = &mut self.supply;
        match c {
            ClassId::Definite | ClassId::Irrelevant => {
                let (u, pu) = hyp("u", a.clone(), s)?;
                lam(&u, pu)
            }
            ClassId::Goal => {
                let (u, pu) = hyp("u", a.clone(), s)?;
                let (v, pv) = hyp("v", Formula::imp(a.clone(), Formula::bot()), s)?;
                lam(&u, lam(&v, app(&pv, pu)?)?)
            }
            // only T is relevant
            ClassId::Relevant => {
                let h = Formula::imp(Formula::neg(a.clone()), Formula::bot());
                let (h, _) = hyp("h", h, s)?;
                lam(&h, truth()?)
            }
            _ => unreachable!(),
        }
    }

    fn imp(&mut self, ab: &Formula, a: &Formula, b: &Formula, c: ClassId) -> Result<Proof> {
        let fa = self.classes.flags(a);
        let fb = self.classes.flags(b);
        let af = a.bot_to_falsity()?;
        let bf = b.bot_to_falsity()?;
        let abf = Formula::imp(af.clone(), bf.clone());
        let bot = Formula::bot();
        match c {
            ClassId::Definite if fa.i && fb.d => {
                // λf λa. d_B (f (i_A a))
                let i_a = self.must(a, ClassId::Irrelevant)?;
                let d_b = self.must(b, ClassId::Definite)?;
                let s = &mut self.supply;
                let (f, pf) = hyp("f", abf, s)?;
                let (u, pa) = hyp("a", a.clone(), s)?;
                lam(&f, lam(&u, app(&d_b, app(&pf, app(&i_a, pa)?)?)?)?)
            }
            ClassId::Definite => {
                // λf λa. r_B (λnb. g_A a (λaf. ⊥⁺ (nb (f af))))
                let g_a = self.must(a, ClassId::Goal)?;
                let r_b = self.must(b, ClassId::Relevant)?;
                let botplus = Proof::axiom(Axiom::BotPlus, Theory::MA)?;
                let s = &mut self.supply;
                let (f, pf) = hyp("f", abf, s)?;
                let (u, pa) = hyp("a", a.clone(), s)?;
                let (nb, pnb) = hyp("nb", Formula::neg(bf), s)?;
                let (w, pw) = hyp("af", af, s)?;
                let to_bot = lam(&w, app(&botplus, app(&pnb, app(&pf, pw)?)?)?)?;
                let inner = lam(&nb, app2(&g_a, pa, to_bot)?)?;
                lam(&f, lam(&u, app(&r_b, inner)?)?)
            }
            ClassId::Goal if fa.r && fb.g => {
                // premise relevant: λh λk. g_B (h (r_A ...)) (λbf. k (λaf. bf))
                let r_a = self.must(a, ClassId::Relevant)?;
                let g_b = self.must(b, ClassId::Goal)?;
                let efq = efq_with(&bf, Theory::NA, &mut self.supply)?;
                let s = &mut self.supply;
                let (h, ph) = hyp("h", ab.clone(), s)?;
                let (k, pk) = hyp("k", Formula::imp(abf, bot), s)?;
                // ¬A^F → ⊥:  λna. k (λaf. efq (na af))
                let (na, pna) = hyp("na", Formula::neg(af.clone()), s)?;
                let (w, pw) = hyp("af", af.clone(), s)?;
                let na_bot = lam(&na, app(&pk, lam(&w, app(&efq, app(&pna, pw)?)?)?)?)?;
                let pb = app(&ph, app(&r_a, na_bot)?)?;
                // B^F → ⊥:  λbf. k (λaf. bf)
                let (v, pv) = hyp("bf", bf, s)?;
                let (w, _) = hyp("af", af, s)?;
                let bf_bot = lam(&v, app(&pk, lam(&w, pv)?)?)?;
                lam(&h, lam(&k, app2(&g_b, pb, bf_bot)?)?)
            }
            ClassId::Goal if fa.d && fa.qf && fb.g => {
                // case distinction on A^F into ⊥
                let d_a = self.must(a, ClassId::Definite)?;
                let g_b = self.must(b, ClassId::Goal)?;
                let efq = efq_with(&bf, Theory::NA, &mut self.supply)?;
                let cd = case_distinction_with(&af, &bot, &mut self.supply)?;
                let s = &mut self.supply;
                let (h, ph) = hyp("h", ab.clone(), s)?;
                let (k, pk) = hyp("k", Formula::imp(abf, bot), s)?;
                // A^F → ⊥:  λaf. g_B (h (d_A af)) (λbf. k (λ_. bf))
                let (w, pw) = hyp("af", af.clone(), s)?;
                let (v, pv) = hyp("bf", bf, s)?;
                let (w2, _) = hyp("af", af.clone(), s)?;
                let bf_bot = lam(&v, app(&pk, lam(&w2, pv)?)?)?;
                let pos = lam(&w, app2(&g_b, app(&ph, app(&d_a, pw)?)?, bf_bot)?)?;
                // ¬A^F → ⊥:  λna. k (λaf. efq (na af))
                let (na, pna) = hyp("na", Formula::neg(af.clone()), s)?;
                let (w, pw) = hyp("af", af, s)?;
                let neg = lam(&na, app(&pk, lam(&w, app(&efq, app(&pna, pw)?)?)?)?)?;
                lam(&h, lam(&k, app2(&cd, pos, neg)?)?)
            }
            ClassId::Goal => {
                // λh λk. k (λaf. i_B (h (d_A af)))
                let d_a = self.must(a, ClassId::Definite)?;
                let i_b = self.must(b, ClassId::Irrelevant)?;
                let s = &mut self.supply;
                let (h, ph) = hyp("h", ab.clone(), s)?;
                let (k, pk) = hyp("k", Formula::imp(abf, bot), s)?;
                let (w, pw) = hyp("af", af, s)?;
                let body = lam(&w, app(&i_b, app(&ph, app(&d_a, pw)?)?)?)?;
                lam(&h, lam(&k, app(&pk, body)?)?)
            }
            ClassId::Relevant => {
                // λh λa. r_B (λnb. g_A a (λaf. h (λf. nb (f af))))
                let g_a = self.must(a, ClassId::Goal)?;
                let r_b = self.must(b, ClassId::Relevant)?;
                let s = &mut self.supply;
                let (h, ph) = hyp("h", Formula::imp(Formula::neg(abf.clone()), bot), s)?;
                let (u, pa) = hyp("a", a.clone(), s)?;
                let (nb, pnb) = hyp("nb", Formula::neg(bf), s)?;
                let (w, pw) = hyp("af", af, s)?;
                let (f, pf) = hyp("f", abf, s)?;
                let not_abf = lam(&f, app(&pnb, app(&pf, pw)?)?)?;
                let af_bot = lam(&w, app(&ph, not_abf)?)?;
                let inner = lam(&nb, app2(&g_a, pa, af_bot)?)?;
                lam(&h, lam(&u, app(&r_b, inner)?)?)
            }
            ClassId::Irrelevant => {
                // λh λaf. i_B (h (d_A af))
                let d_a = self.must(a, ClassId::Definite)?;
                let i_b = self.must(b, ClassId::Irrelevant)?;
                let s = &mut self.supply;
                let (h, ph) = hyp("h", ab.clone(), s)?;
                let (w, pw) = hyp("af", af, s)?;
                lam(&h, lam(&w, app(&i_b, app(&ph, app(&d_a, pw)?)?)?)?)
            }
            _ => unreachable!(),
        }
    }

    fn and(&mut self, ab: &Formula, a: &Formula, b: &Formula, c: ClassId) -> Result<Proof> {
        let ca = self.must(a, c)?;
        let cb = self.must(b, c)?;
        let af = a.bot_to_falsity()?;
        let bf = b.bot_to_falsity()?;
        let abf = Formula::and(af.clone(), bf.clone());
        let bot = Formula::bot();
        let s = &mut self.supply;
        match c {
            ClassId::Definite | ClassId::Irrelevant => {
                let src = if c == ClassId::Definite { abf } else { ab.clone() };
                let (p, pp) = hyp("p", src, s)?;
                let pair = Proof::and_intro(app(&ca, fst(&pp)?)?, app(&cb, snd(&pp)?)?)?;
                lam(&p, pair)
            }
            ClassId::Relevant => {
                // λh. (r_A (λna. h (λp. na (π0 p))), r_B (λnb. h (λp. nb (π1 p))))
                let (h, ph) = hyp("h", Formula::imp(Formula::neg(abf.clone()), bot), s)?;
                let (na, pna) = hyp("na", Formula::neg(af), s)?;
                let (p, pp) = hyp("p", abf.clone(), s)?;
                let left = app(&ca, lam(&na, app(&ph, lam(&p, app(&pna, fst(&pp)?)?)?)?)?)?;
                let (nb, pnb) = hyp("nb", Formula::neg(bf), s)?;
                let (p, pp) = hyp("p", abf, s)?;
                let right = app(&cb, lam(&nb, app(&ph, lam(&p, app(&pnb, snd(&pp)?)?)?)?)?)?;
                lam(&h, Proof::and_intro(left, right)?)
            }
            ClassId::Goal => {
                // λp λk. g_A (π0 p) (λaf. g_B (π1 p) (λbf. k (af, bf)))
                let (p, pp) = hyp("p", ab.clone(), s)?;
                let (k, pk) = hyp("k", Formula::imp(abf, bot), s)?;
                let (w, pw) = hyp("af", af, s)?;
                let (v, pv) = hyp("bf", bf, s)?;
                let inner = lam(&v, app(&pk, Proof::and_intro(pw, pv)?)?)?;
                let mid = lam(&w, app2(&cb, snd(&pp)?, inner)?)?;
                lam(&p, lam(&k, app2(&ca, fst(&pp)?, mid)?)?)
            }
            _ => unreachable!(),
        }
    }

    fn all(&mut self, xa: &Formula, c: ClassId) -> Result<Proof> {
        let (x, a) = xa.as_all().expect("caller matched ∀");
        let (x, a) = (x.clone(), a.clone());
        let fa = self.classes.flags(&a);
        let af = a.bot_to_falsity()?;
        let xaf = Formula::all(x.clone(), af.clone());
        let xt = Term::var(x.clone());
        let bot = Formula::bot();
        match c {
            ClassId::Definite if fa.d => {
                // λh λx. d_A (h x)
                let d_a = self.must(&a, ClassId::Definite)?;
                let s = &mut self.supply;
                let (h, ph) = hyp("h", xaf, s)?;
                let body = app(&d_a, inst(&ph, xt, s)?)?;
                lam(&h, Proof::all_intro(x, body)?)
            }
            ClassId::Definite => self.all_definite_via_relevant(xa),
            ClassId::Goal if fa.i => {
                // λh λk. k (λx. i_A (h x))
                let i_a = self.must(&a, ClassId::Irrelevant)?;
                let s = &mut self.supply;
                let (h, ph) = hyp("h", xa.clone(), s)?;
                let (k, pk) = hyp("k", Formula::imp(xaf, bot), s)?;
                let body = Proof::all_intro(x, app(&i_a, inst(&ph, xt, s)?)?)?;
                lam(&h, lam(&k, app(&pk, body)?)?)
            }
            ClassId::Goal => {
                // through ∀x A ↔ A(tt) ∧ A(ff) and the conjunction case
                let (at, af_) = bool_instances(&x, &a);
                let k_form = Formula::and(at, af_);
                let g_k = self.must(&k_form, ClassId::Goal)?;
                let kf = k_form.bot_to_falsity()?;
                let cases = Proof::axiom(
                    Axiom::BoolCases {
                        var: x.clone(),
                        body: af.clone(),
                    },
                    Theory::MA,
                )?;
                let s = &mut self.supply;
                let (h, ph) = hyp("h", xa.clone(), s)?;
                let (k, pk) = hyp("k", Formula::imp(xaf, bot), s)?;
                let pair = Proof::and_intro(inst(&ph, Term::tt(), s)?, inst(&ph, Term::ff(), s)?)?;
                // K^F → ⊥:  λq. k (λx. C x (π0 q) (π1 q))
                let (q, pq) = hyp("q", kf, s)?;
                let at_x = app2(&inst(&cases, xt, s)?, fst(&pq)?, snd(&pq)?)?;
                let q_bot = lam(&q, app(&pk, Proof::all_intro(x, at_x)?)?)?;
                lam(&h, lam(&k, app2(&g_k, pair, q_bot)?)?)
            }
            ClassId::Relevant => {
                // λh λx. r_A (λna. h (λg. na (g x)))
                let r_a = self.must(&a, ClassId::Relevant)?;
                let s = &mut self.supply;
                let (h, ph) = hyp("h", Formula::imp(Formula::neg(xaf.clone()), bot), s)?;
                let (na, pna) = hyp("na", Formula::neg(af), s)?;
                let (g, pg) = hyp("g", xaf, s)?;
                let not_xaf = lam(&g, app(&pna, inst(&pg, xt, s)?)?)?;
                let body = app(&r_a, lam(&na, app(&ph, not_xaf)?)?)?;
                lam(&h, Proof::all_intro(x, body)?)
            }
            ClassId::Irrelevant => {
                // λh λx. i_A (h x)
                let i_a = self.must(&a, ClassId::Irrelevant)?;
                let s = &mut self.supply;
                let (h, ph) = hyp("h", xa.clone(), s)?;
                let body = app(&i_a, inst(&ph, xt, s)?)?;
                lam(&h, Proof::all_intro(x, body)?)
            }
            _ => unreachable!(),
        }
    }

    /// The definite case for `∀x A` via `A ∈ R`:
    /// `λh λx. r_A (λna. ⊥⁺ (na (h x)))`. Since R ⊆ D, dispatch always
    /// prefers 1.1; this path is kept for completeness and tested directly.
    fn all_definite_via_relevant(&mut self, xa: &Formula) -> Result<Proof> {
        let (x, a) = xa.as_all().expect("caller matched ∀");
        let (x, a) = (x.clone(), a.clone());
        let af = a.bot_to_falsity()?;
        let r_a = self.must(&a, ClassId::Relevant)?;
        let botplus = Proof::axiom(Axiom::BotPlus, Theory::MA)?;
        let s = &mut self.supply;
        let (h, ph) = hyp("h", Formula::all(x.clone(), af.clone()), s)?;
        let (na, pna) = hyp("na", Formula::neg(af), s)?;
        let inner = lam(&na, app(&botplus, app(&pna, inst(&ph, Term::var(x.clone()), s)?)?)?)?;
        lam(&h, Proof::all_intro(x, app(&r_a, inner)?)?)
    }
}

/// `iszero n`, i.e. `atom (R n tt (λm λb. ff))` with `R` the boolean
/// recursor on naturals.
pub fn iszero(n: Term) -> Result<Formula> {
    let m = Var::new("m", 0, Type::Nat);
    let b = Var::new("b", 1, Type::Bool);
    let step = Term::lam(m, Term::lam(b, Term::ff()));
    let rec = Term::apps(Term::constant(Const::RecNat(Type::Bool)), [n, Term::tt(), step])?;
    Formula::atom(rec)
}

/// A formula outside D that still has the D property: `S → T` with
/// `S = ∀x(¬¬A → A)`, `T = (∀x A → ⊥) → ⊥` and `A = iszero x`. Returns the
/// formula and a closed MA proof of `(S → T)^F → S → T`, namely
/// `λh λs λk. k (λx. s x (λna. h s (λf. na (f x))))`.
pub fn boundary_example() -> Result<(Formula, Proof)> {
    let x = Var::new("x", 10, Type::Nat);
    let xt = Term::var(x.clone());
    let a = iszero(xt.clone())?;
    let bot = Formula::bot();
    let all_a = Formula::all(x.clone(), a.clone());
    let s = Formula::all(x.clone(), Formula::imp(Formula::neg(Formula::neg(a.clone())), a.clone()));
    let t = Formula::imp(Formula::imp(all_a.clone(), bot.clone()), bot);
    let st = Formula::imp(s.clone(), t.clone());
    let stf = st.bot_to_falsity()?;

    let mut supply = NameSupply::starting_at(20);
    let (h, ph) = hyp("h", stf, &mut supply)?;
    let (su, ps) = hyp("s", s, &mut supply)?;
    let (k, pk) = hyp("k", Formula::imp(all_a.clone(), Formula::bot()), &mut supply)?;
    let (na, pna) = hyp("na", Formula::neg(a), &mut supply)?;
    let (f, pf) = hyp("f", all_a, &mut supply)?;
    let not_all = lam(&f, app(&pna, inst(&pf, xt.clone(), &mut supply)?)?)?;
    let nna = lam(&na, app(&app(&ph, ps.clone())?, not_all)?)?;
    let ax = app(&inst(&ps, xt, &mut supply)?, nna)?;
    let body = app(&pk, Proof::all_intro(x, ax)?)?;
    let p = lam(&h, lam(&su, lam(&k, body)?)?)?;
    debug_assert_eq!(p.conclusion(), &Formula::imp(st.bot_to_falsity()?, st.clone()));
    Ok((st, p))
}

/// Flags for one formula plus certificates computed on first request.
pub struct ClassReport {
    formula: Formula,
    flags: Flags,
    certs: [OnceLock<Option<Proof>>; 6],
}

impl ClassReport {
    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn in_q(&self) -> bool {
        self.flags.q
    }
    pub fn in_qf(&self) -> bool {
        self.flags.qf
    }
    pub fn in_d(&self) -> bool {
        self.flags.d
    }
    pub fn in_g(&self) -> bool {
        self.flags.g
    }
    pub fn in_r(&self) -> bool {
        self.flags.r
    }
    pub fn in_i(&self) -> bool {
        self.flags.i
    }

    /// The certificate for `c`, synthesized on first use.
    pub fn certificate(&self, c: ClassId) -> Option<&Proof> {
        let slot = ClassId::ALL.iter().position(|k| *k == c).expect("listed");
        self.certs[slot]
            .get_or_init(|| certify(&self.formula, c).expect("formula was checked"))
            .as_ref()
    }

    /// `CLASS=yes|no` lines in a fixed order.
    pub fn lines(&self) -> Vec<String> {
        ClassId::ALL
            .iter()
            .map(|c| format!("{c}={}", if self.flags.get(*c) { "yes" } else { "no" }))
            .collect()
    }
}

pub fn classify(a: &Formula) -> Result<ClassReport> {
    Ok(ClassReport {
        formula: a.clone(),
        flags: flags(a)?,
        certs: Default::default(),
    })
}
