//! Seeded random formulas, proofs and translation instances.

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{certify, flags, iszero, ClassId};
use crate::derived::{app, efq_with, hyp, inst, lam};
use crate::formula::{Formula, FormulaKind};
use crate::kernel::{Assumption, Axiom, Proof, Side};
use crate::syntax::{NameSupply, Term, Type, Var};
use crate::theory::Theory;

#[derive(Clone, Debug)]
pub struct GenConfig {
    pub seed: u64,
    pub max_size: usize,
    pub language: Theory,
    /// Boolean terms used as atom payloads.
    pub atom_pool: Vec<Term>,
    /// Variables quantifiers may bind.
    pub binders: Vec<Var>,
}

impl GenConfig {
    pub fn new(seed: u64, max_size: usize, language: Theory) -> GenConfig {
        GenConfig {
            seed,
            max_size: max_size.max(1),
            language,
            atom_pool: default_atoms(),
            binders: default_binders(),
        }
    }
}

fn default_binders() -> Vec<Var> {
    vec![Var::new("p", 0, Type::Bool), Var::new("n", 2, Type::Nat)]
}

/// `tt`, `ff`, two boolean variables and `iszero n`.
fn default_atoms() -> Vec<Term> {
    vec![
        Term::tt(),
        Term::ff(),
        Term::var(Var::new("p", 0, Type::Bool)),
        Term::var(Var::new("q", 1, Type::Bool)),
        iszero_term(Term::var(Var::new("n", 2, Type::Nat))),
    ]
}

fn iszero_term(n: Term) -> Term {
    match iszero(n).expect("well typed").kind() {
        FormulaKind::Atom(t) => t.clone(),
        _ => unreachable!(),
    }
}

/// One formula from `cfg`; equal configurations give equal formulas.
pub fn gen_formula(cfg: &GenConfig) -> Formula {
    Generator::new(cfg.clone()).formula()
}

/// One MA proof from `cfg` that mentions ⊥ somewhere.
pub fn gen_proof(cfg: &GenConfig) -> Proof {
    Generator::new(cfg.clone()).proof()
}

pub struct Generator {
    cfg: GenConfig,
    rng: ChaCha8Rng,
    supply: NameSupply,
}

impl Generator {
    pub fn new(cfg: GenConfig) -> Generator {
        let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut supply = NameSupply::new();
        for t in &cfg.atom_pool {
            supply.reserve(t.max_index());
        }
        for v in &cfg.binders {
            supply.reserve(v.index());
        }
        supply.reserve(100);
        Generator { cfg, rng, supply }
    }

    pub fn config(&self) -> &GenConfig {
        &self.cfg
    }

    /// A formula of size at most `max_size` in the configured language.
    pub fn formula(&mut self) -> Formula {
        let n = self.rng.gen_range(1..=self.cfg.max_size);
        self.sized(n, self.cfg.language, &self.cfg.binders.clone())
    }

    /// Draws until `keep` holds, at most `tries` times.
    pub fn formula_where(&mut self, tries: usize, keep: impl Fn(&Formula) -> bool) -> Option<Formula> {
        (0..tries).map(|_| self.formula()).find(|f| keep(f))
    }

    /// An NA formula whose quantifiers range over booleans only, hence in Q.
    pub fn q_formula(&mut self) -> Formula {
        let n = self.rng.gen_range(1..=self.cfg.max_size);
        let binders: Vec<Var> = self
            .cfg
            .binders
            .iter()
            .filter(|v| v.ty() == &Type::Bool)
            .cloned()
            .collect();
        self.sized(n, Theory::NA, &binders)
    }

    fn leaf(&mut self, lang: Theory) -> Formula {
        if lang == Theory::MA && self.rng.gen_bool(0.35) {
            return Formula::bot();
        }
        let t = self.cfg.atom_pool.choose(&mut self.rng).cloned().unwrap_or_else(Term::tt);
        Formula::atom(t).expect("atom pool holds boolean terms")
    }

    fn sized(&mut self, n: usize, lang: Theory, binders: &[Var]) -> Formula {
        if n <= 1 {
            return self.leaf(lang);
        }
        let strong = Theory::HA.le(lang);
        let quant = !binders.is_empty();
        // leaf, →, ∧, ∀, ∨, ∃
        let weights = [
            10,
            45,
            20,
            if quant { 20 } else { 0 },
            if strong { 12 } else { 0 },
            if strong && quant { 10 } else { 0 },
        ];
        let binary = n >= 3;
        let weights: Vec<u32> = weights
            .iter()
            .enumerate()
            .map(|(i, w)| if matches!(i, 1 | 2 | 4) && !binary { 0 } else { *w })
            .collect();
        let pick = WeightedIndex::new(&weights).expect("some weight is positive");
        match pick.sample(&mut self.rng) {
            0 => self.leaf(lang),
            k @ (1 | 2 | 4) => {
                let l = self.rng.gen_range(1..=n - 2);
                let a = self.sized(l, lang, binders);
                let b = self.sized(n - 1 - l, lang, binders);
                match k {
                    1 => Formula::imp(a, b),
                    2 => Formula::and(a, b),
                    _ => Formula::or(a, b),
                }
            }
            k => {
                let x = binders.choose(&mut self.rng).expect("binders nonempty").clone();
                let body = self.sized(n - 1, lang, binders);
                if k == 3 {
                    Formula::all(x, body)
                } else {
                    Formula::ex(x, body)
                }
            }
        }
    }

    fn term_of(&mut self, ty: &Type) -> Term {
        match ty {
            Type::Bool => {
                if self.rng.gen_bool(0.5) {
                    Term::tt()
                } else {
                    Term::ff()
                }
            }
            Type::Nat => {
                let mut t = Term::zero();
                for _ in 0..self.rng.gen_range(0..2) {
                    t = Term::succ(t).expect("numeral");
                }
                t
            }
            _ => {
                let pool: Vec<Term> = self.cfg.atom_pool.iter().filter(|t| t.ty() == ty).cloned().collect();
                pool.choose(&mut self.rng).cloned().expect("a term of the binder type")
            }
        }
    }

    fn small_ma(&mut self) -> Formula {
        let n = self.rng.gen_range(1..=4.min(self.cfg.max_size));
        self.sized(n, Theory::MA, &self.cfg.binders.clone())
    }

    /// A random MA proof built from assumptions and axioms by the kernel's
    /// rules. The result mentions ⊥ in its conclusion, its open assumptions
    /// or through `⊥⁺`.
    pub fn proof(&mut self) -> Proof {
        let mut hyps: Vec<Assumption> = Vec::new();
        for _ in 0..3 {
            let f = self.small_ma();
            hyps.push(Assumption::fresh("u", f, &mut self.supply));
        }
        let mut pool: Vec<Proof> = hyps.iter().map(|u| Proof::assume(u.clone()).expect("assume")).collect();
        pool.push(Proof::axiom(Axiom::BotPlus, Theory::MA).expect("⊥⁺"));
        pool.push(Proof::axiom(Axiom::Truth, Theory::NA).expect("truth"));
        let f = self.small_ma();
        if let Ok(p) = efq_with(&f, Theory::MA, &mut self.supply) {
            pool.push(p);
        }
        let f = self.small_ma();
        if let Ok(Some(p)) = certify(&f, ClassId::ALL[self.rng.gen_range(0..4)]) {
            pool.push(p);
        }

        let cap = 4 * self.cfg.max_size + 8;
        for _ in 0..self.cfg.max_size.max(4) {
            let p = pool.choose(&mut self.rng).expect("pool nonempty").clone();
            let next = match self.rng.gen_range(0..6) {
                0 => {
                    let open: Vec<Assumption> = p
                        .free_assumptions()
                        .iter()
                        .map(|(id, f)| Assumption::new(&id.name, id.index, f.clone()))
                        .collect();
                    let u = if !open.is_empty() && self.rng.gen_bool(0.7) {
                        open.choose(&mut self.rng).cloned()
                    } else {
                        hyps.choose(&mut self.rng).cloned()
                    };
                    u.and_then(|u| Proof::imp_intro(u, p).ok())
                }
                1 => match p.conclusion().as_imp() {
                    Some((a, _)) => {
                        let a = a.clone();
                        let arg = pool.iter().find(|q| q.conclusion() == &a).cloned().or_else(|| {
                            Proof::assume(Assumption::fresh("v", a, &mut self.supply)).ok()
                        });
                        arg.and_then(|q| app(&p, q).ok())
                    }
                    None => None,
                },
                2 => {
                    let q = pool.choose(&mut self.rng).expect("pool nonempty").clone();
                    Proof::and_intro(p, q).ok()
                }
                3 => {
                    let side = if self.rng.gen_bool(0.5) { Side::Left } else { Side::Right };
                    Proof::proj(side, p).ok()
                }
                4 => {
                    let x = self.cfg.binders.choose(&mut self.rng).cloned();
                    x.and_then(|x| Proof::all_intro(x, p).ok())
                }
                _ => match p.conclusion().as_all() {
                    Some((x, _)) => {
                        let t = self.term_of(&x.ty().clone());
                        inst(&p, t, &mut self.supply).ok()
                    }
                    None => None,
                },
            };
            if let Some(q) = next {
                if q.conclusion().size() <= cap {
                    pool.push(q);
                }
            }
        }
        let mentions_bot = |p: &Proof| {
            p.conclusion().has_bot() || p.uses_botplus() || p.free_assumptions().values().any(Formula::has_bot)
        };
        let candidates: Vec<&Proof> = pool.iter().filter(|p| mentions_bot(p)).collect();
        let best = candidates.iter().map(|p| p.size()).max().unwrap_or(0);
        let pick: Vec<&&Proof> = candidates.iter().filter(|p| p.size() * 2 >= best).collect();
        pick.choose(&mut self.rng).map(|p| (**p).clone()).expect("⊥⁺ is in the pool")
    }

    /// `(D, G, x, P)` with `D ∈ D`, `G ∈ G` and `P` a closed MA proof of
    /// `D → ∀x(G → ⊥) → ⊥`.
    /// Expects an MA configuration.
    pub fn translation_instance(&mut self) -> (Formula, Formula, Var, Proof) {
        loop {
            if let Some(found) = self.try_translation_instance() {
                return found;
            }
        }
    }

    fn try_translation_instance(&mut self) -> Option<(Formula, Formula, Var, Proof)> {
        let x = self.cfg.binders.choose(&mut self.rng)?.clone();
        let g = self.formula_where(50, |f| flags(f).is_ok_and(|c| c.g))?;
        let d0 = self.formula_where(50, |f| flags(f).is_ok_and(|c| c.d))?;
        let t = self.term_of(&x.ty().clone());
        let gt = g.subst_var(&x, &t, &mut self.supply).ok()?;
        let bot = Formula::bot();

        let s = &mut self.supply;
        let k_form = Formula::all(x.clone(), Formula::imp(g.clone(), bot.clone()));
        let (k, pk) = hyp("k", k_form, s).ok()?;
        let kt = inst(&pk, t, s).ok()?;
        let (d, body) = match self.rng.gen_range(0..4) {
            0 => {
                let d = Formula::and(d0, gt);
                let (du, pd) = hyp("d", d.clone(), s).ok()?;
                (d, (du, app(&kt, Proof::proj(Side::Right, pd).ok()?).ok()?))
            }
            1 => {
                let d = Formula::and(d0, bot);
                let (du, pd) = hyp("d", d.clone(), s).ok()?;
                (d, (du, Proof::proj(Side::Right, pd).ok()?))
            }
            2 => {
                let d = Formula::imp(Formula::imp(gt.clone(), bot.clone()), bot);
                let (du, pd) = hyp("d", d.clone(), s).ok()?;
                let (gu, pg) = hyp("g", gt, s).ok()?;
                (d, (du, app(&pd, lam(&gu, app(&kt, pg).ok()?).ok()?).ok()?))
            }
            _ => {
                let (du, pd) = hyp("d", gt.clone(), s).ok()?;
                (gt, (du, app(&kt, pd).ok()?))
            }
        };
        if !flags(&d).ok()?.d {
            return None;
        }
        let (du, body) = body;
        let premise = lam(&du, lam(&k, body).ok()?).ok()?;
        Some((d, g, x, premise))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::in_language;

    #[test]
    fn deterministic_and_bounded() {
        for seed in 0..50 {
            let cfg = GenConfig::new(seed, 12, Theory::MA);
            let a = gen_formula(&cfg);
            assert_eq!(a, gen_formula(&cfg));
            assert!(a.size() <= 12);
            assert!(in_language(&a, Theory::MA));
        }
        let cfg = GenConfig::new(7, 1, Theory::MA);
        assert!(matches!(gen_formula(&cfg).kind(), FormulaKind::Bot | FormulaKind::Atom(_)));
    }

    #[test]
    fn languages_respected() {
        for th in Theory::ALL {
            let mut g = Generator::new(GenConfig::new(3, 12, th));
            for _ in 0..200 {
                assert!(in_language(&g.formula(), th));
            }
        }
    }

    #[test]
    fn every_class_is_hit() {
        let mut g = Generator::new(GenConfig::new(11, 12, Theory::MA));
        let mut seen = [0usize; 4];
        for _ in 0..1000 {
            let f = flags(&g.formula()).unwrap();
            for (i, b) in [f.d, f.g, f.r, f.i].into_iter().enumerate() {
                seen[i] += b as usize;
            }
        }
        assert!(seen.iter().all(|n| *n > 0), "{seen:?}");
    }

    #[test]
    fn proofs_check_and_mention_bot() {
        for seed in 0..40 {
            let p = gen_proof(&GenConfig::new(seed, 10, Theory::MA));
            assert!(p.theory().le(Theory::MA));
            let mut s = NameSupply::new();
            let j = crate::kernel::recheck(&p, &mut s).unwrap();
            assert_eq!(&j.conclusion, p.conclusion());
        }
    }

    #[test]
    fn translation_instances_are_well_formed() {
        let mut g = Generator::new(GenConfig::new(5, 8, Theory::MA));
        for _ in 0..10 {
            let (d, gg, _, p) = g.translation_instance();
            assert!(flags(&d).unwrap().d && flags(&gg).unwrap().g);
            assert!(p.is_closed() && p.theory().le(Theory::MA));
        }
    }
}
