//! Acceptance run: one PASS/FAIL line per criterion, with wall time against
//! its budget. Exits non-zero if any criterion fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use minarith::atrans::a_translate_classified;
use minarith::classes::{boundary_example, certify, flags, in_q, ClassId};
use minarith::derived::{case_formula, prove_case_distinction, prove_efq, prove_gg_equiv, subst_bot_proof_traced};
use minarith::formula::in_language;
use minarith::kernel::{check, recheck};
use minarith::oracle::{bounded_derivable, GenConfig, Generator, SearchVerdict};
use minarith::sexp::{read_item, read_proof, ReadError};
use minarith::{Formula, NameSupply, Proof, Term, Theory, Type, Var};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn manifest() -> Vec<(String, Theory, String)> {
    let text = fs::read_to_string(fixtures().join("kernel/manifest.txt")).expect("manifest");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[0].to_string(), f[1].parse().expect("theory"), f[2].to_string())
        })
        .collect()
}

/// Sound and closed, at most `th`, rechecked from scratch.
fn audit(p: &Proof, th: Theory, want: &Formula) -> Result<(), String> {
    let j = recheck(p, &mut NameSupply::new()).map_err(|e| format!("recheck failed: {e}"))?;
    if &j.conclusion != want {
        return Err(format!("proves {} instead of {want}", j.conclusion));
    }
    if !j.assumptions.is_empty() {
        return Err(format!("open assumptions in proof of {want}"));
    }
    if !j.theory.le(th) {
        return Err(format!("needs {} for {want}, allowed {th}", j.theory));
    }
    Ok(())
}

fn kernel_fixtures() -> Outcome {
    let entries = manifest();
    if entries.len() != 30 {
        return Err(format!("expected 30 fixtures, manifest lists {}", entries.len()));
    }
    let mut bad = Vec::new();
    for (file, th, expect) in &entries {
        let src = fs::read_to_string(fixtures().join("kernel").join(file)).map_err(|e| e.to_string())?;
        let got = match read_proof(&src) {
            Ok(p) => match check(&p, *th, &mut NameSupply::new()) {
                Ok(_) => "ok".to_string(),
                Err(e) => e.code().to_string(),
            },
            Err(ReadError::Kernel(e)) => e.code().to_string(),
            Err(ReadError::Syntax(m)) => format!("syntax({m})"),
        };
        if &got != expect {
            bad.push(format!("{file}: expected {expect}, got {got}"));
        }
    }
    if bad.is_empty() {
        Ok(format!("{} fixtures match", entries.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn efq() -> Outcome {
    for th in Theory::ALL {
        let mut g = Generator::new(GenConfig::new(0xefc0 + th as u64, 12, th));
        for _ in 0..500 {
            let a = g.formula();
            let p = prove_efq(&a, th).map_err(|e| format!("{a}: {e}"))?;
            audit(&p, th, &Formula::imp(Formula::falsity(), a))?;
        }
    }
    Ok("2000 formulas over four theories".into())
}

fn bot_substitution() -> Outcome {
    let mut sg = Generator::new(GenConfig::new(0x5b, 6, Theory::NA));
    let mut hg = Generator::new(GenConfig::new(0x5c, 6, Theory::HA));
    let mut mg = Generator::new(GenConfig::new(0x5d, 6, Theory::MA));
    let mut opened = 0;
    for i in 0..500u64 {
        let m = Generator::new(GenConfig::new(0xb0_0000 + i, 10, Theory::MA)).proof();
        let s = match i % 4 {
            0 => Formula::falsity(),
            1 => sg.formula(),
            2 => hg.formula(),
            _ => mg.formula(),
        };
        let mut supply = NameSupply::new();
        let (out, trace) = subst_bot_proof_traced(&m, &s, &mut supply).map_err(|e| format!("{m}: {e}"))?;
        let want = m.conclusion().subst_bot(&s, &mut supply).map_err(|e| e.to_string())?;
        if out.conclusion() != &want {
            return Err(format!("conclusion {} is not {want}", out.conclusion()));
        }
        if out.free_assumptions().len() != m.free_assumptions().len() {
            return Err("assumption count changed".into());
        }
        for (id, a) in m.free_assumptions() {
            let u = trace.get(id).ok_or("an assumption has no image")?;
            let a_s = a.subst_bot(&s, &mut supply).map_err(|e| e.to_string())?;
            if u.formula() != &a_s || out.free_assumptions().get(u.id()) != Some(&a_s) {
                return Err(format!("image of {}#{} is not {a_s}", id.name, id.index));
            }
        }
        opened += m.free_assumptions().len();
        recheck(&out, &mut supply).map_err(|e| e.to_string())?;
    }
    Ok(format!("500 proofs, {opened} open assumptions mapped"))
}

fn goedel_gentzen() -> Outcome {
    let mut g = Generator::new(GenConfig::new(0x66, 12, Theory::NA));
    for _ in 0..300 {
        let a = g.formula();
        let t = a.gg_translate().map_err(|e| e.to_string())?;
        if !in_language(&t, Theory::NA) {
            return Err(format!("{t} is not an NA formula"));
        }
        let p = prove_gg_equiv(&a).map_err(|e| format!("{a}: {e}"))?;
        audit(&p, Theory::NA, &Formula::and(Formula::imp(a.clone(), t.clone()), Formula::imp(t, a)))?;
    }
    Ok("300 formulas".into())
}

fn classes() -> Outcome {
    let mut g = Generator::new(GenConfig::new(0xc1a55, 12, Theory::MA));
    let mut hits = [0usize; 6];
    let mut violations = 0;
    for _ in 0..1000 {
        let a = g.formula();
        let f = flags(&a).map_err(|e| e.to_string())?;
        if (f.r && !f.d) || (f.i && !f.g) {
            violations += 1;
        }
        for (k, c) in ClassId::ALL.into_iter().enumerate() {
            let p = certify(&a, c).map_err(|e| e.to_string())?;
            match (p, f.get(c)) {
                (Some(p), true) => {
                    audit(&p, Theory::MA, &c.property(&a).map_err(|e| e.to_string())?)?;
                    hits[k] += 1;
                }
                (None, false) => {}
                (p, flag) => {
                    return Err(format!("{c} for {a}: flag {flag}, certificate {}", p.is_some()));
                }
            }
        }
    }
    if violations > 0 {
        return Err(format!("{violations} subset-law violations"));
    }
    Ok(format!("1000 formulas; members D {} G {} R {} I {} Q {} QF {}", hits[0], hits[1], hits[2], hits[3], hits[4], hits[5]))
}

fn case_distinction() -> Outcome {
    let mut g = Generator::new(GenConfig::new(0x0c, 10, Theory::NA));
    let mut hg = Generator::new(GenConfig::new(0x0d, 6, Theory::HA));
    for _ in 0..200 {
        let a = g.q_formula();
        if !in_q(&a) {
            return Err(format!("generator produced {a} outside Q"));
        }
        for (s, th) in [
            (Formula::falsity(), Theory::NA),
            (Formula::bot(), Theory::MA),
            (hg.formula(), Theory::HA),
        ] {
            let p = prove_case_distinction(&a, &s, th).map_err(|e| format!("{a}, {s}: {e}"))?;
            audit(&p, th, &case_formula(&a, &s))?;
        }
    }
    Ok("600 instances".into())
}

fn boundary() -> Outcome {
    let (st, p) = boundary_example().map_err(|e| e.to_string())?;
    if flags(&st).map_err(|e| e.to_string())?.d {
        return Err("S → T was classified as definite".into());
    }
    let want = Formula::imp(st.bot_to_falsity().map_err(|e| e.to_string())?, st.clone());
    audit(&p, Theory::MA, &want)?;
    let stored = fs::read_to_string(fixtures().join("cli/boundary.prf")).map_err(|e| e.to_string())?;
    let stored = read_proof(&stored).map_err(|e| e.to_string())?;
    check(&stored, Theory::MA, &mut NameSupply::new()).map_err(|e| e.to_string())?;
    if stored.conclusion() != &want {
        return Err("stored fixture proves something else".into());
    }
    Ok("not in D; (S→T)^F → S→T checks in MA".into())
}

fn premise(d: &Formula, g: &Formula, x: &Var, t: Term, w: Option<Proof>) -> Result<Proof, String> {
    let e = |e: minarith::Error| e.to_string();
    let k = Formula::all(x.clone(), Formula::imp(g.clone(), Formula::bot()));
    let du = minarith::Assumption::new("d", 100, d.clone());
    let ku = minarith::Assumption::new("k", 101, k);
    let arg = match w {
        Some(w) => w,
        None => Proof::assume(du.clone()).map_err(e)?,
    };
    let kt = Proof::all_elim(Proof::assume(ku.clone()).map_err(e)?, t, &mut NameSupply::starting_at(200)).map_err(e)?;
    let body = Proof::imp_elim(kt, arg).map_err(e)?;
    Proof::imp_intro(du, Proof::imp_intro(ku, body).map_err(e)?).map_err(e)
}

fn a_translation() -> Outcome {
    let truth = || Proof::axiom(minarith::Axiom::Truth, Theory::NA).map_err(|e| e.to_string());
    let n = Var::new("n", 0, Type::Nat);
    let b = Var::new("b", 1, Type::Bool);
    let t = Formula::truth();
    let gb = Formula::atom(Term::var(b.clone())).map_err(|e| e.to_string())?;
    let bot = Formula::bot();
    let mut cases = vec![
        (t.clone(), t.clone(), n.clone(), premise(&t, &t, &n, Term::zero(), Some(truth()?))?),
        (t.clone(), gb.clone(), b.clone(), premise(&t, &gb, &b, Term::tt(), Some(truth()?))?),
        (bot.clone(), bot.clone(), n.clone(), premise(&bot, &bot, &n, Term::zero(), None)?),
    ];
    let mut g = Generator::new(GenConfig::new(0xa7, 8, Theory::MA));
    for _ in 0..20 {
        cases.push(g.translation_instance());
    }
    for (d, gf, x, p) in &cases {
        let out = a_translate_classified(d, gf, x, p, &mut NameSupply::new()).map_err(|e| format!("{d}, {gf}: {e}"))?;
        let want = Formula::imp(
            d.bot_to_falsity().map_err(|e| e.to_string())?,
            Formula::ex(x.clone(), gf.bot_to_falsity().map_err(|e| e.to_string())?),
        );
        audit(&out, Theory::HA, &want)?;
    }
    Ok(format!("{} instances", cases.len()))
}

fn oracle() -> Outcome {
    for th in Theory::ALL {
        match bounded_derivable(&Formula::falsity(), th, 8).map_err(|e| e.to_string())? {
            SearchVerdict::Unknown(8) => {}
            v => return Err(format!("F in {th}: {v}")),
        }
    }
    let mut found = 0;
    let mut asked = 0;
    let mut g = Generator::new(GenConfig::new(0x0a, 6, Theory::NA));
    let mut queries: Vec<(Formula, Theory)> = Vec::new();
    for _ in 0..100 {
        queries.push((case_formula(&g.q_formula(), &Formula::falsity()), Theory::NA));
    }
    for th in Theory::ALL {
        let mut g = Generator::new(GenConfig::new(0x0b + th as u64, 6, th));
        for _ in 0..50 {
            queries.push((g.formula(), th));
        }
    }
    for (a, th) in &queries {
        asked += 1;
        if let SearchVerdict::Derivable(p) = bounded_derivable(a, *th, 6).map_err(|e| e.to_string())? {
            audit(&p, *th, a)?;
            found += 1;
        }
    }
    Ok(format!("F unknown at depth 8 in all theories; {found}/{asked} witnesses recheck"))
}

fn cli() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_minarith");
    let run = |args: &[&str], dir: &Path| {
        Command::new(bin).args(args).current_dir(dir).output().map_err(|e| e.to_string())
    };
    let mut files = 0;
    for sub in ["kernel", "cli"] {
        let dir = fixtures().join(sub);
        for entry in fs::read_dir(&dir).map_err(|e| e.to_string())? {
            let path = entry.map_err(|e| e.to_string())?.path();
            if !matches!(path.extension().and_then(|e| e.to_str()), Some("prf" | "fml")) {
                continue;
            }
            let src = fs::read_to_string(&path).map_err(|e| e.to_string())?;
            let Ok(item) = read_item(&src) else { continue };
            let again = read_item(&item.to_string()).map_err(|e| format!("{}: {e}", path.display()))?;
            if again != item || again.to_string() != item.to_string() {
                return Err(format!("{} does not round-trip", path.display()));
            }
            files += 1;
        }
    }

    let kdir = fixtures().join("kernel");
    for (file, th, expect) in manifest() {
        let out = run(&["check", &file, "--theory", th.as_str()], &kdir)?;
        let code = out.status.code();
        let stderr = String::from_utf8_lossy(&out.stderr);
        let ok = if expect == "ok" {
            code == Some(0)
        } else {
            code == Some(1) && stderr.starts_with(&format!("{expect}:"))
        };
        if !ok {
            return Err(format!("{file}: expected {expect}, exit {code:?}, stderr {stderr}"));
        }
    }
    let out = run(&["check", "malformed.prf"], &kdir)?;
    if out.status.code() != Some(2) {
        return Err(format!("malformed.prf exited {:?}", out.status.code()));
    }

    let cdir = fixtures().join("cli");
    let out = run(&["check", "../kernel/truth.prf", "--theory", "NA"], &cdir)?;
    if String::from_utf8_lossy(&out.stdout).trim() != "NA ⊢ (atom (tt))" {
        return Err("truth judgement printed differently".into());
    }
    let out = run(&["classify", "bot.fml"], &cdir)?;
    let lines: Vec<String> = String::from_utf8_lossy(&out.stdout).lines().map(String::from).collect();
    if lines != ["D=yes", "G=yes", "R=yes", "I=no", "Q=no", "QF=yes"] {
        return Err(format!("classify bot.fml printed {lines:?}"));
    }
    for (args, want) in [
        (vec!["translate", "truth-premise.prf"], 0),
        (vec!["translate", "bool-premise.prf"], 0),
        (vec!["translate", "bot-premise.prf", "--mode", "certified", "--cert-d", "bot-cert-d.prf", "--cert-g", "bot-cert-g.prf"], 0),
        (vec!["translate", "bot-premise.prf", "--mode", "certified", "--cert-d", "bot-cert-g.prf", "--cert-g", "bot-cert-g.prf"], 1),
        (vec!["translate", "bot-premise.prf", "--mode", "certified"], 2),
        (vec!["translate", "boundary.prf"], 1),
        (vec!["classify", "malformed.fml"], 2),
        (vec!["gg", "identity.fml"], 0),
        (vec!["efq", "bot.fml", "--theory", "NA"], 1),
        (vec!["search", "falsity.fml", "--depth", "8"], 0),
        (vec!["check", "--theory", "XA", "bot.fml"], 2),
    ] {
        let out = run(&args, &cdir)?;
        if out.status.code() != Some(want) {
            return Err(format!("{args:?}: expected exit {want}, got {:?}", out.status.code()));
        }
        if want == 0 && args[0] == "translate" {
            let p = read_proof(&String::from_utf8_lossy(&out.stdout)).map_err(|e| e.to_string())?;
            let (d, _, _) = minarith::atrans::premise_parts(
                read_proof(&fs::read_to_string(cdir.join(args[1])).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?
                    .conclusion(),
            )
            .map_err(|e| e.to_string())?;
            let (df, _) = p.conclusion().as_imp().ok_or("translation output is not an implication")?;
            if df != &d.bot_to_falsity().map_err(|e| e.to_string())? || !p.is_closed() || !p.theory().le(Theory::HA) {
                return Err(format!("{args:?} printed an unexpected proof"));
            }
        }
    }
    Ok(format!("{files} fixture files round-trip; exit codes match"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("kernel fixtures", Duration::from_secs(1), kernel_fixtures),
        ("ex falso", Duration::from_secs(30), efq),
        ("bot substitution", Duration::from_secs(60), bot_substitution),
        ("Goedel-Gentzen", Duration::from_secs(30), goedel_gentzen),
        ("class certificates", Duration::from_secs(120), classes),
        ("case distinction", Duration::from_secs(60), case_distinction),
        ("definite boundary", Duration::from_secs(1), boundary),
        ("A-translation", Duration::from_secs(60), a_translation),
        ("search oracle", Duration::from_secs(120), oracle),
        ("cli round-trip", Duration::from_secs(10), cli),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(m) if took > budget => Err(format!("{m}, but over budget")),
            o => o,
        };
        let (tag, msg) = match outcome {
            Ok(m) => ("PASS", m),
            Err(m) => {
                failed += 1;
                ("FAIL", m)
            }
        };
        println!("{tag} {:>2} {name} [{:.2}s / {}s] {msg}", i + 1, took.as_secs_f64(), budget.as_secs());
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
