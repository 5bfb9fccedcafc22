use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use minarith::atrans::{a_translate_classified, premise_parts, refined_a_translate, TranslationInput};
use minarith::classes::{classify, ClassId};
use minarith::derived::{prove_efq, prove_gg_equiv};
use minarith::kernel::check;
use minarith::oracle::bounded_derivable;
use minarith::sexp::{read_formula, read_proof, ReadError};
use minarith::{Error, Formula, NameSupply, Proof, Theory};

#[derive(Parser)]
#[command(name = "minarith", version, about = "Proof checking and A-translation for minimal arithmetic")]
struct Cli {
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recheck a proof and print its judgement.
    Check {
        path: PathBuf,
        /// Theory the proof must live in; defaults to the least one.
        #[arg(long)]
        theory: Option<Theory>,
    },
    /// Print class membership of a formula.
    Classify {
        path: PathBuf,
        /// Also print a certificate for every class the formula is in.
        #[arg(long)]
        proofs: bool,
    },
    /// Turn an MA proof of D → ∀x(G → ⊥) → ⊥ into an HA proof of D^F → ∃x G^F.
    Translate {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Classified)]
        mode: Mode,
        /// Proof of D^F → D (certified mode).
        #[arg(long)]
        cert_d: Option<PathBuf>,
        /// Proof of ∀x(G → (G^F → ⊥) → ⊥) (certified mode).
        #[arg(long)]
        cert_g: Option<PathBuf>,
    },
    /// Print the Gödel-Gentzen translation, with the equivalence proof for NA input.
    Gg { path: PathBuf },
    /// Print a proof of F → A.
    Efq {
        path: PathBuf,
        #[arg(long)]
        theory: Option<Theory>,
    },
    /// Bounded proof search.
    Search {
        path: PathBuf,
        #[arg(long)]
        theory: Option<Theory>,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Classified,
    Certified,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

impl From<ReadError> for Failure {
    fn from(e: ReadError) -> Failure {
        match e {
            ReadError::Syntax(m) => Failure::Usage(format!("syntax error: {m}")),
            ReadError::Kernel(e) => Failure::Domain(e),
        }
    }
}

fn slurp(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn formula_at(path: &Path) -> Result<Formula, Failure> {
    Ok(read_formula(&slurp(path)?)?)
}

fn proof_at(path: &Path) -> Result<Proof, Failure> {
    Ok(read_proof(&slurp(path)?)?)
}

fn least_theory(a: &Formula) -> Result<Theory, Error> {
    a.min_theory()
        .ok_or_else(|| Error::Theory(format!("{a} mixes ⊥ with ∨/∃")))
}

fn run(cmd: Command) -> Result<Vec<String>, Failure> {
    let mut supply = NameSupply::new();
    Ok(match cmd {
        Command::Check { path, theory } => {
            let p = proof_at(&path)?;
            let th = theory.unwrap_or(p.theory());
            vec![check(&p, th, &mut supply)?.to_string()]
        }
        Command::Classify { path, proofs } => {
            let a = formula_at(&path)?;
            let report = classify(&a)?;
            let mut lines = report.lines();
            if proofs {
                for c in ClassId::ALL {
                    if let Some(p) = report.certificate(c) {
                        lines.push(format!("(certificate {c} {p})"));
                    }
                }
            }
            lines
        }
        Command::Translate {
            path,
            mode,
            cert_d,
            cert_g,
        } => {
            let premise = proof_at(&path)?;
            let out = match mode {
                Mode::Classified => {
                    let (d, x, g) = premise_parts(premise.conclusion())?;
                    a_translate_classified(&d, &g, &x, &premise, &mut supply)?
                }
                Mode::Certified => {
                    let (Some(cd), Some(cg)) = (cert_d, cert_g) else {
                        return Err(Failure::Usage(
                            "certified mode needs --cert-d and --cert-g".into(),
                        ));
                    };
                    let input = TranslationInput::new(premise, proof_at(&cd)?, proof_at(&cg)?)?;
                    refined_a_translate(&input, &mut supply)?
                }
            };
            vec![out.to_string()]
        }
        Command::Gg { path } => {
            let a = formula_at(&path)?;
            let mut lines = vec![a.gg_translate()?.to_string()];
            if least_theory(&a)? == Theory::NA {
                lines.push(prove_gg_equiv(&a)?.to_string());
            }
            lines
        }
        Command::Efq { path, theory } => {
            let a = formula_at(&path)?;
            let th = match theory {
                Some(th) => th,
                None => least_theory(&a)?,
            };
            vec![prove_efq(&a, th)?.to_string()]
        }
        Command::Search {
            path,
            theory,
            depth,
        } => {
            let a = formula_at(&path)?;
            let th = match theory {
                Some(th) => th,
                None => least_theory(&a)?,
            };
            vec![bounded_derivable(&a, th, depth)?.to_string()]
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(lines) => {
            let mut text = lines.join("\n");
            text.push('\n');
            match cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, text) {
                        eprintln!("usage-error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}: {}", e.code(), e.detail());
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage-error: {m}");
            ExitCode::from(2)
        }
    }
}
