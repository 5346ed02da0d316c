//! Command-line entry point. Exit codes: 0 for valid, provable, or
//! all-pass outcomes; 1 for invalid, unprovable, or failing ones; 2 for
//! usage, file, and parse problems.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use proofbench::display::{fmt_formula, fmt_judgment, fmt_sequent, nd_tree, sk_tree};
use proofbench::script::{parse_script, script_to_proof, Proof};
use proofbench::suite::{paper_suite, render_json, render_text};
use proofbench_core::cutelim::{cut_audit, eliminate_cuts, CutElimError};
use proofbench_core::nd::{check_nd_proof, Mode, NdProof};
use proofbench_core::normalize::{normalize, NormalizeError};
use proofbench_core::semantics::{evaluate, is_tautology, prove_intuitionistic, Valuation};
use proofbench_core::sk::{check_sk_proof, SkProof};
use proofbench_core::syntax::{parse_formula, subformulas, Formula};

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Atoms a truth table will spell out before the row count gets silly.
const TRUTH_TABLE_ATOM_LIMIT: usize = 16;

#[derive(Parser)]
#[command(
    name = "proofbench",
    version,
    about = "Check, transform, and decide propositional proofs"
)]
struct Cli {
    /// Render connectives and turnstiles as unicode symbols.
    #[arg(long, global = true)]
    unicode: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Classical,
    Intuitionistic,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum LogicArg {
    Classical,
    Intuitionistic,
}

#[derive(Subcommand)]
enum Command {
    /// Check a proof script against its kernel.
    Check {
        /// Path to a proof script (JSON).
        script: PathBuf,
        /// Checking discipline; intuitionistic applies to natural-deduction
        /// scripts only.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Reduce a natural-deduction script to normal form.
    Normalize {
        script: PathBuf,
        /// Print each contracted redex.
        #[arg(long)]
        trace: bool,
    },
    /// Remove every cut from a sequent-calculus script.
    CutEliminate { script: PathBuf },
    /// Decide a formula in the chosen logic.
    Prove {
        #[arg(long, value_enum)]
        logic: LogicArg,
        formula: String,
    },
    /// Print the full truth table of a formula.
    TruthTable { formula: String },
    /// Run the built-in ten-case suite.
    PaperSuite {
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let unicode = cli.unicode;
    match cli.command {
        Command::Check { script, mode } => cmd_check(&script, mode, unicode),
        Command::Normalize { script, trace } => cmd_normalize(&script, trace, unicode),
        Command::CutEliminate { script } => cmd_cut_eliminate(&script, unicode),
        Command::Prove { logic, formula } => cmd_prove(logic, &formula),
        Command::TruthTable { formula } => cmd_truth_table(&formula, unicode),
        Command::PaperSuite { json } => cmd_paper_suite(json),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    2
}

fn load_proof(path: &Path) -> Result<Proof, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let script = parse_script(&text).map_err(|e| e.to_string())?;
    script_to_proof(&script).map_err(|e| e.to_string())
}

fn load_sk(path: &Path, command: &str) -> Result<SkProof, String> {
    match load_proof(path)? {
        Proof::Sk(p) => Ok(p),
        Proof::Nd(_) => Err(format!(
            "{command} applies to sequent-calculus scripts; this one is natural deduction"
        )),
    }
}

fn load_nd(path: &Path, command: &str) -> Result<NdProof, String> {
    match load_proof(path)? {
        Proof::Nd(p) => Ok(p),
        Proof::Sk(_) => Err(format!(
            "{command} applies to natural-deduction scripts; this one is sequent calculus"
        )),
    }
}

fn cmd_check(path: &Path, mode: Option<ModeArg>, unicode: bool) -> i32 {
    let proof = match load_proof(path) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    match proof {
        Proof::Sk(p) => {
            if mode == Some(ModeArg::Intuitionistic) {
                return usage_error(
                    "the sequent kernel is classical; --mode intuitionistic applies to natural-deduction scripts",
                );
            }
            let report = check_sk_proof(&p);
            if report.valid {
                println!("valid: {}", fmt_sequent(&report.endsequent, unicode));
                0
            } else {
                let v = report.violation.expect("invalid reports carry a violation");
                println!("invalid: {v}");
                1
            }
        }
        Proof::Nd(p) => {
            let mode = match mode {
                Some(ModeArg::Intuitionistic) => Mode::Intuitionistic,
                _ => Mode::Classical,
            };
            let report = check_nd_proof(&p, mode);
            if report.valid {
                println!("valid: {}", fmt_judgment(&p, unicode));
                0
            } else {
                let v = report.violation.expect("invalid reports carry a violation");
                println!("invalid: {v}");
                1
            }
        }
    }
}

fn cmd_normalize(path: &Path, trace: bool, unicode: bool) -> i32 {
    let p = match load_nd(path, "normalize") {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    match normalize(&p) {
        Ok(outcome) => {
            if trace {
                for (i, entry) in outcome.trace.iter().enumerate() {
                    println!("step {}: {}", i + 1, entry.redex);
                }
            }
            println!("normal form reached in {} step(s)", outcome.steps());
            println!("judgment: {}", fmt_judgment(&outcome.result, unicode));
            print!("{}", nd_tree(&outcome.result, unicode));
            0
        }
        Err(NormalizeError::InvalidProof(v)) => {
            println!("invalid: {v}");
            1
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn cmd_cut_eliminate(path: &Path, unicode: bool) -> i32 {
    let p = match load_sk(path, "cut-eliminate") {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    match eliminate_cuts(&p) {
        Ok(out) => {
            let removed = cut_audit(&p).map(|a| a.count()).unwrap_or(0);
            println!("eliminated {removed} cut(s)");
            println!("endsequent: {}", fmt_sequent(out.endsequent(), unicode));
            print!("{}", sk_tree(&out, unicode));
            0
        }
        Err(CutElimError::InvalidProof(v)) => {
            println!("invalid: {v}");
            1
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn cmd_prove(logic: LogicArg, formula: &str) -> i32 {
    let f = match parse_formula(formula) {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    match logic {
        LogicArg::Intuitionistic => {
            if prove_intuitionistic(&f).is_provable() {
                println!("provable");
                0
            } else {
                println!("unprovable");
                1
            }
        }
        LogicArg::Classical => match is_tautology(&f) {
            Ok(v) if v.holds() => {
                println!("tautology");
                0
            }
            Ok(v) => {
                let counter = v
                    .countervaluation()
                    .expect("non-tautologies carry a countervaluation");
                println!("not a tautology (falsified at {})", fmt_valuation(counter));
                1
            }
            Err(e) => usage_error(&e.to_string()),
        },
    }
}

fn fmt_valuation(v: &Valuation) -> String {
    if v.is_empty() {
        return "the empty valuation".to_string();
    }
    v.iter()
        .map(|(atom, value)| format!("{atom}={}", if *value { "T" } else { "F" }))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_truth_table(formula: &str, unicode: bool) -> i32 {
    let f = match parse_formula(formula) {
        Ok(f) => f,
        Err(e) => return usage_error(&e.to_string()),
    };
    let atoms: Vec<String> = subformulas(&f)
        .iter()
        .filter_map(|g| match g {
            Formula::Atom(name) => Some(name.clone()),
            _ => None,
        })
        .collect();
    if atoms.len() > TRUTH_TABLE_ATOM_LIMIT {
        return usage_error(&format!(
            "formula has {} atoms, over the table limit of {TRUTH_TABLE_ATOM_LIMIT}",
            atoms.len()
        ));
    }
    let rendered = fmt_formula(&f, unicode);
    if atoms.is_empty() {
        println!("| {rendered}");
        let value = evaluate(&f, &Valuation::new()).expect("closed formulas evaluate");
        println!("| {}", tv(value));
        return 0;
    }
    println!("{} | {rendered}", atoms.join(" "));
    let n = atoms.len();
    for row in 0..(1usize << n) {
        let mut valuation = Valuation::new();
        let mut cells = Vec::with_capacity(n);
        for (j, atom) in atoms.iter().enumerate() {
            let value = (row >> (n - 1 - j)) & 1 == 1;
            valuation.insert(atom.clone(), value);
            cells.push(tv(value));
        }
        let value = evaluate(&f, &valuation).expect("every atom is assigned");
        println!("{} | {}", cells.join(" "), tv(value));
    }
    0
}

fn tv(value: bool) -> &'static str {
    if value {
        "T"
    } else {
        "F"
    }
}

fn cmd_paper_suite(json: bool) -> i32 {
    let report = paper_suite();
    if json {
        print!("{}", render_json(&report, VERSION));
    } else {
        print!("{}", render_text(&report, VERSION));
    }
    if report.all_pass() {
        0
    } else {
        1
    }
}
