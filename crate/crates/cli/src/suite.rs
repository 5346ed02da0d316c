//! The built-in ten-case suite: every display the workbench is built
//! around, run end to end against the kernels, the transformations, and
//! both semantic oracles. Case names are frozen identifiers; reports are
//! deterministic so the suite can serve as a golden integration check.

use serde::Serialize;

use proofbench_core::cutelim::{cut_audit, eliminate_cuts};
use proofbench_core::nd::{check_nd_proof, nd_catalog, open_assumptions, Mode, NdProof, NdRule};
use proofbench_core::normalize::normalize;
use proofbench_core::semantics::{
    is_tautology, kripke_search, prove_intuitionistic, KripkeSearch,
};
use proofbench_core::sequent::{parse_sequent, render_sequent, Multiset};
use proofbench_core::sk::{check_sk_proof, derivation_catalog, SkProof};
use proofbench_core::syntax::{parse_formula, render_formula, Formula};

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub expectation: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn total(&self) -> usize {
        self.cases.len()
    }

    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }
}

fn case(name: &str, expectation: &str, observed: String, pass: bool) -> CaseResult {
    CaseResult {
        name: name.to_string(),
        expectation: expectation.to_string(),
        observed,
        pass,
    }
}

fn sequent_case(name: &str, proof: &SkProof, expected: &str) -> CaseResult {
    let report = check_sk_proof(proof);
    let target = parse_sequent(expected).expect("expected sequents are well formed");
    let observed = if report.valid {
        format!("valid, endsequent {}", render_sequent(&report.endsequent))
    } else {
        format!("invalid: {}", report.violation.expect("invalid reports carry a violation"))
    };
    let pass = report.valid && report.endsequent == target;
    case(name, &format!("valid, endsequent {expected}"), observed, pass)
}

fn nd_case(
    name: &str,
    proof: &NdProof,
    conclusion: &str,
    opens: &[&str],
    intuitionistic_ok: bool,
) -> CaseResult {
    let classical = check_nd_proof(proof, Mode::Classical);
    let intuitionistic = check_nd_proof(proof, Mode::Intuitionistic);
    let mut expected_opens = Multiset::new();
    for o in opens {
        expected_opens.insert(parse_formula(o).expect("expected formulas are well formed"));
    }
    let target = parse_formula(conclusion).expect("expected formulas are well formed");

    let fmt_mode = |valid: bool| if valid { "accepted" } else { "rejected" };
    let observed = format!(
        "classical {}, intuitionistic {}, concludes {} from {} open assumptions",
        fmt_mode(classical.valid),
        fmt_mode(intuitionistic.valid),
        render_formula(&proof.conclusion),
        open_assumptions(proof).len(),
    );
    let expectation = format!(
        "classical accepted, intuitionistic {}, concludes {conclusion} from open {{{}}}",
        fmt_mode(intuitionistic_ok),
        opens.join(", "),
    );
    let pass = classical.valid
        && intuitionistic.valid == intuitionistic_ok
        && proof.conclusion == target
        && open_assumptions(proof) == expected_opens;
    case(name, &expectation, observed, pass)
}

/// Run all ten cases. Failures show up as report entries, never panics.
pub fn paper_suite() -> SuiteReport {
    let sk = derivation_catalog();
    let nd = nd_catalog();
    let mut cases = Vec::with_capacity(10);

    cases.push(sequent_case("sk-dni", &sk["sk-dni"], "A => ~~A"));
    cases.push(sequent_case("sk-dne", &sk["sk-dne"], "~~A => A"));

    cases.push({
        let proof = &sk["sk-cut-roundtrip"];
        let expectation = "one cut on ~~A; eliminates to a cut-free proof of A => A";
        let before = check_sk_proof(proof);
        let audit = if before.valid { cut_audit(proof).ok() } else { None };
        let outcome = if before.valid { eliminate_cuts(proof).ok() } else { None };
        let target = parse_sequent("A => A").unwrap();
        let (observed, pass) = match (audit, outcome) {
            (Some(audit), Some(out)) => {
                let out_ok = check_sk_proof(&out).valid
                    && cut_audit(&out).map(|a| a.is_cut_free()).unwrap_or(false)
                    && out.endsequent() == &target;
                let cut_desc: Vec<String> = audit
                    .cuts
                    .iter()
                    .map(|c| render_formula(&c.formula))
                    .collect();
                (
                    format!(
                        "{} cut(s) on {}; eliminated to {} proof of {}",
                        audit.count(),
                        cut_desc.join(", "),
                        if cut_audit(&out).map(|a| a.is_cut_free()).unwrap_or(false) {
                            "a cut-free"
                        } else {
                            "a cut-bearing"
                        },
                        render_sequent(out.endsequent()),
                    ),
                    audit.count() == 1
                        && audit.cuts[0].formula == parse_formula("~~A").unwrap()
                        && out_ok,
                )
            }
            _ => ("the derivation or its elimination failed".to_string(), false),
        };
        case("sk-cut-roundtrip", expectation, observed, pass)
    });

    cases.push(nd_case("nd-dni", &nd["nd-dni"], "~~A", &["A"], true));
    cases.push(nd_case("nd-raa-or", &nd["nd-raa-or"], "~A", &["~(A | B)"], true));
    cases.push(nd_case("nd-dne", &nd["nd-dne"], "A", &["~~A"], false));
    cases.push(nd_case("nd-harmony-detour", &nd["nd-harmony-detour"], "A", &["A"], false));

    cases.push({
        let expectation = "detour normalizes to the bare hypothesis in 1 step";
        let (observed, pass) = match normalize(&nd["nd-harmony-detour"]) {
            Ok(outcome) => {
                let is_hyp = outcome.result.rule == NdRule::Hyp
                    && outcome.result.conclusion == Formula::atom("A");
                (
                    format!(
                        "normalized to {} ({}) in {} step(s)",
                        render_formula(&outcome.result.conclusion),
                        outcome.result.rule.name(),
                        outcome.steps(),
                    ),
                    is_hyp && outcome.steps() == 1,
                )
            }
            Err(e) => (format!("normalization failed: {e}"), false),
        };
        case("normalize-detour", expectation, observed, pass)
    });

    cases.push({
        let expectation =
            "A -> ~~A provable, ~~A -> A unprovable with a 2-world countermodel";
        let dni = parse_formula("A -> ~~A").unwrap();
        let dne = parse_formula("~~A -> A").unwrap();
        let verdict_name = |p: bool| if p { "provable" } else { "unprovable" };
        let dni_provable = prove_intuitionistic(&dni).is_provable();
        let dne_provable = prove_intuitionistic(&dne).is_provable();
        let counter = kripke_search(&dne, 2);
        let counter_desc = match &counter {
            Ok(KripkeSearch::Countermodel { model, .. }) => {
                format!("countermodel with {} worlds", model.world_count())
            }
            Ok(KripkeSearch::NoCountermodel { bound }) => {
                format!("no countermodel within {bound} worlds")
            }
            Err(e) => format!("search failed: {e}"),
        };
        let observed = format!(
            "A -> ~~A {}, ~~A -> A {}, {counter_desc}",
            verdict_name(dni_provable),
            verdict_name(dne_provable),
        );
        let pass = dni_provable
            && !dne_provable
            && matches!(
                &counter,
                Ok(KripkeSearch::Countermodel { model, .. }) if model.world_count() == 2
            );
        case("asymmetry", expectation, observed, pass)
    });

    cases.push({
        let expectation = "(A -> ~~A) & (~~A -> A) is a tautology";
        let f = parse_formula("(A -> ~~A) & (~~A -> A)").unwrap();
        let (observed, pass) = match is_tautology(&f) {
            Ok(v) if v.holds() => ("tautology".to_string(), true),
            Ok(v) => (
                format!(
                    "falsified at {:?}",
                    v.countervaluation().expect("non-tautologies carry a countervaluation")
                ),
                false,
            ),
            Err(e) => (format!("evaluation failed: {e}"), false),
        };
        case("bivalence", expectation, observed, pass)
    });

    SuiteReport { cases }
}

/// The fixed text form: a version header, one line per case, and a tally.
pub fn render_text(report: &SuiteReport, version: &str) -> String {
    let mut out = format!("proofbench suite {version}\n");
    for c in &report.cases {
        out.push_str(&format!(
            "{}: {} ({})\n",
            c.name,
            if c.pass { "pass" } else { "FAIL" },
            c.observed,
        ));
    }
    out.push_str(&format!("passed {}/{}\n", report.passed(), report.total()));
    out
}

/// Machine-readable form with the same content.
pub fn render_json(report: &SuiteReport, version: &str) -> String {
    #[derive(Serialize)]
    struct Envelope<'a> {
        version: &'a str,
        passed: usize,
        total: usize,
        cases: &'a [CaseResult],
    }
    let envelope = Envelope {
        version,
        passed: report.passed(),
        total: report.total(),
        cases: &report.cases,
    };
    let mut out = serde_json::to_string_pretty(&envelope).expect("reports always serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_ten_cases_pass_with_frozen_names() {
        let report = paper_suite();
        let names: Vec<&str> = report.cases.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "sk-dni",
                "sk-dne",
                "sk-cut-roundtrip",
                "nd-dni",
                "nd-raa-or",
                "nd-dne",
                "nd-harmony-detour",
                "normalize-detour",
                "asymmetry",
                "bivalence",
            ]
        );
        for c in &report.cases {
            assert!(c.pass, "{} failed: {}", c.name, c.observed);
        }
        assert_eq!(report.passed(), 10);
        assert!(report.all_pass());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = render_text(&paper_suite(), "test");
        let b = render_text(&paper_suite(), "test");
        assert_eq!(a, b);
        let ja = render_json(&paper_suite(), "test");
        let jb = render_json(&paper_suite(), "test");
        assert_eq!(ja, jb);
    }

    #[test]
    fn a_failing_case_sinks_the_report() {
        let mut report = paper_suite();
        report.cases[3].pass = false;
        assert!(!report.all_pass());
        assert_eq!(report.passed(), 9);
        let text = render_text(&report, "test");
        assert!(text.contains("nd-dni: FAIL"));
        assert!(text.contains("passed 9/10"));
    }

    #[test]
    fn json_report_carries_version_and_cases() {
        let json = render_json(&paper_suite(), "1.2.3");
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["version"], "1.2.3");
        assert_eq!(value["total"], 10);
        assert_eq!(value["cases"].as_array().unwrap().len(), 10);
        assert_eq!(value["cases"][0]["name"], "sk-dni");
    }
}
