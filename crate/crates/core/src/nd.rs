//! Natural deduction with labelled hypotheses and explicit discharge.
//!
//! Proofs are trees whose leaves are labelled hypotheses `[A]^l` and whose
//! inner nodes apply introduction/elimination rules. Discharging rules
//! (`ImpI`, `NegI`, `OrE`, `Raa`) carry a label and bind every open
//! hypothesis with that label in the designated premise subtrees; binding
//! zero leaves (vacuous discharge) or several (multiple discharge) is
//! allowed, and an inner node reusing a label shadows outer ones, since it
//! closes those leaves first.
//!
//! Checking runs in one of two modes: `Classical` admits everything, while
//! `Intuitionistic` rejects `Raa` and `MacroDnE`. The two macro rules are
//! checked compressions of double negation introduction and elimination and
//! can be rewritten away with [`expand_macros`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::sequent::Multiset;
use crate::syntax::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NdRule {
    Hyp,
    AndI,
    AndE1,
    AndE2,
    OrI1,
    OrI2,
    OrE,
    ImpI,
    ImpE,
    NegI,
    NegE,
    BotE,
    Raa,
    MacroDnI,
    MacroDnE,
}

impl NdRule {
    pub fn arity(&self) -> usize {
        match self {
            NdRule::Hyp => 0,
            NdRule::AndI | NdRule::ImpE | NdRule::NegE => 2,
            NdRule::OrE => 3,
            _ => 1,
        }
    }

    /// Rules that carry a discharge label.
    pub fn discharges(&self) -> bool {
        matches!(self, NdRule::ImpI | NdRule::NegI | NdRule::OrE | NdRule::Raa)
    }

    /// Rules rejected in intuitionistic mode.
    pub fn classical_only(&self) -> bool {
        matches!(self, NdRule::Raa | NdRule::MacroDnE)
    }

    pub fn name(&self) -> &'static str {
        match self {
            NdRule::Hyp => "Hyp",
            NdRule::AndI => "AndI",
            NdRule::AndE1 => "AndE1",
            NdRule::AndE2 => "AndE2",
            NdRule::OrI1 => "OrI1",
            NdRule::OrI2 => "OrI2",
            NdRule::OrE => "OrE",
            NdRule::ImpI => "ImpI",
            NdRule::ImpE => "ImpE",
            NdRule::NegI => "NegI",
            NdRule::NegE => "NegE",
            NdRule::BotE => "BotE",
            NdRule::Raa => "Raa",
            NdRule::MacroDnI => "MacroDnI",
            NdRule::MacroDnE => "MacroDnE",
        }
    }
}

impl fmt::Display for NdRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Intuitionistic,
    Classical,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Intuitionistic => "intuitionistic",
            Mode::Classical => "classical",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NdProof {
    pub rule: NdRule,
    pub conclusion: Formula,
    /// Hypothesis label; `Hyp` only.
    pub label: Option<String>,
    /// Discharge label; `ImpI`, `NegI`, `OrE`, `Raa` only.
    pub discharge: Option<String>,
    pub premises: Vec<NdProof>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{rule}: {message}")]
pub struct NdError {
    pub rule: NdRule,
    pub message: String,
}

fn nd_err(rule: NdRule, message: impl Into<String>) -> NdError {
    NdError { rule, message: message.into() }
}

impl NdProof {
    /// Raw constructor; performs no checking.
    pub fn new(
        rule: NdRule,
        conclusion: Formula,
        label: Option<String>,
        discharge: Option<String>,
        premises: Vec<NdProof>,
    ) -> Self {
        NdProof { rule, conclusion, label, discharge, premises }
    }

    pub fn hyp(label: impl Into<String>, formula: Formula) -> Self {
        NdProof::new(NdRule::Hyp, formula, Some(label.into()), None, Vec::new())
    }

    pub fn and_i(left: NdProof, right: NdProof) -> Self {
        let conclusion = Formula::and(left.conclusion.clone(), right.conclusion.clone());
        NdProof::new(NdRule::AndI, conclusion, None, None, vec![left, right])
    }

    pub fn and_e1(premise: NdProof) -> Result<Self, NdError> {
        let Formula::And(a, _) = &premise.conclusion else {
            return Err(nd_err(NdRule::AndE1, "premise must be a conjunction"));
        };
        let conclusion = (**a).clone();
        Ok(NdProof::new(NdRule::AndE1, conclusion, None, None, vec![premise]))
    }

    pub fn and_e2(premise: NdProof) -> Result<Self, NdError> {
        let Formula::And(_, b) = &premise.conclusion else {
            return Err(nd_err(NdRule::AndE2, "premise must be a conjunction"));
        };
        let conclusion = (**b).clone();
        Ok(NdProof::new(NdRule::AndE2, conclusion, None, None, vec![premise]))
    }

    /// From `A` conclude `A | right`.
    pub fn or_i1(premise: NdProof, right: Formula) -> Self {
        let conclusion = Formula::or(premise.conclusion.clone(), right);
        NdProof::new(NdRule::OrI1, conclusion, None, None, vec![premise])
    }

    /// From `B` conclude `left | B`.
    pub fn or_i2(left: Formula, premise: NdProof) -> Self {
        let conclusion = Formula::or(left, premise.conclusion.clone());
        NdProof::new(NdRule::OrI2, conclusion, None, None, vec![premise])
    }

    /// Case split on `major : A | B`; `label` binds `[A]` in `left` and
    /// `[B]` in `right`, which must agree on their conclusion.
    pub fn or_e(
        label: impl Into<String>,
        major: NdProof,
        left: NdProof,
        right: NdProof,
    ) -> Result<Self, NdError> {
        if !matches!(major.conclusion, Formula::Or(..)) {
            return Err(nd_err(NdRule::OrE, "major premise must be a disjunction"));
        }
        if left.conclusion != right.conclusion {
            return Err(nd_err(NdRule::OrE, "case branches must agree on their conclusion"));
        }
        let conclusion = left.conclusion.clone();
        Ok(NdProof::new(
            NdRule::OrE,
            conclusion,
            None,
            Some(label.into()),
            vec![major, left, right],
        ))
    }

    /// From a proof of `B`, conclude `antecedent -> B` discharging
    /// `[antecedent]` leaves labelled `label`.
    pub fn imp_i(label: impl Into<String>, antecedent: Formula, premise: NdProof) -> Self {
        let conclusion = Formula::imp(antecedent, premise.conclusion.clone());
        NdProof::new(NdRule::ImpI, conclusion, None, Some(label.into()), vec![premise])
    }

    pub fn imp_e(function: NdProof, argument: NdProof) -> Result<Self, NdError> {
        let Formula::Imp(a, b) = &function.conclusion else {
            return Err(nd_err(NdRule::ImpE, "major premise must be an implication"));
        };
        if **a != argument.conclusion {
            return Err(nd_err(
                NdRule::ImpE,
                format!("argument proves '{}' but '{}' is required", argument.conclusion, a),
            ));
        }
        let conclusion = (**b).clone();
        Ok(NdProof::new(NdRule::ImpE, conclusion, None, None, vec![function, argument]))
    }

    /// From a proof of `_|_`, conclude `~hypothesis` discharging
    /// `[hypothesis]` leaves labelled `label`.
    pub fn neg_i(label: impl Into<String>, hypothesis: Formula, premise: NdProof) -> Self {
        let conclusion = Formula::neg(hypothesis);
        NdProof::new(NdRule::NegI, conclusion, None, Some(label.into()), vec![premise])
    }

    /// From `X` and `~X`, conclude `_|_`. Positive premise first.
    pub fn neg_e(positive: NdProof, negative: NdProof) -> Result<Self, NdError> {
        if negative.conclusion != Formula::neg(positive.conclusion.clone()) {
            return Err(nd_err(
                NdRule::NegE,
                format!(
                    "premises must be contradictory, got '{}' and '{}'",
                    positive.conclusion, negative.conclusion
                ),
            ));
        }
        Ok(NdProof::new(
            NdRule::NegE,
            Formula::bottom(),
            None,
            None,
            vec![positive, negative],
        ))
    }

    pub fn bot_e(premise: NdProof, conclusion: Formula) -> Self {
        NdProof::new(NdRule::BotE, conclusion, None, None, vec![premise])
    }

    /// From a proof of `_|_`, conclude `conclusion` discharging
    /// `[~conclusion]` leaves labelled `label`. Classical only.
    pub fn raa(label: impl Into<String>, conclusion: Formula, premise: NdProof) -> Self {
        NdProof::new(NdRule::Raa, conclusion, None, Some(label.into()), vec![premise])
    }

    /// Compressed double negation introduction: from `A` conclude `~~A`.
    pub fn macro_dn_i(premise: NdProof) -> Self {
        let conclusion = Formula::neg(Formula::neg(premise.conclusion.clone()));
        NdProof::new(NdRule::MacroDnI, conclusion, None, None, vec![premise])
    }

    /// Compressed double negation elimination: from `~~A` conclude `A`.
    /// Classical only.
    pub fn macro_dn_e(premise: NdProof) -> Result<Self, NdError> {
        let Formula::Neg(inner) = &premise.conclusion else {
            return Err(nd_err(NdRule::MacroDnE, "premise must be a double negation"));
        };
        let Formula::Neg(a) = &**inner else {
            return Err(nd_err(NdRule::MacroDnE, "premise must be a double negation"));
        };
        let conclusion = (**a).clone();
        Ok(NdProof::new(NdRule::MacroDnE, conclusion, None, None, vec![premise]))
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(NdProof::node_count).sum::<usize>()
    }

    /// Every label mentioned anywhere in the tree, as hypothesis or binder.
    pub fn labels(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        collect_labels(self, &mut out);
        out
    }
}

fn collect_labels(p: &NdProof, out: &mut BTreeSet<String>) {
    if let Some(l) = &p.label {
        out.insert(l.clone());
    }
    if let Some(l) = &p.discharge {
        out.insert(l.clone());
    }
    for q in &p.premises {
        collect_labels(q, out);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NdViolation {
    pub path: Vec<usize>,
    pub rule: NdRule,
    pub message: String,
}

impl fmt::Display for NdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "at root: {}", self.message)
        } else {
            let path: Vec<String> = self.path.iter().map(|i| i.to_string()).collect();
            write!(f, "at node {}: {}", path.join("."), self.message)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NdCheckReport {
    pub valid: bool,
    pub conclusion: Formula,
    /// Hypotheses left open at the root (best effort when invalid).
    pub open_assumptions: Multiset,
    pub violation: Option<NdViolation>,
}

/// Open-hypothesis bookkeeping: occurrences per (label, formula) pair.
pub(crate) type OpenHyps = BTreeMap<(String, Formula), usize>;

fn merge(mut into: OpenHyps, from: OpenHyps) -> OpenHyps {
    for (k, n) in from {
        *into.entry(k).or_insert(0) += n;
    }
    into
}

fn to_multiset(open: &OpenHyps) -> Multiset {
    open.iter()
        .flat_map(|((_, f), n)| std::iter::repeat(f.clone()).take(*n))
        .collect()
}

/// The hypotheses of `p` not discharged by any rule inside it, as a formula
/// multiset. Purely structural: it applies the same binding discipline as
/// the checker but ignores schema validity.
pub fn open_assumptions(p: &NdProof) -> Multiset {
    to_multiset(&open_hyps(p))
}

pub(crate) fn open_hyps(p: &NdProof) -> OpenHyps {
    let mut opens: Vec<OpenHyps> = p.premises.iter().map(open_hyps).collect();
    match p.rule {
        NdRule::Hyp => {
            let mut out = OpenHyps::new();
            if let Some(l) = &p.label {
                out.insert((l.clone(), p.conclusion.clone()), 1);
            }
            out
        }
        _ => {
            if let (Some(l), Some(shapes)) = (&p.discharge, discharge_shapes(p)) {
                for (idx, required) in shapes {
                    if let Some(open) = opens.get_mut(idx) {
                        open.remove(&(l.clone(), required));
                    }
                }
            }
            opens.into_iter().fold(OpenHyps::new(), merge)
        }
    }
}

/// For discharging rules: which premise index binds which hypothesis
/// formula. `None` when the node's conclusion is too malformed to tell.
fn discharge_shapes(p: &NdProof) -> Option<Vec<(usize, Formula)>> {
    match p.rule {
        NdRule::ImpI => match &p.conclusion {
            Formula::Imp(a, _) => Some(vec![(0, (**a).clone())]),
            _ => None,
        },
        NdRule::NegI => match &p.conclusion {
            Formula::Neg(a) => Some(vec![(0, (**a).clone())]),
            _ => None,
        },
        NdRule::Raa => Some(vec![(0, Formula::neg(p.conclusion.clone()))]),
        NdRule::OrE => match p.premises.first().map(|m| &m.conclusion) {
            Some(Formula::Or(a, b)) => Some(vec![(1, (**a).clone()), (2, (**b).clone())]),
            _ => None,
        },
        _ => None,
    }
}

/// Check every node of `p` against its rule schema in the given mode.
///
/// Violations are reported deterministically: a node's own schema problems
/// come before any in its premises (left to right), and its discharge
/// hygiene is judged after its premises are known good.
pub fn check_nd_proof(p: &NdProof, mode: Mode) -> NdCheckReport {
    let mut path = Vec::new();
    match analyze(p, mode, &mut path) {
        Ok(open) => NdCheckReport {
            valid: true,
            conclusion: p.conclusion.clone(),
            open_assumptions: to_multiset(&open),
            violation: None,
        },
        Err(violation) => NdCheckReport {
            valid: false,
            conclusion: p.conclusion.clone(),
            open_assumptions: open_assumptions(p),
            violation: Some(violation),
        },
    }
}

fn analyze(p: &NdProof, mode: Mode, path: &mut Vec<usize>) -> Result<OpenHyps, NdViolation> {
    let fail = |path: &[usize], message: String| NdViolation {
        path: path.to_vec(),
        rule: p.rule,
        message,
    };
    if mode == Mode::Intuitionistic && p.rule.classical_only() {
        return Err(fail(path, "classical-only rule".to_string()));
    }
    if let Err(message) = shape_check(p) {
        return Err(fail(path, message));
    }

    let mut opens = Vec::with_capacity(p.premises.len());
    for (i, premise) in p.premises.iter().enumerate() {
        path.push(i);
        let open = analyze(premise, mode, path)?;
        path.pop();
        opens.push(open);
    }

    if p.rule == NdRule::Hyp {
        let mut out = OpenHyps::new();
        out.insert((p.label.clone().unwrap(), p.conclusion.clone()), 1);
        return Ok(out);
    }

    if let Some(label) = &p.discharge {
        let shapes = discharge_shapes(p).expect("shape_check validated the conclusion");
        if p.rule == NdRule::OrE {
            if let Some(((l, f), _)) =
                opens[0].iter().find(|((l, _), _)| l == label).map(|(k, v)| (k.clone(), *v))
            {
                return Err(fail(
                    path,
                    format!(
                        "discharge label '{l}' is already open at '{f}' in the disjunction premise"
                    ),
                ));
            }
        }
        for (idx, required) in shapes {
            let open = &mut opens[idx];
            let mismatched: Option<(String, Formula)> = open
                .keys()
                .find(|(l, f)| l == label && *f != required)
                .cloned();
            if let Some((l, f)) = mismatched {
                return Err(fail(
                    path,
                    format!(
                        "discharge label '{l}' binds hypothesis '{f}' but the rule requires '{required}'"
                    ),
                ));
            }
            open.remove(&(label.clone(), required));
        }
    }

    Ok(opens.into_iter().fold(OpenHyps::new(), merge))
}

/// Local schema check: annotations, arity, and the relation between a node's
/// conclusion and its premises' conclusions.
fn shape_check(p: &NdProof) -> Result<(), String> {
    if p.rule == NdRule::Hyp {
        if p.label.is_none() {
            return Err("hypothesis requires a label".to_string());
        }
    } else if p.label.is_some() {
        return Err("only hypotheses carry a label".to_string());
    }
    if p.rule.discharges() {
        if p.discharge.is_none() {
            return Err("rule requires a discharge label".to_string());
        }
    } else if p.discharge.is_some() {
        return Err("rule does not discharge".to_string());
    }
    if p.premises.len() != p.rule.arity() {
        return Err(format!(
            "{} takes {} premise(s), got {}",
            p.rule,
            p.rule.arity(),
            p.premises.len()
        ));
    }

    let c = &p.conclusion;
    let prem = |i: usize| &p.premises[i].conclusion;
    let ok = match p.rule {
        NdRule::Hyp => true,
        NdRule::AndI => *c == Formula::and(prem(0).clone(), prem(1).clone()),
        NdRule::AndE1 => matches!(prem(0), Formula::And(a, _) if **a == *c),
        NdRule::AndE2 => matches!(prem(0), Formula::And(_, b) if **b == *c),
        NdRule::OrI1 => matches!(c, Formula::Or(a, _) if **a == *prem(0)),
        NdRule::OrI2 => matches!(c, Formula::Or(_, b) if **b == *prem(0)),
        NdRule::OrE => {
            matches!(prem(0), Formula::Or(..)) && prem(1) == c && prem(2) == c
        }
        NdRule::ImpI => matches!(c, Formula::Imp(_, b) if **b == *prem(0)),
        NdRule::ImpE => {
            matches!(prem(0), Formula::Imp(a, b) if **a == *prem(1) && **b == *c)
        }
        NdRule::NegI => {
            matches!(c, Formula::Neg(_)) && *prem(0) == Formula::Bottom
        }
        NdRule::NegE => {
            *c == Formula::Bottom && *prem(1) == Formula::neg(prem(0).clone())
        }
        NdRule::BotE => *prem(0) == Formula::Bottom,
        NdRule::Raa => *prem(0) == Formula::Bottom,
        NdRule::MacroDnI => *c == Formula::neg(Formula::neg(prem(0).clone())),
        NdRule::MacroDnE => *prem(0) == Formula::neg(Formula::neg(c.clone())),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("conclusion '{c}' does not fit {} over the given premises", p.rule))
    }
}

/// Rewrite the two macro rules into their kernel forms:
///
/// * `MacroDnI(d : A)` becomes `NegI^l(NegE(d, Hyp ~A^l))`, concluding `~~A`;
/// * `MacroDnE(e : ~~A)` becomes `Raa^m(NegE(Hyp ~A^m, e))`, concluding `A`.
///
/// Binder labels are drawn fresh (never appearing anywhere in the input), so
/// no open hypothesis is captured. The result is macro-free, has the same
/// conclusion and open assumptions, and is admissible in the same modes;
/// macro-free input is returned unchanged.
pub fn expand_macros(p: &NdProof) -> NdProof {
    let mut used = p.labels();
    let mut counter = 0usize;
    expand_rec(p, &mut used, &mut counter)
}

fn expand_rec(p: &NdProof, used: &mut BTreeSet<String>, counter: &mut usize) -> NdProof {
    let premises: Vec<NdProof> =
        p.premises.iter().map(|q| expand_rec(q, used, counter)).collect();
    match p.rule {
        NdRule::MacroDnI => {
            let d = premises.into_iter().next().unwrap();
            let a = d.conclusion.clone();
            let label = fresh_label(used, counter);
            let neg_hyp = NdProof::hyp(label.clone(), Formula::neg(a.clone()));
            let clash = NdProof::neg_e(d, neg_hyp).expect("premises are contradictory");
            NdProof::neg_i(label, Formula::neg(a), clash)
        }
        NdRule::MacroDnE => {
            let e = premises.into_iter().next().unwrap();
            let Formula::Neg(inner) = &e.conclusion else {
                unreachable!("macro premise concludes a double negation");
            };
            let neg_a = (**inner).clone();
            let Formula::Neg(a) = &neg_a else {
                unreachable!("macro premise concludes a double negation");
            };
            let a = (**a).clone();
            let label = fresh_label(used, counter);
            let neg_hyp = NdProof::hyp(label.clone(), neg_a);
            let clash = NdProof::neg_e(neg_hyp, e).expect("premises are contradictory");
            NdProof::raa(label, a, clash)
        }
        _ => NdProof::new(
            p.rule,
            p.conclusion.clone(),
            p.label.clone(),
            p.discharge.clone(),
            premises,
        ),
    }
}

fn fresh_label(used: &mut BTreeSet<String>, counter: &mut usize) -> String {
    loop {
        *counter += 1;
        let candidate = format!("d{counter}");
        if used.insert(candidate.clone()) {
            return candidate;
        }
    }
}

/// The stock derivations, keyed by stable names:
///
/// * `nd-dni`: from open `A`, derive `~~A` by NegI over a clash with `[~A]`.
/// * `nd-dne`: from open `~~A`, derive `A` by Raa over a clash with `[~A]`.
/// * `nd-raa-or`: from open `~(A | B)`, derive `~A` by NegI over a clash
///   between `A | B` (introduced from `[A]`) and the open denial.
/// * `nd-harmony-detour`: `MacroDnE(MacroDnI(Hyp A))`, the introduction
///   immediately undone by the elimination; normalizes to the bare
///   hypothesis.
pub fn nd_catalog() -> BTreeMap<String, NdProof> {
    let a = Formula::atom("A");
    let b = Formula::atom("B");
    let neg_a = Formula::neg(a.clone());

    let dni = {
        let clash = NdProof::neg_e(
            NdProof::hyp("u", a.clone()),
            NdProof::hyp("1", neg_a.clone()),
        )
        .expect("A against ~A");
        NdProof::neg_i("1", neg_a.clone(), clash)
    };

    let dne = {
        let clash = NdProof::neg_e(
            NdProof::hyp("1", neg_a.clone()),
            NdProof::hyp("u", Formula::neg(neg_a.clone())),
        )
        .expect("~A against ~~A");
        NdProof::raa("1", a.clone(), clash)
    };

    let raa_or = {
        let a_or_b = Formula::or(a.clone(), b.clone());
        let clash = NdProof::neg_e(
            NdProof::or_i1(NdProof::hyp("1", a.clone()), b),
            NdProof::hyp("u", Formula::neg(a_or_b)),
        )
        .expect("A | B against its negation");
        NdProof::neg_i("1", a.clone(), clash)
    };

    let harmony = NdProof::macro_dn_e(NdProof::macro_dn_i(NdProof::hyp("u", a)))
        .expect("the introduction yields a double negation");

    let mut catalog = BTreeMap::new();
    catalog.insert("nd-dni".to_string(), dni);
    catalog.insert("nd-dne".to_string(), dne);
    catalog.insert("nd-raa-or".to_string(), raa_or);
    catalog.insert("nd-harmony-detour".to_string(), harmony);
    catalog
}
