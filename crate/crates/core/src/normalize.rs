//! Detour reduction for natural deduction proofs.
//!
//! A detour (a maximal formula) is an introduction immediately consumed by
//! the matching elimination. Each detour kind has a contraction:
//!
//! * `and-detour`: `AndEi(AndI(d1, d2))` contracts to `di`;
//! * `imp-detour`: `ImpE(ImpI^l(body), d)` contracts to `body[l := d]`;
//! * `or-detour`: `OrE^l(OrIi(d), b1, b2)` contracts to `bi[l := d]`;
//! * `neg-detour`: `NegE(d, NegI^l(body))` contracts to `body[l := d]`;
//! * `dn-detour`: `MacroDnE(MacroDnI(d))` contracts to `d`, and likewise its
//!   fully expanded image `Raa^m(NegE(Hyp ~A^m, NegI^l(NegE(d, Hyp ~A^l))))`.
//!
//! Substitution `body[l := d]` replaces every open hypothesis labelled `l`
//! with `d`, renaming binders in `body` that would capture hypotheses open
//! in `d`. [`normalize`] applies the leftmost-innermost redex until none
//! remains; the strategy is fixed so traces and results are deterministic.
//!
//! The module also provides a subformula audit over checked proofs, in a
//! strict form and in a tolerant form that additionally admits negations of
//! base subformulas, the hypotheses that reductio-style steps introduce.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::nd::{check_nd_proof, open_hyps, Mode, NdProof, NdRule, NdViolation};
use crate::syntax::{subformulas, Formula};

/// Reduction budget for [`normalize`]. Hitting it signals an engine bug, not
/// a large input: every contraction strictly shrinks a well-founded measure
/// on the corpus this crate handles.
pub const DEFAULT_STEP_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RedexKind {
    AndDetour,
    ImpDetour,
    OrDetour,
    NegDetour,
    DnDetour,
}

impl RedexKind {
    pub fn name(&self) -> &'static str {
        match self {
            RedexKind::AndDetour => "and-detour",
            RedexKind::ImpDetour => "imp-detour",
            RedexKind::OrDetour => "or-detour",
            RedexKind::NegDetour => "neg-detour",
            RedexKind::DnDetour => "dn-detour",
        }
    }
}

impl fmt::Display for RedexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redex {
    pub path: Vec<usize>,
    pub kind: RedexKind,
}

impl fmt::Display for Redex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "{} at root", self.kind)
        } else {
            let path: Vec<String> = self.path.iter().map(|i| i.to_string()).collect();
            write!(f, "{} at node {}", self.kind, path.join("."))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("proof fails classical checking: {0}")]
    InvalidProof(NdViolation),
    #[error("stale redex: no {0} any more")]
    StaleRedex(Redex),
    #[error("no normal form within {limit} reduction steps")]
    StepLimit { limit: usize },
}

/// All redexes of a valid proof in leftmost-innermost (post-order) order, so
/// the first entry is the one [`normalize`] contracts next.
pub fn find_redexes(p: &NdProof) -> Result<Vec<Redex>, NormalizeError> {
    ensure_valid(p)?;
    let mut out = Vec::new();
    scan(p, &mut Vec::new(), &mut out);
    Ok(out)
}

/// A valid proof is normal when it contains no redex.
pub fn is_normal(p: &NdProof) -> Result<bool, NormalizeError> {
    Ok(find_redexes(p)?.is_empty())
}

fn ensure_valid(p: &NdProof) -> Result<(), NormalizeError> {
    let report = check_nd_proof(p, Mode::Classical);
    match report.violation {
        Some(v) => Err(NormalizeError::InvalidProof(v)),
        None => Ok(()),
    }
}

fn scan(p: &NdProof, path: &mut Vec<usize>, out: &mut Vec<Redex>) {
    for (i, premise) in p.premises.iter().enumerate() {
        path.push(i);
        scan(premise, path, out);
        path.pop();
    }
    if let Some(kind) = redex_at(p) {
        out.push(Redex { path: path.clone(), kind });
    }
}

fn redex_at(p: &NdProof) -> Option<RedexKind> {
    match p.rule {
        NdRule::AndE1 | NdRule::AndE2 if p.premises.first()?.rule == NdRule::AndI => {
            Some(RedexKind::AndDetour)
        }
        NdRule::ImpE if p.premises.first()?.rule == NdRule::ImpI => Some(RedexKind::ImpDetour),
        NdRule::OrE
            if matches!(p.premises.first()?.rule, NdRule::OrI1 | NdRule::OrI2) =>
        {
            Some(RedexKind::OrDetour)
        }
        NdRule::NegE if p.premises.get(1)?.rule == NdRule::NegI => Some(RedexKind::NegDetour),
        NdRule::MacroDnE if p.premises.first()?.rule == NdRule::MacroDnI => {
            Some(RedexKind::DnDetour)
        }
        NdRule::Raa if kernel_dn_body(p).is_some() => Some(RedexKind::DnDetour),
        _ => None,
    }
}

/// Match the expanded double-negation roundtrip
/// `Raa^m(NegE(Hyp ~A^m, NegI^l(NegE(d, Hyp ~A^l))))` and return `d`.
///
/// The contraction drops both binders, so it only applies when neither label
/// is open inside `d`; otherwise formerly bound hypotheses would escape.
fn kernel_dn_body(p: &NdProof) -> Option<&NdProof> {
    if p.rule != NdRule::Raa {
        return None;
    }
    let m = p.discharge.as_deref()?;
    let neg_a = Formula::neg(p.conclusion.clone());
    let clash = p.premises.first()?;
    if clash.rule != NdRule::NegE {
        return None;
    }
    let left = clash.premises.first()?;
    if left.rule != NdRule::Hyp || left.label.as_deref() != Some(m) || left.conclusion != neg_a {
        return None;
    }
    let intro = clash.premises.get(1)?;
    if intro.rule != NdRule::NegI {
        return None;
    }
    let l = intro.discharge.as_deref()?;
    let inner = intro.premises.first()?;
    if inner.rule != NdRule::NegE {
        return None;
    }
    let hyp = inner.premises.get(1)?;
    if hyp.rule != NdRule::Hyp || hyp.label.as_deref() != Some(l) || hyp.conclusion != neg_a {
        return None;
    }
    let d = inner.premises.first()?;
    if d.conclusion != p.conclusion {
        return None;
    }
    let escaping = open_hyps(d)
        .keys()
        .any(|(label, _)| label == m || label == l);
    if escaping {
        return None;
    }
    Some(d)
}

/// The contraction of a redex of the given kind rooted at `p`.
fn reduct(p: &NdProof, kind: RedexKind) -> Option<NdProof> {
    match (kind, p.rule) {
        (RedexKind::AndDetour, NdRule::AndE1) => {
            let pair = p.premises.first()?;
            (pair.rule == NdRule::AndI).then(|| pair.premises[0].clone())
        }
        (RedexKind::AndDetour, NdRule::AndE2) => {
            let pair = p.premises.first()?;
            (pair.rule == NdRule::AndI).then(|| pair.premises[1].clone())
        }
        (RedexKind::ImpDetour, NdRule::ImpE) => {
            let intro = p.premises.first()?;
            if intro.rule != NdRule::ImpI {
                return None;
            }
            let label = intro.discharge.as_deref()?;
            Some(substitute(&intro.premises[0], label, p.premises.get(1)?))
        }
        (RedexKind::OrDetour, NdRule::OrE) => {
            let major = p.premises.first()?;
            let label = p.discharge.as_deref()?;
            match major.rule {
                NdRule::OrI1 => Some(substitute(p.premises.get(1)?, label, &major.premises[0])),
                NdRule::OrI2 => Some(substitute(p.premises.get(2)?, label, &major.premises[0])),
                _ => None,
            }
        }
        (RedexKind::NegDetour, NdRule::NegE) => {
            let intro = p.premises.get(1)?;
            if intro.rule != NdRule::NegI {
                return None;
            }
            let label = intro.discharge.as_deref()?;
            Some(substitute(&intro.premises[0], label, p.premises.first()?))
        }
        (RedexKind::DnDetour, NdRule::MacroDnE) => {
            let intro = p.premises.first()?;
            (intro.rule == NdRule::MacroDnI).then(|| intro.premises[0].clone())
        }
        (RedexKind::DnDetour, NdRule::Raa) => kernel_dn_body(p).cloned(),
        _ => None,
    }
}

/// Contract one redex, previously located by [`find_redexes`] on this same
/// proof. The node is re-matched before rewriting; a redex that no longer
/// fits (because the proof changed underneath it) is reported stale rather
/// than misapplied.
pub fn reduce_step(p: &NdProof, r: &Redex) -> Result<NdProof, NormalizeError> {
    let stale = || NormalizeError::StaleRedex(r.clone());
    let node = node_at(p, &r.path).ok_or_else(stale)?;
    let replacement = reduct(node, r.kind).ok_or_else(stale)?;
    replace_at(p, &r.path, replacement).ok_or_else(stale)
}

fn node_at<'a>(p: &'a NdProof, path: &[usize]) -> Option<&'a NdProof> {
    let mut node = p;
    for &i in path {
        node = node.premises.get(i)?;
    }
    Some(node)
}

fn replace_at(p: &NdProof, path: &[usize], new: NdProof) -> Option<NdProof> {
    match path.split_first() {
        None => Some(new),
        Some((&i, rest)) => {
            p.premises.get(i)?;
            let mut out = p.clone();
            out.premises[i] = replace_at(&p.premises[i], rest, new)?;
            Some(out)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    /// The redex that was contracted.
    pub redex: Redex,
    /// The whole proof after contracting it.
    pub proof: NdProof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub result: NdProof,
    /// One entry per reduction step, in order; empty when the input was
    /// already normal.
    pub trace: Vec<TraceEntry>,
}

impl Normalization {
    pub fn steps(&self) -> usize {
        self.trace.len()
    }
}

/// Contract leftmost-innermost redexes until the proof is normal, within
/// [`DEFAULT_STEP_LIMIT`] steps.
pub fn normalize(p: &NdProof) -> Result<Normalization, NormalizeError> {
    normalize_with_limit(p, DEFAULT_STEP_LIMIT)
}

pub fn normalize_with_limit(
    p: &NdProof,
    limit: usize,
) -> Result<Normalization, NormalizeError> {
    ensure_valid(p)?;
    let mut current = p.clone();
    let mut trace = Vec::new();
    loop {
        let mut redexes = Vec::new();
        scan(&current, &mut Vec::new(), &mut redexes);
        let Some(first) = redexes.into_iter().next() else {
            return Ok(Normalization { result: current, trace });
        };
        if trace.len() == limit {
            return Err(NormalizeError::StepLimit { limit });
        }
        current = reduce_step(&current, &first)?;
        trace.push(TraceEntry { redex: first, proof: current.clone() });
    }
}

/// Substitute `replacement` for every open hypothesis labelled `label` in
/// `body`. Binders in `body` whose label is open in `replacement` are
/// alpha-renamed first so no hypothesis gets captured.
pub(crate) fn substitute(body: &NdProof, label: &str, replacement: &NdProof) -> NdProof {
    let protect: BTreeSet<String> =
        open_hyps(replacement).keys().map(|(l, _)| l.clone()).collect();
    let mut used = body.labels();
    used.extend(replacement.labels());
    let mut counter = 0usize;
    let safe = avoid_capture(body, &protect, &mut used, &mut counter);
    subst_open(&safe, label, replacement)
}

fn avoid_capture(
    p: &NdProof,
    protect: &BTreeSet<String>,
    used: &mut BTreeSet<String>,
    counter: &mut usize,
) -> NdProof {
    let mut node = p.clone();
    if let Some(old) = node.discharge.clone() {
        if protect.contains(&old) {
            let fresh = fresh_rename(used, counter);
            for &idx in binding_premises(node.rule) {
                node.premises[idx] = rename_open(&node.premises[idx], &old, &fresh);
            }
            node.discharge = Some(fresh);
        }
    }
    node.premises = node
        .premises
        .iter()
        .map(|q| avoid_capture(q, protect, used, counter))
        .collect();
    node
}

/// Premise indices a discharging rule binds hypotheses in.
fn binding_premises(rule: NdRule) -> &'static [usize] {
    match rule {
        NdRule::OrE => &[1, 2],
        NdRule::ImpI | NdRule::NegI | NdRule::Raa => &[0],
        _ => &[],
    }
}

/// Rename open hypotheses labelled `old` to `new`, stopping below binders
/// that shadow `old`.
fn rename_open(p: &NdProof, old: &str, new: &str) -> NdProof {
    if p.rule == NdRule::Hyp {
        let mut out = p.clone();
        if out.label.as_deref() == Some(old) {
            out.label = Some(new.to_string());
        }
        return out;
    }
    if p.discharge.as_deref() == Some(old) {
        return p.clone();
    }
    let mut out = p.clone();
    out.premises = p.premises.iter().map(|q| rename_open(q, old, new)).collect();
    out
}

fn subst_open(p: &NdProof, label: &str, replacement: &NdProof) -> NdProof {
    if p.rule == NdRule::Hyp {
        if p.label.as_deref() == Some(label) {
            return replacement.clone();
        }
        return p.clone();
    }
    if p.discharge.as_deref() == Some(label) {
        return p.clone();
    }
    let mut out = p.clone();
    out.premises = p
        .premises
        .iter()
        .map(|q| subst_open(q, label, replacement))
        .collect();
    out
}

fn fresh_rename(used: &mut BTreeSet<String>, counter: &mut usize) -> String {
    loop {
        *counter += 1;
        let candidate = format!("r{counter}");
        if used.insert(candidate.clone()) {
            return candidate;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditWitness {
    pub path: Vec<usize>,
    pub formula: Formula,
}

/// Subformula audit result. The base set is the subformula closure of the
/// conclusion and the open assumptions, plus `_|_`; the tolerant audit also
/// admits `~X` for any base formula `X`, covering the auxiliary hypotheses
/// that `Raa` and `NegI` introduce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub strict_pass: bool,
    pub tolerant_pass: bool,
    pub strict_witness: Option<AuditWitness>,
    pub tolerant_witness: Option<AuditWitness>,
}

pub fn subformula_audit(p: &NdProof) -> Result<AuditReport, NormalizeError> {
    ensure_valid(p)?;
    let report = check_nd_proof(p, Mode::Classical);
    let mut base: BTreeSet<Formula> = subformulas(&p.conclusion);
    for open in report.open_assumptions.iter() {
        base.extend(subformulas(open));
    }
    let mut strict = base.clone();
    strict.insert(Formula::bottom());
    let mut tolerant = strict.clone();
    tolerant.extend(base.iter().cloned().map(Formula::neg));

    let mut out = AuditReport {
        strict_pass: true,
        tolerant_pass: true,
        strict_witness: None,
        tolerant_witness: None,
    };
    audit_walk(p, &mut Vec::new(), &strict, &tolerant, &mut out);
    Ok(out)
}

fn audit_walk(
    p: &NdProof,
    path: &mut Vec<usize>,
    strict: &BTreeSet<Formula>,
    tolerant: &BTreeSet<Formula>,
    out: &mut AuditReport,
) {
    if out.strict_pass && !strict.contains(&p.conclusion) {
        out.strict_pass = false;
        out.strict_witness =
            Some(AuditWitness { path: path.clone(), formula: p.conclusion.clone() });
    }
    if out.tolerant_pass && !tolerant.contains(&p.conclusion) {
        out.tolerant_pass = false;
        out.tolerant_witness =
            Some(AuditWitness { path: path.clone(), formula: p.conclusion.clone() });
    }
    for (i, premise) in p.premises.iter().enumerate() {
        path.push(i);
        audit_walk(premise, path, strict, tolerant, out);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nd::{expand_macros, nd_catalog, open_assumptions};
    use crate::sequent::Multiset;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn assert_valid(p: &NdProof) {
        let report = check_nd_proof(p, Mode::Classical);
        assert!(report.valid, "{:?}", report.violation);
    }

    #[test]
    fn the_harmony_detour_is_one_redex_at_the_root() {
        let catalog = nd_catalog();
        let redexes = find_redexes(&catalog["nd-harmony-detour"]).unwrap();
        assert_eq!(redexes, vec![Redex { path: vec![], kind: RedexKind::DnDetour }]);
        assert!(!is_normal(&catalog["nd-harmony-detour"]).unwrap());
    }

    #[test]
    fn leaves_and_catalog_derivations_are_normal() {
        assert!(find_redexes(&NdProof::hyp("u", f("A"))).unwrap().is_empty());
        let catalog = nd_catalog();
        for name in ["nd-dni", "nd-dne", "nd-raa-or"] {
            assert!(is_normal(&catalog[name]).unwrap(), "{name} should be normal");
        }
    }

    #[test]
    fn harmony_detour_normalizes_to_the_bare_hypothesis_in_one_step() {
        let catalog = nd_catalog();
        let run = normalize(&catalog["nd-harmony-detour"]).unwrap();
        assert_eq!(run.result, NdProof::hyp("u", f("A")));
        assert_eq!(run.steps(), 1);
    }

    #[test]
    fn dn_towers_normalize_in_exactly_their_depth() {
        let mut tower = NdProof::hyp("u", f("A"));
        for _ in 0..3 {
            tower = NdProof::macro_dn_e(NdProof::macro_dn_i(tower)).unwrap();
        }
        let run = normalize(&tower).unwrap();
        assert_eq!(run.result, NdProof::hyp("u", f("A")));
        assert_eq!(run.steps(), 3);
        // Innermost first: the first contraction happens deepest.
        assert_eq!(run.trace[0].redex.path, vec![0, 0, 0, 0]);
        assert_eq!(run.trace[2].redex.path, Vec::<usize>::new());
        for entry in &run.trace {
            assert_valid(&entry.proof);
            assert_eq!(entry.proof.conclusion, f("A"));
        }
    }

    #[test]
    fn normal_proofs_come_back_unchanged_in_zero_steps() {
        let catalog = nd_catalog();
        let run = normalize(&catalog["nd-dni"]).unwrap();
        assert_eq!(run.result, catalog["nd-dni"]);
        assert_eq!(run.steps(), 0);
    }

    #[test]
    fn and_detours_project() {
        let detour = NdProof::and_e1(NdProof::and_i(
            NdProof::hyp("u", f("A")),
            NdProof::hyp("v", f("B")),
        ))
        .unwrap();
        let redexes = find_redexes(&detour).unwrap();
        assert_eq!(redexes, vec![Redex { path: vec![], kind: RedexKind::AndDetour }]);
        let reduced = reduce_step(&detour, &redexes[0]).unwrap();
        assert_eq!(reduced, NdProof::hyp("u", f("A")));
    }

    #[test]
    fn imp_detours_substitute_with_multiplicity() {
        let body = NdProof::and_i(NdProof::hyp("1", f("A")), NdProof::hyp("1", f("A")));
        let detour = NdProof::imp_e(
            NdProof::imp_i("1", f("A"), body),
            NdProof::hyp("u", f("A")),
        )
        .unwrap();
        let run = normalize(&detour).unwrap();
        assert_eq!(
            run.result,
            NdProof::and_i(NdProof::hyp("u", f("A")), NdProof::hyp("u", f("A")))
        );
        assert_eq!(run.result.conclusion, detour.conclusion);
        assert_eq!(open_assumptions(&run.result), [f("A"), f("A")].into_iter().collect());
    }

    #[test]
    fn vacuous_discharge_drops_the_argument() {
        let detour = NdProof::imp_e(
            NdProof::imp_i("1", f("A"), NdProof::hyp("w", f("B"))),
            NdProof::hyp("u", f("A")),
        )
        .unwrap();
        let run = normalize(&detour).unwrap();
        assert_eq!(run.result, NdProof::hyp("w", f("B")));
        assert_eq!(open_assumptions(&run.result), Multiset::singleton(f("B")));
    }

    #[test]
    fn or_detours_route_into_the_matching_branch() {
        let major = NdProof::or_i1(NdProof::hyp("u", f("A")), f("B"));
        let left = NdProof::or_i2(f("B"), NdProof::hyp("1", f("A")));
        let right = NdProof::or_i1(NdProof::hyp("1", f("B")), f("A"));
        let detour = NdProof::or_e("1", major, left, right).unwrap();
        let run = normalize(&detour).unwrap();
        assert_eq!(run.result, NdProof::or_i2(f("B"), NdProof::hyp("u", f("A"))));
        assert_eq!(run.steps(), 1);
        assert_valid(&run.result);
    }

    #[test]
    fn neg_detours_substitute_into_the_refutation_body() {
        let body = NdProof::neg_e(NdProof::hyp("1", f("A")), NdProof::hyp("v", f("~A")))
            .unwrap();
        let detour = NdProof::neg_e(
            NdProof::hyp("u", f("A")),
            NdProof::neg_i("1", f("A"), body),
        )
        .unwrap();
        let run = normalize(&detour).unwrap();
        assert_eq!(
            run.result,
            NdProof::neg_e(NdProof::hyp("u", f("A")), NdProof::hyp("v", f("~A"))).unwrap()
        );
        assert_eq!(run.result.conclusion, f("_|_"));
    }

    #[test]
    fn substitution_renames_binders_that_would_capture() {
        // The body's inner NegI binds label k; the substituted argument has
        // an open hypothesis also labelled k. Without renaming, that
        // hypothesis would be captured and checking would fail.
        let inner_clash =
            NdProof::neg_e(NdProof::hyp("1", f("A")), NdProof::hyp("k", f("~A"))).unwrap();
        let body = NdProof::neg_i("k", f("~A"), inner_clash);
        let detour = NdProof::imp_e(
            NdProof::imp_i("1", f("A"), body),
            NdProof::hyp("k", f("A")),
        )
        .unwrap();
        assert_valid(&detour);
        let run = normalize(&detour).unwrap();
        assert_valid(&run.result);
        assert_eq!(run.result.conclusion, f("~~A"));
        assert_eq!(open_assumptions(&run.result), Multiset::singleton(f("A")));
    }

    #[test]
    fn the_expanded_roundtrip_offers_both_redexes() {
        let catalog = nd_catalog();
        let expanded = expand_macros(&catalog["nd-harmony-detour"]);
        let redexes = find_redexes(&expanded).unwrap();
        assert_eq!(
            redexes,
            vec![
                Redex { path: vec![0], kind: RedexKind::NegDetour },
                Redex { path: vec![], kind: RedexKind::DnDetour },
            ]
        );

        // Contracting the outer roundtrip directly recovers the hypothesis.
        let via_dn = reduce_step(&expanded, &redexes[1]).unwrap();
        assert_eq!(via_dn, NdProof::hyp("u", f("A")));

        // The fixed strategy contracts the inner clash first and then stops:
        // the leftover reductio is normal.
        let run = normalize(&expanded).unwrap();
        assert_eq!(run.steps(), 1);
        assert_eq!(run.trace[0].redex.kind, RedexKind::NegDetour);
        assert_eq!(run.result.rule, NdRule::Raa);
        assert_valid(&run.result);
        assert_eq!(run.result.conclusion, f("A"));
        assert_eq!(open_assumptions(&run.result), Multiset::singleton(f("A")));
        assert!(is_normal(&run.result).unwrap());
    }

    #[test]
    fn stale_redexes_are_rejected() {
        let detour = NdProof::and_e1(NdProof::and_i(
            NdProof::hyp("u", f("A")),
            NdProof::hyp("v", f("B")),
        ))
        .unwrap();
        let missing = Redex { path: vec![0, 0, 0], kind: RedexKind::AndDetour };
        assert!(matches!(
            reduce_step(&detour, &missing),
            Err(NormalizeError::StaleRedex(_))
        ));
        let wrong_kind = Redex { path: vec![], kind: RedexKind::ImpDetour };
        assert!(matches!(
            reduce_step(&detour, &wrong_kind),
            Err(NormalizeError::StaleRedex(_))
        ));
    }

    #[test]
    fn invalid_proofs_are_refused_up_front() {
        let bogus = NdProof::new(NdRule::AndE1, f("A"), None, None, vec![NdProof::hyp(
            "u",
            f("B"),
        )]);
        assert!(matches!(find_redexes(&bogus), Err(NormalizeError::InvalidProof(_))));
        assert!(matches!(normalize(&bogus), Err(NormalizeError::InvalidProof(_))));
        assert!(matches!(subformula_audit(&bogus), Err(NormalizeError::InvalidProof(_))));
    }

    #[test]
    fn the_step_limit_guards_against_engine_bugs() {
        let mut tower = NdProof::hyp("u", f("A"));
        for _ in 0..2 {
            tower = NdProof::macro_dn_e(NdProof::macro_dn_i(tower)).unwrap();
        }
        assert!(matches!(
            normalize_with_limit(&tower, 1),
            Err(NormalizeError::StepLimit { limit: 1 })
        ));
    }

    #[test]
    fn audits_accept_the_catalog_and_normalized_detours() {
        let catalog = nd_catalog();
        let normalized = normalize(&catalog["nd-harmony-detour"]).unwrap().result;
        let report = subformula_audit(&normalized).unwrap();
        assert!(report.strict_pass && report.tolerant_pass);

        // Node formulas {A, ~A, _|_, ~~A} all sit inside the closure of the
        // conclusion ~~A plus the open assumption A, with _|_ allowed.
        let report = subformula_audit(&catalog["nd-dni"]).unwrap();
        assert!(report.strict_pass && report.tolerant_pass);
    }

    #[test]
    fn foreign_conjunctions_fail_strictly_with_a_witness() {
        let detour = NdProof::and_e2(NdProof::and_i(
            NdProof::hyp("u", f("B")),
            NdProof::hyp("v", f("A")),
        ))
        .unwrap();
        let report = subformula_audit(&detour).unwrap();
        assert!(!report.strict_pass);
        assert_eq!(report.strict_witness.as_ref().unwrap().formula, f("B & A"));
        assert_eq!(report.strict_witness.unwrap().path, vec![0]);
        // B & A is no negation either, so even the tolerant audit objects.
        assert!(!report.tolerant_pass);
    }

    #[test]
    fn reductio_auxiliaries_pass_only_the_tolerant_audit() {
        // The classical proof of B | ~B from no assumptions: assume its
        // negation, derive the disjunction twice, contradict, apply Raa.
        let lem = f("B | ~B");
        let denial = Formula::neg(lem.clone());
        let first = NdProof::or_i1(NdProof::hyp("2", f("B")), f("~B"));
        let clash1 = NdProof::neg_e(first, NdProof::hyp("1", denial.clone())).unwrap();
        let not_b = NdProof::neg_i("2", f("B"), clash1);
        let second = NdProof::or_i2(f("B"), not_b);
        let clash2 = NdProof::neg_e(second, NdProof::hyp("1", denial)).unwrap();
        let proof = NdProof::raa("1", lem.clone(), clash2);

        let report = check_nd_proof(&proof, Mode::Classical);
        assert!(report.valid);
        assert!(report.open_assumptions.is_empty());

        let audit = subformula_audit(&proof).unwrap();
        assert!(audit.tolerant_pass);
        assert!(!audit.strict_pass);
        assert_eq!(audit.strict_witness.unwrap().formula, f("~(B | ~B)"));
    }
}
