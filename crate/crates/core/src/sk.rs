//! Classical multiple-succedent sequent calculus: proof trees, a rule-by-rule
//! checker, a small catalog of double-negation derivations, and admissible
//! proof transformers built from them.
//!
//! Rules follow the usual two-sided multiset presentation. Identity axioms
//! are schematic (`A => A` for any formula A) and `LBot` is the minimal
//! absurdity axiom `_|_ =>`; contexts are introduced by the explicit
//! weakening rules. Branching logical rules share their context between
//! premises, while `Cut` splits contexts:
//!
//! ```text
//!   G => D, C    C, S => P
//!   ----------------------- Cut on C
//!        G, S => D, P
//! ```
//!
//! Every node stores its conclusion, its principal formula (the cut formula
//! for `Cut`), and its premises, so checking is a deterministic local schema
//! match at each node even when a sequent offers several candidate formulas.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::sequent::{render_sequent, Multiset, Sequent};
use crate::syntax::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SkRule {
    Ax,
    LBot,
    LNeg,
    RNeg,
    LAnd,
    RAnd,
    LOr,
    ROr,
    LImp,
    RImp,
    LWeak,
    RWeak,
    LContr,
    RContr,
    Cut,
}

impl SkRule {
    pub fn arity(&self) -> usize {
        match self {
            SkRule::Ax | SkRule::LBot => 0,
            SkRule::RAnd | SkRule::LOr | SkRule::LImp | SkRule::Cut => 2,
            _ => 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SkRule::Ax => "Ax",
            SkRule::LBot => "LBot",
            SkRule::LNeg => "LNeg",
            SkRule::RNeg => "RNeg",
            SkRule::LAnd => "LAnd",
            SkRule::RAnd => "RAnd",
            SkRule::LOr => "LOr",
            SkRule::ROr => "ROr",
            SkRule::LImp => "LImp",
            SkRule::RImp => "RImp",
            SkRule::LWeak => "LWeak",
            SkRule::RWeak => "RWeak",
            SkRule::LContr => "LContr",
            SkRule::RContr => "RContr",
            SkRule::Cut => "Cut",
        }
    }
}

impl fmt::Display for SkRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkProof {
    pub rule: SkRule,
    pub conclusion: Sequent,
    /// The formula the rule introduces or acts on. Present for every rule
    /// except `Cut`.
    pub principal: Option<Formula>,
    /// The formula removed by `Cut`; `None` for every other rule.
    pub cut_formula: Option<Formula>,
    pub premises: Vec<SkProof>,
}

impl SkProof {
    /// Raw constructor; performs no checking.
    pub fn new(
        rule: SkRule,
        conclusion: Sequent,
        principal: Option<Formula>,
        cut_formula: Option<Formula>,
        premises: Vec<SkProof>,
    ) -> Self {
        SkProof { rule, conclusion, principal, cut_formula, premises }
    }

    /// The identity axiom `a => a`.
    pub fn ax(a: Formula) -> Self {
        let conclusion = Sequent::new(Multiset::singleton(a.clone()), Multiset::singleton(a.clone()));
        SkProof::new(SkRule::Ax, conclusion, Some(a), None, Vec::new())
    }

    /// The absurdity axiom `_|_ =>`.
    pub fn lbot() -> Self {
        let conclusion = Sequent::new(Multiset::singleton(Formula::bottom()), Multiset::new());
        SkProof::new(SkRule::LBot, conclusion, Some(Formula::bottom()), None, Vec::new())
    }

    /// Build a node whose conclusion is computed from the premises, so the
    /// result is locally correct by construction. `principal` is required
    /// for every rule but `Cut`; `cut_formula` only for `Cut`.
    pub fn derive(
        rule: SkRule,
        principal: Option<Formula>,
        cut_formula: Option<Formula>,
        premises: Vec<SkProof>,
    ) -> Result<Self, SkError> {
        check_annotations(rule, principal.as_ref(), cut_formula.as_ref())?;
        if premises.len() != rule.arity() {
            return Err(SkError::Arity { rule, expected: rule.arity(), got: premises.len() });
        }
        let premise_seqs: Vec<&Sequent> = premises.iter().map(|p| &p.conclusion).collect();
        let conclusion = infer(rule, principal.as_ref(), cut_formula.as_ref(), &premise_seqs)?;
        Ok(SkProof::new(rule, conclusion, principal, cut_formula, premises))
    }

    pub fn endsequent(&self) -> &Sequent {
        &self.conclusion
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(SkProof::node_count).sum::<usize>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SkError {
    #[error("{rule} takes {expected} premise(s), got {got}")]
    Arity { rule: SkRule, expected: usize, got: usize },
    #[error("{rule}: {message}")]
    Schema { rule: SkRule, message: String },
    #[error("{kind} expects an endsequent of the shape '{expected}', got '{got}'")]
    ShapeMismatch { kind: TransformKind, expected: &'static str, got: String },
    #[error("input proof is invalid: {0}")]
    InvalidInput(SkViolation),
}

fn schema(rule: SkRule, message: impl Into<String>) -> SkError {
    SkError::Schema { rule, message: message.into() }
}

/// Where a check failed: `path` indexes premises from the root downward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkViolation {
    pub path: Vec<usize>,
    pub rule: SkRule,
    pub message: String,
}

impl fmt::Display for SkViolation {
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
pub struct SkCheckReport {
    pub valid: bool,
    pub endsequent: Sequent,
    pub violation: Option<SkViolation>,
}

/// Check every node of `p` against its rule schema. The report carries the
/// first violation in root-first (pre-order) traversal, if any.
pub fn check_sk_proof(p: &SkProof) -> SkCheckReport {
    let mut path = Vec::new();
    let violation = check_node(p, &mut path);
    SkCheckReport { valid: violation.is_none(), endsequent: p.conclusion.clone(), violation }
}

fn check_node(p: &SkProof, path: &mut Vec<usize>) -> Option<SkViolation> {
    if let Err(e) = local_check(p) {
        return Some(SkViolation { path: path.clone(), rule: p.rule, message: e.to_string() });
    }
    for (i, premise) in p.premises.iter().enumerate() {
        path.push(i);
        if let Some(v) = check_node(premise, path) {
            return Some(v);
        }
        path.pop();
    }
    None
}

fn local_check(p: &SkProof) -> Result<(), SkError> {
    check_annotations(p.rule, p.principal.as_ref(), p.cut_formula.as_ref())?;
    if p.premises.len() != p.rule.arity() {
        return Err(SkError::Arity {
            rule: p.rule,
            expected: p.rule.arity(),
            got: p.premises.len(),
        });
    }
    let premise_seqs: Vec<&Sequent> = p.premises.iter().map(|q| &q.conclusion).collect();
    let expected = infer(p.rule, p.principal.as_ref(), p.cut_formula.as_ref(), &premise_seqs)?;
    if expected != p.conclusion {
        return Err(schema(
            p.rule,
            format!(
                "rule yields '{}' but the node claims '{}'",
                render_sequent(&expected),
                render_sequent(&p.conclusion)
            ),
        ));
    }
    Ok(())
}

fn check_annotations(
    rule: SkRule,
    principal: Option<&Formula>,
    cut_formula: Option<&Formula>,
) -> Result<(), SkError> {
    if rule == SkRule::Cut {
        if principal.is_some() {
            return Err(schema(rule, "Cut carries a cut formula, not a principal"));
        }
        if cut_formula.is_none() {
            return Err(schema(rule, "Cut requires a cut formula"));
        }
    } else {
        if principal.is_none() {
            return Err(schema(rule, "rule requires a principal formula"));
        }
        if cut_formula.is_some() {
            return Err(schema(rule, "only Cut carries a cut formula"));
        }
    }
    Ok(())
}

/// Compute the conclusion a rule instance yields from its premises, or
/// explain why the instance is malformed. Arity and annotation presence are
/// the caller's responsibility.
fn infer(
    rule: SkRule,
    principal: Option<&Formula>,
    cut_formula: Option<&Formula>,
    premises: &[&Sequent],
) -> Result<Sequent, SkError> {
    let remove = |ms: &Multiset, f: &Formula, side: &str| -> Result<Multiset, SkError> {
        ms.minus_one(f).ok_or_else(|| {
            schema(rule, format!("premise {side} lacks an occurrence of '{f}'"))
        })
    };
    match rule {
        SkRule::Ax => {
            let a = principal.unwrap();
            Ok(Sequent::new(Multiset::singleton(a.clone()), Multiset::singleton(a.clone())))
        }
        SkRule::LBot => {
            if *principal.unwrap() != Formula::Bottom {
                return Err(schema(rule, "principal must be _|_"));
            }
            Ok(Sequent::new(Multiset::singleton(Formula::bottom()), Multiset::new()))
        }
        SkRule::LNeg => {
            let neg = principal.unwrap();
            let Formula::Neg(a) = neg else {
                return Err(schema(rule, format!("principal '{neg}' is not a negation")));
            };
            let p = premises[0];
            let succ = remove(&p.succedent, a, "succedent")?;
            Ok(Sequent::new(p.antecedent.plus(neg.clone()), succ))
        }
        SkRule::RNeg => {
            let neg = principal.unwrap();
            let Formula::Neg(a) = neg else {
                return Err(schema(rule, format!("principal '{neg}' is not a negation")));
            };
            let p = premises[0];
            let ante = remove(&p.antecedent, a, "antecedent")?;
            Ok(Sequent::new(ante, p.succedent.plus(neg.clone())))
        }
        SkRule::LAnd => {
            let conj = principal.unwrap();
            let Formula::And(a, b) = conj else {
                return Err(schema(rule, format!("principal '{conj}' is not a conjunction")));
            };
            let p = premises[0];
            let ante = remove(&remove(&p.antecedent, a, "antecedent")?, b, "antecedent")?;
            Ok(Sequent::new(ante.plus(conj.clone()), p.succedent.clone()))
        }
        SkRule::RAnd => {
            let conj = principal.unwrap();
            let Formula::And(a, b) = conj else {
                return Err(schema(rule, format!("principal '{conj}' is not a conjunction")));
            };
            let (p1, p2) = (premises[0], premises[1]);
            let d1 = remove(&p1.succedent, a, "succedent")?;
            let d2 = remove(&p2.succedent, b, "succedent")?;
            if p1.antecedent != p2.antecedent || d1 != d2 {
                return Err(schema(rule, "premises must share their context"));
            }
            Ok(Sequent::new(p1.antecedent.clone(), d1.plus(conj.clone())))
        }
        SkRule::LOr => {
            let disj = principal.unwrap();
            let Formula::Or(a, b) = disj else {
                return Err(schema(rule, format!("principal '{disj}' is not a disjunction")));
            };
            let (p1, p2) = (premises[0], premises[1]);
            let g1 = remove(&p1.antecedent, a, "antecedent")?;
            let g2 = remove(&p2.antecedent, b, "antecedent")?;
            if g1 != g2 || p1.succedent != p2.succedent {
                return Err(schema(rule, "premises must share their context"));
            }
            Ok(Sequent::new(g1.plus(disj.clone()), p1.succedent.clone()))
        }
        SkRule::ROr => {
            let disj = principal.unwrap();
            let Formula::Or(a, b) = disj else {
                return Err(schema(rule, format!("principal '{disj}' is not a disjunction")));
            };
            let p = premises[0];
            let succ = remove(&remove(&p.succedent, a, "succedent")?, b, "succedent")?;
            Ok(Sequent::new(p.antecedent.clone(), succ.plus(disj.clone())))
        }
        SkRule::LImp => {
            let imp = principal.unwrap();
            let Formula::Imp(a, b) = imp else {
                return Err(schema(rule, format!("principal '{imp}' is not an implication")));
            };
            let (p1, p2) = (premises[0], premises[1]);
            let d1 = remove(&p1.succedent, a, "succedent")?;
            let g2 = remove(&p2.antecedent, b, "antecedent")?;
            if p1.antecedent != g2 || d1 != p2.succedent {
                return Err(schema(rule, "premises must share their context"));
            }
            Ok(Sequent::new(g2.plus(imp.clone()), d1))
        }
        SkRule::RImp => {
            let imp = principal.unwrap();
            let Formula::Imp(a, b) = imp else {
                return Err(schema(rule, format!("principal '{imp}' is not an implication")));
            };
            let p = premises[0];
            let ante = remove(&p.antecedent, a, "antecedent")?;
            let succ = remove(&p.succedent, b, "succedent")?;
            Ok(Sequent::new(ante, succ.plus(imp.clone())))
        }
        SkRule::LWeak => {
            let a = principal.unwrap();
            let p = premises[0];
            Ok(Sequent::new(p.antecedent.plus(a.clone()), p.succedent.clone()))
        }
        SkRule::RWeak => {
            let a = principal.unwrap();
            let p = premises[0];
            Ok(Sequent::new(p.antecedent.clone(), p.succedent.plus(a.clone())))
        }
        SkRule::LContr => {
            let a = principal.unwrap();
            let p = premises[0];
            let once = remove(&p.antecedent, a, "antecedent")?;
            if !once.contains(a) {
                return Err(schema(rule, format!("premise antecedent needs two occurrences of '{a}'")));
            }
            Ok(Sequent::new(once, p.succedent.clone()))
        }
        SkRule::RContr => {
            let a = principal.unwrap();
            let p = premises[0];
            let once = remove(&p.succedent, a, "succedent")?;
            if !once.contains(a) {
                return Err(schema(rule, format!("premise succedent needs two occurrences of '{a}'")));
            }
            Ok(Sequent::new(p.antecedent.clone(), once))
        }
        SkRule::Cut => {
            let c = cut_formula.unwrap();
            let (p1, p2) = (premises[0], premises[1]);
            let d1 = remove(&p1.succedent, c, "succedent")?;
            let g2 = remove(&p2.antecedent, c, "antecedent")?;
            Ok(Sequent::new(p1.antecedent.union(&g2), d1.union(&p2.succedent)))
        }
    }
}

/// Derivation of `a => ~~a` in three nodes: Ax, LNeg, RNeg.
pub fn dni_proof(a: Formula) -> SkProof {
    let neg = Formula::neg(a.clone());
    let dneg = Formula::neg(neg.clone());
    let ax = SkProof::ax(a);
    let lneg = SkProof::derive(SkRule::LNeg, Some(neg), None, vec![ax])
        .expect("LNeg applies to the axiom");
    SkProof::derive(SkRule::RNeg, Some(dneg), None, vec![lneg])
        .expect("RNeg applies to the LNeg premise")
}

/// Derivation of `~~a => a` in three nodes: Ax, RNeg, LNeg.
pub fn dne_proof(a: Formula) -> SkProof {
    let neg = Formula::neg(a.clone());
    let dneg = Formula::neg(neg.clone());
    let ax = SkProof::ax(a);
    let rneg = SkProof::derive(SkRule::RNeg, Some(neg), None, vec![ax])
        .expect("RNeg applies to the axiom");
    SkProof::derive(SkRule::LNeg, Some(dneg), None, vec![rneg])
        .expect("LNeg applies to the RNeg premise")
}

/// The stock derivations, keyed by stable names:
///
/// * `sk-dni`: `A => ~~A` (Ax, LNeg, RNeg).
/// * `sk-dne`: `~~A => A` (Ax, RNeg, LNeg).
/// * `sk-cut-roundtrip`: the two composed by Cut on `~~A` to re-derive the
///   initial sequent `A => A`. The second cut premise is weakened to carry
///   context `A`, so the cut lands on `A, A => A` and an explicit LContr
///   finishes the job; textbook displays of this composition usually leave
///   both structural steps tacit.
pub fn derivation_catalog() -> BTreeMap<String, SkProof> {
    let a = Formula::atom("A");
    let dn_a = Formula::neg(Formula::neg(a.clone()));
    let dni = dni_proof(a.clone());
    let dne = dne_proof(a.clone());

    let widened = SkProof::derive(SkRule::LWeak, Some(a.clone()), None, vec![dne.clone()])
        .expect("weakening always applies");
    let cut = SkProof::derive(SkRule::Cut, None, Some(dn_a), vec![dni.clone(), widened])
        .expect("cut premises match on ~~A");
    let roundtrip = SkProof::derive(SkRule::LContr, Some(a), None, vec![cut])
        .expect("the cut conclusion carries A twice");

    let mut catalog = BTreeMap::new();
    catalog.insert("sk-dni".to_string(), dni);
    catalog.insert("sk-dne".to_string(), dne);
    catalog.insert("sk-cut-roundtrip".to_string(), roundtrip);
    catalog
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformKind {
    /// `~A, G => _|_` becomes `G => A`.
    RaaAssert,
    /// `A, G => _|_` becomes `G => ~A`.
    RaaDeny,
    /// `G => A` becomes `G => ~~A`.
    DniCtx,
    /// `G => ~~A` becomes `G => A`.
    DneCtx,
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransformKind::RaaAssert => "raa-assert",
            TransformKind::RaaDeny => "raa-deny",
            TransformKind::DniCtx => "dni-ctx",
            TransformKind::DneCtx => "dne-ctx",
        })
    }
}

/// Extend a valid proof by admissible steps (negation rules, cuts against
/// the catalog derivations, and the absurdity axiom) to shift its endsequent
/// between assertion, denial, and double-negation forms. The input proof is
/// embedded unchanged. When several antecedent formulas qualify, the least
/// in the canonical formula order is chosen, keeping the result
/// deterministic.
pub fn admissible_transform(kind: TransformKind, p: &SkProof) -> Result<SkProof, SkError> {
    let report = check_sk_proof(p);
    if let Some(v) = report.violation {
        return Err(SkError::InvalidInput(v));
    }
    let end = &p.conclusion;
    let mismatch = |expected: &'static str| SkError::ShapeMismatch {
        kind,
        expected,
        got: render_sequent(end),
    };
    let bottom_succedent =
        end.succedent.len() == 1 && end.succedent.contains(&Formula::Bottom);
    match kind {
        TransformKind::RaaAssert => {
            if !bottom_succedent {
                return Err(mismatch("~A, G => _|_"));
            }
            let neg = end
                .antecedent
                .iter()
                .find(|f| matches!(f, Formula::Neg(_)))
                .cloned()
                .ok_or_else(|| mismatch("~A, G => _|_"))?;
            let Formula::Neg(ref a) = neg else { unreachable!() };
            let a = (**a).clone();
            let dropped = SkProof::derive(
                SkRule::Cut,
                None,
                Some(Formula::bottom()),
                vec![p.clone(), SkProof::lbot()],
            )?;
            let doubled = SkProof::derive(
                SkRule::RNeg,
                Some(Formula::neg(neg.clone())),
                None,
                vec![dropped],
            )?;
            SkProof::derive(
                SkRule::Cut,
                None,
                Some(Formula::neg(neg)),
                vec![doubled, dne_proof(a)],
            )
        }
        TransformKind::RaaDeny => {
            if !bottom_succedent {
                return Err(mismatch("A, G => _|_"));
            }
            let a = end
                .antecedent
                .iter()
                .next()
                .cloned()
                .ok_or_else(|| mismatch("A, G => _|_"))?;
            let dropped = SkProof::derive(
                SkRule::Cut,
                None,
                Some(Formula::bottom()),
                vec![p.clone(), SkProof::lbot()],
            )?;
            SkProof::derive(SkRule::RNeg, Some(Formula::neg(a)), None, vec![dropped])
        }
        TransformKind::DniCtx => {
            if end.succedent.len() != 1 {
                return Err(mismatch("G => A"));
            }
            let a = end.succedent.iter().next().unwrap().clone();
            SkProof::derive(
                SkRule::Cut,
                None,
                Some(a.clone()),
                vec![p.clone(), dni_proof(a)],
            )
        }
        TransformKind::DneCtx => {
            if end.succedent.len() != 1 {
                return Err(mismatch("G => ~~A"));
            }
            let target = end.succedent.iter().next().unwrap().clone();
            let Formula::Neg(inner) = &target else {
                return Err(mismatch("G => ~~A"));
            };
            let Formula::Neg(a) = &**inner else {
                return Err(mismatch("G => ~~A"));
            };
            SkProof::derive(
                SkRule::Cut,
                None,
                Some(target.clone()),
                vec![p.clone(), dne_proof((**a).clone())],
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequent::parse_sequent;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn seq(s: &str) -> Sequent {
        parse_sequent(s).unwrap()
    }

    #[test]
    fn catalog_derivations_check_out() {
        let catalog = derivation_catalog();
        assert_eq!(catalog.len(), 3);
        for (name, proof) in &catalog {
            let report = check_sk_proof(proof);
            assert!(report.valid, "{name} failed: {:?}", report.violation);
        }
        assert_eq!(catalog["sk-dni"].conclusion, seq("A => ~~A"));
        assert_eq!(catalog["sk-dne"].conclusion, seq("~~A => A"));
        assert_eq!(catalog["sk-cut-roundtrip"].conclusion, seq("A => A"));
    }

    #[test]
    fn catalog_trees_have_the_documented_structure() {
        let catalog = derivation_catalog();
        assert_eq!(catalog["sk-dni"].node_count(), 3);
        assert_eq!(catalog["sk-dne"].node_count(), 3);
        assert_eq!(catalog["sk-dne"].premises[0].conclusion, seq("=> A, ~A"));
        let roundtrip = &catalog["sk-cut-roundtrip"];
        assert_eq!(roundtrip.rule, SkRule::LContr);
        assert_eq!(roundtrip.premises[0].rule, SkRule::Cut);
        assert_eq!(
            roundtrip.premises[0].cut_formula,
            Some(f("~~A"))
        );
        assert_eq!(roundtrip.premises[0].conclusion, seq("A, A => A"));
        assert_eq!(roundtrip.node_count(), 9);
    }

    #[test]
    fn axioms_are_schematic_over_arbitrary_formulas() {
        let report = check_sk_proof(&SkProof::ax(f("~~B")));
        assert!(report.valid);
        assert_eq!(report.endsequent, seq("~~B => ~~B"));
    }

    #[test]
    fn a_misapplied_rneg_is_reported_at_the_root() {
        let premise = SkProof::derive(SkRule::LNeg, Some(f("~A")), None, vec![SkProof::ax(f("A"))])
            .unwrap();
        assert_eq!(premise.conclusion, seq("A, ~A =>"));
        let bogus = SkProof::new(
            SkRule::RNeg,
            seq("A => ~A"),
            Some(f("~A")),
            None,
            vec![premise],
        );
        let report = check_sk_proof(&bogus);
        assert!(!report.valid);
        let v = report.violation.unwrap();
        assert!(v.path.is_empty());
        assert_eq!(v.rule, SkRule::RNeg);
        assert!(v.message.contains("claims"), "unexpected message: {}", v.message);
    }

    #[test]
    fn violations_deeper_in_the_tree_carry_their_path() {
        // Tamper with the axiom's principal but keep its stated conclusion,
        // so ancestors still see a consistent premise and the leaf itself is
        // the first schema mismatch.
        let good = dni_proof(f("A"));
        let mut bad = good.clone();
        bad.premises[0].premises[0].principal = Some(f("B"));
        let report = check_sk_proof(&bad);
        let v = report.violation.unwrap();
        assert_eq!(v.path, vec![0, 0]);
        assert_eq!(v.rule, SkRule::Ax);
        assert_eq!(format!("{v}").split(':').next().unwrap(), "at node 0.0");
    }

    #[test]
    fn arity_and_annotation_mistakes_are_violations_not_panics() {
        let no_premise = SkProof::new(SkRule::LNeg, seq("~A =>"), Some(f("~A")), None, vec![]);
        assert!(!check_sk_proof(&no_premise).valid);
        let cut_without_formula = SkProof::new(
            SkRule::Cut,
            seq("A => A"),
            None,
            None,
            vec![SkProof::ax(f("A")), SkProof::ax(f("A"))],
        );
        assert!(!check_sk_proof(&cut_without_formula).valid);
        let principal_on_cut = SkProof::new(
            SkRule::Cut,
            seq("A => A"),
            Some(f("A")),
            Some(f("A")),
            vec![SkProof::ax(f("A")), SkProof::ax(f("A"))],
        );
        assert!(!check_sk_proof(&principal_on_cut).valid);
    }

    #[test]
    fn branching_rules_insist_on_shared_contexts() {
        let p1 = SkProof::derive(SkRule::RWeak, Some(f("A")), None, vec![SkProof::ax(f("B"))])
            .unwrap();
        let p2 = SkProof::ax(f("C"));
        let err = SkProof::derive(SkRule::RAnd, Some(f("A & C")), None, vec![p1, p2]).unwrap_err();
        assert!(matches!(err, SkError::Schema { rule: SkRule::RAnd, .. }));
    }

    #[test]
    fn contraction_needs_two_copies() {
        let err =
            SkProof::derive(SkRule::LContr, Some(f("A")), None, vec![SkProof::ax(f("A"))])
                .unwrap_err();
        assert!(err.to_string().contains("two occurrences"));
    }

    #[test]
    fn cut_splits_contexts() {
        let left = SkProof::derive(SkRule::RWeak, Some(f("C")), None, vec![SkProof::ax(f("A"))])
            .unwrap();
        let right = SkProof::derive(SkRule::LWeak, Some(f("B")), None, vec![SkProof::ax(f("C"))])
            .unwrap();
        let cut = SkProof::derive(SkRule::Cut, None, Some(f("C")), vec![left, right]).unwrap();
        assert_eq!(cut.conclusion, seq("A, B => A, C"));
        assert!(check_sk_proof(&cut).valid);
    }

    #[test]
    fn dni_ctx_on_an_axiom_gives_double_negation_introduction() {
        let out = admissible_transform(TransformKind::DniCtx, &SkProof::ax(f("A"))).unwrap();
        assert!(check_sk_proof(&out).valid);
        assert_eq!(out.conclusion, seq("A => ~~A"));
    }

    #[test]
    fn dne_ctx_undoes_the_catalog_dni() {
        let catalog = derivation_catalog();
        let out = admissible_transform(TransformKind::DneCtx, &catalog["sk-dni"]).unwrap();
        assert!(check_sk_proof(&out).valid);
        assert_eq!(out.conclusion, seq("A => A"));
    }

    #[test]
    fn raa_deny_discharges_the_least_antecedent_formula() {
        // A, _|_ => _|_ by weakening the absurdity axiom (to-bottom form).
        let base = SkProof::derive(SkRule::RWeak, Some(f("_|_")), None, vec![SkProof::lbot()])
            .unwrap();
        let widened = SkProof::derive(SkRule::LWeak, Some(f("A")), None, vec![base]).unwrap();
        assert_eq!(widened.conclusion, seq("A, _|_ => _|_"));
        let out = admissible_transform(TransformKind::RaaDeny, &widened).unwrap();
        assert!(check_sk_proof(&out).valid);
        assert_eq!(out.conclusion, seq("_|_ => ~A"));
    }

    #[test]
    fn raa_assert_recovers_the_positive_claim() {
        // ~A, A => _|_ via LNeg on the axiom, then to-bottom weakening.
        let lneg = SkProof::derive(SkRule::LNeg, Some(f("~A")), None, vec![SkProof::ax(f("A"))])
            .unwrap();
        let with_bottom =
            SkProof::derive(SkRule::RWeak, Some(f("_|_")), None, vec![lneg]).unwrap();
        assert_eq!(with_bottom.conclusion, seq("A, ~A => _|_"));
        let out = admissible_transform(TransformKind::RaaAssert, &with_bottom).unwrap();
        assert!(check_sk_proof(&out).valid);
        assert_eq!(out.conclusion, seq("A => A"));
    }

    #[test]
    fn transforms_reject_wrong_shapes_and_invalid_inputs() {
        let err = admissible_transform(TransformKind::RaaAssert, &SkProof::ax(f("A"))).unwrap_err();
        assert!(matches!(err, SkError::ShapeMismatch { kind: TransformKind::RaaAssert, .. }));
        assert!(err.to_string().contains("~A, G => _|_"));

        let err = admissible_transform(TransformKind::DneCtx, &SkProof::ax(f("A"))).unwrap_err();
        assert!(matches!(err, SkError::ShapeMismatch { .. }));

        let forged = SkProof::new(SkRule::Ax, seq("=> A"), Some(f("A")), None, vec![]);
        let err = admissible_transform(TransformKind::DniCtx, &forged).unwrap_err();
        assert!(matches!(err, SkError::InvalidInput(_)));
    }

    #[test]
    fn checking_is_local_to_conclusions() {
        // Swap the 3-node dni subtree inside the roundtrip proof for the
        // 7-node transformer output with the same conclusion; validity is
        // unaffected because checking only reads child conclusions.
        let catalog = derivation_catalog();
        let mut patched = catalog["sk-cut-roundtrip"].clone();
        let replacement =
            admissible_transform(TransformKind::DniCtx, &SkProof::ax(f("A"))).unwrap();
        assert_eq!(replacement.conclusion, patched.premises[0].premises[0].conclusion);
        assert_ne!(replacement, patched.premises[0].premises[0]);
        patched.premises[0].premises[0] = replacement;
        assert!(check_sk_proof(&patched).valid);
    }
}
