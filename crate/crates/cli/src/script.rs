//! The proof-script file format: a JSON tree with one node per rule
//! application, readable for both calculi.
//!
//! Sequent nodes carry `rule`, `sequent`, optionally `principal` and
//! `cutFormula`; natural deduction nodes carry `rule`, `formula`,
//! optionally `label` and `discharge`. Formulas and sequents are written
//! in the ASCII surface syntax. A script states each node's conclusion
//! explicitly, so a script is just a claimed derivation; the kernels
//! decide whether the claim holds.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use proofbench_core::nd::{NdProof, NdRule};
use proofbench_core::sequent::{parse_sequent, render_sequent};
use proofbench_core::sk::{SkProof, SkRule};
use proofbench_core::syntax::{parse_formula, render_formula, Formula};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Calculus {
    Sk,
    Nd,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProofScript {
    pub calculus: Calculus,
    pub root: ScriptNode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScriptNode {
    pub rule: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequent: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub principal: Option<String>,
    #[serde(default, rename = "cutFormula", skip_serializing_if = "Option::is_none")]
    pub cut_formula: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discharge: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub premises: Vec<ScriptNode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{message}")]
pub struct ScriptError {
    pub message: String,
}

fn err(message: impl Into<String>) -> ScriptError {
    ScriptError { message: message.into() }
}

/// A deserialized proof of either calculus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Proof {
    Sk(SkProof),
    Nd(NdProof),
}

/// Parse a script from JSON text.
pub fn parse_script(text: &str) -> Result<ProofScript, ScriptError> {
    serde_json::from_str(text).map_err(|e| err(format!("malformed script: {e}")))
}

/// Render a script as JSON with a trailing newline, the on-disk fixture
/// format.
pub fn script_to_string(script: &ProofScript) -> String {
    let mut out = serde_json::to_string_pretty(script).expect("scripts always serialize");
    out.push('\n');
    out
}

/// Reconstruct the proof object a script describes.
pub fn script_to_proof(script: &ProofScript) -> Result<Proof, ScriptError> {
    match script.calculus {
        Calculus::Sk => sk_node(&script.root).map(Proof::Sk),
        Calculus::Nd => nd_node(&script.root).map(Proof::Nd),
    }
}

/// Describe a proof object as a script.
pub fn proof_to_script(proof: &Proof) -> ProofScript {
    match proof {
        Proof::Sk(p) => ProofScript { calculus: Calculus::Sk, root: sk_to_node(p) },
        Proof::Nd(p) => ProofScript { calculus: Calculus::Nd, root: nd_to_node(p) },
    }
}

fn sk_rule_by_name(name: &str) -> Option<SkRule> {
    let all = [
        SkRule::Ax,
        SkRule::LBot,
        SkRule::LNeg,
        SkRule::RNeg,
        SkRule::LAnd,
        SkRule::RAnd,
        SkRule::LOr,
        SkRule::ROr,
        SkRule::LImp,
        SkRule::RImp,
        SkRule::LWeak,
        SkRule::RWeak,
        SkRule::LContr,
        SkRule::RContr,
        SkRule::Cut,
    ];
    all.into_iter().find(|r| r.name() == name)
}

fn nd_rule_by_name(name: &str) -> Option<NdRule> {
    let all = [
        NdRule::Hyp,
        NdRule::AndI,
        NdRule::AndE1,
        NdRule::AndE2,
        NdRule::OrI1,
        NdRule::OrI2,
        NdRule::OrE,
        NdRule::ImpI,
        NdRule::ImpE,
        NdRule::NegI,
        NdRule::NegE,
        NdRule::BotE,
        NdRule::Raa,
        NdRule::MacroDnI,
        NdRule::MacroDnE,
    ];
    all.into_iter().find(|r| r.name() == name)
}

fn sk_node(node: &ScriptNode) -> Result<SkProof, ScriptError> {
    let rule = sk_rule_by_name(&node.rule)
        .ok_or_else(|| err(format!("unknown sequent rule '{}'", node.rule)))?;
    for (field, value) in [
        ("formula", &node.formula),
        ("label", &node.label),
        ("discharge", &node.discharge),
    ] {
        if value.is_some() {
            return Err(err(format!("field '{field}' does not belong to a sequent node")));
        }
    }
    let text = node
        .sequent
        .as_ref()
        .ok_or_else(|| err(format!("sequent node for {} is missing 'sequent'", node.rule)))?;
    let conclusion =
        parse_sequent(text).map_err(|e| err(format!("bad sequent '{text}': {e}")))?;
    let principal = node
        .principal
        .as_ref()
        .map(|p| parse_formula(p).map_err(|e| err(format!("bad principal '{p}': {e}"))))
        .transpose()?;
    let cut_formula = node
        .cut_formula
        .as_ref()
        .map(|c| parse_formula(c).map_err(|e| err(format!("bad cut formula '{c}': {e}"))))
        .transpose()?;
    // The axioms determine their own principal formula, so scripts may
    // leave it off.
    let principal = match (principal, rule) {
        (None, SkRule::Ax) => conclusion.antecedent.iter().next().cloned(),
        (None, SkRule::LBot) => Some(Formula::bottom()),
        (p, _) => p,
    };
    let mut premises = Vec::with_capacity(node.premises.len());
    for child in &node.premises {
        premises.push(sk_node(child)?);
    }
    Ok(SkProof::new(rule, conclusion, principal, cut_formula, premises))
}

fn nd_node(node: &ScriptNode) -> Result<NdProof, ScriptError> {
    let rule = nd_rule_by_name(&node.rule)
        .ok_or_else(|| err(format!("unknown natural deduction rule '{}'", node.rule)))?;
    for (field, value) in [
        ("sequent", &node.sequent),
        ("principal", &node.principal),
        ("cutFormula", &node.cut_formula),
    ] {
        if value.is_some() {
            return Err(err(format!(
                "field '{field}' does not belong to a natural deduction node"
            )));
        }
    }
    let text = node
        .formula
        .as_ref()
        .ok_or_else(|| err(format!("deduction node for {} is missing 'formula'", node.rule)))?;
    let conclusion =
        parse_formula(text).map_err(|e| err(format!("bad formula '{text}': {e}")))?;
    let mut premises = Vec::with_capacity(node.premises.len());
    for child in &node.premises {
        premises.push(nd_node(child)?);
    }
    Ok(NdProof::new(rule, conclusion, node.label.clone(), node.discharge.clone(), premises))
}

fn sk_to_node(p: &SkProof) -> ScriptNode {
    ScriptNode {
        rule: p.rule.name().to_string(),
        sequent: Some(render_sequent(&p.conclusion)),
        formula: None,
        // The axioms infer their principal back from the sequent.
        principal: match p.rule {
            SkRule::Ax | SkRule::LBot => None,
            _ => p.principal.as_ref().map(render_formula),
        },
        cut_formula: p.cut_formula.as_ref().map(render_formula),
        label: None,
        discharge: None,
        premises: p.premises.iter().map(sk_to_node).collect(),
    }
}

fn nd_to_node(p: &NdProof) -> ScriptNode {
    ScriptNode {
        rule: p.rule.name().to_string(),
        sequent: None,
        formula: Some(render_formula(&p.conclusion)),
        principal: None,
        cut_formula: None,
        label: p.label.clone(),
        discharge: p.discharge.clone(),
        premises: p.premises.iter().map(nd_to_node).collect(),
    }
}
