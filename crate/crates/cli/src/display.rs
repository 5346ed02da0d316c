//! Plain-text rendering of proof trees and judgments for command output.

use proofbench_core::nd::{open_assumptions, NdProof, NdRule};
use proofbench_core::sequent::{render_sequent, render_sequent_unicode, Sequent};
use proofbench_core::sk::{SkProof, SkRule};
use proofbench_core::syntax::{render_formula, render_formula_unicode, Formula};

pub fn fmt_formula(f: &Formula, unicode: bool) -> String {
    if unicode {
        render_formula_unicode(f)
    } else {
        render_formula(f)
    }
}

pub fn fmt_sequent(s: &Sequent, unicode: bool) -> String {
    if unicode {
        render_sequent_unicode(s)
    } else {
        render_sequent(s)
    }
}

/// The judgment a deduction establishes: open assumptions, turnstile,
/// conclusion.
pub fn fmt_judgment(p: &NdProof, unicode: bool) -> String {
    let opens: Vec<String> =
        open_assumptions(p).iter().map(|f| fmt_formula(f, unicode)).collect();
    let turnstile = if unicode { "\u{22a2}" } else { "|-" };
    let conclusion = fmt_formula(&p.conclusion, unicode);
    if opens.is_empty() {
        format!("{turnstile} {conclusion}")
    } else {
        format!("{} {turnstile} {conclusion}", opens.join(", "))
    }
}

/// Indented tree of a sequent derivation, one node per line, root first.
pub fn sk_tree(p: &SkProof, unicode: bool) -> String {
    let mut out = String::new();
    sk_tree_rec(p, 0, unicode, &mut out);
    out
}

fn sk_tree_rec(p: &SkProof, depth: usize, unicode: bool, out: &mut String) {
    for _ in 0..depth {
        out.push_str("  ");
    }
    out.push_str(p.rule.name());
    if p.rule == SkRule::Cut {
        if let Some(c) = &p.cut_formula {
            out.push_str(&format!(" on {}", fmt_formula(c, unicode)));
        }
    }
    out.push_str(": ");
    out.push_str(&fmt_sequent(&p.conclusion, unicode));
    out.push('\n');
    for q in &p.premises {
        sk_tree_rec(q, depth + 1, unicode, out);
    }
}

/// Indented tree of a natural deduction proof. Hypothesis labels are shown
/// in brackets, discharge labels in braces.
pub fn nd_tree(p: &NdProof, unicode: bool) -> String {
    let mut out = String::new();
    nd_tree_rec(p, 0, unicode, &mut out);
    out
}

fn nd_tree_rec(p: &NdProof, depth: usize, unicode: bool, out: &mut String) {
    for _ in 0..depth {
        out.push_str("  ");
    }
    out.push_str(p.rule.name());
    if p.rule == NdRule::Hyp {
        if let Some(l) = &p.label {
            out.push_str(&format!("[{l}]"));
        }
    }
    if let Some(d) = &p.discharge {
        out.push_str(&format!("{{{d}}}"));
    }
    out.push_str(": ");
    out.push_str(&fmt_formula(&p.conclusion, unicode));
    out.push('\n');
    for q in &p.premises {
        nd_tree_rec(q, depth + 1, unicode, out);
    }
}
