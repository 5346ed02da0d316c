//! Cut elimination for sequent derivations.
//!
//! The procedure follows the classical recipe: recurse into a proof, and
//! wherever a `Cut` sits above only cut-free subproofs, replace it by a
//! *mix*, a multicut that removes every occurrence of the cut formula from
//! the left succedent and the right antecedent at once. Working with the
//! multicut sidesteps the notorious contraction loop: contracting a cut
//! formula below a cut never makes the mix conclusion grow.
//!
//! The mix itself is resolved by a case analysis on the last rules of its
//! two premises. Parametric occurrences are permuted upward, weakened or
//! contracted cut formulas are absorbed, axioms close a branch outright,
//! and when both last rules introduce the cut formula the mix is replaced
//! by mixes on strictly smaller formulas. Each recursive call shrinks the
//! pair (cut-formula rank, combined premise height) lexicographically, so
//! the procedure terminates; a step budget guards against engine bugs.

use std::fmt;

use crate::sequent::{render_sequent, Sequent};
use crate::sk::{check_sk_proof, SkProof, SkRule, SkViolation};
use crate::syntax::{subformulas, Formula};

/// Safety net for the elimination engine. The measure argument says the
/// recursion always terminates, so running into this bound means a bug,
/// not a hard input.
pub const DEFAULT_CUT_STEP_LIMIT: usize = 100_000;

/// Size measures attached to a single cut.
///
/// `rank` is the connective count of the cut formula plus one, so an
/// atomic cut has rank 1. `level` is the sum of the heights of the two
/// subtrees feeding the cut. Elimination drives the pair `(rank, level)`
/// down lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CutMeasure {
    pub rank: usize,
    pub level: usize,
}

/// One cut occurrence inside a proof: where it sits, what it cuts on, and
/// how big it is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutDescriptor {
    pub path: Vec<usize>,
    pub formula: Formula,
    pub measure: CutMeasure,
}

/// Census of all cuts in a proof, root-first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutAudit {
    pub cuts: Vec<CutDescriptor>,
}

impl CutAudit {
    pub fn count(&self) -> usize {
        self.cuts.len()
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.cuts.iter().map(|c| c.measure.rank).max()
    }

    pub fn is_cut_free(&self) -> bool {
        self.cuts.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutElimError {
    /// The input failed the kernel check; elimination only accepts valid
    /// proofs.
    InvalidProof(SkViolation),
    /// The step budget ran out. With the documented measure this cannot
    /// happen for valid inputs, so treat it as an engine defect.
    StepLimit { limit: usize },
    /// An internal rebuild produced an unexpected sequent. Also an engine
    /// defect; the message describes the mismatch.
    Internal(String),
}

impl fmt::Display for CutElimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutElimError::InvalidProof(v) => write!(f, "invalid proof: {v}"),
            CutElimError::StepLimit { limit } => {
                write!(f, "cut elimination exceeded {limit} steps")
            }
            CutElimError::Internal(msg) => write!(f, "internal elimination error: {msg}"),
        }
    }
}

impl std::error::Error for CutElimError {}

fn height(p: &SkProof) -> usize {
    1 + p.premises.iter().map(height).max().unwrap_or(0)
}

/// List every cut in `p` root-first with its formula and measure.
pub fn cut_audit(p: &SkProof) -> Result<CutAudit, CutElimError> {
    let report = check_sk_proof(p);
    if let Some(v) = report.violation {
        return Err(CutElimError::InvalidProof(v));
    }
    let mut cuts = Vec::new();
    let mut path = Vec::new();
    collect_cuts(p, &mut path, &mut cuts);
    Ok(CutAudit { cuts })
}

fn collect_cuts(p: &SkProof, path: &mut Vec<usize>, out: &mut Vec<CutDescriptor>) {
    if p.rule == SkRule::Cut {
        let formula = p
            .cut_formula
            .clone()
            .expect("checked proof carries a cut formula on every Cut");
        let measure = CutMeasure {
            rank: formula.degree() + 1,
            level: p.premises.iter().map(height).sum(),
        };
        out.push(CutDescriptor { path: path.clone(), formula, measure });
    }
    for (i, q) in p.premises.iter().enumerate() {
        path.push(i);
        collect_cuts(q, path, out);
        path.pop();
    }
}

/// Remove every cut from `p`, preserving the endsequent exactly (multiset
/// equality on both sides). The default step budget is
/// [`DEFAULT_CUT_STEP_LIMIT`].
pub fn eliminate_cuts(p: &SkProof) -> Result<SkProof, CutElimError> {
    eliminate_cuts_with_limit(p, DEFAULT_CUT_STEP_LIMIT)
}

/// Same as [`eliminate_cuts`] with an explicit step budget.
pub fn eliminate_cuts_with_limit(p: &SkProof, limit: usize) -> Result<SkProof, CutElimError> {
    let report = check_sk_proof(p);
    if let Some(v) = report.violation {
        return Err(CutElimError::InvalidProof(v));
    }
    let mut steps = 0usize;
    let out = elim(p, &mut steps, limit)?;
    if out.endsequent() != p.endsequent() {
        return Err(CutElimError::Internal(format!(
            "endsequent drifted from {} to {}",
            render_sequent(p.endsequent()),
            render_sequent(out.endsequent()),
        )));
    }
    Ok(out)
}

/// Structural recursion: clear the premises first, so every cut is resolved
/// only once the subproofs above it are cut-free. Cuts nearer the leaves are
/// therefore always reduced before the cuts below them.
fn elim(p: &SkProof, steps: &mut usize, limit: usize) -> Result<SkProof, CutElimError> {
    let mut premises = Vec::with_capacity(p.premises.len());
    for q in &p.premises {
        premises.push(elim(q, steps, limit)?);
    }
    if p.rule == SkRule::Cut {
        let c = p
            .cut_formula
            .clone()
            .expect("checked proof carries a cut formula on every Cut");
        let mut it = premises.into_iter();
        let l = it.next().expect("cut arity");
        let r = it.next().expect("cut arity");
        let mixed = mix(&l, &r, &c, steps, limit)?;
        // A cut removes one occurrence of the formula per side; the mix
        // removed all of them. Weaken the survivors back in.
        adjust_to(mixed, &p.conclusion)
    } else {
        Ok(SkProof::new(
            p.rule,
            p.conclusion.clone(),
            p.principal.clone(),
            p.cut_formula.clone(),
            premises,
        ))
    }
}

/// The sequent a mix of `l` and `r` on `c` concludes: all of `c` leaves the
/// left succedent and the right antecedent, everything else is kept.
fn mix_target(l: &SkProof, r: &SkProof, c: &Formula) -> Sequent {
    Sequent::new(
        l.conclusion.antecedent.union(&r.conclusion.antecedent.minus_all(c)),
        l.conclusion.succedent.minus_all(c).union(&r.conclusion.succedent),
    )
}

fn is_right_principal_on(p: &SkProof, c: &Formula) -> bool {
    matches!(p.rule, SkRule::RNeg | SkRule::RAnd | SkRule::ROr | SkRule::RImp)
        && p.principal.as_ref() == Some(c)
}

fn is_left_principal_on(p: &SkProof, c: &Formula) -> bool {
    matches!(p.rule, SkRule::LNeg | SkRule::LAnd | SkRule::LOr | SkRule::LImp)
        && p.principal.as_ref() == Some(c)
}

fn internal(context: &str) -> impl FnOnce(crate::sk::SkError) -> CutElimError + '_ {
    move |e| CutElimError::Internal(format!("{context}: {e}"))
}

/// Mix two cut-free proofs on `c`, producing a cut-free proof of
/// [`mix_target`]. Recursion measure: the rank of `c` strictly drops at
/// principal reductions, and within one rank the combined premise height
/// drops at every other recursive call.
fn mix(
    l: &SkProof,
    r: &SkProof,
    c: &Formula,
    steps: &mut usize,
    limit: usize,
) -> Result<SkProof, CutElimError> {
    *steps += 1;
    if *steps > limit {
        return Err(CutElimError::StepLimit { limit });
    }
    let target = mix_target(l, r, c);

    // Degenerate mixes: one side never mentions the cut formula on the cut
    // side, so the other premise is dead weight and weakening suffices.
    if !l.conclusion.succedent.contains(c) {
        return adjust_to(l.clone(), &target);
    }
    if !r.conclusion.antecedent.contains(c) {
        return adjust_to(r.clone(), &target);
    }

    // Axiom premises: the axiom contributes nothing but the cut formula
    // itself, so the opposite premise already proves the target up to
    // contraction of surplus copies.
    if l.rule == SkRule::Ax {
        return adjust_to(r.clone(), &target);
    }
    if r.rule == SkRule::Ax {
        return adjust_to(l.clone(), &target);
    }

    // A weakened or contracted cut formula is absorbed: the mix target is
    // insensitive to the number of copies, so step over the structural rule.
    if matches!(l.rule, SkRule::RWeak | SkRule::RContr) && l.principal.as_ref() == Some(c) {
        return mix(&l.premises[0], r, c, steps, limit);
    }
    if matches!(r.rule, SkRule::LWeak | SkRule::LContr) && r.principal.as_ref() == Some(c) {
        return mix(l, &r.premises[0], c, steps, limit);
    }

    let left_principal = is_right_principal_on(l, c);
    let right_principal = is_left_principal_on(r, c);

    if left_principal && right_principal {
        return principal_reduction(l, r, c, &target, steps, limit);
    }
    if left_principal {
        // Only the right premise is parametric; push the mix into it.
        return permute_right(l, r, c, &target, steps, limit);
    }
    // The left premise is parametric in `c` (its last rule neither is an
    // axiom nor introduces `c` on the right); push the mix into it.
    permute_left(l, r, c, &target, steps, limit)
}

/// The premise sequents a rule application must have to conclude `t` with
/// the given principal formula. Inverting the rule at the mixed conclusion
/// tells the permutation cases what to weaken each mixed premise up to.
fn invert(rule: SkRule, principal: &Formula, t: &Sequent) -> Result<Vec<Sequent>, CutElimError> {
    let ante = &t.antecedent;
    let succ = &t.succedent;
    let missing = |side: &str| {
        CutElimError::Internal(format!(
            "principal {principal} missing from the {side} of {} while inverting {rule}",
            render_sequent(t),
        ))
    };
    let minus_ante = || ante.minus_one(principal).ok_or_else(|| missing("antecedent"));
    let minus_succ = || succ.minus_one(principal).ok_or_else(|| missing("succedent"));
    let out = match rule {
        SkRule::LNeg => {
            let Formula::Neg(a) = principal else {
                return Err(CutElimError::Internal(format!("LNeg on {principal}")));
            };
            vec![Sequent::new(minus_ante()?, succ.plus((**a).clone()))]
        }
        SkRule::RNeg => {
            let Formula::Neg(a) = principal else {
                return Err(CutElimError::Internal(format!("RNeg on {principal}")));
            };
            vec![Sequent::new(ante.plus((**a).clone()), minus_succ()?)]
        }
        SkRule::LAnd => {
            let Formula::And(a, b) = principal else {
                return Err(CutElimError::Internal(format!("LAnd on {principal}")));
            };
            vec![Sequent::new(
                minus_ante()?.plus((**a).clone()).plus((**b).clone()),
                succ.clone(),
            )]
        }
        SkRule::RAnd => {
            let Formula::And(a, b) = principal else {
                return Err(CutElimError::Internal(format!("RAnd on {principal}")));
            };
            let base = minus_succ()?;
            vec![
                Sequent::new(ante.clone(), base.plus((**a).clone())),
                Sequent::new(ante.clone(), base.plus((**b).clone())),
            ]
        }
        SkRule::LOr => {
            let Formula::Or(a, b) = principal else {
                return Err(CutElimError::Internal(format!("LOr on {principal}")));
            };
            let base = minus_ante()?;
            vec![
                Sequent::new(base.plus((**a).clone()), succ.clone()),
                Sequent::new(base.plus((**b).clone()), succ.clone()),
            ]
        }
        SkRule::ROr => {
            let Formula::Or(a, b) = principal else {
                return Err(CutElimError::Internal(format!("ROr on {principal}")));
            };
            vec![Sequent::new(
                ante.clone(),
                minus_succ()?.plus((**a).clone()).plus((**b).clone()),
            )]
        }
        SkRule::LImp => {
            let Formula::Imp(a, b) = principal else {
                return Err(CutElimError::Internal(format!("LImp on {principal}")));
            };
            let base = minus_ante()?;
            vec![
                Sequent::new(base.clone(), succ.plus((**a).clone())),
                Sequent::new(base.plus((**b).clone()), succ.clone()),
            ]
        }
        SkRule::RImp => {
            let Formula::Imp(a, b) = principal else {
                return Err(CutElimError::Internal(format!("RImp on {principal}")));
            };
            vec![Sequent::new(ante.plus((**a).clone()), minus_succ()?.plus((**b).clone()))]
        }
        SkRule::LWeak => vec![Sequent::new(minus_ante()?, succ.clone())],
        SkRule::RWeak => vec![Sequent::new(ante.clone(), minus_succ()?)],
        SkRule::LContr => vec![Sequent::new(ante.plus(principal.clone()), succ.clone())],
        SkRule::RContr => vec![Sequent::new(ante.clone(), succ.plus(principal.clone()))],
        SkRule::Ax | SkRule::LBot | SkRule::Cut => {
            return Err(CutElimError::Internal(format!("cannot invert {rule}")));
        }
    };
    Ok(out)
}

/// Parametric case, left side: the mix commutes with the last rule of `l`.
/// Each premise of `l` is mixed with `r`, weakened up to the inverted
/// premise shape (an auxiliary occurrence equal to `c` may have been
/// swallowed by the mix), and the rule is reapplied.
fn permute_left(
    l: &SkProof,
    r: &SkProof,
    c: &Formula,
    target: &Sequent,
    steps: &mut usize,
    limit: usize,
) -> Result<SkProof, CutElimError> {
    let principal = l
        .principal
        .clone()
        .ok_or_else(|| CutElimError::Internal(format!("{} without principal", l.rule)))?;
    let needed = invert(l.rule, &principal, target)?;
    if needed.len() != l.premises.len() {
        return Err(CutElimError::Internal(format!("premise count mismatch for {}", l.rule)));
    }
    let mut lifted = Vec::with_capacity(needed.len());
    for (li, need) in l.premises.iter().zip(needed) {
        let mixed = mix(li, r, c, steps, limit)?;
        lifted.push(adjust_to(mixed, &need)?);
    }
    let out = SkProof::derive(l.rule, Some(principal), None, lifted)
        .map_err(internal("permute left"))?;
    expect_sequent(out, target)
}

/// Parametric case, right side: mirror image of [`permute_left`].
fn permute_right(
    l: &SkProof,
    r: &SkProof,
    c: &Formula,
    target: &Sequent,
    steps: &mut usize,
    limit: usize,
) -> Result<SkProof, CutElimError> {
    let principal = r
        .principal
        .clone()
        .ok_or_else(|| CutElimError::Internal(format!("{} without principal", r.rule)))?;
    let needed = invert(r.rule, &principal, target)?;
    if needed.len() != r.premises.len() {
        return Err(CutElimError::Internal(format!("premise count mismatch for {}", r.rule)));
    }
    let mut lifted = Vec::with_capacity(needed.len());
    for (rj, need) in r.premises.iter().zip(needed) {
        let mixed = mix(l, rj, c, steps, limit)?;
        lifted.push(adjust_to(mixed, &need)?);
    }
    let out = SkProof::derive(r.rule, Some(principal), None, lifted)
        .map_err(internal("permute right"))?;
    expect_sequent(out, target)
}

/// Both last rules introduce the cut formula. Replace the mix by mixes on
/// the immediate subformulas, after first clearing any parametric copies of
/// `c` out of the premises with same-rank mixes of strictly smaller level.
fn principal_reduction(
    l: &SkProof,
    r: &SkProof,
    c: &Formula,
    target: &Sequent,
    steps: &mut usize,
    limit: usize,
) -> Result<SkProof, CutElimError> {
    let combined = match c {
        Formula::Neg(x) => {
            // l ends in RNeg from  x, G => D   and r in LNeg from  S => P, x.
            let cleared_l = mix(&l.premises[0], r, c, steps, limit)?;
            let cleared_r = mix(l, &r.premises[0], c, steps, limit)?;
            // cleared_r supplies x on the right, cleared_l consumes it.
            mix(&cleared_r, &cleared_l, x, steps, limit)?
        }
        Formula::And(x, y) => {
            // l ends in RAnd with premises for x and y; r in LAnd from
            // x, y, S => P.
            let supply_x = mix(&l.premises[0], r, c, steps, limit)?;
            let supply_y = mix(&l.premises[1], r, c, steps, limit)?;
            let consumer = mix(l, &r.premises[0], c, steps, limit)?;
            let after_x = mix(&supply_x, &consumer, x, steps, limit)?;
            mix(&supply_y, &after_x, y, steps, limit)?
        }
        Formula::Or(x, y) => {
            // l ends in ROr from  G => D, x, y;  r in LOr with premises
            // consuming x and y.
            let supplier = mix(&l.premises[0], r, c, steps, limit)?;
            let consume_x = mix(l, &r.premises[0], c, steps, limit)?;
            let consume_y = mix(l, &r.premises[1], c, steps, limit)?;
            let after_x = mix(&supplier, &consume_x, x, steps, limit)?;
            mix(&after_x, &consume_y, y, steps, limit)?
        }
        Formula::Imp(x, y) => {
            // l ends in RImp from  x, G => D, y;  r in LImp with premises
            // S => P, x  and  y, S => P.
            let body = mix(&l.premises[0], r, c, steps, limit)?;
            let supply_x = mix(l, &r.premises[0], c, steps, limit)?;
            let consume_y = mix(l, &r.premises[1], c, steps, limit)?;
            let after_x = mix(&supply_x, &body, x, steps, limit)?;
            mix(&after_x, &consume_y, y, steps, limit)?
        }
        Formula::Atom(_) | Formula::Bottom => {
            return Err(CutElimError::Internal(format!(
                "principal reduction reached on the atomic formula {c}"
            )));
        }
    };
    // The subformula mixes duplicate the side contexts; contract (and where
    // an occurrence was swallowed, weaken) back to the mix conclusion.
    adjust_to(combined, target)
}

/// Bridge a proof of one sequent to a structurally adjacent one using only
/// weakening and contraction: per formula and side, weaken missing copies
/// in and contract surplus copies away. Fails (as an engine error) if a
/// formula would have to vanish entirely, which weakening and contraction
/// cannot do.
fn adjust_to(p: SkProof, target: &Sequent) -> Result<SkProof, CutElimError> {
    let mut cur = p;
    for side in [Side::Ante, Side::Succ] {
        let (have, want) = match side {
            Side::Ante => (&cur.conclusion.antecedent, &target.antecedent),
            Side::Succ => (&cur.conclusion.succedent, &target.succedent),
        };
        let mut plan: Vec<(Formula, isize)> = Vec::new();
        let mut support: Vec<&Formula> = have.support();
        for f in want.support() {
            if !support.contains(&f) {
                support.push(f);
            }
        }
        for f in support {
            let h = have.count(f) as isize;
            let w = want.count(f) as isize;
            if h != w {
                if w == 0 {
                    return Err(CutElimError::Internal(format!(
                        "cannot drop {f} from {} while adjusting to {}",
                        render_sequent(&cur.conclusion),
                        render_sequent(target),
                    )));
                }
                plan.push((f.clone(), w - h));
            }
        }
        for (f, delta) in plan {
            let (grow, shrink) = match side {
                Side::Ante => (SkRule::LWeak, SkRule::LContr),
                Side::Succ => (SkRule::RWeak, SkRule::RContr),
            };
            let rule = if delta > 0 { grow } else { shrink };
            for _ in 0..delta.unsigned_abs() {
                cur = SkProof::derive(rule, Some(f.clone()), None, vec![cur])
                    .map_err(internal("structural adjustment"))?;
            }
        }
    }
    expect_sequent(cur, target)
}

#[derive(Clone, Copy)]
enum Side {
    Ante,
    Succ,
}

fn expect_sequent(p: SkProof, target: &Sequent) -> Result<SkProof, CutElimError> {
    if &p.conclusion != target {
        return Err(CutElimError::Internal(format!(
            "rebuilt {} where {} was required",
            render_sequent(&p.conclusion),
            render_sequent(target),
        )));
    }
    Ok(p)
}

/// Witness for a failed sequent-level subformula audit: the first node
/// (root-first) holding a formula that is not a subformula of the
/// endsequent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequentAuditWitness {
    pub path: Vec<usize>,
    pub formula: Formula,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequentAuditReport {
    pub pass: bool,
    pub witness: Option<SequentAuditWitness>,
}

/// Check the subformula property of cut-free derivations: every formula in
/// every node's sequent must be a subformula of some endsequent formula.
/// Proofs with cuts may legitimately fail this; cut-free ones never should.
pub fn sequent_subformula_audit(p: &SkProof) -> Result<SequentAuditReport, CutElimError> {
    let report = check_sk_proof(p);
    if let Some(v) = report.violation {
        return Err(CutElimError::InvalidProof(v));
    }
    let mut allowed = std::collections::BTreeSet::new();
    let end = p.endsequent();
    for f in end.antecedent.iter().chain(end.succedent.iter()) {
        allowed.extend(subformulas(f));
    }
    let mut path = Vec::new();
    let witness = audit_node(p, &allowed, &mut path);
    Ok(SequentAuditReport { pass: witness.is_none(), witness })
}

fn audit_node(
    p: &SkProof,
    allowed: &std::collections::BTreeSet<Formula>,
    path: &mut Vec<usize>,
) -> Option<SequentAuditWitness> {
    for f in p.conclusion.antecedent.iter().chain(p.conclusion.succedent.iter()) {
        if !allowed.contains(f) {
            return Some(SequentAuditWitness { path: path.clone(), formula: f.clone() });
        }
    }
    for (i, q) in p.premises.iter().enumerate() {
        path.push(i);
        let found = audit_node(q, allowed, path);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}
