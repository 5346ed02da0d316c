//! Formula enumeration and randomized proof generation for the test
//! corpus.
//!
//! The enumerator is exhaustive and deterministic; the generators build
//! proofs that are valid by construction, bottom-up from axioms, so the
//! kernels' soundness can be probed on inputs nobody wrote by hand. All
//! randomness flows through a caller-supplied [`rand::Rng`], and the test
//! suites seed ChaCha8 for reproducibility.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::nd::{Mode, NdProof, NdRule};
use crate::sequent::Sequent;
use crate::sk::{SkProof, SkRule};
use crate::syntax::Formula;

/// Every formula of height at most `max_height` whose leaves are the given
/// atoms. Height counts nodes: an atom has height 1, a negation of an atom
/// height 2. The result is duplicate-free; ordering is by height layer and
/// construction, which is stable across runs.
pub fn enumerate_formulas(max_height: usize, atoms: &[&str]) -> Vec<Formula> {
    let mut layers: Vec<Vec<Formula>> = Vec::new();
    let mut all: Vec<Formula> = Vec::new();
    for h in 1..=max_height {
        let mut layer = Vec::new();
        if h == 1 {
            for a in atoms {
                layer.push(Formula::atom(*a));
            }
        } else {
            // Exactly height h: at least one child of height h - 1.
            let shorter: Vec<&Formula> =
                layers[..h - 2].iter().flatten().collect();
            let tallest: Vec<&Formula> = layers[h - 2].iter().collect();
            for f in &tallest {
                layer.push(Formula::neg((*f).clone()));
            }
            let pairs = |out: &mut Vec<Formula>, l: &Formula, r: &Formula| {
                out.push(Formula::and(l.clone(), r.clone()));
                out.push(Formula::or(l.clone(), r.clone()));
                out.push(Formula::imp(l.clone(), r.clone()));
            };
            for l in &tallest {
                for r in tallest.iter().chain(shorter.iter()) {
                    pairs(&mut layer, l, r);
                }
            }
            for l in &shorter {
                for r in &tallest {
                    pairs(&mut layer, l, r);
                }
            }
        }
        all.extend(layer.iter().cloned());
        layers.push(layer);
    }
    all
}

/// A random formula of height at most `max_height` over the given atoms.
/// Connectives and atoms are drawn uniformly; the tree is grown top-down
/// and shrinks toward leaves as the height budget runs out.
pub fn random_formula<R: Rng + ?Sized>(rng: &mut R, max_height: usize, atoms: &[&str]) -> Formula {
    if max_height <= 1 || rng.gen_ratio(1, 4) {
        let a = atoms.choose(rng).expect("atom list must be nonempty");
        return Formula::atom(*a);
    }
    match rng.gen_range(0..4u8) {
        0 => Formula::neg(random_formula(rng, max_height - 1, atoms)),
        1 => Formula::and(
            random_formula(rng, max_height - 1, atoms),
            random_formula(rng, max_height - 1, atoms),
        ),
        2 => Formula::or(
            random_formula(rng, max_height - 1, atoms),
            random_formula(rng, max_height - 1, atoms),
        ),
        _ => Formula::imp(
            random_formula(rng, max_height - 1, atoms),
            random_formula(rng, max_height - 1, atoms),
        ),
    }
}

/// Knobs for [`random_sk_proof`].
#[derive(Clone, Debug)]
pub struct SkProofConfig {
    /// Hard cap on the node count of the generated proof.
    pub max_nodes: usize,
    /// Atom names for leaf formulas.
    pub atoms: Vec<String>,
    /// Maximum number of `Cut` nodes to work in.
    pub max_cuts: usize,
    /// Height bound for the formulas synthesized along the way.
    pub max_formula_height: usize,
}

impl Default for SkProofConfig {
    fn default() -> Self {
        SkProofConfig {
            max_nodes: 10,
            atoms: vec!["A".into(), "B".into()],
            max_cuts: 0,
            max_formula_height: 2,
        }
    }
}

/// Grow a valid sequent derivation bottom-up: start from an axiom and
/// repeatedly apply a randomly chosen rule to the endsequent, synthesizing
/// the second premise of a branching rule from an axiom plus weakenings.
/// The result always passes `check_sk_proof`; the generator never builds a
/// node the kernel would reject.
pub fn random_sk_proof<R: Rng>(rng: &mut R, config: &SkProofConfig) -> SkProof {
    let atoms: Vec<&str> = config.atoms.iter().map(|s| s.as_str()).collect();
    let small = |rng: &mut dyn rand::RngCore| -> Formula {
        random_formula(rng, config.max_formula_height, &atoms)
    };

    let mut p = if rng.gen_ratio(1, 8) {
        SkProof::lbot()
    } else {
        SkProof::ax(small(rng))
    };
    let mut cuts = 0usize;

    loop {
        let budget = config.max_nodes.saturating_sub(p.node_count());
        if budget == 0 || rng.gen_ratio(1, 6) {
            return p;
        }
        let ante = p.endsequent().antecedent.clone();
        let succ = p.endsequent().succedent.clone();

        // Enumerate the moves the budget and the endsequent allow, then
        // pick one. Weakening is always available, so the list is never
        // empty.
        #[derive(Clone, Copy, PartialEq)]
        enum Move {
            LWeak,
            RWeak,
            LContr,
            RContr,
            LNeg,
            RNeg,
            LAnd,
            ROr,
            RImp,
            RAnd,
            LOr,
            LImp,
            Cut,
        }
        let mut moves = vec![Move::LWeak, Move::RWeak];
        if ante.support().iter().any(|f| ante.count(f) >= 2) {
            moves.push(Move::LContr);
        }
        if succ.support().iter().any(|f| succ.count(f) >= 2) {
            moves.push(Move::RContr);
        }
        if !succ.is_empty() {
            moves.push(Move::LNeg);
        }
        if !ante.is_empty() {
            moves.push(Move::RNeg);
        }
        if ante.len() >= 2 {
            moves.push(Move::LAnd);
        }
        if succ.len() >= 2 {
            moves.push(Move::ROr);
        }
        if !ante.is_empty() && !succ.is_empty() {
            moves.push(Move::RImp);
        }
        // Branching rules pay for a synthesized sibling: a one-node base
        // plus one weakening per context formula.
        let sibling_cost = 2 + ante.len() + succ.len();
        if budget > sibling_cost {
            if !succ.is_empty() {
                moves.push(Move::RAnd);
                moves.push(Move::LImp);
            }
            moves.push(Move::LOr);
            if cuts < config.max_cuts && !(ante.is_empty() && succ.is_empty()) {
                // Bias toward actually using the cut allowance.
                moves.push(Move::Cut);
                moves.push(Move::Cut);
                moves.push(Move::Cut);
            }
        }

        let mv = *moves.choose(rng).expect("weakening is always a move");
        let pick_ante = |rng: &mut dyn rand::RngCore| {
            let support = ante.support();
            let mut flat = Vec::new();
            for f in support {
                for _ in 0..ante.count(f) {
                    flat.push(f.clone());
                }
            }
            flat.choose(rng).cloned().expect("nonempty antecedent")
        };
        let pick_succ = |rng: &mut dyn rand::RngCore| {
            let support = succ.support();
            let mut flat = Vec::new();
            for f in support {
                for _ in 0..succ.count(f) {
                    flat.push(f.clone());
                }
            }
            flat.choose(rng).cloned().expect("nonempty succedent")
        };

        p = match mv {
            Move::LWeak => derive1(SkRule::LWeak, small(rng), p),
            Move::RWeak => derive1(SkRule::RWeak, small(rng), p),
            Move::LContr => {
                let f = duplicated(&ante, rng);
                derive1(SkRule::LContr, f, p)
            }
            Move::RContr => {
                let f = duplicated(&succ, rng);
                derive1(SkRule::RContr, f, p)
            }
            Move::LNeg => {
                let a = pick_succ(rng);
                derive1(SkRule::LNeg, Formula::neg(a), p)
            }
            Move::RNeg => {
                let a = pick_ante(rng);
                derive1(SkRule::RNeg, Formula::neg(a), p)
            }
            Move::LAnd => {
                let a = pick_ante(rng);
                let rest = ante.minus_one(&a).expect("picked from antecedent");
                let support = rest.support();
                let b = (*support.choose(rng).expect("len >= 2")).clone();
                derive1(SkRule::LAnd, Formula::and(a, b), p)
            }
            Move::ROr => {
                let a = pick_succ(rng);
                let rest = succ.minus_one(&a).expect("picked from succedent");
                let support = rest.support();
                let b = (*support.choose(rng).expect("len >= 2")).clone();
                derive1(SkRule::ROr, Formula::or(a, b), p)
            }
            Move::RImp => {
                let a = pick_ante(rng);
                let b = pick_succ(rng);
                derive1(SkRule::RImp, Formula::imp(a, b), p)
            }
            Move::RAnd => {
                // Second conjunct not-bottom: its premise is synthesizable
                // in any context from the absurdity axiom.
                let a = pick_succ(rng);
                let shared = Sequent::new(
                    ante.clone(),
                    succ.minus_one(&a).expect("picked from succedent"),
                );
                let b = Formula::neg(Formula::bottom());
                let sibling = not_bottom_premise(&shared);
                SkProof::derive(SkRule::RAnd, Some(Formula::and(a, b)), None, vec![p, sibling])
                    .expect("generator applies rules only when they fit")
            }
            Move::LOr => {
                // Right disjunct bottom: its premise comes from the
                // absurdity axiom under any context.
                let shared = Sequent::new(ante.clone(), succ.clone());
                let sibling = bottom_premise(&shared);
                let a = small(rng);
                let grown = derive1(SkRule::LWeak, a.clone(), p);
                SkProof::derive(
                    SkRule::LOr,
                    Some(Formula::or(a, Formula::bottom())),
                    None,
                    vec![grown, sibling],
                )
                .expect("generator applies rules only when they fit")
            }
            Move::LImp => {
                // Use the current proof as the minor premise supplying the
                // antecedent of the implication; the major's consequent is
                // bottom, synthesized from the absurdity axiom.
                let a = pick_succ(rng);
                let shared = Sequent::new(
                    ante.clone(),
                    succ.minus_one(&a).expect("picked from succedent"),
                );
                let sibling = bottom_premise(&shared);
                SkProof::derive(
                    SkRule::LImp,
                    Some(Formula::imp(a.clone(), Formula::bottom())),
                    None,
                    vec![p, sibling],
                )
                .expect("generator applies rules only when they fit")
            }
            Move::Cut => {
                cuts += 1;
                if !succ.is_empty() && (ante.is_empty() || rng.gen_bool(0.5)) {
                    // Current proof supplies the cut formula on the right.
                    let c = pick_succ(rng);
                    let sibling = weakened_ax(&c, rng, &atoms, config.max_formula_height);
                    SkProof::derive(SkRule::Cut, None, Some(c), vec![p, sibling])
                        .expect("generator applies rules only when they fit")
                } else {
                    // Current proof consumes the cut formula on the left.
                    let c = pick_ante(rng);
                    let sibling = weakened_ax(&c, rng, &atoms, config.max_formula_height);
                    SkProof::derive(SkRule::Cut, None, Some(c), vec![sibling, p])
                        .expect("generator applies rules only when they fit")
                }
            }
        };
    }
}

fn derive1(rule: SkRule, principal: Formula, premise: SkProof) -> SkProof {
    SkProof::derive(rule, Some(principal), None, vec![premise])
        .expect("generator applies rules only when they fit")
}

fn duplicated<R: Rng>(side: &crate::sequent::Multiset, rng: &mut R) -> Formula {
    let dups: Vec<Formula> = side
        .support()
        .into_iter()
        .filter(|f| side.count(f) >= 2)
        .cloned()
        .collect();
    dups.choose(rng).cloned().expect("caller checked a duplicate exists")
}

/// A proof of `ante, _|_ |- succ ...` shaped exactly `shared` plus a bottom
/// on the left: the absurdity axiom weakened up.
fn bottom_premise(shared: &Sequent) -> SkProof {
    let mut p = SkProof::lbot();
    for f in flatten(&shared.antecedent) {
        p = derive1(SkRule::LWeak, f, p);
    }
    for f in flatten(&shared.succedent) {
        p = derive1(SkRule::RWeak, f, p);
    }
    p
}

/// A proof of `shared` extended with not-bottom on the right.
fn not_bottom_premise(shared: &Sequent) -> SkProof {
    let mut p = derive1(SkRule::RNeg, Formula::neg(Formula::bottom()), SkProof::lbot());
    for f in flatten(&shared.antecedent) {
        p = derive1(SkRule::LWeak, f, p);
    }
    for f in flatten(&shared.succedent) {
        p = derive1(SkRule::RWeak, f, p);
    }
    p
}

/// An axiom on `c` padded with a few random weakenings, used as the
/// synthesized partner of a cut.
fn weakened_ax<R: Rng>(
    c: &Formula,
    rng: &mut R,
    atoms: &[&str],
    max_formula_height: usize,
) -> SkProof {
    let mut p = SkProof::ax(c.clone());
    for _ in 0..rng.gen_range(0..2u8) {
        let f = random_formula(rng, max_formula_height, atoms);
        if rng.gen_bool(0.5) {
            p = derive1(SkRule::LWeak, f, p);
        } else {
            p = derive1(SkRule::RWeak, f, p);
        }
    }
    p
}

fn flatten(m: &crate::sequent::Multiset) -> Vec<Formula> {
    m.iter().cloned().collect()
}

/// Knobs for [`random_nd_proof`].
#[derive(Clone, Debug)]
pub struct NdProofConfig {
    /// Hard cap on the node count of the generated proof.
    pub max_nodes: usize,
    /// Atom names for leaf formulas.
    pub atoms: Vec<String>,
    /// Which kernel mode the proof must satisfy.
    pub mode: Mode,
    /// Height bound for synthesized formulas.
    pub max_formula_height: usize,
}

impl Default for NdProofConfig {
    fn default() -> Self {
        NdProofConfig {
            max_nodes: 10,
            atoms: vec!["A".into(), "B".into()],
            mode: Mode::Classical,
            max_formula_height: 2,
        }
    }
}

/// Grow a valid natural deduction proof from a hypothesis leaf by applying
/// randomly chosen rules whose side conditions are met by construction.
/// Intuitionistic configurations never touch the classical-only rules.
pub fn random_nd_proof<R: Rng>(rng: &mut R, config: &NdProofConfig) -> NdProof {
    let atoms: Vec<&str> = config.atoms.iter().map(|s| s.as_str()).collect();
    let mut label_counter = 0usize;
    let mut fresh = move || {
        label_counter += 1;
        format!("h{label_counter}")
    };

    let mut p = NdProof::hyp(fresh(), random_formula(rng, config.max_formula_height, &atoms));

    loop {
        let budget = config.max_nodes.saturating_sub(p.node_count());
        if budget == 0 || rng.gen_ratio(1, 6) {
            return p;
        }
        let c = p.conclusion.clone();

        #[derive(Clone, Copy)]
        enum Move {
            AndI,
            AndE1,
            AndE2,
            OrI1,
            OrI2,
            ImpI,
            ImpE,
            NegE,
            MacroDnI,
            MacroDnE,
            NegI,
            Raa,
        }
        let mut moves = vec![Move::OrI1, Move::OrI2, Move::ImpI, Move::MacroDnI];
        if budget >= 2 {
            moves.push(Move::AndI);
            moves.push(Move::NegE);
        }
        if matches!(c, Formula::And(_, _)) {
            moves.push(Move::AndE1);
            moves.push(Move::AndE2);
        }
        if matches!(c, Formula::Imp(_, _)) && budget >= 2 {
            moves.push(Move::ImpE);
        }
        if c == Formula::Bottom {
            moves.push(Move::NegI);
        }
        if config.mode == Mode::Classical {
            if let Formula::Neg(inner) = &c {
                if matches!(**inner, Formula::Neg(_)) {
                    moves.push(Move::MacroDnE);
                }
            }
            if c == Formula::Bottom {
                moves.push(Move::Raa);
            }
        }

        let mv = *moves.choose(rng).expect("there is always an applicable move");
        p = match mv {
            Move::AndI => {
                let other = NdProof::hyp(
                    fresh(),
                    random_formula(rng, config.max_formula_height, &atoms),
                );
                let (l, r) = if rng.gen_bool(0.5) { (p, other) } else { (other, p) };
                let conclusion = Formula::and(l.conclusion.clone(), r.conclusion.clone());
                NdProof::new(NdRule::AndI, conclusion, None, None, vec![l, r])
            }
            Move::AndE1 => {
                let Formula::And(a, _) = &c else { unreachable!() };
                NdProof::new(NdRule::AndE1, (**a).clone(), None, None, vec![p])
            }
            Move::AndE2 => {
                let Formula::And(_, b) = &c else { unreachable!() };
                NdProof::new(NdRule::AndE2, (**b).clone(), None, None, vec![p])
            }
            Move::OrI1 => {
                let other = random_formula(rng, config.max_formula_height, &atoms);
                NdProof::new(NdRule::OrI1, Formula::or(c, other), None, None, vec![p])
            }
            Move::OrI2 => {
                let other = random_formula(rng, config.max_formula_height, &atoms);
                NdProof::new(NdRule::OrI2, Formula::or(other, c), None, None, vec![p])
            }
            Move::ImpI => {
                // Either discharge an actually open hypothesis or do a
                // vacuous discharge on a fresh label.
                let open: Vec<(String, Formula)> = crate::nd::open_hyps(&p).into_keys().collect();
                if !open.is_empty() && rng.gen_bool(0.7) {
                    let (label, formula) =
                        open.choose(rng).expect("nonempty open set").clone();
                    NdProof::new(
                        NdRule::ImpI,
                        Formula::imp(formula, c),
                        None,
                        Some(label),
                        vec![p],
                    )
                } else {
                    let a = random_formula(rng, config.max_formula_height, &atoms);
                    NdProof::new(
                        NdRule::ImpI,
                        Formula::imp(a, c),
                        None,
                        Some(fresh()),
                        vec![p],
                    )
                }
            }
            Move::ImpE => {
                let Formula::Imp(a, b) = &c else { unreachable!() };
                let arg = NdProof::hyp(fresh(), (**a).clone());
                NdProof::new(NdRule::ImpE, (**b).clone(), None, None, vec![p, arg])
            }
            Move::NegE => {
                let neg = NdProof::hyp(fresh(), Formula::neg(c.clone()));
                NdProof::new(NdRule::NegE, Formula::bottom(), None, None, vec![p, neg])
            }
            Move::NegI => {
                let open: Vec<(String, Formula)> = crate::nd::open_hyps(&p).into_keys().collect();
                if !open.is_empty() && rng.gen_bool(0.7) {
                    let (label, formula) =
                        open.choose(rng).expect("nonempty open set").clone();
                    NdProof::new(
                        NdRule::NegI,
                        Formula::neg(formula),
                        None,
                        Some(label),
                        vec![p],
                    )
                } else {
                    let a = random_formula(rng, config.max_formula_height, &atoms);
                    NdProof::new(NdRule::NegI, Formula::neg(a), None, Some(fresh()), vec![p])
                }
            }
            Move::Raa => {
                // Discharge a negated hypothesis if one is open, otherwise
                // vacuously conclude a random formula.
                let open: Vec<(String, Formula)> = crate::nd::open_hyps(&p).into_keys().collect();
                let negated: Vec<(String, Formula)> = open
                    .iter()
                    .filter(|(_, f)| matches!(f, Formula::Neg(_)))
                    .cloned()
                    .collect();
                if !negated.is_empty() && rng.gen_bool(0.7) {
                    let (label, formula) =
                        negated.choose(rng).expect("nonempty").clone();
                    let Formula::Neg(inner) = formula else { unreachable!() };
                    NdProof::new(NdRule::Raa, *inner, None, Some(label), vec![p])
                } else {
                    let a = random_formula(rng, config.max_formula_height, &atoms);
                    NdProof::new(NdRule::Raa, a, None, Some(fresh()), vec![p])
                }
            }
            Move::MacroDnI => {
                NdProof::new(
                    NdRule::MacroDnI,
                    Formula::neg(Formula::neg(c)),
                    None,
                    None,
                    vec![p],
                )
            }
            Move::MacroDnE => {
                let Formula::Neg(inner) = &c else { unreachable!() };
                let Formula::Neg(core) = &**inner else { unreachable!() };
                NdProof::new(NdRule::MacroDnE, (**core).clone(), None, None, vec![p])
            }
        };
    }
}
