//! Classical and intuitionistic semantics.
//!
//! Classical side: exhaustive truth tables over the formula's atoms (bivalent
//! valuations, no solver). Intuitionistic side: a terminating backward proof
//! search in a contraction-free single-succedent calculus, cross-checkable
//! against a bounded enumeration of finite Kripke models.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use thiserror::Error;

use crate::sequent::Sequent;
use crate::syntax::Formula;

/// Assignment of truth values to atom names.
pub type Valuation = BTreeMap<String, bool>;

/// Atom budget for exhaustive truth-table operations.
pub const DEFAULT_ATOM_LIMIT: usize = 20;

/// Largest world count `kripke_search` will enumerate. Model enumeration is
/// brute force over off-diagonal relation bitmasks, which stays cheap through
/// five worlds and explodes beyond.
pub const MAX_KRIPKE_WORLDS: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("valuation does not assign atom '{atom}'")]
    MissingAtom { atom: String },
    #[error("formula has {count} atoms, over the limit of {limit}")]
    AtomLimit { count: usize, limit: usize },
    #[error("world bound {requested} out of range (1..={max})")]
    BoundTooLarge { requested: usize, max: usize },
    #[error("invalid Kripke model: {0}")]
    InvalidModel(String),
}

/// Evaluate under a bivalent valuation. Every atom of `f` must be assigned.
pub fn evaluate(f: &Formula, v: &Valuation) -> Result<bool, SemanticsError> {
    match f {
        Formula::Atom(name) => v
            .get(name)
            .copied()
            .ok_or_else(|| SemanticsError::MissingAtom { atom: name.clone() }),
        Formula::Bottom => Ok(false),
        Formula::Neg(g) => Ok(!evaluate(g, v)?),
        Formula::And(l, r) => Ok(evaluate(l, v)? && evaluate(r, v)?),
        Formula::Or(l, r) => Ok(evaluate(l, v)? || evaluate(r, v)?),
        Formula::Imp(l, r) => Ok(!evaluate(l, v)? || evaluate(r, v)?),
    }
}

/// All valuations over `atoms` in binary counting order: the first atom is
/// the most significant bit, false before true, so the all-false row comes
/// first and the all-true row last.
pub fn valuation_rows(atoms: &[String]) -> impl Iterator<Item = Valuation> + '_ {
    let n = atoms.len();
    (0u64..(1u64 << n)).map(move |row| {
        atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), (row >> (n - 1 - i)) & 1 == 1))
            .collect()
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TautologyVerdict {
    Tautology,
    /// A valuation falsifying the formula.
    Falsified(Valuation),
}

impl TautologyVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, TautologyVerdict::Tautology)
    }

    pub fn countervaluation(&self) -> Option<&Valuation> {
        match self {
            TautologyVerdict::Tautology => None,
            TautologyVerdict::Falsified(v) => Some(v),
        }
    }
}

pub fn is_tautology(f: &Formula) -> Result<TautologyVerdict, SemanticsError> {
    is_tautology_with_limit(f, DEFAULT_ATOM_LIMIT)
}

pub fn is_tautology_with_limit(
    f: &Formula,
    limit: usize,
) -> Result<TautologyVerdict, SemanticsError> {
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    if atoms.len() > limit {
        return Err(SemanticsError::AtomLimit { count: atoms.len(), limit });
    }
    for v in valuation_rows(&atoms) {
        if !evaluate(f, &v)? {
            return Ok(TautologyVerdict::Falsified(v));
        }
    }
    Ok(TautologyVerdict::Tautology)
}

/// Classical validity of a sequent: under every valuation, if all antecedent
/// members hold then some succedent member holds. The empty succedent is an
/// empty disjunction, i.e. false.
pub fn sequent_valid(s: &Sequent) -> Result<bool, SemanticsError> {
    sequent_valid_with_limit(s, DEFAULT_ATOM_LIMIT)
}

pub fn sequent_valid_with_limit(s: &Sequent, limit: usize) -> Result<bool, SemanticsError> {
    let mut atoms: BTreeSet<String> = BTreeSet::new();
    for f in s.antecedent.iter().chain(s.succedent.iter()) {
        atoms.extend(f.atoms());
    }
    if atoms.len() > limit {
        return Err(SemanticsError::AtomLimit { count: atoms.len(), limit });
    }
    let atoms: Vec<String> = atoms.into_iter().collect();
    for v in valuation_rows(&atoms) {
        let mut ante = true;
        for f in s.antecedent.iter() {
            ante = ante && evaluate(f, &v)?;
        }
        if !ante {
            continue;
        }
        let mut succ = false;
        for f in s.succedent.iter() {
            succ = succ || evaluate(f, &v)?;
        }
        if !succ {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provability {
    Provable,
    Unprovable,
}

impl Provability {
    pub fn is_provable(&self) -> bool {
        matches!(self, Provability::Provable)
    }
}

/// Decide intuitionistic provability of `f`.
///
/// The procedure is backward search in the contraction-free calculus G4ip
/// (Dyckhoff's LJT). Negation is normalized to `A -> _|_` before the search;
/// the Kripke forcing clauses for the two spellings coincide, so this is
/// provability-preserving and purely internal. Termination needs no loop
/// check: each rule replaces a sequent member by finitely many members of
/// strictly smaller weight (w(atom) = w(bottom) = 1, w(A&B) = w(A)+w(B)+2,
/// w(A|B) = w(A->B) = w(A)+w(B)+1), so the multiset of weights decreases in
/// the Dershowitz-Manna order at every step.
pub fn prove_intuitionistic(f: &Formula) -> Provability {
    if g4ip(Vec::new(), strip_negations(f)) {
        Provability::Provable
    } else {
        Provability::Unprovable
    }
}

fn strip_negations(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) | Formula::Bottom => f.clone(),
        Formula::Neg(g) => Formula::imp(strip_negations(g), Formula::Bottom),
        Formula::And(l, r) => Formula::and(strip_negations(l), strip_negations(r)),
        Formula::Or(l, r) => Formula::or(strip_negations(l), strip_negations(r)),
        Formula::Imp(l, r) => Formula::imp(strip_negations(l), strip_negations(r)),
    }
}

/// G4ip backward search on negation-free sequents `ante ⊢ goal`.
fn g4ip(mut ante: Vec<Formula>, goal: Formula) -> bool {
    // Closure conditions.
    if ante.iter().any(|f| *f == Formula::Bottom) {
        return true;
    }
    if ante.iter().any(|f| *f == goal) {
        return true;
    }

    // Invertible left rules, first applicable member.
    for i in 0..ante.len() {
        match ante[i].clone() {
            Formula::And(a, b) => {
                ante.swap_remove(i);
                ante.push(*a);
                ante.push(*b);
                return g4ip(ante, goal);
            }
            Formula::Or(a, b) => {
                ante.swap_remove(i);
                let mut left = ante.clone();
                left.push(*a);
                ante.push(*b);
                return g4ip(left, goal.clone()) && g4ip(ante, goal);
            }
            Formula::Imp(p, b) => match *p {
                // `_|_ -> b` can never fire: using it needs a proof of _|_,
                // which already proves anything.
                Formula::Bottom => {
                    ante.swap_remove(i);
                    return g4ip(ante, goal);
                }
                Formula::And(x, y) => {
                    ante.swap_remove(i);
                    ante.push(Formula::imp(*x, Formula::Imp(y, b)));
                    return g4ip(ante, goal);
                }
                Formula::Or(x, y) => {
                    ante.swap_remove(i);
                    ante.push(Formula::Imp(x, b.clone()));
                    ante.push(Formula::Imp(y, b));
                    return g4ip(ante, goal);
                }
                Formula::Atom(ref name) => {
                    if ante.iter().any(|f| matches!(f, Formula::Atom(n) if n == name)) {
                        ante.swap_remove(i);
                        ante.push(*b);
                        return g4ip(ante, goal);
                    }
                    // Atom not present: leave the implication alone.
                }
                Formula::Imp(..) => {
                    // Non-invertible; handled below.
                }
                Formula::Neg(_) => unreachable!("negations are stripped before search"),
            },
            _ => {}
        }
    }

    // Invertible right rules.
    match goal {
        Formula::And(a, b) => return g4ip(ante.clone(), *a) && g4ip(ante, *b),
        Formula::Imp(a, b) => {
            ante.push(*a);
            return g4ip(ante, *b);
        }
        _ => {}
    }

    // Non-invertible choices, tried with backtracking: either disjunct of an
    // Or goal, then each nested implication on the left.
    if let Formula::Or(ref a, ref b) = goal {
        if g4ip(ante.clone(), (**a).clone()) || g4ip(ante.clone(), (**b).clone()) {
            return true;
        }
    }
    for i in 0..ante.len() {
        if let Formula::Imp(p, b) = ante[i].clone() {
            if let Formula::Imp(x, y) = *p {
                let mut rest = ante.clone();
                rest.swap_remove(i);
                let mut major = rest.clone();
                major.push(Formula::Imp(y.clone(), b.clone()));
                let mut minor = rest;
                minor.push(*b);
                if g4ip(major, Formula::Imp(x, y)) && g4ip(minor, goal.clone()) {
                    return true;
                }
            }
        }
    }
    false
}

/// A finite partially ordered set of worlds with monotone atom forcing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KripkeModel {
    /// `leq[u][v]` iff world `u` is below (or equal to) world `v`.
    leq: Vec<Vec<bool>>,
    /// Atoms forced at each world; upward closed along `leq`.
    forcing: Vec<BTreeSet<String>>,
}

impl KripkeModel {
    pub fn new(
        leq: Vec<Vec<bool>>,
        forcing: Vec<BTreeSet<String>>,
    ) -> Result<Self, SemanticsError> {
        let n = leq.len();
        if forcing.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(SemanticsError::InvalidModel(
                "order matrix and forcing list must agree on the world count".into(),
            ));
        }
        for u in 0..n {
            if !leq[u][u] {
                return Err(SemanticsError::InvalidModel(format!(
                    "order not reflexive at world {u}"
                )));
            }
            for v in 0..n {
                if u != v && leq[u][v] && leq[v][u] {
                    return Err(SemanticsError::InvalidModel(format!(
                        "order not antisymmetric between worlds {u} and {v}"
                    )));
                }
                for w in 0..n {
                    if leq[u][v] && leq[v][w] && !leq[u][w] {
                        return Err(SemanticsError::InvalidModel(format!(
                            "order not transitive through worlds {u}, {v}, {w}"
                        )));
                    }
                }
                if leq[u][v] && !forcing[u].is_subset(&forcing[v]) {
                    return Err(SemanticsError::InvalidModel(format!(
                        "forcing not monotone from world {u} to world {v}"
                    )));
                }
            }
        }
        Ok(KripkeModel { leq, forcing })
    }

    pub fn world_count(&self) -> usize {
        self.leq.len()
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.leq[u][v]
    }

    pub fn atoms_at(&self, w: usize) -> &BTreeSet<String> {
        &self.forcing[w]
    }

    /// Compact description like `worlds 0 ≤ 1; A @ {1}` for reports.
    pub fn describe(&self) -> String {
        let n = self.world_count();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && self.leq[u][v] {
                    edges.push(format!("{u}<={v}"));
                }
            }
        }
        let order = if edges.is_empty() { "discrete".to_string() } else { edges.join(", ") };
        let mut atoms: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for (w, set) in self.forcing.iter().enumerate() {
            for a in set {
                atoms.entry(a).or_default().push(w);
            }
        }
        let forcing = if atoms.is_empty() {
            "no atoms forced".to_string()
        } else {
            atoms
                .iter()
                .map(|(a, ws)| {
                    let ws: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
                    format!("{a}@{{{}}}", ws.join(","))
                })
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!("{n} worlds; order {order}; {forcing}")
    }
}

/// Kripke forcing `w ⊩ f`.
pub fn forces(model: &KripkeModel, world: usize, f: &Formula) -> bool {
    match f {
        Formula::Atom(name) => model.forcing[world].contains(name),
        Formula::Bottom => false,
        Formula::Neg(g) => (0..model.world_count())
            .filter(|&v| model.leq[world][v])
            .all(|v| !forces(model, v, g)),
        Formula::And(l, r) => forces(model, world, l) && forces(model, world, r),
        Formula::Or(l, r) => forces(model, world, l) || forces(model, world, r),
        Formula::Imp(l, r) => (0..model.world_count())
            .filter(|&v| model.leq[world][v])
            .all(|v| !forces(model, v, l) || forces(model, v, r)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KripkeSearch {
    /// A model and a world in it where the formula is not forced.
    Countermodel { model: KripkeModel, world: usize },
    /// Every model with up to `bound` worlds forces the formula everywhere.
    NoCountermodel { bound: usize },
}

impl KripkeSearch {
    pub fn countermodel(&self) -> Option<(&KripkeModel, usize)> {
        match self {
            KripkeSearch::Countermodel { model, world } => Some((model, *world)),
            KripkeSearch::NoCountermodel { .. } => None,
        }
    }
}

/// Search all Kripke models with at most `max_worlds` worlds (1 to
/// [`MAX_KRIPKE_WORLDS`]) for one refuting `f`, smallest world count first.
pub fn kripke_search(f: &Formula, max_worlds: usize) -> Result<KripkeSearch, SemanticsError> {
    if max_worlds == 0 || max_worlds > MAX_KRIPKE_WORLDS {
        return Err(SemanticsError::BoundTooLarge {
            requested: max_worlds,
            max: MAX_KRIPKE_WORLDS,
        });
    }
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    for n in 1..=max_worlds {
        for leq in posets(n) {
            let upsets = enumerate_upsets(leq);
            // Odometer over one up-set choice per atom.
            let mut choice = vec![0usize; atoms.len()];
            loop {
                let mut forcing = vec![BTreeSet::new(); n];
                for (ai, a) in atoms.iter().enumerate() {
                    let mask = upsets[choice[ai]];
                    for (w, world_atoms) in forcing.iter_mut().enumerate() {
                        if mask & (1 << w) != 0 {
                            world_atoms.insert(a.clone());
                        }
                    }
                }
                let model = KripkeModel { leq: leq.clone(), forcing };
                for w in 0..n {
                    if !forces(&model, w, f) {
                        return Ok(KripkeSearch::Countermodel { model, world: w });
                    }
                }
                // Advance the odometer.
                let mut i = 0;
                loop {
                    if i == choice.len() {
                        break;
                    }
                    choice[i] += 1;
                    if choice[i] < upsets.len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == choice.len() {
                    break;
                }
            }
        }
    }
    Ok(KripkeSearch::NoCountermodel { bound: max_worlds })
}

/// All partial orders on `n` labeled worlds, as reflexive `leq` matrices.
/// Brute force over off-diagonal bitmasks, filtered for antisymmetry and
/// transitivity; computed once per world count.
fn posets(n: usize) -> &'static Vec<Vec<Vec<bool>>> {
    static CACHE: [OnceLock<Vec<Vec<Vec<bool>>>>; MAX_KRIPKE_WORLDS] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[n - 1].get_or_init(|| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        let mut out = Vec::new();
        'mask: for mask in 0u64..(1u64 << pairs.len()) {
            let mut leq = vec![vec![false; n]; n];
            for (w, row) in leq.iter_mut().enumerate() {
                row[w] = true;
            }
            for (bit, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    leq[u][v] = true;
                }
            }
            for u in 0..n {
                for v in 0..n {
                    if u != v && leq[u][v] && leq[v][u] {
                        continue 'mask;
                    }
                    for w in 0..n {
                        if leq[u][v] && leq[v][w] && !leq[u][w] {
                            continue 'mask;
                        }
                    }
                }
            }
            out.push(leq);
        }
        out
    })
}

/// Upward-closed world sets of a poset, as bitmasks.
fn enumerate_upsets(leq: &[Vec<bool>]) -> Vec<u64> {
    let n = leq.len();
    (0u64..(1u64 << n))
        .filter(|set| {
            (0..n).all(|w| {
                set & (1 << w) == 0 || (0..n).all(|v| !leq[w][v] || set & (1 << v) != 0)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequent::parse_sequent;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn val(pairs: &[(&str, bool)]) -> Valuation {
        pairs.iter().map(|(a, b)| (a.to_string(), *b)).collect()
    }

    #[test]
    fn evaluates_the_connectives() {
        let v = val(&[("A", true), ("B", false)]);
        assert!(!evaluate(&f("A -> B"), &v).unwrap());
        assert!(evaluate(&f("B -> A"), &v).unwrap());
        assert!(!evaluate(&f("A & B"), &v).unwrap());
        assert!(evaluate(&f("A | B"), &v).unwrap());
        assert!(evaluate(&f("~B"), &v).unwrap());
        assert!(!evaluate(&f("_|_"), &Valuation::new()).unwrap());
    }

    #[test]
    fn evaluation_requires_every_atom() {
        let err = evaluate(&f("A & C"), &val(&[("A", true)])).unwrap_err();
        assert_eq!(err, SemanticsError::MissingAtom { atom: "C".into() });
    }

    #[test]
    fn excluded_middle_and_double_negation_are_classical_tautologies() {
        assert!(is_tautology(&f("A | ~A")).unwrap().holds());
        assert!(is_tautology(&f("(A -> ~~A) & (~~A -> A)")).unwrap().holds());
    }

    #[test]
    fn countervaluation_is_the_first_falsifying_row() {
        let verdict = is_tautology(&f("A -> B")).unwrap();
        assert_eq!(
            verdict,
            TautologyVerdict::Falsified(val(&[("A", true), ("B", false)]))
        );
    }

    #[test]
    fn atom_limit_is_enforced() {
        let mut big = Formula::atom("x0");
        for i in 1..=20 {
            big = Formula::and(big, Formula::atom(format!("x{i}")));
        }
        let err = is_tautology(&big).unwrap_err();
        assert_eq!(err, SemanticsError::AtomLimit { count: 21, limit: 20 });
        assert!(is_tautology_with_limit(&big, 21).unwrap().holds() == false);
    }

    #[test]
    fn valuation_rows_count_in_binary() {
        let atoms = vec!["A".to_string(), "B".to_string()];
        let rows: Vec<Valuation> = valuation_rows(&atoms).collect();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0], val(&[("A", false), ("B", false)]));
        assert_eq!(rows[1], val(&[("A", false), ("B", true)]));
        assert_eq!(rows[2], val(&[("A", true), ("B", false)]));
        assert_eq!(rows[3], val(&[("A", true), ("B", true)]));
    }

    #[test]
    fn sequent_validity_reads_sides_as_conjunction_and_disjunction() {
        assert!(sequent_valid(&parse_sequent("A, ~A =>").unwrap()).unwrap());
        assert!(sequent_valid(&parse_sequent("=> A, ~A").unwrap()).unwrap());
        assert!(!sequent_valid(&parse_sequent("A => B").unwrap()).unwrap());
        assert!(sequent_valid(&parse_sequent("A => A").unwrap()).unwrap());
        // Empty succedent is an unsatisfiable claim, not a trivial one.
        assert!(!sequent_valid(&parse_sequent("A =>").unwrap()).unwrap());
        assert!(sequent_valid(&parse_sequent("_|_ =>").unwrap()).unwrap());
    }

    #[test]
    fn double_negation_introduction_is_intuitionistically_provable() {
        assert!(prove_intuitionistic(&f("A -> ~~A")).is_provable());
    }

    #[test]
    fn double_negation_elimination_is_not() {
        assert!(!prove_intuitionistic(&f("~~A -> A")).is_provable());
        assert!(!prove_intuitionistic(&f("A | ~A")).is_provable());
    }

    #[test]
    fn triple_negation_collapses() {
        assert!(prove_intuitionistic(&f("~~~A -> ~A")).is_provable());
        assert!(prove_intuitionistic(&f("~A -> ~~~A")).is_provable());
    }

    #[test]
    fn assorted_intuitionistic_verdicts() {
        assert!(prove_intuitionistic(&f("_|_ -> A")).is_provable());
        assert!(prove_intuitionistic(&f("A & B -> B & A")).is_provable());
        assert!(prove_intuitionistic(&f("(A -> B) -> (~B -> ~A)")).is_provable());
        // Contrapositive in the classical direction fails.
        assert!(!prove_intuitionistic(&f("(~B -> ~A) -> (A -> B)")).is_provable());
        // Peirce's law, the classic G4ip exercise for the nested-implication rule.
        assert!(!prove_intuitionistic(&f("((A -> B) -> A) -> A")).is_provable());
        assert!(prove_intuitionistic(&f("((A -> B) -> A) -> ~~A")).is_provable());
        assert!(!prove_intuitionistic(&f("~~(A | B) -> ~~A | ~~B")).is_provable());
    }

    #[test]
    fn kripke_refutes_double_negation_elimination_with_two_worlds() {
        let search = kripke_search(&f("~~A -> A"), 2).unwrap();
        let (model, world) = search.countermodel().expect("countermodel expected");
        assert_eq!(model.world_count(), 2);
        assert!(forces(model, world, &f("~~A")));
        assert!(!forces(model, world, &f("A")));
    }

    #[test]
    fn kripke_finds_nothing_against_double_negation_introduction() {
        let search = kripke_search(&f("A -> ~~A"), 3).unwrap();
        assert_eq!(search, KripkeSearch::NoCountermodel { bound: 3 });
    }

    #[test]
    fn kripke_refutes_excluded_middle() {
        let search = kripke_search(&f("A | ~A"), 2).unwrap();
        let (model, world) = search.countermodel().expect("countermodel expected");
        assert!(!forces(model, world, &f("A")));
        assert!(!forces(model, world, &f("~A")));
    }

    #[test]
    fn kripke_bound_is_capped() {
        assert!(matches!(
            kripke_search(&f("A"), 6),
            Err(SemanticsError::BoundTooLarge { requested: 6, max: 5 })
        ));
        assert!(kripke_search(&f("A"), 0).is_err());
    }

    #[test]
    fn model_validation_catches_bad_orders_and_forcing() {
        // Non-monotone forcing along 0 <= 1.
        let leq = vec![vec![true, true], vec![false, true]];
        let bad = vec![
            ["A".to_string()].into_iter().collect(),
            BTreeSet::new(),
        ];
        assert!(matches!(
            KripkeModel::new(leq.clone(), bad),
            Err(SemanticsError::InvalidModel(_))
        ));
        let good = vec![
            BTreeSet::new(),
            ["A".to_string()].into_iter().collect(),
        ];
        assert!(KripkeModel::new(leq, good).is_ok());
        // Cyclic "order".
        let cyc = vec![vec![true, true], vec![true, true]];
        assert!(KripkeModel::new(cyc, vec![BTreeSet::new(), BTreeSet::new()]).is_err());
    }

    #[test]
    fn forcing_is_monotone_across_enumerated_models() {
        // Spot-check the invariant the enumerator relies on, over every
        // 2-world model of one atom.
        let formula = f("~(A & ~A) | A");
        for n in 1..=2usize {
            for leq in posets(n) {
                for mask in enumerate_upsets(leq) {
                    let forcing: Vec<BTreeSet<String>> = (0..n)
                        .map(|w| {
                            if mask & (1 << w) != 0 {
                                ["A".to_string()].into_iter().collect()
                            } else {
                                BTreeSet::new()
                            }
                        })
                        .collect();
                    let model = KripkeModel::new(leq.clone(), forcing).unwrap();
                    for u in 0..n {
                        for v in 0..n {
                            if model.leq(u, v) && forces(&model, u, &formula) {
                                assert!(forces(&model, v, &formula));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn poset_counts_match_the_literature() {
        assert_eq!(posets(1).len(), 1);
        assert_eq!(posets(2).len(), 3);
        assert_eq!(posets(3).len(), 19);
        assert_eq!(posets(4).len(), 219);
    }

    #[test]
    fn glivenko_holds_on_a_spot_sample() {
        for s in [
            "A | ~A",
            "~~A -> A",
            "A -> B",
            "((A -> B) -> A) -> A",
            "(A -> ~~A) & (~~A -> A)",
            "_|_",
        ] {
            let formula = f(s);
            let classical = is_tautology(&formula).unwrap().holds();
            let doubled = prove_intuitionistic(&Formula::neg(Formula::neg(formula))).is_provable();
            assert_eq!(classical, doubled, "Glivenko disagreement on {s}");
        }
    }
}
