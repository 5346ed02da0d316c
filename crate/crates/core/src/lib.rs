//! Proof workbench for propositional logic, centered on double negation.
//!
//! The crate provides two proof kernels (a multiset sequent calculus and a
//! labelled natural deduction system), proof transformations (detour
//! normalization and cut elimination), and two independent semantic oracles
//! (classical truth tables and intuitionistic Kripke models with a decision
//! procedure), so each layer can be checked against the others.

pub mod corpus;
pub mod cutelim;
pub mod nd;
pub mod normalize;
pub mod semantics;
pub mod sequent;
pub mod sk;
pub mod syntax;

pub use corpus::{
    enumerate_formulas, random_formula, random_nd_proof, random_sk_proof, NdProofConfig,
    SkProofConfig,
};
pub use cutelim::{
    cut_audit, eliminate_cuts, eliminate_cuts_with_limit, sequent_subformula_audit, CutAudit,
    CutDescriptor, CutElimError, CutMeasure, DEFAULT_CUT_STEP_LIMIT,
};
pub use nd::{
    check_nd_proof, expand_macros, nd_catalog, open_assumptions, Mode, NdCheckReport, NdProof,
    NdRule, NdViolation,
};
pub use normalize::{
    find_redexes, is_normal, normalize, normalize_with_limit, reduce_step, subformula_audit,
    AuditReport, Normalization, NormalizeError, Redex, RedexKind, DEFAULT_STEP_LIMIT,
};
pub use semantics::{
    evaluate, forces, is_tautology, kripke_search, prove_intuitionistic, sequent_valid,
    KripkeModel, KripkeSearch, Provability, SemanticsError, TautologyVerdict, Valuation,
};
pub use sequent::{parse_sequent, render_sequent, Multiset, Sequent};
pub use sk::{
    admissible_transform, check_sk_proof, derivation_catalog, dne_proof, dni_proof, SkCheckReport,
    SkProof, SkRule, TransformKind,
};
pub use syntax::{parse_formula, render_formula, subformulas, Formula, ParseError};
