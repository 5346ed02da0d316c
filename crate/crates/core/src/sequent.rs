//! Sequents over formula multisets.
//!
//! Both sides of `Γ => Δ` are multisets: order never matters, multiplicity
//! always does. An empty succedent and a succedent holding exactly `_|_` are
//! different sequents; [`normalize_succedent`] converts between the two forms
//! and nothing else identifies them.

use std::fmt;

use thiserror::Error;

use crate::syntax::{parse_formula, render_formula, render_formula_unicode, Formula, ParseError};

/// A multiset of formulas, kept sorted so that equality, hashing, and
/// rendering are canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multiset(Vec<Formula>);

impl Multiset {
    pub fn new() -> Self {
        Multiset(Vec::new())
    }

    pub fn singleton(f: Formula) -> Self {
        Multiset(vec![f])
    }

    pub fn insert(&mut self, f: Formula) {
        let at = self.0.partition_point(|g| *g <= f);
        self.0.insert(at, f);
    }

    /// Remove one occurrence; false when absent.
    pub fn remove_one(&mut self, f: &Formula) -> bool {
        match self.0.iter().position(|g| g == f) {
            Some(i) => {
                self.0.remove(i);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.0.iter().any(|g| g == f)
    }

    pub fn count(&self, f: &Formula) -> usize {
        self.0.iter().filter(|g| *g == f).count()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Formula> {
        self.0.iter()
    }

    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut out = self.clone();
        for f in other.iter() {
            out.insert(f.clone());
        }
        out
    }

    /// Copy with one occurrence of `f` removed; None when absent.
    pub fn minus_one(&self, f: &Formula) -> Option<Multiset> {
        let mut out = self.clone();
        if out.remove_one(f) {
            Some(out)
        } else {
            None
        }
    }

    /// Copy with every occurrence of `f` removed.
    pub fn minus_all(&self, f: &Formula) -> Multiset {
        Multiset(self.0.iter().filter(|g| *g != f).cloned().collect())
    }

    pub fn plus(&self, f: Formula) -> Multiset {
        let mut out = self.clone();
        out.insert(f);
        out
    }

    /// Distinct elements in canonical order.
    pub fn support(&self) -> Vec<&Formula> {
        let mut out: Vec<&Formula> = Vec::new();
        for f in self.0.iter() {
            if out.last() != Some(&f) {
                out.push(f);
            }
        }
        out
    }

    /// True when every element of `self` occurs at least once in `other`
    /// (set-level inclusion, ignoring multiplicities).
    pub fn support_subset_of(&self, other: &Multiset) -> bool {
        self.support().iter().all(|f| other.contains(f))
    }
}

impl FromIterator<Formula> for Multiset {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        let mut v: Vec<Formula> = iter.into_iter().collect();
        v.sort();
        Multiset(v)
    }
}

/// A two-sided sequent `antecedent => succedent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub antecedent: Multiset,
    pub succedent: Multiset,
}

impl Sequent {
    pub fn new(antecedent: Multiset, succedent: Multiset) -> Self {
        Sequent { antecedent, succedent }
    }

    pub fn from_parts(
        antecedent: impl IntoIterator<Item = Formula>,
        succedent: impl IntoIterator<Item = Formula>,
    ) -> Self {
        Sequent {
            antecedent: antecedent.into_iter().collect(),
            succedent: succedent.into_iter().collect(),
        }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sequent(self))
    }
}

fn render_side(side: &Multiset, render: fn(&Formula) -> String) -> String {
    side.iter().map(render).collect::<Vec<_>>().join(", ")
}

/// Canonical ASCII rendering, e.g. `A, ~A =>` or `=> A, ~A`.
pub fn render_sequent(s: &Sequent) -> String {
    let ante = render_side(&s.antecedent, render_formula);
    let succ = render_side(&s.succedent, render_formula);
    match (ante.is_empty(), succ.is_empty()) {
        (true, true) => "=>".to_string(),
        (false, true) => format!("{ante} =>"),
        (true, false) => format!("=> {succ}"),
        (false, false) => format!("{ante} => {succ}"),
    }
}

/// Unicode rendering with `⇒`.
pub fn render_sequent_unicode(s: &Sequent) -> String {
    let ante = render_side(&s.antecedent, render_formula_unicode);
    let succ = render_side(&s.succedent, render_formula_unicode);
    match (ante.is_empty(), succ.is_empty()) {
        (true, true) => "⇒".to_string(),
        (false, true) => format!("{ante} ⇒"),
        (true, false) => format!("⇒ {succ}"),
        (false, false) => format!("{ante} ⇒ {succ}"),
    }
}

/// Parse `Γ => Δ`. The text must contain exactly one turnstile (`=>` or `⇒`);
/// each side is a comma-separated, possibly empty formula list. Error
/// positions address the whole input.
pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let chars: Vec<char> = text.chars().collect();

    // Locate turnstiles. '=' cannot occur inside a formula, so every match
    // is a real turnstile.
    let mut turnstiles = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == '⇒' {
            turnstiles.push((i, i + 1));
            i += 1;
        } else if chars[i] == '=' && chars.get(i + 1) == Some(&'>') {
            turnstiles.push((i, i + 2));
            i += 2;
        } else {
            i += 1;
        }
    }
    let (t_start, t_end) = match turnstiles.len() {
        0 => {
            return Err(ParseError {
                position: chars.len() + 1,
                message: "expected '=>' between antecedent and succedent".to_string(),
            })
        }
        1 => turnstiles[0],
        _ => {
            return Err(ParseError {
                position: turnstiles[1].0 + 1,
                message: "duplicate '=>'".to_string(),
            })
        }
    };

    let antecedent = parse_side(&chars[..t_start], 0)?;
    let succedent = parse_side(&chars[t_end..], t_end)?;
    Ok(Sequent::new(antecedent, succedent))
}

/// `offset` is the 0-based char index of `side` within the original text.
fn parse_side(side: &[char], offset: usize) -> Result<Multiset, ParseError> {
    if side.iter().all(|c| c.is_whitespace()) {
        return Ok(Multiset::new());
    }
    let mut out = Multiset::new();
    let mut seg_start = 0;
    let mut idx = 0;
    loop {
        let at_end = idx == side.len();
        if at_end || side[idx] == ',' {
            let segment: String = side[seg_start..idx].iter().collect();
            let f = parse_formula(&segment).map_err(|e| ParseError {
                position: offset + seg_start + e.position,
                message: e.message,
            })?;
            out.insert(f);
            if at_end {
                break;
            }
            seg_start = idx + 1;
        }
        idx += 1;
    }
    Ok(out)
}

/// Direction for [`normalize_succedent`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuccedentDirection {
    /// Empty succedent becomes `_|_`.
    ToBottom,
    /// Succedent holding exactly `_|_` becomes empty.
    ToEmpty,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SuccedentError {
    #[error("to-bottom requires an empty succedent, found `{0}`")]
    NotEmpty(String),
    #[error("to-empty requires the succedent to be exactly _|_, found `{0}`")]
    NotBottom(String),
}

/// Convert between the empty succedent and the `_|_` succedent, the only
/// sanctioned identification of the two forms.
pub fn normalize_succedent(
    s: &Sequent,
    direction: SuccedentDirection,
) -> Result<Sequent, SuccedentError> {
    match direction {
        SuccedentDirection::ToBottom => {
            if !s.succedent.is_empty() {
                return Err(SuccedentError::NotEmpty(render_sequent(s)));
            }
            Ok(Sequent::new(
                s.antecedent.clone(),
                Multiset::singleton(Formula::Bottom),
            ))
        }
        SuccedentDirection::ToEmpty => {
            if s.succedent.len() != 1 || !s.succedent.contains(&Formula::Bottom) {
                return Err(SuccedentError::NotBottom(render_sequent(s)));
            }
            Ok(Sequent::new(s.antecedent.clone(), Multiset::new()))
        }
    }
}
