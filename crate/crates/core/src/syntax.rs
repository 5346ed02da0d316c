//! Propositional formulas: AST, parser, canonical printer, subformula closure.
//!
//! Connectives in decreasing binding strength: `~`, `&`, `|`, `->`.
//! `->` associates right, `&` and `|` associate left. Bottom is spelled `_|_`
//! in ASCII. The parser additionally accepts the Unicode spellings
//! `¬ ∧ ∨ → ⊥`; output is canonical ASCII unless the Unicode renderer is
//! asked for explicitly.

use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// A propositional formula. Negation is a primitive connective, not sugar
/// for `A -> _|_`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Bottom,
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn bottom() -> Self {
        Formula::Bottom
    }

    pub fn neg(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Self {
        Formula::Imp(Box::new(l), Box::new(r))
    }

    /// Connective count; atoms and bottom weigh zero.
    pub fn degree(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bottom => 0,
            Formula::Neg(f) => 1 + f.degree(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                1 + l.degree() + r.degree()
            }
        }
    }

    /// Atom names occurring in the formula, deduplicated and sorted.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut acc = BTreeSet::new();
        self.collect_atoms(&mut acc);
        acc
    }

    fn collect_atoms(&self, acc: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(name) => {
                acc.insert(name.clone());
            }
            Formula::Bottom => {}
            Formula::Neg(f) => f.collect_atoms(acc),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                l.collect_atoms(acc);
                r.collect_atoms(acc);
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_formula(self))
    }
}

/// The reflexive-transitive subformula closure.
pub fn subformulas(f: &Formula) -> BTreeSet<Formula> {
    let mut acc = BTreeSet::new();
    collect_subformulas(f, &mut acc);
    acc
}

fn collect_subformulas(f: &Formula, acc: &mut BTreeSet<Formula>) {
    acc.insert(f.clone());
    match f {
        Formula::Atom(_) | Formula::Bottom => {}
        Formula::Neg(g) => collect_subformulas(g, acc),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
            collect_subformulas(l, acc);
            collect_subformulas(r, acc);
        }
    }
}

// Rendering. Each connective gets a binding strength; a child is
// parenthesized when its strength is below what its position requires.
const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_NEG: u8 = 4;
const PREC_ATOM: u8 = 5;

fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Atom(_) | Formula::Bottom => PREC_ATOM,
        Formula::Neg(_) => PREC_NEG,
        Formula::And(..) => PREC_AND,
        Formula::Or(..) => PREC_OR,
        Formula::Imp(..) => PREC_IMP,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Symbols {
    neg: &'static str,
    and: &'static str,
    or: &'static str,
    imp: &'static str,
    bottom: &'static str,
}

const ASCII: Symbols = Symbols {
    neg: "~",
    and: " & ",
    or: " | ",
    imp: " -> ",
    bottom: "_|_",
};

const UNICODE: Symbols = Symbols {
    neg: "¬",
    and: " ∧ ",
    or: " ∨ ",
    imp: " → ",
    bottom: "⊥",
};

/// Canonical ASCII rendering with minimal parentheses; `parse_formula`
/// inverts it.
pub fn render_formula(f: &Formula) -> String {
    let mut out = String::new();
    render(f, PREC_IMP, ASCII, &mut out);
    out
}

/// Same structure as [`render_formula`] but with `¬ ∧ ∨ → ⊥`.
pub fn render_formula_unicode(f: &Formula) -> String {
    let mut out = String::new();
    render(f, PREC_IMP, UNICODE, &mut out);
    out
}

fn render(f: &Formula, min: u8, sym: Symbols, out: &mut String) {
    let wrap = prec(f) < min;
    if wrap {
        out.push('(');
    }
    match f {
        Formula::Atom(name) => out.push_str(name),
        Formula::Bottom => out.push_str(sym.bottom),
        Formula::Neg(g) => {
            out.push_str(sym.neg);
            render(g, PREC_NEG, sym, out);
        }
        // Left-associative: the left child may sit at the same level, the
        // right child must bind strictly tighter.
        Formula::And(l, r) => {
            render(l, PREC_AND, sym, out);
            out.push_str(sym.and);
            render(r, PREC_AND + 1, sym, out);
        }
        Formula::Or(l, r) => {
            render(l, PREC_OR, sym, out);
            out.push_str(sym.or);
            render(r, PREC_OR + 1, sym, out);
        }
        // Right-associative, mirrored.
        Formula::Imp(l, r) => {
            render(l, PREC_IMP + 1, sym, out);
            out.push_str(sym.imp);
            render(r, PREC_IMP, sym, out);
        }
    }
    if wrap {
        out.push(')');
    }
}

/// Formula syntax error. Positions are 1-based character (not byte) offsets
/// into the input text.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn position(&self) -> usize {
        self.position
    }

    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Bottom,
    Neg,
    And,
    Or,
    Imp,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Atom(name) => format!("atom '{name}'"),
            Tok::Bottom => "'_|_'".to_string(),
            Tok::Neg => "'~'".to_string(),
            Tok::And => "'&'".to_string(),
            Tok::Or => "'|'".to_string(),
            Tok::Imp => "'->'".to_string(),
            Tok::LParen => "'('".to_string(),
            Tok::RParen => "')'".to_string(),
        }
    }
}

fn lex(text: &str) -> Result<(Vec<(usize, Tok)>, usize), ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let pos = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '~' | '¬' => {
                toks.push((pos, Tok::Neg));
                i += 1;
            }
            '&' | '∧' => {
                toks.push((pos, Tok::And));
                i += 1;
            }
            '|' | '∨' => {
                toks.push((pos, Tok::Or));
                i += 1;
            }
            '→' => {
                toks.push((pos, Tok::Imp));
                i += 1;
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    toks.push((pos, Tok::Imp));
                    i += 2;
                } else {
                    return Err(ParseError::new(pos, "expected '->'"));
                }
            }
            '⊥' => {
                toks.push((pos, Tok::Bottom));
                i += 1;
            }
            '_' => {
                if chars.get(i + 1) == Some(&'|') && chars.get(i + 2) == Some(&'_') {
                    toks.push((pos, Tok::Bottom));
                    i += 3;
                } else {
                    return Err(ParseError::new(pos, "expected '_|_'"));
                }
            }
            '(' => {
                toks.push((pos, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((pos, Tok::RParen));
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                i += 1;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                toks.push((pos, Tok::Atom(name)));
            }
            other => {
                return Err(ParseError::new(pos, format!("unexpected character '{other}'")));
            }
        }
    }
    Ok((toks, chars.len() + 1))
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    cursor: usize,
    /// 1-based position one past the final input character.
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.cursor)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.cursor).cloned();
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn eof_error(&self, expected: &str) -> ParseError {
        ParseError::new(self.end, format!("expected {expected}, found end of input"))
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if matches!(self.peek(), Some((_, Tok::Imp))) {
            self.bump();
            let rhs = self.imp()?;
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while matches!(self.peek(), Some((_, Tok::Or))) {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while matches!(self.peek(), Some((_, Tok::And))) {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if matches!(self.peek(), Some((_, Tok::Neg))) {
            self.bump();
            Ok(Formula::neg(self.unary()?))
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.bump() {
            Some((_, Tok::Atom(name))) => Ok(Formula::Atom(name)),
            Some((_, Tok::Bottom)) => Ok(Formula::Bottom),
            Some((lparen_pos, Tok::LParen)) => {
                // Blame an unterminated group on its '(' rather than on the
                // end of input.
                let inner = self.imp().map_err(|e| {
                    if e.position >= self.end {
                        ParseError::new(lparen_pos, "unclosed '('")
                    } else {
                        e
                    }
                })?;
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    Some((pos, tok)) => Err(ParseError::new(
                        pos,
                        format!("expected ')', found {}", tok.describe()),
                    )),
                    None => Err(ParseError::new(lparen_pos, "unclosed '('")),
                }
            }
            Some((pos, tok)) => Err(ParseError::new(
                pos,
                format!("expected a formula, found {}", tok.describe()),
            )),
            None => Err(self.eof_error("a formula")),
        }
    }
}

/// Parse a formula from text. Errors carry the 1-based character position
/// and say what was expected there.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let (toks, end) = lex(text)?;
    let mut parser = Parser { toks, cursor: 0, end };
    let f = parser.imp()?;
    match parser.bump() {
        None => Ok(f),
        Some((pos, tok)) => Err(ParseError::new(
            pos,
            format!("expected end of input, found {}", tok.describe()),
        )),
    }
}
