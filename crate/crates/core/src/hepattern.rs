//! He's sign patterns: a discrete series of `U(p,q)` is encoded by a
//! sequence of `+`/`-`, one of the subgroup by circled signs `⊕`/`⊖`.
//! Restriction is tested by interleaving the two sequences so that every
//! adjacent pair is one of
//!
//! ```text
//! (⊕,+) (+,⊕) (−,⊖) (⊖,−) (+,−) (−,+) (⊕,⊖) (⊖,⊕)
//! ```
//!
//! Text form: `+` and `-` for plain signs, `P` for `⊕` and `M` for `⊖`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Symbol {
    Plus,
    Minus,
    CircledPlus,
    CircledMinus,
}

impl Symbol {
    pub fn is_circled(self) -> bool {
        matches!(self, Symbol::CircledPlus | Symbol::CircledMinus)
    }

    pub fn to_char(self) -> char {
        match self {
            Symbol::Plus => '+',
            Symbol::Minus => '-',
            Symbol::CircledPlus => 'P',
            Symbol::CircledMinus => 'M',
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            '+' => Some(Symbol::Plus),
            '-' => Some(Symbol::Minus),
            'P' | '⊕' => Some(Symbol::CircledPlus),
            'M' | '⊖' => Some(Symbol::CircledMinus),
            _ => None,
        }
    }

    /// `⊕`/`⊖` for circled symbols.
    pub fn pretty(self) -> char {
        match self {
            Symbol::CircledPlus => '⊕',
            Symbol::CircledMinus => '⊖',
            s => s.to_char(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SignSeq {
    pub symbols: Vec<Symbol>,
}

impl SignSeq {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        SignSeq { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_plain(&self) -> bool {
        self.symbols.iter().all(|s| !s.is_circled())
    }

    pub fn is_circled(&self) -> bool {
        self.symbols.iter().all(|s| s.is_circled())
    }

    /// Keeps only plain or only circled symbols.
    pub fn restrict(&self, circled: bool) -> SignSeq {
        SignSeq::new(self.symbols.iter().copied().filter(|s| s.is_circled() == circled).collect())
    }

    pub fn pretty(&self) -> String {
        self.symbols.iter().map(|s| s.pretty()).collect()
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| Symbol::from_char(c).ok_or_else(|| Error::Parse(alloc::format!("unknown sign {c:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(SignSeq::new)
    }
}

pub fn allowed_adjacent(s1: Symbol, s2: Symbol) -> bool {
    use Symbol::*;
    matches!(
        (s1, s2),
        (CircledPlus, Plus)
            | (Plus, CircledPlus)
            | (Minus, CircledMinus)
            | (CircledMinus, Minus)
            | (Plus, Minus)
            | (Minus, Plus)
            | (CircledPlus, CircledMinus)
            | (CircledMinus, CircledPlus)
    )
}

/// Every order-preserving interleaving of `big` and `small` whose adjacent
/// pairs are all allowed. Depth-first, taking from `big` before `small`.
pub fn enumerate_alignments(big: &SignSeq, small: &SignSeq) -> Result<Vec<SignSeq>> {
    if !big.is_plain() {
        return Err(Error::Domain("the G-level sequence must use plain signs only"));
    }
    if !small.is_circled() {
        return Err(Error::Domain("the G'-level sequence must use circled signs only"));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(big.len() + small.len());
    descend(&big.symbols, &small.symbols, 0, 0, &mut current, &mut out);
    Ok(out)
}

fn descend(big: &[Symbol], small: &[Symbol], i: usize, j: usize, current: &mut Vec<Symbol>, out: &mut Vec<SignSeq>) {
    if i == big.len() && j == small.len() {
        out.push(SignSeq::new(current.clone()));
        return;
    }
    let fits = |s: Symbol, current: &Vec<Symbol>| current.last().is_none_or(|&prev| allowed_adjacent(prev, s));
    if i < big.len() && fits(big[i], current) {
        current.push(big[i]);
        descend(big, small, i + 1, j, current, out);
        current.pop();
    }
    if j < small.len() && fits(small[j], current) {
        current.push(small[j]);
        descend(big, small, i, j + 1, current, out);
        current.pop();
    }
}

/// `(+, -, …, -, +)` with `n` minus signs: `Π⁺` of `U(2,n)`.
pub fn u2n_big(n: usize) -> SignSeq {
    let mut v = vec![Symbol::Plus];
    v.extend(core::iter::repeat_n(Symbol::Minus, n));
    v.push(Symbol::Plus);
    SignSeq::new(v)
}

/// `⊕` followed by `n` signs `⊖`.
pub fn u1n_candidate_first(n: usize) -> SignSeq {
    let mut v = vec![Symbol::CircledPlus];
    v.extend(core::iter::repeat_n(Symbol::CircledMinus, n));
    SignSeq::new(v)
}

/// `n` signs `⊖` followed by `⊕`.
pub fn u1n_candidate_second(n: usize) -> SignSeq {
    let mut v: Vec<Symbol> = core::iter::repeat_n(Symbol::CircledMinus, n).collect();
    v.push(Symbol::CircledPlus);
    SignSeq::new(v)
}

/// `(+, ⊕, ⊖, -, ⊖, -, …, ⊖, -, +)`.
pub fn expected_first_alignment(n: usize) -> SignSeq {
    let mut v = vec![Symbol::Plus, Symbol::CircledPlus];
    for _ in 0..n {
        v.push(Symbol::CircledMinus);
        v.push(Symbol::Minus);
    }
    v.push(Symbol::Plus);
    SignSeq::new(v)
}

/// `(+, -, ⊖, -, …, ⊖, -, ⊖, ⊕, +)`.
pub fn expected_second_alignment(n: usize) -> SignSeq {
    let mut v = vec![Symbol::Plus];
    for _ in 0..n {
        v.push(Symbol::Minus);
        v.push(Symbol::CircledMinus);
    }
    v.push(Symbol::CircledPlus);
    v.push(Symbol::Plus);
    SignSeq::new(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CandidateReport {
    pub candidate: SignSeq,
    pub alignments: Vec<SignSeq>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct U2nReport {
    pub n: usize,
    pub big: SignSeq,
    pub candidates: Vec<CandidateReport>,
    pub total_alignments: usize,
    /// Always `false`: the final rejection through the interlacing of
    /// infinitesimal characters is left as a manual step.
    pub infinitesimal_character_test_implemented: bool,
}

/// Alignments of `Π⁺` of `U(2,n)` with the two `U(1,n)` candidates.
pub fn u2n_case_report(n: usize) -> Result<U2nReport> {
    if n < 4 {
        return Err(Error::Domain("u2n_case_report needs n >= 4"));
    }
    let big = u2n_big(n);
    let candidates = [u1n_candidate_first(n), u1n_candidate_second(n)]
        .into_iter()
        .map(|candidate| {
            let alignments = enumerate_alignments(&big, &candidate)?;
            Ok(CandidateReport { candidate, alignments })
        })
        .collect::<Result<Vec<_>>>()?;
    let total_alignments = candidates.iter().map(|c| c.alignments.len()).sum();
    Ok(U2nReport {
        n,
        big,
        candidates,
        total_alignments,
        infinitesimal_character_test_implemented: false,
    })
}
