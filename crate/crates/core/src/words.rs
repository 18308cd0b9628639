//! Words over a ranked alphabet `[n] = {1, ..., n}` and the word-level
//! invariants (content, support, σ-order, scattered subwords) that the
//! monoid modules are built on.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter of the alphabet. Valid symbols are `1..=n` for the rank `n` in use.
pub type Symbol = u32;

/// A finite word. Symbols are 1-based; the empty word is `Word::empty()`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }

    /// Fails with the first symbol not in `[1, rank]`.
    pub fn check_rank(&self, rank: u32) -> Result<()> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        match self.0.iter().find(|&&s| s == 0 || s > rank) {
            Some(&symbol) => Err(Error::SymbolOutOfRange { symbol, rank }),
            None => Ok(()),
        }
    }

    /// Largest symbol occurring, or 0 for the empty word.
    pub fn max_symbol(&self) -> Symbol {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.0);
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// `self` repeated `times` times.
    pub fn pow(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }
}

impl From<&[Symbol]> for Word {
    fn from(symbols: &[Symbol]) -> Self {
        Word(symbols.to_vec())
    }
}

impl<const N: usize> From<[Symbol; N]> for Word {
    fn from(symbols: [Symbol; N]) -> Self {
        Word(symbols.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Text syntax: bare digits `1`-`9` (`"3121"`), or comma-separated integers
/// (`"3,10,2"`). The empty string and `"ε"` both denote the empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let text = input.trim();
        let fail = |reason: String| Error::ParseWord {
            input: input.to_string(),
            reason,
        };
        if text.is_empty() || text == "ε" {
            return Ok(Word::empty());
        }
        let symbols: Vec<Symbol> = if text.contains(',') {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<Symbol>()
                        .map_err(|e| fail(format!("{part:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| fail(format!("unexpected character {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        if symbols.contains(&0) {
            return Err(fail("symbols are 1-based".to_string()));
        }
        Ok(Word(symbols))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        if self.0.iter().all(|&s| (1..=9).contains(&s)) {
            for s in &self.0 {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Occurrence counts of a word. Symbols with count zero are not stored, so
/// two contents compare equal exactly when every count agrees.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct Content(BTreeMap<Symbol, usize>);

impl Content {
    pub fn count(&self, symbol: Symbol) -> usize {
        self.0.get(&symbol).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn support(&self) -> BTreeSet<Symbol> {
        self.0.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, usize)> + '_ {
        self.0.iter().map(|(&s, &c)| (s, c))
    }
}

impl<const N: usize> From<[(Symbol, usize); N]> for Content {
    fn from(pairs: [(Symbol, usize); N]) -> Self {
        Content(pairs.into_iter().filter(|&(_, c)| c > 0).collect())
    }
}

pub fn content(w: &[Symbol]) -> Content {
    let mut counts = BTreeMap::new();
    for &s in w {
        *counts.entry(s).or_insert(0) += 1;
    }
    Content(counts)
}

pub fn support(w: &[Symbol]) -> BTreeSet<Symbol> {
    w.iter().copied().collect()
}

/// The σ-order of a word: reading right to left, the k-th distinct symbol
/// met receives rank k.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct SigmaOrder(BTreeMap<Symbol, usize>);

impl SigmaOrder {
    pub fn rank_of(&self, symbol: Symbol) -> Option<usize> {
        self.0.get(&symbol).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Support symbols listed by increasing rank.
    pub fn by_rank(&self) -> Vec<Symbol> {
        let mut pairs: Vec<(usize, Symbol)> = self.0.iter().map(|(&s, &r)| (r, s)).collect();
        pairs.sort_unstable();
        pairs.into_iter().map(|(_, s)| s).collect()
    }
}

impl<const N: usize> From<[(Symbol, usize); N]> for SigmaOrder {
    fn from(pairs: [(Symbol, usize); N]) -> Self {
        SigmaOrder(pairs.into_iter().collect())
    }
}

pub fn sigma(w: &[Symbol]) -> SigmaOrder {
    let mut ranks = BTreeMap::new();
    for &s in w.iter().rev() {
        let next = ranks.len() + 1;
        ranks.entry(s).or_insert(next);
    }
    SigmaOrder(ranks)
}

/// All scattered subwords (subsequences) of `w` with length in `1..=k`.
pub fn scattered_subwords(w: &[Symbol], k: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    if k == 0 || w.is_empty() {
        return out;
    }
    if k <= 2 {
        // Pairs (a, b) with b occurring somewhere after an a.
        let mut seen_after: BTreeSet<Symbol> = BTreeSet::new();
        for &a in w.iter().rev() {
            out.insert(Word(vec![a]));
            if k == 2 {
                for &b in &seen_after {
                    out.insert(Word(vec![a, b]));
                }
            }
            seen_after.insert(a);
        }
        return out;
    }
    // Grow subwords one position at a time, keeping everything of length < k
    // available for extension.
    let mut frontier: BTreeSet<Vec<Symbol>> = BTreeSet::new();
    for &s in w {
        let mut grown: Vec<Vec<Symbol>> = Vec::new();
        for prefix in &frontier {
            if prefix.len() < k {
                let mut next = prefix.clone();
                next.push(s);
                grown.push(next);
            }
        }
        frontier.insert(vec![s]);
        frontier.extend(grown);
    }
    out.extend(frontier.into_iter().map(Word));
    out
}

/// Whether `p` occurs in `w` as a (not necessarily contiguous) subsequence.
pub fn contains_scattered(w: &[Symbol], p: &[Symbol]) -> bool {
    let mut rest = p.iter().peekable();
    for s in w {
        if rest.peek() == Some(&s) {
            rest.next();
        }
    }
    rest.peek().is_none()
}

pub fn reverse(w: &[Symbol]) -> Word {
    w.iter().rev().copied().collect()
}

/// All words over `[n]` of length `0..=max_len`, shorter words first and
/// lexicographic within each length.
pub fn enumerate_words(n: u32, max_len: usize) -> WordEnumerator {
    WordEnumerator {
        rank: n,
        max_len,
        current: Some(Vec::new()),
    }
}

/// All words over `[n]` of exactly length `len`, in lexicographic order.
pub fn words_of_length(n: u32, len: usize) -> impl Iterator<Item = Word> {
    enumerate_words(n, len).filter(move |w| w.len() == len)
}

#[derive(Clone, Debug)]
pub struct WordEnumerator {
    rank: u32,
    max_len: usize,
    current: Option<Vec<Symbol>>,
}

impl Iterator for WordEnumerator {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let word = self.current.take()?;
        if self.rank == 0 {
            // Only the empty word exists over an empty alphabet.
            return Some(Word(word));
        }
        let mut next = word.clone();
        // Odometer increment; overflow moves to the next length.
        let mut pos = next.len();
        loop {
            if pos == 0 {
                let len = next.len() + 1;
                if len <= self.max_len {
                    self.current = Some(vec![1; len]);
                }
                break;
            }
            pos -= 1;
            if next[pos] < self.rank {
                next[pos] += 1;
                for s in &mut next[pos + 1..] {
                    *s = 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(Word(word))
    }
}
