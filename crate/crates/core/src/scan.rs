//! Comparing two equivalence relations on a finite set of words.

use std::collections::HashMap;
use std::hash::Hash;

use crate::words::Word;

/// Two words on which the kernels of `f` and `g` disagree: equal under one
/// key and different under the other.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Conflict {
    pub first: Word,
    pub second: Word,
    /// True when `f` identifies the pair and `g` separates it.
    pub identified_by_first: bool,
}

/// Finds a pair of words with `f(u) = f(v)` but `g(u) != g(v)`, or the
/// converse. Checking that `f` and `g` induce the same partition this way is
/// linear in the number of words rather than quadratic.
pub fn partition_conflict<A, B, I, F, G>(words: I, f: F, g: G) -> Option<Conflict>
where
    A: Hash + Eq + Clone,
    B: Hash + Eq + Clone,
    I: IntoIterator<Item = Word>,
    F: Fn(&Word) -> A,
    G: Fn(&Word) -> B,
{
    let mut by_f: HashMap<A, (B, Word)> = HashMap::new();
    let mut by_g: HashMap<B, (A, Word)> = HashMap::new();
    for w in words {
        let a = f(&w);
        let b = g(&w);
        if let Some((seen_b, seen_w)) = by_f.get(&a) {
            if *seen_b != b {
                return Some(Conflict {
                    first: seen_w.clone(),
                    second: w,
                    identified_by_first: true,
                });
            }
        } else {
            by_f.insert(a.clone(), (b.clone(), w.clone()));
        }
        if let Some((seen_a, seen_w)) = by_g.get(&b) {
            if *seen_a != a {
                return Some(Conflict {
                    first: seen_w.clone(),
                    second: w,
                    identified_by_first: false,
                });
            }
        } else {
            by_g.insert(b, (a, w));
        }
    }
    None
}

/// Number of classes of the kernel of `f`.
pub fn class_count<A, I, F>(words: I, f: F) -> usize
where
    A: Hash + Eq,
    I: IntoIterator<Item = Word>,
    F: Fn(&Word) -> A,
{
    words
        .into_iter()
        .map(|w| f(&w))
        .collect::<std::collections::HashSet<_>>()
        .len()
}
