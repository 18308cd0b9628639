//! Defining relations of the hypoplactic, stalactic, sylvester and
//! #-sylvester monoids as length-preserving rewriting, with breadth-first
//! computation of congruence classes.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::family::MonoidFamily;
use crate::scan::partition_conflict;
use crate::words::{words_of_length, Symbol, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RelationFamily {
    Hypo,
    Stal,
    Sylv,
    SylvSharp,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 4] = [
        RelationFamily::Hypo,
        RelationFamily::Stal,
        RelationFamily::Sylv,
        RelationFamily::SylvSharp,
    ];

    pub fn monoid(self) -> MonoidFamily {
        match self {
            RelationFamily::Hypo => MonoidFamily::Hypo,
            RelationFamily::Stal => MonoidFamily::Stal,
            RelationFamily::Sylv => MonoidFamily::Sylv,
            RelationFamily::SylvSharp => MonoidFamily::SylvSharp,
        }
    }
}

impl TryFrom<MonoidFamily> for RelationFamily {
    type Error = Error;

    fn try_from(family: MonoidFamily) -> Result<Self> {
        RelationFamily::ALL
            .into_iter()
            .find(|r| r.monoid() == family)
            .ok_or_else(|| Error::UnknownFamily(format!("{family} has no presentation here")))
    }
}

impl FromStr for RelationFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelationFamily::try_from(s.parse::<MonoidFamily>()?)
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.monoid().name())
    }
}

fn swapped(w: &[Symbol], pairs: &[usize]) -> Word {
    let mut out = w.to_vec();
    for &i in pairs {
        out.swap(i, i + 1);
    }
    Word::new(out)
}

fn between(lo_incl: bool, x: Symbol, y: Symbol, b: Symbol, hi_incl: bool) -> bool {
    let (lo, hi) = (x.min(y), x.max(y));
    (if lo_incl { lo <= b } else { lo < b }) && (if hi_incl { b <= hi } else { b < hi })
}

/// Words one relation application away from `w`, in either direction.
pub fn neighbors(family: RelationFamily, w: &[Symbol]) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    let len = w.len();
    match family {
        RelationFamily::Hypo => {
            for i in 0..len.saturating_sub(2) {
                let (x, y, z) = (w[i], w[i + 1], w[i + 2]);
                // acb ↔ cab with a ≤ b < c
                if between(true, x, y, z, false) {
                    out.insert(swapped(w, &[i]));
                }
                // bac ↔ bca with a < b ≤ c
                if between(false, y, z, x, true) {
                    out.insert(swapped(w, &[i + 1]));
                }
            }
            for i in 0..len.saturating_sub(3) {
                let (x0, x1, x2, x3) = (w[i], w[i + 1], w[i + 2], w[i + 3]);
                // cadb ↔ acbd with a ≤ b < c ≤ d
                if (x1 <= x3 && x3 < x0 && x0 <= x2) || (x0 <= x2 && x2 < x1 && x1 <= x3) {
                    out.insert(swapped(w, &[i, i + 2]));
                }
                // bdac ↔ dbca with a < b ≤ c < d
                if (x2 < x0 && x0 <= x3 && x3 < x1) || (x3 < x1 && x1 <= x2 && x2 < x0) {
                    out.insert(swapped(w, &[i, i + 2]));
                }
            }
        }
        RelationFamily::Stal => {
            // bavb ↔ abvb: swap two adjacent letters when either recurs later.
            for i in 0..len.saturating_sub(1) {
                let (x, y) = (w[i], w[i + 1]);
                if x != y && w[i + 2..].iter().any(|&b| b == x || b == y) {
                    out.insert(swapped(w, &[i]));
                }
            }
        }
        RelationFamily::Sylv => {
            // acvb ↔ cavb with a ≤ b < c
            for i in 0..len.saturating_sub(1) {
                let (x, y) = (w[i], w[i + 1]);
                if x != y && w[i + 2..].iter().any(|&b| between(true, x, y, b, false)) {
                    out.insert(swapped(w, &[i]));
                }
            }
        }
        RelationFamily::SylvSharp => {
            // bvac ↔ bvca with a < b ≤ c
            for i in 0..len.saturating_sub(1) {
                let (x, y) = (w[i], w[i + 1]);
                if x != y && w[..i].iter().any(|&b| between(false, x, y, b, true)) {
                    out.insert(swapped(w, &[i]));
                }
            }
        }
    }
    out.remove(&Word::from(w));
    out
}

/// The congruence class of `w`: everything reachable by relation steps.
/// Relations preserve length and content, so the class is finite.
pub fn bfs_class(family: RelationFamily, w: &[Symbol]) -> BTreeSet<Word> {
    let start = Word::from(w);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for v in neighbors(family, &u) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PresentationReport {
    pub family: RelationFamily,
    pub rank: u32,
    pub max_len: usize,
    pub words: usize,
    pub classes: usize,
    /// Two words on which the relations and the canonical forms disagree.
    pub discrepancy: Option<(Word, Word)>,
}

impl PresentationReport {
    pub fn matches(&self) -> bool {
        self.discrepancy.is_none()
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "monoid": self.family.monoid().name(),
            "rank": self.rank,
            "len": self.max_len,
            "words": self.words,
            "classes": self.classes,
            "match": self.matches(),
            "discrepancy": self.discrepancy.as_ref().map(|(u, v)| [u.to_string(), v.to_string()]),
        })
    }
}

/// Compares the congruence generated by the relations with canonical-form
/// equality on all words over `[n]` of length at most `max_len`.
pub fn presentation_matches_canonical(
    family: RelationFamily,
    n: u32,
    max_len: usize,
) -> Result<PresentationReport> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut words = 0;
    let mut classes = 0;
    for len in 0..=max_len {
        let mut class_of: HashMap<Word, usize> = HashMap::new();
        let layer: Vec<Word> = words_of_length(n, len).collect();
        words += layer.len();
        for w in &layer {
            if !class_of.contains_key(w) {
                for member in bfs_class(family, w) {
                    class_of.insert(member, classes);
                }
                classes += 1;
            }
        }
        let monoid = family.monoid();
        if let Some(c) = partition_conflict(layer, |w| class_of[w], |w| monoid.canonical(w)) {
            return Ok(PresentationReport {
                family,
                rank: n,
                max_len,
                words,
                classes,
                discrepancy: Some((c.first, c.second)),
            });
        }
    }
    Ok(PresentationReport {
        family,
        rank: n,
        max_len,
        words,
        classes,
        discrepancy: None,
    })
}
