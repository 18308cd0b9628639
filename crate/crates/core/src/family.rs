//! Uniform access to the seven monoid families: canonical forms, congruence
//! tests, representations and exhaustive scans.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hypoplactic::{hypo_rep, p_hypo, QuasiRibbonTableau};
use crate::rps::{p_rps, rps_rep, RpsTableau};
use crate::scan::{class_count, partition_conflict, Conflict};
use crate::semiring::{BlockDiag, Semiring};
use crate::stalactic::{p_stal, stal_rep, StalacticTableau};
use crate::sylvester::{
    baxt_rep, p_baxt, p_sylv, p_sylvsharp, sylv_rep, sylvsharp_rep, BaxterPair, Bst, BstSharp,
};
use crate::taiga::{p_taig, taig_rep, TaigaTree};
use crate::words::{enumerate_words, words_of_length, Symbol, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum MonoidFamily {
    Hypo,
    Stal,
    Taig,
    Sylv,
    SylvSharp,
    Baxt,
    Rps,
}

impl MonoidFamily {
    pub const ALL: [MonoidFamily; 7] = [
        MonoidFamily::Hypo,
        MonoidFamily::Stal,
        MonoidFamily::Taig,
        MonoidFamily::Sylv,
        MonoidFamily::SylvSharp,
        MonoidFamily::Baxt,
        MonoidFamily::Rps,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MonoidFamily::Hypo => "hypo",
            MonoidFamily::Stal => "stal",
            MonoidFamily::Taig => "taig",
            MonoidFamily::Sylv => "sylv",
            MonoidFamily::SylvSharp => "sylvsharp",
            MonoidFamily::Baxt => "baxt",
            MonoidFamily::Rps => "rps",
        }
    }

    pub fn canonical(self, w: &[Symbol]) -> CanonicalForm {
        match self {
            MonoidFamily::Hypo => CanonicalForm::QuasiRibbon(p_hypo(w)),
            MonoidFamily::Stal => CanonicalForm::Stalactic(p_stal(w)),
            MonoidFamily::Taig => CanonicalForm::Taiga(p_taig(w)),
            MonoidFamily::Sylv => CanonicalForm::BstRight(p_sylv(w)),
            MonoidFamily::SylvSharp => CanonicalForm::BstLeft(p_sylvsharp(w)),
            MonoidFamily::Baxt => CanonicalForm::Baxter(p_baxt(w)),
            MonoidFamily::Rps => CanonicalForm::Rps(p_rps(w)),
        }
    }

    pub fn equiv(self, u: &[Symbol], v: &[Symbol]) -> bool {
        self.canonical(u) == self.canonical(v)
    }

    pub fn representation<S: Semiring>(self, w: &Word, n: u32) -> Result<BlockDiag<S>> {
        match self {
            MonoidFamily::Hypo => hypo_rep(w, n),
            MonoidFamily::Stal => stal_rep(w, n),
            MonoidFamily::Taig => taig_rep(w, n),
            MonoidFamily::Sylv => sylv_rep(w, n),
            MonoidFamily::SylvSharp => sylvsharp_rep(w, n),
            MonoidFamily::Baxt => baxt_rep(w, n),
            MonoidFamily::Rps => rps_rep(w, n),
        }
    }

    /// Dimension of the representation at rank `n`.
    pub fn rep_dim(self, n: u32) -> usize {
        let n = n as usize;
        match self {
            MonoidFamily::Hypo
            | MonoidFamily::Stal
            | MonoidFamily::Sylv
            | MonoidFamily::SylvSharp => n * n,
            MonoidFamily::Taig => 3 * n * n - 2 * n,
            MonoidFamily::Baxt => 2 * n * n - n,
            MonoidFamily::Rps => (1usize << n) * n * (n + 1) / 2,
        }
    }
}

impl FromStr for MonoidFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MonoidFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl fmt::Display for MonoidFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The canonical form of a word in one of the families, tagged by `kind` in
/// JSON.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CanonicalForm {
    #[serde(rename = "quasi-ribbon")]
    QuasiRibbon(QuasiRibbonTableau),
    #[serde(rename = "stalactic")]
    Stalactic(StalacticTableau),
    #[serde(rename = "taiga")]
    Taiga(TaigaTree),
    #[serde(rename = "bst-right")]
    BstRight(Bst),
    #[serde(rename = "bst-left")]
    BstLeft(BstSharp),
    #[serde(rename = "baxter")]
    Baxter(BaxterPair),
    #[serde(rename = "rps")]
    Rps(RpsTableau),
}

impl CanonicalForm {
    pub fn family(&self) -> MonoidFamily {
        match self {
            CanonicalForm::QuasiRibbon(_) => MonoidFamily::Hypo,
            CanonicalForm::Stalactic(_) => MonoidFamily::Stal,
            CanonicalForm::Taiga(_) => MonoidFamily::Taig,
            CanonicalForm::BstRight(_) => MonoidFamily::Sylv,
            CanonicalForm::BstLeft(_) => MonoidFamily::SylvSharp,
            CanonicalForm::Baxter(_) => MonoidFamily::Baxt,
            CanonicalForm::Rps(_) => MonoidFamily::Rps,
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            CanonicalForm::QuasiRibbon(t) => t.is_empty(),
            CanonicalForm::Stalactic(t) => t.is_empty(),
            CanonicalForm::Taiga(t) => t.is_empty(),
            CanonicalForm::BstRight(t) => t.is_empty(),
            CanonicalForm::BstLeft(t) => t.is_empty(),
            CanonicalForm::Baxter(p) => p.left.is_empty() && p.right.is_empty(),
            CanonicalForm::Rps(t) => t.is_empty(),
        }
    }

    pub fn is_valid(&self) -> bool {
        match self {
            CanonicalForm::QuasiRibbon(t) => t.is_valid(),
            CanonicalForm::Stalactic(t) => t.is_valid(),
            CanonicalForm::Taiga(t) => t.is_valid(),
            CanonicalForm::BstRight(t) => t.is_valid(),
            CanonicalForm::BstLeft(t) => t.is_valid(),
            CanonicalForm::Baxter(p) => p.is_valid(),
            CanonicalForm::Rps(t) => t.is_valid(),
        }
    }

    /// A word whose canonical form is `self`. Baxter pairs have no single
    /// reading, so `None` is returned for them.
    pub fn reading(&self) -> Option<Word> {
        Some(match self {
            CanonicalForm::QuasiRibbon(t) => t.reading(),
            CanonicalForm::Stalactic(t) => t.reading(),
            CanonicalForm::Taiga(t) => t.reading(),
            CanonicalForm::BstRight(t) => t.reading(),
            CanonicalForm::BstLeft(t) => t.reading(),
            CanonicalForm::Baxter(_) => return None,
            CanonicalForm::Rps(t) => t.reading(),
        })
    }

    /// JSON with an extra `"empty"` flag.
    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("canonical forms serialize");
        v["empty"] = Value::Bool(self.is_empty());
        v
    }

    /// Parses and validates a form produced by [`CanonicalForm::to_json`].
    pub fn from_json(value: &Value) -> Result<Self> {
        let form: CanonicalForm =
            serde_json::from_value(value.clone()).map_err(|e| Error::InvalidForm(e.to_string()))?;
        if form.is_valid() {
            Ok(form)
        } else {
            Err(Error::InvalidForm(format!(
                "{value} violates the {} invariants",
                form.family()
            )))
        }
    }
}

/// Outcome of comparing canonical-form equality with representation
/// equality over every word up to a length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaithfulnessReport {
    pub family: MonoidFamily,
    pub rank: u32,
    pub max_len: usize,
    pub semiring: &'static str,
    pub words: usize,
    /// Unordered pairs of distinct words covered by the scan.
    pub pairs: u128,
    pub classes: usize,
    pub violation: Option<Conflict>,
}

impl FaithfulnessReport {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "monoid": self.family.name(),
            "rank": self.rank,
            "len": self.max_len,
            "semiring": self.semiring,
            "words": self.words,
            "pairs": self.pairs.to_string(),
            "classes": self.classes,
            "ok": self.ok(),
            "violation": self.violation.as_ref().map(|c| serde_json::json!({
                "first": c.first.to_string(),
                "second": c.second.to_string(),
                "equivalent": c.identified_by_first,
            })),
        })
    }
}

/// Checks `u ≡ v ⇔ rep(u) = rep(v)` for all words over `[n]` of length at
/// most `max_len`.
pub fn faithfulness_scan<S: Semiring>(
    family: MonoidFamily,
    n: u32,
    max_len: usize,
) -> Result<FaithfulnessReport> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    // Surface rank errors before scanning.
    family.representation::<S>(&Word::empty(), n)?;
    let words: Vec<Word> = enumerate_words(n, max_len).collect();
    let count = words.len();
    let violation = partition_conflict(
        words.iter().cloned(),
        |w| family.canonical(w),
        |w| {
            family
                .representation::<S>(w, n)
                .expect("rank checked above")
        },
    );
    Ok(FaithfulnessReport {
        family,
        rank: n,
        max_len,
        semiring: S::NAME,
        words: count,
        pairs: (count as u128) * (count as u128).saturating_sub(1) / 2,
        classes: class_count(words, |w| family.canonical(w)),
        violation,
    })
}

/// Number of congruence classes of words of each length `0..=max_len`.
pub fn class_counts(family: MonoidFamily, n: u32, max_len: usize) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    Ok((0..=max_len)
        .map(|len| class_count(words_of_length(n, len), |w| family.canonical(w)))
        .collect())
}
