//! The hypoplactic monoid: quasi-ribbon tableaux, the 5-element monoid `H`
//! and a faithful representation of dimension `n²`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::MatrixElement;
use crate::semiring::{c_rep, BlockDiag, Matrix, Semiring};
use crate::words::{Symbol, Word};

/// A quasi-ribbon tableau stored as its rows, top to bottom. Row `r + 1`
/// hangs below the last cell of row `r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct QuasiRibbonTableau {
    rows: Vec<Vec<Symbol>>,
}

impl QuasiRibbonTableau {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a tableau from rows, rejecting anything that breaks the shape
    /// or ordering constraints.
    pub fn from_rows(rows: Vec<Vec<Symbol>>) -> Result<Self> {
        let t = QuasiRibbonTableau { rows };
        if t.is_valid() {
            Ok(t)
        } else {
            Err(Error::InvalidForm(format!(
                "rows {:?} do not form a quasi-ribbon tableau",
                t.rows
            )))
        }
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Rows non-empty and weakly increasing, each row starting strictly above
    /// the end of the previous one. The last condition also keeps any symbol
    /// from appearing in two rows.
    pub fn is_valid(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row.first().is_some_and(|&s| s >= 1) && row.windows(2).all(|p| p[0] <= p[1]))
            && self.rows.windows(2).all(|p| p[0].last() < p[1].first())
    }

    /// A word whose tableau is `self`: rows from the bottom up, each left to
    /// right.
    pub fn reading(&self) -> Word {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn insert(&mut self, a: Symbol) {
        let Some(r) = self.rows.iter().rposition(|row| row[0] <= a) else {
            // No entry ≤ a: a goes above everything.
            self.rows.insert(0, vec![a]);
            return;
        };
        let row = &mut self.rows[r];
        // Last entry x ≤ a in row r; entries after it in the row are > a.
        let c = row.iter().rposition(|&s| s <= a).expect("row starts ≤ a");
        if c + 1 < row.len() {
            let tail = row.split_off(c + 1);
            row.push(a);
            self.rows.insert(r + 1, tail);
        } else {
            // x ends its row, so z (if any) already hangs below it.
            row.push(a);
        }
    }
}

pub fn qr_insert(mut t: QuasiRibbonTableau, a: Symbol) -> QuasiRibbonTableau {
    t.insert(a);
    t
}

/// Inserts the symbols of `w` left to right.
pub fn p_hypo(w: &[Symbol]) -> QuasiRibbonTableau {
    let mut t = QuasiRibbonTableau::new();
    for &a in w {
        t.insert(a);
    }
    t
}

pub fn hypo_equiv(u: &[Symbol], v: &[Symbol]) -> bool {
    u.len() == v.len() && p_hypo(u) == p_hypo(v)
}

fn check_increasing(i: Symbol, j: Symbol) -> Result<()> {
    if i < j {
        Ok(())
    } else {
        Err(Error::UnorderedPair { i, j })
    }
}

/// `w` contains `i` and `j`, nothing strictly between them, and no scattered
/// subword `j i`.
pub fn h_pred(w: &[Symbol], i: Symbol, j: Symbol) -> Result<bool> {
    check_increasing(i, j)?;
    let mut seen_i = false;
    let mut seen_j = false;
    for &s in w {
        if i < s && s < j {
            return Ok(false);
        }
        if s == i {
            if seen_j {
                return Ok(false);
            }
            seen_i = true;
        } else if s == j {
            seen_j = true;
        }
    }
    Ok(seen_i && seen_j)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum HElement {
    E,
    I,
    J,
    K,
    L,
}

impl MatrixElement for HElement {
    const ALL: &'static [Self] = &[
        HElement::E,
        HElement::I,
        HElement::J,
        HElement::K,
        HElement::L,
    ];

    fn matrix<S: Semiring>(self) -> Matrix<S> {
        match self {
            HElement::E => Matrix::identity(2),
            HElement::I => Matrix::from_pattern([[1, 1], [0, 0]]),
            HElement::J => Matrix::from_pattern([[0, 0], [0, 1]]),
            HElement::K => Matrix::zero(2),
            HElement::L => Matrix::from_pattern([[0, 1], [0, 0]]),
        }
    }

    fn name(self) -> &'static str {
        match self {
            HElement::E => "E",
            HElement::I => "I",
            HElement::J => "J",
            HElement::K => "K",
            HElement::L => "L",
        }
    }
}

impl HElement {
    /// The image of `w` under the `(i, j)` morphism, read off the word
    /// directly rather than by multiplying matrices.
    pub fn of_word(w: &[Symbol], i: Symbol, j: Symbol) -> Result<HElement> {
        check_increasing(i, j)?;
        if w.iter().any(|&s| i < s && s < j) {
            return Ok(HElement::K);
        }
        let has_i = w.contains(&i);
        let has_j = w.contains(&j);
        Ok(match (has_i, has_j) {
            (false, false) => HElement::E,
            (true, false) => HElement::I,
            (false, true) => HElement::J,
            (true, true) if h_pred(w, i, j)? => HElement::L,
            (true, true) => HElement::K,
        })
    }
}

/// The morphism `[n]* → H` with `i ↦ I`, `j ↦ J`, symbols strictly between
/// them `↦ K` and every other symbol `↦ E`, realised as a 2×2 matrix.
pub fn h_ij<S: Semiring>(w: &[Symbol], i: Symbol, j: Symbol) -> Result<Matrix<S>> {
    check_increasing(i, j)?;
    let image = |s: Symbol| {
        if s == i {
            HElement::I
        } else if s == j {
            HElement::J
        } else if i < s && s < j {
            HElement::K
        } else {
            HElement::E
        }
    };
    let mut acc = Matrix::identity(2);
    for &s in w {
        let e = image(s);
        if e != HElement::E {
            acc = &acc * &e.matrix::<S>();
        }
    }
    Ok(acc)
}

/// Blocks: the content matrix, then `h_ij` for every `i < j` in
/// lexicographic order. Total dimension `n²`.
pub fn hypo_rep<S: Semiring>(w: &Word, n: u32) -> Result<BlockDiag<S>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut blocks = vec![c_rep(w, n)?];
    for i in 1..=n {
        for j in i + 1..=n {
            blocks.push(h_ij(w, i, j)?);
        }
    }
    Ok(BlockDiag::new(blocks))
}

pub fn monoid_h_table() -> Vec<Vec<HElement>> {
    crate::monoid::multiplication_table::<HElement>().expect("H is closed under multiplication")
}
