//! The stalactic monoid: stalactic tableaux, the flip-flop monoid `F` and a
//! faithful representation of dimension `n²`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::MatrixElement;
use crate::semiring::{c_rep, BlockDiag, Matrix, Semiring};
use crate::words::{Symbol, Word};

/// A stalactic tableau: columns left to right, each a symbol hanging with
/// some multiplicity from the top row.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct StalacticTableau {
    columns: Vec<(Symbol, usize)>,
}

impl StalacticTableau {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_columns(columns: Vec<(Symbol, usize)>) -> Result<Self> {
        let t = StalacticTableau { columns };
        if t.is_valid() {
            Ok(t)
        } else {
            Err(Error::InvalidForm(format!(
                "columns {:?} do not form a stalactic tableau",
                t.columns
            )))
        }
    }

    pub fn columns(&self) -> &[(Symbol, usize)] {
        &self.columns
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// The top row, left to right.
    pub fn top_row(&self) -> Vec<Symbol> {
        self.columns.iter().map(|&(s, _)| s).collect()
    }

    pub fn is_valid(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.columns
            .iter()
            .all(|&(s, m)| s >= 1 && m >= 1 && seen.insert(s))
    }

    pub fn insert(&mut self, a: Symbol) {
        match self.columns.iter_mut().find(|(s, _)| *s == a) {
            Some((_, m)) => *m += 1,
            None => self.columns.insert(0, (a, 1)),
        }
    }

    /// A word whose tableau is `self`: each column's symbol repeated, in
    /// column order.
    pub fn reading(&self) -> Word {
        self.columns
            .iter()
            .flat_map(|&(s, m)| std::iter::repeat_n(s, m))
            .collect()
    }
}

pub fn stal_insert(mut t: StalacticTableau, a: Symbol) -> StalacticTableau {
    t.insert(a);
    t
}

/// Inserts the symbols of `w` right to left.
pub fn p_stal(w: &[Symbol]) -> StalacticTableau {
    let mut t = StalacticTableau::new();
    for &a in w.iter().rev() {
        t.insert(a);
    }
    t
}

pub fn stal_equiv(u: &[Symbol], v: &[Symbol]) -> bool {
    p_stal(u) == p_stal(v)
}

/// `w = w' i w''` where `w''` contains `j` but not `i`.
pub fn s_pred(w: &[Symbol], i: Symbol, j: Symbol) -> Result<bool> {
    if i == j {
        return Err(Error::DiagonalPair { i, j });
    }
    Ok(match w.iter().rposition(|&s| s == i) {
        Some(p) => w[p + 1..].contains(&j),
        None => false,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FElement {
    E,
    I,
    J,
}

impl MatrixElement for FElement {
    const ALL: &'static [Self] = &[FElement::E, FElement::I, FElement::J];

    fn matrix<S: Semiring>(self) -> Matrix<S> {
        match self {
            FElement::E => Matrix::identity(2),
            FElement::I => Matrix::from_pattern([[1, 1], [0, 0]]),
            FElement::J => Matrix::from_pattern([[1, 0], [0, 0]]),
        }
    }

    fn name(self) -> &'static str {
        match self {
            FElement::E => "E",
            FElement::I => "I",
            FElement::J => "J",
        }
    }
}

impl FElement {
    /// The image of `w` read off the word: determined by whichever of `i`,
    /// `j` occurs last.
    pub fn of_word(w: &[Symbol], i: Symbol, j: Symbol) -> Result<FElement> {
        if i >= j {
            return Err(Error::UnorderedPair { i, j });
        }
        Ok(match w.iter().rev().find(|&&s| s == i || s == j) {
            None => FElement::E,
            Some(&s) if s == i => FElement::I,
            Some(_) => FElement::J,
        })
    }
}

/// The morphism `i ↦ I`, `j ↦ J`, everything else `↦ E` into `F`.
pub fn s_ij<S: Semiring>(w: &[Symbol], i: Symbol, j: Symbol) -> Result<Matrix<S>> {
    if i >= j {
        return Err(Error::UnorderedPair { i, j });
    }
    let mut acc = Matrix::identity(2);
    for &s in w {
        let e = if s == i {
            FElement::I
        } else if s == j {
            FElement::J
        } else {
            continue;
        };
        acc = &acc * &e.matrix::<S>();
    }
    Ok(acc)
}

/// Blocks: the content matrix, then `s_ij` for every `i < j`. Dimension `n²`.
pub fn stal_rep<S: Semiring>(w: &Word, n: u32) -> Result<BlockDiag<S>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut blocks = vec![c_rep(w, n)?];
    for i in 1..=n {
        for j in i + 1..=n {
            blocks.push(s_ij(w, i, j)?);
        }
    }
    Ok(BlockDiag::new(blocks))
}

pub fn monoid_f_table() -> Vec<Vec<FElement>> {
    crate::monoid::multiplication_table::<FElement>().expect("F is closed under multiplication")
}
