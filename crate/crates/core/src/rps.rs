//! The right patience sorting monoid: rPS-tableaux, the action of words on
//! possible bottom rows, and a faithful representation by matrices indexed
//! by those bottom rows.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::semiring::{alpha_pow, BlockDiag, Matrix, Semiring};
use crate::words::{Symbol, Word};

/// Largest rank accepted by the bottom-row machinery. Blocks have `2^n` rows,
/// so anything bigger is impractical anyway.
pub const MAX_RANK: u32 = 10;

/// An rPS-tableau: bottom-aligned columns, each stored bottom to top.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct RpsTableau {
    columns: Vec<Vec<Symbol>>,
}

impl RpsTableau {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_columns(columns: Vec<Vec<Symbol>>) -> Result<Self> {
        let t = RpsTableau { columns };
        if t.is_valid() {
            Ok(t)
        } else {
            Err(Error::InvalidForm(format!(
                "columns {:?} do not form an rPS-tableau",
                t.columns
            )))
        }
    }

    pub fn columns(&self) -> &[Vec<Symbol>] {
        &self.columns
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Columns non-empty and weakly increasing upwards; bottom row strictly
    /// increasing.
    pub fn is_valid(&self) -> bool {
        self.columns
            .iter()
            .all(|c| c.first().is_some_and(|&s| s >= 1) && c.windows(2).all(|p| p[0] <= p[1]))
            && self.columns.windows(2).all(|p| p[0][0] < p[1][0])
    }

    pub fn bottom_row(&self) -> Vec<Symbol> {
        self.columns.iter().map(|c| c[0]).collect()
    }

    pub fn insert(&mut self, a: Symbol) {
        match self.columns.iter_mut().find(|c| c[0] >= a) {
            Some(column) => column.insert(0, a),
            None => self.columns.push(vec![a]),
        }
    }

    /// A word whose tableau is `self`: columns left to right, each read top
    /// to bottom.
    pub fn reading(&self) -> Word {
        self.columns
            .iter()
            .flat_map(|c| c.iter().rev().copied())
            .collect()
    }
}

pub fn rps_insert(mut t: RpsTableau, a: Symbol) -> RpsTableau {
    t.insert(a);
    t
}

/// Inserts the symbols of `w` left to right.
pub fn p_rps(w: &[Symbol]) -> RpsTableau {
    let mut t = RpsTableau::new();
    for &a in w {
        t.insert(a);
    }
    t
}

pub fn rps_equiv(u: &[Symbol], v: &[Symbol]) -> bool {
    p_rps(u) == p_rps(v)
}

/// A set of symbols from `[1, 64]`, the possible bottom row of a tableau.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "Vec<Symbol>", try_from = "Vec<Symbol>")]
pub struct BottomRow(u64);

impl BottomRow {
    pub const EMPTY: BottomRow = BottomRow(0);

    fn bit(s: Symbol) -> u64 {
        assert!(
            (1..=64).contains(&s),
            "bottom rows hold symbols in [1, 64], got {s}"
        );
        1u64 << (s - 1)
    }

    pub fn from_mask(mask: u64) -> Self {
        BottomRow(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, s: Symbol) -> bool {
        (1..=64).contains(&s) && self.0 & Self::bit(s) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Members in increasing order.
    pub fn symbols(self) -> Vec<Symbol> {
        (0..64)
            .filter(|b| self.0 >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    pub fn sum(self) -> u64 {
        self.symbols().iter().map(|&s| u64::from(s)).sum()
    }

    /// The symbol `z` replaces (the least member `≥ z`), if any.
    fn displaced(self, z: Symbol) -> Option<Symbol> {
        let at_least_z = self.0 & !(Self::bit(z) - 1);
        (at_least_z != 0).then(|| at_least_z.trailing_zeros() + 1)
    }

    /// 1-based column that receives `z` when it is inserted into a tableau
    /// with this bottom row.
    pub fn column_of(self, z: Symbol) -> usize {
        match self.displaced(z) {
            Some(c) => (self.0 & (Self::bit(c) - 1)).count_ones() as usize + 1,
            None => self.len() + 1,
        }
    }

    /// The bottom row after inserting `z`.
    pub fn act(self, z: Symbol) -> BottomRow {
        match self.displaced(z) {
            Some(c) => BottomRow(self.0 & !Self::bit(c) | Self::bit(z)),
            None => BottomRow(self.0 | Self::bit(z)),
        }
    }

    pub fn act_word(self, w: &[Symbol]) -> BottomRow {
        w.iter().fold(self, |b, &z| b.act(z))
    }
}

impl From<BottomRow> for Vec<Symbol> {
    fn from(b: BottomRow) -> Self {
        b.symbols()
    }
}

impl TryFrom<Vec<Symbol>> for BottomRow {
    type Error = Error;

    fn try_from(symbols: Vec<Symbol>) -> Result<Self> {
        let mut mask = 0;
        for s in symbols {
            if !(1..=64).contains(&s) {
                return Err(Error::SymbolOutOfRange {
                    symbol: s,
                    rank: 64,
                });
            }
            mask |= BottomRow::bit(s);
        }
        Ok(BottomRow(mask))
    }
}

impl<const N: usize> From<[Symbol; N]> for BottomRow {
    fn from(symbols: [Symbol; N]) -> Self {
        BottomRow(symbols.iter().fold(0, |m, &s| m | BottomRow::bit(s)))
    }
}

impl fmt::Debug for BottomRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.symbols()).finish()
    }
}

pub fn bottom_action(b: BottomRow, z: Symbol) -> BottomRow {
    b.act(z)
}

/// 1 if inserting `z` over bottom row `b` adds an `x` to column `y`.
pub fn count_delta(b: BottomRow, z: Symbol, x: Symbol, y: usize) -> usize {
    usize::from(z == x && b.column_of(z) == y)
}

fn check_rank(n: u32) -> Result<()> {
    match n {
        0 => Err(Error::ZeroRank),
        n if n > MAX_RANK => Err(Error::RankTooLarge {
            rank: n,
            max: MAX_RANK,
        }),
        _ => Ok(()),
    }
}

/// All subsets of `[n]`, sorted by size ascending, then sum descending, then
/// lexicographically. Every generator step moves weakly forward in this
/// order, so it linearly extends the reachability order.
pub fn b_linear_order(n: u32) -> Result<Vec<BottomRow>> {
    check_rank(n)?;
    let mut all: Vec<BottomRow> = (0..1u64 << n).map(BottomRow).collect();
    all.sort_by_key(|b| (b.len(), std::cmp::Reverse(b.sum()), b.symbols()));
    Ok(all)
}

/// Position of each subset (by mask) in [`b_linear_order`].
fn positions(order: &[BottomRow]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, b) in order.iter().enumerate() {
        pos[b.0 as usize] = i;
    }
    pos
}

/// The `(x, y)` block: row `p` has `α^i` in column `p·w`, where `i` counts the
/// `x`s that land in column `y` while `w` is inserted over `p`.
pub fn f_xy<S: Semiring>(w: &Word, n: u32, x: Symbol, y: usize) -> Result<Matrix<S>> {
    check_rank(n)?;
    w.check_rank(n)?;
    let order = b_linear_order(n)?;
    let pos = positions(&order);
    let mut m = Matrix::zero(order.len());
    for (row, &p) in order.iter().enumerate() {
        let mut cur = p;
        let mut count = 0;
        for &z in w.iter() {
            count += count_delta(cur, z, x, y);
            cur = cur.act(z);
        }
        m.set(row, pos[cur.0 as usize], alpha_pow(count));
    }
    Ok(m)
}

/// Blocks `f_xy` for every `x ≥ y`, ordered by `x` then `y`. Dimension
/// `2^n · C(n+1, 2)`.
pub fn rps_rep<S: Semiring>(w: &Word, n: u32) -> Result<BlockDiag<S>> {
    check_rank(n)?;
    w.check_rank(n)?;
    let order = b_linear_order(n)?;
    let pos = positions(&order);
    let size = order.len();
    let pairs: Vec<(Symbol, usize)> = (1..=n)
        .flat_map(|x| (1..=x as usize).map(move |y| (x, y)))
        .collect();
    let mut blocks: Vec<Matrix<S>> = pairs.iter().map(|_| Matrix::zero(size)).collect();
    for (row, &p) in order.iter().enumerate() {
        // counts[x][y]: number of x's landing in column y.
        let mut counts = vec![vec![0usize; n as usize + 2]; n as usize + 1];
        let mut cur = p;
        for &z in w.iter() {
            let y = cur.column_of(z);
            if y <= n as usize {
                counts[z as usize][y] += 1;
            }
            cur = cur.act(z);
        }
        let col = pos[cur.0 as usize];
        for (block, &(x, y)) in blocks.iter_mut().zip(&pairs) {
            block.set(row, col, alpha_pow(counts[x as usize][y]));
        }
    }
    Ok(BlockDiag::new(blocks))
}

/// The subsets of `[n]` in [`b_linear_order`], as JSON arrays; this labels the
/// rows and columns of every block.
pub fn index_json(n: u32) -> Result<Value> {
    Ok(Value::from(
        b_linear_order(n)?
            .into_iter()
            .map(|b| Value::from(b.symbols()))
            .collect::<Vec<_>>(),
    ))
}

/// Bottom rows of rank `n` and the non-loop generator steps between them.
#[derive(Clone, Debug)]
pub struct ActionGraph {
    pub nodes: Vec<BottomRow>,
    /// Index pairs `(p, p·z)` with `p·z ≠ p`.
    pub edges: Vec<(usize, usize)>,
}

impl ActionGraph {
    pub fn new(n: u32) -> Result<Self> {
        let nodes = b_linear_order(n)?;
        let pos = positions(&nodes);
        let mut edges = Vec::new();
        for (i, &p) in nodes.iter().enumerate() {
            for z in 1..=n {
                let j = pos[p.act(z).0 as usize];
                if j != i && !edges.contains(&(i, j)) {
                    edges.push((i, j));
                }
            }
        }
        Ok(ActionGraph { nodes, edges })
    }

    /// Reflexive-transitive closure: `reach[p][q]` iff some word moves `p`
    /// to `q`.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let size = self.nodes.len();
        let mut reach = vec![vec![false; size]; size];
        for (p, row) in reach.iter_mut().enumerate() {
            let mut stack = vec![p];
            row[p] = true;
            while let Some(u) = stack.pop() {
                for &(a, b) in &self.edges {
                    if a == u && !row[b] {
                        row[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        reach
    }

    /// Number of nodes on the longest path. Since every edge points forward
    /// in the node order, a single backwards sweep suffices.
    pub fn longest_chain(&self) -> usize {
        let size = self.nodes.len();
        let mut best = vec![1usize; size];
        for p in (0..size).rev() {
            for &(a, b) in &self.edges {
                if a == p {
                    assert!(b > a, "generator step goes backwards in the linear order");
                    best[p] = best[p].max(best[b] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }
}

/// Maximum chain length of the reachability order on bottom rows.
pub fn chain_length(n: u32) -> Result<usize> {
    Ok(ActionGraph::new(n)?.longest_chain())
}

/// A word whose insertion from the empty tableau changes the bottom row at
/// every step, visiting `C(n+1, 2) + 1` distinct bottom rows: block `i` is
/// `n−i+1, n−i+2, …, n`.
pub fn chain_witness(n: u32) -> Result<Word> {
    check_rank(n)?;
    Ok((1..=n)
        .flat_map(|i| (1..=i).map(move |j| n - i + j))
        .collect())
}

/// Distinct bottom rows seen while inserting `w` from the empty tableau,
/// counting the initial empty row.
pub fn visited_bottom_rows(w: &[Symbol]) -> usize {
    let mut seen = std::collections::HashSet::from([BottomRow::EMPTY]);
    let mut cur = BottomRow::EMPTY;
    for &z in w {
        cur = cur.act(z);
        seen.insert(cur);
    }
    seen.len()
}
