use std::ops::Mul;

use serde_json::{json, Value};

use super::Semiring;
use crate::error::{Error, Result};

/// A dense square matrix over `S`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Semiring> Matrix<S> {
    pub fn zero(dim: usize) -> Self {
        Matrix {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn diagonal(diag: Vec<S>) -> Self {
        let mut m = Self::zero(diag.len());
        for (i, v) in diag.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    /// Panics unless every row has `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let dim = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == dim),
            "matrix rows must form a square"
        );
        Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix from 0/1 flags, reading `1` as `1_S` and `0` as `0_S`.
    pub fn from_pattern<const D: usize>(pattern: [[u8; D]; D]) -> Self {
        Self::from_rows(
            pattern
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&b| if b == 0 { S::zero() } else { S::one() })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    /// `C[i][j] = ⊕_k A[i][k] ⊗ B[k][j]`.
    pub fn mat_mul(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let d = self.dim;
        let mut out: Matrix<S> = Matrix::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * d + j;
                    out.entries[idx] = out.entries[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// Every entry strictly below the diagonal is `0_S`.
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut out = Matrix::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Transpose followed by conjugation with the index-reversing permutation:
    /// `out[i][j] = self[d-1-j][d-1-i]`. Maps upper triangular to upper
    /// triangular and reverses the order of products.
    pub fn anti_transpose(&self) -> Self {
        let d = self.dim;
        let mut out = Matrix::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.set(i, j, self.get(d - 1 - j, d - 1 - i).clone());
            }
        }
        out
    }

    /// Columns holding a nonzero entry in `row`.
    pub fn row_support(&self, row: usize) -> Vec<usize> {
        (0..self.dim)
            .filter(|&j| !self.get(row, j).is_zero())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "semiring": S::NAME,
            "entries": self.entries.iter().map(S::to_json).collect::<Vec<_>>(),
        })
    }
}

impl<S: Semiring> Mul for &Matrix<S> {
    type Output = Matrix<S>;

    /// Panics on dimension mismatch; use [`Matrix::mat_mul`] to handle it.
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.mat_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl<S: Semiring> Mul for Matrix<S> {
    type Output = Matrix<S>;

    fn mul(self, rhs: Matrix<S>) -> Matrix<S> {
        &self * &rhs
    }
}

/// A block-diagonal matrix kept as its separate blocks. Equality is blockwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BlockDiag<S> {
    blocks: Vec<Matrix<S>>,
}

impl<S: Semiring> BlockDiag<S> {
    pub fn new(blocks: Vec<Matrix<S>>) -> Self {
        BlockDiag { blocks }
    }

    pub fn identity(dims: &[usize]) -> Self {
        BlockDiag {
            blocks: dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub fn blocks(&self) -> &[Matrix<S>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Matrix<S>> {
        self.blocks
    }

    pub fn block_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(Matrix::dim).collect()
    }

    /// Total dimension of the flattened matrix.
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(Matrix::dim).sum()
    }

    pub fn mat_mul(&self, rhs: &BlockDiag<S>) -> Result<BlockDiag<S>> {
        if self.blocks.len() != rhs.blocks.len() {
            return Err(Error::BlockMismatch {
                left: self.blocks.len(),
                right: rhs.blocks.len(),
            });
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&rhs.blocks)
            .map(|(a, b)| a.mat_mul(b))
            .collect::<Result<_>>()?;
        Ok(BlockDiag { blocks })
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.blocks.iter().all(Matrix::is_upper_triangular)
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| *b == Matrix::identity(b.dim()))
    }

    /// Assemble the blocks along the diagonal of one matrix.
    pub fn flatten(&self) -> Matrix<S> {
        let mut out = Matrix::zero(self.dim());
        let mut offset = 0;
        for block in &self.blocks {
            for i in 0..block.dim() {
                for j in 0..block.dim() {
                    out.set(offset + i, offset + j, block.get(i, j).clone());
                }
            }
            offset += block.dim();
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "blocks": self.blocks.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        })
    }
}

impl<S: Semiring> Mul for &BlockDiag<S> {
    type Output = BlockDiag<S>;

    fn mul(self, rhs: &BlockDiag<S>) -> BlockDiag<S> {
        self.mat_mul(rhs).expect("block structures must agree")
    }
}
