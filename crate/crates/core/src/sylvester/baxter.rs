//! The Baxter monoid: pairs of twin binary search trees, and the
//! representation of dimension `2n² − n` built from the sylvester and
//! #-sylvester ones.

use serde::{Deserialize, Serialize};

use super::{p_sylv, p_sylvsharp, sylv_rep, sylvsharp_rep, Bst, BstSharp};
use crate::error::Result;
use crate::semiring::{BlockDiag, Semiring};
use crate::words::{Symbol, Word};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct BaxterPair {
    pub left: BstSharp,
    pub right: Bst,
}

impl BaxterPair {
    /// Both trees valid and carrying the same multiset of labels.
    pub fn is_valid(&self) -> bool {
        let mut l = self.left.reading().into_vec();
        let mut r = self.right.reading().into_vec();
        l.sort_unstable();
        r.sort_unstable();
        self.left.is_valid() && self.right.is_valid() && l == r
    }
}

pub fn p_baxt(w: &[Symbol]) -> BaxterPair {
    BaxterPair {
        left: p_sylvsharp(w),
        right: p_sylv(w),
    }
}

pub fn baxt_equiv(u: &[Symbol], v: &[Symbol]) -> bool {
    p_baxt(u) == p_baxt(v)
}

/// The content block, the sylvester `M` blocks, then the #-sylvester ones.
pub fn baxt_rep<S: Semiring>(w: &Word, n: u32) -> Result<BlockDiag<S>> {
    let mut blocks = sylv_rep::<S>(w, n)?.into_blocks();
    blocks.extend(sylvsharp_rep::<S>(w, n)?.into_blocks().into_iter().skip(1));
    Ok(BlockDiag::new(blocks))
}
