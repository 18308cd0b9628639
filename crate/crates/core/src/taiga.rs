//! The taiga monoid: binary search trees with multiplicities, the 5-element
//! monoid `T` and a faithful representation of dimension `3n² − 2n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::MatrixElement;
use crate::semiring::{c_rep, BlockDiag, Matrix, Semiring};
use crate::words::{Symbol, Word};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct TaigaNode {
    pub label: Symbol,
    pub mult: usize,
    pub left: Option<Box<TaigaNode>>,
    pub right: Option<Box<TaigaNode>>,
}

impl TaigaNode {
    pub fn leaf(label: Symbol, mult: usize) -> Self {
        TaigaNode {
            label,
            mult,
            left: None,
            right: None,
        }
    }

    fn contains(&self, label: Symbol) -> bool {
        self.find(label).is_some()
    }

    fn find(&self, label: Symbol) -> Option<&TaigaNode> {
        let mut cur = Some(self);
        while let Some(node) = cur {
            cur = match label.cmp(&node.label) {
                std::cmp::Ordering::Equal => return Some(node),
                std::cmp::Ordering::Less => node.left.as_deref(),
                std::cmp::Ordering::Greater => node.right.as_deref(),
            };
        }
        None
    }

    /// Checks the strict search-tree property with labels confined to the
    /// open interval `(lo, hi)`.
    fn valid_within(&self, lo: Option<Symbol>, hi: Option<Symbol>) -> bool {
        self.label >= 1
            && self.mult >= 1
            && lo.is_none_or(|lo| lo < self.label)
            && hi.is_none_or(|hi| self.label < hi)
            && self
                .left
                .as_ref()
                .is_none_or(|l| l.valid_within(lo, Some(self.label)))
            && self
                .right
                .as_ref()
                .is_none_or(|r| r.valid_within(Some(self.label), hi))
    }
}

/// A binary search tree with multiplicities; labels are distinct.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct TaigaTree {
    pub root: Option<Box<TaigaNode>>,
}

impl TaigaTree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    pub fn is_valid(&self) -> bool {
        self.root
            .as_ref()
            .is_none_or(|r| r.valid_within(None, None))
    }

    pub fn insert(&mut self, a: Symbol) {
        let mut slot = &mut self.root;
        while let Some(node) = slot {
            match a.cmp(&node.label) {
                std::cmp::Ordering::Equal => {
                    node.mult += 1;
                    return;
                }
                std::cmp::Ordering::Less => slot = &mut node.left,
                std::cmp::Ordering::Greater => slot = &mut node.right,
            }
        }
        *slot = Some(Box::new(TaigaNode::leaf(a, 1)));
    }

    /// Multiplicity of `label`, zero if absent.
    pub fn mult(&self, label: Symbol) -> usize {
        self.root
            .as_ref()
            .and_then(|r| r.find(label))
            .map_or(0, |n| n.mult)
    }

    /// Whether `i` labels a proper descendant of the vertex labelled `j`.
    pub fn occurs_below(&self, i: Symbol, j: Symbol) -> bool {
        match self.root.as_ref().and_then(|r| r.find(j)) {
            Some(node) => [&node.left, &node.right]
                .into_iter()
                .flatten()
                .any(|child| child.contains(i)),
            None => false,
        }
    }

    /// Labels in preorder, each repeated by its multiplicity. Inserting this
    /// word right to left rebuilds the tree.
    pub fn reading(&self) -> Word {
        fn walk(node: &TaigaNode, out: &mut Vec<Symbol>) {
            out.extend(std::iter::repeat_n(node.label, node.mult));
            for child in [&node.left, &node.right].into_iter().flatten() {
                walk(child, out);
            }
        }
        let mut out = Vec::new();
        if let Some(r) = &self.root {
            walk(r, &mut out);
        }
        out.reverse();
        Word::new(out)
    }
}

pub fn taig_insert(mut t: TaigaTree, a: Symbol) -> TaigaTree {
    t.insert(a);
    t
}

/// Inserts the symbols of `w` right to left.
pub fn p_taig(w: &[Symbol]) -> TaigaTree {
    let mut t = TaigaTree::new();
    for &a in w.iter().rev() {
        t.insert(a);
    }
    t
}

pub fn taig_equiv(u: &[Symbol], v: &[Symbol]) -> bool {
    p_taig(u) == p_taig(v)
}

fn check_distinct(i: Symbol, j: Symbol) -> Result<()> {
    if i == j {
        Err(Error::DiagonalPair { i, j })
    } else {
        Ok(())
    }
}

/// `w = w' i w'' j w'''` with no symbol of the closed interval between `i`
/// and `j` in `w'''`.
pub fn t_pred(w: &[Symbol], i: Symbol, j: Symbol) -> Result<bool> {
    Ok(TElement::of_word(w, i, j)? == TElement::L)
}

/// Elements listed in the order of the multiplication table: `E, K, J, I, L`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum TElement {
    E,
    K,
    J,
    I,
    L,
}

impl MatrixElement for TElement {
    const ALL: &'static [Self] = &[
        TElement::E,
        TElement::K,
        TElement::J,
        TElement::I,
        TElement::L,
    ];

    fn matrix<S: Semiring>(self) -> Matrix<S> {
        match self {
            TElement::E => Matrix::identity(3),
            TElement::K => Matrix::from_pattern([[1, 0, 0], [0, 1, 0], [0, 0, 0]]),
            TElement::J => Matrix::from_pattern([[1, 0, 0], [0, 1, 1], [0, 0, 0]]),
            TElement::I => Matrix::from_pattern([[1, 1, 0], [0, 0, 0], [0, 0, 0]]),
            TElement::L => Matrix::from_pattern([[1, 1, 1], [0, 0, 0], [0, 0, 0]]),
        }
    }

    fn name(self) -> &'static str {
        match self {
            TElement::E => "E",
            TElement::K => "K",
            TElement::J => "J",
            TElement::I => "I",
            TElement::L => "L",
        }
    }
}

impl TElement {
    /// The image of `w` under the `(i, j)` morphism, read off the word. Only
    /// the last symbol from the interval and the presence of `i` matter.
    pub fn of_word(w: &[Symbol], i: Symbol, j: Symbol) -> Result<TElement> {
        check_distinct(i, j)?;
        let (lo, hi) = (i.min(j), i.max(j));
        let Some(q) = w.iter().rposition(|&s| lo <= s && s <= hi) else {
            return Ok(TElement::E);
        };
        let i_before = w[..q].contains(&i);
        Ok(match w[q] {
            s if s == i => TElement::I,
            s if s == j => {
                if i_before {
                    TElement::L
                } else {
                    TElement::J
                }
            }
            _ => {
                if i_before {
                    TElement::I
                } else {
                    TElement::K
                }
            }
        })
    }
}

/// The morphism `i ↦ I`, `j ↦ J`, symbols strictly between `↦ K`, others
/// `↦ E`. Both orders of `i`, `j` are allowed.
pub fn t_ij<S: Semiring>(w: &[Symbol], i: Symbol, j: Symbol) -> Result<Matrix<S>> {
    check_distinct(i, j)?;
    let (lo, hi) = (i.min(j), i.max(j));
    let mut acc = Matrix::identity(3);
    for &s in w {
        let e = if s == i {
            TElement::I
        } else if s == j {
            TElement::J
        } else if lo < s && s < hi {
            TElement::K
        } else {
            continue;
        };
        acc = &acc * &e.matrix::<S>();
    }
    Ok(acc)
}

/// Blocks: the content matrix, then `t_ij` for every ordered pair `i ≠ j`
/// in lexicographic order. Dimension `3n² − 2n`.
pub fn taig_rep<S: Semiring>(w: &Word, n: u32) -> Result<BlockDiag<S>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut blocks = vec![c_rep(w, n)?];
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            blocks.push(t_ij(w, i, j)?);
        }
    }
    Ok(BlockDiag::new(blocks))
}

/// The published multiplication table of `T`, rows and columns in the order
/// `E, K, J, I, L`; entry `[r][c]` is row times column.
pub const T_TABLE: [[TElement; 5]; 5] = {
    use TElement::*;
    [
        [E, K, J, I, L],
        [K, K, J, I, L],
        [J, K, J, I, L],
        [I, I, L, I, L],
        [L, I, L, I, L],
    ]
};

/// The table computed from the concrete matrices. Panics if it differs from
/// [`T_TABLE`].
pub fn monoid_t_table() -> Vec<Vec<TElement>> {
    let table = crate::monoid::multiplication_table::<TElement>()
        .expect("T is closed under multiplication");
    for (r, row) in table.iter().enumerate() {
        for (c, &cell) in row.iter().enumerate() {
            assert_eq!(
                cell,
                T_TABLE[r][c],
                "computed product {:?}·{:?} disagrees with the published table",
                TElement::ALL[r],
                TElement::ALL[c]
            );
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::FiniteMonoid;
    use crate::scan::partition_conflict;
    use crate::semiring::{Natural, Tropical};
    use crate::stalactic::p_stal;
    use crate::words::{content, enumerate_words};
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn node(
        label: Symbol,
        mult: usize,
        left: Option<TaigaNode>,
        right: Option<TaigaNode>,
    ) -> TaigaNode {
        TaigaNode {
            label,
            mult,
            left: left.map(Box::new),
            right: right.map(Box::new),
        }
    }

    fn tree(root: TaigaNode) -> TaigaTree {
        TaigaTree {
            root: Some(Box::new(root)),
        }
    }

    /// Brute force over all factorizations `w' i w'' j w'''`.
    fn t_pred_oracle(w: &[Symbol], i: Symbol, j: Symbol) -> bool {
        let (lo, hi) = (i.min(j), i.max(j));
        (0..w.len()).any(|p| {
            w[p] == i
                && (p + 1..w.len())
                    .any(|q| w[q] == j && w[q + 1..].iter().all(|&s| s < lo || s > hi))
        })
    }

    #[test]
    fn insertion_examples() {
        let t = taig_insert(TaigaTree::new(), 4);
        assert_eq!(t, tree(TaigaNode::leaf(4, 1)));
        assert_eq!(taig_insert(t.clone(), 4), tree(TaigaNode::leaf(4, 2)));
        assert_eq!(
            taig_insert(t, 2),
            tree(node(4, 1, Some(TaigaNode::leaf(2, 1)), None))
        );
    }

    #[test]
    fn p_taig_examples() {
        assert!(p_taig(&Word::empty()).is_empty());
        assert_eq!(
            p_taig(&w("4254")),
            tree(node(
                4,
                2,
                Some(TaigaNode::leaf(2, 1)),
                Some(TaigaNode::leaf(5, 1))
            ))
        );
    }

    #[test]
    fn worked_example_traced() {
        // The word has a single 4, so the root carries multiplicity 1.
        let expected = tree(node(
            4,
            1,
            Some(node(
                2,
                1,
                Some(TaigaNode::leaf(1, 2)),
                Some(TaigaNode::leaf(3, 1)),
            )),
            Some(node(
                5,
                3,
                None,
                Some(node(6, 2, None, Some(TaigaNode::leaf(7, 1)))),
            )),
        ));
        let t = p_taig(&w("65117563254"));
        assert_eq!(t, expected);
        assert_eq!(t.mult(4), content(&w("65117563254")).count(4));
    }

    #[test]
    fn equiv_examples() {
        assert!(!taig_equiv(&w("45"), &w("54")));
        assert!(taig_equiv(&w("44"), &w("44")));
        assert!(taig_equiv(&w("121"), &w("211")));
    }

    #[test]
    fn t_pred_examples() {
        assert!(t_pred(&w("12"), 1, 2).unwrap());
        assert!(!t_pred(&w("21"), 1, 2).unwrap());
        assert!(!t_pred(&w("132"), 1, 3).unwrap());
        assert!(t_pred(&w("21"), 2, 1).unwrap());
        assert_eq!(
            t_pred(&w("1"), 1, 1),
            Err(Error::DiagonalPair { i: 1, j: 1 })
        );
    }

    #[test]
    fn t_pred_matches_factorization_oracle() {
        for word in enumerate_words(4, 7) {
            for i in 1..=4 {
                for j in (1..=4).filter(|&j| j != i) {
                    assert_eq!(
                        t_pred(&word, i, j).unwrap(),
                        t_pred_oracle(&word, i, j),
                        "{word} ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn t_ij_examples() {
        assert_eq!(
            t_ij::<Tropical>(&Word::empty(), 1, 2).unwrap(),
            Matrix::identity(3)
        );
        assert_eq!(
            t_ij::<Natural>(&w("12"), 1, 2).unwrap(),
            TElement::L.matrix()
        );
        assert!(t_ij::<Natural>(&w("12"), 2, 2).is_err());
    }

    #[test]
    fn t_table_matches_published() {
        let t = monoid_t_table();
        let idx = |e: TElement| TElement::ALL.iter().position(|&x| x == e).unwrap();
        assert_eq!(t[idx(TElement::L)][idx(TElement::K)], TElement::I);
        assert_eq!(t[idx(TElement::J)][idx(TElement::I)], TElement::I);
        assert_eq!(t[idx(TElement::I)][idx(TElement::J)], TElement::L);
        for &x in TElement::ALL {
            assert_eq!(t[0][idx(x)], x);
        }
        assert!(FiniteMonoid::from_elements::<TElement>().is_ok());
    }

    #[test]
    fn image_matches_case_analysis() {
        for word in enumerate_words(4, 7) {
            for (i, j) in [(1, 2), (2, 1), (1, 4), (4, 1), (2, 3), (3, 2)] {
                let m = t_ij::<Natural>(&word, i, j).unwrap();
                let e = TElement::classify(&m).expect("image lies in T");
                assert_eq!(
                    e,
                    TElement::of_word(&word, i, j).unwrap(),
                    "{word} ({i},{j})"
                );
                assert_eq!(
                    e == TElement::E,
                    word.iter().all(|&s| s < i.min(j) || s > i.max(j))
                );
            }
        }
    }

    fn t_key(u: &Word, n: u32) -> (crate::words::Content, Vec<bool>) {
        let mut preds = Vec::new();
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                preds.push(t_pred(u, i, j).unwrap());
            }
        }
        (content(u), preds)
    }

    #[test]
    fn equality_criterion_exhaustive() {
        for n in 1..=3 {
            assert_eq!(
                partition_conflict(enumerate_words(n, 6), |u| p_taig(u), |u| t_key(u, n)),
                None
            );
        }
    }

    #[test]
    fn occurrence_below_matches_subtree() {
        for word in enumerate_words(4, 6) {
            let t = p_taig(&word);
            for i in 1..=4 {
                for j in (1..=4).filter(|&j| j != i) {
                    assert_eq!(
                        t.occurs_below(i, j),
                        t_pred(&word, i, j).unwrap(),
                        "{word} ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn stalactic_classes_refine_taiga_classes() {
        for n in 1..=3 {
            let conflict = partition_conflict(
                enumerate_words(n, 6),
                |u| p_stal(u),
                |u| (p_stal(u), p_taig(u)),
            );
            assert_eq!(conflict, None);
        }
    }

    #[test]
    fn faithful_exhaustive() {
        for n in 1..=3 {
            let words = || enumerate_words(n, 6);
            assert_eq!(
                partition_conflict(
                    words(),
                    |u| p_taig(u),
                    |u| taig_rep::<Tropical>(u, n).unwrap()
                ),
                None
            );
            assert_eq!(
                partition_conflict(
                    words(),
                    |u| p_taig(u),
                    |u| taig_rep::<Natural>(u, n).unwrap()
                ),
                None
            );
        }
    }

    #[test]
    fn rep_shape() {
        assert_eq!(taig_rep::<Tropical>(&w("21"), 2).unwrap().dim(), 8);
        let rep = taig_rep::<Tropical>(&w("3121"), 3).unwrap();
        assert_eq!(rep.dim(), 21);
        assert!(rep.is_upper_triangular());
        assert!(taig_rep::<Natural>(&Word::empty(), 3)
            .unwrap()
            .is_identity());
    }

    fn word_strategy(n: u32, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(1..=n, 0..=max_len).prop_map(Word::new)
    }

    proptest! {
        #[test]
        fn insertion_keeps_tree_valid(word in word_strategy(8, 30)) {
            let t = p_taig(&word);
            prop_assert!(t.is_valid());
            let c = content(&word);
            for (s, m) in c.iter() {
                prop_assert_eq!(t.mult(s), m);
            }
            prop_assert_eq!(p_taig(&t.reading()), t);
        }

        #[test]
        fn rep_is_a_morphism(u in word_strategy(3, 10), v in word_strategy(3, 10)) {
            let lhs = taig_rep::<Natural>(&u.concat(&v), 3).unwrap();
            let rhs = &taig_rep::<Natural>(&u, 3).unwrap() * &taig_rep::<Natural>(&v, 3).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
