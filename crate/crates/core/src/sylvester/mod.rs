//! The sylvester and #-sylvester monoids: binary search trees with repeated
//! labels, the infinite monoid `M`, the maps `φ_ij` and faithful
//! representations of dimension `n²`. The Baxter monoid lives in [`baxter`].

pub mod baxter;

use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semiring::{alpha_pow, c_rep, BlockDiag, Matrix, Semiring};
use crate::words::{content, Symbol, Word};

pub use baxter::{baxt_equiv, baxt_rep, p_baxt, BaxterPair};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BstNode {
    pub label: Symbol,
    pub left: Option<Box<BstNode>>,
    pub right: Option<Box<BstNode>>,
}

impl BstNode {
    pub fn leaf(label: Symbol) -> Self {
        BstNode {
            label,
            left: None,
            right: None,
        }
    }

    fn labels(&self, out: &mut Vec<Symbol>) {
        out.push(self.label);
        for child in [&self.left, &self.right].into_iter().flatten() {
            child.labels(out);
        }
    }

    /// Every node satisfies `ok(left labels, label, right labels)`.
    fn check(&self, ok: &impl Fn(&[Symbol], Symbol, &[Symbol]) -> bool) -> bool {
        let mut left = Vec::new();
        let mut right = Vec::new();
        if let Some(l) = &self.left {
            l.labels(&mut left);
        }
        if let Some(r) = &self.right {
            r.labels(&mut right);
        }
        self.label >= 1
            && ok(&left, self.label, &right)
            && [&self.left, &self.right]
                .into_iter()
                .flatten()
                .all(|c| c.check(ok))
    }
}

/// Inserts `a` as a leaf; `go_left(a, x)` decides the direction at a node
/// labelled `x`.
fn leaf_insert(
    root: &mut Option<Box<BstNode>>,
    a: Symbol,
    go_left: impl Fn(Symbol, Symbol) -> bool,
) {
    let mut slot = root;
    while let Some(node) = slot {
        slot = if go_left(a, node.label) {
            &mut node.left
        } else {
            &mut node.right
        };
    }
    *slot = Some(Box::new(BstNode::leaf(a)));
}

fn preorder(root: &Option<Box<BstNode>>) -> Vec<Symbol> {
    let mut out = Vec::new();
    if let Some(r) = root {
        r.labels(&mut out);
    }
    out
}

/// Right-strict binary search tree: left subtree labels `≤` the node, right
/// subtree labels `>` it.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Bst {
    pub root: Option<Box<BstNode>>,
}

impl Bst {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    pub fn insert(&mut self, a: Symbol) {
        leaf_insert(&mut self.root, a, |a, x| a <= x);
    }

    pub fn is_valid(&self) -> bool {
        self.root.as_ref().is_none_or(|r| {
            r.check(&|l, x, rt| l.iter().all(|&s| s <= x) && rt.iter().all(|&s| s > x))
        })
    }

    /// A word whose tableau is `self` (reverse preorder).
    pub fn reading(&self) -> Word {
        let mut out = preorder(&self.root);
        out.reverse();
        Word::new(out)
    }
}

/// Left-strict binary search tree: left subtree labels `<` the node, right
/// subtree labels `≥` it.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct BstSharp {
    pub root: Option<Box<BstNode>>,
}

impl BstSharp {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    pub fn insert(&mut self, a: Symbol) {
        leaf_insert(&mut self.root, a, |a, x| a < x);
    }

    pub fn is_valid(&self) -> bool {
        self.root.as_ref().is_none_or(|r| {
            r.check(&|l, x, rt| l.iter().all(|&s| s < x) && rt.iter().all(|&s| s >= x))
        })
    }

    /// A word whose tableau is `self` (preorder).
    pub fn reading(&self) -> Word {
        Word::new(preorder(&self.root))
    }
}

pub fn sylv_insert(mut t: Bst, a: Symbol) -> Bst {
    t.insert(a);
    t
}

pub fn sylvsharp_insert(mut t: BstSharp, a: Symbol) -> BstSharp {
    t.insert(a);
    t
}

/// Inserts the symbols of `w` right to left.
pub fn p_sylv(w: &[Symbol]) -> Bst {
    let mut t = Bst::new();
    for &a in w.iter().rev() {
        t.insert(a);
    }
    t
}

/// Inserts the symbols of `w` left to right.
pub fn p_sylvsharp(w: &[Symbol]) -> BstSharp {
    let mut t = BstSharp::new();
    for &a in w {
        t.insert(a);
    }
    t
}

pub fn sylv_equiv(u: &[Symbol], v: &[Symbol]) -> bool {
    p_sylv(u) == p_sylv(v)
}

pub fn sylvsharp_equiv(u: &[Symbol], v: &[Symbol]) -> bool {
    p_sylvsharp(u) == p_sylvsharp(v)
}

fn check_increasing(i: Symbol, j: Symbol) -> Result<()> {
    if i < j {
        Ok(())
    } else {
        Err(Error::UnorderedPair { i, j })
    }
}

/// Letterwise map to words over `{1, 2}`: `i ↦ 1`, `j ↦ 2`, symbols strictly
/// between `↦ 21`, others erased.
pub fn phi_ij(w: &[Symbol], i: Symbol, j: Symbol) -> Result<Word> {
    check_increasing(i, j)?;
    let mut out = Vec::with_capacity(w.len());
    for &s in w {
        if s == i {
            out.push(1);
        } else if s == j {
            out.push(2);
        } else if i < s && s < j {
            out.extend([2, 1]);
        }
    }
    Ok(Word::new(out))
}

fn check_binary(w2: &[Symbol]) -> Result<()> {
    match w2.iter().find(|&&s| s != 1 && s != 2) {
        Some(&symbol) => Err(Error::NotBinary { symbol }),
        None => Ok(()),
    }
}

impl Mul for MElement {
    type Output = MElement;

    // Exponents of `J` add.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: MElement) -> MElement {
        match (self.itype, rhs.itype) {
            (_, true) => rhs,
            (itype, false) => MElement {
                itype,
                k: self.k + rhs.k,
            },
        }
    }
}

/// An element of `M`: `J^k`, or `I·J^k` when `itype` is set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MElement {
    pub itype: bool,
    pub k: usize,
}

impl MElement {
    pub const IDENTITY: MElement = MElement { itype: false, k: 0 };
    pub const I: MElement = MElement { itype: true, k: 0 };
    pub const J: MElement = MElement { itype: false, k: 1 };

    /// `J^k = [[1,0],[0,α^k]]`, `IJ^k = [[1,α^k],[0,0]]`.
    pub fn matrix<S: Semiring>(self) -> Matrix<S> {
        if self.itype {
            Matrix::from_rows(vec![
                vec![S::one(), alpha_pow(self.k)],
                vec![S::zero(), S::zero()],
            ])
        } else {
            Matrix::from_rows(vec![
                vec![S::one(), S::zero()],
                vec![S::zero(), alpha_pow(self.k)],
            ])
        }
    }
}

/// The element of `M` represented by a word over `{1, 2}`.
pub fn m_canonical(w2: &[Symbol]) -> Result<MElement> {
    check_binary(w2)?;
    let trailing = w2.iter().rev().take_while(|&&s| s == 2).count();
    Ok(MElement {
        itype: w2.contains(&1),
        k: trailing,
    })
}

/// Product of the letter matrices `1 ↦ I`, `2 ↦ J`.
pub fn m_eval<S: Semiring>(w2: &[Symbol]) -> Result<Matrix<S>> {
    check_binary(w2)?;
    let i = MElement::I.matrix::<S>();
    let j = MElement::J.matrix::<S>();
    let mut acc = Matrix::identity(2);
    for &s in w2 {
        acc = &acc * if s == 1 { &i } else { &j };
    }
    Ok(acc)
}

/// The rank-2 normal form `2^a 1^b 2^c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SylvNormalForm2 {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl SylvNormalForm2 {
    pub fn word(self) -> Word {
        let mut out = vec![2; self.a];
        out.extend(std::iter::repeat_n(1, self.b));
        out.extend(std::iter::repeat_n(2, self.c));
        Word::new(out)
    }
}

/// Finds `(a, b, c)` with `w2 ≡ 2^a 1^b 2^c` by searching the triples with
/// matching content. Without any 1 the split of the 2s is not unique and
/// `a = 0` is returned.
pub fn normal_form_sylv2(w2: &[Symbol]) -> Result<SylvNormalForm2> {
    check_binary(w2)?;
    let counts = content(w2);
    let b = counts.count(1);
    let twos = counts.count(2);
    (0..=twos)
        .map(|a| SylvNormalForm2 { a, b, c: twos - a })
        .find(|nf| sylv_equiv(&nf.word(), w2))
        .ok_or_else(|| {
            Error::InvalidForm(format!(
                "no rank-2 normal form found for {}",
                Word::from(w2)
            ))
        })
}

/// Blocks: the content matrix, then `M` evaluated on `φ_ij(w)` for each
/// `i < j`. Dimension `n²`.
pub fn sylv_rep<S: Semiring>(w: &Word, n: u32) -> Result<BlockDiag<S>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut blocks = vec![c_rep(w, n)?];
    for i in 1..=n {
        for j in i + 1..=n {
            blocks.push(m_eval(&phi_ij(w, i, j)?)?);
        }
    }
    Ok(BlockDiag::new(blocks))
}

/// Reverses `w` and relabels `i ↦ n + 1 − i`. This anti-isomorphism swaps
/// the sylvester and #-sylvester congruences.
pub fn delta_antiiso(w: &[Symbol], n: u32) -> Result<Word> {
    Word::from(w).check_rank(n)?;
    Ok(w.iter().rev().map(|&s| n + 1 - s).collect())
}

/// The #-sylvester representation: `sylv_rep(δ(w))` with every block
/// anti-transposed, which turns the anti-isomorphism back into a morphism and
/// keeps blocks upper triangular.
pub fn sylvsharp_rep<S: Semiring>(w: &Word, n: u32) -> Result<BlockDiag<S>> {
    let dual = sylv_rep::<S>(&delta_antiiso(w, n)?, n)?;
    Ok(BlockDiag::new(
        dual.into_blocks()
            .iter()
            .map(Matrix::anti_transpose)
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scan::partition_conflict;
    use crate::semiring::{Natural, Tropical};
    use crate::words::enumerate_words;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn node(label: Symbol, left: Option<BstNode>, right: Option<BstNode>) -> BstNode {
        BstNode {
            label,
            left: left.map(Box::new),
            right: right.map(Box::new),
        }
    }

    fn leaf(label: Symbol) -> Option<BstNode> {
        Some(BstNode::leaf(label))
    }

    #[test]
    fn insertion_examples() {
        let t = sylv_insert(Bst::new(), 4);
        assert_eq!(t.root.as_deref(), Some(&BstNode::leaf(4)));
        assert_eq!(
            sylv_insert(t.clone(), 2).root.unwrap().left.as_deref(),
            leaf(2).as_ref()
        );
        assert_eq!(
            sylv_insert(t, 5).root.unwrap().right.as_deref(),
            leaf(5).as_ref()
        );

        let t = sylvsharp_insert(BstSharp::new(), 5);
        assert_eq!(t.root.as_deref(), Some(&BstNode::leaf(5)));
        assert_eq!(
            sylvsharp_insert(t.clone(), 5)
                .root
                .unwrap()
                .right
                .as_deref(),
            leaf(5).as_ref()
        );
        assert_eq!(
            sylvsharp_insert(t, 4).root.unwrap().left.as_deref(),
            leaf(4).as_ref()
        );
    }

    #[test]
    fn worked_example() {
        let u = w("5451761524");
        let right = node(
            4,
            Some(node(2, Some(node(1, leaf(1), None)), leaf(4))),
            Some(node(
                5,
                Some(node(5, leaf(5), None)),
                Some(node(6, None, leaf(7))),
            )),
        );
        assert_eq!(p_sylv(&u).root.as_deref(), Some(&right));
        let left = node(
            5,
            Some(node(
                4,
                Some(node(1, None, Some(node(1, None, leaf(2))))),
                leaf(4),
            )),
            Some(node(
                5,
                None,
                Some(node(7, Some(node(6, leaf(5), None)), None)),
            )),
        );
        assert_eq!(p_sylvsharp(&u).root.as_deref(), Some(&left));
        assert!(p_sylv(&Word::empty()).is_empty());
    }

    #[test]
    fn equiv_examples() {
        assert!(sylv_equiv(&w("132"), &w("312")));
        assert!(sylvsharp_equiv(&w("213"), &w("231")));
        assert!(sylv_equiv(&Word::empty(), &Word::empty()));
        assert!(sylvsharp_equiv(&Word::empty(), &Word::empty()));
        assert!(!sylv_equiv(&w("213"), &w("231")));
        assert!(!sylvsharp_equiv(&w("132"), &w("312")));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_ij(&w("12"), 1, 2).unwrap(), w("12"));
        assert_eq!(phi_ij(&w("132"), 1, 3).unwrap(), w("1221"));
        assert_eq!(phi_ij(&Word::empty(), 1, 2).unwrap(), Word::empty());
        assert_eq!(phi_ij(&w("4"), 1, 3).unwrap(), Word::empty());
        assert!(phi_ij(&w("1"), 2, 1).is_err());
    }

    #[test]
    fn m_eval_examples() {
        let a = Natural::alpha();
        let (one, zero) = (Natural::one(), Natural::zero());
        assert_eq!(
            m_eval::<Natural>(&w("2")).unwrap(),
            Matrix::from_rows(vec![
                vec![one.clone(), zero.clone()],
                vec![zero.clone(), a.clone()]
            ])
        );
        assert_eq!(
            m_eval::<Natural>(&w("12")).unwrap(),
            Matrix::from_rows(vec![vec![one, a], vec![zero.clone(), zero]])
        );
        assert_eq!(m_eval::<Natural>(&w("21")).unwrap(), MElement::I.matrix());
        assert_eq!(
            m_eval::<Tropical>(&w("13")),
            Err(Error::NotBinary { symbol: 3 })
        );
    }

    #[test]
    fn m_canonical_examples() {
        assert_eq!(
            m_canonical(&w("22")).unwrap(),
            MElement { itype: false, k: 2 }
        );
        assert_eq!(
            m_canonical(&w("121")).unwrap(),
            MElement { itype: true, k: 0 }
        );
        assert_eq!(m_canonical(&Word::empty()).unwrap(), MElement::IDENTITY);
    }

    #[test]
    fn m_multiplication_matches_matrices() {
        let elems: Vec<MElement> = (0..=5)
            .flat_map(|k| [MElement { itype: false, k }, MElement { itype: true, k }])
            .collect();
        for &x in &elems {
            for &y in &elems {
                let product = &x.matrix::<Natural>() * &y.matrix::<Natural>();
                assert_eq!((x * y).matrix::<Natural>(), product, "{x:?}·{y:?}");
                let product = &x.matrix::<Tropical>() * &y.matrix::<Tropical>();
                assert_eq!((x * y).matrix::<Tropical>(), product);
            }
        }
    }

    #[test]
    fn m_canonical_agrees_with_m_eval() {
        for u in enumerate_words(2, 8) {
            assert_eq!(
                m_canonical(&u).unwrap().matrix::<Natural>(),
                m_eval::<Natural>(&u).unwrap()
            );
        }
    }

    #[test]
    fn m_eval_factors_through_sylv() {
        assert_eq!(
            partition_conflict(
                enumerate_words(2, 7),
                |u| p_sylv(u),
                |u| (p_sylv(u), m_eval::<Natural>(u).unwrap())
            ),
            None
        );
    }

    #[test]
    fn normal_forms() {
        assert_eq!(
            normal_form_sylv2(&w("12")).unwrap(),
            SylvNormalForm2 { a: 0, b: 1, c: 1 }
        );
        assert_eq!(
            normal_form_sylv2(&w("21")).unwrap(),
            SylvNormalForm2 { a: 1, b: 1, c: 0 }
        );
        assert_eq!(
            normal_form_sylv2(&Word::empty()).unwrap(),
            SylvNormalForm2 { a: 0, b: 0, c: 0 }
        );
        assert_eq!(
            normal_form_sylv2(&w("222")).unwrap(),
            SylvNormalForm2 { a: 0, b: 0, c: 3 }
        );
        for u in enumerate_words(2, 7) {
            let nf = normal_form_sylv2(&u).unwrap();
            assert!(sylv_equiv(&nf.word(), &u));
            // With at least one 1, c counts the trailing 2s.
            if nf.b > 0 {
                assert_eq!(nf.c, u.iter().rev().take_while(|&&s| s == 2).count());
                let others = (0..=nf.a + nf.c)
                    .filter(|&a| {
                        sylv_equiv(
                            &SylvNormalForm2 {
                                a,
                                b: nf.b,
                                c: nf.a + nf.c - a,
                            }
                            .word(),
                            &u,
                        )
                    })
                    .count();
                assert_eq!(others, 1, "normal form of {u} is not unique");
            }
        }
    }

    #[test]
    fn criterion_via_phi() {
        for n in 1..=3 {
            let key = |u: &Word| {
                let mut forms = Vec::new();
                for i in 1..=n {
                    for j in i + 1..=n {
                        forms.push(p_sylv(&phi_ij(u, i, j).unwrap()));
                    }
                }
                (content(u), forms)
            };
            assert_eq!(
                partition_conflict(enumerate_words(n, 6), |u| p_sylv(u), key),
                None
            );
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_antiiso(&w("12"), 2).unwrap(), w("12"));
        assert_eq!(delta_antiiso(&Word::empty(), 3).unwrap(), Word::empty());
        assert_eq!(delta_antiiso(&w("1"), 3).unwrap(), w("3"));
        assert_eq!(delta_antiiso(&w("112"), 3).unwrap(), w("233"));
        assert!(delta_antiiso(&w("4"), 3).is_err());
    }

    #[test]
    fn delta_swaps_the_congruences() {
        for n in 1..=3 {
            assert_eq!(
                partition_conflict(
                    enumerate_words(n, 6),
                    |u| p_sylvsharp(u),
                    |u| p_sylv(&delta_antiiso(u, n).unwrap())
                ),
                None
            );
        }
    }

    #[test]
    fn sharp_letter_images() {
        let a = Natural::alpha();
        let (one, zero) = (Natural::one(), Natural::zero());
        let i_sharp =
            Matrix::from_rows(vec![vec![a, zero.clone()], vec![zero.clone(), one.clone()]]);
        let j_sharp = Matrix::from_rows(vec![vec![zero.clone(), one.clone()], vec![zero, one]]);
        let block = |s: &str| sylvsharp_rep::<Natural>(&w(s), 2).unwrap().blocks()[1].clone();
        assert_eq!(block("1"), i_sharp);
        assert_eq!(block("2"), j_sharp);
        assert_eq!(&j_sharp * &i_sharp, j_sharp);
        assert_eq!(&j_sharp * &j_sharp, j_sharp);
    }

    #[test]
    fn faithful_exhaustive() {
        for n in 1..=3 {
            let words = || enumerate_words(n, 6);
            assert_eq!(
                partition_conflict(
                    words(),
                    |u| p_sylv(u),
                    |u| sylv_rep::<Tropical>(u, n).unwrap()
                ),
                None
            );
            assert_eq!(
                partition_conflict(
                    words(),
                    |u| p_sylv(u),
                    |u| sylv_rep::<Natural>(u, n).unwrap()
                ),
                None
            );
            assert_eq!(
                partition_conflict(
                    words(),
                    |u| p_sylvsharp(u),
                    |u| sylvsharp_rep::<Tropical>(u, n).unwrap()
                ),
                None
            );
            assert_eq!(
                partition_conflict(
                    words(),
                    |u| p_sylvsharp(u),
                    |u| sylvsharp_rep::<Natural>(u, n).unwrap()
                ),
                None
            );
        }
    }

    #[test]
    fn rep_shapes() {
        for rep in [
            sylv_rep::<Tropical>(&w("3121"), 3).unwrap(),
            sylvsharp_rep::<Tropical>(&w("3121"), 3).unwrap(),
        ] {
            assert_eq!(rep.dim(), 9);
            assert!(rep.is_upper_triangular());
        }
        assert!(sylv_rep::<Natural>(&Word::empty(), 3)
            .unwrap()
            .is_identity());
        assert!(sylvsharp_rep::<Natural>(&Word::empty(), 3)
            .unwrap()
            .is_identity());
        assert_ne!(
            sylv_rep::<Tropical>(&w("122"), 2).unwrap(),
            sylv_rep::<Tropical>(&w("212"), 2).unwrap()
        );
    }

    fn word_strategy(n: u32, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(1..=n, 0..=max_len).prop_map(Word::new)
    }

    proptest! {
        #[test]
        fn trees_stay_valid_and_readings_rebuild(word in word_strategy(6, 25)) {
            let t = p_sylv(&word);
            prop_assert!(t.is_valid());
            prop_assert_eq!(p_sylv(&t.reading()), t);
            let s = p_sylvsharp(&word);
            prop_assert!(s.is_valid());
            prop_assert_eq!(p_sylvsharp(&s.reading()), s);
        }

        #[test]
        fn reps_are_morphisms(u in word_strategy(4, 10), v in word_strategy(4, 10)) {
            let uv = u.concat(&v);
            let lhs = sylv_rep::<Natural>(&uv, 4).unwrap();
            let rhs = &sylv_rep::<Natural>(&u, 4).unwrap() * &sylv_rep::<Natural>(&v, 4).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = sylvsharp_rep::<Tropical>(&uv, 4).unwrap();
            let rhs = &sylvsharp_rep::<Tropical>(&u, 4).unwrap() * &sylvsharp_rep::<Tropical>(&v, 4).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn m_canonical_is_a_morphism(u in word_strategy(2, 12), v in word_strategy(2, 12)) {
            prop_assert_eq!(
                m_canonical(&u.concat(&v)).unwrap(),
                m_canonical(&u).unwrap() * m_canonical(&v).unwrap()
            );
        }
    }
}
