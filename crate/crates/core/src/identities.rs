//! Semigroup identities: parsing, checking in finite monoids, exact deciders
//! for the varieties generated by the plactic-like monoids, and bounded
//! substitution search in the monoids themselves.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::family::MonoidFamily;
use crate::semiring::{Matrix, Tropical};
use crate::sylvester::MElement;
use crate::words::{
    content, enumerate_words, reverse, scattered_subwords, sigma, Content, Symbol, Word,
};

pub use crate::monoid::FiniteMonoid;

/// Symbolic exponent `Σ c_x k_x`, one coefficient per variable.
pub type LinearForm = Content;

/// Most variables [`decide_sylv`] will enumerate type subsets for.
pub const MAX_SYLV_VARIABLES: usize = 8;

const DEFAULT_NAMES: &str = "xyztuvwabcdefghijklmnopqrs";

/// A formal equality `lhs = rhs` of non-empty words over variables
/// `1..=k`, where variable `v` is displayed as `names[v - 1]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Identity {
    lhs: Word,
    rhs: Word,
    names: Vec<char>,
}

impl Identity {
    /// Builds an identity from words over arbitrary symbols, renumbering
    /// variables by first appearance and naming them `x, y, z, t, …`.
    pub fn new(lhs: Word, rhs: Word) -> Result<Self> {
        let mut order: Vec<Symbol> = Vec::new();
        for &s in lhs.iter().chain(rhs.iter()) {
            if !order.contains(&s) {
                order.push(s);
            }
        }
        if order.len() > DEFAULT_NAMES.len() {
            return Err(Error::ParseIdentity {
                input: format!("{lhs}={rhs}"),
                reason: "too many variables".to_string(),
            });
        }
        let names = DEFAULT_NAMES.chars().take(order.len()).collect();
        Identity::build(lhs, rhs, &order, names)
    }

    fn build(lhs: Word, rhs: Word, order: &[Symbol], names: Vec<char>) -> Result<Self> {
        if lhs.is_empty() || rhs.is_empty() {
            return Err(Error::ParseIdentity {
                input: format!("{lhs}={rhs}"),
                reason: "both sides must be non-empty".to_string(),
            });
        }
        let relabel = |w: &Word| -> Word {
            w.iter()
                .map(|s| order.iter().position(|o| o == s).expect("collected above") as Symbol + 1)
                .collect()
        };
        Ok(Identity {
            lhs: relabel(&lhs),
            rhs: relabel(&rhs),
            names,
        })
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[char] {
        &self.names
    }

    /// Both sides reversed.
    pub fn reversed(&self) -> Identity {
        Identity {
            lhs: reverse(&self.lhs),
            rhs: reverse(&self.rhs),
            names: self.names.clone(),
        }
    }

    fn side_string(&self, side: &Word) -> String {
        side.iter().map(|&v| self.names[v as usize - 1]).collect()
    }
}

impl FromStr for Identity {
    type Err = Error;

    /// Lowercase letters are variables; whitespace and `·` are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::ParseIdentity {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '·')
            .collect();
        let (l, r) = cleaned.split_once('=').ok_or_else(|| err("missing '='"))?;
        if r.contains('=') {
            return Err(err("more than one '='"));
        }
        if let Some(bad) = cleaned
            .chars()
            .find(|c| *c != '=' && !c.is_ascii_lowercase())
        {
            return Err(err(&format!("unexpected character {bad:?}")));
        }
        let mut names: Vec<char> = Vec::new();
        for c in l.chars().chain(r.chars()) {
            if !names.contains(&c) {
                names.push(c);
            }
        }
        let to_word = |side: &str| -> Word {
            side.chars()
                .map(|c| names.iter().position(|&n| n == c).expect("collected above") as Symbol + 1)
                .collect()
        };
        let order: Vec<Symbol> = (1..=names.len() as Symbol).collect();
        Identity::build(to_word(l), to_word(r), &order, names.clone())
            .map_err(|_| err("both sides must be non-empty"))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}={}",
            self.side_string(&self.lhs),
            self.side_string(&self.rhs)
        )
    }
}

pub fn is_balanced(id: &Identity) -> bool {
    content(&id.lhs) == content(&id.rhs)
}

/// Calls `visit` with every assignment `0..size` to `vars` variables; stops
/// early when it returns `false`. Returns whether every call returned `true`.
fn for_each_assignment(vars: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if size == 0 {
        return vars == 0 && visit(&[]);
    }
    let mut a = vec![0usize; vars];
    loop {
        if !visit(&a) {
            return false;
        }
        // Lexicographic order: the last variable varies fastest.
        let mut i = vars;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            a[i] += 1;
            if a[i] < size {
                break;
            }
            a[i] = 0;
        }
    }
}

/// Whether every assignment of monoid elements to the variables, the
/// identity element included, makes both sides equal.
pub fn holds_in_finite(id: &Identity, m: &FiniteMonoid) -> bool {
    let eval = |side: &Word, a: &[usize]| m.product(side.iter().map(|&v| a[v as usize - 1]));
    for_each_assignment(id.num_vars(), m.size(), |a| {
        eval(&id.lhs, a) == eval(&id.rhs, a)
    })
}

/// Balanced, with the same scattered subwords of length at most 2.
pub fn decide_hypo(id: &Identity) -> bool {
    is_balanced(id)
        && (1..=2).all(|k| scattered_subwords(&id.lhs, k) == scattered_subwords(&id.rhs, k))
}

/// Balanced, with the same order of last occurrences.
pub fn decide_stal(id: &Identity) -> bool {
    is_balanced(id) && sigma(&id.lhs) == sigma(&id.rhs)
}

/// The taiga and stalactic monoids generate the same variety.
pub fn decide_taig(id: &Identity) -> bool {
    decide_stal(id)
}

/// Symbolic value of `side` in `M` when the variables in `itype` (a bit
/// mask) are sent to `I·J^{k_x}` and the rest to `J^{k_x}`: the product is
/// `I·J^e` with `e` summing `k` over the suffix from the last `I`-type
/// letter, or `J^e` with `e` summing over the whole side.
fn sylv_symbolic(side: &[Symbol], itype: u32) -> (bool, LinearForm) {
    let last = side.iter().rposition(|&v| itype >> (v - 1) & 1 == 1);
    match last {
        Some(p) => (true, content(&side[p..])),
        None => (false, content(side)),
    }
}

/// Decides whether the identity holds in the sylvester monoids, by
/// evaluating both sides symbolically in `M` for every choice of which
/// variables take `I`-type values.
pub fn decide_sylv(id: &Identity) -> Result<bool> {
    let k = id.num_vars();
    if k > MAX_SYLV_VARIABLES {
        return Err(Error::TooManyVariables {
            count: k,
            max: MAX_SYLV_VARIABLES,
        });
    }
    Ok((0..1u32 << k).all(|t| sylv_symbolic(&id.lhs, t) == sylv_symbolic(&id.rhs, t)))
}

/// The #-sylvester monoid is anti-isomorphic to the sylvester one.
pub fn decide_sylvsharp(id: &Identity) -> Result<bool> {
    decide_sylv(&id.reversed())
}

pub fn decide_baxt(id: &Identity) -> Result<bool> {
    Ok(decide_sylv(id)? && decide_sylvsharp(id)?)
}

/// Exact decision for every family except rPS, whose variety depends on the
/// rank.
pub fn decide_exact(family: MonoidFamily, id: &Identity) -> Result<bool> {
    match family {
        MonoidFamily::Hypo => Ok(decide_hypo(id)),
        MonoidFamily::Stal => Ok(decide_stal(id)),
        MonoidFamily::Taig => Ok(decide_taig(id)),
        MonoidFamily::Sylv => decide_sylv(id),
        MonoidFamily::SylvSharp => decide_sylvsharp(id),
        MonoidFamily::Baxt => decide_baxt(id),
        MonoidFamily::Rps => Err(Error::NoExactDecider(family.name().to_string())),
    }
}

/// Searches assignments of `J^k` and `I·J^k` with `k ≤ max_exp` for one
/// under which the two sides give different tropical matrices.
pub fn refute_in_m(id: &Identity, max_exp: usize) -> Option<Vec<MElement>> {
    let elements: Vec<MElement> = (0..=max_exp)
        .flat_map(|k| [MElement { itype: false, k }, MElement { itype: true, k }])
        .collect();
    let matrices: Vec<Matrix<Tropical>> = elements.iter().map(|e| e.matrix()).collect();
    let eval = |side: &Word, a: &[usize]| {
        side.iter().fold(Matrix::identity(2), |acc, &v| {
            &acc * &matrices[a[v as usize - 1]]
        })
    };
    let mut found = None;
    for_each_assignment(id.num_vars(), elements.len(), |a| {
        if eval(&id.lhs, a) == eval(&id.rhs, a) {
            true
        } else {
            found = Some(a.iter().map(|&i| elements[i]).collect());
            false
        }
    });
    found
}

/// A substitution of words for the variables of an identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Substitution {
    pub assignments: Vec<(char, Word)>,
}

impl Substitution {
    pub fn apply(&self, side: &Word) -> Word {
        let mut out = Word::empty();
        for &v in side.iter() {
            out.extend_from(&self.assignments[v as usize - 1].1);
        }
        out
    }

    /// `{"x": "12", ...}`, with `"ε"` for the empty word.
    pub fn to_json(&self) -> Value {
        Value::Object(
            self.assignments
                .iter()
                .map(|(c, w)| (c.to_string(), Value::from(w.to_string())))
                .collect(),
        )
    }
}

/// Tries every substitution of words over `[n]` of length at most `max_len`
/// (the empty word included) and returns the first one under which the two
/// sides are not congruent in `family`.
pub fn check_bounded(
    id: &Identity,
    family: MonoidFamily,
    n: u32,
    max_len: usize,
) -> Result<Option<Substitution>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let pool: Vec<Word> = enumerate_words(n, max_len).collect();
    let mut found = None;
    for_each_assignment(id.num_vars(), pool.len(), |a| {
        let sub = Substitution {
            assignments: id
                .names
                .iter()
                .zip(a)
                .map(|(&c, &i)| (c, pool[i].clone()))
                .collect(),
        };
        if family.equiv(&sub.apply(&id.lhs), &sub.apply(&id.rhs)) {
            true
        } else {
            found = Some(sub);
            false
        }
    });
    Ok(found)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decider {
    Exact,
    Bounded,
}

/// The outcome of checking one identity in one family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub identity: Identity,
    pub family: MonoidFamily,
    pub decider: Decider,
    pub holds: bool,
    pub counterexample: Option<Substitution>,
}

impl Verdict {
    pub fn exact(family: MonoidFamily, id: &Identity) -> Result<Self> {
        Ok(Verdict {
            identity: id.clone(),
            family,
            decider: Decider::Exact,
            holds: decide_exact(family, id)?,
            counterexample: None,
        })
    }

    pub fn bounded(family: MonoidFamily, id: &Identity, n: u32, max_len: usize) -> Result<Self> {
        let counterexample = check_bounded(id, family, n, max_len)?;
        Ok(Verdict {
            identity: id.clone(),
            family,
            decider: Decider::Bounded,
            holds: counterexample.is_none(),
            counterexample,
        })
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "identity": self.identity.to_string(),
            "monoid": self.family.name(),
            "decider": self.decider,
            "holds": self.holds,
            "counterexample": self.counterexample.as_ref().map(Substitution::to_json),
        })
    }
}

/// Variable-indexed map of suffix contents, used as an alternative
/// description of the sylvester variety in tests.
#[doc(hidden)]
pub fn suffix_contents(side: &[Symbol]) -> BTreeMap<Symbol, Content> {
    let mut out = BTreeMap::new();
    for (p, &v) in side.iter().enumerate() {
        out.insert(v, content(&side[p..]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypoplactic::HElement;
    use crate::stalactic::FElement;
    use crate::taiga::TElement;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn id(s: &str) -> Identity {
        s.parse().unwrap()
    }

    fn random_identity(rng: &mut ChaCha8Rng) -> Identity {
        let vars = rng.gen_range(1..=3u32);
        let side = |rng: &mut ChaCha8Rng| -> Word {
            let len = rng.gen_range(1..=6);
            (0..len).map(|_| rng.gen_range(1..=vars)).collect()
        };
        let lhs = side(rng);
        let rhs = if rng.gen_bool(0.6) {
            // Balanced: a shuffle of the left side.
            let mut v = lhs.to_vec();
            for i in (1..v.len()).rev() {
                v.swap(i, rng.gen_range(0..=i));
            }
            Word::new(v)
        } else {
            side(rng)
        };
        Identity::new(lhs, rhs).unwrap()
    }

    #[test]
    fn parsing_and_display() {
        let i = id("xyzxty=yxzxty");
        assert_eq!(i.num_vars(), 4);
        assert_eq!(i.lhs(), &Word::from([1, 2, 3, 1, 4, 2]));
        assert_eq!(i.to_string(), "xyzxty=yxzxty");
        assert_eq!(
            id("xayb · xy · cxdy = xayb · yx · cxdy").to_string(),
            "xaybxycxdy=xaybyxcxdy"
        );
        assert!("xy".parse::<Identity>().is_err());
        assert!("=x".parse::<Identity>().is_err());
        assert!("x=y=z".parse::<Identity>().is_err());
        assert!("xY=yx".parse::<Identity>().is_err());
        let built = Identity::new(Word::from([5, 3]), Word::from([3, 5])).unwrap();
        assert_eq!(built.to_string(), "xy=yx");
        assert_eq!(id("xy=yx").reversed().to_string(), "yx=xy");
    }

    #[test]
    fn balance() {
        assert!(is_balanced(&id("xyx=yxx")));
        assert!(!is_balanced(&id("xyxzx=xyzx")));
        assert!(is_balanced(&id("x=x")));
    }

    #[test]
    fn finite_monoid_examples() {
        let f = FiniteMonoid::from_elements::<FElement>().unwrap();
        let h = FiniteMonoid::from_elements::<HElement>().unwrap();
        assert!(holds_in_finite(&id("xx=x"), &f));
        assert!(holds_in_finite(&id("xyx=yx"), &f));
        assert!(holds_in_finite(&id("xyxy=yxyx"), &h));
        assert!(!holds_in_finite(&id("xy=yx"), &f));
    }

    #[test]
    fn exact_examples() {
        assert!(decide_hypo(&id("xyxy=yxyx")));
        assert!(!decide_hypo(&id("xyxzx=xyzx")));
        assert!(!decide_hypo(&id("xy=yx")));
        assert!(decide_stal(&id("xyx=yxx")));
        assert!(!decide_stal(&id("xyxy=yxyx")));
        assert!(!decide_stal(&id("xy=yx")));
        assert!(decide_sylv(&id("xyzxty=yxzxty")).unwrap());
        assert!(decide_sylv(&id("xyxy=yxxy")).unwrap());
        assert!(!decide_sylv(&id("xy=yx")).unwrap());
        assert!(decide_sylvsharp(&id("ytxzyx=ytxzxy")).unwrap());
        assert!(decide_sylvsharp(&id("x=x")).unwrap());
        assert!(!decide_sylvsharp(&id("xyzxty=yxzxty")).unwrap());
        assert!(decide_baxt(&id("xaybxycxdy=xaybyxcxdy")).unwrap());
        assert!(decide_baxt(&id("xaybxycydx=xaybyxcydx")).unwrap());
        assert!(decide_baxt(&id("xyxyxy=xyyxxy")).unwrap());
        assert_eq!(
            decide_sylv(&id("abcdefghi=ihgfedcba")),
            Err(Error::TooManyVariables { count: 9, max: 8 })
        );
        assert!(matches!(
            decide_exact(MonoidFamily::Rps, &id("x=x")),
            Err(Error::NoExactDecider(_))
        ));
    }

    #[test]
    fn bounded_examples() {
        assert_eq!(
            check_bounded(&id("xyx=yxx"), MonoidFamily::Stal, 2, 2).unwrap(),
            None
        );
        let cex = check_bounded(&id("xy=yx"), MonoidFamily::Sylv, 2, 1)
            .unwrap()
            .unwrap();
        assert_eq!(
            cex.assignments,
            vec![('x', Word::from([1])), ('y', Word::from([2]))]
        );
        assert_eq!(cex.to_json(), serde_json::json!({"x": "1", "y": "2"}));
        assert_eq!(
            check_bounded(&id("xyxyxy=xyxyyx"), MonoidFamily::Rps, 2, 2).unwrap(),
            None
        );
        assert!(check_bounded(&id("xyx=yxx"), MonoidFamily::Rps, 3, 2)
            .unwrap()
            .is_some());
    }

    #[test]
    fn verdict_json() {
        let v = Verdict::exact(MonoidFamily::Stal, &id("xyx=yxx")).unwrap();
        assert_eq!(
            v.to_json(),
            serde_json::json!({
                "identity": "xyx=yxx", "monoid": "stal", "decider": "exact",
                "holds": true, "counterexample": null
            })
        );
        let v = Verdict::bounded(MonoidFamily::Sylv, &id("xy=yx"), 2, 1).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.to_json()["counterexample"],
            serde_json::json!({"x": "1", "y": "2"})
        );
    }

    /// Balanced, same last-occurrence order, and for each variable the
    /// content of the suffix starting at its last occurrence agrees.
    fn sylv_oracle(id: &Identity) -> bool {
        is_balanced(id) && suffix_contents(id.lhs()) == suffix_contents(id.rhs())
    }

    #[test]
    fn random_cross_validation() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let h = FiniteMonoid::from_elements::<HElement>().unwrap();
        let f = FiniteMonoid::from_elements::<FElement>().unwrap();
        let t = FiniteMonoid::from_elements::<TElement>().unwrap();
        for _ in 0..1000 {
            let i = random_identity(&mut rng);
            let balanced = is_balanced(&i);
            assert_eq!(decide_hypo(&i), balanced && holds_in_finite(&i, &h), "{i}");
            assert_eq!(decide_stal(&i), balanced && holds_in_finite(&i, &f), "{i}");
            if balanced {
                assert_eq!(holds_in_finite(&i, &t), holds_in_finite(&i, &f), "{i}");
            }
            let sylv = decide_sylv(&i).unwrap();
            assert_eq!(sylv, refute_in_m(&i, 3).is_none(), "{i}");
            assert_eq!(sylv, sylv_oracle(&i), "{i}");
            if decide_stal(&i) {
                assert!(balanced);
            }
        }
    }

    #[test]
    fn true_verdicts_survive_bounded_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 40 {
            let i = random_identity(&mut rng);
            for family in [
                MonoidFamily::Hypo,
                MonoidFamily::Stal,
                MonoidFamily::Taig,
                MonoidFamily::Sylv,
                MonoidFamily::SylvSharp,
                MonoidFamily::Baxt,
            ] {
                if decide_exact(family, &i).unwrap() {
                    checked += 1;
                    assert_eq!(
                        check_bounded(&i, family, 2, 3).unwrap(),
                        None,
                        "{i} in {family}"
                    );
                }
            }
        }
    }

    #[test]
    fn false_verdicts_are_refuted_at_small_scale() {
        // The exact deciders and the bounded search should agree on short
        // identities once the substitution space is large enough.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let i = random_identity(&mut rng);
            if i.num_vars() > 2 {
                continue;
            }
            for family in [MonoidFamily::Hypo, MonoidFamily::Stal, MonoidFamily::Sylv] {
                let exact = decide_exact(family, &i).unwrap();
                let bounded = check_bounded(&i, family, 3, 2).unwrap().is_none();
                assert_eq!(exact, bounded, "{i} in {family}");
            }
        }
    }
}
