use proptest::prelude::*;

use plactic::family::{CanonicalForm, MonoidFamily};
use plactic::identities::{Identity, Verdict};
use plactic::{Error, Tropical, Word};

fn word_strategy(n: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=n, 0..=max_len).prop_map(Word::new)
}

fn family_strategy() -> impl Strategy<Value = MonoidFamily> {
    prop::sample::select(MonoidFamily::ALL.to_vec())
}

proptest! {
    #[test]
    fn json_round_trip(family in family_strategy(), u in word_strategy(6, 12)) {
        let form = family.canonical(&u);
        let json = form.to_json();
        prop_assert_eq!(json["empty"].as_bool(), Some(u.is_empty()));
        let back = CanonicalForm::from_json(&json).unwrap();
        prop_assert_eq!(back, form);
    }

    #[test]
    fn reading_words_are_normal_forms(family in family_strategy(), u in word_strategy(5, 10)) {
        let form = family.canonical(&u);
        prop_assert!(form.is_valid());
        if let Some(r) = form.reading() {
            prop_assert!(family.equiv(&r, &u));
        }
    }

    #[test]
    fn congruence_is_compatible(family in family_strategy(), u in word_strategy(3, 5), v in word_strategy(3, 5), x in word_strategy(3, 3)) {
        if family.equiv(&u, &v) {
            prop_assert!(family.equiv(&x.concat(&u), &x.concat(&v)));
            prop_assert!(family.equiv(&u.concat(&x), &v.concat(&x)));
        }
    }
}

#[test]
fn malformed_forms_are_rejected() {
    let bad = serde_json::json!({"kind": "stalactic", "columns": [[1, 1], [1, 2]]});
    assert!(CanonicalForm::from_json(&bad).is_err());
    let bad = serde_json::json!({"kind": "quasi-ribbon", "rows": [[2, 1]]});
    assert!(CanonicalForm::from_json(&bad).is_err());
    assert!(CanonicalForm::from_json(&serde_json::json!({"kind": "plactic"})).is_err());
}

#[test]
fn representations_check_rank() {
    let u: Word = "1,4".parse().unwrap();
    for family in MonoidFamily::ALL {
        assert!(
            family.representation::<Tropical>(&u, 3).is_err(),
            "{family}"
        );
        assert!(family.representation::<Tropical>(&u, 4).is_ok(), "{family}");
    }
}

#[test]
fn verdict_json() {
    let id: Identity = "xyx=yxx".parse().unwrap();
    let v = Verdict::exact(MonoidFamily::Taig, &id).unwrap().to_json();
    assert_eq!(v["holds"], true);
    assert_eq!(v["decider"], "exact");
    assert!(v["counterexample"].is_null());
    assert!(matches!(
        Verdict::exact(MonoidFamily::Rps, &id),
        Err(Error::NoExactDecider(_))
    ));
    let b = Verdict::bounded(MonoidFamily::Hypo, &"xy=yx".parse().unwrap(), 2, 1)
        .unwrap()
        .to_json();
    assert_eq!(b["holds"], false);
    assert_eq!(b["counterexample"], serde_json::json!({"x": "1", "y": "2"}));
}
