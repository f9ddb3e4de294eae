use proptest::prelude::*;
use serde_json::json;
use setcat::gen::{category_corpus, Gen};
use setcat::json::{
    category_to_json, functor_to_json, nat_trans_to_json, parse_category, parse_functor, parse_preorder, preorder_to_json,
    JsonError, Loader,
};
use setcat::sketch::Preorder;
use std::sync::Arc;

#[test]
fn categories_round_trip() {
    for c in category_corpus() {
        let v = category_to_json(&c);
        assert_eq!(parse_category(&v, "").unwrap(), c);
    }
}

#[test]
fn non_associative_table_is_rejected() {
    let v = json!({
        "objects": ["0"],
        "morphisms": [{"id": "1", "dom": "0", "cod": "0"}, {"id": "a", "dom": "0", "cod": "0"}, {"id": "b", "dom": "0", "cod": "0"}],
        "identities": {"0": "1"},
        "compose": [
            ["1", "1", "1"], ["a", "1", "a"], ["b", "1", "b"], ["1", "a", "a"], ["1", "b", "b"],
            ["a", "a", "b"], ["a", "b", "a"], ["b", "a", "b"], ["b", "b", "a"]
        ]
    });
    let err = parse_category(&v, "").unwrap_err();
    assert!(err.is_validation(), "{err}");
}

#[test]
fn malformed_input_reports_a_pointer() {
    let v = json!({"objects": ["0"], "morphisms": true});
    match parse_category(&v, "") {
        Err(JsonError::Malformed { pointer, .. }) => assert_eq!(pointer, "/morphisms"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn preorders_round_trip() {
    let names = || vec!["a".to_string(), "b".to_string(), "c".to_string()];
    let p = Preorder::new(names(), &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(parse_preorder(&preorder_to_json(&p), "").unwrap(), p);
    // reflexive pairs may be left out of the JSON
    let short = json!({"elements": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"], ["a", "c"]]});
    assert_eq!(parse_preorder(&short, "").unwrap(), p);
    assert!(Preorder::new(names(), &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn functors_round_trip(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let shape = gen.shape(3);
        let f = gen.functor(&shape, 3);
        let v = functor_to_json(&f, category_to_json(&shape));
        let mut loader = Loader::new(".");
        let back = loader.functor(&v, "").unwrap();
        prop_assert_eq!(back.sizes(), f.sizes());
        prop_assert_eq!(back.maps(), f.maps());
        let again = parse_functor(&Arc::new((**back.shape()).clone()), &v, "").unwrap();
        prop_assert_eq!(again.maps(), f.maps());
    }

    #[test]
    fn nat_trans_round_trip(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let shape = gen.shape(3);
        let t = gen.morphism(&shape, 3);
        let v = nat_trans_to_json(&t, &category_to_json(&shape));
        let back = Loader::new(".").nat_trans(&v, "").unwrap();
        prop_assert_eq!(back.components(), t.components());
        prop_assert_eq!(back.source().maps(), t.source().maps());
    }
}
