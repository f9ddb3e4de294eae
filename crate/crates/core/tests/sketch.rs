use proptest::prelude::*;
use setcat::fincat::{find_isomorphism, parallel_pair, FinFunctor};
use setcat::gen::{category_corpus, Gen};
use setcat::sketch::{
    cat_from_model, cat_sketch, check_lemma51, factorize_model_morphism, nerve3, nerve3_map, preorder_reflection,
    vertex_reflection, ModelReflection, Preorder, SketchError,
};
use std::sync::Arc;

#[test]
fn nerves_round_trip_over_the_corpus() {
    let sketch = cat_sketch();
    for c in category_corpus() {
        let n = nerve3(&c);
        assert!(sketch.is_model(&n), "{c}");
        let back = Arc::new(cat_from_model(&n).unwrap());
        assert!(find_isomorphism(&back, &Arc::new(c.clone())).is_some(), "{c}");
    }
}

#[test]
fn nerve_is_reflected_iff_preorder() {
    let r = vertex_reflection();
    for c in category_corpus() {
        assert_eq!(r.in_subcategory(&nerve3(&c)), c.is_preorder(), "{c}");
    }
}

#[test]
fn preorder_reflection_matches_hom_oracle() {
    let models = ModelReflection::default();
    for c in category_corpus() {
        let p = preorder_reflection(&c).unwrap();
        assert_eq!(p, Preorder::from_homs(&c));
        let certified = models.reflect_model(&nerve3(&c)).unwrap();
        assert_eq!(certified.certificate.len(), 2);
    }
    let pp = preorder_reflection(&parallel_pair()).unwrap();
    assert!(pp.le(0, 1) && !pp.le(1, 0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn nerve_of_a_functor_is_natural(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let c = gen.shape(3);
        let d = gen.shape(3);
        let f: FinFunctor = gen.fin_functor(&c, &d);
        let n = nerve3_map(&f);
        prop_assert_eq!(n.source(), &nerve3(&c));
        prop_assert_eq!(n.target(), &nerve3(&d));
        let models = factorize_model_morphism(&n, &cat_sketch());
        // the image of a functor need not be a category
        match models {
            Ok(m) => prop_assert!(cat_sketch().is_model(&m.factorization.mid)),
            Err(e) => prop_assert!(matches!(e, SketchError::MidNotModel { .. }), "{}", e),
        }
    }

    #[test]
    fn product_limits_preserve_images(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let shape = Arc::new(setcat::fincat::discrete(gen.below(4)));
        let phi = gen.morphism(&shape, 3);
        prop_assert!(check_lemma51(&phi).holds());
    }

    #[test]
    fn image_embeds_in_the_limit_of_the_image(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let shape = gen.shape(4);
        let phi = gen.morphism(&shape, 3);
        let report = check_lemma51(&phi);
        prop_assert!(report.image <= report.lim_d && report.lim_d <= report.lim_g);
        prop_assert_eq!(report.holds(), report.image == report.lim_d);
    }
}
