use proptest::prelude::*;
use setcat::fincat::FinFunctor;
use setcat::gen::Gen;
use setcat::kan::{check_jointly_monic, hom_counts, restrict, unit_family, verify_triangle_identities, Kan, LanAdjunction, RanAdjunction};
use setcat::setval::{func, FinSet, SetFunctor};
use setcat::sketch::{cat_sketch, delta3op, nerve3, vertex_inclusion};
use std::sync::Arc;

fn random_k(gen: &mut Gen) -> FinFunctor {
    let a = gen.shape(3);
    let b = gen.shape(3);
    gen.fin_functor(&b, &a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn triangle_identities(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let k = random_k(&mut gen);
        let (a, b) = (k.target().clone(), k.source().clone());
        let on_a: Vec<SetFunctor> = (0..3).map(|_| gen.functor(&a, 2)).collect();
        let on_b: Vec<SetFunctor> = (0..3).map(|_| gen.functor(&b, 2)).collect();
        prop_assert!(verify_triangle_identities(&RanAdjunction::new(k.clone()), &on_a, &on_b).passed());
        prop_assert!(verify_triangle_identities(&LanAdjunction::new(k), &on_b, &on_a).passed());
    }

    #[test]
    fn hom_set_bijection(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let k = random_k(&mut gen);
        let (a, b) = (k.target().clone(), k.source().clone());
        let s = gen.functor(&a, 2);
        let t = gen.functor(&b, 2);
        if let Some(c) = hom_counts(&RanAdjunction::new(k.clone()), &s, &t, 5000) {
            prop_assert_eq!(c.left, c.right);
        }
        if let Some(c) = hom_counts(&LanAdjunction::new(k), &t, &s, 5000) {
            prop_assert_eq!(c.left, c.right);
        }
    }

    #[test]
    fn unit_injective_iff_jointly_monic(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let k = random_k(&mut gen);
        let kan = Kan::new(k);
        let a = kan.functor().target().clone();
        let s = gen.functor(&a, 3);
        let theta = kan.unit_ran(&s);
        for o in 0..a.object_count() {
            prop_assert_eq!(
                func::is_injective(theta.component(o)),
                check_jointly_monic(&unit_family(&kan, &s, o), s.size(o))
            );
        }
    }

    #[test]
    fn ran_along_vertices_is_a_model(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let kan = Kan::new(vertex_inclusion());
        let t = SetFunctor::constant(kan.functor().source(), FinSet::new(gen.below(4)));
        prop_assert!(cat_sketch().is_model(&kan.ran(&t)));
    }

    #[test]
    fn restriction_of_a_nerve_is_its_objects(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let c = gen.shape(3);
        let n = nerve3(&c);
        let r = restrict(&vertex_inclusion(), &n);
        prop_assert_eq!(r.sizes(), vec![c.object_count()]);
        // Ran of the objects is the codiscrete nerve, so the unit is the
        // comparison with the codiscrete category
        let unit = Kan::new(vertex_inclusion()).unit_ran(&n);
        prop_assert!(Arc::ptr_eq(unit.shape(), &delta3op()));
        prop_assert_eq!(unit.is_mono(), c.is_preorder());
    }
}
