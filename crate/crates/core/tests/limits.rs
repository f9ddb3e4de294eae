use proptest::prelude::*;
use setcat::fincat::{cospan, parallel_pair, product_category, two};
use setcat::gen::Gen;
use setcat::limits::{colimit, colimit_comparison, filtered_colimit, is_limiting_cone, limit, pullback, Cocone, Cone};
use setcat::setval::{func, FinSet, SetFunctor};
use std::sync::Arc;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn limit_cone_is_universal(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let shape = gen.shape(3);
        let d = gen.functor(&shape, 3);
        let lim = limit(&d);
        lim.cone.check(&d).unwrap();
        prop_assert!(is_limiting_cone(&lim.cone, &d).unwrap());
        // brute force over all tuples
        let brute = (0..shape.object_count())
            .map(|o| d.size(o))
            .fold(vec![vec![]], |acc: Vec<Vec<usize>>, n| {
                acc.into_iter().flat_map(|t| (0..n).map(move |x| { let mut t = t.clone(); t.push(x); t })).collect()
            })
            .into_iter()
            .filter(|t| (0..shape.morphism_count()).all(|f| d.map(f)[t[shape.dom(f)]] == t[shape.cod(f)]))
            .count();
        prop_assert_eq!(lim.size(), brute);
        let point = Cone { apex: FinSet::new(lim.size()), legs: lim.cone.legs.clone() };
        prop_assert!(func::is_identity(&lim.factor(&point)));
    }

    #[test]
    fn colimit_factors_cocones(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let shape = gen.shape(3);
        let d = gen.functor(&shape, 3);
        let c = colimit(&d);
        c.cocone.check(&d).unwrap();
        // the terminal cocone factors through the colimit
        let point = Cocone { nadir: FinSet::new(1), legs: (0..shape.object_count()).map(|o| vec![0; d.size(o)]).collect() };
        let total: usize = d.sizes().iter().sum();
        let u = c.factor(&point);
        prop_assert_eq!(u.len(), c.size());
        prop_assert!(c.size() <= total);
    }

    #[test]
    fn filtered_and_general_colimits_agree(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let shape = gen.pseudo_filtered(4);
        let d = gen.functor(&shape, 3);
        let general = colimit(&d);
        let filtered = filtered_colimit(&d).unwrap();
        prop_assert!(colimit_comparison(&general, &filtered).is_some());
    }

    #[test]
    fn surjections_are_stable_under_pullback(seed in any::<u64>()) {
        let mut gen = Gen::new(seed);
        let z = 1 + gen.below(3);
        let x = z + gen.below(3);
        let mut f: Vec<usize> = (0..x).map(|i| if i < z { i } else { gen.below(z) }).collect();
        f.reverse();
        let y = gen.below(4);
        let g: Vec<usize> = (0..y).map(|_| gen.below(z)).collect();
        let pb = pullback(&f, &g, z);
        prop_assert!(func::is_surjective(&pb.cone.legs[1], y));
    }

    #[test]
    fn limits_commute_with_limits(seed in any::<u64>()) {
        // a diagram on cospan × cospan, as one limit and as a limit of row limits
        let mut gen = Gen::new(seed);
        let c = Arc::new(cospan());
        let shape = Arc::new(product_category(&c, &c));
        let d = gen.functor(&shape, 2);
        let arrow = |a: usize, b: usize| {
            (0..shape.morphism_count()).find(|&g| shape.dom(g) == a && shape.cod(g) == b).unwrap()
        };
        let rows: Vec<_> = (0..3)
            .map(|i| {
                let sets = (0..3).map(|j| FinSet::new(d.size(i * 3 + j))).collect();
                let maps = (0..c.morphism_count()).map(|f| d.map(arrow(i * 3 + c.dom(f), i * 3 + c.cod(f))).to_vec()).collect();
                limit(&SetFunctor::new(c.clone(), sets, maps).unwrap())
            })
            .collect();
        let maps = (0..c.morphism_count())
            .map(|f| {
                let (i, k) = (c.dom(f), c.cod(f));
                rows[i]
                    .tuples
                    .iter()
                    .map(|t| {
                        let image: Vec<usize> = (0..3).map(|j| d.map(arrow(i * 3 + j, k * 3 + j))[t[j]]).collect();
                        rows[k].position(&image).unwrap()
                    })
                    .collect()
            })
            .collect();
        let iterated = SetFunctor::new(c.clone(), rows.iter().map(|r| FinSet::new(r.size())).collect(), maps).unwrap();
        prop_assert_eq!(limit(&iterated).size(), limit(&d).size());
    }
}

#[test]
fn named_shapes() {
    let shape = Arc::new(parallel_pair());
    let d = SetFunctor::new(shape, vec![FinSet::new(3), FinSet::new(2)], vec![vec![0, 1, 2], vec![0, 1, 1], vec![0, 0, 1], vec![0, 1]]).unwrap();
    assert_eq!(limit(&d).size(), 2);
    assert_eq!(colimit(&d).size(), 1);
    let arrow = Arc::new(two());
    let e = SetFunctor::new(arrow, vec![FinSet::new(2), FinSet::new(2)], vec![vec![0, 1], vec![1, 1], vec![0, 1]]).unwrap();
    assert_eq!(limit(&e).size(), 2);
    assert_eq!(colimit(&e).size(), 2);
}
