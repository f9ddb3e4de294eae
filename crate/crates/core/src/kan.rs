//! Restriction along a functor and pointwise Kan extensions, with the units
//! and counits of both adjunctions.

use std::sync::Arc;

use crate::fincat::{comma_over, comma_under, CommaCategory, FinCategory, FinFunctor};
use crate::limits::{colimit, limit, Colimit, Limit};
use crate::setval::{nat_trans_between, FinSet, NatTrans, SetFunctor};

/// `S ∘ K` for `S` on the target of `K`.
pub fn restrict(k: &FinFunctor, s: &SetFunctor) -> SetFunctor {
    let small = k.source();
    let sets = (0..small.object_count()).map(|b| s.set(k.on_object(b)).clone()).collect();
    let maps = (0..small.morphism_count()).map(|v| s.map(k.on_morphism(v)).to_vec()).collect();
    SetFunctor::new_unchecked(small.clone(), sets, maps)
}

/// `α K`.
pub fn restrict_nat(k: &FinFunctor, alpha: &NatTrans) -> NatTrans {
    let components = (0..k.source().object_count()).map(|b| alpha.component(k.on_object(b)).to_vec()).collect();
    NatTrans::new_unchecked(restrict(k, alpha.source()), restrict(k, alpha.target()), components)
}

/// Comma categories of a functor `K: B → A`, materialized once.
#[derive(Debug, Clone)]
pub struct Kan {
    k: FinFunctor,
    under: Vec<CommaCategory>,
    over: Vec<CommaCategory>,
}

/// A right Kan extension with the limit computed at each object.
#[derive(Debug, Clone)]
pub struct RanData {
    pub functor: SetFunctor,
    pub limits: Vec<Limit>,
}

/// A left Kan extension with the colimit computed at each object.
#[derive(Debug, Clone)]
pub struct LanData {
    pub functor: SetFunctor,
    pub colimits: Vec<Colimit>,
}

impl Kan {
    pub fn new(k: FinFunctor) -> Self {
        let big = k.target().clone();
        let under = (0..big.object_count()).map(|a| comma_under(a, &k)).collect();
        let over = (0..big.object_count()).map(|a| comma_over(&k, a)).collect();
        Kan { k, under, over }
    }

    pub fn functor(&self) -> &FinFunctor {
        &self.k
    }

    /// `(a ↓ K)`.
    pub fn under(&self, a: usize) -> &CommaCategory {
        &self.under[a]
    }

    /// `(K ↓ a)`.
    pub fn over(&self, a: usize) -> &CommaCategory {
        &self.over[a]
    }

    fn big(&self) -> &Arc<FinCategory> {
        self.k.target()
    }

    pub fn restrict(&self, s: &SetFunctor) -> SetFunctor {
        restrict(&self.k, s)
    }

    pub fn ran_data(&self, t: &SetFunctor) -> RanData {
        let big = self.big().clone();
        let limits: Vec<Limit> = self.under.iter().map(|c| limit(&restrict(&c.projection, t))).collect();
        let sets = limits
            .iter()
            .zip(&self.under)
            .map(|(lim, comma)| {
                if lim.size() > 4096 {
                    return FinSet::new(lim.size());
                }
                FinSet::with_labels_unchecked(
                    lim.tuples
                        .iter()
                        .map(|tuple| {
                            let parts: Vec<String> =
                                tuple.iter().enumerate().map(|(i, &x)| t.set(comma.arrows[i].0).label(x)).collect();
                            format!("({})", parts.join(","))
                        })
                        .collect(),
                )
            })
            .collect::<Vec<_>>();
        let maps = (0..big.morphism_count())
            .map(|g| {
                let (a, a2) = (big.dom(g), big.cod(g));
                // coordinate (b', f') of the image is coordinate (b', f'∘g)
                let pick: Vec<usize> = self.under[a2]
                    .arrows
                    .iter()
                    .map(|&(b, f)| self.under[a].object_of(b, big.compose(f, g)).expect("precomposite lies in the comma"))
                    .collect();
                limits[a]
                    .tuples
                    .iter()
                    .map(|tuple| {
                        let image: Vec<usize> = pick.iter().map(|&c| tuple[c]).collect();
                        limits[a2].position(&image).expect("image tuple is compatible")
                    })
                    .collect()
            })
            .collect();
        let functor = SetFunctor::new_unchecked(big, sets, maps);
        RanData { functor, limits }
    }

    pub fn ran(&self, t: &SetFunctor) -> SetFunctor {
        self.ran_data(t).functor
    }

    pub fn ran_map(&self, alpha: &NatTrans) -> NatTrans {
        let src = self.ran_data(alpha.source());
        let tgt = self.ran_data(alpha.target());
        let components = (0..self.big().object_count())
            .map(|a| {
                let comma = &self.under[a];
                src.limits[a]
                    .tuples
                    .iter()
                    .map(|tuple| {
                        let image: Vec<usize> =
                            tuple.iter().enumerate().map(|(c, &x)| alpha.component(comma.arrows[c].0)[x]).collect();
                        tgt.limits[a].position(&image).expect("componentwise image is compatible")
                    })
                    .collect()
            })
            .collect();
        NatTrans::new_unchecked(src.functor, tgt.functor, components)
    }

    /// `θ_S: S → Ran_K(S K)` with `λ_f ∘ θ_{S,a} = S f`.
    pub fn unit_ran(&self, s: &SetFunctor) -> NatTrans {
        let ran = self.ran_data(&self.restrict(s));
        let components = (0..self.big().object_count())
            .map(|a| {
                let comma = &self.under[a];
                (0..s.size(a))
                    .map(|x| {
                        let tuple: Vec<usize> = comma.arrows.iter().map(|&(_, f)| s.map(f)[x]).collect();
                        ran.limits[a].position(&tuple).expect("unit tuple is compatible")
                    })
                    .collect()
            })
            .collect();
        NatTrans::new_unchecked(s.clone(), ran.functor, components)
    }

    /// `ε_T: Ran_K(T) K → T`, the leg at the identity of `K(b)`.
    pub fn counit_ran(&self, t: &SetFunctor) -> NatTrans {
        let ran = self.ran_data(t);
        let big = self.big();
        let components = (0..self.k.source().object_count())
            .map(|b| {
                let a = self.k.on_object(b);
                let c = self.under[a].object_of(b, big.identity(a)).expect("identity lies in the comma");
                ran.limits[a].tuples.iter().map(|tuple| tuple[c]).collect()
            })
            .collect();
        NatTrans::new_unchecked(self.restrict(&ran.functor), t.clone(), components)
    }

    pub fn lan_data(&self, t: &SetFunctor) -> LanData {
        let big = self.big().clone();
        let colimits: Vec<Colimit> = self.over.iter().map(|c| colimit(&restrict(&c.projection, t))).collect();
        let sets = colimits.iter().map(|c| c.cocone.nadir.clone()).collect();
        let maps = (0..big.morphism_count())
            .map(|g| {
                let (a, a2) = (big.dom(g), big.cod(g));
                colimits[a]
                    .classes
                    .iter()
                    .map(|class| {
                        let (c, x) = class[0];
                        let (b, f) = self.over[a].arrows[c];
                        let c2 = self.over[a2].object_of(b, big.compose(g, f)).expect("postcomposite lies in the comma");
                        colimits[a2].cocone.legs[c2][x]
                    })
                    .collect()
            })
            .collect();
        LanData { functor: SetFunctor::new_unchecked(big, sets, maps), colimits }
    }

    pub fn lan(&self, t: &SetFunctor) -> SetFunctor {
        self.lan_data(t).functor
    }

    pub fn lan_map(&self, alpha: &NatTrans) -> NatTrans {
        let src = self.lan_data(alpha.source());
        let tgt = self.lan_data(alpha.target());
        let components = (0..self.big().object_count())
            .map(|a| {
                src.colimits[a]
                    .classes
                    .iter()
                    .map(|class| {
                        let (c, x) = class[0];
                        let b = self.over[a].arrows[c].0;
                        tgt.colimits[a].cocone.legs[c][alpha.component(b)[x]]
                    })
                    .collect()
            })
            .collect();
        NatTrans::new_unchecked(src.functor, tgt.functor, components)
    }

    /// `η_T: T → Lan_K(T) K`, the cocone leg at the identity of `K(b)`.
    pub fn unit_lan(&self, t: &SetFunctor) -> NatTrans {
        let lan = self.lan_data(t);
        let big = self.big();
        let components = (0..self.k.source().object_count())
            .map(|b| {
                let a = self.k.on_object(b);
                let c = self.over[a].object_of(b, big.identity(a)).expect("identity lies in the comma");
                lan.colimits[a].cocone.legs[c].clone()
            })
            .collect();
        NatTrans::new_unchecked(t.clone(), self.restrict(&lan.functor), components)
    }

    /// `ε_S: Lan_K(S K) → S`, sending the class of `(f, x)` to `S f (x)`.
    pub fn counit_lan(&self, s: &SetFunctor) -> NatTrans {
        let lan = self.lan_data(&self.restrict(s));
        let components = (0..self.big().object_count())
            .map(|a| {
                lan.colimits[a]
                    .classes
                    .iter()
                    .map(|class| {
                        let (c, x) = class[0];
                        let f = self.over[a].arrows[c].1;
                        s.map(f)[x]
                    })
                    .collect()
            })
            .collect();
        NatTrans::new_unchecked(lan.functor, s.clone(), components)
    }
}

/// An adjunction `F ⊣ G` between functor categories `Set^C ⇄ Set^D`, with
/// unit `θ: 1 → G F` on `Set^C`.
pub trait Adjunction {
    /// Shape of the objects the unit lives on.
    fn domain_shape(&self) -> &Arc<FinCategory>;
    fn codomain_shape(&self) -> &Arc<FinCategory>;
    fn left(&self, c: &SetFunctor) -> SetFunctor;
    fn left_map(&self, f: &NatTrans) -> NatTrans;
    fn right(&self, d: &SetFunctor) -> SetFunctor;
    fn right_map(&self, g: &NatTrans) -> NatTrans;
    fn unit(&self, c: &SetFunctor) -> NatTrans;
    fn counit(&self, d: &SetFunctor) -> NatTrans;
}

impl<T: Adjunction + ?Sized> Adjunction for Box<T> {
    fn domain_shape(&self) -> &Arc<FinCategory> {
        (**self).domain_shape()
    }

    fn codomain_shape(&self) -> &Arc<FinCategory> {
        (**self).codomain_shape()
    }

    fn left(&self, c: &SetFunctor) -> SetFunctor {
        (**self).left(c)
    }

    fn left_map(&self, f: &NatTrans) -> NatTrans {
        (**self).left_map(f)
    }

    fn right(&self, d: &SetFunctor) -> SetFunctor {
        (**self).right(d)
    }

    fn right_map(&self, g: &NatTrans) -> NatTrans {
        (**self).right_map(g)
    }

    fn unit(&self, c: &SetFunctor) -> NatTrans {
        (**self).unit(c)
    }

    fn counit(&self, d: &SetFunctor) -> NatTrans {
        (**self).counit(d)
    }
}

/// `Set^K ⊣ Ran_K` on `Set^A`.
#[derive(Debug, Clone)]
pub struct RanAdjunction {
    pub kan: Kan,
}

impl RanAdjunction {
    pub fn new(k: FinFunctor) -> Self {
        RanAdjunction { kan: Kan::new(k) }
    }
}

impl Adjunction for RanAdjunction {
    fn domain_shape(&self) -> &Arc<FinCategory> {
        self.kan.k.target()
    }

    fn codomain_shape(&self) -> &Arc<FinCategory> {
        self.kan.k.source()
    }

    fn left(&self, c: &SetFunctor) -> SetFunctor {
        self.kan.restrict(c)
    }

    fn left_map(&self, f: &NatTrans) -> NatTrans {
        restrict_nat(&self.kan.k, f)
    }

    fn right(&self, d: &SetFunctor) -> SetFunctor {
        self.kan.ran(d)
    }

    fn right_map(&self, g: &NatTrans) -> NatTrans {
        self.kan.ran_map(g)
    }

    fn unit(&self, c: &SetFunctor) -> NatTrans {
        self.kan.unit_ran(c)
    }

    fn counit(&self, d: &SetFunctor) -> NatTrans {
        self.kan.counit_ran(d)
    }
}

/// `Lan_K ⊣ Set^K` on `Set^B`.
#[derive(Debug, Clone)]
pub struct LanAdjunction {
    pub kan: Kan,
}

impl LanAdjunction {
    pub fn new(k: FinFunctor) -> Self {
        LanAdjunction { kan: Kan::new(k) }
    }

    /// `Colim ⊣ Δ` on `Set^J`, as left Kan extension along `J → 𝟏`.
    pub fn colim(shape: &Arc<FinCategory>) -> Self {
        LanAdjunction::new(FinFunctor::to_terminal(shape))
    }
}

impl Adjunction for LanAdjunction {
    fn domain_shape(&self) -> &Arc<FinCategory> {
        self.kan.k.source()
    }

    fn codomain_shape(&self) -> &Arc<FinCategory> {
        self.kan.k.target()
    }

    fn left(&self, c: &SetFunctor) -> SetFunctor {
        self.kan.lan(c)
    }

    fn left_map(&self, f: &NatTrans) -> NatTrans {
        self.kan.lan_map(f)
    }

    fn right(&self, d: &SetFunctor) -> SetFunctor {
        self.kan.restrict(d)
    }

    fn right_map(&self, g: &NatTrans) -> NatTrans {
        restrict_nat(&self.kan.k, g)
    }

    fn unit(&self, c: &SetFunctor) -> NatTrans {
        self.kan.unit_lan(c)
    }

    fn counit(&self, d: &SetFunctor) -> NatTrans {
        self.kan.counit_lan(d)
    }
}

/// Which triangle identity failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Triangle {
    /// `ε_{F C} ∘ F θ_C = 1_{F C}`.
    Left,
    /// `G ε_D ∘ θ_{G D} = 1_{G D}`.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleFailure {
    pub triangle: Triangle,
    pub probe: usize,
    pub object: usize,
}

#[derive(Debug, Clone, Default)]
pub struct TriangleReport {
    pub checked: usize,
    pub failures: Vec<TriangleFailure>,
}

impl TriangleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn first_difference(a: &NatTrans, b: &NatTrans) -> Option<usize> {
    if a.source() != b.source() || a.target() != b.target() {
        return Some(0);
    }
    (0..a.shape().object_count()).find(|&o| a.component(o) != b.component(o))
}

/// Checks both triangle identities componentwise on every probe.
pub fn verify_triangle_identities(
    adj: &dyn Adjunction,
    domain_probes: &[SetFunctor],
    codomain_probes: &[SetFunctor],
) -> TriangleReport {
    let mut report = TriangleReport::default();
    for (p, c) in domain_probes.iter().enumerate() {
        let fc = adj.left(c);
        let composite = adj.counit(&fc).after(&adj.left_map(&adj.unit(c)));
        if let Some(object) = first_difference(&composite, &NatTrans::identity(&fc)) {
            report.failures.push(TriangleFailure { triangle: Triangle::Left, probe: p, object });
        }
        report.checked += 1;
    }
    for (p, d) in codomain_probes.iter().enumerate() {
        let gd = adj.right(d);
        let composite = adj.right_map(&adj.counit(d)).after(&adj.unit(&gd));
        if let Some(object) = first_difference(&composite, &NatTrans::identity(&gd)) {
            report.failures.push(TriangleFailure { triangle: Triangle::Right, probe: p, object });
        }
        report.checked += 1;
    }
    report
}

/// Whether the tupling of `family` (functions out of a set of size
/// `domain`) is injective.
pub fn check_jointly_monic(family: &[Vec<usize>], domain: usize) -> bool {
    let tuples: Vec<Vec<usize>> = (0..domain).map(|x| family.iter().map(|f| f[x]).collect()).collect();
    let mut sorted = tuples.clone();
    sorted.sort();
    sorted.dedup();
    sorted.len() == tuples.len()
}

/// The family `{S f | f ∈ (a ↓ K)}` at `a`.
pub fn unit_family(kan: &Kan, s: &SetFunctor, a: usize) -> Vec<Vec<usize>> {
    kan.under(a).arrows.iter().map(|&(_, f)| s.map(f).to_vec()).collect()
}

/// Hom-set sizes on both sides of an adjunction, or `None` when either
/// exceeds `cap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomCounts {
    pub left: usize,
    pub right: usize,
}

/// `|Nat(F c, d)|` against `|Nat(c, G d)|`.
pub fn hom_counts(adj: &dyn Adjunction, c: &SetFunctor, d: &SetFunctor, cap: usize) -> Option<HomCounts> {
    let left = nat_trans_between(&adj.left(c), d, cap + 1).len();
    if left > cap {
        return None;
    }
    let right = nat_trans_between(c, &adj.right(d), cap + 1).len();
    if right > cap {
        return None;
    }
    Some(HomCounts { left, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{delta_inclusion_op, parallel_pair, two};
    use crate::setval::func;

    fn example_m() -> SetFunctor {
        SetFunctor::new(Arc::new(two()), vec![FinSet::new(2), FinSet::new(1)], vec![vec![0, 1], vec![0, 0], vec![0]]).unwrap()
    }

    fn vertices(n: usize) -> SetFunctor {
        SetFunctor::constant(delta_inclusion_op(0, 3).source(), FinSet::new(n))
    }

    #[test]
    fn identity_extensions_are_isomorphic() {
        let m = example_m();
        let kan = Kan::new(FinFunctor::identity(m.shape()));
        assert_eq!(kan.ran(&m).sizes(), m.sizes());
        assert_eq!(kan.lan(&m).sizes(), m.sizes());
        assert!(kan.unit_ran(&m).is_iso());
        assert!(kan.counit_ran(&m).is_iso());
        assert!(kan.unit_lan(&m).is_iso());
        assert!(kan.counit_lan(&m).is_iso());
    }

    #[test]
    fn ran_along_vertex_inclusion_is_a_power() {
        let kan = Kan::new(delta_inclusion_op(0, 3));
        for s in 0..=3 {
            let ran = kan.ran(&vertices(s));
            let expected: Vec<usize> = (0..4).map(|n| s.pow(n as u32 + 1)).collect();
            assert_eq!(ran.sizes(), expected);
            SetFunctor::new(ran.shape().clone(), ran.sets().to_vec(), ran.maps().to_vec()).unwrap();
        }
    }

    #[test]
    fn colimit_as_left_kan_extension() {
        let m = example_m();
        let adj = LanAdjunction::colim(m.shape());
        assert_eq!(adj.left(&m).sizes(), vec![colimit(&m).size()]);
        // θ_M = (Mu, id)
        let theta = adj.unit(&m);
        assert_eq!(theta.component(0), &[0, 0]);
        assert_eq!(theta.component(1), &[0]);
    }

    #[test]
    fn restriction_along_constant() {
        let m = example_m();
        let k = FinFunctor::to_terminal(m.shape()).then(&FinFunctor::constant_object(m.shape(), 0)).unwrap();
        let r = restrict(&k, &m);
        assert_eq!(r.sizes(), vec![2, 2]);
        assert!(r.maps().iter().all(|f| func::is_identity(f)));
    }

    #[test]
    fn empty_comma_gives_point_and_empty_set() {
        // nothing goes from 1 to 0 in 2
        let two = Arc::new(two());
        let one = Arc::new(crate::fincat::terminal());
        let t = SetFunctor::constant(&one, FinSet::new(3));
        let at_zero = Kan::new(FinFunctor::constant_object(&two, 0));
        assert_eq!(at_zero.ran(&t).sizes(), vec![3, 1]);
        let at_one = Kan::new(FinFunctor::constant_object(&two, 1));
        assert_eq!(at_one.lan(&t).sizes(), vec![0, 3]);
    }

    #[test]
    fn triangle_identities_on_example_data() {
        let m = example_m();
        let adj = LanAdjunction::colim(m.shape());
        let probes_d = vec![SetFunctor::constant(adj.codomain_shape(), FinSet::new(2))];
        assert!(verify_triangle_identities(&adj, std::slice::from_ref(&m), &probes_d).passed());
        let ran = RanAdjunction::new(delta_inclusion_op(0, 3));
        let probes_d: Vec<SetFunctor> = (0..3).map(vertices).collect();
        let probes_c: Vec<SetFunctor> = (0..3).map(|n| ran.right(&vertices(n))).collect();
        let report = verify_triangle_identities(&ran, &probes_c, &probes_d);
        assert!(report.passed());
        assert_eq!(report.checked, 6);
    }

    struct Corrupted(LanAdjunction);

    impl Adjunction for Corrupted {
        fn domain_shape(&self) -> &Arc<FinCategory> {
            self.0.domain_shape()
        }
        fn codomain_shape(&self) -> &Arc<FinCategory> {
            self.0.codomain_shape()
        }
        fn left(&self, c: &SetFunctor) -> SetFunctor {
            self.0.left(c)
        }
        fn left_map(&self, f: &NatTrans) -> NatTrans {
            self.0.left_map(f)
        }
        fn right(&self, d: &SetFunctor) -> SetFunctor {
            self.0.right(d)
        }
        fn right_map(&self, g: &NatTrans) -> NatTrans {
            self.0.right_map(g)
        }
        fn unit(&self, c: &SetFunctor) -> NatTrans {
            self.0.unit(c)
        }
        fn counit(&self, d: &SetFunctor) -> NatTrans {
            let e = self.0.counit(d);
            let size = d.size(0);
            let components = vec![e.component(0).iter().map(|&y| (y + 1) % size).collect()];
            NatTrans::new(e.source().clone(), e.target().clone(), components).unwrap()
        }
    }

    #[test]
    fn corrupted_counit_is_caught() {
        let m = example_m();
        let adj = Corrupted(LanAdjunction::colim(m.shape()));
        let d = SetFunctor::constant(adj.codomain_shape(), FinSet::new(2));
        let report = verify_triangle_identities(&adj, &[], &[d]);
        assert_eq!(report.failures, vec![TriangleFailure { triangle: Triangle::Right, probe: 0, object: 0 }]);
    }

    #[test]
    fn jointly_monic_examples() {
        assert!(check_jointly_monic(&[vec![1, 0, 2]], 3));
        assert!(!check_jointly_monic(&[vec![0, 0], vec![1, 1]], 2));
        assert!(check_jointly_monic(&[], 1));
        assert!(!check_jointly_monic(&[], 2));
    }

    #[test]
    fn unit_injective_iff_family_jointly_monic() {
        let pp = Arc::new(parallel_pair());
        let k = FinFunctor::constant_object(&pp, 1);
        let kan = Kan::new(k);
        let s = SetFunctor::new(pp.clone(), vec![FinSet::new(2), FinSet::new(2)], vec![vec![0, 1], vec![0, 0], vec![0, 1], vec![0, 1]])
            .unwrap();
        let theta = kan.unit_ran(&s);
        for a in 0..2 {
            assert_eq!(func::is_injective(theta.component(a)), check_jointly_monic(&unit_family(&kan, &s, a), s.size(a)));
        }
    }

    #[test]
    fn hom_set_bijection_for_colimits() {
        let m = example_m();
        let adj = LanAdjunction::colim(m.shape());
        for n in 0..4 {
            let d = SetFunctor::constant(adj.codomain_shape(), FinSet::new(n));
            let counts = hom_counts(&adj, &m, &d, 10_000).unwrap();
            assert_eq!(counts.left, counts.right);
            assert_eq!(counts.left, n);
        }
    }
}
