//! Sketches and their Set-models, the category sketch on `Δ₃^op`, and the
//! bridge between finite categories and its models.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::fincat::{
    codegeneracy, coface, cospan, delta_inclusion_op, delta_morphism, delta_truncated, opposite, preorder_category, FinCategory,
    FinFunctor, Morphism,
};
use crate::kan::{restrict, RanAdjunction};
use crate::limits::{is_limiting_cone, limit, Cone};
use crate::reflect::InducedReflection;
use crate::setval::{factorize, func, FinSet, Factorization, NatTrans, SetFunctor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SketchError {
    #[error("cone {0} does not commute")]
    ConeNotCommutative(usize),
    #[error("cone {cone} is not sent to a limiting cone")]
    NotAModel { cone: usize },
    #[error("the relation is not a preorder: {0}")]
    NotAPreorder(String),
    #[error("pipeline and oracle disagree on ({0}, {1})")]
    PipelineOracleMismatch(String, String),
    #[error("the middle object fails cone {cone}")]
    MidNotModel { cone: usize, factorization: Box<Factorization> },
    #[error("the model does not yield a category: {0}")]
    NotACategory(String),
}

/// A cone `λ: Δ(apex) → L` in the carrier of a sketch.
#[derive(Debug, Clone)]
pub struct SketchCone {
    pub diagram: FinFunctor,
    pub apex: usize,
    /// `legs[j]: apex → L(j)`.
    pub legs: Vec<usize>,
}

impl SketchCone {
    pub fn shape(&self) -> &Arc<FinCategory> {
        self.diagram.source()
    }
}

#[derive(Debug, Clone)]
pub struct Sketch {
    pub carrier: Arc<FinCategory>,
    pub cones: Vec<SketchCone>,
}

impl Sketch {
    /// Checks `L(f) ∘ λ_i = λ_j` for every cone.
    pub fn new(carrier: Arc<FinCategory>, cones: Vec<SketchCone>) -> Result<Self, SketchError> {
        for (c, cone) in cones.iter().enumerate() {
            let shape = cone.shape();
            for f in 0..shape.morphism_count() {
                let (i, j) = (shape.dom(f), shape.cod(f));
                if carrier.try_compose(cone.diagram.on_morphism(f), cone.legs[i]) != Some(cone.legs[j]) {
                    return Err(SketchError::ConeNotCommutative(c));
                }
            }
        }
        Ok(Sketch { carrier, cones })
    }

    /// The first distinguished cone that `m` fails to send to a limiting
    /// cone.
    pub fn model_failure(&self, m: &SetFunctor) -> Option<usize> {
        self.cones.iter().position(|cone| {
            let d = restrict(&cone.diagram, m);
            let c = Cone { apex: FinSet::new(m.size(cone.apex)), legs: cone.legs.iter().map(|&l| m.map(l).to_vec()).collect() };
            !is_limiting_cone(&c, &d).expect("image of a commutative cone is a cone")
        })
    }

    pub fn is_model(&self, m: &SetFunctor) -> bool {
        self.model_failure(m).is_none()
    }
}

/// `Δ₃^op`, shared so that functors built here compare by pointer.
pub fn delta3op() -> Arc<FinCategory> {
    static CELL: OnceLock<Arc<FinCategory>> = OnceLock::new();
    CELL.get_or_init(|| Arc::new(opposite(&delta_truncated(3)))).clone()
}

/// The simplicial operator with value tuple `values: [m] → [k]`, as a
/// morphism `[k] → [m]` of `Δ₃^op`.
pub fn operator(m: usize, k: usize, values: &[usize]) -> usize {
    delta_morphism(&delta3op(), m, k, values).expect("operator of Δ₃")
}

/// `d^k_i`, acting `[k+1] → [k]` in `Δ₃^op`.
pub fn face(k: usize, i: usize) -> usize {
    operator(k, k + 1, &coface(k, i))
}

/// `s^k_j`, acting `[k] → [k+1]` in `Δ₃^op`.
pub fn degeneracy(k: usize, j: usize) -> usize {
    operator(k + 1, k, &codegeneracy(k, j))
}

/// `Δ₀^op ↪ Δ₃^op` into the shared carrier.
pub fn vertex_inclusion() -> FinFunctor {
    let k = delta_inclusion_op(0, 3);
    FinFunctor::new(k.source().clone(), delta3op(), k.object_map().to_vec(), k.morphism_map().to_vec()).expect("inclusion")
}

/// The sketch whose models are nerves of categories: `M[2]` and `M[3]` are
/// the pullbacks `M[1] ×_{M[0]} M[1]` and `M[2] ×_{M[1]} M[2]`.
pub fn cat_sketch() -> Sketch {
    let carrier = delta3op();
    let shape = Arc::new(cospan());
    let cone = |k: usize, first: usize, second: usize, u: usize, v: usize, apex_leg: usize| {
        // cospan objects 0 → 2 ← 1, morphisms id0, u, id1, v, id2
        let diagram = FinFunctor::new(
            shape.clone(),
            carrier.clone(),
            vec![k, k, k - 1],
            vec![carrier.identity(k), u, carrier.identity(k), v, carrier.identity(k - 1)],
        )
        .expect("cospan diagram");
        SketchCone { diagram, apex: k + 1, legs: vec![first, second, apex_leg] }
    };
    let composition = cone(1, face(1, 2), face(1, 0), face(0, 0), face(0, 1), operator(0, 2, &[1]));
    let associativity = cone(2, face(2, 3), face(2, 0), face(1, 0), face(1, 2), operator(1, 3, &[1, 2]));
    Sketch::new(carrier, vec![composition, associativity]).expect("category sketch cones commute")
}

/// Composable chains of `c` in each degree, lexicographic in the morphism
/// indices; degree 0 lists objects, degree 1 lists morphisms.
fn chains(c: &FinCategory) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![(0..c.object_count()).map(|o| vec![o]).collect::<Vec<_>>()];
    out.push((0..c.morphism_count()).map(|f| vec![f]).collect());
    for _ in 2..=3 {
        let prev = out.last().unwrap();
        let mut next = Vec::new();
        for chain in prev {
            let last = *chain.last().unwrap();
            for g in c.morphisms_from(c.cod(last)) {
                let mut longer = chain.clone();
                longer.push(g);
                next.push(longer);
            }
        }
        next.sort();
        out.push(next);
    }
    out
}

/// Vertices of a chain and the composite from vertex `i` to vertex `j`.
fn chain_vertices(c: &FinCategory, degree: usize, chain: &[usize]) -> Vec<usize> {
    if degree == 0 {
        return vec![chain[0]];
    }
    let mut v = vec![c.dom(chain[0])];
    v.extend(chain.iter().map(|&f| c.cod(f)));
    v
}

fn chain_composite(c: &FinCategory, degree: usize, chain: &[usize], i: usize, j: usize) -> usize {
    let vertices = chain_vertices(c, degree, chain);
    let mut f = c.identity(vertices[i]);
    for &g in &chain[i..j] {
        f = c.compose(g, f);
    }
    f
}

/// The 3-truncated nerve.
pub fn nerve3(c: &FinCategory) -> SetFunctor {
    let shape = delta3op();
    let all = chains(c);
    let index: Vec<HashMap<Vec<usize>, usize>> =
        all.iter().map(|level| level.iter().enumerate().map(|(k, ch)| (ch.clone(), k)).collect()).collect();
    let sets = all
        .iter()
        .enumerate()
        .map(|(degree, level)| {
            FinSet::with_labels_unchecked(
                level
                    .iter()
                    .map(|ch| {
                        if degree == 0 {
                            c.object_name(ch[0]).to_string()
                        } else {
                            ch.iter().map(|&f| c.morphism_name(f)).collect::<Vec<_>>().join(";")
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    let maps = shape
        .morphisms()
        .iter()
        .enumerate()
        .map(|(op, mor)| {
            // op: [k] → [m] in Δ^op is α: [m] → [k] in Δ
            let (k, m) = (mor.dom, mor.cod);
            let values = operator_values(op);
            all[k]
                .iter()
                .map(|ch| {
                    let image: Vec<usize> = if m == 0 {
                        vec![chain_vertices(c, k, ch)[values[0]]]
                    } else {
                        (1..=m).map(|i| chain_composite(c, k, ch, values[i - 1], values[i])).collect()
                    };
                    index[m][&image]
                })
                .collect()
        })
        .collect();
    SetFunctor::new_unchecked(shape, sets, maps)
}

/// The value tuple of a morphism of `Δ₃^op`, parsed from its name.
fn operator_values(op: usize) -> Vec<usize> {
    static CELL: OnceLock<Vec<Vec<usize>>> = OnceLock::new();
    CELL.get_or_init(|| {
        delta3op()
            .morphisms()
            .iter()
            .map(|m| {
                let tail = m.name.rsplit(':').next().expect("operator name");
                tail.split(',').map(|v| v.parse().expect("operator value")).collect()
            })
            .collect()
    })[op]
        .clone()
}

/// `N(F): N(C) → N(D)`.
pub fn nerve3_map(f: &FinFunctor) -> NatTrans {
    let (c, d) = (f.source(), f.target());
    let source = nerve3(c);
    let target = nerve3(d);
    let c_chains = chains(c);
    let d_index: Vec<HashMap<Vec<usize>, usize>> =
        chains(d).into_iter().map(|level| level.into_iter().enumerate().map(|(k, ch)| (ch, k)).collect()).collect();
    let components = c_chains
        .iter()
        .enumerate()
        .map(|(degree, level)| {
            level
                .iter()
                .map(|ch| {
                    let image: Vec<usize> = if degree == 0 {
                        vec![f.on_object(ch[0])]
                    } else {
                        ch.iter().map(|&g| f.on_morphism(g)).collect()
                    };
                    d_index[degree][&image]
                })
                .collect()
        })
        .collect();
    NatTrans::new_unchecked(source, target, components)
}

fn distinct_labels(set: &FinSet, prefix: &str) -> Vec<String> {
    let generated = || (0..set.size()).map(|i| format!("{prefix}{i}")).collect();
    match set.labels() {
        Some(l) => {
            let mut sorted = l.to_vec();
            sorted.sort();
            sorted.dedup();
            if sorted.len() == l.len() {
                l.to_vec()
            } else {
                generated()
            }
        }
        None => generated(),
    }
}

/// Reads a category off a model of [`cat_sketch`]: objects `M[0]`,
/// morphisms `M[1]`, composition through the pullback at `M[2]`.
pub fn cat_from_model(m: &SetFunctor) -> Result<FinCategory, SketchError> {
    let sketch = cat_sketch();
    if let Some(cone) = sketch.model_failure(m) {
        return Err(SketchError::NotAModel { cone });
    }
    let objects = distinct_labels(m.set(0), "o");
    let names = distinct_labels(m.set(1), "f");
    let (dom, cod) = (m.map(face(0, 1)), m.map(face(0, 0)));
    let morphisms: Vec<Morphism> =
        names.into_iter().enumerate().map(|(f, name)| Morphism { name, dom: dom[f], cod: cod[f] }).collect();
    let identities = m.map(degeneracy(0, 0)).to_vec();
    let (first, second, inner) = (m.map(face(1, 2)), m.map(face(1, 0)), m.map(face(1, 1)));
    let mut triangle = HashMap::new();
    for s in 0..m.size(2) {
        triangle.insert((first[s], second[s]), s);
    }
    FinCategory::new(objects, morphisms, identities, |g, f| triangle.get(&(f, g)).map(|&s| inner[s]))
        .map_err(|e| SketchError::NotACategory(e.to_string()))
}

/// A preordered set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    pub elements: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Preorder {
    /// Checks reflexivity and transitivity of the given pairs.
    pub fn new(elements: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, SketchError> {
        let n = elements.len();
        let mut leq = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(SketchError::NotAPreorder(format!("pair ({a}, {b}) out of range")));
            }
            leq[a][b] = true;
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(SketchError::NotAPreorder(format!("{} is not below itself", elements[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(SketchError::NotAPreorder(format!(
                            "{} ≤ {} ≤ {} but not {} ≤ {}",
                            elements[a], elements[b], elements[c], elements[a], elements[c]
                        )));
                    }
                }
            }
        }
        Ok(Preorder { elements, leq })
    }

    /// `x ≤ y` iff there is a morphism `x → y`.
    pub fn from_homs(c: &FinCategory) -> Self {
        let n = c.object_count();
        let leq = (0..n).map(|a| (0..n).map(|b| !c.hom(a, b).is_empty()).collect()).collect();
        Preorder { elements: c.objects().to_vec(), leq }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// All related pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| self.leq[a][b]).collect()
    }

    pub fn to_category(&self) -> FinCategory {
        preorder_category(self.len(), &self.pairs())
    }
}

/// The reflection of presheaves on `Δ₃^op` induced by `Set^K ⊣ Ran_K` for
/// the vertex inclusion `K`.
pub fn vertex_reflection() -> InducedReflection<RanAdjunction> {
    InducedReflection::new(RanAdjunction::new(vertex_inclusion()))
}

/// The preorder reflection of `c`, computed by reflecting its nerve and
/// reading the category back, and checked against hom-set nonemptiness.
pub fn preorder_reflection(c: &FinCategory) -> Result<Preorder, SketchError> {
    let reflection = vertex_reflection();
    let image = reflection.reflect_object(&nerve3(c)).image;
    let reflected = cat_from_model(&image)?;
    let oracle = Preorder::from_homs(c);
    if !reflected.is_preorder() || reflected.object_count() != oracle.len() {
        return Err(SketchError::PipelineOracleMismatch("*".into(), "*".into()));
    }
    let pipeline = Preorder::from_homs(&reflected);
    for a in 0..oracle.len() {
        for b in 0..oracle.len() {
            if pipeline.le(a, b) != oracle.le(a, b) {
                return Err(SketchError::PipelineOracleMismatch(oracle.elements[a].clone(), oracle.elements[b].clone()));
            }
        }
    }
    Ok(oracle)
}

/// A factorization whose middle object is certified to be a model.
#[derive(Debug, Clone)]
pub struct ModelFactorization {
    pub factorization: Factorization,
    /// Per cone, the comparison bijection from the middle apex to the limit.
    pub certificate: Vec<Vec<usize>>,
}

/// Factors a morphism of models and certifies the middle object.
pub fn factorize_model_morphism(phi: &NatTrans, sketch: &Sketch) -> Result<ModelFactorization, SketchError> {
    let fact = factorize(phi);
    let mid = &fact.mid;
    let mut certificate = Vec::with_capacity(sketch.cones.len());
    for (i, cone) in sketch.cones.iter().enumerate() {
        let d = restrict(&cone.diagram, mid);
        let c = Cone { apex: FinSet::new(mid.size(cone.apex)), legs: cone.legs.iter().map(|&l| mid.map(l).to_vec()).collect() };
        let lim = limit(&d);
        let comparison = lim.factor(&c);
        if comparison.len() != lim.size() || !func::is_injective(&comparison) {
            return Err(SketchError::MidNotModel { cone: i, factorization: Box::new(fact) });
        }
        certificate.push(comparison);
    }
    Ok(ModelFactorization { factorization: fact, certificate })
}

/// The cases of closure of image factorizations under finite limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma51Case {
    Pullback,
    Product(usize),
    Equalizer,
    Finite,
}

/// `Lim D` against the image `s` of `Lim φ: Lim F → Lim G`, both as subsets
/// of `Lim G`.
#[derive(Debug, Clone)]
pub struct Lemma51Report {
    pub lim_f: usize,
    pub lim_g: usize,
    pub lim_d: usize,
    pub image: usize,
    /// `s → Lim D` commuting with the maps into `Lim G`, when it exists.
    pub bijection: Option<Vec<usize>>,
}

impl Lemma51Report {
    pub fn holds(&self) -> bool {
        self.bijection.is_some()
    }
}

/// Compares `Lim D` with the image of `Lim φ` for `φ = n ∘ f` through
/// `D`.
pub fn check_lemma51(phi: &NatTrans) -> Lemma51Report {
    let fact = factorize(phi);
    let lim_f = limit(phi.source());
    let lim_g = limit(phi.target());
    let lim_d = limit(&fact.mid);
    let shape = phi.shape();
    let map = |tuples: &[Vec<usize>], t: &NatTrans| -> Vec<usize> {
        tuples
            .iter()
            .map(|tuple| {
                let image: Vec<usize> = (0..shape.object_count()).map(|o| t.component(o)[tuple[o]]).collect();
                lim_g.position(&image).expect("componentwise image is compatible")
            })
            .collect()
    };
    let s = func::image(&map(&lim_f.tuples, phi), lim_g.size());
    let d_in_g = map(&lim_d.tuples, &fact.mono);
    let mut d_sorted = d_in_g.clone();
    d_sorted.sort_unstable();
    let bijection = (d_sorted == s).then(|| s.iter().map(|y| d_in_g.iter().position(|z| z == y).unwrap()).collect());
    Lemma51Report { lim_f: lim_f.size(), lim_g: lim_g.size(), lim_d: lim_d.size(), image: s.len(), bijection }
}

/// The restriction of [`vertex_reflection`] to models of [`cat_sketch`].
pub struct ModelReflection {
    pub reflection: InducedReflection<RanAdjunction>,
    pub sketch: Sketch,
}

impl Default for ModelReflection {
    fn default() -> Self {
        ModelReflection { reflection: vertex_reflection(), sketch: cat_sketch() }
    }
}

impl ModelReflection {
    /// The reflection of a model, certified to be a model.
    pub fn reflect_model(&self, m: &SetFunctor) -> Result<ModelFactorization, SketchError> {
        if let Some(cone) = self.sketch.model_failure(m) {
            return Err(SketchError::NotAModel { cone });
        }
        factorize_model_morphism(&self.reflection.reflect_object(m).theta, &self.sketch)
    }

    /// `E_I` membership for a morphism of models, computed with reflections
    /// certified inside the models.
    pub fn is_in_e_i(&self, f: &NatTrans) -> Result<bool, SketchError> {
        let source = self.reflect_model(f.source())?;
        let target = self.reflect_model(f.target())?;
        let _ = (source, target);
        Ok(self.reflection.is_in_e_i(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{chain_category, discrete, find_isomorphism, parallel_pair, terminal, two};
    use crate::setval::NatTrans;

    #[test]
    fn carrier_and_cones() {
        let sk = cat_sketch();
        assert_eq!(sk.carrier.object_count(), 4);
        assert!(sk.cones.iter().all(|c| c.shape().object_count() == 3));
        let empty = Sketch::new(delta3op(), vec![]).unwrap();
        assert!(empty.is_model(&SetFunctor::empty(&delta3op())));
    }

    #[test]
    fn nerve_sizes() {
        assert_eq!(nerve3(&terminal()).sizes(), vec![1, 1, 1, 1]);
        assert_eq!(nerve3(&two()).sizes(), vec![2, 3, 4, 5]);
    }

    #[test]
    fn nerves_are_models() {
        let sk = cat_sketch();
        for c in [terminal(), two(), parallel_pair(), chain_category(3).unwrap(), crate::fincat::split_idempotent()] {
            let n = nerve3(&c);
            SetFunctor::new(n.shape().clone(), n.sets().to_vec(), n.maps().to_vec()).unwrap();
            assert!(sk.is_model(&n));
        }
    }

    #[test]
    fn boundary_of_a_triangle_is_not_a_model() {
        // simplices of Δ[2] that miss a vertex
        let shape = delta3op();
        let simplex = crate::setval::representable(&shape, 2);
        let subsets = (0..4)
            .map(|k| {
                (0..simplex.size(k))
                    .filter(|&x| {
                        let name = simplex.set(k).label(x);
                        let values = name.rsplit(':').next().unwrap().to_string();
                        !(values.contains('0') && values.contains('1') && values.contains('2'))
                    })
                    .collect()
            })
            .collect();
        let boundary = crate::setval::subfunctor_inclusion(&simplex, subsets).unwrap();
        let m = boundary.source();
        assert_eq!(cat_sketch().model_failure(m), Some(0));
        assert!(matches!(cat_from_model(m), Err(SketchError::NotAModel { cone: 0 })));
        assert!(cat_sketch().is_model(&simplex));
    }

    #[test]
    fn round_trip() {
        for c in [terminal(), two(), parallel_pair(), chain_category(3).unwrap(), crate::fincat::split_idempotent(), discrete(2)] {
            let c = Arc::new(c);
            let back = Arc::new(cat_from_model(&nerve3(&c)).unwrap());
            assert!(find_isomorphism(&c, &back).is_some());
        }
    }

    #[test]
    fn preorders() {
        let p = preorder_reflection(&parallel_pair()).unwrap();
        assert_eq!(p.pairs(), vec![(0, 0), (0, 1), (1, 1)]);
        let p = preorder_reflection(&two()).unwrap();
        assert_eq!(p.pairs(), vec![(0, 0), (0, 1), (1, 1)]);
        assert!(Preorder::new(vec!["a".into()], &[]).is_err());
    }

    #[test]
    fn unit_on_edges_is_source_target() {
        let r = vertex_reflection();
        let n = nerve3(&two());
        let theta = r.reflect_object(&n).theta;
        let ran = theta.target();
        // edge u: 0 → 1 goes to the pair (0, 1)
        let u = 1;
        assert_eq!(ran.set(1).label(theta.component(1)[u]), "(0,1)");
    }

    #[test]
    fn nerve_of_a_functor() {
        let two = Arc::new(two());
        let one = Arc::new(terminal());
        let f = FinFunctor::to_terminal(&two);
        let n = nerve3_map(&f);
        assert_eq!(n.target(), &nerve3(&one));
        assert!(n.is_epi());
    }

    #[test]
    fn identity_and_unit_factorizations_are_models() {
        let sk = cat_sketch();
        let n = nerve3(&parallel_pair());
        let id = NatTrans::identity(&n);
        assert!(factorize_model_morphism(&id, &sk).is_ok());
        let mr = ModelReflection::default();
        let fact = mr.reflect_model(&n).unwrap();
        assert_eq!(fact.factorization.mid.sizes(), nerve3(&two()).sizes());
    }

    #[test]
    fn image_of_a_model_morphism_can_fail_to_be_a_model() {
        // a→b and c→d sent onto the chain 0→1→2 with b = c
        let two = two();
        let src = Arc::new(crate::fincat::disjoint_union(&two, &two));
        let tgt = Arc::new(chain_category(3).unwrap());
        let objects = vec![0, 1, 1, 2];
        let morphisms = src
            .morphisms()
            .iter()
            .map(|m| tgt.hom(objects[m.dom], objects[m.cod])[0])
            .collect();
        let f = FinFunctor::new(src, tgt, objects, morphisms).unwrap();
        let err = factorize_model_morphism(&nerve3_map(&f), &cat_sketch()).unwrap_err();
        assert!(matches!(err, SketchError::MidNotModel { cone: 0, .. }));
    }

    #[test]
    fn lemma51_product_and_pullback_counterexample() {
        use crate::fincat::{cospan, empty};
        let e = Arc::new(empty());
        let t = SetFunctor::empty(&e);
        let report = check_lemma51(&NatTrans::identity(&t));
        assert!(report.holds());
        assert_eq!((report.lim_f, report.lim_d, report.image), (1, 1, 1));
        // F = ({p}, {q}, {a, b}) with p ↦ a, q ↦ b; G all points
        let shape = Arc::new(cospan());
        let f = SetFunctor::new(shape.clone(), vec![FinSet::new(1), FinSet::new(1), FinSet::new(2)], vec![vec![0], vec![0], vec![0], vec![1], vec![0, 1]])
            .unwrap();
        let g = SetFunctor::terminal(&shape);
        let phi = NatTrans::new(f, g, vec![vec![0], vec![0], vec![0, 0]]).unwrap();
        let report = check_lemma51(&phi);
        assert_eq!((report.lim_f, report.lim_d, report.image), (0, 1, 0));
        assert!(!report.holds());
    }
}
