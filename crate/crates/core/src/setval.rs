//! Finite Set-valued functors, natural transformations between them and the
//! componentwise (surjection, injection) factorization.
//!
//! Elements of a finite set are positions `0..size`; labels are cosmetic and
//! never take part in equality. Functions are stored as value tables.

use std::sync::Arc;

use thiserror::Error;

use crate::fincat::FinCategory;

pub mod func;
mod search;

pub use search::{nat_trans_between, subfunctors, NatSearch};

/// A finite set `{0, …, size-1}` with optional display labels.
#[derive(Debug, Clone, Eq)]
pub struct FinSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
    }
}

impl FinSet {
    pub fn new(size: usize) -> Self {
        FinSet { size, labels: None }
    }

    /// Panics when labels repeat.
    pub fn labelled(labels: Vec<String>) -> Self {
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), labels.len(), "labels of a finite set must be distinct");
        FinSet { size: labels.len(), labels: Some(labels) }
    }

    pub(crate) fn with_labels_unchecked(labels: Vec<String>) -> Self {
        FinSet { size: labels.len(), labels: Some(labels) }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Restriction to `subset` (ascending positions), renumbered.
    pub fn subset(&self, subset: &[usize]) -> FinSet {
        match &self.labels {
            Some(l) => FinSet::with_labels_unchecked(subset.iter().map(|&i| l[i].clone()).collect()),
            None => FinSet::new(subset.len()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("expected {expected} sets, got {got}")]
    SetCount { expected: usize, got: usize },
    #[error("expected {expected} maps, got {got}")]
    MapCount { expected: usize, got: usize },
    #[error("the assignment to `{0}` is not a function between the right sets")]
    NotFunction(String),
    #[error("the identity of `{0}` is not sent to an identity function")]
    IdentityViolated(String),
    #[error("composition `{g}` after `{f}` is not preserved")]
    CompositionViolated { g: String, f: String },
}

/// A functor from a finite category to finite sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunctor {
    shape: Arc<FinCategory>,
    sets: Vec<FinSet>,
    maps: Vec<Vec<usize>>,
}

impl SetFunctor {
    /// Validates functoriality.
    pub fn new(shape: Arc<FinCategory>, sets: Vec<FinSet>, maps: Vec<Vec<usize>>) -> Result<Self, FunctorError> {
        if sets.len() != shape.object_count() {
            return Err(FunctorError::SetCount { expected: shape.object_count(), got: sets.len() });
        }
        if maps.len() != shape.morphism_count() {
            return Err(FunctorError::MapCount { expected: shape.morphism_count(), got: maps.len() });
        }
        for (f, map) in maps.iter().enumerate() {
            let dom = sets[shape.dom(f)].size;
            let cod = sets[shape.cod(f)].size;
            if map.len() != dom || map.iter().any(|&y| y >= cod) {
                return Err(FunctorError::NotFunction(shape.morphism_name(f).to_string()));
            }
        }
        for o in 0..shape.object_count() {
            if !func::is_identity(&maps[shape.identity(o)]) {
                return Err(FunctorError::IdentityViolated(shape.object_name(o).to_string()));
            }
        }
        for (g, f) in shape.composable_pairs() {
            if maps[shape.compose(g, f)] != func::compose(&maps[g], &maps[f]) {
                return Err(FunctorError::CompositionViolated {
                    g: shape.morphism_name(g).to_string(),
                    f: shape.morphism_name(f).to_string(),
                });
            }
        }
        Ok(SetFunctor { shape, sets, maps })
    }

    pub(crate) fn new_unchecked(shape: Arc<FinCategory>, sets: Vec<FinSet>, maps: Vec<Vec<usize>>) -> Self {
        debug_assert!(SetFunctor::new(shape.clone(), sets.clone(), maps.clone()).is_ok());
        SetFunctor { shape, sets, maps }
    }

    /// Every object sent to `set`, every morphism to the identity.
    pub fn constant(shape: &Arc<FinCategory>, set: FinSet) -> Self {
        let maps = (0..shape.morphism_count()).map(|_| (0..set.size).collect()).collect();
        SetFunctor { shape: shape.clone(), sets: vec![set; shape.object_count()], maps }
    }

    pub fn empty(shape: &Arc<FinCategory>) -> Self {
        SetFunctor::constant(shape, FinSet::new(0))
    }

    pub fn terminal(shape: &Arc<FinCategory>) -> Self {
        SetFunctor::constant(shape, FinSet::new(1))
    }

    pub fn shape(&self) -> &Arc<FinCategory> {
        &self.shape
    }

    pub fn set(&self, o: usize) -> &FinSet {
        &self.sets[o]
    }

    pub fn sets(&self) -> &[FinSet] {
        &self.sets
    }

    pub fn size(&self, o: usize) -> usize {
        self.sets[o].size
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(|s| s.size).collect()
    }

    pub fn map(&self, f: usize) -> &[usize] {
        &self.maps[f]
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    /// Total number of elements over all objects.
    pub fn total_size(&self) -> usize {
        self.sets.iter().map(|s| s.size).sum()
    }

    /// Every structure map is injective.
    pub fn all_maps_injective(&self) -> bool {
        self.maps.iter().all(|m| func::is_injective(m))
    }

    /// Same functor with labels dropped.
    pub fn unlabelled(&self) -> SetFunctor {
        SetFunctor {
            shape: self.shape.clone(),
            sets: self.sets.iter().map(|s| FinSet::new(s.size)).collect(),
            maps: self.maps.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NatTransError {
    #[error("source and target live on different shapes")]
    ShapeMismatch,
    #[error("expected {expected} components, got {got}")]
    ComponentCount { expected: usize, got: usize },
    #[error("component at `{0}` is not a function between the right sets")]
    NotFunction(String),
    #[error("naturality fails at `{0}`")]
    NaturalityViolated(String),
}

/// A natural transformation between two functors of the same shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    source: SetFunctor,
    target: SetFunctor,
    components: Vec<Vec<usize>>,
}

pub(crate) fn same_shape(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl NatTrans {
    pub fn new(source: SetFunctor, target: SetFunctor, components: Vec<Vec<usize>>) -> Result<Self, NatTransError> {
        if !same_shape(&source.shape, &target.shape) {
            return Err(NatTransError::ShapeMismatch);
        }
        let shape = source.shape.clone();
        if components.len() != shape.object_count() {
            return Err(NatTransError::ComponentCount { expected: shape.object_count(), got: components.len() });
        }
        for (o, c) in components.iter().enumerate() {
            if c.len() != source.size(o) || c.iter().any(|&y| y >= target.size(o)) {
                return Err(NatTransError::NotFunction(shape.object_name(o).to_string()));
            }
        }
        for f in 0..shape.morphism_count() {
            let (i, j) = (shape.dom(f), shape.cod(f));
            let natural = (0..source.size(i)).all(|x| target.maps[f][components[i][x]] == components[j][source.maps[f][x]]);
            if !natural {
                return Err(NatTransError::NaturalityViolated(shape.morphism_name(f).to_string()));
            }
        }
        Ok(NatTrans { source, target, components })
    }

    pub(crate) fn new_unchecked(source: SetFunctor, target: SetFunctor, components: Vec<Vec<usize>>) -> Self {
        debug_assert!(
            NatTrans::new(source.clone(), target.clone(), components.clone()).is_ok(),
            "{:?}",
            NatTrans::new(source.clone(), target.clone(), components.clone())
        );
        NatTrans { source, target, components }
    }

    pub fn identity(f: &SetFunctor) -> Self {
        let components = f.sets.iter().map(|s| (0..s.size).collect()).collect();
        NatTrans { source: f.clone(), target: f.clone(), components }
    }

    pub fn source(&self) -> &SetFunctor {
        &self.source
    }

    pub fn target(&self) -> &SetFunctor {
        &self.target
    }

    pub fn shape(&self) -> &Arc<FinCategory> {
        &self.source.shape
    }

    pub fn component(&self, o: usize) -> &[usize] {
        &self.components[o]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// `self ∘ other`. Panics when the middle functors differ.
    pub fn after(&self, other: &NatTrans) -> NatTrans {
        assert_eq!(other.target, self.source, "natural transformations are not composable");
        let components = self.components.iter().zip(&other.components).map(|(g, f)| func::compose(g, f)).collect();
        NatTrans { source: other.source.clone(), target: self.target.clone(), components }
    }

    /// Every component surjective.
    pub fn is_epi(&self) -> bool {
        self.components.iter().enumerate().all(|(o, c)| func::is_surjective(c, self.target.size(o)))
    }

    /// Every component injective.
    pub fn is_mono(&self) -> bool {
        self.components.iter().all(|c| func::is_injective(c))
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    /// Componentwise inverse of an isomorphism.
    pub fn inverse(&self) -> Option<NatTrans> {
        if !self.is_iso() {
            return None;
        }
        let components = self
            .components
            .iter()
            .map(|c| {
                let mut inv = vec![0; c.len()];
                for (x, &y) in c.iter().enumerate() {
                    inv[y] = x;
                }
                inv
            })
            .collect();
        Some(NatTrans { source: self.target.clone(), target: self.source.clone(), components })
    }
}

/// The (epi, mono) factorization `α = mono ∘ epi` through the image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub epi: NatTrans,
    pub mid: SetFunctor,
    pub mono: NatTrans,
}

/// Factors `α` through its componentwise image. The image at each object is
/// the sorted subset of the codomain it hits, renumbered from zero.
pub fn factorize(alpha: &NatTrans) -> Factorization {
    let shape = alpha.shape().clone();
    let target = &alpha.target;
    let images: Vec<Vec<usize>> =
        alpha.components.iter().enumerate().map(|(o, c)| func::image(c, target.size(o))).collect();
    let positions: Vec<Vec<Option<usize>>> = images
        .iter()
        .enumerate()
        .map(|(o, img)| {
            let mut pos = vec![None; target.size(o)];
            for (i, &y) in img.iter().enumerate() {
                pos[y] = Some(i);
            }
            pos
        })
        .collect();
    let sets = images.iter().enumerate().map(|(o, img)| target.sets[o].subset(img)).collect();
    let maps = (0..shape.morphism_count())
        .map(|f| {
            let (i, j) = (shape.dom(f), shape.cod(f));
            images[i]
                .iter()
                .map(|&y| positions[j][target.maps[f][y]].expect("image is closed under the target's maps"))
                .collect()
        })
        .collect();
    let mid = SetFunctor::new_unchecked(shape, sets, maps);
    let epi_components =
        alpha.components.iter().enumerate().map(|(o, c)| c.iter().map(|&y| positions[o][y].unwrap()).collect()).collect();
    let epi = NatTrans::new_unchecked(alpha.source.clone(), mid.clone(), epi_components);
    let mono = NatTrans::new_unchecked(mid.clone(), target.clone(), images);
    Factorization { epi, mid, mono }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareError {
    #[error("the square does not commute at `{0}`")]
    NotCommutative(String),
    #[error("the four arrows do not form a square")]
    Mismatched,
}

/// Outcome of a diagonal-fill query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagonal {
    Unique(NatTrans),
    /// No natural `w`; `object`/`element` locate an element of the middle
    /// source with no admissible value, when there is one.
    Missing { object: Option<usize>, element: Option<usize> },
    /// Two distinct diagonals.
    Multiple(NatTrans, NatTrans),
}

impl Diagonal {
    pub fn unique(self) -> Option<NatTrans> {
        match self {
            Diagonal::Unique(w) => Some(w),
            _ => None,
        }
    }
}

/// For a commutative square `v ∘ e = m ∘ u` (with `e: A → B`, `m: C → D`,
/// `u: A → C`, `v: B → D`) searches for natural `w: B → C` with `w ∘ e = u`
/// and `m ∘ w = v`.
pub fn check_orthogonal(e: &NatTrans, m: &NatTrans, u: &NatTrans, v: &NatTrans) -> Result<Diagonal, SquareError> {
    if e.source != u.source || e.target != v.source || m.source != u.target || m.target != v.target {
        return Err(SquareError::Mismatched);
    }
    let shape = e.shape().clone();
    for o in 0..shape.object_count() {
        let lhs = func::compose(&v.components[o], &e.components[o]);
        let rhs = func::compose(&m.components[o], &u.components[o]);
        if lhs != rhs {
            return Err(SquareError::NotCommutative(shape.object_name(o).to_string()));
        }
    }
    // admissible values for w at (o, b)
    let b_fun = &e.target;
    let c_fun = &m.source;
    let mut allowed: Vec<Vec<Vec<bool>>> = Vec::with_capacity(shape.object_count());
    for o in 0..shape.object_count() {
        let mut rows = Vec::with_capacity(b_fun.size(o));
        for b in 0..b_fun.size(o) {
            let row: Vec<bool> = (0..c_fun.size(o))
                .map(|c| {
                    m.components[o][c] == v.components[o][b]
                        && (0..e.source.size(o)).all(|a| e.components[o][a] != b || u.components[o][a] == c)
                })
                .collect();
            if !row.iter().any(|&ok| ok) {
                return Ok(Diagonal::Missing { object: Some(o), element: Some(b) });
            }
            rows.push(row);
        }
        allowed.push(rows);
    }
    let found = NatSearch::new(b_fun, c_fun).with_filter(|o, b, c| allowed[o][b][c]).limit(2).run();
    Ok(match found.len() {
        0 => Diagonal::Missing { object: None, element: None },
        1 => Diagonal::Unique(NatTrans::new_unchecked(b_fun.clone(), c_fun.clone(), found[0].clone())),
        _ => Diagonal::Multiple(
            NatTrans::new_unchecked(b_fun.clone(), c_fun.clone(), found[0].clone()),
            NatTrans::new_unchecked(b_fun.clone(), c_fun.clone(), found[1].clone()),
        ),
    })
}

/// A coproduct with its injections.
#[derive(Debug, Clone)]
pub struct Coproduct {
    pub functor: SetFunctor,
    pub injections: Vec<NatTrans>,
}

/// Objectwise disjoint union, summands laid out in order. Labels are tagged
/// with the summand index.
pub fn coproduct(shape: &Arc<FinCategory>, functors: &[SetFunctor]) -> Coproduct {
    for f in functors {
        assert!(same_shape(shape, &f.shape), "coproduct summands must share a shape");
    }
    let n = shape.object_count();
    let offsets: Vec<Vec<usize>> = (0..n)
        .map(|o| {
            let mut acc = 0;
            functors
                .iter()
                .map(|f| {
                    let start = acc;
                    acc += f.size(o);
                    start
                })
                .collect()
        })
        .collect();
    let sets = (0..n)
        .map(|o| {
            let labels = functors
                .iter()
                .enumerate()
                .flat_map(|(i, f)| (0..f.size(o)).map(move |x| format!("{i}:{}", f.sets[o].label(x))))
                .collect();
            FinSet::with_labels_unchecked(labels)
        })
        .collect();
    let maps = (0..shape.morphism_count())
        .map(|m| {
            let j = shape.cod(m);
            let offsets = &offsets;
            functors.iter().enumerate().flat_map(|(k, f)| f.maps[m].iter().map(move |&y| y + offsets[j][k])).collect()
        })
        .collect();
    let functor = SetFunctor::new_unchecked(shape.clone(), sets, maps);
    let injections = functors
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let components = (0..n).map(|o| (0..f.size(o)).map(|x| x + offsets[o][k]).collect()).collect();
            NatTrans::new_unchecked(f.clone(), functor.clone(), components)
        })
        .collect();
    Coproduct { functor, injections }
}

impl Coproduct {
    /// The copairing `[f_1, …, f_n]: ∐ F_i → X`.
    pub fn copair(&self, legs: &[NatTrans]) -> NatTrans {
        assert_eq!(legs.len(), self.injections.len(), "one leg per summand");
        let target = legs.first().map(|l| l.target.clone());
        let shape = self.functor.shape.clone();
        let target = target.unwrap_or_else(|| SetFunctor::empty(&shape));
        let components = (0..shape.object_count())
            .map(|o| legs.iter().flat_map(|l| l.components[o].iter().copied()).collect())
            .collect();
        NatTrans::new_unchecked(self.functor.clone(), target, components)
    }
}

/// The inclusion of the subfunctor with the given ascending subsets, if
/// they are closed under the structure maps.
pub fn subfunctor_inclusion(f: &SetFunctor, subsets: Vec<Vec<usize>>) -> Option<NatTrans> {
    let shape = f.shape();
    let mut maps = Vec::with_capacity(shape.morphism_count());
    for m in 0..shape.morphism_count() {
        let (i, j) = (shape.dom(m), shape.cod(m));
        let mut row = Vec::with_capacity(subsets[i].len());
        for &x in &subsets[i] {
            row.push(subsets[j].binary_search(&f.map(m)[x]).ok()?);
        }
        maps.push(row);
    }
    let sets = subsets.iter().enumerate().map(|(o, s)| f.set(o).subset(s)).collect();
    let sub = SetFunctor::new_unchecked(shape.clone(), sets, maps);
    Some(NatTrans::new_unchecked(sub, f.clone(), subsets))
}

/// The covariant representable `J(j, −)`; post-composition on morphisms.
pub fn representable(shape: &Arc<FinCategory>, j: usize) -> SetFunctor {
    let n = shape.object_count();
    let sets = (0..n)
        .map(|k| FinSet::with_labels_unchecked(shape.hom(j, k).iter().map(|&h| shape.morphism_name(h).to_string()).collect()))
        .collect();
    let maps = (0..shape.morphism_count())
        .map(|f| {
            let (k, l) = (shape.dom(f), shape.cod(f));
            shape
                .hom(j, k)
                .iter()
                .map(|&h| {
                    let fh = shape.compose(f, h);
                    shape.hom(j, l).iter().position(|&x| x == fh).expect("composite lies in the hom-set")
                })
                .collect()
        })
        .collect();
    SetFunctor::new_unchecked(shape.clone(), sets, maps)
}

/// The Yoneda map `J(j, −) → F` classifying `x ∈ F(j)`.
pub fn yoneda(f: &SetFunctor, j: usize, x: usize) -> NatTrans {
    let shape = f.shape.clone();
    let rep = representable(&shape, j);
    let components = (0..shape.object_count()).map(|k| shape.hom(j, k).iter().map(|&h| f.maps[h][x]).collect()).collect();
    NatTrans::new_unchecked(rep, f.clone(), components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{delta_truncated, opposite, terminal, two};

    /// M on 2 with M(0) = {x, y}, M(1) = {x}.
    pub(crate) fn example_m() -> SetFunctor {
        let shape = Arc::new(two());
        SetFunctor::new(
            shape,
            vec![FinSet::labelled(vec!["x".into(), "y".into()]), FinSet::labelled(vec!["x".into()])],
            vec![vec![0, 1], vec![0, 0], vec![0]],
        )
        .unwrap()
    }

    fn example_phi() -> NatTrans {
        let m = example_m();
        NatTrans::new(m.clone(), m, vec![vec![0, 0], vec![0]]).unwrap()
    }

    #[test]
    fn constant_singleton_is_a_functor() {
        let shape = Arc::new(delta_truncated(2));
        let t = SetFunctor::terminal(&shape);
        assert!(SetFunctor::new(shape, t.sets.clone(), t.maps.clone()).is_ok());
    }

    #[test]
    fn tampered_functor_is_rejected() {
        let m = example_m();
        let mut maps = m.maps.clone();
        maps[0] = vec![1, 0];
        let err = SetFunctor::new(m.shape.clone(), m.sets.clone(), maps).unwrap_err();
        assert_eq!(err, FunctorError::IdentityViolated("0".into()));
        // break u while keeping identities: u∘id0 must equal u, which still
        // holds; break composition on a richer shape instead
        let shape = Arc::new(crate::fincat::chain_category(3).unwrap());
        let sets = vec![FinSet::new(2); 3];
        let mut maps: Vec<Vec<usize>> = (0..shape.morphism_count()).map(|_| vec![0, 1]).collect();
        let long = shape.morphism_index("0->2").unwrap();
        maps[long] = vec![1, 0];
        let err = SetFunctor::new(shape, sets, maps).unwrap_err();
        assert!(matches!(err, FunctorError::CompositionViolated { .. }));
    }

    #[test]
    fn naturality_checks() {
        let phi = example_phi();
        assert!(!phi.is_epi());
        assert!(!phi.is_mono());
        assert!(!phi.is_iso());
        let m = example_m();
        // φ₀ = (x ↦ y, y ↦ x) with φ₁ = id still commutes (Mu is constant);
        // send x to nothing sensible instead
        let err = NatTrans::new(m.clone(), m.clone(), vec![vec![0, 1], vec![1]]).unwrap_err();
        assert_eq!(err, NatTransError::NotFunction("1".into()));
        let id = NatTrans::identity(&m);
        assert!(id.is_iso());
    }

    #[test]
    fn naturality_violation_is_named() {
        // F = representable 2(0,-) = ({id0}, {u}); G = M. Send id0 ↦ y but
        // component at 1 sends u ↦ x: Mu(y) = x, fine. Use a 2-element target
        // at 1 instead to break it.
        let shape = Arc::new(two());
        let g = SetFunctor::new(shape.clone(), vec![FinSet::new(2), FinSet::new(2)], vec![vec![0, 1], vec![0, 1], vec![0, 1]])
            .unwrap();
        let f = representable(&shape, 0);
        let err = NatTrans::new(f, g, vec![vec![0], vec![1]]).unwrap_err();
        assert_eq!(err, NatTransError::NaturalityViolated("u".into()));
    }

    #[test]
    fn factorization_of_the_colimit_unit() {
        // θ_M = (Mu, id): M → Δ{x}
        let m = example_m();
        let delta = SetFunctor::constant(m.shape(), FinSet::labelled(vec!["x".into()]));
        let theta = NatTrans::new(m.clone(), delta, vec![vec![0, 0], vec![0]]).unwrap();
        let fact = factorize(&theta);
        assert_eq!(fact.mid.sizes(), vec![1, 1]);
        assert!(fact.epi.is_epi());
        assert!(fact.mono.is_mono());
        assert_eq!(fact.mono.after(&fact.epi), theta);
    }

    #[test]
    fn factorization_of_monos_and_epis() {
        let m = example_m();
        let id = NatTrans::identity(&m);
        let f = factorize(&id);
        assert!(f.epi.is_iso() && f.mono.is_iso());
        let phi = example_phi();
        let f = factorize(&phi);
        assert!(f.epi.is_epi() && f.mono.is_mono() && !f.mono.is_iso());
        assert_eq!(f.mid.sizes(), vec![1, 1]);
        assert_eq!(f.mono.after(&f.epi), phi);
    }

    #[test]
    fn representable_sizes() {
        let shape = Arc::new(two());
        assert_eq!(representable(&shape, 0).sizes(), vec![1, 1]);
        assert_eq!(representable(&shape, 1).sizes(), vec![0, 1]);
        let one = Arc::new(terminal());
        assert_eq!(representable(&one, 0).sizes(), vec![1]);
        let d3 = delta_truncated(3);
        let d3op = Arc::new(opposite(&d3));
        let simplex0 = representable(&d3op, 0);
        let expected: Vec<usize> = (0..4).map(|n| d3.hom(n, 0).len()).collect();
        assert_eq!(simplex0.sizes(), expected);
    }

    #[test]
    fn coproduct_sizes_add() {
        let d3op = Arc::new(opposite(&delta_truncated(3)));
        let a = representable(&d3op, 1);
        let b = representable(&d3op, 2);
        let c = coproduct(&d3op, &[a.clone(), b.clone()]);
        for o in 0..4 {
            assert_eq!(c.functor.size(o), a.size(o) + b.size(o));
        }
        assert!(c.injections.iter().all(|i| i.is_mono()));
        let empty = coproduct(&d3op, &[]);
        assert_eq!(empty.functor.total_size(), 0);
        let single = coproduct(&d3op, std::slice::from_ref(&a));
        assert!(single.injections[0].is_iso());
        let copaired = c.copair(&[NatTrans::identity(&a), yoneda(&a, 2, 0)]);
        assert_eq!(copaired.after(&c.injections[0]), NatTrans::identity(&a));
    }

    #[test]
    fn orthogonality_trivial_square() {
        let m = example_m();
        let id = NatTrans::identity(&m);
        let phi = example_phi();
        let d = check_orthogonal(&id, &id, &phi, &phi).unwrap();
        assert_eq!(d.unique(), Some(phi));
    }

    #[test]
    fn orthogonality_rejects_noncommuting_square() {
        let m = example_m();
        let id = NatTrans::identity(&m);
        let phi = example_phi();
        assert!(matches!(check_orthogonal(&id, &id, &phi, &id), Err(SquareError::NotCommutative(_))));
    }
}
