//! Finite categories given by total composition tables, finite functors
//! between them, and the standard builders (chains, truncated simplex
//! categories, opposites, comma categories).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

mod builders;
mod comma;
mod iso;

pub use builders::*;
pub use comma::{comma_over, comma_under, CommaCategory};
pub use iso::find_isomorphism;

/// A morphism of a finite category, addressed by its position in
/// [`FinCategory::morphisms`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("morphism `{morphism}` refers to unknown object `{object}`")]
    DanglingDomain { morphism: String, object: String },
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("object `{0}` has no identity morphism")]
    MissingIdentity(String),
    #[error("identity law fails: `{identity}` composed with `{morphism}`")]
    IdentityLaw { identity: String, morphism: String },
    #[error("composition entry `{g}` after `{f}` is not composable")]
    NotComposable { g: String, f: String },
    #[error("composite `{gf}` of `{g}` after `{f}` has the wrong domain or codomain")]
    CompositeTyping { g: String, f: String, gf: String },
    #[error("conflicting composites given for `{g}` after `{f}`")]
    ConflictingComposite { g: String, f: String },
    #[error("composition table is missing `{g}` after `{f}`")]
    PartialCompositionTable { g: String, f: String },
    #[error("associativity fails for ({h}, {g}, {f})")]
    NonAssociative { h: String, g: String, f: String },
    #[error("a chain category needs at least one object")]
    EmptyChain,
}

/// A validated finite category.
///
/// Objects and morphisms are addressed by index. The composition table is
/// total on composable pairs and satisfies the unit and associativity laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    // compose[g * m + f] = g ∘ f when cod(f) = dom(g)
    compose: Vec<Option<usize>>,
    // homs[a * n + b] = morphisms a → b in index order
    homs: Vec<Vec<usize>>,
}

impl FinCategory {
    /// Builds a category from index data, checking every law.
    ///
    /// `compose` is called for each composable pair `(g, f)` and must return
    /// the index of `g ∘ f`.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        mut compose: impl FnMut(usize, usize) -> Option<usize>,
    ) -> Result<Self, CategoryError> {
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                if morphisms[f].cod == morphisms[g].dom {
                    table[g * m + f] = compose(g, f);
                }
            }
        }
        Self::from_table(objects, morphisms, identities, table)
    }

    pub(crate) fn from_table(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: Vec<Option<usize>>,
    ) -> Result<Self, CategoryError> {
        let n = objects.len();
        let m = morphisms.len();
        let mut seen = HashMap::new();
        for o in &objects {
            if seen.insert(o.as_str(), ()).is_some() {
                return Err(CategoryError::DuplicateId(o.clone()));
            }
        }
        let mut seen = HashMap::new();
        for mor in &morphisms {
            if seen.insert(mor.name.as_str(), ()).is_some() {
                return Err(CategoryError::DuplicateId(mor.name.clone()));
            }
            for end in [mor.dom, mor.cod] {
                if end >= n {
                    return Err(CategoryError::DanglingDomain {
                        morphism: mor.name.clone(),
                        object: end.to_string(),
                    });
                }
            }
        }
        if identities.len() != n {
            let missing = objects.get(identities.len()).cloned().unwrap_or_default();
            return Err(CategoryError::MissingIdentity(missing));
        }
        for (o, &id) in identities.iter().enumerate() {
            if id >= m || morphisms[id].dom != o || morphisms[id].cod != o {
                return Err(CategoryError::MissingIdentity(objects[o].clone()));
            }
        }
        let name = |i: usize| morphisms[i].name.clone();
        for g in 0..m {
            for f in 0..m {
                let composable = morphisms[f].cod == morphisms[g].dom;
                match (composable, compose[g * m + f]) {
                    (true, None) => {
                        return Err(CategoryError::PartialCompositionTable { g: name(g), f: name(f) })
                    }
                    (false, Some(_)) => {
                        return Err(CategoryError::NotComposable { g: name(g), f: name(f) })
                    }
                    (true, Some(gf)) => {
                        if gf >= m || morphisms[gf].dom != morphisms[f].dom || morphisms[gf].cod != morphisms[g].cod {
                            return Err(CategoryError::CompositeTyping {
                                g: name(g),
                                f: name(f),
                                gf: if gf < m { name(gf) } else { gf.to_string() },
                            });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for (f, mor) in morphisms.iter().enumerate() {
            let left = identities[mor.cod];
            let right = identities[mor.dom];
            if compose[left * m + f] != Some(f) {
                return Err(CategoryError::IdentityLaw { identity: name(left), morphism: name(f) });
            }
            if compose[f * m + right] != Some(f) {
                return Err(CategoryError::IdentityLaw { identity: name(right), morphism: name(f) });
            }
        }
        let mut homs = vec![Vec::new(); n * n];
        for (i, mor) in morphisms.iter().enumerate() {
            homs[mor.dom * n + mor.cod].push(i);
        }
        let cat = FinCategory { objects, morphisms, identities, compose, homs };
        cat.check_associativity()?;
        Ok(cat)
    }

    fn check_associativity(&self) -> Result<(), CategoryError> {
        for f in 0..self.morphisms.len() {
            let b = self.cod(f);
            for g in self.morphisms_from(b) {
                let gf = self.compose(g, f);
                for h in self.morphisms_from(self.cod(g)) {
                    let left = self.compose(h, gf);
                    let right = self.compose(self.compose(h, g), f);
                    if left != right {
                        return Err(CategoryError::NonAssociative {
                            h: self.morphisms[h].name.clone(),
                            g: self.morphisms[g].name.clone(),
                            f: self.morphisms[f].name.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn morphism_name(&self, f: usize) -> &str {
        &self.morphisms[f].name
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn dom(&self, f: usize) -> usize {
        self.morphisms[f].dom
    }

    pub fn cod(&self, f: usize) -> usize {
        self.morphisms[f].cod
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.dom(f)] == f
    }

    /// `g ∘ f`. Panics when the pair is not composable.
    pub fn compose(&self, g: usize, f: usize) -> usize {
        self.try_compose(g, f)
            .unwrap_or_else(|| panic!("{} ∘ {} is not composable", self.morphisms[g].name, self.morphisms[f].name))
    }

    pub fn try_compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g * self.morphisms.len() + f]
    }

    /// Morphisms `a → b`, in index order.
    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.homs[a * self.objects.len() + b]
    }

    pub fn morphisms_from(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.objects.len()).flat_map(move |b| self.hom(a, b).iter().copied())
    }

    pub fn morphisms_into(&self, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.objects.len()).flat_map(move |a| self.hom(a, b).iter().copied())
    }

    /// All composable pairs `(g, f)` with `cod(f) = dom(g)`.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.morphisms.len();
        (0..m).flat_map(move |g| (0..m).map(move |f| (g, f))).filter(move |&(g, f)| self.cod(f) == self.dom(g))
    }

    /// Every hom-set has at most one element.
    pub fn is_preorder(&self) -> bool {
        self.homs.iter().all(|h| h.len() <= 1)
    }

    /// Partition of the objects into classes of the undirected reachability
    /// relation. Classes are sorted and listed by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.objects.len();
        let mut uf = UnionFind::<usize>::new(n);
        for mor in &self.morphisms {
            uf.union(mor.dom, mor.cod);
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for o in 0..n {
            let root = uf.find(o);
            let idx = *slot.entry(root).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[idx].push(o);
        }
        classes
    }

    /// `u` is left-cancellable: `u ∘ f = u ∘ g` forces `f = g`.
    pub fn is_mono(&self, u: usize) -> bool {
        let a = self.dom(u);
        for x in 0..self.objects.len() {
            let hom = self.hom(x, a);
            for (i, &f) in hom.iter().enumerate() {
                for &g in &hom[i + 1..] {
                    if self.compose(u, f) == self.compose(u, g) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Returns the first obstruction to every connected component being
    /// filtered, or `None` when the category is pseudo-filtered.
    pub fn pseudo_filtered_witness(&self) -> Option<FilterWitness> {
        let n = self.objects.len();
        for class in self.connected_components() {
            for (i, &a) in class.iter().enumerate() {
                for &b in &class[i + 1..] {
                    let cospan = (0..n).any(|k| !self.hom(a, k).is_empty() && !self.hom(b, k).is_empty());
                    if !cospan {
                        return Some(FilterWitness::NoCospan { a, b });
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let hom = self.hom(a, b);
                for (i, &u) in hom.iter().enumerate() {
                    for &v in &hom[i + 1..] {
                        let coequalized = self.morphisms_from(b).any(|w| self.compose(w, u) == self.compose(w, v));
                        if !coequalized {
                            return Some(FilterWitness::NoCoequalizer { u, v });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_pseudo_filtered(&self) -> bool {
        self.pseudo_filtered_witness().is_none()
    }
}

impl fmt::Display for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinCategory({} objects, {} morphisms)", self.objects.len(), self.morphisms.len())
    }
}

/// Why a category fails to be pseudo-filtered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterWitness {
    /// Two objects of one component with no common codomain.
    NoCospan { a: usize, b: usize },
    /// A parallel pair that no arrow coequalizes.
    NoCoequalizer { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("object map has {got} entries, expected {expected}")]
    ObjectMapSize { expected: usize, got: usize },
    #[error("morphism map has {got} entries, expected {expected}")]
    MorphismMapSize { expected: usize, got: usize },
    #[error("index out of range in the image of `{0}`")]
    OutOfRange(String),
    #[error("`{0}` is sent to a morphism with the wrong domain or codomain")]
    EndpointMismatch(String),
    #[error("identity of `{0}` is not preserved")]
    IdentityViolated(String),
    #[error("composite `{g}` after `{f}` is not preserved")]
    CompositionViolated { g: String, f: String },
}

/// A functor between finite categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    object_map: Vec<usize>,
    morphism_map: Vec<usize>,
}

impl FinFunctor {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Self, FunctorError> {
        if object_map.len() != source.object_count() {
            return Err(FunctorError::ObjectMapSize { expected: source.object_count(), got: object_map.len() });
        }
        if morphism_map.len() != source.morphism_count() {
            return Err(FunctorError::MorphismMapSize { expected: source.morphism_count(), got: morphism_map.len() });
        }
        for (o, &t) in object_map.iter().enumerate() {
            if t >= target.object_count() {
                return Err(FunctorError::OutOfRange(source.object_name(o).to_string()));
            }
        }
        for (f, &t) in morphism_map.iter().enumerate() {
            if t >= target.morphism_count() {
                return Err(FunctorError::OutOfRange(source.morphism_name(f).to_string()));
            }
            if target.dom(t) != object_map[source.dom(f)] || target.cod(t) != object_map[source.cod(f)] {
                return Err(FunctorError::EndpointMismatch(source.morphism_name(f).to_string()));
            }
        }
        for o in 0..source.object_count() {
            if morphism_map[source.identity(o)] != target.identity(object_map[o]) {
                return Err(FunctorError::IdentityViolated(source.object_name(o).to_string()));
            }
        }
        for (g, f) in source.composable_pairs() {
            if morphism_map[source.compose(g, f)] != target.compose(morphism_map[g], morphism_map[f]) {
                return Err(FunctorError::CompositionViolated {
                    g: source.morphism_name(g).to_string(),
                    f: source.morphism_name(f).to_string(),
                });
            }
        }
        Ok(FinFunctor { source, target, object_map, morphism_map })
    }

    pub fn identity(c: &Arc<FinCategory>) -> Self {
        FinFunctor {
            source: c.clone(),
            target: c.clone(),
            object_map: (0..c.object_count()).collect(),
            morphism_map: (0..c.morphism_count()).collect(),
        }
    }

    /// The unique functor into the terminal category.
    pub fn to_terminal(c: &Arc<FinCategory>) -> Self {
        FinFunctor {
            source: c.clone(),
            target: Arc::new(terminal()),
            object_map: vec![0; c.object_count()],
            morphism_map: vec![0; c.morphism_count()],
        }
    }

    /// The functor from the terminal category picking out object `a`.
    pub fn constant_object(c: &Arc<FinCategory>, a: usize) -> Self {
        FinFunctor {
            source: Arc::new(terminal()),
            target: c.clone(),
            object_map: vec![a],
            morphism_map: vec![c.identity(a)],
        }
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn on_object(&self, o: usize) -> usize {
        self.object_map[o]
    }

    pub fn on_morphism(&self, f: usize) -> usize {
        self.morphism_map[f]
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn morphism_map(&self) -> &[usize] {
        &self.morphism_map
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FinFunctor) -> Result<FinFunctor, FunctorError> {
        FinFunctor::new(
            self.source.clone(),
            other.target.clone(),
            self.object_map.iter().map(|&o| other.object_map[o]).collect(),
            self.morphism_map.iter().map(|&f| other.morphism_map[f]).collect(),
        )
    }

    /// For every pair of distinct parallel arrows `f, g: A' → A` of the
    /// target, some `h: A → K(b)` separates them (`h∘f ≠ h∘g`). Returns the
    /// first inseparable pair otherwise.
    pub fn cogenerating_witness(&self) -> Option<(usize, usize)> {
        let a_cat = &self.target;
        let image: Vec<usize> = {
            let mut v = self.object_map.clone();
            v.sort_unstable();
            v.dedup();
            v
        };
        for src in 0..a_cat.object_count() {
            for dst in 0..a_cat.object_count() {
                let hom = a_cat.hom(src, dst);
                for (i, &f) in hom.iter().enumerate() {
                    for &g in &hom[i + 1..] {
                        let separated = image
                            .iter()
                            .any(|&kb| a_cat.hom(dst, kb).iter().any(|&h| a_cat.compose(h, f) != a_cat.compose(h, g)));
                        if !separated {
                            return Some((f, g));
                        }
                    }
                }
            }
        }
        None
    }

    /// The image of the objects of the source is a cogenerating set of the
    /// target.
    pub fn is_cogenerating(&self) -> bool {
        self.cogenerating_witness().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw_two(skip_u_id0: bool) -> Result<FinCategory, CategoryError> {
        let objects = vec!["0".to_string(), "1".to_string()];
        let morphisms = vec![
            Morphism { name: "id0".into(), dom: 0, cod: 0 },
            Morphism { name: "id1".into(), dom: 1, cod: 1 },
            Morphism { name: "u".into(), dom: 0, cod: 1 },
        ];
        FinCategory::new(objects, morphisms, vec![0, 1], |g, f| match (g, f) {
            (0, 0) => Some(0),
            (1, 1) => Some(1),
            (2, 0) if skip_u_id0 => None,
            (2, 0) => Some(2),
            (1, 2) => Some(2),
            _ => None,
        })
    }

    #[test]
    fn two_object_ordinal_validates() {
        let two = raw_two(false).unwrap();
        assert_eq!(two.morphism_count(), 3);
        assert_eq!(two.hom(0, 1), &[2]);
        assert!(two.hom(1, 0).is_empty());
    }

    #[test]
    fn missing_composite_is_reported() {
        let err = raw_two(true).unwrap_err();
        assert_eq!(err, CategoryError::PartialCompositionTable { g: "u".into(), f: "id0".into() });
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // unital table on {e, a, b} with (a∘a)∘a = b but a∘(a∘a) = a
        let objects = vec!["*".to_string()];
        let morphisms = vec![
            Morphism { name: "e".into(), dom: 0, cod: 0 },
            Morphism { name: "a".into(), dom: 0, cod: 0 },
            Morphism { name: "b".into(), dom: 0, cod: 0 },
        ];
        let table = [[0, 1, 2], [1, 2, 1], [2, 2, 2]];
        let err = FinCategory::new(objects, morphisms, vec![0], |g, f| Some(table[g][f])).unwrap_err();
        assert!(matches!(err, CategoryError::NonAssociative { .. }), "{err:?}");
    }

    #[test]
    fn identity_law_is_checked() {
        let objects = vec!["*".to_string()];
        let morphisms = vec![
            Morphism { name: "e".into(), dom: 0, cod: 0 },
            Morphism { name: "a".into(), dom: 0, cod: 0 },
        ];
        let table = [[0, 0], [1, 1]];
        let err = FinCategory::new(objects, morphisms, vec![0], |g, f| Some(table[g][f])).unwrap_err();
        assert!(matches!(err, CategoryError::IdentityLaw { .. }));
    }

    #[test]
    fn dangling_domain() {
        let err = FinCategory::new(
            vec!["0".into()],
            vec![Morphism { name: "f".into(), dom: 0, cod: 3 }],
            vec![0],
            |_, _| Some(0),
        )
        .unwrap_err();
        assert!(matches!(err, CategoryError::DanglingDomain { .. }));
    }

    #[test]
    fn monos_in_small_categories() {
        let two = chain_category(2).unwrap();
        for f in 0..two.morphism_count() {
            assert!(two.is_mono(f));
        }
        let split = split_idempotent();
        let r = split.morphism_index("r").unwrap();
        let s = split.morphism_index("s").unwrap();
        assert!(!split.is_mono(r));
        assert!(split.is_mono(s));
    }

    #[test]
    fn pseudo_filtered_examples() {
        assert!(chain_category(2).unwrap().is_pseudo_filtered());
        assert!(discrete(2).is_pseudo_filtered());
        let pp = parallel_pair();
        assert_eq!(pp.pseudo_filtered_witness(), Some(FilterWitness::NoCoequalizer { u: 1, v: 2 }));
        let span = span();
        assert!(matches!(span.pseudo_filtered_witness(), Some(FilterWitness::NoCospan { .. })));
    }

    #[test]
    fn components() {
        assert_eq!(terminal().connected_components(), vec![vec![0]]);
        assert_eq!(discrete(3).connected_components(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(chain_category(2).unwrap().connected_components(), vec![vec![0, 1]]);
    }

    #[test]
    fn cogenerating_sets() {
        let d3op = Arc::new(opposite(&delta_truncated(3)));
        let k = delta_inclusion_op(0, 3);
        assert!(Arc::ptr_eq(k.target(), k.target()));
        assert!(k.is_cogenerating());
        assert!(FinFunctor::identity(&d3op).is_cogenerating());
        // a parallel pair u, v: 0 → 1 is not separated when K only hits 0
        let pp = Arc::new(parallel_pair());
        let k = FinFunctor::constant_object(&pp, 0);
        let (f, g) = k.cogenerating_witness().unwrap();
        assert_eq!((pp.morphism_name(f), pp.morphism_name(g)), ("u", "v"));
        // hitting 1 separates them through the identity of 1
        assert!(FinFunctor::constant_object(&pp, 1).is_cogenerating());
    }

    #[test]
    fn functor_validation_catches_broken_composition() {
        let two = Arc::new(chain_category(2).unwrap());
        let pp = Arc::new(parallel_pair());
        // object map 0 ↦ 0, 1 ↦ 1, u ↦ u is fine
        let ok = FinFunctor::new(two.clone(), pp.clone(), vec![0, 1], vec![0, 1, 3]);
        assert!(ok.is_ok(), "{ok:?}");
        let bad = FinFunctor::new(two.clone(), pp.clone(), vec![0, 1], vec![0, 1, 1]);
        assert!(bad.is_err());
    }
}
