use std::collections::HashMap;
use std::sync::Arc;

use super::{FinCategory, FinFunctor, Morphism};

/// A materialized comma category together with its projection to the
/// domain of `K`.
#[derive(Debug, Clone)]
pub struct CommaCategory {
    pub category: Arc<FinCategory>,
    pub projection: FinFunctor,
    /// For each object, the pair `(b, f)` it stands for.
    pub arrows: Vec<(usize, usize)>,
}

impl CommaCategory {
    pub fn object_of(&self, b: usize, f: usize) -> Option<usize> {
        self.arrows.iter().position(|&p| p == (b, f))
    }
}

/// `(a ↓ K)`: objects are arrows `f: a → K(b)` ordered by `(b, f)`, a
/// morphism `(b, f) → (b', f')` is a `v: b → b'` with `K(v)∘f = f'`.
pub fn comma_under(a: usize, k: &FinFunctor) -> CommaCategory {
    let big = k.target();
    let small = k.source();
    let mut arrows = Vec::new();
    for b in 0..small.object_count() {
        for &f in big.hom(a, k.on_object(b)) {
            arrows.push((b, f));
        }
    }
    build(arrows, k, |v, f, f2| big.compose(k.on_morphism(v), f) == f2, "↓")
}

/// `(K ↓ a)`: objects are arrows `f: K(b) → a` ordered by `(b, f)`, a
/// morphism `(b, f) → (b', f')` is a `v: b → b'` with `f'∘K(v) = f`.
pub fn comma_over(k: &FinFunctor, a: usize) -> CommaCategory {
    let big = k.target();
    let small = k.source();
    let mut arrows = Vec::new();
    for b in 0..small.object_count() {
        for &f in big.hom(k.on_object(b), a) {
            arrows.push((b, f));
        }
    }
    build(arrows, k, |v, f, f2| big.compose(f2, k.on_morphism(v)) == f, "↑")
}

fn build(
    arrows: Vec<(usize, usize)>,
    k: &FinFunctor,
    commutes: impl Fn(usize, usize, usize) -> bool,
    tag: &str,
) -> CommaCategory {
    let small = k.source();
    let big = k.target();
    let objects: Vec<String> =
        arrows.iter().map(|&(b, f)| format!("{}{tag}{}", small.object_name(b), big.morphism_name(f))).collect();
    let mut morphisms = Vec::new();
    let mut underlying = Vec::new();
    let mut index = HashMap::new();
    for (i, &(b, f)) in arrows.iter().enumerate() {
        for (j, &(b2, f2)) in arrows.iter().enumerate() {
            for &v in small.hom(b, b2) {
                if commutes(v, f, f2) {
                    index.insert((i, j, v), morphisms.len());
                    morphisms.push(Morphism { name: format!("{}:{i}->{j}", small.morphism_name(v)), dom: i, cod: j });
                    underlying.push(v);
                }
            }
        }
    }
    let identities =
        arrows.iter().enumerate().map(|(i, &(b, _))| index[&(i, i, small.identity(b))]).collect();
    let category = FinCategory::new(objects, morphisms.clone(), identities, |g, f| {
        let v = small.compose(underlying[g], underlying[f]);
        index.get(&(morphisms[f].dom, morphisms[g].cod, v)).copied()
    })
    .expect("comma category satisfies the category laws");
    let category = Arc::new(category);
    let projection = FinFunctor::new(
        category.clone(),
        small.clone(),
        arrows.iter().map(|&(b, _)| b).collect(),
        underlying,
    )
    .expect("comma projection is a functor");
    CommaCategory { category, projection, arrows }
}
