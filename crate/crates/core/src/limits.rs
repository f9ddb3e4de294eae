//! Limits and colimits of finite Set-valued diagrams.

use std::collections::HashMap;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::fincat::{cospan, discrete, parallel_pair, FilterWitness, FinCategory};
use crate::setval::{func, FinSet, NatTrans, SetFunctor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error("legs do not commute with `{0}`")]
    NotACone(String),
    #[error("expected one leg per object of the diagram")]
    LegCount,
    #[error("shape is not pseudo-filtered: {0:?}")]
    NotPseudoFiltered(FilterWitness),
}

/// An apex with one leg into each object of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub apex: FinSet,
    pub legs: Vec<Vec<usize>>,
}

/// A nadir with one leg out of each object of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocone {
    pub nadir: FinSet,
    pub legs: Vec<Vec<usize>>,
}

impl Cone {
    /// Checks the cone condition against `d`.
    pub fn check(&self, d: &SetFunctor) -> Result<(), LimitError> {
        let shape = d.shape();
        if self.legs.len() != shape.object_count() {
            return Err(LimitError::LegCount);
        }
        for (o, leg) in self.legs.iter().enumerate() {
            if leg.len() != self.apex.size() || leg.iter().any(|&y| y >= d.size(o)) {
                return Err(LimitError::LegCount);
            }
        }
        for f in 0..shape.morphism_count() {
            if func::compose(d.map(f), &self.legs[shape.dom(f)]) != self.legs[shape.cod(f)] {
                return Err(LimitError::NotACone(shape.morphism_name(f).to_string()));
            }
        }
        Ok(())
    }
}

impl Cocone {
    pub fn check(&self, d: &SetFunctor) -> Result<(), LimitError> {
        let shape = d.shape();
        if self.legs.len() != shape.object_count() {
            return Err(LimitError::LegCount);
        }
        for (o, leg) in self.legs.iter().enumerate() {
            if leg.len() != d.size(o) || leg.iter().any(|&y| y >= self.nadir.size()) {
                return Err(LimitError::LegCount);
            }
        }
        for f in 0..shape.morphism_count() {
            if func::compose(&self.legs[shape.cod(f)], d.map(f)) != self.legs[shape.dom(f)] {
                return Err(LimitError::NotACone(shape.morphism_name(f).to_string()));
            }
        }
        Ok(())
    }
}

/// The limit of a diagram as the set of compatible tuples.
#[derive(Debug, Clone)]
pub struct Limit {
    pub cone: Cone,
    /// Compatible tuples in lexicographic order; `tuples[k][o]` is the
    /// `o`-coordinate of apex element `k`.
    pub tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl Limit {
    pub fn size(&self) -> usize {
        self.tuples.len()
    }

    pub fn position(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    /// The unique map from the apex of `cone` into this limit commuting with
    /// the legs.
    pub fn factor(&self, cone: &Cone) -> Vec<usize> {
        (0..cone.apex.size())
            .map(|e| {
                let t: Vec<usize> = cone.legs.iter().map(|l| l[e]).collect();
                self.position(&t).expect("cone legs land in compatible tuples")
            })
            .collect()
    }
}

/// All compatible tuples of `d`, lexicographically ordered.
pub fn limit(d: &SetFunctor) -> Limit {
    let shape = d.shape();
    let n = shape.object_count();
    // checks to run once object o is assigned: morphisms whose endpoints are
    // both ≤ o with at least one equal to o
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut forcing: Vec<Option<usize>> = vec![None; n];
    for f in 0..shape.morphism_count() {
        if shape.is_identity(f) {
            continue;
        }
        let (i, j) = (shape.dom(f), shape.cod(f));
        if i < j && forcing[j].is_none() {
            forcing[j] = Some(f);
        }
        checks[i.max(j)].push(f);
    }
    let mut tuples = Vec::new();
    let mut t = vec![0; n];
    limit_go(d, &checks, &forcing, 0, &mut t, &mut tuples);
    let index = tuples.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
    let legs = (0..n).map(|o| tuples.iter().map(|t: &Vec<usize>| t[o]).collect()).collect();
    let cone = Cone { apex: FinSet::new(tuples.len()), legs };
    Limit { cone, tuples, index }
}

fn limit_go(
    d: &SetFunctor,
    checks: &[Vec<usize>],
    forcing: &[Option<usize>],
    o: usize,
    t: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if o == t.len() {
        out.push(t.clone());
        return;
    }
    let shape = d.shape();
    let candidates = match forcing[o] {
        Some(f) => {
            let x = d.map(f)[t[shape.dom(f)]];
            x..x + 1
        }
        None => 0..d.size(o),
    };
    for x in candidates {
        t[o] = x;
        if checks[o].iter().all(|&f| d.map(f)[t[shape.dom(f)]] == t[shape.cod(f)]) {
            limit_go(d, checks, forcing, o + 1, t, out);
        }
    }
}

/// Whether `c` is a limiting cone over `d`.
pub fn is_limiting_cone(c: &Cone, d: &SetFunctor) -> Result<bool, LimitError> {
    c.check(d)?;
    let lim = limit(d);
    if lim.size() != c.apex.size() {
        return Ok(false);
    }
    Ok(func::is_injective(&lim.factor(c)))
}

/// A colimit with the classes of the generated equivalence.
#[derive(Debug, Clone)]
pub struct Colimit {
    pub cocone: Cocone,
    /// Members `(object, element)` of each class, in ascending global order;
    /// classes ordered by their smallest member.
    pub classes: Vec<Vec<(usize, usize)>>,
}

impl Colimit {
    pub fn size(&self) -> usize {
        self.classes.len()
    }

    /// The unique map out of this colimit into the nadir of `cocone`.
    pub fn factor(&self, cocone: &Cocone) -> Vec<usize> {
        self.classes.iter().map(|c| cocone.legs[c[0].0][c[0].1]).collect()
    }
}

fn global_offsets(d: &SetFunctor) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut offsets = Vec::with_capacity(d.shape().object_count());
    let mut members = Vec::new();
    for o in 0..d.shape().object_count() {
        offsets.push(members.len());
        members.extend((0..d.size(o)).map(|x| (o, x)));
    }
    (offsets, members)
}

fn colimit_from_classes(d: &SetFunctor, members: &[(usize, usize)], class_of: &[usize]) -> Colimit {
    // renumber classes by smallest member
    let mut rename = HashMap::new();
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    for (g, &c) in class_of.iter().enumerate() {
        let k = *rename.entry(c).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[k].push(members[g]);
    }
    let mut legs: Vec<Vec<usize>> = (0..d.shape().object_count()).map(|o| vec![0; d.size(o)]).collect();
    for (k, class) in classes.iter().enumerate() {
        for &(o, x) in class {
            legs[o][x] = k;
        }
    }
    let labels = classes
        .iter()
        .map(|c| {
            let (o, x) = c[0];
            format!("{}:{}", d.shape().object_name(o), d.set(o).label(x))
        })
        .collect();
    Colimit { cocone: Cocone { nadir: FinSet::with_labels_unchecked(labels), legs }, classes }
}

/// Disjoint union quotiented by the equivalence generated by `x ~ D(u)(x)`.
pub fn colimit(d: &SetFunctor) -> Colimit {
    let shape = d.shape();
    let (offsets, members) = global_offsets(d);
    let mut uf = UnionFind::<usize>::new(members.len());
    for f in 0..shape.morphism_count() {
        let (i, j) = (shape.dom(f), shape.cod(f));
        for (x, &y) in d.map(f).iter().enumerate() {
            uf.union(offsets[i] + x, offsets[j] + y);
        }
    }
    let mut smallest: HashMap<usize, usize> = HashMap::new();
    for g in 0..members.len() {
        smallest.entry(uf.find(g)).or_insert(g);
    }
    let class_of: Vec<usize> = (0..members.len()).map(|g| smallest[&uf.find(g)]).collect();
    colimit_from_classes(d, &members, &class_of)
}

/// Colimit over a pseudo-filtered shape via the single-zig relation
/// `x ~ x'` iff some `u: j → k`, `u': j' → k` have `D(u)(x) = D(u')(x')`.
pub fn filtered_colimit(d: &SetFunctor) -> Result<Colimit, LimitError> {
    let shape = d.shape();
    if let Some(w) = shape.pseudo_filtered_witness() {
        return Err(LimitError::NotPseudoFiltered(w));
    }
    let (offsets, members) = global_offsets(d);
    let n = members.len();
    let mut related = vec![vec![false; n]; n];
    for k in 0..shape.object_count() {
        let mut fibres: Vec<Vec<usize>> = vec![Vec::new(); d.size(k)];
        for u in shape.morphisms_into(k) {
            let j = shape.dom(u);
            for (x, &y) in d.map(u).iter().enumerate() {
                fibres[y].push(offsets[j] + x);
            }
        }
        for fibre in &fibres {
            for &a in fibre {
                for &b in fibre {
                    related[a][b] = true;
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if related[a][b] {
                assert!(
                    (0..n).all(|c| !related[b][c] || related[a][c]),
                    "single-zig relation must be transitive on a pseudo-filtered shape"
                );
            }
        }
    }
    let class_of: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| related[a][b]).unwrap()).collect();
    Ok(colimit_from_classes(d, &members, &class_of))
}

/// The bijection between two colimits of the same diagram commuting with
/// their legs, if there is one.
pub fn colimit_comparison(a: &Colimit, b: &Colimit) -> Option<Vec<usize>> {
    let map = a.factor(&b.cocone);
    if a.size() != b.size() || !func::is_injective(&map) {
        return None;
    }
    for class in &a.classes {
        for &(o, x) in class {
            if b.cocone.legs[o][x] != map[a.cocone.legs[o][x]] {
                return None;
            }
        }
    }
    Some(map)
}

fn cospan_diagram(f: &[usize], g: &[usize], z: usize) -> SetFunctor {
    let shape = Arc::new(cospan());
    SetFunctor::new(
        shape,
        vec![FinSet::new(f.len()), FinSet::new(g.len()), FinSet::new(z)],
        vec![func::identity(f.len()), f.to_vec(), func::identity(g.len()), g.to_vec(), func::identity(z)],
    )
    .expect("cospan of functions")
}

/// Pullback of `f: X → Z` and `g: Y → Z`; legs indexed 0 (X), 1 (Y), 2 (Z).
pub fn pullback(f: &[usize], g: &[usize], z: usize) -> Limit {
    limit(&cospan_diagram(f, g, z))
}

/// Product of finite sets of the given sizes.
pub fn product(sizes: &[usize]) -> Limit {
    let shape = Arc::new(discrete(sizes.len()));
    let d = SetFunctor::new(
        shape,
        sizes.iter().map(|&s| FinSet::new(s)).collect(),
        sizes.iter().map(|&s| func::identity(s)).collect(),
    )
    .expect("discrete diagram");
    limit(&d)
}

/// Equalizer of `f, g: X → Y`; legs indexed 0 (X), 1 (Y).
pub fn equalizer(f: &[usize], g: &[usize], y: usize) -> Limit {
    let shape = Arc::new(parallel_pair());
    let d = SetFunctor::new(
        shape,
        vec![FinSet::new(f.len()), FinSet::new(y)],
        vec![func::identity(f.len()), f.to_vec(), g.to_vec(), func::identity(y)],
    )
    .expect("parallel pair of functions");
    limit(&d)
}

/// The limit of the empty diagram.
pub fn terminal() -> Limit {
    limit(&SetFunctor::empty(&Arc::new(crate::fincat::empty())))
}

/// A componentwise pullback of natural transformations.
#[derive(Debug, Clone)]
pub struct NatPullback {
    pub object: SetFunctor,
    /// Projection to the domain of the first argument.
    pub first: NatTrans,
    /// Projection to the domain of the second argument.
    pub second: NatTrans,
    /// Elements of `object` at each object as pairs.
    pub pairs: Vec<Vec<(usize, usize)>>,
}

/// Pullback of `f: A → C` and `g: B → C` in the functor category.
pub fn pullback_nat(f: &NatTrans, g: &NatTrans) -> NatPullback {
    assert_eq!(f.target(), g.target(), "pullback needs a common codomain");
    let shape: Arc<FinCategory> = f.shape().clone();
    let (a, b) = (f.source(), g.source());
    let pairs: Vec<Vec<(usize, usize)>> = (0..shape.object_count())
        .map(|o| {
            pullback(f.component(o), g.component(o), f.target().size(o))
                .tuples
                .iter()
                .map(|t| (t[0], t[1]))
                .collect()
        })
        .collect();
    let index: Vec<HashMap<(usize, usize), usize>> =
        pairs.iter().map(|ps| ps.iter().enumerate().map(|(k, &p)| (p, k)).collect()).collect();
    let maps = (0..shape.morphism_count())
        .map(|m| {
            let (i, j) = (shape.dom(m), shape.cod(m));
            pairs[i].iter().map(|&(x, y)| index[j][&(a.map(m)[x], b.map(m)[y])]).collect()
        })
        .collect();
    let sets = pairs
        .iter()
        .enumerate()
        .map(|(o, ps)| {
            FinSet::with_labels_unchecked(
                ps.iter().map(|&(x, y)| format!("({},{})", a.set(o).label(x), b.set(o).label(y))).collect(),
            )
        })
        .collect();
    let object = SetFunctor::new_unchecked(shape, sets, maps);
    let first = NatTrans::new_unchecked(
        object.clone(),
        a.clone(),
        pairs.iter().map(|ps| ps.iter().map(|p| p.0).collect()).collect(),
    );
    let second = NatTrans::new_unchecked(
        object.clone(),
        b.clone(),
        pairs.iter().map(|ps| ps.iter().map(|p| p.1).collect()).collect(),
    );
    NatPullback { object, first, second, pairs }
}

/// Whether the commutative square `f ∘ h = g ∘ k` (with `h: P → X`,
/// `k: P → Y`, `f: X → Z`, `g: Y → Z`) is a pullback, checked componentwise
/// with [`is_limiting_cone`].
pub fn is_pullback_square(h: &NatTrans, k: &NatTrans, f: &NatTrans, g: &NatTrans) -> Result<bool, LimitError> {
    let shape = f.shape();
    for o in 0..shape.object_count() {
        let d = cospan_diagram(f.component(o), g.component(o), f.target().size(o));
        let cone = Cone {
            apex: FinSet::new(h.source().size(o)),
            legs: vec![h.component(o).to_vec(), k.component(o).to_vec(), func::compose(f.component(o), h.component(o))],
        };
        if !is_limiting_cone(&cone, &d)? {
            return Ok(false);
        }
    }
    Ok(true)
}
