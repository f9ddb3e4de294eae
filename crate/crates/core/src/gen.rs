//! Seeded random generators and small exhaustive corpora used by the
//! property suites, the acceptance suite and the CLI fixtures.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fincat::{
    chain_category, discrete, disjoint_union, monoid, opposite, parallel_pair, preorder_category, split_idempotent,
    terminal, two, CategoryError, FinCategory, FinFunctor, Morphism,
};
use crate::setval::{coproduct, nat_trans_between, FinSet, NatTrans, SetFunctor};

const NODE_BUDGET: usize = 20_000;

/// Random instances from a ChaCha stream; equal seeds give equal streams.
pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        items.choose(&mut self.rng).expect("nonempty choice")
    }

    /// A random functor on `shape` with every set of size at most `max_size`.
    pub fn functor(&mut self, shape: &Arc<FinCategory>, max_size: usize) -> SetFunctor {
        loop {
            let sizes: Vec<usize> = (0..shape.object_count()).map(|_| self.rng.gen_range(0..=max_size)).collect();
            if let Some(f) = self.functor_with_sizes(shape, &sizes) {
                return f;
            }
        }
    }

    /// A random functor with the given set sizes, if the search finds one
    /// within its budget.
    pub fn functor_with_sizes(&mut self, shape: &Arc<FinCategory>, sizes: &[usize]) -> Option<SetFunctor> {
        let maps = FunctorSearch::new(shape, sizes).run(&mut self.rng)?;
        let sets = sizes.iter().map(|&s| FinSet::new(s)).collect();
        Some(SetFunctor::new(shape.clone(), sets, maps).expect("search output is functorial"))
    }

    /// A random natural transformation `source → target`, drawn from the
    /// first `pool` solutions in search order.
    pub fn nat_trans(&mut self, source: &SetFunctor, target: &SetFunctor, pool: usize) -> Option<NatTrans> {
        let all = nat_trans_between(source, target, pool);
        all.choose(&mut self.rng).cloned()
    }

    /// A random pair of functors with a random map between them.
    pub fn morphism(&mut self, shape: &Arc<FinCategory>, max_size: usize) -> NatTrans {
        loop {
            let target = self.functor(shape, max_size);
            let source = self.functor(shape, max_size);
            if let Some(t) = self.nat_trans(&source, &target, 64) {
                return t;
            }
        }
    }

    /// A random functor `source → target`.
    pub fn fin_functor(&mut self, source: &Arc<FinCategory>, target: &Arc<FinCategory>) -> FinFunctor {
        assert!(target.object_count() > 0 || source.object_count() == 0, "no functor into the empty category");
        loop {
            let objects: Vec<usize> = (0..source.object_count()).map(|_| self.below(target.object_count())).collect();
            if let Some(morphisms) = self.functor_morphisms(source, target, &objects) {
                return FinFunctor::new(source.clone(), target.clone(), objects, morphisms).expect("search output is a functor");
            }
        }
    }

    fn functor_morphisms(&mut self, source: &FinCategory, target: &FinCategory, objects: &[usize]) -> Option<Vec<usize>> {
        let m = source.morphism_count();
        let mut assigned: Vec<Option<usize>> = vec![None; m];
        for o in 0..source.object_count() {
            assigned[source.identity(o)] = Some(target.identity(objects[o]));
        }
        let free: Vec<usize> = (0..m).filter(|&f| assigned[f].is_none()).collect();
        let mut budget = NODE_BUDGET;
        fn consistent(source: &FinCategory, target: &FinCategory, a: &[Option<usize>]) -> bool {
            source.composable_pairs().all(|(g, f)| match (a[g], a[f], a[source.compose(g, f)]) {
                (Some(x), Some(y), Some(z)) => target.compose(x, y) == z,
                _ => true,
            })
        }
        #[allow(clippy::too_many_arguments)]
        fn go(
            i: usize,
            free: &[usize],
            source: &FinCategory,
            target: &FinCategory,
            objects: &[usize],
            a: &mut Vec<Option<usize>>,
            rng: &mut ChaCha8Rng,
            budget: &mut usize,
        ) -> bool {
            if i == free.len() {
                return true;
            }
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            let f = free[i];
            let mut choices = target.hom(objects[source.dom(f)], objects[source.cod(f)]).to_vec();
            choices.shuffle(rng);
            for c in choices {
                a[f] = Some(c);
                if consistent(source, target, a) && go(i + 1, free, source, target, objects, a, rng, budget) {
                    return true;
                }
            }
            a[f] = None;
            false
        }
        go(0, &free, source, target, objects, &mut assigned, &mut self.rng, &mut budget)
            .then(|| assigned.into_iter().map(|x| x.unwrap()).collect())
    }

    /// A random preorder on `n` points as a category.
    pub fn preorder(&mut self, n: usize, density: f64) -> FinCategory {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.rng.gen_bool(density) {
                    pairs.push((a, b));
                }
            }
        }
        preorder_category(n, &pairs)
    }

    /// A random poset on `n ≤ 4` points in which every connected component
    /// has a greatest element, hence a pseudo-filtered category.
    pub fn topped_poset(&mut self, n: usize) -> FinCategory {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut self.rng);
        // order[0] of each block is its top
        let mut pairs = Vec::new();
        let mut start = 0;
        while start < n {
            let len = self.rng.gen_range(1..=n - start);
            let block = &order[start..start + len];
            for (i, &a) in block.iter().enumerate().skip(1) {
                pairs.push((a, block[0]));
                for &b in &block[1..i] {
                    if self.rng.gen_bool(0.4) {
                        pairs.push((b, a));
                    }
                }
            }
            start += len;
        }
        let c = preorder_category(n, &pairs);
        debug_assert!(c.is_pseudo_filtered());
        c
    }

    /// A pseudo-filtered shape with at most `max_objects` objects, either a
    /// topped poset or one of [`filtered_fixtures`].
    pub fn pseudo_filtered(&mut self, max_objects: usize) -> Arc<FinCategory> {
        let fixtures: Vec<FinCategory> =
            filtered_fixtures().into_iter().filter(|c| c.object_count() <= max_objects).collect();
        if !fixtures.is_empty() && self.rng.gen_bool(0.25) {
            return Arc::new(self.choose(&fixtures).clone());
        }
        let n = self.rng.gen_range(1..=max_objects);
        Arc::new(self.topped_poset(n))
    }

    /// A random shape with at most `max_objects` objects: a random preorder
    /// or a member of [`category_corpus`].
    pub fn shape(&mut self, max_objects: usize) -> Arc<FinCategory> {
        if self.rng.gen_bool(0.5) {
            let corpus: Vec<FinCategory> =
                category_corpus().into_iter().filter(|c| c.object_count() <= max_objects).collect();
            return Arc::new(self.choose(&corpus).clone());
        }
        let n = self.rng.gen_range(1..=max_objects);
        Arc::new(self.preorder(n, 0.3))
    }

    /// A commutative square `v ∘ e = m ∘ u` with `e` epi and `m` mono, built
    /// so that `w` is a diagonal. Returns `(e, m, u, v, w)`.
    pub fn epi_mono_square(&mut self, shape: &Arc<FinCategory>, max_size: usize) -> Square {
        let a = self.functor(shape, max_size);
        let (x, r) = loop {
            let x = self.functor(shape, max_size);
            if let Some(r) = self.nat_trans(&x, &a, 64) {
                break (x, r);
            }
        };
        let sum = coproduct(shape, &[a.clone(), x]);
        let e = sum.copair(&[NatTrans::identity(&a), r]);
        let b = self.functor(shape, max_size);
        let (b, w) = self.force_nat(&a, &b, shape, max_size);
        let y = self.functor(shape, max_size);
        let sum_b = coproduct(shape, &[b, y]);
        let m = sum_b.injections[0].clone();
        let u = w.after(&e);
        let v = m.after(&w);
        Square { e, m, u, v, diagonal: Some(w) }
    }

    /// A commutative square that admits no diagonal or more than one:
    /// either `e` is a non-epi injection and `m` a codiagonal, or `e` is a
    /// non-epi injection and `v` leaves the image of a mono `m`.
    pub fn crafted_square(&mut self, shape: &Arc<FinCategory>, max_size: usize) -> Square {
        loop {
            let a = self.functor(shape, max_size);
            let x = self.functor(shape, max_size);
            if x.total_size() == 0 {
                continue;
            }
            let sum_a = coproduct(shape, &[a.clone(), x.clone()]);
            let e = sum_a.injections[0].clone();
            if self.rng.gen_bool(0.5) {
                // m = [id, id]: B + B → B, two lifts on the X summand
                let b = self.functor(shape, max_size);
                let Some(v_a) = self.nat_trans(&a, &b, 64) else { continue };
                let Some(v_x) = self.nat_trans(&x, &b, 64) else { continue };
                let sum_b = coproduct(shape, &[b.clone(), b.clone()]);
                let m = sum_b.copair(&[NatTrans::identity(&b), NatTrans::identity(&b)]);
                let u = sum_b.injections[0].after(&v_a);
                let v = sum_a.copair(&[v_a, v_x]);
                return Square { e, m, u, v, diagonal: None };
            } else {
                // m: B → B + Y, v sends X into Y
                let b = self.functor(shape, max_size);
                let y = self.functor(shape, max_size);
                let Some(u) = self.nat_trans(&a, &b, 64) else { continue };
                let Some(v_x) = self.nat_trans(&x, &y, 64) else { continue };
                let sum_b = coproduct(shape, &[b, y]);
                let m = sum_b.injections[0].clone();
                let v = sum_a.copair(&[m.after(&u), sum_b.injections[1].after(&v_x)]);
                return Square { e, m, u, v, diagonal: None };
            }
        }
    }

    /// A map `source → target`, regenerating `target` until one exists.
    fn force_nat(
        &mut self,
        source: &SetFunctor,
        target: &SetFunctor,
        shape: &Arc<FinCategory>,
        max_size: usize,
    ) -> (SetFunctor, NatTrans) {
        let mut target = target.clone();
        loop {
            if let Some(t) = self.nat_trans(source, &target, 64) {
                return (target, t);
            }
            target = self.functor(shape, max_size.max(1));
        }
    }
}

/// Data of a square `v ∘ e = m ∘ u` and its expected diagonal.
#[derive(Debug, Clone)]
pub struct Square {
    pub e: NatTrans,
    pub m: NatTrans,
    pub u: NatTrans,
    pub v: NatTrans,
    pub diagonal: Option<NatTrans>,
}

/// Backtracking search for structure maps with given set sizes, values
/// tried in random order.
struct FunctorSearch<'a> {
    shape: &'a FinCategory,
    sizes: &'a [usize],
    // cells (morphism, element) for non-identity morphisms
    cells: Vec<(usize, usize)>,
    maps: Vec<Vec<Option<usize>>>,
    pairs: Vec<(usize, usize, usize)>,
}

impl<'a> FunctorSearch<'a> {
    fn new(shape: &'a FinCategory, sizes: &'a [usize]) -> Self {
        let m = shape.morphism_count();
        let mut maps: Vec<Vec<Option<usize>>> = (0..m).map(|f| vec![None; sizes[shape.dom(f)]]).collect();
        for o in 0..shape.object_count() {
            maps[shape.identity(o)] = (0..sizes[o]).map(Some).collect();
        }
        let cells = (0..m)
            .filter(|&f| !shape.is_identity(f))
            .flat_map(|f| (0..sizes[shape.dom(f)]).map(move |x| (f, x)))
            .collect();
        let pairs = shape
            .composable_pairs()
            .filter(|&(g, f)| !shape.is_identity(g) && !shape.is_identity(f))
            .map(|(g, f)| (g, f, shape.compose(g, f)))
            .collect();
        FunctorSearch { shape, sizes, cells, maps, pairs }
    }

    fn run(mut self, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<usize>>> {
        for f in 0..self.shape.morphism_count() {
            if self.sizes[self.shape.dom(f)] > 0 && self.sizes[self.shape.cod(f)] == 0 {
                return None;
            }
        }
        let mut budget = NODE_BUDGET;
        self.go(0, rng, &mut budget).then(|| self.maps.into_iter().map(|row| row.into_iter().map(Option::unwrap).collect()).collect())
    }

    fn consistent(&self) -> bool {
        self.pairs.iter().all(|&(g, f, h)| {
            self.maps[f].iter().enumerate().all(|(x, &y)| match (y, self.maps[h][x]) {
                (Some(y), Some(z)) => self.maps[g][y].is_none_or(|w| w == z),
                _ => true,
            })
        })
    }

    fn go(&mut self, i: usize, rng: &mut ChaCha8Rng, budget: &mut usize) -> bool {
        if i == self.cells.len() {
            return true;
        }
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let (f, x) = self.cells[i];
        let mut values: Vec<usize> = (0..self.sizes[self.shape.cod(f)]).collect();
        values.shuffle(rng);
        for v in values {
            self.maps[f][x] = Some(v);
            if self.consistent() && self.go(i + 1, rng, budget) {
                return true;
            }
        }
        self.maps[f][x] = None;
        false
    }
}

/// The free category on a directed acyclic multigraph, morphisms being
/// paths. Edges are `(source, target)` pairs named `e0, e1, …`.
pub fn free_category(n: usize, edges: &[(usize, usize)]) -> Result<FinCategory, CategoryError> {
    // paths as edge lists; identities are empty paths
    let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..n).map(|o| (o, o, Vec::new())).collect();
    let mut frontier: Vec<usize> = (0..n).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in frontier {
            let (s, t, ref path) = paths[p].clone();
            for (i, &(a, b)) in edges.iter().enumerate() {
                if a == t {
                    let mut longer = path.clone();
                    longer.push(i);
                    next.push(paths.len());
                    paths.push((s, b, longer));
                }
            }
        }
        frontier = next;
        if paths.len() > 4096 {
            panic!("graph has a cycle or too many paths");
        }
    }
    let index: HashMap<Vec<usize>, usize> =
        paths.iter().enumerate().filter(|(_, p)| !p.2.is_empty()).map(|(i, p)| (p.2.clone(), i)).collect();
    let morphisms = paths
        .iter()
        .map(|(s, t, path)| {
            let name = if path.is_empty() {
                format!("id{s}")
            } else {
                path.iter().map(|e| format!("e{e}")).collect::<Vec<_>>().join(".")
            };
            Morphism { name, dom: *s, cod: *t }
        })
        .collect();
    let names = (0..n).map(|i| i.to_string()).collect();
    FinCategory::new(names, morphisms, (0..n).collect(), |g, f| {
        let mut path = paths[f].2.clone();
        path.extend(&paths[g].2);
        if path.is_empty() {
            Some(f)
        } else if paths[f].2.is_empty() {
            Some(g)
        } else if paths[g].2.is_empty() {
            Some(f)
        } else {
            index.get(&path).copied()
        }
    })
}

/// All monoids of order at most 3, one category per multiplication table
/// (isomorphic tables are not merged).
pub fn small_monoids() -> Vec<FinCategory> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        let free = (n - 1) * (n - 1);
        for code in 0..n.pow(free as u32) {
            let mut table: Vec<Vec<usize>> = (0..n).map(|g| (0..n).map(|f| if g == 0 { f } else if f == 0 { g } else { 0 }).collect()).collect();
            let mut c = code;
            for g in 1..n {
                for f in 1..n {
                    table[g][f] = c % n;
                    c /= n;
                }
            }
            if let Ok(cat) = monoid(&table) {
                out.push(cat);
            }
        }
    }
    out
}

/// Finite categories with at most 3 objects and at most 9 morphisms:
/// every preorder on 1 to 3 points, every monoid of order at most 3, free
/// categories on small acyclic multigraphs, the split idempotent, the
/// parallel pair, disjoint unions and opposites of these.
pub fn category_corpus() -> Vec<FinCategory> {
    let mut out: Vec<FinCategory> = Vec::new();
    for n in 1..=3usize {
        let offdiag: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
        let mut seen = Vec::new();
        for mask in 0..1u32 << offdiag.len() {
            let pairs: Vec<(usize, usize)> =
                offdiag.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            let c = preorder_category(n, &pairs);
            let key: Vec<(usize, usize)> = c.morphisms().iter().map(|m| (m.dom, m.cod)).collect();
            if !seen.contains(&key) {
                seen.push(key);
                out.push(c);
            }
        }
    }
    out.extend(small_monoids());
    let graphs: &[(usize, &[(usize, usize)])] = &[
        (2, &[(0, 1), (0, 1)]),
        (2, &[(0, 1), (0, 1), (0, 1)]),
        (3, &[(0, 1), (1, 2)]),
        (3, &[(0, 1), (1, 2), (0, 2)]),
        (3, &[(0, 1), (0, 1), (1, 2)]),
        (3, &[(0, 1), (1, 2), (1, 2)]),
        (3, &[(0, 2), (1, 2)]),
        (3, &[(0, 1), (0, 2)]),
        (3, &[(0, 1), (0, 1), (0, 2)]),
        (3, &[(0, 2), (0, 2), (1, 2)]),
    ];
    for &(n, edges) in graphs {
        out.push(free_category(n, edges).expect("free category"));
    }
    out.push(split_idempotent());
    out.push(parallel_pair());
    let pieces = [terminal(), two(), parallel_pair(), split_idempotent()];
    for a in &pieces {
        for b in &pieces {
            let c = disjoint_union(a, b);
            if c.object_count() <= 3 && c.morphism_count() <= 9 {
                out.push(c);
            }
        }
    }
    let monoids = small_monoids();
    out.push(disjoint_union(&terminal(), &monoids[monoids.len() - 1]));
    let opposites: Vec<FinCategory> =
        out.iter().filter(|c| !c.is_preorder()).map(opposite).filter(|c| !out.contains(c)).collect();
    out.extend(opposites);
    out.retain(|c| c.object_count() <= 3 && c.morphism_count() <= 9);
    out
}

/// Filtered categories that are not preorders, together with a few small
/// filtered preorders and disjoint unions.
pub fn filtered_fixtures() -> Vec<FinCategory> {
    let idempotent = monoid(&[vec![0, 1], vec![1, 1]]).expect("idempotent monoid");
    let mut out = vec![
        terminal(),
        two(),
        discrete(2),
        chain_category(3).expect("chain"),
        chain_category(4).expect("chain"),
        idempotent.clone(),
        disjoint_union(&two(), &two()),
        disjoint_union(&idempotent, &two()),
    ];
    out.extend(category_corpus().into_iter().filter(|c| c.object_count() <= 2 && c.is_pseudo_filtered()));
    out.retain(FinCategory::is_pseudo_filtered);
    out
}
