//! Backtracking enumeration of natural transformations and subfunctors.
//!
//! Choosing a value for one element forces values along every structure map
//! out of its object, so assignments are propagated forward and undone from
//! a trail on backtrack.

use super::{subfunctor_inclusion, NatTrans, SetFunctor};

type Filter<'a> = Box<dyn Fn(usize, usize, usize) -> bool + 'a>;

/// Enumerates natural transformations `F → G`, optionally restricted by a
/// per-element filter `(object, element, value) -> bool`.
pub struct NatSearch<'a> {
    source: &'a SetFunctor,
    target: &'a SetFunctor,
    filter: Option<Filter<'a>>,
    limit: usize,
}

impl<'a> NatSearch<'a> {
    pub fn new(source: &'a SetFunctor, target: &'a SetFunctor) -> Self {
        NatSearch { source, target, filter: None, limit: usize::MAX }
    }

    pub fn with_filter(mut self, filter: impl Fn(usize, usize, usize) -> bool + 'a) -> Self {
        self.filter = Some(Box::new(filter));
        self
    }

    /// Stop after this many solutions.
    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    /// Component tables of every solution found, in lexicographic order of
    /// the flattened assignment.
    pub fn run(&self) -> Vec<Vec<Vec<usize>>> {
        let shape = self.source.shape();
        let n = shape.object_count();
        let out: Vec<Vec<usize>> =
            (0..n).map(|o| shape.morphisms_from(o).filter(|&f| !shape.is_identity(f)).collect()).collect();
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|o| (0..self.source.size(o)).map(move |x| (o, x))).collect();
        let mut state = State {
            search: self,
            out,
            assigned: (0..n).map(|o| vec![None; self.source.size(o)]).collect(),
            trail: Vec::new(),
            found: Vec::new(),
        };
        state.go(&cells, 0);
        state.found
    }
}

struct State<'s, 'a> {
    search: &'s NatSearch<'a>,
    out: Vec<Vec<usize>>,
    assigned: Vec<Vec<Option<usize>>>,
    trail: Vec<(usize, usize)>,
    found: Vec<Vec<Vec<usize>>>,
}

impl State<'_, '_> {
    fn allowed(&self, o: usize, x: usize, c: usize) -> bool {
        self.search.filter.as_ref().is_none_or(|f| f(o, x, c))
    }

    /// Assigns and propagates; false on conflict (partial work stays on the
    /// trail).
    fn assign(&mut self, o: usize, x: usize, c: usize) -> bool {
        let mut queue = vec![(o, x, c)];
        while let Some((o, x, c)) = queue.pop() {
            match self.assigned[o][x] {
                Some(prev) if prev == c => continue,
                Some(_) => return false,
                None => {}
            }
            if !self.allowed(o, x, c) {
                return false;
            }
            self.assigned[o][x] = Some(c);
            self.trail.push((o, x));
            let shape = self.search.source.shape();
            for &f in &self.out[o] {
                let p = shape.cod(f);
                queue.push((p, self.search.source.map(f)[x], self.search.target.map(f)[c]));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (o, x) = self.trail.pop().unwrap();
            self.assigned[o][x] = None;
        }
    }

    fn go(&mut self, cells: &[(usize, usize)], mut i: usize) {
        while i < cells.len() && self.assigned[cells[i].0][cells[i].1].is_some() {
            i += 1;
        }
        if i == cells.len() {
            let sol = self.assigned.iter().map(|row| row.iter().map(|v| v.unwrap()).collect()).collect();
            self.found.push(sol);
            return;
        }
        let (o, x) = cells[i];
        for c in 0..self.search.target.size(o) {
            if self.found.len() >= self.search.limit {
                return;
            }
            let mark = self.trail.len();
            if self.assign(o, x, c) {
                self.go(cells, i + 1);
            }
            self.undo(mark);
        }
    }
}

/// Up to `limit` natural transformations `source → target`.
pub fn nat_trans_between(source: &SetFunctor, target: &SetFunctor, limit: usize) -> Vec<NatTrans> {
    NatSearch::new(source, target)
        .limit(limit)
        .run()
        .into_iter()
        .map(|c| NatTrans::new_unchecked(source.clone(), target.clone(), c))
        .collect()
}

/// Up to `limit` subfunctors of `f`, as inclusion maps. Order: the empty
/// subfunctor first, then by inclusion decisions element by element.
pub fn subfunctors(f: &SetFunctor, limit: usize) -> Vec<NatTrans> {
    let n = f.shape().object_count();
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|o| (0..f.size(o)).map(move |x| (o, x))).collect();
    let mut status: Vec<Vec<Option<bool>>> = (0..n).map(|o| vec![None; f.size(o)]).collect();
    let mut out = Vec::new();
    sub_go(f, &cells, 0, &mut status, &mut out, limit);
    out.into_iter().map(|subsets| subfunctor_inclusion(f, subsets).expect("closed subsets")).collect()
}

fn sub_go(
    f: &SetFunctor,
    cells: &[(usize, usize)],
    mut i: usize,
    status: &mut Vec<Vec<Option<bool>>>,
    out: &mut Vec<Vec<Vec<usize>>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    while i < cells.len() && status[cells[i].0][cells[i].1].is_some() {
        i += 1;
    }
    if i == cells.len() {
        out.push(
            status
                .iter()
                .map(|row| row.iter().enumerate().filter(|(_, s)| **s == Some(true)).map(|(x, _)| x).collect())
                .collect(),
        );
        return;
    }
    let (o, x) = cells[i];
    status[o][x] = Some(false);
    sub_go(f, cells, i + 1, status, out, limit);
    status[o][x] = None;
    let mut trail = Vec::new();
    if include(f, o, x, status, &mut trail) {
        sub_go(f, cells, i + 1, status, out, limit);
    }
    for (p, y) in trail {
        status[p][y] = None;
    }
}

fn include(
    f: &SetFunctor,
    o: usize,
    x: usize,
    status: &mut [Vec<Option<bool>>],
    trail: &mut Vec<(usize, usize)>,
) -> bool {
    let shape = f.shape();
    let mut queue = vec![(o, x)];
    while let Some((o, x)) = queue.pop() {
        match status[o][x] {
            Some(true) => continue,
            Some(false) => return false,
            None => {}
        }
        status[o][x] = Some(true);
        trail.push((o, x));
        for m in shape.morphisms_from(o) {
            queue.push((shape.cod(m), f.map(m)[x]));
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::fincat::{delta_truncated, opposite, two};
    use crate::setval::{representable, FinSet};

    /// Brute force over all families of functions.
    fn brute_nat_count(f: &SetFunctor, g: &SetFunctor) -> usize {
        let n = f.shape().object_count();
        let mut choices: Vec<Vec<Vec<usize>>> = Vec::new();
        for o in 0..n {
            let mut all = vec![vec![]];
            for _ in 0..f.size(o) {
                all = all.into_iter().flat_map(|p: Vec<usize>| (0..g.size(o)).map(move |c| [p.clone(), vec![c]].concat())).collect();
            }
            choices.push(all);
        }
        let mut count = 0;
        let mut idx = vec![0; n];
        loop {
            let comps: Vec<Vec<usize>> = (0..n).map(|o| choices[o][idx[o]].clone()).collect();
            if NatTrans::new(f.clone(), g.clone(), comps).is_ok() {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == n {
                    return count;
                }
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn yoneda_count_on_delta() {
        // Nat(J(j,-), F) ≅ F(j)
        let d = Arc::new(opposite(&delta_truncated(2)));
        let target = representable(&d, 2);
        for j in 0..3 {
            let rep = representable(&d, j);
            assert_eq!(nat_trans_between(&rep, &target, usize::MAX).len(), target.size(j));
        }
    }

    #[test]
    fn search_matches_brute_force() {
        let shape = Arc::new(two());
        let m = SetFunctor::new(shape.clone(), vec![FinSet::new(2), FinSet::new(1)], vec![vec![0, 1], vec![0, 0], vec![0]]).unwrap();
        let g = SetFunctor::new(shape.clone(), vec![FinSet::new(3), FinSet::new(2)], vec![vec![0, 1, 2], vec![0, 1, 1], vec![0, 1]]).unwrap();
        for (a, b) in [(&m, &g), (&g, &m), (&m, &m), (&g, &g)] {
            assert_eq!(nat_trans_between(a, b, usize::MAX).len(), brute_nat_count(a, b));
        }
    }

    #[test]
    fn subfunctors_of_representable_on_two() {
        // 2(0,-) = ({id0}, {u}): subfunctors ∅, ({}, {u}), everything
        let shape = Arc::new(two());
        let rep = representable(&shape, 0);
        let subs = subfunctors(&rep, usize::MAX);
        assert_eq!(subs.len(), 3);
        assert!(subs.iter().all(|s| s.is_mono()));
    }

    #[test]
    fn limit_is_respected() {
        let d = Arc::new(opposite(&delta_truncated(2)));
        let rep = representable(&d, 2);
        assert_eq!(nat_trans_between(&rep, &rep, 2).len(), 2);
        assert_eq!(subfunctors(&rep, 1).len(), 1);
    }
}
