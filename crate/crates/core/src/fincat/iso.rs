use std::sync::Arc;

use super::{FinCategory, FinFunctor};

/// An isomorphism `c → d`, found by backtracking over object bijections
/// that preserve hom-set sizes and then over hom-set bijections.
pub fn find_isomorphism(c: &Arc<FinCategory>, d: &Arc<FinCategory>) -> Option<FinFunctor> {
    let n = c.object_count();
    if n != d.object_count() || c.morphism_count() != d.morphism_count() {
        return None;
    }
    let mut objects = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = None;
    objects_go(c, d, 0, &mut objects, &mut used, &mut found);
    found
}

fn objects_go(
    c: &Arc<FinCategory>,
    d: &Arc<FinCategory>,
    a: usize,
    objects: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Option<FinFunctor>,
) {
    if found.is_some() {
        return;
    }
    let n = objects.len();
    if a == n {
        let mut morphisms = vec![usize::MAX; c.morphism_count()];
        for o in 0..n {
            morphisms[c.identity(o)] = d.identity(objects[o]);
        }
        let order: Vec<usize> = (0..c.morphism_count()).filter(|&f| !c.is_identity(f)).collect();
        let mut taken = vec![false; d.morphism_count()];
        for o in 0..n {
            taken[d.identity(objects[o])] = true;
        }
        if morphisms_go(c, d, objects, &order, 0, &mut morphisms, &mut taken) {
            *found = FinFunctor::new(c.clone(), d.clone(), objects.clone(), morphisms).ok();
        }
        return;
    }
    for b in 0..n {
        if used[b] {
            continue;
        }
        objects[a] = b;
        let compatible = (0..=a).all(|x| {
            c.hom(x, a).len() == d.hom(objects[x], b).len() && c.hom(a, x).len() == d.hom(b, objects[x]).len()
        });
        if compatible {
            used[b] = true;
            objects_go(c, d, a + 1, objects, used, found);
            used[b] = false;
        }
    }
    objects[a] = usize::MAX;
}

fn morphisms_go(
    c: &FinCategory,
    d: &FinCategory,
    objects: &[usize],
    order: &[usize],
    i: usize,
    map: &mut Vec<usize>,
    taken: &mut Vec<bool>,
) -> bool {
    if i == order.len() {
        return true;
    }
    let f = order[i];
    let (a, b) = (c.dom(f), c.cod(f));
    for &g in d.hom(objects[a], objects[b]) {
        if taken[g] {
            continue;
        }
        map[f] = g;
        if consistent(c, d, map, f) {
            taken[g] = true;
            if morphisms_go(c, d, objects, order, i + 1, map, taken) {
                return true;
            }
            taken[g] = false;
        }
    }
    map[f] = usize::MAX;
    false
}

fn consistent(c: &FinCategory, d: &FinCategory, map: &[usize], f: usize) -> bool {
    let assigned = |x: usize| map[x] != usize::MAX;
    for h in c.morphisms_from(c.cod(f)).chain(c.morphisms_into(c.dom(f))) {
        if !assigned(h) {
            continue;
        }
        let (g, k) = if c.dom(h) == c.cod(f) { (h, f) } else { (f, h) };
        if c.dom(g) != c.cod(k) {
            continue;
        }
        let gk = c.compose(g, k);
        if assigned(gk) && d.compose(map[g], map[k]) != map[gk] {
            return false;
        }
    }
    // f may itself be the composite of an assigned pair
    for (g, k) in c.composable_pairs() {
        if c.compose(g, k) == f && assigned(g) && assigned(k) && d.compose(map[g], map[k]) != map[f] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::*;

    #[test]
    fn isomorphic_and_not() {
        let pp = Arc::new(parallel_pair());
        assert!(find_isomorphism(&pp, &pp).is_some());
        let pp_op = Arc::new(opposite(&pp));
        assert!(find_isomorphism(&pp, &pp_op).is_some());
        let d = Arc::new(delta_truncated(2));
        let d_op = Arc::new(opposite(&d));
        assert!(find_isomorphism(&d, &d_op).is_none());
        let split = Arc::new(split_idempotent());
        assert!(find_isomorphism(&split, &pp).is_none());
    }

    #[test]
    fn monoids_up_to_relabelling() {
        // Z/3 with generator swapped
        let z3 = Arc::new(monoid(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap());
        let z3b = Arc::new(monoid(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap());
        let iso = find_isomorphism(&z3, &z3b).unwrap();
        assert_eq!(iso.on_morphism(0), 0);
        let three = Arc::new(monoid(&[vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]]).unwrap());
        assert!(find_isomorphism(&z3, &three).is_none());
    }
}
