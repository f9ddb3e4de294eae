use std::collections::HashMap;
use std::sync::Arc;

use super::{CategoryError, FinCategory, FinFunctor, Morphism};

/// Sorts morphisms by `(dom, cod, insertion order)` and builds the category.
/// `compose` works on the original (unsorted) indices.
fn build_sorted(
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    compose: impl Fn(usize, usize) -> usize,
) -> Result<FinCategory, CategoryError> {
    let mut order: Vec<usize> = (0..morphisms.len()).collect();
    order.sort_by_key(|&i| (morphisms[i].dom, morphisms[i].cod));
    let mut new_index = vec![0; morphisms.len()];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }
    let sorted: Vec<Morphism> = order.iter().map(|&i| morphisms[i].clone()).collect();
    let ids = identities.iter().map(|&i| new_index[i]).collect();
    FinCategory::new(objects, sorted, ids, |g, f| Some(new_index[compose(order[g], order[f])]))
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// The category with one object and one morphism.
pub fn terminal() -> FinCategory {
    discrete(1)
}

/// The category with no objects.
pub fn empty() -> FinCategory {
    FinCategory::new(Vec::new(), Vec::new(), Vec::new(), |_, _| None).expect("empty category")
}

/// `n` objects and only identities.
pub fn discrete(n: usize) -> FinCategory {
    let morphisms = (0..n).map(|i| Morphism { name: format!("id{i}"), dom: i, cod: i }).collect();
    FinCategory::new(names(n), morphisms, (0..n).collect(), |g, _| Some(g)).expect("discrete category")
}

/// The linear order `0 < 1 < … < k-1` as a category.
pub fn chain_category(k: usize) -> Result<FinCategory, CategoryError> {
    if k == 0 {
        return Err(CategoryError::EmptyChain);
    }
    let mut morphisms = Vec::new();
    let mut index = HashMap::new();
    for i in 0..k {
        for j in i..k {
            let name = if i == j { format!("id{i}") } else { format!("{i}->{j}") };
            index.insert((i, j), morphisms.len());
            morphisms.push(Morphism { name, dom: i, cod: j });
        }
    }
    let identities = (0..k).map(|i| index[&(i, i)]).collect();
    let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.dom, m.cod)).collect();
    FinCategory::new(names(k), morphisms, identities, |g, f| Some(index[&(ends[f].0, ends[g].1)]))
}

/// The ordinal `2`: objects `0`, `1` and one arrow `u: 0 → 1`.
pub fn two() -> FinCategory {
    let morphisms = vec![
        Morphism { name: "id0".into(), dom: 0, cod: 0 },
        Morphism { name: "u".into(), dom: 0, cod: 1 },
        Morphism { name: "id1".into(), dom: 1, cod: 1 },
    ];
    FinCategory::new(names(2), morphisms, vec![0, 2], |g, f| Some(if g == 0 || g == 2 { f } else { g }))
        .expect("ordinal 2")
}

/// Two objects and two parallel arrows `u, v: 0 → 1`.
pub fn parallel_pair() -> FinCategory {
    let morphisms = vec![
        Morphism { name: "id0".into(), dom: 0, cod: 0 },
        Morphism { name: "u".into(), dom: 0, cod: 1 },
        Morphism { name: "v".into(), dom: 0, cod: 1 },
        Morphism { name: "id1".into(), dom: 1, cod: 1 },
    ];
    FinCategory::new(names(2), morphisms, vec![0, 3], |g, f| Some(if g == 3 { f } else { g }))
        .expect("parallel pair")
}

/// The cospan shape `0 → 2 ← 1` with arrows `u` and `v`.
pub fn cospan() -> FinCategory {
    let morphisms = vec![
        Morphism { name: "id0".into(), dom: 0, cod: 0 },
        Morphism { name: "u".into(), dom: 0, cod: 2 },
        Morphism { name: "id1".into(), dom: 1, cod: 1 },
        Morphism { name: "v".into(), dom: 1, cod: 2 },
        Morphism { name: "id2".into(), dom: 2, cod: 2 },
    ];
    FinCategory::new(names(3), morphisms, vec![0, 2, 4], |g, f| Some(if g == 4 { f } else { g }))
        .expect("cospan")
}

/// The span shape `1 ← 0 → 2` with arrows `a` and `b`.
pub fn span() -> FinCategory {
    let morphisms = vec![
        Morphism { name: "id0".into(), dom: 0, cod: 0 },
        Morphism { name: "a".into(), dom: 0, cod: 1 },
        Morphism { name: "b".into(), dom: 0, cod: 2 },
        Morphism { name: "id1".into(), dom: 1, cod: 1 },
        Morphism { name: "id2".into(), dom: 2, cod: 2 },
    ];
    FinCategory::new(names(3), morphisms, vec![0, 3, 4], |g, f| Some(if g == 3 || g == 4 { f } else { g }))
        .expect("span")
}

/// Objects `A`, `B` with `s: A → B`, `r: B → A`, `r∘s = id_A` and the
/// idempotent `e = s∘r` on `B`.
pub fn split_idempotent() -> FinCategory {
    let objects = vec!["A".to_string(), "B".to_string()];
    // 0 idA, 1 s, 2 r, 3 idB, 4 e
    let morphisms = vec![
        Morphism { name: "idA".into(), dom: 0, cod: 0 },
        Morphism { name: "s".into(), dom: 0, cod: 1 },
        Morphism { name: "r".into(), dom: 1, cod: 0 },
        Morphism { name: "idB".into(), dom: 1, cod: 1 },
        Morphism { name: "e".into(), dom: 1, cod: 1 },
    ];
    FinCategory::new(objects, morphisms, vec![0, 3], |g, f| {
        Some(match (g, f) {
            (0, x) | (3, x) => x,
            (x, 0) | (x, 3) => x,
            (2, 1) => 0, // r∘s
            (1, 2) => 4, // s∘r
            (4, 4) => 4,
            (4, 1) => 1, // e∘s
            (2, 4) => 2, // r∘e
            _ => return None,
        })
    })
    .expect("split idempotent")
}

/// One object whose endomorphisms form the monoid given by `table`
/// (`table[g][f] = g·f`, element 0 the unit).
pub fn monoid(table: &[Vec<usize>]) -> Result<FinCategory, CategoryError> {
    let morphisms =
        (0..table.len()).map(|i| Morphism { name: if i == 0 { "e".into() } else { format!("m{i}") }, dom: 0, cod: 0 }).collect();
    FinCategory::new(vec!["*".into()], morphisms, vec![0], |g, f| table.get(g).and_then(|row| row.get(f)).copied())
}

/// The preorder generated by `leq` on `n` points (reflexive-transitive
/// closure), one morphism `a<=b` per related pair.
pub fn preorder_category(n: usize, leq: &[(usize, usize)]) -> FinCategory {
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        rel[i][i] = true;
    }
    for &(a, b) in leq {
        rel[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i][k] && rel[k][j] {
                    rel[i][j] = true;
                }
            }
        }
    }
    let mut morphisms = Vec::new();
    let mut index = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if rel[i][j] {
                index.insert((i, j), morphisms.len());
                let name = if i == j { format!("id{i}") } else { format!("{i}<={j}") };
                morphisms.push(Morphism { name, dom: i, cod: j });
            }
        }
    }
    let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.dom, m.cod)).collect();
    let identities = (0..n).map(|i| index[&(i, i)]).collect();
    FinCategory::new(names(n), morphisms, identities, |g, f| Some(index[&(ends[f].0, ends[g].1)])).expect("preorder")
}

fn value_name(m: usize, k: usize, values: &[usize]) -> String {
    let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{m}]->[{k}]:{}", vals.join(","))
}

/// Weakly monotone maps `[m] → [k]`, lexicographic in their value tuples.
pub fn monotone_maps(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(pos: usize, m: usize, k: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos > m {
            out.push(cur.clone());
            return;
        }
        for v in lo..=k {
            cur.push(v);
            go(pos + 1, m, k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, 0, &mut Vec::new(), &mut out);
    out
}

/// The full subcategory of the simplex category on `[0], …, [n]`.
///
/// Morphisms are weakly monotone maps, named `[m]->[k]:v0,…,vm` after their
/// value tuples and ordered by `(dom, cod, values)`.
pub fn delta_truncated(n: usize) -> FinCategory {
    let objects = (0..=n).map(|i| format!("[{i}]")).collect();
    let mut morphisms = Vec::new();
    let mut values = Vec::new();
    let mut index = HashMap::new();
    for m in 0..=n {
        for k in 0..=n {
            for v in monotone_maps(m, k) {
                index.insert((m, k, v.clone()), morphisms.len());
                morphisms.push(Morphism { name: value_name(m, k, &v), dom: m, cod: k });
                values.push(v);
            }
        }
    }
    let identities = (0..=n).map(|i| index[&(i, i, (0..=i).collect::<Vec<_>>())]).collect();
    let ends: Vec<(usize, usize)> = morphisms.iter().map(|m| (m.dom, m.cod)).collect();
    FinCategory::new(objects, morphisms, identities, |g, f| {
        let composite: Vec<usize> = values[f].iter().map(|&x| values[g][x]).collect();
        Some(index[&(ends[f].0, ends[g].1, composite)])
    })
    .expect("truncated simplex category")
}

/// Index of the simplicial operator with the given value tuple, in
/// `delta_truncated(n)` or its opposite (indices are shared).
pub fn delta_morphism(cat: &FinCategory, m: usize, k: usize, values: &[usize]) -> Option<usize> {
    cat.morphism_index(&value_name(m, k, values))
}

/// Coface `d^k_i: [k] → [k+1]`, the injection skipping `i`.
pub fn coface(k: usize, i: usize) -> Vec<usize> {
    (0..=k + 1).filter(|&v| v != i).collect()
}

/// Codegeneracy `s^k_j: [k+1] → [k]`, hitting `j` twice.
pub fn codegeneracy(k: usize, j: usize) -> Vec<usize> {
    (0..=k + 1).map(|v| if v <= j { v } else { v - 1 }).collect()
}

/// Same objects and morphism indices, directions reversed.
pub fn opposite(c: &FinCategory) -> FinCategory {
    let morphisms = c.morphisms.iter().map(|m| Morphism { name: m.name.clone(), dom: m.cod, cod: m.dom }).collect();
    let m = c.morphism_count();
    let mut table = vec![None; m * m];
    for g in 0..m {
        for f in 0..m {
            table[g * m + f] = c.compose[f * m + g];
        }
    }
    FinCategory::from_table(c.objects.clone(), morphisms, c.identities.clone(), table).expect("opposite category")
}

/// The full inclusion `Δ_m^op → Δ_n^op` for `m ≤ n`.
pub fn delta_inclusion_op(m: usize, n: usize) -> FinFunctor {
    assert!(m <= n, "cannot include Δ_{m} into Δ_{n}");
    let small = Arc::new(opposite(&delta_truncated(m)));
    let big = Arc::new(opposite(&delta_truncated(n)));
    let morphism_map = small
        .morphisms()
        .iter()
        .map(|mor| big.morphism_index(&mor.name).expect("sub-simplex operator"))
        .collect();
    FinFunctor::new(small, big, (0..=m).collect(), morphism_map).expect("inclusion functor")
}

/// Product category; objects and morphisms are pairs, ordered
/// lexicographically before the canonical `(dom, cod)` sort.
pub fn product_category(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let dn = d.object_count();
    let dm = d.morphism_count();
    let objects = c.objects.iter().flat_map(|a| d.objects.iter().map(move |b| format!("({a},{b})"))).collect();
    let mut morphisms = Vec::new();
    for f in &c.morphisms {
        for g in &d.morphisms {
            morphisms.push(Morphism {
                name: format!("({},{})", f.name, g.name),
                dom: f.dom * dn + g.dom,
                cod: f.cod * dn + g.cod,
            });
        }
    }
    let identities = (0..c.object_count())
        .flat_map(|a| (0..dn).map(move |b| (a, b)))
        .map(|(a, b)| c.identity(a) * dm + d.identity(b))
        .collect();
    build_sorted(objects, morphisms, identities, |g, f| {
        c.compose(g / dm, f / dm) * dm + d.compose(g % dm, f % dm)
    })
    .expect("product category")
}

/// Disjoint union; names are prefixed `0.` and `1.`.
pub fn disjoint_union(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let cn = c.object_count();
    let cm = c.morphism_count();
    let objects = c.objects.iter().map(|o| format!("0.{o}")).chain(d.objects.iter().map(|o| format!("1.{o}"))).collect();
    let morphisms = c
        .morphisms
        .iter()
        .map(|m| Morphism { name: format!("0.{}", m.name), dom: m.dom, cod: m.cod })
        .chain(d.morphisms.iter().map(|m| Morphism { name: format!("1.{}", m.name), dom: m.dom + cn, cod: m.cod + cn }))
        .collect();
    let identities = c.identities.iter().copied().chain(d.identities.iter().map(|&i| i + cm)).collect();
    build_sorted(objects, morphisms, identities, |g, f| {
        if g < cm {
            c.compose(g, f)
        } else {
            d.compose(g - cm, f - cm) + cm
        }
    })
    .expect("disjoint union")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_monotone(m: usize, k: usize) -> usize {
        // all functions [m] → [k], filtered
        let total = (k + 1).pow(m as u32 + 1);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let mut vals = Vec::new();
                for _ in 0..=m {
                    vals.push(c % (k + 1));
                    c /= k + 1;
                }
                vals.windows(2).all(|w| w[0] <= w[1])
            })
            .count()
    }

    #[test]
    fn chain_morphism_counts() {
        assert_eq!(chain_category(1).unwrap().morphism_count(), 1);
        assert_eq!(chain_category(2).unwrap().morphism_count(), 3);
        let brute = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|(i, j)| i <= j).count();
        assert_eq!(brute, 10);
        assert_eq!(chain_category(4).unwrap().morphism_count(), brute);
        assert_eq!(chain_category(0), Err(CategoryError::EmptyChain));
    }

    #[test]
    fn delta_hom_counts_match_brute_force() {
        let d = delta_truncated(4);
        for m in 0..=4 {
            for k in 0..=4 {
                assert_eq!(d.hom(m, k).len(), brute_force_monotone(m, k), "hom([{m}],[{k}])");
            }
        }
        assert_eq!(d.hom(0, 0).len(), 1);
        assert_eq!(d.hom(0, 1).len(), 2);
        assert_eq!(d.hom(1, 1).len(), 3);
    }

    #[test]
    fn builders_validate_for_small_sizes() {
        for n in 0..=4 {
            let _ = delta_truncated(n);
        }
        for k in 1..=6 {
            chain_category(k).unwrap();
        }
    }

    #[test]
    fn opposite_is_an_involution() {
        let d3 = delta_truncated(3);
        assert_eq!(opposite(&opposite(&d3)), d3);
        assert_eq!(opposite(&terminal()), terminal());
        let op2 = opposite(&two());
        let u = op2.morphism_index("u").unwrap();
        assert_eq!((op2.dom(u), op2.cod(u)), (1, 0));
    }

    #[test]
    fn simplicial_identities_hold_in_delta3() {
        let d = delta_truncated(3);
        let idx = |m: usize, k: usize, v: &[usize]| delta_morphism(&d, m, k, v).unwrap();
        // d^{k+1}_j d^k_i = d^{k+1}_i d^k_{j-1} for i < j
        for k in 0..2 {
            for j in 0..=k + 2 {
                for i in 0..j {
                    let lhs = d.compose(idx(k + 1, k + 2, &coface(k + 1, j)), idx(k, k + 1, &coface(k, i)));
                    let rhs = d.compose(idx(k + 1, k + 2, &coface(k + 1, i)), idx(k, k + 1, &coface(k, j - 1)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        // s^k_j d^k_j = id = s^k_j d^k_{j+1}
        for k in 0..3 {
            for j in 0..=k {
                let s = idx(k + 1, k, &codegeneracy(k, j));
                assert_eq!(d.compose(s, idx(k, k + 1, &coface(k, j))), d.identity(k));
                assert_eq!(d.compose(s, idx(k, k + 1, &coface(k, j + 1))), d.identity(k));
            }
        }
    }

    #[test]
    fn product_and_union_shapes() {
        let p = product_category(&two(), &two());
        assert_eq!(p.object_count(), 4);
        assert_eq!(p.morphism_count(), 9);
        let u = disjoint_union(&two(), &parallel_pair());
        assert_eq!(u.object_count(), 4);
        assert_eq!(u.morphism_count(), 7);
        assert_eq!(u.connected_components().len(), 2);
    }

    #[test]
    fn preorder_closure() {
        let p = preorder_category(3, &[(0, 1), (1, 2)]);
        assert_eq!(p.hom(0, 2).len(), 1);
        assert!(p.is_preorder());
    }
}
