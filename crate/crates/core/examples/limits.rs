//! Limits and colimits of Set-valued functors, and the filtered colimit.

use std::sync::Arc;

use setcat::fincat::{cospan, two};
use setcat::limits::{colimit, colimit_comparison, filtered_colimit, limit};
use setcat::setval::{FinSet, SetFunctor};

fn main() {
    // {0, 1, 2} → {0, 1} ← {0, 1}, x ↦ x mod 2 and the identity
    let shape = Arc::new(cospan());
    let d = SetFunctor::new(
        shape,
        vec![FinSet::new(3), FinSet::new(2), FinSet::new(2)],
        vec![vec![0, 1, 2], vec![0, 1, 0], vec![0, 1], vec![0, 1], vec![0, 1]],
    )
    .expect("a functor");
    let pb = limit(&d);
    println!("pullback has {} elements: {:?}", pb.size(), pb.tuples);

    let chain = Arc::new(two());
    let m = SetFunctor::new(chain, vec![FinSet::new(3), FinSet::new(2)], vec![vec![0, 1, 2], vec![0, 0, 1], vec![0, 1]]).expect("a functor");
    let general = colimit(&m);
    let filtered = filtered_colimit(&m).expect("2 is pseudo-filtered");
    println!("colimit classes: {:?}", general.classes);
    println!("filtered colimit agrees: {}", colimit_comparison(&general, &filtered).is_some());
}
