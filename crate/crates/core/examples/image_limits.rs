//! Limits need not preserve image factorizations: a pullback where
//! `Lim φ` has empty image but the image functor has a point in its limit.

use std::sync::Arc;

use setcat::fincat::{cospan, discrete};
use setcat::setval::{FinSet, NatTrans, SetFunctor};
use setcat::sketch::check_lemma51;

fn main() {
    let shape = Arc::new(cospan());
    // p ↦ a, q ↦ b in {a, b}
    let f = SetFunctor::new(
        shape.clone(),
        vec![FinSet::new(1), FinSet::new(1), FinSet::new(2)],
        vec![vec![0], vec![0], vec![0], vec![1], vec![0, 1]],
    )
    .expect("a cospan");
    let g = SetFunctor::terminal(&shape);
    let phi = NatTrans::new(f, g, vec![vec![0], vec![0], vec![0, 0]]).expect("the map to the terminal cospan");
    let report = check_lemma51(&phi);
    println!(
        "pullback: |Lim F| = {}, |Lim G| = {}, |Lim D| = {}, image = {}, bijection {}",
        report.lim_f,
        report.lim_g,
        report.lim_d,
        report.image,
        report.holds()
    );

    // products preserve images
    let shape = Arc::new(discrete(2));
    let f = SetFunctor::new(shape.clone(), vec![FinSet::new(3), FinSet::new(2)], vec![vec![0, 1, 2], vec![0, 1]]).expect("a pair of sets");
    let g = SetFunctor::new(shape, vec![FinSet::new(2), FinSet::new(3)], vec![vec![0, 1], vec![0, 1, 2]]).expect("a pair of sets");
    let phi = NatTrans::new(f, g, vec![vec![0, 0, 1], vec![2, 0]]).expect("a pair of functions");
    let report = check_lemma51(&phi);
    println!("product: |Lim D| = {}, image = {}, bijection {}", report.lim_d, report.image, report.holds());
}
