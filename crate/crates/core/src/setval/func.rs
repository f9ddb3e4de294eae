//! Functions between finite sets stored as value tables.

/// `g ∘ f`.
pub fn compose(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&y| g[y]).collect()
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

pub fn is_identity(f: &[usize]) -> bool {
    f.iter().enumerate().all(|(x, &y)| x == y)
}

pub fn is_injective(f: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(f.len());
    f.iter().all(|&y| seen.insert(y))
}

pub fn is_surjective(f: &[usize], codomain: usize) -> bool {
    let mut hit = vec![false; codomain];
    for &y in f {
        hit[y] = true;
    }
    hit.into_iter().all(|h| h)
}

/// Ascending list of values hit.
pub fn image(f: &[usize], codomain: usize) -> Vec<usize> {
    let mut hit = vec![false; codomain];
    for &y in f {
        hit[y] = true;
    }
    (0..codomain).filter(|&y| hit[y]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn empty_function() {
        assert!(is_injective(&[]));
        assert!(is_surjective(&[], 0));
        assert!(!is_surjective(&[], 1));
    }

    proptest! {
        #[test]
        fn composition_is_associative(
            f in proptest::collection::vec(0usize..4, 5),
            g in proptest::collection::vec(0usize..3, 4),
            h in proptest::collection::vec(0usize..6, 3),
        ) {
            prop_assert_eq!(compose(&h, &compose(&g, &f)), compose(&compose(&h, &g), &f));
        }

        #[test]
        fn image_witnesses_surjectivity(f in proptest::collection::vec(0usize..5, 0..8)) {
            let img = image(&f, 5);
            prop_assert_eq!(img.len() == 5, is_surjective(&f, 5));
            prop_assert!(img.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(is_injective(&f), img.len() == f.len());
        }
    }
}
