//! Data structures against naive models over long random operation runs.

use grafalgo_testkit::{fuzz, rng};

const OPS: usize = 20_000;

#[test]
fn dsets_agree_with_labels() {
    for (seed, n) in [(1, 10), (2, 200), (3, 3000)] {
        assert_eq!(fuzz::dsets(&mut rng(seed), n, OPS), Ok(OPS));
    }
}

#[test]
fn dheap_agrees_with_ordered_set() {
    for (seed, d) in [(1, 2), (2, 3), (3, 4), (4, 8)] {
        assert_eq!(fuzz::dheap(&mut rng(seed), 300, d, OPS), Ok(OPS));
    }
    assert_eq!(fuzz::dheap(&mut rng(5), 12, 2, OPS), Ok(OPS));
}

#[test]
fn fibheap_agrees_with_ordered_set() {
    for (seed, n) in [(1, 12), (2, 300), (3, 5000)] {
        assert_eq!(fuzz::fibheap(&mut rng(seed), n, OPS), Ok(OPS));
    }
}

#[test]
fn leftist_heaps_agree_with_ordered_sets() {
    for seed in 1..=3 {
        assert_eq!(fuzz::leftist(&mut rng(seed), OPS), Ok(OPS));
    }
}

#[test]
fn dyntrees_agree_with_parent_pointers() {
    for (seed, n) in [(1, 8), (2, 60), (3, 400)] {
        assert_eq!(fuzz::dyntrees(&mut rng(seed), n, OPS), Ok(OPS));
    }
}
