mod support;

use std::collections::BTreeSet;

use hurwitz::catalog;
use hurwitz::dessin::{enumerate_triples, OrderMode, TriangleType};
use hurwitz::group::pair_isomorphic;
use hurwitz::origami::enumerate_origami_pairs;
use support::oracle::*;

#[test]
fn pair_test_matches_brute_force_on_small_groups() {
    for g in small_catalog_groups(24) {
        let pairs = generating_pairs(&g, |_, _| true);
        let mut reps: Vec<(usize, usize)> = Vec::new();
        for &p in &pairs {
            let mut matched = false;
            for &r in &reps {
                let fast = pair_isomorphic(&g, r, p).unwrap();
                assert_eq!(fast, brute_force_automorphic(&g, r, p), "{} {r:?} {p:?}", g.name());
                assert_eq!(fast, regular_conjugate(&g, r, p), "{} {r:?} {p:?}", g.name());
                matched |= fast;
            }
            if !matched {
                reps.push(p);
            }
        }
    }
}

#[test]
fn triple_classes_match_brute_force_on_small_groups() {
    for g in small_catalog_groups(24) {
        let pairs = generating_pairs(&g, |_, _| true);
        let types: BTreeSet<(u32, u32, u32)> = pairs
            .iter()
            .map(|&(x, y)| (g.element_order(x), g.element_order(y), g.element_order(g.mul(x, y))))
            .collect();
        for (p, q, r) in types {
            let ty = TriangleType::new(p, q, r).unwrap();
            let of_type: Vec<_> = pairs
                .iter()
                .copied()
                .filter(|&(x, y)| (g.element_order(x), g.element_order(y), g.element_order(g.mul(x, y))) == (p, q, r))
                .collect();
            let expected = count_classes(&of_type, |a, b| brute_force_automorphic(&g, a, b));
            let found = enumerate_triples(&g, ty, OrderMode::Exact).unwrap();
            assert_eq!(found.len(), expected, "{} type {ty}", g.name());
            let total: u64 = found.iter().map(|c| c.class_size).sum();
            assert_eq!(total as usize, of_type.len(), "{} type {ty}", g.name());
        }
    }
}

#[test]
fn origami_classes_match_brute_force_on_small_groups() {
    for g in small_catalog_groups(24) {
        let pairs = generating_pairs(&g, |a, b| g.element_order(g.commutator(a, b)) == 2);
        let expected = count_classes(&pairs, |a, b| brute_force_automorphic(&g, a, b));
        let found = enumerate_origami_pairs(&g).unwrap();
        assert_eq!(found.len(), expected, "{}", g.name());
        let total: u64 = found.iter().map(|c| c.class_size).sum();
        assert_eq!(total as usize, pairs.len(), "{}", g.name());
    }
}

#[test]
fn triple_total_matches_recount() {
    for q in [7, 8, 13] {
        let g = catalog::psl2(q).unwrap();
        let found = enumerate_triples(&g, TriangleType::HURWITZ, OrderMode::Exact).unwrap();
        let n = g.order();
        let invols: Vec<usize> = (0..n).filter(|&e| g.element_order(e) == 2).collect();
        let threes: Vec<usize> = (0..n).filter(|&e| g.element_order(e) == 3).collect();
        let mut total = 0u64;
        for &x in &invols {
            for &y in &threes {
                if g.element_order(g.mul(x, y)) == 7 && g.generates(&[x, y]) {
                    total += 1;
                }
            }
        }
        assert_eq!(found.iter().map(|c| c.class_size).sum::<u64>(), total, "q = {q}");
    }
}
