use std::sync::OnceLock;

use proptest::prelude::*;

use hurwitz::arith::{is_prime, splitting_in_k};
use hurwitz::catalog;
use hurwitz::dessin::{enumerate_triples, genus_of, passport, OrderMode, TriangleTriple, TriangleType};
use hurwitz::group::{pair_isomorphic, FinGroup};
use hurwitz::Perm;

fn klein() -> &'static FinGroup {
    static G: OnceLock<FinGroup> = OnceLock::new();
    G.get_or_init(|| catalog::psl2(7).unwrap())
}

fn psl28() -> &'static FinGroup {
    static G: OnceLock<FinGroup> = OnceLock::new();
    G.get_or_init(|| catalog::psl2(8).unwrap())
}

fn hurwitz_pairs(g: &FinGroup) -> Vec<(usize, usize)> {
    enumerate_triples(g, TriangleType::HURWITZ, OrderMode::Exact)
        .unwrap()
        .iter()
        .map(|c| (c.representative.x, c.representative.y))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_and_inverses(a in 0usize..168, b in 0usize..168) {
        let g = klein();
        let ab = g.mul(a, b);
        prop_assert!(ab < g.order());
        prop_assert_eq!(g.inv(ab), g.mul(g.inv(b), g.inv(a)));
        prop_assert_eq!(g.element(ab), &g.element(a).then(g.element(b)));
    }

    #[test]
    fn orbit_stabilizer(x in 0usize..504) {
        let g = psl28();
        let classes = g.classes();
        let size = classes.list()[classes.class_of(x)].size();
        prop_assert_eq!(size * g.centralizer_size(x).unwrap(), g.order());
        prop_assert_eq!(g.order() % size, 0);
        prop_assert_eq!(g.pow(x, g.element_order(x) as u64), 0);
    }

    #[test]
    fn pair_test_is_invariant_under_inner_twists(k in 0usize..168, h in 0usize..168) {
        let g = klein();
        let (x, y) = hurwitz_pairs(g)[0];
        let twisted = (g.conj(x, k), g.conj(y, k));
        prop_assert!(pair_isomorphic(g, (x, y), twisted).unwrap());
        prop_assert!(pair_isomorphic(g, twisted, (x, y)).unwrap());
        let again = (g.conj(twisted.0, h), g.conj(twisted.1, h));
        prop_assert!(pair_isomorphic(g, twisted, again).unwrap());
        prop_assert!(pair_isomorphic(g, (x, y), (x, y)).unwrap());
    }

    #[test]
    fn conjugate_triples_share_passports(k in 0usize..504) {
        let g = psl28();
        let (x, y) = hurwitz_pairs(g)[0];
        let t = TriangleTriple::new(g, x, y, TriangleType::HURWITZ, OrderMode::Exact).unwrap();
        let u = TriangleTriple::new(g, g.conj(x, k), g.conj(y, k), TriangleType::HURWITZ, OrderMode::Exact).unwrap();
        prop_assert_eq!(passport(g, &t), passport(g, &u));
    }

    #[test]
    fn relabelled_groups_have_the_same_census(seed in any::<u64>()) {
        // Conjugating the generators by a random point relabelling and
        // reversing their order changes every element index.
        use rand::{seq::SliceRandom, SeedableRng};
        let g = klein();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut relabel: Vec<u32> = (0..g.degree() as u32).collect();
        relabel.shuffle(&mut rng);
        let s = Perm::from_images(relabel).unwrap();
        let gens: Vec<Perm> = g
            .generator_perms()
            .iter()
            .rev()
            .map(|p| s.inverse().then(p).then(&s))
            .collect();
        let h = FinGroup::from_generators("relabelled", &gens, 1000).unwrap();
        let a = enumerate_triples(g, TriangleType::HURWITZ, OrderMode::Exact).unwrap();
        let b = enumerate_triples(&h, TriangleType::HURWITZ, OrderMode::Exact).unwrap();
        prop_assert_eq!(a.len(), b.len());
        let keys = |v: &[hurwitz::dessin::DessinClass]| {
            let mut k: Vec<_> = v.iter().map(|c| (c.passport.invariant_key(), c.class_size)).collect();
            k.sort();
            k
        };
        prop_assert_eq!(keys(&a), keys(&b));
    }

    #[test]
    fn genus_formula_inverts(g in 2u64..10_000) {
        prop_assert_eq!(genus_of(84 * (g - 1), TriangleType::HURWITZ).unwrap(), g);
        prop_assert!(genus_of(84 * (g - 1) + 42, TriangleType::HURWITZ).is_err());
    }
}

#[test]
fn splitting_invariants_below_200() {
    for ell in (2..=200).filter(|&l| is_prime(l)) {
        let s = splitting_in_k(ell).unwrap();
        assert_eq!(s.e * s.f * s.g, 3, "ell = {ell}");
        assert_eq!(s.e > 1, ell == 7);
        assert_eq!(s.f == 1, matches!(ell % 7, 0 | 1 | 6), "ell = {ell}");
        assert_eq!(s.residue_q.len(), s.g as usize);
    }
}

#[test]
fn exact_and_dividing_modes_agree() {
    for g in [klein(), psl28()] {
        let a = enumerate_triples(g, TriangleType::HURWITZ, OrderMode::Exact).unwrap();
        let b = enumerate_triples(g, TriangleType::HURWITZ, OrderMode::Dividing).unwrap();
        assert_eq!(a.len(), b.len());
        for (c, d) in a.iter().zip(&b) {
            assert_eq!(c.passport, d.passport);
            assert_eq!(c.class_size, d.class_size);
        }
    }
}

#[test]
fn hurwitz_groups_are_perfect() {
    for q in [7, 8, 13] {
        let g = catalog::psl2(q).unwrap();
        assert!(!hurwitz_pairs(&g).is_empty());
        assert!(g.is_perfect());
        assert_eq!(g.commutator_subgroup().unwrap().order(), g.order());
    }
    // non-perfect groups of Hurwitz orders carry no triple
    for spec in ["pgl2:7", "sym:7", "dih:84", "cyc:168"] {
        let g = spec.parse::<catalog::GroupSpec>().unwrap().build(10_000).unwrap();
        if g.order() % 84 == 0 {
            assert!(!g.is_perfect());
            assert!(hurwitz_pairs(&g).is_empty(), "{spec}");
        }
    }
}
