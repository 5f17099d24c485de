use hurwitz::catalog;
use hurwitz::group::DEFAULT_CAP;
use hurwitz::origami::{enumerate_origami_pairs, origami_existence, origami_genus, OrigamiPair, Verdict};

#[test]
fn witnesses_for_small_genera() {
    for genus in [3, 4, 5, 7, 9, 13] {
        let r = origami_existence(genus, &[], DEFAULT_CAP).unwrap();
        assert_eq!(r.verdict, Verdict::Witness, "genus {genus}");
        let (g, p) = r.witness.unwrap();
        assert_eq!(g.order() as u64, 4 * (genus - 1));
        assert!(g.generates(&[p.a, p.b]));
        assert_eq!(g.element_order(g.commutator(p.a, p.b)), 2);
        assert_eq!(origami_genus(g.order() as u64).unwrap(), genus);
    }
}

#[test]
fn exhaustive_negatives() {
    for genus in [2, 6, 8, 12, 14, 18, 20, 24] {
        let r = origami_existence(genus, &[], DEFAULT_CAP).unwrap();
        assert_eq!(r.verdict, Verdict::ExhaustiveNo, "genus {genus}");
        assert!(r.witness.is_none());
        assert!(!r.searched_groups.is_empty());
    }
}

/// Witnesses only in genus 1, 3, 4, 5 mod 6; complete negatives only in
/// genus 0, 2 mod 6.
#[test]
fn verdicts_follow_the_mod_6_rule() {
    for genus in 2..=25u64 {
        let r = origami_existence(genus, &[], DEFAULT_CAP).unwrap();
        let allowed = matches!(genus % 6, 1 | 3 | 4 | 5);
        match r.verdict {
            Verdict::Witness => assert!(allowed, "genus {genus}"),
            Verdict::ExhaustiveNo => assert!(!allowed, "genus {genus}"),
            Verdict::UnknownNoWitness => {}
        }
    }
}

#[test]
fn order_8_commutators_are_central() {
    for g in [catalog::dicyclic(2).unwrap(), catalog::dihedral(4).unwrap()] {
        let classes = enumerate_origami_pairs(&g).unwrap();
        assert!(!classes.is_empty(), "{}", g.name());
        for c in &classes {
            let z = c.representative.commutator;
            assert_eq!(g.element_order(z), 2);
            assert!((0..g.order()).all(|e| g.mul(e, z) == g.mul(z, e)), "{}", g.name());
        }
    }
}

/// The only involution of SL(2,3) is central, and a central commutator
/// would make `SL(2,3)/{1,-1} = A4` abelian.
#[test]
fn sl23_has_none() {
    assert!(enumerate_origami_pairs(&catalog::sl2(3).unwrap()).unwrap().is_empty());
}

#[test]
fn bad_pairs_are_rejected() {
    let g = catalog::dihedral(4).unwrap();
    // a rotation with itself has trivial commutator
    let r = g.generators()[0];
    assert!(OrigamiPair::new(&g, r, r).is_err());
    assert!(origami_genus(6).is_err());
}
