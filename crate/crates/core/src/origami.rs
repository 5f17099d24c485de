//! Hurwitz origamis: normal coverings of a torus branched over one point
//! with all ramification orders two.
//!
//! The orbifold group of a torus with one cone point of order two is
//! `<a, b, c | c^2, [a, b] c>`, so such a covering with group `G` is a
//! generating pair `(a, b)` of `G` whose commutator `a^-1 b^-1 a b` has
//! order exactly two. Order one would give an unramified torus covering.
//! Riemann–Hurwitz gives `2g - 2 = |G| / 2`, i.e. `|G| = 4 (g - 1)`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::is_prime;
use crate::catalog::{self, GroupSpec};
use crate::error::{Error, Result};
use crate::group::{pairs_isomorphic_unchecked, FinGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrigamiPair {
    pub a: usize,
    pub b: usize,
    pub commutator: usize,
}

impl OrigamiPair {
    pub fn new(g: &FinGroup, a: usize, b: usize) -> Result<OrigamiPair> {
        g.check_element(a)?;
        g.check_element(b)?;
        let commutator = g.commutator(a, b);
        if g.element_order(commutator) != 2 {
            return Err(Error::InvalidParameters(format!("commutator has order {}", g.element_order(commutator))));
        }
        if !g.generates(&[a, b]) {
            return Err(Error::NotGenerating(format!("pair in {}", g.name())));
        }
        Ok(OrigamiPair { a, b, commutator })
    }
}

#[derive(Clone, Debug)]
pub struct OrigamiClass {
    pub representative: OrigamiPair,
    pub genus: u64,
    /// Number of generating pairs in this automorphism class.
    pub class_size: u64,
}

/// `1 + |G| / 4`.
pub fn origami_genus(order: u64) -> Result<u64> {
    if order == 0 || !order.is_multiple_of(4) {
        return Err(Error::Genus(format!("4 does not divide {order}")));
    }
    Ok(1 + order / 4)
}

fn candidates_for(g: &FinGroup, a: usize, bs: &[usize]) -> Vec<usize> {
    let ma = g.right_mult_map(a);
    bs.par_iter()
        .map_init(Vec::new, |seen, &b| {
            let c = g.commutator(a, b);
            if g.element_order(c) != 2 {
                return None;
            }
            let mb = g.right_mult_map(b);
            g.generates_with_maps(&ma, &mb, seen).then_some(b)
        })
        .flatten()
        .collect()
}

/// All Hurwitz origami pairs of `g` up to automorphism, sorted by the
/// classes of `a` and `b`, then by representative.
pub fn enumerate_origami_pairs(g: &FinGroup) -> Result<Vec<OrigamiClass>> {
    let n = g.order();
    if !n.is_multiple_of(4) || g.is_abelian() {
        return Ok(Vec::new());
    }
    let genus = origami_genus(n as u64)?;
    let classes = g.classes();
    let all: Vec<usize> = (0..n).collect();
    let key = |e: usize| {
        let c = &classes.list()[classes.class_of(e)];
        (c.element_order, c.size())
    };
    let mut found: Vec<OrigamiClass> = Vec::new();
    let mut buckets: HashMap<_, Vec<usize>> = HashMap::new();
    for class in classes.list() {
        let a = class.representative;
        for b in candidates_for(g, a, &all) {
            let bucket = buckets.entry((key(a), key(b), key(g.mul(a, b)))).or_default();
            let hit = bucket.iter().copied().find(|&i| {
                let r = &found[i].representative;
                pairs_isomorphic_unchecked(g, (r.a, r.b), g, (a, b))
            });
            match hit {
                Some(i) => found[i].class_size += class.size() as u64,
                None => {
                    bucket.push(found.len());
                    found.push(OrigamiClass {
                        representative: OrigamiPair { a, b, commutator: g.commutator(a, b) },
                        genus,
                        class_size: class.size() as u64,
                    });
                }
            }
        }
    }
    found.sort_by_key(|c| {
        let r = c.representative;
        (classes.class_of(r.a), classes.class_of(r.b), r.a, r.b)
    });
    Ok(found)
}

/// First Hurwitz origami pair in scan order, if any.
pub fn find_origami_pair(g: &FinGroup) -> Option<OrigamiPair> {
    if !g.order().is_multiple_of(4) || g.is_abelian() {
        return None;
    }
    let all: Vec<usize> = (0..g.order()).collect();
    g.classes().list().iter().find_map(|class| {
        let a = class.representative;
        candidates_for(g, a, &all).first().map(|&b| OrigamiPair { a, b, commutator: g.commutator(a, b) })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Witness,
    /// No pair in any group of the order, and the searched list is
    /// complete up to isomorphism.
    ExhaustiveNo,
    /// No pair found, but the searched list may miss groups of the order.
    UnknownNoWitness,
}

#[derive(Clone, Debug)]
pub struct OrigamiExistence {
    pub genus: u64,
    pub order: u64,
    pub verdict: Verdict,
    pub witness: Option<(FinGroup, OrigamiPair)>,
    pub searched_groups: Vec<String>,
}

/// Candidate groups of order `4 (g - 1)` and whether they cover every
/// isomorphism type of that order.
pub fn origami_search_space(genus: u64) -> Result<(Vec<GroupSpec>, bool)> {
    if genus < 2 {
        return Err(Error::InvalidParameters(format!("genus {genus} < 2")));
    }
    let order = 4 * (genus - 1);
    if order == 4 {
        return Ok((vec![GroupSpec::Cyclic(4), GroupSpec::Abelian(vec![2, 2])], true));
    }
    let p = order / 4;
    if p > 2 && is_prime(p) {
        return Ok((catalog::specs_of_order_4p(p), true));
    }
    Ok((catalog::all_specs_of_order(order), false))
}

/// Searches the catalog groups of order `4 (g - 1)` plus any extra groups of
/// that order for a Hurwitz origami.
pub fn origami_existence(genus: u64, extra: &[FinGroup], cap: usize) -> Result<OrigamiExistence> {
    let (specs, complete) = origami_search_space(genus)?;
    let order = 4 * (genus - 1);
    let mut searched = Vec::new();
    let consider = |g: FinGroup, searched: &mut Vec<String>| {
        searched.push(g.name().to_string());
        find_origami_pair(&g).map(|p| (g, p))
    };
    for spec in &specs {
        let g = spec.build(cap)?.with_name(spec.to_string());
        if let Some(w) = consider(g, &mut searched) {
            return Ok(OrigamiExistence {
                genus,
                order,
                verdict: Verdict::Witness,
                witness: Some(w),
                searched_groups: searched,
            });
        }
    }
    for g in extra.iter().filter(|g| g.order() as u64 == order) {
        if let Some(w) = consider(g.clone(), &mut searched) {
            return Ok(OrigamiExistence {
                genus,
                order,
                verdict: Verdict::Witness,
                witness: Some(w),
                searched_groups: searched,
            });
        }
    }
    let verdict = if complete { Verdict::ExhaustiveNo } else { Verdict::UnknownNoWitness };
    Ok(OrigamiExistence { genus, order, verdict, witness: None, searched_groups: searched })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_formula() {
        assert_eq!(origami_genus(8).unwrap(), 3);
        assert_eq!(origami_genus(24).unwrap(), 7);
        assert!(origami_genus(10).is_err());
    }

    #[test]
    fn quaternion_pair() {
        let q8 = catalog::dicyclic(2).unwrap();
        let classes = enumerate_origami_pairs(&q8).unwrap();
        assert!(!classes.is_empty());
        for c in &classes {
            let r = c.representative;
            assert_eq!(q8.element_order(r.commutator), 2);
        }
        assert!(enumerate_origami_pairs(&catalog::cyclic(4).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn small_verdicts() {
        let e = origami_existence(2, &[], 1000).unwrap();
        assert_eq!(e.verdict, Verdict::ExhaustiveNo);
        assert_eq!(e.searched_groups.len(), 2);
        let e = origami_existence(6, &[], 1000).unwrap();
        assert_eq!(e.verdict, Verdict::ExhaustiveNo);
        assert_eq!(e.searched_groups.len(), 5);
        assert_eq!(origami_existence(3, &[], 1000).unwrap().verdict, Verdict::Witness);
        assert_eq!(origami_existence(4, &[], 1000).unwrap().verdict, Verdict::Witness);
    }
}
