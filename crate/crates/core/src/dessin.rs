//! Regular dessins of type `(p, q, r)` as generating triples `x y z = 1` of a
//! finite group, classified up to automorphisms of the group.
//!
//! Two generating triples give isomorphic regular dessins exactly when some
//! automorphism of the group carries one to the other, i.e. when the two
//! epimorphisms from the triangle group have the same kernel. Only `x` and
//! `y` matter since `z = (x y)^-1`, so classification reduces to
//! [`pair_isomorphic`](crate::group::pair_isomorphic).
//!
//! In dividing mode the orders of `x, y, z` only need to divide `p, q, r`.
//! For prime `p, q, r` this changes nothing on nontrivial groups: an element
//! of order 1 would be the identity, forcing the other two generators to be
//! mutually inverse of coprime orders, hence trivial.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{pairs_isomorphic_unchecked, FinGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TriangleType {
    pub p: u32,
    pub q: u32,
    pub r: u32,
}

impl TriangleType {
    pub const HURWITZ: TriangleType = TriangleType { p: 2, q: 3, r: 7 };

    pub fn new(p: u32, q: u32, r: u32) -> Result<TriangleType> {
        if p == 0 || q == 0 || r == 0 {
            return Err(Error::InvalidParameters(format!("type ({p},{q},{r}) has a zero entry")));
        }
        Ok(TriangleType { p, q, r })
    }

    /// `1/p + 1/q + 1/r < 1`.
    pub fn is_hyperbolic(&self) -> bool {
        let (p, q, r) = (self.p as u64, self.q as u64, self.r as u64);
        q * r + p * r + p * q < p * q * r
    }

    /// Abelianization of the triangle group is trivial iff the entries are
    /// pairwise coprime; then every finite quotient is perfect.
    pub fn has_perfect_quotients(&self) -> bool {
        use crate::perm::gcd;
        let (p, q, r) = (self.p as u64, self.q as u64, self.r as u64);
        gcd(p, q) == 1 && gcd(q, r) == 1 && gcd(p, r) == 1
    }

    pub fn as_array(&self) -> [u32; 3] {
        [self.p, self.q, self.r]
    }
}

impl fmt::Display for TriangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.p, self.q, self.r)
    }
}

impl FromStr for TriangleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<TriangleType> {
        let v: Vec<u32> = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::InvalidParameters(format!("bad type `{s}`")))?;
        match v[..] {
            [p, q, r] => TriangleType::new(p, q, r),
            _ => Err(Error::InvalidParameters(format!("type `{s}` needs three entries"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OrderMode {
    #[default]
    Exact,
    Dividing,
}

impl OrderMode {
    fn accepts(self, actual: u32, target: u32) -> bool {
        match self {
            OrderMode::Exact => actual == target,
            OrderMode::Dividing => target.is_multiple_of(actual),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleTriple {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub ty: TriangleType,
}

impl TriangleTriple {
    /// Validates orders and generation; `z` is `(x y)^-1`.
    pub fn new(g: &FinGroup, x: usize, y: usize, ty: TriangleType, mode: OrderMode) -> Result<TriangleTriple> {
        g.check_element(x)?;
        g.check_element(y)?;
        let z = g.inv(g.mul(x, y));
        for (e, target) in [(x, ty.p), (y, ty.q), (z, ty.r)] {
            if !mode.accepts(g.element_order(e), target) {
                return Err(Error::InvalidParameters(format!(
                    "element of order {} does not fit type ({ty})",
                    g.element_order(e)
                )));
            }
        }
        if !g.generates(&[x, y]) {
            return Err(Error::NotGenerating(format!("triple in {}", g.name())));
        }
        Ok(TriangleTriple { x, y, z, ty })
    }

    /// Actual element orders of `x, y, z`.
    pub fn orders(&self, g: &FinGroup) -> [u32; 3] {
        [g.element_order(self.x), g.element_order(self.y), g.element_order(self.z)]
    }
}

/// Conjugacy-class data of one entry of a triple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassTag {
    /// Position in the canonical class order.
    pub index: usize,
    pub label: String,
    pub element_order: u32,
    pub class_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Passport {
    pub group_order: usize,
    #[serde(rename = "type")]
    pub ty: TriangleType,
    pub x: ClassTag,
    pub y: ClassTag,
    pub z: ClassTag,
}

impl Passport {
    /// The part of the passport preserved by outer automorphisms, which may
    /// permute classes of equal size and order.
    pub fn invariant_key(&self) -> (usize, TriangleType, [(u32, usize); 3]) {
        let t = |c: &ClassTag| (c.element_order, c.class_size);
        (self.group_order, self.ty, [t(&self.x), t(&self.y), t(&self.z)])
    }
}

pub fn passport(g: &FinGroup, t: &TriangleTriple) -> Passport {
    let classes = g.classes();
    let tag = |e: usize| {
        let i = classes.class_of(e);
        let c = &classes.list()[i];
        ClassTag { index: i, label: c.label.clone(), element_order: c.element_order, class_size: c.size() }
    };
    Passport { group_order: g.order(), ty: t.ty, x: tag(t.x), y: tag(t.y), z: tag(t.z) }
}

#[derive(Clone, Debug)]
pub struct DessinClass {
    pub representative: TriangleTriple,
    pub genus: u64,
    pub passport: Passport,
    /// Number of generating triples in this automorphism class.
    pub class_size: u64,
}

/// Riemann–Hurwitz: `2g - 2 = |G| (1 - 1/p - 1/q - 1/r)`.
pub fn genus_of(order: u64, ty: TriangleType) -> Result<u64> {
    let (p, q, r) = (ty.p as i128, ty.q as i128, ty.r as i128);
    let n = order as i128;
    let num = n * (p * q * r - q * r - p * r - p * q);
    let den = p * q * r;
    if num % den != 0 {
        return Err(Error::Genus(format!("|G| = {order} with type ({ty}) gives non-integral 2g - 2")));
    }
    let two_g_minus_2 = num / den;
    if two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2 {
        return Err(Error::Genus(format!("|G| = {order} with type ({ty}) gives 2g - 2 = {two_g_minus_2}")));
    }
    Ok(((two_g_minus_2 + 2) / 2) as u64)
}

/// All regular dessins of the given type with group `g`, one per
/// automorphism class, sorted by passport and then representative.
///
/// `x` runs over conjugacy-class representatives and `y` over all elements
/// of the right order; the `y` scan runs on the current rayon pool, and
/// candidates are merged in scan order before deduplication so the result
/// does not depend on the number of threads.
pub fn enumerate_triples(g: &FinGroup, ty: TriangleType, mode: OrderMode) -> Result<Vec<DessinClass>> {
    let ty = TriangleType::new(ty.p, ty.q, ty.r)?;
    let classes = g.classes();
    let n = g.order();
    let ys: Vec<usize> = (0..n).filter(|&e| mode.accepts(g.element_order(e), ty.q)).collect();

    let mut found: Vec<DessinClass> = Vec::new();
    let mut buckets: HashMap<_, Vec<usize>> = HashMap::new();
    for class in classes.list() {
        if !mode.accepts(class.element_order, ty.p) {
            continue;
        }
        let x = class.representative;
        let mx = g.right_mult_map(x);
        let candidates: Vec<usize> = ys
            .par_iter()
            .map_init(Vec::new, |seen, &y| {
                // y x is conjugate to x y
                if !mode.accepts(g.element_order(mx[y] as usize), ty.r) {
                    return None;
                }
                let my = g.right_mult_map(y);
                g.generates_with_maps(&mx, &my, seen).then_some(y)
            })
            .flatten()
            .collect();

        for y in candidates {
            let triple = TriangleTriple { x, y, z: g.inv(g.mul(x, y)), ty };
            let pp = passport(g, &triple);
            let bucket = buckets.entry(pp.invariant_key()).or_default();
            let hit = bucket.iter().copied().find(|&i| {
                let rep = &found[i].representative;
                pairs_isomorphic_unchecked(g, (rep.x, rep.y), g, (x, y))
            });
            match hit {
                Some(i) => found[i].class_size += class.size() as u64,
                None => {
                    let genus = genus_of(
                        n as u64,
                        TriangleType::new(g.element_order(x), g.element_order(y), g.element_order(triple.z))?,
                    )?;
                    bucket.push(found.len());
                    found.push(DessinClass {
                        representative: triple,
                        genus,
                        passport: pp,
                        class_size: class.size() as u64,
                    });
                }
            }
        }
    }
    found.sort_by(|a, b| {
        a.passport
            .cmp(&b.passport)
            .then_with(|| (a.representative.x, a.representative.y).cmp(&(b.representative.x, b.representative.y)))
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn genus_formula() {
        let h = TriangleType::HURWITZ;
        assert_eq!(genus_of(168, h).unwrap(), 3);
        assert_eq!(genus_of(1344, h).unwrap(), 17);
        assert_eq!(genus_of(60, TriangleType::new(2, 3, 5).unwrap()).unwrap(), 0);
        assert!(genus_of(100, h).is_err());
        assert!(genus_of(8, TriangleType::new(2, 2, 2).unwrap()).is_err());
    }

    #[test]
    fn type_parsing() {
        let t: TriangleType = "2,3,7".parse().unwrap();
        assert_eq!(t, TriangleType::HURWITZ);
        assert!(t.is_hyperbolic() && t.has_perfect_quotients());
        assert!("2,3".parse::<TriangleType>().is_err());
        assert!("0,3,7".parse::<TriangleType>().is_err());
        assert!(!TriangleType::new(2, 3, 6).unwrap().is_hyperbolic());
    }

    #[test]
    fn klein_quartic_is_unique() {
        let g = catalog::psl2(7).unwrap();
        let found = enumerate_triples(&g, TriangleType::HURWITZ, OrderMode::Exact).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].genus, 3);
    }

    #[test]
    fn a5_has_no_hurwitz_triple_but_one_icosahedral_dessin() {
        let a5 = catalog::GroupSpec::Alt(5).build(1000).unwrap();
        assert!(enumerate_triples(&a5, TriangleType::HURWITZ, OrderMode::Exact).unwrap().is_empty());
        let t = enumerate_triples(&a5, TriangleType::new(2, 3, 5).unwrap(), OrderMode::Exact).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].genus, 0);
    }

    #[test]
    fn triple_validation() {
        let g = catalog::psl2(7).unwrap();
        assert!(TriangleTriple::new(&g, 0, 0, TriangleType::HURWITZ, OrderMode::Exact).is_err());
        let c = &enumerate_triples(&g, TriangleType::HURWITZ, OrderMode::Exact).unwrap()[0];
        let t = c.representative;
        assert!(TriangleTriple::new(&g, t.x, t.y, t.ty, OrderMode::Exact).is_ok());
        assert_eq!(g.mul(g.mul(t.x, t.y), t.z), 0);
    }
}
