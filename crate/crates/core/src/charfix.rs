//! Fixed points of automorphisms on a regular Belyi cover and the character
//! of the automorphism group on `H^1` of the curve.
//!
//! The points of the curve over `0, 1, oo` are the right cosets of
//! `<x>, <y>, <z>`, with `G` acting by right multiplication. A nontrivial
//! `h` fixes only such points, so by Lefschetz `chi(h) = 2 - Fix(h)`, while
//! `chi(1) = 2g`. In terms of permutation characters
//! `chi = 2 * 1 + rho_reg - pi_x - pi_y - pi_z`.

use serde::Serialize;

use crate::dessin::{genus_of, TriangleTriple};
use crate::error::{Error, Result};
use crate::group::FinGroup;

/// Cyclic subgroups `<x>, <y>, <z>` as membership vectors.
fn stabilizers(g: &FinGroup, t: &TriangleTriple) -> [Vec<bool>; 3] {
    [g.closure(&[t.x]), g.closure(&[t.y]), g.closure(&[t.z])]
}

/// Fixed cosets of `<s>` under right multiplication by `h`: those `<s> u`
/// with `u h u^-1` in `<s>`.
fn fixed_cosets(g: &FinGroup, sub: &[bool], sub_order: usize, h: usize) -> u64 {
    let n = (0..g.order()).filter(|&u| sub[g.mul(g.mul(u, h), g.inv(u))]).count();
    (n / sub_order) as u64
}

fn fixed_with(g: &FinGroup, subs: &[Vec<bool>; 3], orders: &[usize; 3], h: usize) -> u64 {
    (0..3).map(|i| fixed_cosets(g, &subs[i], orders[i], h)).sum()
}

/// Number of points of the curve fixed by `h != 1`.
pub fn fixed_points(g: &FinGroup, t: &TriangleTriple, h: usize) -> Result<u64> {
    g.check_element(h)?;
    if h == g.identity() {
        return Err(Error::InvalidParameters("the identity fixes every point".into()));
    }
    let subs = stabilizers(g, t);
    let orders = [t.x, t.y, t.z].map(|e| g.element_order(e) as usize);
    Ok(fixed_with(g, &subs, &orders, h))
}

/// Sizes of the three fibres, `|G|/m_i`.
pub fn fibre_sizes(g: &FinGroup, t: &TriangleTriple) -> [u64; 3] {
    [t.x, t.y, t.z].map(|e| (g.order() / g.element_order(e) as usize) as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterValue {
    pub class: String,
    pub class_order: u32,
    pub class_size: usize,
    pub fixed_points: Option<u64>,
    pub chi_value: i64,
}

/// The `H^1` character as one value per conjugacy class, in canonical class
/// order, with the checks run on it.
#[derive(Clone, Debug, Serialize)]
pub struct H1Character {
    pub genus: u64,
    pub values: Vec<CharacterValue>,
    /// `sum over h != 1 of Fix(h)`.
    pub fixed_point_total: u64,
    /// `sum_i (|G|/m_i)(m_i - 1)`.
    pub ramification_total: u64,
    /// `<chi, 1>`; must be an integer, so kept as the exact quotient.
    pub trivial_multiplicity: i64,
    /// `chi = 2 + rho_reg - pi_x - pi_y - pi_z` on every class.
    pub permutation_identity: bool,
    pub faithful: bool,
}

impl H1Character {
    pub fn degree(&self) -> i64 {
        self.values[0].chi_value
    }

    /// Every consistency check holds.
    pub fn consistent(&self) -> bool {
        self.fixed_point_total == self.ramification_total
            && self.trivial_multiplicity == 0
            && self.permutation_identity
            && self.degree() == 2 * self.genus as i64
    }
}

/// Lefschetz character of `G` on `H^1` of the curve of `t`.
pub fn h1_character(g: &FinGroup, t: &TriangleTriple) -> Result<H1Character> {
    let orders = [t.x, t.y, t.z].map(|e| g.element_order(e) as usize);
    let ty = crate::dessin::TriangleType::new(orders[0] as u32, orders[1] as u32, orders[2] as u32)?;
    let genus = genus_of(g.order() as u64, ty)?;
    if genus < 2 {
        return Err(Error::Genus(format!("genus {genus} < 2")));
    }
    let subs = stabilizers(g, t);
    let n = g.order() as i64;
    let classes = g.classes();
    let mut values = Vec::with_capacity(classes.len());
    let mut fixed_point_total = 0;
    let mut inner = 0i64;
    let mut permutation_identity = true;
    for c in classes.list() {
        let h = c.representative;
        let (fix, chi) = if h == g.identity() {
            (None, 2 * genus as i64)
        } else {
            let f = fixed_with(g, &subs, &orders, h);
            fixed_point_total += f * c.size() as u64;
            (Some(f), 2 - f as i64)
        };
        let pi: i64 = (0..3).map(|i| fixed_cosets(g, &subs[i], orders[i], h) as i64).sum();
        let rho = if h == g.identity() { n } else { 0 };
        permutation_identity &= chi == 2 + rho - pi;
        inner += chi * c.size() as i64;
        values.push(CharacterValue {
            class: c.label.clone(),
            class_order: c.element_order,
            class_size: c.size(),
            fixed_points: fix,
            chi_value: chi,
        });
    }
    if inner % n != 0 {
        return Err(Error::Internal(format!("<chi, 1> = {inner}/{n} is not an integer")));
    }
    let ramification_total = orders.iter().map(|&m| (g.order() / m * (m - 1)) as u64).sum();
    let degree = 2 * genus as i64;
    let faithful = values.iter().skip(1).all(|v| v.chi_value != degree);
    Ok(H1Character {
        genus,
        values,
        fixed_point_total,
        ramification_total,
        trivial_multiplicity: inner / n,
        permutation_identity,
        faithful,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::dessin::{enumerate_triples, OrderMode, TriangleType};

    #[test]
    fn klein_character() {
        let g = catalog::psl2(7).unwrap();
        let t = enumerate_triples(&g, TriangleType::HURWITZ, OrderMode::Exact).unwrap()[0].representative;
        let chi = h1_character(&g, &t).unwrap();
        assert_eq!(chi.degree(), 6);
        assert_eq!(chi.fixed_point_total, 340);
        assert_eq!(chi.ramification_total, 340);
        assert_eq!(chi.trivial_multiplicity, 0);
        assert!(chi.consistent() && chi.faithful);
        assert_eq!(fibre_sizes(&g, &t).iter().sum::<u64>(), 164);
        let four = (0..168).find(|&e| g.element_order(e) == 4).unwrap();
        assert_eq!(fixed_points(&g, &t, four).unwrap(), 0);
        assert!(fixed_points(&g, &t, 0).is_err());
    }
}
