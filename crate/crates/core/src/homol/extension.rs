use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::module::{decode, encode, invariant_submodules, is_invariant, kernel_mod_ell_homology};
use super::{schreier_data, FpGroup, KernelHomology};
use crate::catalog;
use crate::dessin::{enumerate_triples, OrderMode, TriangleType};
use crate::error::{Error, Result};
use crate::group::{FinGroup, DEFAULT_CAP};
use crate::linalg::{Echelon, Matrix, QuotientMap};
use crate::perm::Perm;

const SAMPLES: usize = 64;
const COMPLEMENT_LIMIT: u64 = 1 << 16;

/// The quotient `P / K` where `K` is the preimage of an invariant subspace
/// `U` of `H_1(N, F_l)`; an extension of `G = P / N` by `V = H_1(N, F_l) / U`.
///
/// Elements are pairs `(a, g)` with `a` in `V` and `g` in `G`, multiplied by
/// `(a, g)(b, h) = (a + g.b + f(g, h), g h)`.
pub struct Extension {
    pub group: FinGroup,
    pub ell: u32,
    /// Dimension of `V`.
    pub kernel_dim: usize,
    pub base_order: usize,
    /// Action of the presentation generators on `V`.
    pub action: Vec<Matrix>,
    /// Point code reached from the base point, per element.
    point_of: Vec<u32>,
    element_of: Vec<u32>,
}

impl Extension {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// `(a, g)` of element `e`.
    pub fn coordinates(&self, e: usize) -> (Vec<u32>, usize) {
        let p = self.point_of[e] as usize;
        (decode((p / self.base_order) as u64, self.kernel_dim, self.ell), p % self.base_order)
    }

    pub fn element_at(&self, a: &[u32], g: usize) -> usize {
        self.element_of[encode(a, self.ell) as usize * self.base_order + g] as usize
    }

    pub fn projection(&self, e: usize) -> usize {
        self.point_of[e] as usize % self.base_order
    }

    /// Elements of `V`, i.e. the kernel of the projection.
    pub fn kernel_elements(&self) -> Vec<usize> {
        let size = (self.ell as usize).pow(self.kernel_dim as u32);
        (0..size).map(|code| self.element_of[code * self.base_order] as usize).collect()
    }

    /// Lifts of the presentation generators.
    pub fn lifts(&self) -> &[usize] {
        self.group.generators()
    }

    pub fn is_split(&self) -> Result<bool> {
        Ok(find_complement(self)?.is_some())
    }
}

/// Builds the extension for the invariant subspace spanned by `u`, given in
/// coordinates of `h`.
///
/// The group is realized as permutations of the pairs `(a, g)`, generator
/// `s` acting by `(a, g) -> (a + f(g, s), g s)`. The order and the
/// multiplication rule are checked; a mismatch is reported as
/// [`Error::Cocycle`].
pub fn extension_quotient(h: &KernelHomology<'_, '_>, u: &[Vec<u32>], cap: usize) -> Result<Extension> {
    let ell = h.ell();
    let m = &h.module;
    if u.iter().any(|v| v.len() != m.dim) {
        return Err(Error::InvalidParameters("subspace vectors have the wrong length".into()));
    }
    if !is_invariant(m, u) {
        return Err(Error::InvalidParameters("subspace is not invariant".into()));
    }
    let sub = QuotientMap::new(Echelon::from_vectors(m.dim, ell, u.iter().cloned()));
    let c = sub.dim();
    let data = h.data();
    let base = data.group();
    let n = base.order();
    let size = (ell as u64)
        .checked_pow(c as u32)
        .and_then(|s| s.checked_mul(n as u64))
        .filter(|&s| s <= cap as u64 && s <= u32::MAX as u64)
        .ok_or_else(|| Error::CapExceeded { cap, what: format!("extension of order {n}*{ell}^{c}") })?
        as usize;

    let rank = data.presentation().rank();
    let mut shift = vec![vec![0u32; c]; n * rank];
    for (i, &(coset, s)) in data.schreier_edges().iter().enumerate() {
        shift[coset * rank + s] = sub.project(&h.class_of_generator(i));
    }
    let perms: Vec<Perm> = (0..rank)
        .map(|s| {
            let images = (0..size)
                .map(|p| {
                    let (code, g) = (p / n, p % n);
                    let mut a = decode(code as u64, c, ell);
                    for (x, d) in a.iter_mut().zip(&shift[g * rank + s]) {
                        *x = (*x + d) % ell;
                    }
                    (encode(&a, ell) as usize * n + data.forward[s][g] as usize) as u32
                })
                .collect();
            Perm::from_images_unchecked(images)
        })
        .collect();
    let group = FinGroup::from_generators(format!("{ell}^{c}.{}", base.name()), &perms, cap)?;
    if group.order() != size {
        return Err(Error::Cocycle(format!("expected order {size}, found {}", group.order())));
    }
    let point_of: Vec<u32> = group.elements().iter().map(|p| p.apply(0) as u32).collect();
    let mut element_of = vec![u32::MAX; size];
    for (e, &p) in point_of.iter().enumerate() {
        element_of[p as usize] = e as u32;
    }
    if element_of.contains(&u32::MAX) {
        return Err(Error::Cocycle("action is not regular".into()));
    }

    let induced = |mat: &Matrix| -> Matrix {
        let cols: Vec<Vec<u32>> = (0..c)
            .map(|j| {
                let mut e = vec![0; c];
                e[j] = 1;
                sub.project(&mat.apply(&sub.lift(&e), ell))
            })
            .collect();
        Matrix::from_columns(c, &cols)
    };
    let action: Vec<Matrix> = m.generators.iter().map(&induced).collect();
    let ext = Extension { group, ell, kernel_dim: c, base_order: n, action, point_of, element_of };

    // Check the multiplication rule and the cocycle identity on samples.
    let mut actions: HashMap<usize, Matrix> = HashMap::new();
    let mut act = |g: usize| -> Matrix { actions.entry(g).or_insert_with(|| induced(&h.action_of(g))).clone() };
    let f = |g: usize, k: usize| sub.project(&h.cocycle(g, k));
    let add = |a: &[u32], b: &[u32]| -> Vec<u32> { a.iter().zip(b).map(|(x, y)| (x + y) % ell).collect() };
    let neg = |a: &[u32]| -> Vec<u32> { a.iter().map(|x| (ell - x) % ell).collect() };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..SAMPLES {
        let e1 = rng.gen_range(0..size);
        let e2 = rng.gen_range(0..size);
        let (a, g) = ext.coordinates(e1);
        let (b, k) = ext.coordinates(e2);
        let expect = add(&add(&a, &act(g).apply(&b, ell)), &f(g, k));
        if ext.coordinates(ext.group.mul(e1, e2)) != (expect, base.mul(g, k)) {
            return Err(Error::Cocycle("multiplication rule fails".into()));
        }

        let (g1, g2, g3) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        // g1.f(g2, g3) - f(g1 g2, g3) + f(g1, g2 g3) - f(g1, g2) = 0
        let lhs = add(
            &add(&act(g1).apply(&f(g2, g3), ell), &neg(&f(base.mul(g1, g2), g3))),
            &add(&f(g1, base.mul(g2, g3)), &neg(&f(g1, g2))),
        );
        if lhs.iter().any(|&x| x != 0) {
            return Err(Error::Cocycle("cocycle identity fails".into()));
        }
    }
    Ok(ext)
}

/// Lifts of the generators that generate a complement to `V`, if any.
pub fn find_complement(ext: &Extension) -> Result<Option<Vec<usize>>> {
    let rank = ext.lifts().len();
    let vsize = (ext.ell as u64).pow(ext.kernel_dim as u32);
    let total = vsize.checked_pow(rank as u32).unwrap_or(u64::MAX);
    if total > COMPLEMENT_LIMIT {
        return Err(Error::Infeasible(format!("{total} candidate generator lifts")));
    }
    let targets: Vec<usize> = ext.lifts().iter().map(|&l| ext.projection(l)).collect();
    for mut code in 0..total {
        let gens: Vec<usize> = targets
            .iter()
            .map(|&g| {
                let a = decode(code % vsize, ext.kernel_dim, ext.ell);
                code /= vsize;
                ext.element_at(&a, g)
            })
            .collect();
        let (_, count) = ext.group.closure_bounded(&gens, ext.base_order);
        if count == ext.base_order {
            return Ok(Some(gens));
        }
    }
    Ok(None)
}

/// One of the two extensions `2^3 . PSL(2,7)` coming from the invariant
/// 3-dimensional subspaces of the mod-2 homology of the Klein quartic's
/// kernel; `index` is 1 or 2.
pub fn klein_extension(index: usize) -> Result<Extension> {
    let g = catalog::psl2(7)?;
    let classes = enumerate_triples(&g, TriangleType::HURWITZ, OrderMode::Exact)?;
    let [class] = &classes[..] else {
        return Err(Error::Internal(format!("{} Hurwitz classes in PSL(2,7)", classes.len())));
    };
    let t = class.representative;
    let sd = schreier_data(&FpGroup::triangle(TriangleType::HURWITZ), &g, &[t.x, t.y])?;
    let h = kernel_mod_ell_homology(&sd, 2)?;
    let subs = invariant_submodules(&h.module, 3)?;
    let u = index
        .checked_sub(1)
        .and_then(|i| subs.get(i))
        .ok_or_else(|| Error::InvalidParameters(format!("extension index {index} not in 1..={}", subs.len())))?;
    let mut ext = extension_quotient(&h, u, DEFAULT_CAP)?;
    ext.group = ext.group.with_name(format!("ext17:{index}"));
    Ok(ext)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_extensions_have_order_1344() {
        for i in [1, 2] {
            let e = klein_extension(i).unwrap();
            assert_eq!(e.order(), 1344);
            assert_eq!(e.kernel_dim, 3);
            assert!(e.group.is_perfect());
            let v = e.kernel_elements();
            assert_eq!(v.len(), 8);
            assert!(v.iter().all(|&x| e.projection(x) == 0));
        }
        assert!(klein_extension(3).is_err());
        assert!(klein_extension(0).is_err());
    }
}
