use std::collections::{BTreeSet, HashSet};

use super::{inverse_word, Letter, SchreierData};
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::linalg::{all_subspaces, gaussian_binomial, reduce_signed, Echelon, Matrix, QuotientMap};

/// Largest `l^dim` for which every cyclic submodule is spun up.
const SPIN_LIMIT: u64 = 1 << 20;
/// Largest number of candidate subspaces scanned exhaustively.
const SCAN_LIMIT: u128 = 2_000_000;
/// Largest submodule lattice built before giving up.
const LATTICE_LIMIT: usize = 100_000;

/// A finite-dimensional `F_l[G]`-module given by the matrices of the
/// presentation generators.
#[derive(Clone, Debug)]
pub struct GModule {
    pub ell: u32,
    pub dim: usize,
    pub generators: Vec<Matrix>,
}

impl GModule {
    pub fn apply_word(&self, w: &[Letter], v: &[u32]) -> Vec<u32> {
        // Left action: the rightmost letter acts first.
        let mut cur = v.to_vec();
        for l in w.iter().rev() {
            cur = if l.inverse {
                self.inverse_of(l.gen).apply(&cur, self.ell)
            } else {
                self.generators[l.gen].apply(&cur, self.ell)
            };
        }
        cur
    }

    pub fn inverse_of(&self, s: usize) -> Matrix {
        // Generators have finite order; the inverse is a power.
        let m = &self.generators[s];
        let id = Matrix::identity(self.dim);
        let mut prev = id.clone();
        let mut cur = m.clone();
        while cur != id {
            prev = cur.clone();
            cur = cur.mul(m, self.ell);
        }
        prev
    }

    /// Dimension of the space of vectors fixed by every generator.
    pub fn fixed_dim(&self) -> usize {
        let mut e = Echelon::new(self.dim, self.ell);
        for m in &self.generators {
            for i in 0..self.dim {
                let mut row = m.row(i).to_vec();
                row[i] = (row[i] + self.ell - 1) % self.ell;
                e.insert(row);
            }
        }
        self.dim - e.rank()
    }

    /// The submodule generated by `seeds`.
    pub fn spin(&self, seeds: impl IntoIterator<Item = Vec<u32>>) -> Echelon {
        let mut e = Echelon::new(self.dim, self.ell);
        let mut queue = Vec::new();
        for v in seeds {
            if e.insert(v.clone()) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for m in &self.generators {
                let w = m.apply(&v, self.ell);
                if e.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        e
    }
}

/// Whether the span of `basis` is stable under every generator.
pub fn is_invariant(m: &GModule, basis: &[Vec<u32>]) -> bool {
    let e = Echelon::from_vectors(m.dim, m.ell, basis.iter().cloned());
    basis.iter().all(|v| m.generators.iter().all(|g| e.contains(&g.apply(v, m.ell))))
}

/// `H_1(N, F_l)` for the kernel `N` of a Schreier datum, with its action of
/// the quotient by conjugation.
pub struct KernelHomology<'a, 'g> {
    pub(crate) data: &'a SchreierData<'g>,
    pub(crate) quotient: QuotientMap,
    pub module: GModule,
}

/// Abelianizes the kernel mod `l`: Schreier generators modulo the rewritten
/// relator conjugates.
pub fn kernel_mod_ell_homology<'a, 'g>(data: &'a SchreierData<'g>, ell: u32) -> Result<KernelHomology<'a, 'g>> {
    if !is_prime(ell as u64) {
        return Err(Error::NotPrime(ell as u64));
    }
    let m = data.num_schreier_generators();
    let mut relations = Echelon::new(m, ell);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut acc = vec![0i64; m];
    for r in &data.presentation().relators {
        for u in 0..data.num_cosets() {
            acc.iter_mut().for_each(|x| *x = 0);
            let end = data.walk_into(u, r, &mut acc);
            if end != u {
                return Err(Error::Internal("relator does not close up".into()));
            }
            let row = reduce_signed(&acc, ell);
            if row.iter().any(|&x| x != 0) && seen.insert(row.clone()) {
                relations.insert(row);
            }
        }
    }
    let quotient = QuotientMap::new(relations);
    let mut h = KernelHomology { data, quotient, module: GModule { ell, dim: 0, generators: Vec::new() } };
    h.module.dim = h.quotient.dim();
    let gens: Vec<Matrix> = data.images().iter().map(|&g| h.action_of(g)).collect();
    h.module.generators = gens;
    for r in &data.presentation().relators {
        let id: Vec<Vec<u32>> = (0..h.module.dim).map(|i| unit(h.module.dim, i)).collect();
        if id.iter().any(|v| h.module.apply_word(r, v) != *v) {
            return Err(Error::Internal("module action violates a relator".into()));
        }
    }
    Ok(h)
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

impl<'a, 'g> KernelHomology<'a, 'g> {
    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn ell(&self) -> u32 {
        self.module.ell
    }

    pub fn data(&self) -> &'a SchreierData<'g> {
        self.data
    }

    /// Class of a kernel word.
    pub fn class_of_word(&self, w: &[Letter]) -> Result<Vec<u32>> {
        let v = self.data.rewrite(w)?;
        Ok(self.quotient.project(&reduce_signed(&v, self.ell())))
    }

    /// Class of Schreier generator `index`.
    pub fn class_of_generator(&self, index: usize) -> Vec<u32> {
        let mut v = vec![0; self.data.num_schreier_generators()];
        v[index] = 1;
        self.quotient.project(&v)
    }

    /// Matrix of conjugation by a lift of group element `g`.
    ///
    /// The basis cycle of edge `(u, s)` is translated to start at coset `g`
    /// and walked; the walk returns to `g` since it is a closed loop.
    pub fn action_of(&self, g: usize) -> Matrix {
        let ell = self.ell();
        let m = self.data.num_schreier_generators();
        let mut acc = vec![0i64; m];
        let columns: Vec<Vec<u32>> = self
            .quotient
            .free_columns()
            .iter()
            .map(|&c| {
                acc.iter_mut().for_each(|x| *x = 0);
                let w = self.data.schreier_word(c);
                let end = self.data.walk_into(g, &w, &mut acc);
                debug_assert_eq!(end, g);
                self.quotient.project(&reduce_signed(&acc, ell))
            })
            .collect();
        Matrix::from_columns(self.dim(), &columns)
    }

    /// Cocycle `f(g, h) = [t(g) t(h) t(gh)^-1]` of the tree section.
    pub fn cocycle(&self, g: usize, h: usize) -> Vec<u32> {
        let group = self.data.group();
        let mut w = self.data.tree_word(g);
        w.extend(self.data.tree_word(h));
        w.extend(inverse_word(&self.data.tree_word(group.mul(g, h))));
        self.class_of_word(&w).expect("section product lies in the kernel")
    }
}

/// All `d`-dimensional invariant subspaces, as sorted reduced echelon bases.
pub fn invariant_submodules(m: &GModule, d: usize) -> Result<Vec<Vec<Vec<u32>>>> {
    if d > m.dim {
        return Ok(Vec::new());
    }
    Ok(submodule_lattice(m)?.into_iter().filter(|b| b.len() == d).collect())
}

/// Every invariant subspace, sorted.
///
/// Built as sums of cyclic submodules: every submodule is such a sum, so the
/// lattice is complete once it is closed under adding cyclic submodules.
pub fn submodule_lattice(m: &GModule) -> Result<Vec<Vec<Vec<u32>>>> {
    let size = (m.ell as u64).checked_pow(m.dim as u32).unwrap_or(u64::MAX);
    if size > SPIN_LIMIT {
        return Err(Error::Infeasible(format!("submodule lattice of a {}-dimensional module over F_{}", m.dim, m.ell)));
    }
    let mut cyclic: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    for code in 1..size {
        let v = decode(code, m.dim, m.ell);
        // one vector per line
        if v.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        cyclic.insert(m.spin([v]).canonical());
    }
    let cyclic: Vec<Vec<Vec<u32>>> = cyclic.into_iter().collect();
    let mut lattice: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    lattice.insert(Vec::new());
    let mut frontier: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
    while let Some(a) = frontier.pop() {
        for c in &cyclic {
            let s = Echelon::from_vectors(m.dim, m.ell, a.iter().chain(c.iter()).cloned()).canonical();
            if lattice.insert(s.clone()) {
                if lattice.len() > LATTICE_LIMIT {
                    return Err(Error::Infeasible("submodule lattice too large".into()));
                }
                frontier.push(s);
            }
        }
    }
    Ok(lattice.into_iter().collect())
}

/// Same result as [`invariant_submodules`] by testing every subspace.
pub fn invariant_subspaces_exhaustive(m: &GModule, d: usize) -> Result<Vec<Vec<Vec<u32>>>> {
    if gaussian_binomial(m.dim, d, m.ell as u64) > SCAN_LIMIT {
        return Err(Error::Infeasible(format!("{d}-subspaces of F_{}^{}", m.ell, m.dim)));
    }
    let mut out: Vec<_> = all_subspaces(m.dim, d, m.ell).into_iter().filter(|b| is_invariant(m, b)).collect();
    out.sort();
    Ok(out)
}

pub(crate) fn decode(mut code: u64, n: usize, ell: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = (code % ell as u64) as u32;
            code /= ell as u64;
            d
        })
        .collect()
}

pub(crate) fn encode(v: &[u32], ell: u32) -> u64 {
    v.iter().rev().fold(0u64, |acc, &d| acc * ell as u64 + d as u64)
}
