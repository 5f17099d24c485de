//! Dense linear algebra over a prime field `F_l`.
//!
//! Vectors are `Vec<u32>` with entries in `0..l`; matrices are row-major and
//! act on column vectors.

use std::ops::{Index, IndexMut};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[Vec<u32>]) -> Matrix {
        let mut m = Matrix::zero(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (i, &v) in c.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix, ell: u32) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let t = out[(i, j)] as u64 + a * other[(k, j)] as u64;
                    out[(i, j)] = (t % ell as u64) as u32;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u32], ell: u32) -> Vec<u32> {
        (0..self.rows)
            .map(|i| {
                let s: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (s % ell as u64) as u32
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64, ell: u32) -> Matrix {
        let mut r = Matrix::identity(self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b, ell);
            }
            b = b.mul(&b, ell);
            e >>= 1;
        }
        r
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn rank(&self, ell: u32) -> usize {
        let mut e = Echelon::new(self.cols, ell);
        for r in 0..self.rows {
            e.insert(self.row(r).to_vec());
        }
        e.rank()
    }

    pub fn is_invertible(&self, ell: u32) -> bool {
        self.rows == self.cols && self.rank(ell) == self.rows
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = u32;
    fn index(&self, (i, j): (usize, usize)) -> &u32 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u32 {
        &mut self.data[i * self.cols + j]
    }
}

pub(crate) fn inv_mod(a: u32, ell: u32) -> u32 {
    crate::arith::poly::inv_mod(a, ell)
}

/// Incrementally built reduced row echelon basis of a subspace of `F_l^n`.
#[derive(Clone, Debug)]
pub struct Echelon {
    n: usize,
    ell: u32,
    /// Rows kept fully reduced, each with leading entry 1, sorted by pivot.
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(n: usize, ell: u32) -> Echelon {
        Echelon { n, ell, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(n: usize, ell: u32, vs: impl IntoIterator<Item = Vec<u32>>) -> Echelon {
        let mut e = Echelon::new(n, ell);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn dim_ambient(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Reduces `v` against the basis; the result vanishes on pivot columns.
    pub fn reduce(&self, v: &mut [u32]) {
        let ell = self.ell as u64;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p] as u64;
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                if r != 0 {
                    *x = ((*x as u64 + (ell - c) * r as u64) % ell) as u32;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.n);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let ell = self.ell as u64;
        let inv = inv_mod(v[p], self.ell) as u64;
        for x in v.iter_mut() {
            *x = (*x as u64 * inv % ell) as u32;
        }
        for row in self.rows.iter_mut() {
            let c = row[p] as u64;
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = ((*x as u64 + (ell - c) * r as u64) % ell) as u32;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    /// Canonical form: the reduced basis itself.
    pub fn canonical(&self) -> Vec<Vec<u32>> {
        self.rows.clone()
    }
}

/// Coordinates on `F_l^n / W` read off the non-pivot columns after reduction.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    relations: Echelon,
    free: Vec<usize>,
}

impl QuotientMap {
    pub fn new(relations: Echelon) -> QuotientMap {
        let free = (0..relations.dim_ambient()).filter(|c| !relations.pivots().contains(c)).collect();
        QuotientMap { relations, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Columns of the ambient space kept as quotient coordinates.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        self.relations.reduce(&mut w);
        self.free.iter().map(|&c| w[c]).collect()
    }

    /// Ambient vector whose projection is the given coordinate vector.
    pub fn lift(&self, coords: &[u32]) -> Vec<u32> {
        let mut v = vec![0; self.relations.dim_ambient()];
        for (&c, &x) in self.free.iter().zip(coords) {
            v[c] = x;
        }
        v
    }
}

pub(crate) fn reduce_signed(v: &[i64], ell: u32) -> Vec<u32> {
    v.iter().map(|&x| x.rem_euclid(ell as i64) as u32).collect()
}

/// All `d`-dimensional subspaces of `F_l^n`, as reduced echelon bases.
pub fn all_subspaces(n: usize, d: usize, ell: u32) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    if d > n {
        return out;
    }
    let mut pivots = Vec::with_capacity(d);
    choose_pivots(n, d, 0, &mut pivots, &mut |piv| {
        // free entries: row r, column c > piv[r], c not a pivot
        let slots: Vec<(usize, usize)> =
            (0..d).flat_map(|r| ((piv[r] + 1)..n).filter(|c| !piv.contains(c)).map(move |c| (r, c))).collect();
        let total = (ell as u64).pow(slots.len() as u32);
        for mut k in 0..total {
            let mut rows = vec![vec![0u32; n]; d];
            for (r, &p) in piv.iter().enumerate() {
                rows[r][p] = 1;
            }
            for &(r, c) in &slots {
                rows[r][c] = (k % ell as u64) as u32;
                k /= ell as u64;
            }
            out.push(rows);
        }
    });
    out
}

fn choose_pivots(n: usize, d: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == d {
        f(cur);
        return;
    }
    for c in start..n {
        cur.push(c);
        choose_pivots(n, d, c + 1, cur, f);
        cur.pop();
    }
}

/// Number of `d`-dimensional subspaces of `F_l^n`.
pub fn gaussian_binomial(n: usize, d: usize, ell: u64) -> u128 {
    if d > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..d {
        num *= (ell as u128).pow((n - i) as u32) - 1;
        den *= (ell as u128).pow((i + 1) as u32) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_rank_and_membership() {
        let e = Echelon::from_vectors(3, 2, [vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[1, 0, 1]));
        assert!(!e.contains(&[1, 0, 0]));
    }

    #[test]
    fn quotient_coordinates() {
        let w = Echelon::from_vectors(3, 3, [vec![1, 2, 0]]);
        let q = QuotientMap::new(w);
        assert_eq!(q.dim(), 2);
        assert_eq!(q.project(&[1, 2, 0]), vec![0, 0]);
        assert_eq!(q.project(&q.lift(&[2, 1])), vec![2, 1]);
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        assert_eq!(all_subspaces(6, 3, 2).len() as u128, gaussian_binomial(6, 3, 2));
        assert_eq!(gaussian_binomial(6, 3, 2), 1395);
        assert_eq!(all_subspaces(4, 2, 3).len() as u128, gaussian_binomial(4, 2, 3));
    }

    #[test]
    fn matrix_power() {
        let mut m = Matrix::zero(2, 2);
        m[(0, 1)] = 1;
        m[(1, 0)] = 1;
        assert_eq!(m.pow(2, 5), Matrix::identity(2));
        assert!(m.is_invertible(5));
    }
}
