//! Finite fields `F_q`, `q = p^f`, as polynomial residues modulo a fixed
//! irreducible polynomial.
//!
//! An element is encoded as the integer whose base-`p` digits are its
//! coefficients (digit `i` is the coefficient of `t^i`), so `0` and `1` are
//! the additive and multiplicative identities. Multiplication goes through
//! discrete log tables built from the least primitive element.

use super::poly::{self, Poly};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Fq {
    p: u32,
    f: u32,
    q: u32,
    modulus: Poly,
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub const MAX_EXTENSION_DEGREE: u32 = 6;

impl Fq {
    /// The field with `p^f` elements.
    ///
    /// The modulus is the first monic irreducible of degree `f` when the
    /// non-leading coefficient vectors `(c_0, .., c_{f-1})` are scanned as
    /// base-`p` integers `c_0 + c_1 p + ..` in increasing order.
    pub fn new(p: u32, f: u32) -> Result<Fq> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if f == 0 || f > MAX_EXTENSION_DEGREE {
            return Err(Error::InvalidParameters(format!("extension degree {f} outside 1..={MAX_EXTENSION_DEGREE}")));
        }
        let q = p
            .checked_pow(f)
            .filter(|&q| q <= 1 << 24)
            .ok_or_else(|| Error::Infeasible(format!("field of size {p}^{f}")))?;
        let modulus = (0..q)
            .map(|k| {
                let mut m = digits(k, p, f as usize);
                m.push(1);
                m
            })
            .find(|m| poly::is_irreducible(m, p))
            .ok_or_else(|| Error::Internal(format!("no irreducible modulus of degree {f} over F_{p}")))?;

        let mut field = Fq { p, f, q, modulus, exp: Vec::new(), log: Vec::new() };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let generator = (1..q)
            .find(|&g| factors.iter().all(|&r| field.pow_slow(g, order / r) != 1))
            .ok_or_else(|| Error::Internal("no primitive element".into()))?;

        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = 1u32;
        for k in 0..q - 1 {
            exp.push(cur);
            log[cur as usize] = k;
            cur = field.mul_slow(cur, generator);
        }
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    /// Coefficients of the defining polynomial, lowest first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element the log tables are built on.
    pub fn primitive(&self) -> u32 {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.combine(a, b, |x, y| (x + y) % self.p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.combine(a, b, |x, y| (x + self.p - y) % self.p)
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    fn combine(&self, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.f {
            out += op(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[k as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let k = (self.q - 1 - self.log[a as usize]) % (self.q - 1);
        Some(self.exp[k as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let k = (self.log[a as usize] as u64 * (e % (self.q as u64 - 1))) % (self.q as u64 - 1);
        self.exp[k as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let n = self.q as u64 - 1;
        let l = self.log[a as usize] as u64;
        Some(n / crate::perm::gcd(n, l))
    }

    /// Polynomial-product multiplication, independent of the log tables.
    pub fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let f = self.f as usize;
        let prod = poly::mul(&digits(a, self.p, f), &digits(b, self.p, f), self.p);
        undigits(&poly::rem(&prod, &self.modulus, self.p), self.p)
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut r = 1;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_slow(r, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        r
    }
}

fn digits(mut k: u32, p: u32, len: usize) -> Poly {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(k % p);
        k /= p;
    }
    out
}

fn undigits(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `q = p^f` decomposition, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut k = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        k += 1;
    }
    Some((p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_of_seven() {
        let f = Fq::new(7, 1).unwrap();
        assert_eq!(f.size(), 7);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn field_of_eight_satisfies_lagrange() {
        let f = Fq::new(2, 3).unwrap();
        assert_eq!(f.size(), 8);
        for a in 1..8 {
            assert_eq!(f.pow(a, 7), 1);
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        // first irreducible in the scan order is x^3 + x + 1
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn field_of_27_has_generator_of_order_26() {
        let f = Fq::new(3, 3).unwrap();
        // exhaustive order check over every nonzero element
        let orders: Vec<u64> = (1..27).map(|a| (1..=26u64).find(|&k| f.pow_slow(a, k) == 1).unwrap()).collect();
        assert_eq!(*orders.iter().max().unwrap(), 26);
        assert_eq!(f.mult_order(f.primitive()), Some(26));
        assert_eq!(orders.iter().filter(|&&o| o == 26).count(), 12);
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(matches!(Fq::new(6, 1), Err(Error::NotPrime(6))));
        assert!(Fq::new(2, 0).is_err());
        assert!(Fq::new(2, 7).is_err());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
