//! Dense polynomials over a prime field, coefficients lowest degree first.

pub(crate) type Poly = Vec<u32>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            r = r * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    r
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> Poly {
    let dm = degree(m).expect("division by zero polynomial");
    let lead_inv = inv_mod(m[dm], p) as u64;
    let mut r: Vec<u32> = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = r[dr] as u64 * lead_inv % p as u64;
        let shift = dr - dm;
        for (i, &mc) in m.iter().enumerate().take(dm + 1) {
            let t = c * mc as u64 % p as u64;
            r[i + shift] = ((r[i + shift] as u64 + p as u64 - t) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(d) = degree(&a) {
        let inv = inv_mod(a[d], p) as u64;
        for c in a.iter_mut() {
            *c = (*c as u64 * inv % p as u64) as u32;
        }
    }
    a
}

/// `base^exp mod m`.
pub(crate) fn pow_rem(base: &[u32], mut exp: u64, m: &[u32], p: u32) -> Poly {
    let mut result = vec![1u32];
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            result = rem(&mul(&result, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        exp >>= 1;
    }
    trim(result)
}

/// Irreducibility by `gcd(x^(p^i) - x, m) = 1` for `1 <= i <= deg/2`.
pub(crate) fn is_irreducible(m: &[u32], p: u32) -> bool {
    let d = match degree(m) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 0..d / 2 {
        xp = pow_rem(&xp, p as u64, m, p);
        let g = gcd(m, &sub(&xp, &x, p), p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
pub(crate) fn eval(a: &[u32], x: u32, p: u32) -> u32 {
    a.iter().rev().fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_roots_mod_13() {
        // x^3 + x^2 - 2x - 1
        let f = |p: u32| [p - 1, p - 2, 1, 1];
        assert_eq!((0..13).filter(|&x| eval(&f(13), x, 13) == 0).count(), 3);
        assert_eq!((0..2).filter(|&x| eval(&[1, 0, 1, 1], x, 2) == 0).count(), 0);
    }

    #[test]
    fn irreducibility_over_f2() {
        // x^3 + x + 1 irreducible, x^3 + 1 = (x + 1)(x^2 + x + 1) not
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 0, 1], 2));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots but is reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn gcd_is_monic() {
        let a = mul(&[1, 1], &[2, 0, 1], 5);
        let b = mul(&[1, 1], &[3, 1], 5);
        assert_eq!(gcd(&a, &b, 5), vec![1, 1]);
    }
}
