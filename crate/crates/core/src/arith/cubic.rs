use serde::Serialize;

use super::fq::{is_prime, prime_power};
use super::poly;
use crate::catalog;
use crate::error::{Error, Result};
use crate::group::FinGroup;

/// Minimal polynomial `x^3 + x^2 - 2x - 1` of `2cos(2pi/7)`, highest
/// coefficient last.
pub const MIN_POLY_2COS: [i64; 4] = [-1, -2, 1, 1];

/// Decomposition of a rational prime in `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeSplit {
    pub ell: u64,
    /// Ramification index.
    pub e: u32,
    /// Residue degree.
    pub f: u32,
    /// Number of primes of `k` above `ell`.
    pub g: u32,
    /// Residue field size `ell^f`, once per prime above `ell`.
    pub residue_q: Vec<u64>,
}

/// Factors the minimal polynomial modulo `ell`.
pub fn splitting_in_k(ell: u64) -> Result<PrimeSplit> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if ell > u32::MAX as u64 / 2 {
        return Err(Error::Infeasible(format!("prime {ell} too large")));
    }
    let p = ell as u32;
    let m: Vec<u32> = MIN_POLY_2COS.iter().map(|&c| c.rem_euclid(ell as i64) as u32).collect();
    let dm: Vec<u32> =
        poly::trim(m.iter().enumerate().skip(1).map(|(i, &c)| ((i as u64 * c as u64) % ell) as u32).collect());

    let repeated = poly::degree(&poly::gcd(&m, &dm, p)).unwrap_or(0);
    let xl = poly::pow_rem(&[0, 1], ell, &m, p);
    let roots = poly::degree(&poly::gcd(&m, &poly::sub(&xl, &[0, 1], p), p)).unwrap_or(0);

    // k/Q is cyclic of degree 3, so only the types 1+1+1, 3 and 1^3 occur
    let (e, f, g) = match (repeated, roots) {
        (2, 1) => (3, 1, 1),
        (0, 3) => (1, 1, 3),
        (0, 0) => (1, 3, 1),
        _ => {
            return Err(Error::Internal(format!(
                "unexpected factorization type mod {ell} (repeated {repeated}, roots {roots})"
            )))
        }
    };
    Ok(PrimeSplit { ell, e, f, g, residue_q: vec![ell.pow(f); g as usize] })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HurwitzStatus {
    NotHurwitz,
    /// `orbit_count` is the number of Hurwitz curves with group `PSL(2,q)`.
    Hurwitz {
        orbit_count: u32,
    },
}

/// Closed-form classification of Hurwitz groups `PSL(2,q)`.
///
/// `q = 7`, `q = p` with `p = ±1 mod 7` (three curves), and `q = p^3` with
/// `p ≠ 0, ±1 mod 7` (one curve). Cross-checked against triple enumeration in
/// the test suite.
pub fn macbeath_class(q: u64) -> Result<HurwitzStatus> {
    let (p, f) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let r = p % 7;
    let status = if q == 7 {
        HurwitzStatus::Hurwitz { orbit_count: 1 }
    } else if f == 1 && (r == 1 || r == 6) {
        HurwitzStatus::Hurwitz { orbit_count: 3 }
    } else if f == 3 && !matches!(r, 0 | 1 | 6) {
        HurwitzStatus::Hurwitz { orbit_count: 1 }
    } else {
        HurwitzStatus::NotHurwitz
    };
    Ok(status)
}

pub fn psl2_order(q: u64) -> u64 {
    let d = if q % 2 == 1 { 2 } else { 1 };
    q * (q * q - 1) / d
}

/// One principal congruence quotient above a rational prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceCurve {
    /// Position among the primes of `k` above `ell`; no particular prime is
    /// singled out.
    pub prime_index: u32,
    pub residue_q: u64,
    pub genus: u64,
    pub group: String,
    pub group_order: u64,
    pub moduli_field: String,
    /// Size of the Galois orbit containing this curve.
    pub orbit_size: u32,
}

/// Hurwitz curves from `Delta(p)` for the primes `p` of `k` above `ell`.
///
/// Empty when `PSL(2, ell^f)` is not a Hurwitz group.
pub fn congruence_curves(ell: u64) -> Result<Vec<CongruenceCurve>> {
    let split = splitting_in_k(ell)?;
    let q = ell.pow(split.f);
    if macbeath_class(q)? == HurwitzStatus::NotHurwitz {
        return Ok(Vec::new());
    }
    let order = psl2_order(q);
    let moduli_field = if split.g == 1 { "Q" } else { "k (degree 3)" };
    Ok((0..split.g)
        .map(|i| CongruenceCurve {
            prime_index: i,
            residue_q: q,
            genus: 1 + order / 84,
            group: format!("PSL(2,{q})"),
            group_order: order,
            moduli_field: moduli_field.to_string(),
            orbit_size: split.g,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceLevel {
    pub ell: u64,
    pub f: u32,
    pub residue_q: u64,
}

/// Matches `g` against the prime-level congruence quotients `PSL(2,q)`.
///
/// Only prime levels are considered: the order must be `|PSL(2,q)|` for a
/// Hurwitz `q`, `g` must be simple, and its class fingerprint must equal that
/// of `PSL(2,q)`.
pub fn congruence_match(g: &FinGroup) -> Option<CongruenceLevel> {
    let n = g.order() as u64;
    let mut q = 2u64;
    // q(q^2 - 1)/2 is a monotone lower bound for |PSL(2,q)|
    while q * (q * q - 1) / 2 <= n {
        if psl2_order(q) == n && matches!(macbeath_class(q), Ok(HurwitzStatus::Hurwitz { .. })) && g.is_simple() {
            if let Ok(model) = catalog::psl2(q) {
                if model.class_fingerprint() == g.class_fingerprint() {
                    let (ell, f) = prime_power(q).unwrap();
                    return Some(CongruenceLevel { ell, f, residue_q: q });
                }
            }
        }
        q += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_is_totally_ramified() {
        let s = splitting_in_k(7).unwrap();
        assert_eq!((s.e, s.f, s.g), (3, 1, 1));
        assert_eq!(s.residue_q, vec![7]);
    }

    #[test]
    fn two_is_inert() {
        let s = splitting_in_k(2).unwrap();
        assert_eq!((s.e, s.f, s.g), (1, 3, 1));
        assert_eq!(s.residue_q, vec![8]);
    }

    #[test]
    fn thirteen_splits_completely() {
        let s = splitting_in_k(13).unwrap();
        assert_eq!((s.e, s.f, s.g), (1, 1, 3));
        assert_eq!(s.residue_q, vec![13, 13, 13]);
    }

    #[test]
    fn splitting_rejects_composites() {
        assert!(matches!(splitting_in_k(21), Err(Error::NotPrime(21))));
    }

    #[test]
    fn macbeath_examples() {
        assert_eq!(macbeath_class(13).unwrap(), HurwitzStatus::Hurwitz { orbit_count: 3 });
        assert_eq!(macbeath_class(8).unwrap(), HurwitzStatus::Hurwitz { orbit_count: 1 });
        assert_eq!(macbeath_class(7).unwrap(), HurwitzStatus::Hurwitz { orbit_count: 1 });
        assert_eq!(macbeath_class(27).unwrap(), HurwitzStatus::Hurwitz { orbit_count: 1 });
        assert_eq!(macbeath_class(11).unwrap(), HurwitzStatus::NotHurwitz);
        assert_eq!(macbeath_class(49).unwrap(), HurwitzStatus::NotHurwitz);
        assert_eq!(macbeath_class(343).unwrap(), HurwitzStatus::NotHurwitz);
        assert!(matches!(macbeath_class(12), Err(Error::NotPrimePower(12))));
    }

    #[test]
    fn congruence_curve_examples() {
        let c = congruence_curves(7).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].genus, c[0].moduli_field.as_str()), (3, "Q"));

        let c = congruence_curves(2).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].genus, c[0].moduli_field.as_str()), (7, "Q"));

        let c = congruence_curves(13).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.iter().all(|x| x.genus == 14 && x.orbit_size == 3 && x.moduli_field == "k (degree 3)"));

        // 11 is inert but 11^3 = 1331 with 11 = 4 mod 7 is Hurwitz
        let c = congruence_curves(11).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].group_order, psl2_order(1331));
        // 5 is inert and 125 is Hurwitz as well; 3 gives 27
        assert_eq!(congruence_curves(3).unwrap()[0].residue_q, 27);
    }
}
