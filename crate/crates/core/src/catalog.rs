//! Constructors for the group families the censuses range over, a small
//! spec language for naming them, and the generator file format.
//!
//! Generator files are plain text:
//!
//! ```text
//! degree 3
//! name S3
//! 1 0 2
//! 1 2 0
//! ```
//!
//! Line one gives the degree `n`, line two the group name, and every further
//! non-empty line is one generator as `n` space-separated 0-based images.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::arith::{prime_power, psl2_order, Fq};
use crate::error::{Error, Result};
use crate::group::{FinGroup, DEFAULT_CAP};
use crate::perm::Perm;

/// Bumped whenever the set of shipped families changes.
pub const CATALOG_VERSION: &str = "1";

/// Largest field size for the `PSL/SL/PGL(2,q)` constructors.
pub const MAX_Q: u64 = 49;

/// Range of `q` included in the default census catalog.
pub const CENSUS_MAX_Q: u64 = 32;

/// Alternating and symmetric groups in the default catalog go up to this degree.
pub const CENSUS_MAX_SYM_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Psl2(u64),
    Sl2(u64),
    Pgl2(u64),
    Alt(usize),
    Sym(usize),
    Cyclic(usize),
    /// Symmetries of an `n`-gon, order `2n`.
    Dihedral(usize),
    /// Dicyclic group of order `4m`.
    Dicyclic(usize),
    /// Direct product of cyclic groups.
    Abelian(Vec<usize>),
    /// `C_m ⋊ C_n` with `b a b^-1 = a^k`.
    Metacyclic {
        m: usize,
        n: usize,
        k: usize,
    },
    /// `F_p^dim ⋊ <matrices>` acting affinely on `p^dim` points; matrices
    /// row-major.
    Semidirect {
        p: u32,
        dim: usize,
        matrices: Vec<Vec<u32>>,
    },
    /// Full affine group `AGL(dim, p)`.
    Affine {
        p: u32,
        dim: usize,
    },
    /// One of the two extensions of `PSL(2,7)` by `(Z/2)^3` built from the
    /// Klein-quartic kernel (index 1 or 2).
    KleinExtension(usize),
    File(PathBuf),
}

impl GroupSpec {
    /// Closed-form order where the family has one.
    pub fn expected_order(&self) -> Option<u64> {
        use GroupSpec::*;
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        Some(match self {
            Psl2(q) => psl2_order(*q),
            Sl2(q) | Pgl2(q) => q * (q * q - 1),
            Alt(n) => (fact(*n) / 2).max(1),
            Sym(n) => fact(*n),
            Cyclic(n) => *n as u64,
            Dihedral(n) => 2 * *n as u64,
            Dicyclic(m) => 4 * *m as u64,
            Abelian(v) => v.iter().map(|&x| x as u64).product(),
            Metacyclic { m, n, .. } => (m * n) as u64,
            Affine { p, dim } => (*p as u64).pow(*dim as u32) * gl_order(*p as u64, *dim),
            KleinExtension(_) => 1344,
            Semidirect { .. } | File(_) => return None,
        })
    }

    /// Families whose members are solvable by construction.
    pub fn is_solvable_family(&self) -> bool {
        use GroupSpec::*;
        matches!(self, Cyclic(_) | Dihedral(_) | Dicyclic(_) | Abelian(_) | Metacyclic { .. })
    }

    pub fn build(&self, cap: usize) -> Result<FinGroup> {
        if let Some(order) = self.expected_order() {
            if order > cap as u64 {
                return Err(Error::CapExceeded { cap, what: self.to_string() });
            }
        }
        let g = match self {
            GroupSpec::Psl2(q) => psl2_capped(*q, cap)?,
            GroupSpec::Sl2(q) => sl2_capped(*q, cap)?,
            GroupSpec::Pgl2(q) => pgl2_capped(*q, cap)?,
            GroupSpec::Alt(n) => alternating(*n, cap)?,
            GroupSpec::Sym(n) => symmetric(*n, cap)?,
            GroupSpec::Cyclic(n) => cyclic(*n)?,
            GroupSpec::Dihedral(n) => dihedral(*n)?,
            GroupSpec::Dicyclic(m) => dicyclic(*m)?,
            GroupSpec::Abelian(v) => abelian(v)?,
            GroupSpec::Metacyclic { m, n, k } => metacyclic(*m, *n, *k)?,
            GroupSpec::Semidirect { p, dim, matrices } => semidirect(*p, *dim, matrices, cap)?,
            GroupSpec::Affine { p, dim } => {
                semidirect(*p, *dim, &gl_generators(*p, *dim)?, cap)?.with_name(self.to_string())
            }
            GroupSpec::KleinExtension(i) => crate::homol::klein_extension(*i)?.group,
            GroupSpec::File(path) => load_group(path, cap)?,
        };
        if let Some(order) = self.expected_order() {
            if g.order() as u64 != order {
                return Err(Error::Internal(format!(
                    "{self}: enumerated order {} differs from closed form {order}",
                    g.order()
                )));
            }
        }
        Ok(g)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match self {
            Psl2(q) => write!(f, "psl2:{q}"),
            Sl2(q) => write!(f, "sl2:{q}"),
            Pgl2(q) => write!(f, "pgl2:{q}"),
            Alt(n) => write!(f, "alt:{n}"),
            Sym(n) => write!(f, "sym:{n}"),
            Cyclic(n) => write!(f, "cyc:{n}"),
            Dihedral(n) => write!(f, "dih:{n}"),
            Dicyclic(m) => write!(f, "dic:{m}"),
            Abelian(v) => write!(f, "ab:{}", join(v.iter(), ",")),
            Metacyclic { m, n, k } => write!(f, "meta:{m},{n},{k}"),
            Semidirect { p, dim, matrices } => {
                write!(f, "semidirect:{p}:{dim}:{}", join(matrices.iter().map(|m| join(m.iter(), ",")), ";"))
            }
            Affine { p, dim } => write!(f, "agl:{dim}:{p}"),
            KleinExtension(i) => write!(f, "ext17:{i}"),
            File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn join<T: ToString>(it: impl Iterator<Item = T>, sep: &str) -> String {
    it.map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let bad = || Error::InvalidParameters(format!("bad group spec `{s}`"));
        let (family, arg) = s.split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let list = |t: &str| t.split(',').map(num).collect::<Result<Vec<_>>>();
        let spec = match family {
            "psl2" => GroupSpec::Psl2(num(arg)? as u64),
            "sl2" => GroupSpec::Sl2(num(arg)? as u64),
            "pgl2" => GroupSpec::Pgl2(num(arg)? as u64),
            "alt" => GroupSpec::Alt(num(arg)?),
            "sym" => GroupSpec::Sym(num(arg)?),
            "cyc" => GroupSpec::Cyclic(num(arg)?),
            "dih" => GroupSpec::Dihedral(num(arg)?),
            "dic" => GroupSpec::Dicyclic(num(arg)?),
            "ab" => GroupSpec::Abelian(list(arg)?),
            "meta" => match list(arg)?[..] {
                [m, n, k] => GroupSpec::Metacyclic { m, n, k },
                _ => return Err(bad()),
            },
            "agl" => match list(&arg.replace(':', ","))?[..] {
                [dim, p] => GroupSpec::Affine { p: p as u32, dim },
                _ => return Err(bad()),
            },
            "semidirect" => {
                let mut parts = arg.splitn(3, ':');
                let p = num(parts.next().ok_or_else(bad)?)? as u32;
                let dim = num(parts.next().ok_or_else(bad)?)?;
                let matrices = parts
                    .next()
                    .ok_or_else(bad)?
                    .split(';')
                    .map(|m| list(m).map(|v| v.into_iter().map(|x| x as u32).collect()))
                    .collect::<Result<Vec<Vec<u32>>>>()?;
                GroupSpec::Semidirect { p, dim, matrices }
            }
            "ext17" => GroupSpec::KleinExtension(num(arg)?),
            "file" => GroupSpec::File(PathBuf::from(arg)),
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

pub fn gl_order(p: u64, dim: usize) -> u64 {
    let pd = p.pow(dim as u32);
    (0..dim as u32).map(|i| pd - p.pow(i)).product()
}

pub fn psl2(q: u64) -> Result<FinGroup> {
    psl2_capped(q, DEFAULT_CAP)
}

pub fn sl2(q: u64) -> Result<FinGroup> {
    sl2_capped(q, DEFAULT_CAP)
}

pub fn pgl2(q: u64) -> Result<FinGroup> {
    pgl2_capped(q, DEFAULT_CAP)
}

fn field_for(q: u64) -> Result<Fq> {
    let (p, f) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q > MAX_Q {
        return Err(Error::InvalidParameters(format!("q = {q} exceeds {MAX_Q}")));
    }
    Fq::new(p as u32, f)
}

/// Möbius transformation `z -> (az + b)/(cz + d)` on the projective line,
/// with point `q` standing for infinity.
fn mobius(fq: &Fq, [a, b, c, d]: [u32; 4]) -> Perm {
    let q = fq.size();
    let images = (0..=q)
        .map(|z| {
            let (num, den) = if z == q { (a, c) } else { (fq.add(fq.mul(a, z), b), fq.add(fq.mul(c, z), d)) };
            match fq.inv(den) {
                Some(inv) => fq.mul(num, inv),
                None => q,
            }
        })
        .collect();
    Perm::from_images_unchecked(images)
}

/// Additive basis `1, t, .., t^(f-1)` in the field's integer encoding.
fn additive_basis(fq: &Fq) -> Vec<u32> {
    (0..fq.degree()).map(|i| fq.characteristic().pow(i)).collect()
}

fn psl2_capped(q: u64, cap: usize) -> Result<FinGroup> {
    let fq = field_for(q)?;
    let w = fq.primitive();
    let mut gens: Vec<Perm> = additive_basis(&fq).into_iter().map(|b| mobius(&fq, [1, b, 0, 1])).collect();
    gens.push(mobius(&fq, [fq.mul(w, w), 0, 0, 1]));
    gens.push(mobius(&fq, [0, fq.neg(1), 1, 0]));
    FinGroup::from_generators(format!("PSL(2,{q})"), &gens, cap)
}

fn pgl2_capped(q: u64, cap: usize) -> Result<FinGroup> {
    let fq = field_for(q)?;
    let mut gens: Vec<Perm> = additive_basis(&fq).into_iter().map(|b| mobius(&fq, [1, b, 0, 1])).collect();
    gens.push(mobius(&fq, [fq.primitive(), 0, 0, 1]));
    gens.push(mobius(&fq, [0, 1, 1, 0]));
    FinGroup::from_generators(format!("PGL(2,{q})"), &gens, cap)
}

/// Linear action on the `q^2 - 1` nonzero column vectors.
fn sl2_capped(q: u64, cap: usize) -> Result<FinGroup> {
    let fq = field_for(q)?;
    let qq = fq.size();
    let act = |[a, b, c, d]: [u32; 4]| {
        let images = (1..qq * qq)
            .map(|pt| {
                let (u, v) = (pt / qq, pt % qq);
                let u2 = fq.add(fq.mul(a, u), fq.mul(b, v));
                let v2 = fq.add(fq.mul(c, u), fq.mul(d, v));
                u2 * qq + v2 - 1
            })
            .collect();
        Perm::from_images_unchecked(images)
    };
    let w = fq.primitive();
    let mut gens: Vec<Perm> = additive_basis(&fq).into_iter().map(|b| act([1, b, 0, 1])).collect();
    gens.push(act([w, 0, 0, fq.inv(w).unwrap()]));
    gens.push(act([0, fq.neg(1), 1, 0]));
    FinGroup::from_generators(format!("SL(2,{q})"), &gens, cap)
}

fn alternating(n: usize, cap: usize) -> Result<FinGroup> {
    if n < 3 {
        return FinGroup::from_generators(format!("A{n}"), &[Perm::identity(n.max(1))], cap);
    }
    let gens = (2..n).map(|k| Perm::from_cycles(n, &[&[0, 1, k as u32]])).collect::<Result<Vec<_>>>()?;
    FinGroup::from_generators(format!("A{n}"), &gens, cap)
}

fn symmetric(n: usize, cap: usize) -> Result<FinGroup> {
    if n < 2 {
        return FinGroup::from_generators(format!("S{n}"), &[Perm::identity(1)], cap);
    }
    let full: Vec<u32> = (0..n as u32).collect();
    let gens = [Perm::from_cycles(n, &[&[0, 1]])?, Perm::from_cycles(n, &[&full])?];
    FinGroup::from_generators(format!("S{n}"), &gens, cap)
}

pub fn cyclic(n: usize) -> Result<FinGroup> {
    if n == 0 {
        return Err(Error::InvalidParameters("cyclic group of order 0".into()));
    }
    let full: Vec<u32> = (0..n as u32).collect();
    FinGroup::from_generators(format!("C{n}"), &[Perm::from_cycles(n, &[&full])?], DEFAULT_CAP)
}

pub fn dihedral(n: usize) -> Result<FinGroup> {
    match n {
        0 => Err(Error::InvalidParameters("dihedral group of a 0-gon".into())),
        1 => Ok(cyclic(2)?.with_name("D2")),
        2 => Ok(abelian(&[2, 2])?.with_name("D4")),
        _ => {
            let rot = Perm::from_images_unchecked((0..n as u32).map(|i| (i + 1) % n as u32).collect());
            let refl = Perm::from_images_unchecked((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect());
            FinGroup::from_generators(format!("D{}", 2 * n), &[rot, refl], DEFAULT_CAP)
        }
    }
}

/// Regular representation of a group given by its right multiplication by
/// each generator on `0..size`.
fn regular_from(name: String, size: usize, steps: &[&dyn Fn(usize) -> usize]) -> Result<FinGroup> {
    let gens: Vec<Perm> = steps
        .iter()
        .map(|step| Perm::from_images((0..size).map(|e| step(e) as u32).collect()))
        .collect::<Result<_>>()?;
    FinGroup::from_generators(name, &gens, size.max(1))
}

/// `Dic_m = <a, x | a^2m, x^2 = a^m, x a x^-1 = a^-1>`, order `4m`.
pub fn dicyclic(m: usize) -> Result<FinGroup> {
    if m < 1 {
        return Err(Error::InvalidParameters("dicyclic parameter must be >= 1".into()));
    }
    let n = 2 * m;
    // element a^i x^j at index 2i + j
    let by_a = move |e: usize| {
        let (i, j) = (e / 2, e % 2);
        let i2 = if j == 0 { (i + 1) % n } else { (i + n - 1) % n };
        2 * i2 + j
    };
    let by_x = move |e: usize| {
        let (i, j) = (e / 2, e % 2);
        if j == 0 {
            2 * i + 1
        } else {
            2 * ((i + m) % n)
        }
    };
    regular_from(format!("Dic{m}"), 4 * m, &[&by_a, &by_x])
}

pub fn abelian(factors: &[usize]) -> Result<FinGroup> {
    if factors.is_empty() || factors.contains(&0) {
        return Err(Error::InvalidParameters("abelian factors must be positive".into()));
    }
    let degree: usize = factors.iter().sum();
    let mut gens = Vec::new();
    let mut offset = 0u32;
    for &k in factors {
        let cycle: Vec<u32> = (offset..offset + k as u32).collect();
        gens.push(Perm::from_cycles(degree, &[&cycle])?);
        offset += k as u32;
    }
    let name = factors.iter().map(|k| format!("C{k}")).collect::<Vec<_>>().join("x");
    FinGroup::from_generators(name, &gens, DEFAULT_CAP)
}

/// `C_m ⋊ C_n = <a, b | a^m, b^n, b a b^-1 = a^k>`; needs `k^n = 1 mod m`.
pub fn metacyclic(m: usize, n: usize, k: usize) -> Result<FinGroup> {
    if m == 0 || n == 0 || crate::perm::gcd(k as u64, m as u64) != 1 {
        return Err(Error::InvalidParameters(format!("meta:{m},{n},{k}")));
    }
    let kp: Vec<usize> = (0..n)
        .scan(1usize, |acc, _| {
            let cur = *acc;
            *acc = *acc * k % m;
            Some(cur)
        })
        .collect();
    if (kp[n - 1] * k) % m != 1 % m {
        return Err(Error::InvalidParameters(format!("meta:{m},{n},{k}: k^n != 1 mod m")));
    }
    // a^i b^j at index i n + j; b^j a = a^(k^j) b^j
    let by_a = |e: usize| {
        let (i, j) = (e / n, e % n);
        ((i + kp[j]) % m) * n + j
    };
    let by_b = |e: usize| {
        let (i, j) = (e / n, e % n);
        i * n + (j + 1) % n
    };
    regular_from(format!("C{m}:{k}C{n}"), m * n, &[&by_a, &by_b])
}

/// Standard generators of `GL(dim, p)`: the transvection `I + E_01`, the
/// cyclic coordinate shift and `diag(w, 1, .., 1)`.
fn gl_generators(p: u32, dim: usize) -> Result<Vec<Vec<u32>>> {
    if dim == 0 {
        return Err(Error::InvalidParameters("dimension 0".into()));
    }
    let fp = Fq::new(p, 1)?;
    let ident = |i: usize, j: usize| u32::from(i == j);
    let mut gens = Vec::new();
    if dim >= 2 {
        gens.push((0..dim * dim).map(|t| ident(t / dim, t % dim) + u32::from(t == 1)).collect());
        gens.push((0..dim * dim).map(|t| u32::from(t / dim == (t % dim + 1) % dim)).collect());
    }
    if p > 2 {
        let mut d: Vec<u32> = (0..dim * dim).map(|t| ident(t / dim, t % dim)).collect();
        d[0] = fp.primitive();
        gens.push(d);
    }
    if gens.is_empty() {
        gens.push(vec![1]);
    }
    Ok(gens)
}

/// Affine group `F_p^dim ⋊ <matrices>` on the `p^dim` vectors, encoded in
/// base `p` with coordinate 0 least significant.
fn semidirect(p: u32, dim: usize, matrices: &[Vec<u32>], cap: usize) -> Result<FinGroup> {
    if !crate::arith::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let size = (p as usize)
        .checked_pow(dim as u32)
        .filter(|&s| s <= 1 << 20)
        .ok_or_else(|| Error::Infeasible(format!("{p}^{dim} points")))?;
    let decode = |mut v: usize| -> Vec<u32> {
        (0..dim)
            .map(|_| {
                let c = (v % p as usize) as u32;
                v /= p as usize;
                c
            })
            .collect()
    };
    let encode = |c: &[u32]| c.iter().rev().fold(0usize, |acc, &x| acc * p as usize + x as usize);

    let mut gens = Vec::new();
    for m in matrices {
        if m.len() != dim * dim {
            return Err(Error::InvalidParameters(format!("matrix with {} entries, need {}", m.len(), dim * dim)));
        }
        let images: Vec<u32> = (0..size)
            .map(|v| {
                let c = decode(v);
                let out: Vec<u32> =
                    (0..dim).map(|i| (0..dim).map(|j| m[i * dim + j] * c[j]).sum::<u32>() % p).collect();
                encode(&out) as u32
            })
            .collect();
        gens.push(
            Perm::from_images(images)
                .map_err(|_| Error::InvalidParameters("semidirect matrix is not invertible".into()))?,
        );
    }
    for i in 0..dim {
        let images: Vec<u32> = (0..size)
            .map(|v| {
                let mut c = decode(v);
                c[i] = (c[i] + 1) % p;
                encode(&c) as u32
            })
            .collect();
        gens.push(Perm::from_images_unchecked(images));
    }
    FinGroup::from_generators(format!("{p}^{dim}:M"), &gens, cap)
}

/// The five (four when `4 ∤ p - 1`) isomorphism types of order `4p`, plus
/// `A4` for `p = 3`.
pub fn groups_of_order_4p(p: u64) -> Result<Vec<FinGroup>> {
    if p < 3 || !crate::arith::is_prime(p) {
        return Err(Error::InvalidParameters(format!("{p} is not an odd prime")));
    }
    specs_of_order_4p(p).iter().map(|s| s.build(DEFAULT_CAP)).collect::<Result<Vec<_>>>()
}

pub fn specs_of_order_4p(p: u64) -> Vec<GroupSpec> {
    let p = p as usize;
    let mut specs = vec![
        GroupSpec::Cyclic(4 * p),
        GroupSpec::Abelian(vec![2, 2 * p]),
        GroupSpec::Dihedral(2 * p),
        GroupSpec::Dicyclic(p),
    ];
    if (p - 1).is_multiple_of(4) {
        let k = (2..p).find(|&k| (k * k) % p == p - 1).expect("square root of -1 exists");
        specs.push(GroupSpec::Metacyclic { m: p, n: 4, k });
    }
    if p == 3 {
        specs.push(GroupSpec::Alt(4));
    }
    specs
}

/// Specs of the given order from the default census catalog.
pub fn census_specs_of_order(order: u64) -> Vec<GroupSpec> {
    let mut specs = Vec::new();
    let n = order as usize;
    specs.push(GroupSpec::Cyclic(n));
    if n.is_multiple_of(2) && (n / 2).is_multiple_of(2) {
        specs.push(GroupSpec::Abelian(vec![2, n / 2]));
    }
    if n.is_multiple_of(2) && n / 2 >= 3 {
        specs.push(GroupSpec::Dihedral(n / 2));
    }
    if n.is_multiple_of(4) && n / 4 >= 2 {
        specs.push(GroupSpec::Dicyclic(n / 4));
    }
    for q in 2..=CENSUS_MAX_Q {
        if prime_power(q).is_none() {
            continue;
        }
        if psl2_order(q) == order {
            specs.push(GroupSpec::Psl2(q));
        }
        if q % 2 == 1 && q * (q * q - 1) == order {
            specs.push(GroupSpec::Sl2(q));
            specs.push(GroupSpec::Pgl2(q));
        }
    }
    for d in 1..=CENSUS_MAX_SYM_DEGREE {
        let s = GroupSpec::Sym(d);
        if s.expected_order() == Some(order) {
            specs.push(s);
        }
        let a = GroupSpec::Alt(d);
        if d >= 4 && a.expected_order() == Some(order) {
            specs.push(a);
        }
    }
    let agl = GroupSpec::Affine { p: 2, dim: 3 };
    if agl.expected_order() == Some(order) {
        specs.push(agl);
    }
    specs
}

/// Census specs plus all metacyclic `C_m ⋊ C_n` of the given order, one
/// per cyclic subgroup `<k>` up to changing the generator of `C_n`.
pub fn all_specs_of_order(order: u64) -> Vec<GroupSpec> {
    let mut specs = census_specs_of_order(order);
    let n_total = order as usize;
    for m in 2..n_total {
        if !n_total.is_multiple_of(m) {
            continue;
        }
        let n = n_total / m;
        if n < 2 {
            continue;
        }
        for k in 2..m {
            if crate::perm::gcd(k as u64, m as u64) != 1 || pow_mod(k, n, m) != 1 {
                continue;
            }
            // k and k^j (gcd(j, n) = 1) give isomorphic groups; keep the least
            let least =
                (1..n).filter(|&j| crate::perm::gcd(j as u64, n as u64) == 1).map(|j| pow_mod(k, j, m)).min().unwrap();
            if least == k {
                specs.push(GroupSpec::Metacyclic { m, n, k });
            }
        }
    }
    specs
}

fn pow_mod(b: usize, e: usize, m: usize) -> usize {
    crate::arith::poly::pow_mod(b as u64, e as u64, m as u64) as usize
}

pub fn parse_group(text: &str, cap: usize) -> Result<FinGroup> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (ln, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty file".into() })?;
    let degree: usize = first
        .trim()
        .strip_prefix("degree")
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| Error::Parse { line: ln + 1, msg: "expected `degree <n>`".into() })?;
    let (ln, second) = lines.next().ok_or(Error::Parse { line: ln + 2, msg: "missing name line".into() })?;
    let name = second
        .trim()
        .strip_prefix("name")
        .map(|r| r.trim().to_string())
        .ok_or_else(|| Error::Parse { line: ln + 1, msg: "expected `name <string>`".into() })?;
    let mut gens = Vec::new();
    for (ln, line) in lines {
        let images = line
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse { line: ln + 1, msg: e.to_string() })?;
        if images.len() != degree {
            return Err(Error::DegreeMismatch { expected: degree, found: images.len() });
        }
        let perm = Perm::from_images(images).map_err(|e| Error::Parse { line: ln + 1, msg: e.to_string() })?;
        gens.push(perm);
    }
    if gens.is_empty() {
        gens.push(Perm::identity(degree.max(1)));
    }
    FinGroup::from_generators(name, &gens, cap)
}

pub fn load_group(path: &Path, cap: usize) -> Result<FinGroup> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_group(&text, cap)
}

pub fn format_group(g: &FinGroup) -> String {
    let mut out = format!("degree {}\nname {}\n", g.degree(), g.name());
    for p in g.generator_perms() {
        out.push_str(&join(p.images().iter(), " "));
        out.push('\n');
    }
    out
}

pub fn save_group(g: &FinGroup, path: &Path) -> Result<()> {
    std::fs::write(path, format_group(g)).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

/// Every generator file (`*.gens`) in a data-pack directory, sorted by name.
pub fn load_data_pack(dir: &Path, cap: usize) -> Result<Vec<FinGroup>> {
    let entries = std::fs::read_dir(dir).map_err(|source| Error::Io { path: dir.to_path_buf(), source })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "gens"))
        .collect();
    paths.sort();
    paths.iter().map(|p| load_group(p, cap)).collect()
}
