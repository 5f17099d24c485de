//! The census of regular dessins of a given type by genus.
//!
//! Candidates of order `N(g)` come from three places, in this order:
//! extensions built from kernels of smaller groups already found
//! ([`crate::homol`]), the default catalog, and data-pack groups. For types
//! with pairwise coprime entries only perfect candidates are searched.
//! Isomorphic candidates are detected with cross-group pair tests and
//! counted once.
//!
//! The result is complete only relative to the candidates; orders at which
//! an unknown perfect group might hide are listed as unchecked.

use std::collections::BTreeMap;

use crate::arith::{congruence_match, is_prime, CongruenceLevel};
use crate::catalog::{self, GroupSpec};
use crate::charfix::{h1_character, H1Character};
use crate::dessin::{enumerate_triples, DessinClass, OrderMode, TriangleType};
use crate::error::{Error, Result};
use crate::group::{pairs_isomorphic_unchecked, FinGroup, DEFAULT_CAP};
use crate::homol::{
    extension_quotient, find_complement, kernel_mod_ell_homology, schreier_data, submodule_lattice, FpGroup,
};

/// Orders of the nonabelian simple groups up to `2 * 10^5`.
pub const SIMPLE_ORDERS: &[u64] = &[
    60, 168, 360, 504, 660, 1092, 2448, 2520, 3420, 4080, 5616, 6048, 6072, 7800, 7920, 9828, 12180, 14880, 20160,
    25308, 25920, 29120, 32736, 34440, 39732, 51888, 58800, 62400, 74412, 95040, 102660, 113460, 126000, 131040,
    150348, 175560, 178920, 181440, 194472,
];

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub ty: TriangleType,
    pub max_genus: u64,
    pub mode: OrderMode,
    pub cap: usize,
    pub data_pack: Vec<FinGroup>,
    /// Build extensions from kernels of groups already found.
    pub homol_sweep: bool,
}

impl Default for CensusConfig {
    fn default() -> CensusConfig {
        CensusConfig {
            ty: TriangleType::HURWITZ,
            max_genus: 17,
            mode: OrderMode::Exact,
            cap: DEFAULT_CAP,
            data_pack: Vec::new(),
            homol_sweep: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Homol,
    Catalog,
    DataPack,
}

#[derive(Clone, Debug)]
pub struct CensusGroup {
    pub name: String,
    pub source: Source,
    /// How a homol group was built.
    pub construction: Option<String>,
    pub group: FinGroup,
    pub classes: Vec<DessinClass>,
    pub characters: Vec<H1Character>,
    pub congruence: Option<CongruenceLevel>,
    /// Whether a homol extension splits over its kernel.
    pub split: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Duplicate {
    pub name: String,
    pub source: Source,
    pub isomorphic_to: String,
}

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub genus: u64,
    pub order: u64,
    pub count: usize,
    pub groups: Vec<CensusGroup>,
    pub duplicates: Vec<Duplicate>,
    pub searched_groups: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Census {
    pub ty: TriangleType,
    pub max_genus: u64,
    pub entries: Vec<CensusEntry>,
    pub unchecked_orders: Vec<u64>,
    pub notes: Vec<String>,
}

impl Census {
    pub fn count(&self, genus: u64) -> usize {
        self.entries.iter().find(|e| e.genus == genus).map_or(0, |e| e.count)
    }
}

/// Group order of a genus-`g` quotient of the given type, if integral.
pub fn order_for_genus(ty: TriangleType, genus: u64) -> Option<u64> {
    let (p, q, r) = (ty.p as u64, ty.q as u64, ty.r as u64);
    let den = p * q * r - q * r - p * r - p * q;
    let num = (2 * genus).checked_sub(2)? * p * q * r;
    (num % den == 0 && num > 0).then(|| num / den)
}

struct Candidate {
    group: FinGroup,
    source: Source,
    construction: Option<String>,
    split: Option<bool>,
}

pub fn hurwitz_census(cfg: &CensusConfig) -> Result<Census> {
    let ty = cfg.ty;
    if !ty.is_hyperbolic() {
        return Err(Error::InvalidParameters(format!("type ({ty}) is not hyperbolic")));
    }
    let perfect_only = ty.has_perfect_quotients();
    let orders: Vec<(u64, u64)> = (2..=cfg.max_genus).filter_map(|g| order_for_genus(ty, g).map(|n| (g, n))).collect();
    let max_order = orders.last().map_or(0, |&(_, n)| n);

    let mut pending: BTreeMap<u64, Vec<Candidate>> = BTreeMap::new();
    let mut entries = Vec::new();
    let mut unchecked = Vec::new();
    let mut notes = Vec::new();

    for &(genus, order) in &orders {
        let mut candidates = pending.remove(&order).unwrap_or_default();
        let mut build_failed = false;
        for spec in catalog_candidates(order, perfect_only) {
            match spec.build(cfg.cap) {
                Ok(g) => {
                    let g = g.with_name(spec.to_string());
                    candidates.push(Candidate { group: g, source: Source::Catalog, construction: None, split: None })
                }
                Err(e) if e.is_feasibility() => {
                    build_failed = true;
                    notes.push(format!("{spec}: {e}"));
                }
                Err(e) => return Err(e),
            }
        }
        for g in cfg.data_pack.iter().filter(|g| g.order() as u64 == order) {
            candidates.push(Candidate { group: g.clone(), source: Source::DataPack, construction: None, split: None });
        }

        let mut entry = CensusEntry {
            genus,
            order,
            count: 0,
            groups: Vec::new(),
            duplicates: Vec::new(),
            searched_groups: Vec::new(),
        };
        let mut any_perfect = false;
        for cand in candidates {
            let g = cand.group;
            if perfect_only && !g.is_perfect() {
                continue;
            }
            any_perfect = true;
            entry.searched_groups.push(g.name().to_string());
            let classes = enumerate_triples(&g, ty, cfg.mode)?;
            if classes.is_empty() {
                continue;
            }
            let dup = entry.groups.iter().find(|a| {
                let r = classes[0].representative;
                a.classes.iter().any(|c| {
                    let s = c.representative;
                    pairs_isomorphic_unchecked(&a.group, (s.x, s.y), &g, (r.x, r.y))
                })
            });
            if let Some(a) = dup {
                entry.duplicates.push(Duplicate {
                    name: g.name().to_string(),
                    source: cand.source,
                    isomorphic_to: a.name.clone(),
                });
                continue;
            }
            let characters = classes.iter().map(|c| h1_character(&g, &c.representative)).collect::<Result<Vec<_>>>()?;
            if cfg.homol_sweep {
                for (i, class) in classes.iter().enumerate() {
                    sweep(&g, i, class, ty, max_order, cfg.cap, &mut pending, &mut notes)?;
                }
            }
            entry.count += classes.len();
            entry.groups.push(CensusGroup {
                name: g.name().to_string(),
                source: cand.source,
                construction: cand.construction,
                congruence: congruence_match(&g),
                classes,
                characters,
                split: cand.split,
                group: g,
            });
        }
        let may_hide_perfect = SIMPLE_ORDERS.iter().any(|&s| s <= order && order % s == 0);
        if build_failed || !perfect_only || (may_hide_perfect && !any_perfect) {
            unchecked.push(order);
        }
        entries.push(entry);
    }
    if cfg.homol_sweep {
        notes.push("extensions are searched only with elementary abelian kernels".into());
    }
    Ok(Census { ty, max_genus: cfg.max_genus, entries, unchecked_orders: unchecked, notes })
}

/// Extensions of `g` by quotients of the mod-`l` homology of the kernel of
/// one triple, for every prime `l` and codimension fitting under `max_order`.
#[allow(clippy::too_many_arguments)]
fn sweep(
    g: &FinGroup,
    class_index: usize,
    class: &DessinClass,
    ty: TriangleType,
    max_order: u64,
    cap: usize,
    pending: &mut BTreeMap<u64, Vec<Candidate>>,
    notes: &mut Vec<String>,
) -> Result<()> {
    let n = g.order() as u64;
    let t = class.representative;
    let fp = FpGroup::triangle(ty);
    let sd = schreier_data(&fp, g, &[t.x, t.y])?;
    for ell in (2..=max_order / n).filter(|&l| is_prime(l)) {
        let h = kernel_mod_ell_homology(&sd, ell as u32)?;
        let dim = h.dim();
        let max_codim = (1..=dim as u32).take_while(|&c| n * ell.pow(c) <= max_order).last().unwrap_or(0) as usize;
        if max_codim == 0 {
            continue;
        }
        let lattice = match submodule_lattice(&h.module) {
            Ok(l) => l,
            Err(e) if e.is_feasibility() => {
                notes.push(format!("{} triple {} mod {ell}: {e}", g.name(), class_index + 1));
                continue;
            }
            Err(e) => return Err(e),
        };
        let mut k = 0;
        for codim in 1..=max_codim {
            let subs: Vec<_> = lattice.iter().filter(|b| b.len() == dim - codim).collect();
            for u in subs {
                k += 1;
                let ext = extension_quotient(&h, u, cap)?;
                let split = match find_complement(&ext) {
                    Ok(c) => Some(c.is_some()),
                    Err(e) if e.is_feasibility() => None,
                    Err(e) => return Err(e),
                };
                let name = format!("{ell}^{codim}.{}#{}.{k}", g.name(), class_index + 1);
                let construction = format!(
                    "kernel of triple {} of {}, H1 mod {ell}, invariant subspace of codimension {codim}",
                    class_index + 1,
                    g.name()
                );
                pending.entry(ext.order() as u64).or_default().push(Candidate {
                    group: ext.group.with_name(name),
                    source: Source::Homol,
                    construction: Some(construction),
                    split,
                });
            }
        }
    }
    Ok(())
}

/// Specs the default catalog tries at `order`.
pub fn catalog_candidates(order: u64, perfect_only: bool) -> Vec<GroupSpec> {
    catalog::census_specs_of_order(order).into_iter().filter(|s| !(perfect_only && s.is_solvable_family())).collect()
}
