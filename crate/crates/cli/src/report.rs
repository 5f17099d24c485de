//! JSON views of library results. Every top-level report starts with
//! `schema` and `catalog_version`.

use serde::Serialize;

use hurwitz::arith::{CongruenceCurve, CongruenceLevel, HurwitzStatus, PrimeSplit};
use hurwitz::census::{Census, CensusEntry, CensusGroup, Source};
use hurwitz::charfix::H1Character;
use hurwitz::dessin::{DessinClass, Passport};
use hurwitz::group::FinGroup;
use hurwitz::origami::{OrigamiClass, OrigamiExistence, OrigamiPair, Verdict};

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct Header {
    pub schema: u32,
    pub catalog_version: &'static str,
    pub command: &'static str,
}

impl Header {
    pub fn new(command: &'static str) -> Header {
        Header { schema: SCHEMA, catalog_version: hurwitz::catalog::CATALOG_VERSION, command }
    }
}

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    #[serde(flatten)]
    pub header: Header,
    #[serde(flatten)]
    pub body: T,
}

fn perm(g: &FinGroup, e: usize) -> String {
    g.element(e).to_string()
}

#[derive(Serialize)]
pub struct TripleView {
    pub x: String,
    pub y: String,
    pub z: String,
}

#[derive(Serialize)]
pub struct DessinView {
    pub genus: u64,
    pub passport: Passport,
    pub representative: TripleView,
    pub class_size: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<H1Character>,
}

pub fn dessin_view(g: &FinGroup, c: &DessinClass, character: Option<H1Character>) -> DessinView {
    let t = c.representative;
    DessinView {
        genus: c.genus,
        passport: c.passport.clone(),
        representative: TripleView { x: perm(g, t.x), y: perm(g, t.y), z: perm(g, t.z) },
        class_size: c.class_size,
        character,
    }
}

#[derive(Serialize)]
pub struct CensusGroupView {
    pub name: String,
    pub source: Source,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    pub congruence: Option<CongruenceLevel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<bool>,
    pub classes: Vec<DessinView>,
}

#[derive(Serialize)]
pub struct DuplicateView {
    pub name: String,
    pub source: Source,
    pub isomorphic_to: String,
}

#[derive(Serialize)]
pub struct CensusEntryView {
    pub genus: u64,
    pub order: u64,
    pub count: usize,
    pub groups: Vec<CensusGroupView>,
    pub duplicates: Vec<DuplicateView>,
    pub searched_groups: Vec<String>,
}

#[derive(Serialize)]
pub struct CensusView {
    #[serde(rename = "type")]
    pub ty: String,
    pub mode: &'static str,
    pub max_genus: u64,
    pub catalog_conditional: bool,
    pub entries: Vec<CensusEntryView>,
    pub unchecked_orders: Vec<u64>,
    pub notes: Vec<String>,
}

fn group_view(cg: &CensusGroup) -> CensusGroupView {
    CensusGroupView {
        name: cg.name.clone(),
        source: cg.source,
        order: cg.group.order(),
        construction: cg.construction.clone(),
        congruence: cg.congruence.clone(),
        split: cg.split,
        classes: cg
            .classes
            .iter()
            .zip(&cg.characters)
            .map(|(c, chi)| dessin_view(&cg.group, c, Some(chi.clone())))
            .collect(),
    }
}

fn entry_view(e: &CensusEntry) -> CensusEntryView {
    CensusEntryView {
        genus: e.genus,
        order: e.order,
        count: e.count,
        groups: e.groups.iter().map(group_view).collect(),
        duplicates: e
            .duplicates
            .iter()
            .map(|d| DuplicateView { name: d.name.clone(), source: d.source, isomorphic_to: d.isomorphic_to.clone() })
            .collect(),
        searched_groups: e.searched_groups.clone(),
    }
}

pub fn census_view(c: &Census, mode: &'static str) -> CensusView {
    CensusView {
        ty: c.ty.to_string(),
        mode,
        max_genus: c.max_genus,
        catalog_conditional: true,
        entries: c.entries.iter().map(entry_view).collect(),
        unchecked_orders: c.unchecked_orders.clone(),
        notes: c.notes.clone(),
    }
}

#[derive(Serialize)]
pub struct DessinsView {
    pub group: String,
    pub order: usize,
    #[serde(rename = "type")]
    pub ty: String,
    pub mode: &'static str,
    pub count: usize,
    pub classes: Vec<DessinView>,
}

#[derive(Serialize)]
pub struct PairView {
    pub a: String,
    pub b: String,
    pub commutator: String,
}

pub fn pair_view(g: &FinGroup, p: &OrigamiPair) -> PairView {
    PairView { a: perm(g, p.a), b: perm(g, p.b), commutator: perm(g, p.commutator) }
}

#[derive(Serialize)]
pub struct WitnessView {
    pub group: String,
    #[serde(flatten)]
    pub pair: PairView,
}

#[derive(Serialize)]
pub struct OrigamiExistenceView {
    pub genus: u64,
    pub order: u64,
    pub verdict: Verdict,
    pub catalog_conditional: bool,
    pub witness: Option<WitnessView>,
    pub searched_groups: Vec<String>,
}

pub fn origami_existence_view(e: &OrigamiExistence) -> OrigamiExistenceView {
    OrigamiExistenceView {
        genus: e.genus,
        order: e.order,
        verdict: e.verdict,
        catalog_conditional: e.verdict == Verdict::UnknownNoWitness,
        witness: e.witness.as_ref().map(|(g, p)| WitnessView { group: g.name().to_string(), pair: pair_view(g, p) }),
        searched_groups: e.searched_groups.clone(),
    }
}

#[derive(Serialize)]
pub struct OrigamiClassView {
    pub genus: u64,
    pub class_size: u64,
    pub representative: PairView,
}

#[derive(Serialize)]
pub struct OrigamiPairsView {
    pub group: String,
    pub order: usize,
    pub count: usize,
    pub classes: Vec<OrigamiClassView>,
}

pub fn origami_class_view(g: &FinGroup, c: &OrigamiClass) -> OrigamiClassView {
    OrigamiClassView { genus: c.genus, class_size: c.class_size, representative: pair_view(g, &c.representative) }
}

#[derive(Serialize)]
pub struct SplittingView {
    #[serde(flatten)]
    pub split: PrimeSplit,
    pub macbeath: HurwitzStatus,
}

#[derive(Serialize)]
pub struct CongruenceView {
    pub ell: u64,
    pub f: u32,
    pub residue_q: u64,
    pub macbeath: HurwitzStatus,
    pub curves: Vec<CongruenceCurve>,
}

#[derive(Serialize)]
pub struct CongruenceMatchView {
    pub group: String,
    pub order: usize,
    #[serde(rename = "match")]
    pub level: Option<CongruenceLevel>,
}

#[derive(Serialize)]
pub struct SubmoduleCount {
    pub dim: usize,
    pub count: usize,
}

#[derive(Serialize)]
pub struct ExtensionView {
    pub index: usize,
    pub order: usize,
    pub kernel_dim: usize,
    pub split: Option<bool>,
    pub hurwitz_classes: usize,
    pub genus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
}

#[derive(Serialize)]
pub struct HomologyView {
    pub group: String,
    pub order: usize,
    #[serde(rename = "type")]
    pub ty: String,
    pub triple: usize,
    pub triple_genus: u64,
    pub ell: u32,
    pub schreier_generators: usize,
    pub dim: usize,
    pub fixed_dim: usize,
    /// `None` when the lattice is too large to enumerate.
    pub submodules: Option<Vec<SubmoduleCount>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extensions: Option<Vec<ExtensionView>>,
}

#[derive(Serialize)]
pub struct CharacterView {
    pub group: String,
    pub order: usize,
    pub triple: usize,
    #[serde(flatten)]
    pub character: H1Character,
}
