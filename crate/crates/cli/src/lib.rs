//! The `hurwitz` command line.
//!
//! Exit codes: 0 on success, 1 on usage errors (bad flags, bad values), 2
//! when a cap or feasibility bound stops the computation.

pub mod report;

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hurwitz::arith::{congruence_curves, congruence_match, macbeath_class, splitting_in_k};
use hurwitz::catalog::{self, GroupSpec};
use hurwitz::census::{hurwitz_census, CensusConfig};
use hurwitz::charfix::h1_character;
use hurwitz::dessin::{enumerate_triples, genus_of, DessinClass, OrderMode, TriangleType};
use hurwitz::group::{FinGroup, DEFAULT_CAP};
use hurwitz::homol::{
    extension_quotient, find_complement, kernel_mod_ell_homology, schreier_data, submodule_lattice, FpGroup,
};
use hurwitz::origami::{enumerate_origami_pairs, origami_existence};
use hurwitz::Error;

use report::*;

pub const DATA_DIR_ENV: &str = "HURWITZ_DATA_DIR";

#[derive(Parser, Debug)]
#[command(name = "hurwitz", version, about = "Hurwitz groups, regular dessins and Hurwitz origamis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads (default: all cores)
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
    /// Largest group order to enumerate
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Dividing,
}

impl Mode {
    fn order_mode(self) -> OrderMode {
        match self {
            Mode::Exact => OrderMode::Exact,
            Mode::Dividing => OrderMode::Dividing,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Dividing => "dividing",
        }
    }
}

fn parse_type(s: &str) -> Result<TriangleType, String> {
    TriangleType::from_str(s).map_err(|e| e.to_string())
}

fn parse_spec(s: &str) -> Result<GroupSpec, String> {
    GroupSpec::from_str(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Regular dessins of a type by genus
    Census {
        #[arg(long = "type", value_parser = parse_type, default_value = "2,3,7")]
        ty: TriangleType,
        #[arg(long, default_value_t = 17)]
        max_genus: u64,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Directory of *.gens groups added to the candidates
        #[arg(long, env = DATA_DIR_ENV)]
        data_dir: Option<PathBuf>,
        /// Skip extensions built from kernels of smaller groups
        #[arg(long)]
        no_homol: bool,
    },
    /// Regular dessins with one group
    Dessins {
        #[arg(long, value_parser = parse_spec)]
        group: GroupSpec,
        #[arg(long = "type", value_parser = parse_type, default_value = "2,3,7")]
        ty: TriangleType,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Hurwitz origamis: existence in a genus, or all pairs of one group
    Origami {
        #[arg(long, required_unless_present = "group", conflicts_with = "group")]
        genus: Option<u64>,
        #[arg(long, value_parser = parse_spec)]
        group: Option<GroupSpec>,
    },
    /// Decomposition of a rational prime in Q(cos 2pi/7)
    Splitting {
        #[arg(long)]
        prime: u64,
    },
    /// Congruence Hurwitz curves above a prime, or a congruence match for a group
    Congruence {
        #[arg(long, required_unless_present = "group", conflicts_with = "group")]
        prime: Option<u64>,
        #[arg(long, value_parser = parse_spec)]
        group: Option<GroupSpec>,
    },
    /// Mod-l homology of a triple's kernel and its extension quotients
    Homology {
        #[arg(long, value_parser = parse_spec)]
        group: GroupSpec,
        #[arg(long = "type", value_parser = parse_type, default_value = "2,3,7")]
        ty: TriangleType,
        #[arg(long)]
        ell: u32,
        /// Which dessin class of the group (1-based)
        #[arg(long, default_value_t = 1)]
        triple: usize,
        /// Build the extensions for all invariant subspaces of this dimension
        #[arg(long)]
        dim: Option<usize>,
        /// Write the extensions as generator files into this directory
        #[arg(long, requires = "dim")]
        export: Option<PathBuf>,
    },
    /// Character of the automorphism group on H^1
    Character {
        #[arg(long, value_parser = parse_spec)]
        group: GroupSpec,
        #[arg(long = "type", value_parser = parse_type, default_value = "2,3,7")]
        ty: TriangleType,
        /// Which dessin class of the group (1-based); all if omitted
        #[arg(long)]
        triple: Option<usize>,
    },
}

/// Runs the command line, writing the report to `out` and errors to
/// standard error. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    // Reports are buffered so a failing command prints nothing to `out`.
    let mut buf = Vec::new();
    let result = match cli.common.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(|| execute(&cli, &mut buf)),
            Err(e) => Err(Error::Internal(e.to_string())),
        },
        None => execute(&cli, &mut buf),
    };
    let result = result.and_then(|()| out.write_all(&buf).map_err(io_err));
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_feasibility() {
                2
            } else {
                1
            }
        }
    }
}

fn emit<T: Serialize>(out: &mut Vec<u8>, command: &'static str, body: T) -> hurwitz::Result<()> {
    let r = Report { header: Header::new(command), body };
    let text = serde_json::to_string_pretty(&r).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{text}").map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io { path: PathBuf::from("<stdout>"), source: e }
}

fn tsv(out: &mut Vec<u8>, rows: &[Vec<String>]) -> hurwitz::Result<()> {
    for r in rows {
        writeln!(out, "{}", r.join("\t")).map_err(io_err)?;
    }
    Ok(())
}

fn build(spec: &GroupSpec, cap: usize) -> hurwitz::Result<FinGroup> {
    Ok(spec.build(cap)?.with_name(spec.to_string()))
}

fn pick<'a>(classes: &'a [DessinClass], index: usize, g: &FinGroup) -> hurwitz::Result<&'a DessinClass> {
    index.checked_sub(1).and_then(|i| classes.get(i)).ok_or_else(|| {
        Error::InvalidParameters(format!("--triple {index}: {} has {} dessin classes", g.name(), classes.len()))
    })
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> hurwitz::Result<()> {
    let fmt = cli.common.format;
    let cap = cli.common.cap;
    match &cli.command {
        Command::Census { ty, max_genus, mode, data_dir, no_homol } => {
            let data_pack = match data_dir {
                Some(d) => catalog::load_data_pack(d, cap)?,
                None => Vec::new(),
            };
            let cfg = CensusConfig {
                ty: *ty,
                max_genus: *max_genus,
                mode: mode.order_mode(),
                cap,
                data_pack,
                homol_sweep: !no_homol,
            };
            let c = hurwitz_census(&cfg)?;
            match fmt {
                Format::Json => emit(out, "census", census_view(&c, mode.name())),
                Format::Tsv => {
                    let mut rows = vec![vec!["genus".into(), "order".into(), "count".into(), "groups".into()]];
                    for e in &c.entries {
                        let groups: Vec<String> =
                            e.groups.iter().map(|g| format!("{}:{}", g.name, g.classes.len())).collect();
                        rows.push(vec![
                            e.genus.to_string(),
                            e.order.to_string(),
                            e.count.to_string(),
                            groups.join(","),
                        ]);
                    }
                    tsv(out, &rows)
                }
            }
        }
        Command::Dessins { group, ty, mode } => {
            let g = build(group, cap)?;
            let classes = enumerate_triples(&g, *ty, mode.order_mode())?;
            match fmt {
                Format::Json => emit(
                    out,
                    "dessins",
                    DessinsView {
                        group: g.name().to_string(),
                        order: g.order(),
                        ty: ty.to_string(),
                        mode: mode.name(),
                        count: classes.len(),
                        classes: classes.iter().map(|c| dessin_view(&g, c, None)).collect(),
                    },
                ),
                Format::Tsv => {
                    let mut rows = vec![["genus", "x_class", "y_class", "z_class", "class_size", "x", "y", "z"]
                        .map(String::from)
                        .to_vec()];
                    for c in &classes {
                        let t = c.representative;
                        let p = &c.passport;
                        rows.push(vec![
                            c.genus.to_string(),
                            p.x.label.clone(),
                            p.y.label.clone(),
                            p.z.label.clone(),
                            c.class_size.to_string(),
                            g.element(t.x).to_string(),
                            g.element(t.y).to_string(),
                            g.element(t.z).to_string(),
                        ]);
                    }
                    tsv(out, &rows)
                }
            }
        }
        Command::Origami { genus, group } => {
            if let Some(spec) = group {
                let g = build(spec, cap)?;
                let classes = enumerate_origami_pairs(&g)?;
                return match fmt {
                    Format::Json => emit(
                        out,
                        "origami",
                        OrigamiPairsView {
                            group: g.name().to_string(),
                            order: g.order(),
                            count: classes.len(),
                            classes: classes.iter().map(|c| origami_class_view(&g, c)).collect(),
                        },
                    ),
                    Format::Tsv => {
                        let mut rows = vec![["genus", "class_size", "a", "b", "commutator"].map(String::from).to_vec()];
                        for c in &classes {
                            let v = origami_class_view(&g, c);
                            rows.push(vec![
                                v.genus.to_string(),
                                v.class_size.to_string(),
                                v.representative.a,
                                v.representative.b,
                                v.representative.commutator,
                            ]);
                        }
                        tsv(out, &rows)
                    }
                };
            }
            let genus = genus.expect("clap requires --genus or --group");
            let e = origami_existence(genus, &[], cap)?;
            let v = origami_existence_view(&e);
            match fmt {
                Format::Json => emit(out, "origami", v),
                Format::Tsv => {
                    let verdict = serde_json::to_value(v.verdict).map_err(|e| Error::Internal(e.to_string()))?;
                    let witness = v.witness.map_or(String::new(), |w| w.group);
                    tsv(
                        out,
                        &[
                            ["genus", "order", "verdict", "witness_group", "searched"].map(String::from).to_vec(),
                            vec![
                                v.genus.to_string(),
                                v.order.to_string(),
                                verdict.as_str().unwrap_or_default().to_string(),
                                witness,
                                v.searched_groups.len().to_string(),
                            ],
                        ],
                    )
                }
            }
        }
        Command::Splitting { prime } => {
            let s = splitting_in_k(*prime)?;
            let macbeath = macbeath_class(s.residue_q[0])?;
            match fmt {
                Format::Json => emit(out, "splitting", SplittingView { split: s, macbeath }),
                Format::Tsv => tsv(
                    out,
                    &[
                        ["ell", "e", "f", "g", "residue_q"].map(String::from).to_vec(),
                        vec![
                            s.ell.to_string(),
                            s.e.to_string(),
                            s.f.to_string(),
                            s.g.to_string(),
                            s.residue_q[0].to_string(),
                        ],
                    ],
                ),
            }
        }
        Command::Congruence { prime, group } => {
            if let Some(spec) = group {
                let g = build(spec, cap)?;
                let level = congruence_match(&g);
                return match fmt {
                    Format::Json => emit(
                        out,
                        "congruence",
                        CongruenceMatchView { group: g.name().to_string(), order: g.order(), level },
                    ),
                    Format::Tsv => tsv(
                        out,
                        &[
                            ["group", "order", "residue_q"].map(String::from).to_vec(),
                            vec![
                                g.name().to_string(),
                                g.order().to_string(),
                                level.map_or("-".into(), |l| l.residue_q.to_string()),
                            ],
                        ],
                    ),
                };
            }
            let ell = prime.expect("clap requires --prime or --group");
            let s = splitting_in_k(ell)?;
            let q = ell.pow(s.f);
            let curves = congruence_curves(ell)?;
            match fmt {
                Format::Json => emit(
                    out,
                    "congruence",
                    CongruenceView { ell, f: s.f, residue_q: q, macbeath: macbeath_class(q)?, curves },
                ),
                Format::Tsv => {
                    let mut rows = vec![["prime_index", "residue_q", "genus", "group", "moduli_field", "orbit_size"]
                        .map(String::from)
                        .to_vec()];
                    for c in &curves {
                        rows.push(vec![
                            c.prime_index.to_string(),
                            c.residue_q.to_string(),
                            c.genus.to_string(),
                            c.group.clone(),
                            c.moduli_field.clone(),
                            c.orbit_size.to_string(),
                        ]);
                    }
                    tsv(out, &rows)
                }
            }
        }
        Command::Homology { group, ty, ell, triple, dim, export } => {
            let g = build(group, cap)?;
            let classes = enumerate_triples(&g, *ty, OrderMode::Exact)?;
            let class = pick(&classes, *triple, &g)?;
            let t = class.representative;
            let sd = schreier_data(&FpGroup::triangle(*ty), &g, &[t.x, t.y])?;
            let h = kernel_mod_ell_homology(&sd, *ell)?;
            let lattice = match submodule_lattice(&h.module) {
                Ok(l) => Some(l),
                Err(e) if e.is_feasibility() && dim.is_none() => None,
                Err(e) => return Err(e),
            };
            let submodules = lattice.as_ref().map(|l| {
                (0..=h.dim())
                    .map(|d| SubmoduleCount { dim: d, count: l.iter().filter(|b| b.len() == d).count() })
                    .collect::<Vec<_>>()
            });
            let extensions = match dim {
                None => None,
                Some(d) => {
                    let lattice = lattice.as_ref().expect("lattice required for --dim");
                    let mut views = Vec::new();
                    for (i, u) in lattice.iter().filter(|b| b.len() == *d).enumerate() {
                        let ext = extension_quotient(&h, u, cap)?;
                        let split = match find_complement(&ext) {
                            Ok(c) => Some(c.is_some()),
                            Err(e) if e.is_feasibility() => None,
                            Err(e) => return Err(e),
                        };
                        let name = format!("{}^{}.{}#{}", ell, ext.kernel_dim, g.name(), i + 1);
                        let eg = ext.group.with_name(name.clone());
                        let hc = enumerate_triples(&eg, *ty, OrderMode::Exact)?;
                        let file = match export {
                            Some(dir) => {
                                std::fs::create_dir_all(dir).map_err(|e| Error::Io { path: dir.clone(), source: e })?;
                                let path = dir.join(format!("ext_{}_{}.gens", ell, i + 1));
                                catalog::save_group(&eg, &path)?;
                                Some(path.display().to_string())
                            }
                            None => None,
                        };
                        views.push(ExtensionView {
                            index: i + 1,
                            order: eg.order(),
                            kernel_dim: ext.kernel_dim,
                            split,
                            hurwitz_classes: hc.len(),
                            genus: hc.first().map(|c| c.genus),
                            file,
                        });
                    }
                    Some(views)
                }
            };
            let v = HomologyView {
                group: g.name().to_string(),
                order: g.order(),
                ty: ty.to_string(),
                triple: *triple,
                triple_genus: genus_of(g.order() as u64, *ty)?,
                ell: *ell,
                schreier_generators: sd.num_schreier_generators(),
                dim: h.dim(),
                fixed_dim: h.module.fixed_dim(),
                submodules,
                extensions,
            };
            match fmt {
                Format::Json => emit(out, "homology", v),
                Format::Tsv => {
                    let mut rows = vec![["dim", "invariant_subspaces"].map(String::from).to_vec()];
                    for s in v.submodules.iter().flatten() {
                        rows.push(vec![s.dim.to_string(), s.count.to_string()]);
                    }
                    for e in v.extensions.iter().flatten() {
                        rows.push(vec![
                            format!("extension {}", e.index),
                            format!("order {} classes {}", e.order, e.hurwitz_classes),
                        ]);
                    }
                    tsv(out, &rows)
                }
            }
        }
        Command::Character { group, ty, triple } => {
            let g = build(group, cap)?;
            let classes = enumerate_triples(&g, *ty, OrderMode::Exact)?;
            let chosen: Vec<(usize, &DessinClass)> = match triple {
                Some(i) => vec![(*i, pick(&classes, *i, &g)?)],
                None => classes.iter().enumerate().map(|(i, c)| (i + 1, c)).collect(),
            };
            let mut views = Vec::new();
            for (i, c) in chosen {
                views.push(CharacterView {
                    group: g.name().to_string(),
                    order: g.order(),
                    triple: i,
                    character: h1_character(&g, &c.representative)?,
                });
            }
            match fmt {
                Format::Json => emit(out, "character", CharactersView { characters: views }),
                Format::Tsv => {
                    let mut rows =
                        vec![["triple", "class", "class_order", "class_size", "chi_value"].map(String::from).to_vec()];
                    for v in &views {
                        for c in &v.character.values {
                            rows.push(vec![
                                v.triple.to_string(),
                                c.class.clone(),
                                c.class_order.to_string(),
                                c.class_size.to_string(),
                                c.chi_value.to_string(),
                            ]);
                        }
                    }
                    tsv(out, &rows)
                }
            }
        }
    }
}

#[derive(Serialize)]
struct CharactersView {
    characters: Vec<CharacterView>,
}
