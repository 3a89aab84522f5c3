//! The `mcluster` command line.
//!
//! Exit status is 0 on success, 1 when a checked property fails and 2 for
//! usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;

use crate::derived::{build_psi, build_quotient};
use crate::dissection::{facets, fuss_catalan, is_face, rotation_orbits};
use crate::error::Error;
use crate::gamma::build_gamma;
use crate::io::{
    facets_to_csv, orbits_to_csv, to_dot, FacetsDocument, Metadata, OrbitEntry, QuiverDocument,
};
use crate::mesh::{default_truncation, hom_dim, mesh_presentation, HomSpaces};
use crate::polygon::{all_m_diagonals, rotate_step, PolygonConfig};
use crate::power::{embed_check, power};
use crate::quiver::{
    check_translation_quiver, is_stable, stable_components, tq_isomorphism, TranslationQuiver,
};
use crate::roots::{all_colored_roots, r_map, RootDiagonalMap};

/// Facet enumeration in `verify` is skipped above this many facets.
const VERIFY_FACET_LIMIT: u128 = 100_000;

#[derive(Debug, Parser)]
#[command(
    name = "mcluster",
    version,
    about = "Diagonal quivers and m-cluster categories of type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Args)]
struct Params {
    /// Rank plus one: the polygon has n*m+2 vertices
    #[arg(short = 'n')]
    n: u32,
    #[arg(short = 'm')]
    m: u32,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Quiver of m-diagonals with rotation as translation
    Gamma {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Maximal faces of the m-divisible dissection complex
    Facets {
        #[command(flatten)]
        params: Params,
        /// Group facets into rotation orbits
        #[arg(long)]
        orbits: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// m-th power of a translation quiver read from a JSON document
    Power {
        #[arg(long)]
        input: PathBuf,
        #[arg(short = 'm')]
        m: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Connected components of a stable translation quiver
    Components {
        #[arg(long)]
        input: PathBuf,
    },
    /// Search for a translation-quiver isomorphism
    Iso {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// ZA_{n-1} modulo tau^{-1} S^m
    ArQuiver {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run every invariant check for one (n, m)
    Verify {
        #[command(flatten)]
        params: Params,
    },
    /// Mesh presentation of a translation quiver
    Mesh {
        #[arg(long)]
        input: PathBuf,
    },
    /// Dimension of a morphism space in the mesh category
    Hom {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Longest path length considered [default: twice the vertex count]
        #[arg(long)]
        max_len: Option<usize>,
    },
}

enum Failure {
    Property(String),
    Input(String),
    /// The reader went away; nothing left to report.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Input(format!("write failed: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parse `args` (including the program name) and execute, returning the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) | Err(Failure::Closed) => 0,
        Err(Failure::Property(msg)) => {
            let _ = writeln!(out, "{msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read_document(path: &Path) -> std::result::Result<(QuiverDocument, TranslationQuiver), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let doc = QuiverDocument::from_json(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let tq = doc
        .to_translation_quiver()
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok((doc, tq))
}

fn unsupported(format: Format, command: &str) -> Failure {
    let name = format
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    Failure::Input(format!("format {name} is not supported by {command}"))
}

fn emit_quiver(
    out: &mut dyn Write,
    tq: &TranslationQuiver,
    meta: Metadata,
    format: Format,
) -> Outcome {
    match format {
        Format::Json => write!(
            out,
            "{}",
            QuiverDocument::from_translation_quiver(tq, meta).to_json()
        )?,
        Format::Dot => write!(out, "{}", to_dot(tq, &meta.construction))?,
        Format::Csv => return Err(unsupported(format, "quiver output")),
    }
    Ok(())
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Outcome {
    let text = serde_json::to_string_pretty(value).expect("serializable output");
    writeln!(out, "{text}")?;
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Gamma { params, format } => {
            let g = build_gamma(params.n, params.m)?;
            let meta = Metadata::new("gamma", Some(params.n), Some(params.m));
            emit_quiver(out, g.translation_quiver(), meta, format)
        }
        Command::ArQuiver { params, format } => {
            let q = build_quotient(params.n, params.m)?;
            let meta = Metadata::new("ar-quiver", Some(params.n), Some(params.m));
            emit_quiver(out, q.translation_quiver(), meta, format)
        }
        Command::Facets {
            params,
            orbits,
            format,
        } => {
            let cfg = PolygonConfig::new(params.n, params.m)?;
            let fs = facets(&cfg);
            match (format, orbits) {
                (Format::Csv, false) => write!(out, "{}", facets_to_csv(&fs)?)?,
                (Format::Csv, true) => {
                    write!(out, "{}", orbits_to_csv(&rotation_orbits(&cfg, &fs))?)?
                }
                (Format::Json, _) => {
                    let mut doc = FacetsDocument {
                        n: params.n,
                        m: params.m,
                        count: fs.len(),
                        facets: None,
                        orbits: None,
                    };
                    if orbits {
                        doc.orbits = Some(
                            rotation_orbits(&cfg, &fs)
                                .into_iter()
                                .map(|o| OrbitEntry {
                                    size: o.size,
                                    representative: o.representative.tokens(),
                                })
                                .collect(),
                        );
                    } else {
                        doc.facets = Some(fs.iter().map(|f| f.tokens()).collect());
                    }
                    emit_json(out, &doc)?;
                }
                (Format::Dot, _) => return Err(unsupported(format, "facets")),
            }
            Ok(())
        }
        Command::Power { input, m, format } => {
            if m == 0 {
                return Err(Failure::Input("power exponent must be at least 1".into()));
            }
            let (doc, tq) = read_document(&input)?;
            let meta = Metadata {
                construction: format!("{}^{m}", doc.metadata.construction),
                ..Metadata::new("", doc.metadata.n, doc.metadata.m)
            };
            emit_quiver(out, &power(&tq, m), meta, format)
        }
        Command::Components { input } => {
            let (_, tq) = read_document(&input)?;
            let comps = stable_components(&tq).map_err(|e| Failure::Property(e.to_string()))?;
            #[derive(Serialize)]
            struct Component {
                size: usize,
                vertices: Vec<String>,
            }
            let listing: Vec<Component> = comps
                .iter()
                .map(|c| Component {
                    size: c.len(),
                    vertices: c.iter().map(|&v| tq.label(v).to_string()).collect(),
                })
                .collect();
            emit_json(out, &listing)
        }
        Command::Iso { left, right } => {
            let (_, a) = read_document(&left)?;
            let (_, b) = read_document(&right)?;
            match tq_isomorphism(&a, &b) {
                Some(phi) => {
                    for (v, w) in phi.into_iter().enumerate() {
                        writeln!(out, "{} -> {}", a.label(v), b.label(w))?;
                    }
                    Ok(())
                }
                None => Err(Failure::Property(non_iso_reason(&a, &b))),
            }
        }
        Command::Verify { params } => verify(params.n, params.m, out),
        Command::Mesh { input } => {
            let (_, tq) = read_document(&input)?;
            let pres = mesh_presentation(&tq)?;
            emit_json(out, &pres.to_document(&tq))
        }
        Command::Hom {
            input,
            from,
            to,
            max_len,
        } => {
            let (_, tq) = read_document(&input)?;
            let find = |label: &str| {
                tq.find(label)
                    .ok_or_else(|| Error::UnknownVertex(label.to_string()))
            };
            let (x, y) = (find(&from)?, find(&to)?);
            let len = max_len.unwrap_or_else(|| default_truncation(&tq));
            let h = hom_dim(&tq, x, y, len)?;
            if !h.stabilized {
                writeln!(
                    err,
                    "warning: dimension did not stabilize at truncation length {len}"
                )?;
            }
            emit_json(out, &h)
        }
    }
}

fn non_iso_reason(a: &TranslationQuiver, b: &TranslationQuiver) -> String {
    if a.len() != b.len() {
        return format!("not isomorphic: {} vs {} vertices", a.len(), b.len());
    }
    let (ka, kb) = (a.quiver().arrow_count(), b.quiver().arrow_count());
    if ka != kb {
        return format!("not isomorphic: {ka} vs {kb} arrows");
    }
    "not isomorphic: no tau-equivariant bijection preserves the arrows".to_string()
}

type Check = std::result::Result<(), String>;

fn verify(n: u32, m: u32, out: &mut dyn Write) -> Outcome {
    let cfg = PolygonConfig::new(n, m)?;
    let g = build_gamma(n, m)?;
    let tq = g.translation_quiver();
    let mut checks: Vec<(&str, Option<Check>)> = Vec::new();

    let expected = (n as usize - 1) * (n * m + 2) as usize / 2;
    checks.push((
        "m-diagonal count",
        Some(expect_eq(all_m_diagonals(&cfg).len(), expected)),
    ));
    let report = check_translation_quiver(tq);
    checks.push((
        "translation quiver axiom",
        Some(match report.describe(tq).into_iter().next() {
            Some(first) => Err(first),
            None => Ok(()),
        }),
    ));
    checks.push((
        "stable",
        Some(match tq.projectives().first() {
            Some(&v) => Err(format!("{} has no translate", tq.label(v))),
            None => Ok(()),
        }),
    ));
    checks.push((
        "single stable component",
        Some(match stable_components(tq) {
            Ok(c) => expect_eq(c.len(), 1),
            Err(e) => Err(e.to_string()),
        }),
    ));
    checks.push((
        "facets",
        (fuss_catalan(n, m) <= VERIFY_FACET_LIMIT).then(|| check_facets(&cfg)),
    ));
    checks.push(("rotation matches root map", Some(check_rotation(&cfg))));
    checks.push((
        "psi isomorphism onto ZA/phi",
        Some(build_psi(n, m).map(|_| ()).map_err(|e| e.to_string())),
    ));
    checks.push((
        "powers are stable translation quivers",
        Some(check_powers(tq)),
    ));
    checks.push((
        "component of the power of the 1-diagonal quiver",
        Some(match embed_check(n, m) {
            Ok(r) if r.holds() => Ok(()),
            Ok(r) => Err(format!(
                "no matching component among sizes {:?}",
                r.component_sizes()
            )),
            Err(e) => Err(e.to_string()),
        }),
    ));
    checks.push(("mesh relations vanish", Some(check_mesh(tq))));

    let mut first_failure = None;
    for (name, result) in checks {
        match result {
            None => writeln!(out, "skip {name}")?,
            Some(Ok(())) => writeln!(out, "ok   {name}")?,
            Some(Err(e)) => {
                writeln!(out, "FAIL {name}: {e}")?;
                first_failure.get_or_insert(format!("{name}: {e}"));
            }
        }
    }
    match first_failure {
        Some(f) => Err(Failure::Property(format!(
            "verification failed for n={n}, m={m}: {f}"
        ))),
        None => Ok(()),
    }
}

fn expect_eq(got: usize, want: usize) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got}, expected {want}"))
    }
}

fn check_facets(cfg: &PolygonConfig) -> Check {
    let fs = facets(cfg);
    expect_eq(fs.len(), fuss_catalan(cfg.n(), cfg.m()) as usize)?;
    for f in &fs {
        if f.len() != cfg.n() as usize - 1 || !is_face(cfg, f.diagonals()) {
            return Err(format!("facet {} is not a pure face", f.tokens().join(" ")));
        }
    }
    Ok(())
}

fn check_rotation(cfg: &PolygonConfig) -> Check {
    let map = RootDiagonalMap::new(cfg).map_err(|e| e.to_string())?;
    for r in all_colored_roots(cfg) {
        let rotated = r_map(cfg, r).map_err(|e| e.to_string())?;
        let lhs = map.diagonal(&rotated).map_err(|e| e.to_string())?;
        let rhs = rotate_step(cfg, &map.diagonal(&r).map_err(|e| e.to_string())?, 1);
        if lhs != rhs {
            return Err(format!("{r}: {} vs {}", lhs.label(), rhs.label()));
        }
    }
    Ok(())
}

fn check_powers(tq: &TranslationQuiver) -> Check {
    for k in 1..=4 {
        let p = power(tq, k);
        if let Some(v) = check_translation_quiver(&p).describe(&p).into_iter().next() {
            return Err(format!("power {k}: {v}"));
        }
        if !is_stable(&p) {
            return Err(format!("power {k} is not stable"));
        }
    }
    Ok(())
}

fn check_mesh(tq: &TranslationQuiver) -> Check {
    let pres = mesh_presentation(tq).map_err(|e| e.to_string())?;
    expect_eq(pres.relations.len(), tq.len())?;
    for rel in &pres.relations {
        let spaces = HomSpaces::new(tq, rel.source, 2).map_err(|e| e.to_string())?;
        let paths: Vec<(i64, Vec<usize>)> = rel
            .paths()
            .map(|(c, p)| (i64::from(c), p.to_vec()))
            .collect();
        let terms: Vec<(i64, &[usize])> = paths.iter().map(|(c, p)| (*c, p.as_slice())).collect();
        let value = spaces.combination(&terms).map_err(|e| e.to_string())?;
        if !value.iter().all(Zero::is_zero) {
            return Err(format!("relation at {} is non-zero", tq.label(rel.target)));
        }
    }
    Ok(())
}
