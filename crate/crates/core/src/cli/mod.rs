//! The `mcmtop` command line. [`run_with`] is the whole program; the binary
//! only forwards `argv` and the standard streams.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

pub use report::{
    ClassReport, ClnPointReport, ClnReport, CompactReport, KnorrerReport, LatticeReport, ModuleReport, Report,
    SpaceReport,
};

use crate::catalog::{annihilate_all, CatalogSpec, Document, DocumentError};
use crate::ideals::{Ideal, QuotientContext};
use crate::matfac::{MatrixFactorization, ModulePoint};
use crate::spaces::{ClosedSetLattice, FiniteAlexandrovSpace, PointSet, SpaceError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "mcmtop", version, about = "Stable annihilators of matrix factorizations and the finite topologies they define")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Built-in catalog: A0:n, A1:n, D:n (or Dn), E6, E7, E8
    #[arg(long, value_parser = parse_catalog)]
    catalog: Option<CatalogSpec>,
    /// JSON document with ring, potential and modules
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Common {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write a DOT diagram to this path
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check φψ = ψφ = f·I for every module
    Verify(Common),
    /// Stable annihilator of every module, or of one
    Annihilate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        module: Option<String>,
    },
    /// Annihilator classes, their order, and the closed-set count
    Space {
        #[command(flatten)]
        common: Common,
        /// List every closed set and the covering relations
        #[arg(long)]
        closed_sets: bool,
    },
    /// Hasse diagram of the closed-set lattice
    Hasse {
        #[command(flatten)]
        common: Common,
        /// Use the Kolmogorov quotient poset instead of the lattice
        #[arg(long)]
        poset: bool,
    },
    /// Intersection of all annihilators and the points realizing it
    Compact(Common),
    /// The cl_n operator {L : (ann L)^n ⊆ ann M} and its generated family
    Cln {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// List all triples witnessing non-transitivity
        #[arg(long)]
        check_transitivity: bool,
    },
    /// Covers (φ, ψ) ↦ [[zI, φ], [ψ, -zI]] over f + z², compared poset-wise
    ///
    /// Computations run over the polynomial ring, so they describe the
    /// complete local ring only for quasi-homogeneous potentials such as
    /// the built-in catalogs.
    Knorrer {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "z")]
        var: String,
    },
}

fn parse_catalog(s: &str) -> Result<CatalogSpec, String> {
    s.parse().map_err(|e: crate::catalog::CatalogError| e.to_string())
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn validation(message: impl ToString) -> Self {
        Failure { code: EXIT_VALIDATION, message: message.to_string() }
    }

    fn usage(message: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }
}

impl From<SpaceError> for Failure {
    fn from(e: SpaceError) -> Self {
        Failure::validation(e)
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::NoModules | DocumentError::Io { .. } => Failure::usage(e),
            e => Failure::validation(e),
        }
    }
}

struct Input {
    ctx: QuotientContext,
    mfs: Vec<MatrixFactorization>,
    digest: String,
}

fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

fn load(source: &Source) -> Result<Input, Failure> {
    if let Some(spec) = source.catalog {
        let mfs = spec.factorizations().map_err(Failure::validation)?;
        let ctx = mfs[0].ctx().clone();
        let refs: Vec<&MatrixFactorization> = mfs.iter().collect();
        let canonical = Document::from_factorizations(&ctx, &refs, None).to_json();
        return Ok(Input { ctx, mfs, digest: digest(canonical.as_bytes()) });
    }
    let path = source.file.as_ref().expect("clap enforces one source");
    let bytes = std::fs::read(path)
        .map_err(|e| Failure::from(DocumentError::Io { path: path.display().to_string(), message: e.to_string() }))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Failure::validation(format!("{} is not UTF-8", path.display())))?;
    let (ctx, mfs) = Document::from_json(&text)?.factorizations()?;
    Ok(Input { ctx, mfs, digest: digest(&bytes) })
}

fn module_report(m: &MatrixFactorization, ann: Option<&Ideal>) -> ModuleReport {
    ModuleReport { name: m.label().to_string(), size: m.size(), annihilator: ann.map(Ideal::canonical_strings) }
}

fn point_reports(points: &[ModulePoint]) -> Vec<ModuleReport> {
    points.iter().map(|p| module_report(p.mf(), Some(p.annihilator()))).collect()
}

fn names(space: &FiniteAlexandrovSpace, s: PointSet) -> Vec<String> {
    space.labels_of(s).into_iter().map(String::from).collect()
}

fn lattice_report(space: &FiniteAlexandrovSpace, l: &ClosedSetLattice) -> LatticeReport {
    LatticeReport {
        sets: l.sets().iter().map(|&s| names(space, s)).collect(),
        edges: l.hasse_edges().into_iter().map(|(a, b)| (a + 1, b + 1)).collect(),
    }
}

fn space_report(space: &FiniteAlexandrovSpace) -> Result<SpaceReport, Failure> {
    let k = space.kolmogorov_poset();
    let closed_set_count = match space.enumerate_closed_sets() {
        Ok(l) => Some(l.len()),
        Err(SpaceError::SizeBoundExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(SpaceReport {
        points: space.len(),
        classes: k
            .classes()
            .iter()
            .enumerate()
            .map(|(c, members)| ClassReport {
                ideal: k.ideal(c).canonical_strings(),
                members: members.iter().map(|&i| space.label(i).to_string()).collect(),
            })
            .collect(),
        class_covers: k.hasse_edges().into_iter().map(|(a, b)| (a + 1, b + 1)).collect(),
        closed_set_count,
    })
}

fn compact_report(space: &FiniteAlexandrovSpace) -> Result<CompactReport, Failure> {
    let c = space.is_compact()?;
    let label = |i: &usize| space.label(*i).to_string();
    Ok(CompactReport {
        compact: c.compact,
        witnesses: c.witnesses.iter().map(label).collect(),
        minimum_ideal: c.minimum_ideal.canonical_strings(),
        direct_sum: c.direct_sum.as_ref().map(|d| d.iter().map(label).collect()),
    })
}

fn write_dot(path: &Option<PathBuf>, dot: impl FnOnce() -> String) -> Result<(), Failure> {
    if let Some(p) = path {
        std::fs::write(p, dot()).map_err(|e| Failure::validation(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn execute(cmd: &Command) -> Result<(Report, Format), Failure> {
    let (common, name) = match cmd {
        Command::Verify(c) => (c, "verify"),
        Command::Annihilate { common, .. } => (common, "annihilate"),
        Command::Space { common, .. } => (common, "space"),
        Command::Hasse { common, .. } => (common, "hasse"),
        Command::Compact(c) => (c, "compact"),
        Command::Cln { common, .. } => (common, "cln"),
        Command::Knorrer { common, .. } => (common, "knorrer"),
    };
    let input = load(&common.source)?;
    let mut report = Report {
        tool: "mcmtop".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: name.into(),
        input_digest: input.digest.clone(),
        ring: input.ctx.ring().variables().to_vec(),
        potential: input.ctx.potential().to_string(),
        modules: Vec::new(),
        space: None,
        compactness: None,
        lattice: None,
        cln: None,
        knorrer: None,
    };
    match cmd {
        Command::Verify(_) => {
            report.modules = input.mfs.iter().map(|m| module_report(m, None)).collect();
        }
        Command::Annihilate { module, .. } => {
            let selected: Vec<MatrixFactorization> = match module {
                Some(wanted) => {
                    let m = input
                        .mfs
                        .into_iter()
                        .find(|m| m.label() == wanted)
                        .ok_or_else(|| Failure::usage(format!("no module named `{wanted}`")))?;
                    vec![m]
                }
                None => input.mfs,
            };
            report.modules = point_reports(&annihilate_all(selected));
        }
        Command::Space { closed_sets, .. } => {
            let points = annihilate_all(input.mfs);
            report.modules = point_reports(&points);
            let space = FiniteAlexandrovSpace::new(points)?;
            report.space = Some(space_report(&space)?);
            report.compactness = Some(compact_report(&space)?);
            if *closed_sets {
                let l = space.enumerate_closed_sets()?;
                report.lattice = Some(lattice_report(&space, &l));
                write_dot(&common.dot, || l.to_dot("closed_sets"))?;
            } else {
                write_dot(&common.dot, || space.kolmogorov_poset().to_dot("kolmogorov"))?;
            }
        }
        Command::Hasse { poset, .. } => {
            let points = annihilate_all(input.mfs);
            report.modules = point_reports(&points);
            let space = FiniteAlexandrovSpace::new(points)?;
            if *poset {
                report.space = Some(space_report(&space)?);
                write_dot(&common.dot, || space.kolmogorov_poset().to_dot("kolmogorov"))?;
            } else {
                let l = space.enumerate_closed_sets()?;
                report.lattice = Some(lattice_report(&space, &l));
                write_dot(&common.dot, || l.to_dot("closed_sets"))?;
            }
        }
        Command::Compact(_) => {
            let points = annihilate_all(input.mfs);
            report.modules = point_reports(&points);
            let space = FiniteAlexandrovSpace::new(points)?;
            report.compactness = Some(compact_report(&space)?);
            write_dot(&common.dot, || space.kolmogorov_poset().to_dot("kolmogorov"))?;
        }
        Command::Cln { n, check_transitivity, .. } => {
            let points = annihilate_all(input.mfs);
            report.modules = point_reports(&points);
            let space = FiniteAlexandrovSpace::new(points)?;
            let cl = space.cl_n_all(*n)?;
            let family = space.cln_closed_sets(*n)?;
            let smallest = |s: PointSet| {
                family.sets().iter().filter(|c| s.is_subset(**c)).fold(space.full_set(), |a, c| a.intersection(*c))
            };
            let points = (0..space.len())
                .map(|i| ClnPointReport {
                    point: space.label(i).to_string(),
                    cl_n: names(&space, cl[i]),
                    smallest_closed: names(&space, smallest(PointSet::singleton(i))),
                })
                .collect();
            let failures = if *check_transitivity {
                let triples = space.find_cln_transitivity_failures(*n)?;
                Some(
                    triples
                        .into_iter()
                        .map(|(a, b, c)| [a, b, c].map(|i| space.label(i).to_string()))
                        .collect(),
                )
            } else {
                None
            };
            report.cln = Some(ClnReport {
                n: *n,
                points,
                family: lattice_report(&space, &family),
                transitivity_failures: failures,
            });
            write_dot(&common.dot, || family.to_dot(&format!("cl_{n}")))?;
        }
        Command::Knorrer { var, .. } => {
            let covers = input
                .mfs
                .iter()
                .map(|m| m.knorrer_cover(var))
                .collect::<Result<Vec<_>, _>>()
                .map_err(Failure::validation)?;
            let base = annihilate_all(input.mfs);
            let lifted = annihilate_all(covers);
            report.modules = point_reports(&base);
            let potential = lifted[0].ctx().potential().to_string();
            let base_space = FiniteAlexandrovSpace::new(base)?;
            let cover_space = FiniteAlexandrovSpace::new(lifted.clone())?;
            let (kb, kc) = (base_space.kolmogorov_poset(), cover_space.kolmogorov_poset());
            let map = kb.isomorphism(&kc);
            let class_map = map
                .as_ref()
                .map(|m| {
                    (0..kb.len()).map(|c| (kb.ideal(c).canonical_strings(), kc.ideal(m[c]).canonical_strings())).collect()
                })
                .unwrap_or_default();
            report.knorrer = Some(KnorrerReport {
                variable: var.clone(),
                potential,
                modules: point_reports(&lifted),
                isomorphic: map.is_some(),
                class_map,
            });
            write_dot(&common.dot, || kc.to_dot("cover_kolmogorov"))?;
        }
    }
    Ok((report, common.format))
}

/// Runs the command line `argv` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((report, format)) => {
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("mcmtop").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn annihilate_one_module() {
        let (code, out, _) = run(&["annihilate", "--catalog", "D5", "--module", "X_2", "--format", "json"]);
        assert_eq!(code, 0);
        let r: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(r.modules.len(), 1);
        assert_eq!(r.modules[0].annihilator.as_deref().unwrap(), ["x", "y^2"]);
        let (code, out, _) = run(&["annihilate", "--catalog", "D5", "--module", "X_2"]);
        assert_eq!(code, 0);
        assert!(out.contains("X_2  2x2  (x, y^2)"), "{out}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["annihilate"]).0, EXIT_USAGE);
        assert_eq!(run(&["annihilate", "--catalog", "D5", "--file", "x.json"]).0, EXIT_USAGE);
        assert_eq!(run(&["annihilate", "--catalog", "D6"]).0, EXIT_USAGE);
        assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run(&["cln", "--catalog", "D5", "--n", "0"]).0, EXIT_USAGE);
        assert_eq!(run(&["annihilate", "--catalog", "D5", "--module", "Q"]).0, EXIT_USAGE);
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("knorrer"));
    }

    #[test]
    fn space_counts() {
        let (code, out, _) = run(&["space", "--catalog", "D7", "--closed-sets", "--format", "json"]);
        assert_eq!(code, 0);
        let r: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(r.space.unwrap().closed_set_count, Some(11));
        assert_eq!(r.lattice.unwrap().sets.len(), 11);
    }
}
