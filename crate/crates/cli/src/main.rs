//! `zinbiel` — exact invariants of structure-constant algebras.
//!
//! Exit codes: 0 success (and identity holds), 1 a check failed,
//! 2 parse or load error, 3 assumption or parameter error.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use zinbiel_core::algebra::functors::DeriveKind;
use zinbiel_core::algebra::identities::{check_identity, IdentityKind};
use zinbiel_core::algebra::parse::{parse_algebra, render_algebra, render_algebra_json};
use zinbiel_core::algebra::AlgebraSpec;
use zinbiel_core::catalog::{load_catalog, reconcile};
use zinbiel_core::error::ScalarError;
use zinbiel_core::invariants::checks::{random_unimodular, transport_conjugation_with, BaseSpaces};
use zinbiel_core::invariants::render::Convention;
use zinbiel_core::invariants::sums::direct_sum_centroid_report;
use zinbiel_core::rng::SplitMix64;
use zinbiel_core::scalar::parse::parse_rational_str;

#[derive(Parser)]
#[command(
    name = "zinbiel",
    version,
    about = "Exact derivations, centroids, centers and central derivations of \
             finite-dimensional algebras given by structure constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a variety identity on an algebra file.
    Check {
        file: PathBuf,
        /// zinbiel | prelie | leibniz | associative | commutative | lie
        #[arg(long, default_value = "zinbiel")]
        kind: String,
        /// Bind the parameter, e.g. `--param lambda=2`.
        #[arg(long)]
        param: Option<String>,
    },
    /// Compute Der, Gamma, the center, the power chain and all three
    /// central-derivation characterizations.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        param: Option<String>,
        /// text | json
        #[arg(long, default_value = "text")]
        format: String,
        /// row | column
        #[arg(long, default_value = "column")]
        convention: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reconciliation table for the catalog: computed vs claimed values.
    Table {
        /// 2 | 3 | 4 | all
        dimension: String,
        /// text | json | csv
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long, default_value = "column")]
        convention: String,
        /// Directory for one certificate file per mismatch row.
        #[arg(long)]
        certs: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Centroid decomposition report for a direct sum of two algebras.
    Sum {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        param: Option<String>,
    },
    /// Invariance of Der/Gamma/CD dimensions under random basis changes.
    Transport {
        file: PathBuf,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        param: Option<String>,
    },
    /// Emit a derived-structure algebra file.
    Derive {
        file: PathBuf,
        /// symmetrize | opposite | dendriform-associative | dendriform-prelie | lie
        #[arg(long)]
        kind: String,
        /// text | json
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        param: Option<String>,
    },
    /// Access the built-in catalog.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the catalog entries.
    List,
    /// Print one entry as an algebra file.
    Show {
        id: String,
        /// text | json
        #[arg(long, default_value = "text")]
        format: String,
    },
}

/// Command-level failure with its exit code.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn parse(msg: impl Into<String>) -> Self {
        Failure { code: 2, message: msg.into() }
    }

    fn parameter(msg: impl Into<String>) -> Self {
        Failure { code: 3, message: msg.into() }
    }
}

impl From<ScalarError> for Failure {
    fn from(e: ScalarError) -> Self {
        Failure::parameter(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Check { file, kind, param } => cmd_check(&file, &kind, param.as_deref()),
        Command::Invariants { file, param, format, convention, out } => {
            let algebra = load_algebra(&file, param.as_deref())?;
            let convention = parse_convention(&convention)?;
            let text = match format.as_str() {
                "text" => output::invariants_text(&algebra, convention),
                "json" => output::invariants_json(&algebra, convention),
                other => return Err(Failure::parameter(format!("unknown format `{}`", other))),
            };
            emit(&text, out.as_deref())?;
            Ok(0)
        }
        Command::Table { dimension, format, convention, certs, out } => {
            cmd_table(&dimension, &format, &convention, certs.as_deref(), out.as_deref())
        }
        Command::Sum { file_a, file_b, format, param } => {
            let a = load_algebra(&file_a, param.as_deref())?;
            let b = load_algebra(&file_b, param.as_deref())?;
            let report = direct_sum_centroid_report(&a, &b)
                .map_err(|e| Failure::parameter(e.to_string()))?;
            let text = match format.as_str() {
                "text" => output::sum_text(&a, &b, &report),
                "json" => output::sum_json(&a, &b, &report),
                other => return Err(Failure::parameter(format!("unknown format `{}`", other))),
            };
            print!("{}", text);
            Ok(0)
        }
        Command::Transport { file, count, seed, param } => {
            cmd_transport(&file, count, seed, param.as_deref())
        }
        Command::Derive { file, kind, format, out, param } => {
            let algebra = load_algebra(&file, param.as_deref())?;
            let kind = DeriveKind::from_name(&kind).ok_or_else(|| {
                Failure::parameter(format!(
                    "unknown derive kind `{}` (expected one of: {})",
                    kind,
                    DeriveKind::ALL.map(|k| k.name()).join(", ")
                ))
            })?;
            let derived = kind.apply(&algebra);
            let text = match format.as_str() {
                "text" => render_algebra(&derived),
                "json" => render_algebra_json(&derived),
                other => return Err(Failure::parameter(format!("unknown format `{}`", other))),
            };
            emit(&text, out.as_deref())?;
            Ok(0)
        }
        Command::Catalog { command } => cmd_catalog(command),
    }
}

fn load_algebra(path: &std::path::Path, param: Option<&str>) -> Result<AlgebraSpec, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("{}: {}", path.display(), e)))?;
    let algebra = parse_algebra(&text)
        .map_err(|e| Failure::parse(format!("{}: {}", path.display(), e)))?;
    match param {
        None => Ok(algebra),
        Some(binding) => {
            let (name, value) = binding
                .split_once('=')
                .ok_or_else(|| Failure::parameter("expected `--param NAME=VALUE`"))?;
            let value = parse_rational_str(value.trim())
                .map_err(|e| Failure::parameter(format!("parameter value: {}", e)))?;
            match algebra.param.as_deref() {
                Some(declared) if declared == name.trim() => {
                    Ok(algebra.specialize(&value)?)
                }
                Some(declared) => Err(Failure::parameter(format!(
                    "algebra declares parameter `{}`, not `{}`",
                    declared,
                    name.trim()
                ))),
                None => Err(Failure::parameter(format!(
                    "algebra has no parameter, cannot bind `{}`",
                    name.trim()
                ))),
            }
        }
    }
}

fn parse_convention(name: &str) -> Result<Convention, Failure> {
    Convention::from_name(name)
        .ok_or_else(|| Failure::parameter(format!("unknown convention `{}`", name)))
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), Failure> {
    match out {
        None => {
            print!("{}", text);
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::parse(format!("{}: {}", path.display(), e))),
    }
}

fn cmd_check(path: &std::path::Path, kind: &str, param: Option<&str>) -> Result<u8, Failure> {
    let algebra = load_algebra(path, param)?;
    let kind = IdentityKind::from_name(kind).ok_or_else(|| {
        Failure::parameter(format!(
            "unknown identity `{}` (expected one of: {})",
            kind,
            IdentityKind::ALL.map(|k| k.name()).join(", ")
        ))
    })?;
    let report = check_identity(&algebra, kind);
    if report.holds {
        println!("{}: {} identity holds", algebra.name, report.kind);
        Ok(0)
    } else {
        println!(
            "{}: {} identity FAILS ({} witness tuples)",
            algebra.name,
            report.kind,
            report.witnesses.len()
        );
        for w in report.witnesses.iter().take(8) {
            println!(
                "  {} at ({}) defect {}",
                w.axiom,
                w.indices
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                algebra.render_element(&w.defect)
            );
        }
        if report.witnesses.len() > 8 {
            println!("  ... and {} more", report.witnesses.len() - 8);
        }
        Ok(1)
    }
}

fn cmd_table(
    dimension: &str,
    format: &str,
    convention: &str,
    certs: Option<&std::path::Path>,
    out: Option<&std::path::Path>,
) -> Result<u8, Failure> {
    let _ = parse_convention(convention)?;
    let entries = load_catalog().map_err(|e| Failure::parse(e.to_string()))?;
    let filter: Box<dyn Fn(&str) -> bool> = match dimension {
        "2" => Box::new(|id: &str| id.starts_with("Z2_")),
        "3" => Box::new(|id: &str| id.starts_with("Z3_")),
        "4" => Box::new(|id: &str| id.starts_with("Z4_")),
        "all" => Box::new(|_: &str| true),
        other => {
            return Err(Failure::parameter(format!(
                "unknown dimension `{}` (expected 2, 3, 4 or all)",
                other
            )))
        }
    };
    let selected: Vec<_> = entries.into_iter().filter(|e| filter(&e.id)).collect();
    let report = reconcile(&selected);
    let cert_paths = match certs {
        Some(dir) => Some(output::write_certificates(dir, &report)?),
        None => None,
    };
    let text = match format {
        "text" => output::table_text(&report, cert_paths.as_deref()),
        "csv" => output::table_csv(&report, cert_paths.as_deref()),
        "json" => output::table_json(&report),
        other => return Err(Failure::parameter(format!("unknown format `{}`", other))),
    };
    emit(&text, out)?;
    Ok(0)
}

fn cmd_transport(
    path: &std::path::Path,
    count: usize,
    seed: u64,
    param: Option<&str>,
) -> Result<u8, Failure> {
    let algebra = load_algebra(path, param)?;
    let base = BaseSpaces::compute(&algebra);
    let mut rng = SplitMix64::new(seed);
    let mut passed = 0usize;
    let mut failed = Vec::new();
    for round in 0..count {
        let p = random_unimodular(algebra.dim, &mut rng);
        match transport_conjugation_with(&algebra, &base, &p) {
            Ok(report) if report.passed() => passed += 1,
            Ok(report) => failed.push(format!(
                "round {}: dims {:?} -> {:?}, transported: {}",
                round + 1,
                report.dims_before,
                report.dims_after,
                report.cd_basis_transported
            )),
            Err(e) => failed.push(format!("round {}: {}", round + 1, e)),
        }
    }
    println!(
        "{}: transport {}/{} pass (seed {})",
        algebra.name, passed, count, seed
    );
    for f in &failed {
        println!("  {}", f);
    }
    Ok(if failed.is_empty() { 0 } else { 1 })
}

fn cmd_catalog(command: CatalogCommand) -> Result<u8, Failure> {
    let entries = load_catalog().map_err(|e| Failure::parse(e.to_string()))?;
    match command {
        CatalogCommand::List => {
            for e in &entries {
                let param = match &e.algebra.param {
                    Some(p) => format!("  param {} ({})", p, e.algebra.assumptions),
                    None => String::new(),
                };
                let flagged = if e.errata().is_empty() { "" } else { "  [errata]" };
                println!(
                    "{:<6} dim {}  products {}{}{}",
                    e.id,
                    e.algebra.dim,
                    e.algebra.table.len(),
                    param,
                    flagged
                );
            }
            Ok(0)
        }
        CatalogCommand::Show { id, format } => {
            let entry = entries
                .iter()
                .find(|e| e.id == id)
                .ok_or_else(|| Failure::parameter(format!("no catalog entry `{}`", id)))?;
            match format.as_str() {
                "text" => {
                    print!("{}", render_algebra(&entry.algebra));
                    for note in entry.errata() {
                        println!("# errata: {}", note);
                    }
                }
                "json" => print!("{}", render_algebra_json(&entry.algebra)),
                other => {
                    return Err(Failure::parameter(format!("unknown format `{}`", other)))
                }
            }
            Ok(0)
        }
    }
}
