use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use powspec::export;
use powspec::sweep::{self, parse_k_range, parse_p_list};
use powspec::verify::{parse_cap, run_verification, VerifyConfig};
use powspec::{Construction, Error, Result, MATRIX_CAP_ENV};
use powspec_core::formulas::FormulaSet;
use powspec_core::graph::{directed_power_graph, model_graph, power_graph};
use powspec_core::spectra::{cluster_multiplicities, default_cluster_tol, graph_eigenvalues, DEFAULT_TOL};
use powspec_core::{GroupSpec, MatrixKind};

#[derive(Parser)]
#[command(name = "powspec", version, about = "Spectral verification of power graphs of G(k, p)")]
struct Cli {
    /// Matrix-order cap for exact and numeric matrix checks.
    #[arg(long, global = true, env = MATRIX_CAP_ENV)]
    cap: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full check suite for one (k, p).
    Verify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "all")]
        matrix: MatrixArg,
        #[arg(long, value_enum, default_value = "both")]
        construction: ConstructionArg,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the suite over a grid of (k, p) in parallel.
    Sweep {
        /// Inclusive range such as 2..3.
        #[arg(long)]
        k: String,
        /// Comma-separated odd primes; may be empty.
        #[arg(long, default_value = "")]
        p: String,
        /// Directory for one JSON report per pair.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Export a graph, spectrum or characteristic polynomial.
    Export {
        #[arg(long)]
        what: What,
        #[arg(long)]
        format: Format,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "model")]
        construction: SingleConstruction,
        /// Matrix for spectrum and formula exports.
        #[arg(long, value_enum, default_value = "laplacian")]
        matrix: SingleMatrix,
        /// Spectrum from the closed form (Laplacian only) or from the eigensolver.
        #[arg(long, value_enum, default_value = "formula")]
        source: Source,
        /// Export the directed power graph (true construction, DOT only).
        #[arg(long)]
        directed: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump every closed form for (k, p) as JSON.
    Formulas {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixArg {
    Adjacency,
    Laplacian,
    Signless,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SingleMatrix {
    Adjacency,
    Laplacian,
    Signless,
}

impl From<SingleMatrix> for MatrixKind {
    fn from(m: SingleMatrix) -> Self {
        match m {
            SingleMatrix::Adjacency => MatrixKind::Adjacency,
            SingleMatrix::Laplacian => MatrixKind::Laplacian,
            SingleMatrix::Signless => MatrixKind::Signless,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructionArg {
    Model,
    True,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum SingleConstruction {
    Model,
    True,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Graph,
    Spectrum,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Formula,
    Computed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let mut config = VerifyConfig::default();
    if let Some(raw) = &cli.cap {
        config.matrix_cap = parse_cap(raw)?;
    }
    match cli.command {
        Command::Verify { k, p, matrix, construction, out } => {
            config.kinds = match matrix {
                MatrixArg::Adjacency => vec![MatrixKind::Adjacency],
                MatrixArg::Laplacian => vec![MatrixKind::Laplacian],
                MatrixArg::Signless => vec![MatrixKind::Signless],
                MatrixArg::All => MatrixKind::ALL.to_vec(),
            };
            config.constructions = match construction {
                ConstructionArg::Model => vec![Construction::Model],
                ConstructionArg::True => vec![Construction::True],
                ConstructionArg::Both => Construction::BOTH.to_vec(),
            };
            let report = run_verification(k, p, &config, out.as_deref())?;
            if out.is_none() {
                export::write_output(&report.to_json()?, None)?;
            }
            for c in report.checks.iter().filter(|c| c.status != powspec::Status::Pass) {
                eprintln!(
                    "{:<18} {:<28} {:<6} {:<10} {}",
                    c.status.as_str(),
                    c.name,
                    c.construction.map_or("-", |x| x.as_str()),
                    c.matrix.as_deref().unwrap_or("-"),
                    c.note.as_deref().unwrap_or("")
                );
            }
            eprintln!(
                "k={k} p={p}: {} pass, {} fail, {} mismatch-reported, {} skipped",
                report.summary.pass, report.summary.fail, report.summary.mismatch_reported, report.summary.skipped
            );
            Ok(report.exit_code() as u8)
        }
        Command::Sweep { k, p, out_dir } => {
            let ks = parse_k_range(&k)?;
            let ps = parse_p_list(&p)?;
            let entries = sweep::sweep(ks, &ps, &config)?;
            if let Some(dir) = &out_dir {
                std::fs::create_dir_all(dir).map_err(|e| Error::Io { path: dir.clone(), source: e })?;
                for e in &entries {
                    if let Ok(r) = &e.outcome {
                        r.write_json(&dir.join(format!("k{}_p{}.json", e.k, e.p)))?;
                    }
                }
            }
            if !entries.is_empty() {
                export::write_output(&sweep::summary_table(&entries), None)?;
            }
            Ok(sweep::exit_code(&entries) as u8)
        }
        Command::Export { what, format, k, p, construction, matrix, source, directed, out } => {
            let text = export_text(what, format, k, p, construction, matrix.into(), source, directed)?;
            export::write_output(&text, out.as_deref())?;
            Ok(0)
        }
        Command::Formulas { k, p, out } => {
            let f = FormulaSet::new(k, p)?;
            export::write_output(&export::json_string(&export::formula_dump(&f))?, out.as_deref())?;
            Ok(0)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn export_text(
    what: What,
    format: Format,
    k: u32,
    p: u64,
    construction: SingleConstruction,
    kind: MatrixKind,
    source: Source,
    directed: bool,
) -> Result<String> {
    let spec = GroupSpec::semidihedral(k, p)?;
    let graph = || -> Result<_> {
        Ok(match construction {
            SingleConstruction::Model => model_graph(k, p)?,
            SingleConstruction::True => power_graph(&spec),
        })
    };
    let unsupported = |what: &str, fmt: &str| Error::Usage(format!("{what} cannot be exported as {fmt}"));
    match what {
        What::Graph if directed => match format {
            Format::Dot => Ok(export::digraph_dot(&directed_power_graph(&spec))),
            _ => Err(unsupported("the directed power graph", "anything but dot")),
        },
        What::Graph => {
            let g = graph()?;
            Ok(match format {
                Format::Dot => export::graph_dot(&g),
                Format::Json => export::json_string(&export::graph_json(&g))?,
                Format::Csv => export::graph_csv(&g),
            })
        }
        What::Spectrum => match source {
            Source::Formula => {
                if kind != MatrixKind::Laplacian {
                    return Err(Error::Usage("closed-form spectra exist only for the Laplacian".into()));
                }
                let s = FormulaSet::new(k, p)?.laplacian_spectrum();
                match format {
                    Format::Csv => Ok(export::exact_spectrum_csv(&s)),
                    Format::Json => export::json_string(&export::exact_spectrum_json(&s)),
                    Format::Dot => Err(unsupported("a spectrum", "dot")),
                }
            }
            Source::Computed => {
                let eig = graph_eigenvalues(&graph()?, kind, DEFAULT_TOL)?;
                let clusters = cluster_multiplicities(&eig.eigenvalues, default_cluster_tol(&eig.eigenvalues));
                match format {
                    Format::Csv => Ok(export::clusters_csv(&clusters)),
                    Format::Json => export::json_string(&export::clusters_json(&clusters)),
                    Format::Dot => Err(unsupported("a spectrum", "dot")),
                }
            }
        },
        What::Formula => {
            let poly = export::formula_for(&FormulaSet::new(k, p)?, kind);
            match format {
                Format::Json => export::json_string(&export::polynomial_json(&poly)),
                Format::Csv => Ok(export::polynomial_csv(&poly)),
                Format::Dot => Err(unsupported("a polynomial", "dot")),
            }
        }
    }
}
