use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use comax::output::{
    g2_edges, graph_classes, graph_edges, report_json, report_line, spectrum_csv, spectrum_json,
    spectrum_pretty,
};
use comax::scan::{self, Filter, ScanConfig, ScanFormat};
use comax::{dense_limit, verify, CliError, DEFAULT_SCAN_LIMIT};
use comax_core::comax::g2_graph;
use comax_core::connectivity::{kappa_bound_is_tight, kappa_g2_bound, G2_CUT_LIMIT};
use comax_core::oracle::{connected_components, min_vertex_cut};
use comax_core::quotient::full_spectrum;
use comax_core::{Error, Modulus};

/// Exact Laplacian spectra of the comaximal graph of Z_n.
#[derive(Parser)]
#[command(name = "comax", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Laplacian spectrum of Γ(Z_n).
    Spectrum {
        n: u64,
        #[arg(long, value_enum, default_value_t = SpectrumFormat::Json)]
        format: SpectrumFormat,
    },
    /// Check the spectrum and every connectivity statement for n against the oracles.
    Verify {
        n: u64,
        /// Emit the reports as a JSON array.
        #[arg(long)]
        json: bool,
    },
    /// Scan a range of n for Laplacian integrality.
    Scan {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        #[arg(long, value_enum, default_value_t = ScanFormat::Csv)]
        format: ScanFormat,
        /// Fill the wall_time_ms column (output is then no longer reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long, default_value_t = DEFAULT_SCAN_LIMIT)]
        limit: u64,
    },
    /// Inspect G2, the subgraph on nonzero non-units.
    G2 { n: u64, action: G2Action },
    /// Export Γ(Z_n) itself.
    Graph {
        n: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum G2Action {
    Export,
    Kappa,
    Components,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edges,
    Classes,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn emit(text: &str) -> Result<(), CliError> {
    let mut stdout = io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|e| CliError::io("writing to standard output", e))
}

fn g2_modulus(n: u64) -> Result<Modulus, CliError> {
    let m = Modulus::new(n)?;
    if m.is_prime() {
        return Err(Error::EmptyG2(n).into());
    }
    Ok(m)
}

/// Exit status 0, or 1 when some check disagreed.
fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Spectrum { n, format } => {
            let m = Modulus::new(n)?;
            let spec = full_spectrum(&m)?;
            let text = match format {
                SpectrumFormat::Json => format!("{}\n", spectrum_json(&m, &spec)),
                SpectrumFormat::Csv => spectrum_csv(&spec)?,
                SpectrumFormat::Pretty => format!("{}\n", spectrum_pretty(&spec)?),
            };
            emit(&text)?;
            Ok(0)
        }
        Command::Verify { n, json } => {
            let m = Modulus::new(n)?;
            let reports = verify::run(&m, dense_limit()?)?;
            let failed = verify::failures(&reports);
            if json {
                let arr: Vec<_> = reports.iter().map(report_json).collect();
                emit(&format!("{}\n", serde_json::Value::Array(arr)))?;
            } else {
                let mut text = format!(
                    "n = {} = {}, phi = {}\n",
                    n,
                    m.factorization_string(),
                    m.phi()
                );
                for r in &reports {
                    text.push_str(&report_line(r));
                    text.push('\n');
                }
                emit(&text)?;
            }
            if failed.is_empty() {
                Ok(0)
            } else {
                eprintln!("disagreement: {}", failed.join(", "));
                Ok(1)
            }
        }
        Command::Scan {
            from,
            to,
            workers,
            out,
            filter,
            format,
            timing,
            limit,
        } => {
            let cfg = ScanConfig {
                from,
                to,
                workers,
                filter,
                timing,
                limit,
                format,
            };
            scan::validate(&cfg)?;
            let summary = match &out {
                Some(path) => {
                    let file = File::create(path).map_err(|e| {
                        CliError::io(format!("cannot create {}", path.display()), e)
                    })?;
                    scan::run(&cfg, &mut BufWriter::new(file))?
                }
                None => scan::run(&cfg, &mut BufWriter::new(io::stdout().lock()))?,
            };
            eprintln!("{}", summary.line());
            Ok(0)
        }
        Command::G2 { n, action } => {
            let m = g2_modulus(n)?;
            match action {
                G2Action::Export => emit(&g2_edges(&m))?,
                G2Action::Components => {
                    let (g, _) = g2_graph(&m);
                    emit(&format!("{}\n", connected_components(&g)))?;
                }
                G2Action::Kappa => {
                    let size = (m.n() - m.phi() - 1) as usize;
                    if size > G2_CUT_LIMIT {
                        return Err(CliError::Usage(format!(
                            "G2 has {size} vertices, above the max-flow limit {G2_CUT_LIMIT}"
                        )));
                    }
                    let text = if m.is_squarefree() {
                        let r = kappa_g2_bound(&m)?;
                        let tight = kappa_bound_is_tight(&r).unwrap_or(false);
                        format!(
                            "computed {}\nbound {}\n{}\n",
                            r.computed,
                            r.claimed,
                            if tight { "tight" } else { "not tight" }
                        )
                    } else {
                        let kappa = min_vertex_cut(&g2_graph(&m).0)?;
                        format!("computed {kappa}\nbound not-applicable (n is not squarefree)\n")
                    };
                    emit(&text)?;
                }
            }
            Ok(0)
        }
        Command::Graph { n, format } => {
            let m = Modulus::new(n)?;
            let limit = dense_limit()?;
            if n as usize > limit {
                return Err(CliError::Usage(format!(
                    "n = {n} exceeds the dense limit {limit}"
                )));
            }
            match format {
                GraphFormat::Edges => emit(&graph_edges(&m))?,
                GraphFormat::Classes => emit(&format!("{}\n", graph_classes(&m)))?,
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
