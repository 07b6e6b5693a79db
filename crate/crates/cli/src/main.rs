use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use graphlab_core::claims::{self, ReportFormat, Verdict};
use graphlab_core::closed_forms::{verify_k, FormulaCheck};
use graphlab_core::export::{to_dot, DivisorGraphDocument, GammaDocument};
use graphlab_core::graph::{build_gamma, build_general_capped, Graph, DEFAULT_DIVISOR_CAP, MAX_K};
use graphlab_core::indices::{parse_selection, GraphDescriptor, IndexContext, IndexReport};
use graphlab_core::metric::{distance_matrix_bfs, distance_matrix_fast};
use graphlab_core::PrimeBasis;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_STRICT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "graphlab",
    version,
    about = "Divisor graphs and their topological indices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit Γ_k, the graph on the divisors of a product of k distinct primes.
    Gamma {
        #[arg(long)]
        k: usize,
        /// Concrete primes for vertex labels, e.g. 2,3,5.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Emit the divisor graph of an arbitrary positive integer.
    DivisorGraph {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
        #[arg(long, default_value_t = DEFAULT_DIVISOR_CAP)]
        max_divisors: usize,
    },
    /// Compute topological indices exactly.
    Indices {
        #[command(flatten)]
        target: Target,
        /// Comma-separated index names, or "all".
        #[arg(long, default_value = "all")]
        index: String,
        #[arg(long, value_enum, default_value_t = IndicesFormat::Json)]
        format: IndicesFormat,
    },
    /// Check the closed forms against enumeration for a range of k.
    Verify {
        #[arg(long, default_value_t = 0)]
        k_min: u32,
        #[arg(long, default_value_t = 10)]
        k_max: u32,
        /// Largest k accepted.
        #[arg(long, env = "GRAPHLAB_KCAP", default_value_t = 10)]
        cap: u32,
    },
    /// Compare the published values against the computed ones.
    Claims {
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value_t = ClaimsFormat::Markdown)]
        format: ClaimsFormat,
        /// Exit with code 3 if any claim does not match.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Γ_k by number of primes.
    #[arg(long)]
    k: Option<usize>,
    /// Divisor graph of n.
    #[arg(long)]
    n: Option<u64>,
    /// Basis for Γ_k; only meaningful with --k.
    #[arg(long, value_delimiter = ',', requires = "k")]
    primes: Option<Vec<u64>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndicesFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimsFormat {
    Json,
    Markdown,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn basis(primes: Option<Vec<u64>>) -> Result<Option<PrimeBasis>, ExitCode> {
    primes.map(PrimeBasis::new).transpose().map_err(usage)
}

fn labels<G: Graph + ?Sized>(g: &G) -> Vec<String> {
    (0..g.order()).map(|u| g.label(u)).collect()
}

fn json<T: serde::Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn cmd_gamma(k: usize, primes: Option<Vec<u64>>, emit: Emit) -> Result<String, ExitCode> {
    let g = build_gamma(k, basis(primes)?).map_err(usage)?;
    Ok(match emit {
        Emit::Json => json(&GammaDocument::new(&g)),
        Emit::Dot => to_dot(&g, &format!("gamma{k}")),
        Emit::Csv => distance_matrix_fast(&g).to_csv(&labels(&g)),
    })
}

fn cmd_divisor_graph(n: u64, emit: Emit, cap: usize) -> Result<String, ExitCode> {
    let g = build_general_capped(n, cap).map_err(usage)?;
    Ok(match emit {
        Emit::Json => json(&DivisorGraphDocument::new(&g)),
        Emit::Dot => to_dot(&g, &format!("divisors{n}")),
        Emit::Csv => distance_matrix_bfs(&g)
            .expect("divisor graphs are connected")
            .to_csv(&labels(&g)),
    })
}

fn cmd_indices(target: Target, index: &str, format: IndicesFormat) -> Result<String, ExitCode> {
    let ids = parse_selection(index).map_err(usage)?;
    let report = match (target.k, target.n) {
        (Some(k), _) => {
            let g = build_gamma(k, basis(target.primes)?).map_err(usage)?;
            IndexReport::build(
                GraphDescriptor::Gamma { k },
                &IndexContext::gamma_fast(&g),
                &ids,
            )
        }
        (None, Some(n)) => {
            let g = build_general_capped(n, DEFAULT_DIVISOR_CAP).map_err(usage)?;
            let ctx = IndexContext::new(&g).expect("divisor graphs are connected");
            IndexReport::build(GraphDescriptor::Divisor { n }, &ctx, &ids)
        }
        (None, None) => unreachable!("clap requires --k or --n"),
    };
    Ok(match format {
        IndicesFormat::Json => json(&report),
        IndicesFormat::Table => {
            let width = report
                .indices
                .keys()
                .map(|id| id.name().len())
                .max()
                .unwrap_or(0);
            let mut out = String::new();
            for (id, value) in &report.indices {
                out.push_str(&format!(
                    "{:<width$}  {}  ≈ {}\n",
                    id.name(),
                    value,
                    value.to_decimal(6)
                ));
            }
            out
        }
    })
}

fn cmd_verify(k_min: u32, k_max: u32, cap: u32) -> Result<(String, bool), ExitCode> {
    if k_max as usize > MAX_K {
        return Err(usage(format!(
            "k-max {k_max} exceeds the supported maximum {MAX_K}"
        )));
    }
    if k_max > cap {
        return Err(usage(format!(
            "k-max {k_max} exceeds the cap {cap} (raise with --cap or GRAPHLAB_KCAP)"
        )));
    }
    if k_min > k_max {
        return Err(usage(format!(
            "k-min {k_min} is greater than k-max {k_max}"
        )));
    }
    let per_k: Vec<Vec<FormulaCheck>> = (k_min..=k_max)
        .into_par_iter()
        .map(|k| verify_k(k).expect("k within cap builds a connected graph"))
        .collect();
    let checks: Vec<&FormulaCheck> = per_k.iter().flatten().collect();
    let failed = checks.iter().filter(|c| !c.pass).count();
    let mut out = String::new();
    for c in &checks {
        out.push_str(&format!("{c}\n"));
    }
    out.push_str(&format!("{} checks, {} failed\n", checks.len(), failed));
    Ok((out, failed == 0))
}

fn emit(out: &str) {
    print!("{out}");
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Gamma { k, primes, emit: e } => emit(&cmd_gamma(k, primes, e)?),
        Command::DivisorGraph {
            n,
            emit: e,
            max_divisors,
        } => emit(&cmd_divisor_graph(n, e, max_divisors)?),
        Command::Indices {
            target,
            index,
            format,
        } => emit(&cmd_indices(target, &index, format)?),
        Command::Verify { k_min, k_max, cap } => {
            let (out, ok) = cmd_verify(k_min, k_max, cap)?;
            emit(&out);
            if !ok {
                return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
            }
        }
        Command::Claims { k, format, strict } => {
            let reports = claims::run_all(k);
            let format = match format {
                ClaimsFormat::Json => ReportFormat::Json,
                ClaimsFormat::Markdown => ReportFormat::Markdown,
            };
            emit(&claims::render_report(&reports, format));
            let mismatches = reports
                .iter()
                .filter(|r| r.verdict != Verdict::Match)
                .count();
            if strict && mismatches > 0 {
                eprintln!("{mismatches} claim(s) did not match");
                return Ok(ExitCode::from(EXIT_STRICT_MISMATCH));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}
