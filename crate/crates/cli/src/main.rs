//! `mcc` — exact minimum cycle cover solver for undirected graphs.
//!
//! Exit codes: 0 success, 2 input parse error, 3 resource refusal (DP
//! ceiling, oracle size limit), 4 internal invariant violation.

#![forbid(unsafe_code)]

use clap::{Parser, Subcommand, ValueEnum};
use mcc_core::dp::DEFAULT_MAX_VERTICES;
use mcc_core::gen::{gen_co_degenerate, gen_dirac_deficient};
use mcc_core::graph::{co_degeneracy, Graph};
use mcc_core::io::{parse_graph, write_graph, GraphFormat};
use mcc_core::kernel::{kernelize, min_co_vertex_cover, CoVertexCover};
use mcc_core::oracle::mcc_bruteforce;
use mcc_core::pipeline::{solve_pipeline, PipelineConfig, PipelineError, SolveReport};
use mcc_core::{compute_closure, verify_cover};
use serde_json::{json, Value};
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

const EXIT_PARSE: i32 = 2;
const EXIT_RESOURCE: i32 = 3;
const EXIT_INTERNAL: i32 = 4;

#[derive(Parser)]
#[command(
    name = "mcc",
    version,
    about = "Exact minimum cycle cover solver for undirected graphs"
)]
struct Cli {
    /// Input graph file; stdin when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Graph file format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Dimacs)]
    format: FormatArg,

    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Seed for generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Vertex ceiling for the subset DP table.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    max_dp_vertices: usize,

    /// Include the cycle certificate in reports.
    #[arg(long, global = true)]
    emit_certificate: bool,

    /// Re-verify the certificate and cross-check against the brute-force
    /// oracle when the graph is small enough.
    #[arg(long, global = true)]
    self_check: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Dimacs,
    Edgelist,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Dimacs => GraphFormat::Dimacs,
            FormatArg::Edgelist => GraphFormat::EdgeList,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    /// Complement is a random k-degenerate graph.
    CoDegenerate,
    /// All but k vertices have degree at least n/2.
    Dirac,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and print a JSON report.
    Solve {
        /// Closure threshold offset (certificate lifting is proven for 0).
        #[arg(long, default_value_t = 0)]
        ell: i64,
    },
    /// Report co-degeneracy and its elimination ordering.
    Codeg,
    /// Compute the closure; optionally write the closed graph.
    Closure {
        #[arg(long, default_value_t = 0)]
        ell: i64,
    },
    /// Run closure, cover extraction and kernelization; optionally write the
    /// kernel graph.
    Kernelize,
    /// Brute-force solve (tiny graphs only).
    Oracle,
    /// Generate an instance and write it in the chosen format.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Generate and solve a batch of co-degenerate instances, timing each.
    Bench {
        /// Comma-separated instance sizes.
        #[arg(long, value_delimiter = ',', default_values_t = vec![200usize, 400, 800])]
        n: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Seeds per size.
        #[arg(long, default_value_t = 3)]
        seeds: u64,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => {}
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Solve { ell } => solve_cmd(cli, *ell),
        Command::Codeg => codeg_cmd(cli),
        Command::Closure { ell } => closure_cmd(cli, *ell),
        Command::Kernelize => kernelize_cmd(cli),
        Command::Oracle => oracle_cmd(cli),
        Command::Gen { kind, n, k } => gen_cmd(cli, *kind, *n, *k),
        Command::Bench { n, k, seeds } => bench_cmd(cli, n, *k, *seeds),
    }
}

fn read_input(cli: &Cli) -> Result<Graph, Failure> {
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::new(1, format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::new(1, format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let parsed = parse_graph(&text, cli.format.into())
        .map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    Ok(parsed.graph)
}

fn emit(cli: &Cli, content: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Failure::new(1, format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

/// Certificates mirror the input convention: 1-based for DIMACS, 0-based for
/// edge lists.
fn certificate_json(cli: &Cli, cycles: &[Vec<usize>]) -> Value {
    let base = if cli.format == FormatArg::Dimacs {
        1
    } else {
        0
    };
    json!(cycles
        .iter()
        .map(|c| c.iter().map(|v| v + base).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn pipeline_failure(e: PipelineError) -> Failure {
    let code = match e {
        PipelineError::DpCeiling { .. } => EXIT_RESOURCE,
        PipelineError::BudgetAnomaly { .. } | PipelineError::Internal { .. } => EXIT_INTERNAL,
    };
    Failure::new(code, e.to_string())
}

fn report_json(cli: &Cli, g: &Graph, report: &SolveReport) -> Result<Value, Failure> {
    let mut value = serde_json::to_value(report)
        .map_err(|e| Failure::new(EXIT_INTERNAL, format!("report serialization: {e}")))?;
    let map = value.as_object_mut().expect("report is an object");
    if cli.emit_certificate || cli.self_check {
        map.insert(
            "certificate".into(),
            certificate_json(cli, report.certificate.cycles()),
        );
    } else {
        map.remove("certificate");
    }
    if cli.self_check {
        if verify_cover(g, &report.certificate).is_err() || report.certificate.len() != report.mcc {
            return Err(Failure::new(
                EXIT_INTERNAL,
                "self-check: certificate rejected",
            ));
        }
        let oracle_agrees = if g.n() <= 10 {
            let (expect, _) = mcc_bruteforce(g)
                .map_err(|e| Failure::new(EXIT_INTERNAL, format!("self-check oracle: {e}")))?;
            if expect != report.mcc {
                return Err(Failure::new(
                    EXIT_INTERNAL,
                    format!(
                        "self-check: oracle says {expect}, pipeline says {}",
                        report.mcc
                    ),
                ));
            }
            Some(true)
        } else {
            None
        };
        map.insert(
            "self_check".into(),
            json!({ "verified": true, "oracle": oracle_agrees }),
        );
    }
    Ok(value)
}

fn solve_cmd(cli: &Cli, ell: i64) -> Result<(), Failure> {
    let g = read_input(cli)?;
    if ell != 0 {
        eprintln!(
            "warning: --ell {ell} shifts the closure threshold; certificate lifting is only \
             guaranteed for 0"
        );
    }
    let config = PipelineConfig {
        ell,
        max_dp_vertices: cli.max_dp_vertices,
    };
    let report = solve_pipeline(&g, &config).map_err(pipeline_failure)?;
    let value = report_json(cli, &g, &report)?;
    emit(
        cli,
        &serde_json::to_string_pretty(&value).expect("valid json"),
    )
}

fn codeg_cmd(cli: &Cli) -> Result<(), Failure> {
    let g = read_input(cli)?;
    let result = co_degeneracy(&g);
    let value = json!({
        "n": g.n(),
        "m": g.edge_count(),
        "co_degeneracy": result.k,
        "ordering": result.ordering,
    });
    emit(
        cli,
        &serde_json::to_string_pretty(&value).expect("valid json"),
    )
}

fn closure_cmd(cli: &Cli, ell: i64) -> Result<(), Failure> {
    let g = read_input(cli)?;
    let (closed, trace) = compute_closure(&g, ell);
    let value = json!({
        "n": g.n(),
        "m": g.edge_count(),
        "ell": ell,
        "edges_added": trace.len(),
        "closed_m": closed.edge_count(),
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("valid json")
    );
    if cli.output.is_some() {
        emit(cli, &write_graph(&closed, cli.format.into()))?;
    }
    Ok(())
}

fn kernelize_cmd(cli: &Cli) -> Result<(), Failure> {
    let g = read_input(cli)?;
    if g.n() == 0 {
        return Err(Failure::new(
            EXIT_PARSE,
            "kernelize needs at least one vertex",
        ));
    }
    let co_deg = co_degeneracy(&g).k;
    let (closed, trace) = compute_closure(&g, 0);
    let budget = 2 * co_deg + 1;
    let s = match min_co_vertex_cover(&closed, budget) {
        Ok(s) if s.is_empty() => CoVertexCover::new(vec![0]),
        Ok(s) => s,
        Err(e) => return Err(Failure::new(EXIT_INTERNAL, e.to_string())),
    };
    let kernel = kernelize(&closed, &s).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    let value = json!({
        "n": g.n(),
        "m": g.edge_count(),
        "co_degeneracy": co_deg,
        "closure_edges_added": trace.len(),
        "cover_budget": budget,
        "s_size": s.len(),
        "kernel_vertices": kernel.reduced.n(),
        "untouched": kernel.untouched,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("valid json")
    );
    if cli.output.is_some() {
        emit(cli, &write_graph(&kernel.reduced, cli.format.into()))?;
    }
    Ok(())
}

fn oracle_cmd(cli: &Cli) -> Result<(), Failure> {
    let g = read_input(cli)?;
    let (mcc, cover) =
        mcc_bruteforce(&g).map_err(|e| Failure::new(EXIT_RESOURCE, e.to_string()))?;
    let mut value = json!({ "n": g.n(), "m": g.edge_count(), "mcc": mcc });
    if cli.emit_certificate {
        value
            .as_object_mut()
            .expect("object")
            .insert("certificate".into(), certificate_json(cli, cover.cycles()));
    }
    emit(
        cli,
        &serde_json::to_string_pretty(&value).expect("valid json"),
    )
}

fn gen_cmd(cli: &Cli, kind: GenKind, n: usize, k: usize) -> Result<(), Failure> {
    let g = match kind {
        GenKind::CoDegenerate => gen_co_degenerate(n, k, cli.seed),
        GenKind::Dirac => gen_dirac_deficient(n, k, cli.seed),
    }
    .map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    emit(cli, &write_graph(&g, cli.format.into()))
}

fn bench_cmd(cli: &Cli, sizes: &[usize], k: usize, seeds: u64) -> Result<(), Failure> {
    let config = PipelineConfig {
        ell: 0,
        max_dp_vertices: cli.max_dp_vertices,
    };
    println!(
        "{:>6} {:>3} {:>6} {:>6} {:>10} {:>9}",
        "n", "k", "seed", "mcc", "total_s", "verified"
    );
    for &n in sizes {
        let mut totals = Vec::new();
        for seed in 0..seeds {
            let g = gen_co_degenerate(n, k, seed)
                .map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
            let start = Instant::now();
            let report = solve_pipeline(&g, &config).map_err(pipeline_failure)?;
            let total = start.elapsed().as_secs_f64();
            totals.push(total);
            println!(
                "{n:>6} {k:>3} {seed:>6} {:>6} {total:>10.3} {:>9}",
                report.mcc, report.verified
            );
        }
        totals.sort_by(f64::total_cmp);
        println!(
            "# n={n}: median {:.3}s over {} runs",
            totals[totals.len() / 2],
            totals.len()
        );
    }
    Ok(())
}
