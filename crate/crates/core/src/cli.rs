//! Command-line front end. [`run`] does all the work so the binary stays a
//! one-liner and tests can drive it with in-memory streams.
//!
//! Exit codes: 0 success, 1 verification or cross-check mismatch, 2 input or
//! usage error.

use std::io::{Read, Write};
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::cover::{exact_min_vertex_cover, greedy_cover};
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::io::{self, Format};
use crate::jahangir::{
    self, build_jahangir, predicted_cover, recognize_jahangir, report_table, sdim_formula,
    verify_paper_with, JahangirParams, VerifyOptions,
};
use crate::strong::{self, brute_force_sdim, sdim_via_cover, DEFAULT_BRUTE_FORCE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sdim",
    version,
    about = "Strong metric dimension via strong resolving graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph and print it.
    Gen {
        kind: GraphKind,
        /// Spoke spacing for jahangir, vertex count otherwise.
        #[arg(short = 'n')]
        n: usize,
        /// Spoke count (jahangir only).
        #[arg(short = 'm')]
        m: Option<usize>,
        #[arg(long, default_value = "edge-json")]
        format: Format,
    },
    /// Strong metric dimension and a strong metric basis.
    Sdim {
        /// Edge-json file, `-` for stdin, or `jahangir:N,M` / `cycle:N` / `path:N` / `complete:N`.
        graph: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: SdimMethod,
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
        brute_cap: usize,
    },
    /// Strong resolving graph.
    Srg {
        graph: String,
        #[arg(long, default_value = "edge-json")]
        format: Format,
    },
    /// Mutually maximally distant pairs, one per line.
    Mmd { graph: String },
    /// Minimum (or greedy) vertex cover.
    Cover {
        graph: String,
        #[arg(long, value_enum, default_value = "exact")]
        mode: CoverMode,
        /// Cover the strong resolving graph of the input instead.
        #[arg(long)]
        srg: bool,
    },
    /// Check the Jahangir closed forms over a parameter grid.
    Verify {
        /// Inclusive range `a..b` (or a single value).
        #[arg(long = "n", default_value = "5..12")]
        n_range: String,
        #[arg(long = "m", default_value = "4..8")]
        m_range: String,
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
        brute_cap: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphKind {
    Jahangir,
    Cycle,
    Path,
    Complete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SdimMethod {
    Auto,
    Formula,
    Pipeline,
    Brute,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CoverMode {
    Exact,
    Greedy,
}

/// Failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err.root() {
            Error::Inconsistent(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: err.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Gen { kind, n, m, format } => {
            let g = generate(kind, n, m)?;
            write!(out, "{}", terminated(io::serialize(&g, format)))?;
            Ok(EXIT_OK)
        }
        Command::Sdim {
            graph,
            method,
            brute_cap,
        } => {
            let g = load_graph(&graph, stdin)?;
            cmd_sdim(&g, method, brute_cap, out)
        }
        Command::Srg { graph, format } => {
            let g = load_graph(&graph, stdin)?;
            let srg = strong::strong_resolving_graph(&g)?;
            write!(out, "{}", terminated(io::serialize(&srg, format)))?;
            Ok(EXIT_OK)
        }
        Command::Mmd { graph } => {
            let g = load_graph(&graph, stdin)?;
            for (u, v) in strong::mmd_pairs(&g)?.iter() {
                writeln!(out, "{} {}", g.name(u), g.name(v))?;
            }
            Ok(EXIT_OK)
        }
        Command::Cover { graph, mode, srg } => {
            let mut g = load_graph(&graph, stdin)?;
            if srg {
                g = strong::strong_resolving_graph(&g)?;
            }
            let result = match mode {
                CoverMode::Exact => exact_min_vertex_cover(&g)?,
                CoverMode::Greedy => greedy_cover(&g),
            };
            writeln!(out, "size = {}", result.size)?;
            writeln!(out, "optimal = {}", result.optimal)?;
            writeln!(out, "cover = {}", name_set(&g, &result.cover))?;
            if let CoverMode::Exact = mode {
                writeln!(out, "nodes_explored = {}", result.nodes_explored)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            n_range,
            m_range,
            brute_cap,
            json,
        } => cmd_verify(&n_range, &m_range, brute_cap, json, out),
    }
}

fn terminated(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn generate(kind: GraphKind, n: usize, m: Option<usize>) -> Result<Graph> {
    if !matches!(kind, GraphKind::Jahangir) && m.is_some() {
        return Err(Error::InvalidParameter(
            "-m only applies to jahangir".into(),
        ));
    }
    match kind {
        GraphKind::Jahangir => {
            let m = m.ok_or_else(|| Error::InvalidParameter("jahangir needs -m".into()))?;
            Ok(build_jahangir(JahangirParams::new(n, m)?).0)
        }
        GraphKind::Cycle => graph::cycle(n),
        GraphKind::Path => Ok(graph::path(n)),
        GraphKind::Complete => Ok(graph::complete(n)),
    }
}

/// Resolves a graph argument: generator shorthand, `-` for stdin, or a path
/// to an edge-json file.
fn load_graph(spec: &str, stdin: &mut dyn Read) -> Result<Graph, Failure> {
    if let Some((kind, args)) = spec.split_once(':') {
        let kind = match kind {
            "jahangir" => Some(GraphKind::Jahangir),
            "cycle" => Some(GraphKind::Cycle),
            "path" => Some(GraphKind::Path),
            "complete" => Some(GraphKind::Complete),
            _ => None,
        };
        if let Some(kind) = kind {
            let nums = args
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| usage(format!("bad graph shorthand `{spec}`")))?;
            return match (kind, nums.as_slice()) {
                (GraphKind::Jahangir, &[n, m]) => Ok(generate(kind, n, Some(m))?),
                (GraphKind::Jahangir, _) => {
                    Err(usage(format!("expected jahangir:N,M, got `{spec}`")))
                }
                (_, &[n]) => Ok(generate(kind, n, None)?),
                _ => Err(usage(format!("expected a single size in `{spec}`"))),
            };
        }
    }
    let text = if spec == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(spec).map_err(|e| usage(format!("{spec}: {e}")))?
    };
    Ok(io::parse_edge_json(&text)?)
}

fn name_set(g: &Graph, ids: &[usize]) -> String {
    let names: Vec<String> = ids.iter().map(|&v| g.name(v)).collect();
    format!("{{{}}}", names.join(", "))
}

fn cmd_sdim(
    g: &Graph,
    method: SdimMethod,
    brute_cap: usize,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    g.ensure_connected()?;
    let recognized = recognize_jahangir(g);
    let formula = recognized.and_then(sdim_formula);

    match method {
        SdimMethod::Brute => {
            let r = brute_force_sdim(g, brute_cap)?;
            report_sdim(out, r.size, "brute-force", Some((g, &r.basis)))?;
        }
        SdimMethod::Pipeline => {
            let r = sdim_via_cover(g)?;
            report_sdim(out, r.size, "pipeline", Some((g, &r.basis)))?;
        }
        SdimMethod::Formula => {
            let p = recognized.ok_or_else(|| {
                usage("the formula method needs a Jahangir graph in canonical layout")
            })?;
            let value = formula.ok_or_else(|| usage(format!("no closed form covers {p}")))?;
            let basis: Option<Vec<usize>> = predicted_cover(p).map(|c| c.into_iter().collect());
            report_sdim(out, value, "formula", basis.as_deref().map(|b| (g, b)))?;
        }
        SdimMethod::Auto => match formula {
            Some(value) => match sdim_via_cover(g) {
                Ok(r) if r.size == value => {
                    report_sdim(
                        out,
                        value,
                        "formula (cross-checked by pipeline)",
                        Some((g, &r.basis)),
                    )?;
                }
                Ok(r) => {
                    return Err(Failure {
                        code: EXIT_MISMATCH,
                        message: format!("formula gives {value} but the pipeline gives {}", r.size),
                    });
                }
                Err(Error::CoverCap { .. }) => {
                    report_sdim(
                        out,
                        value,
                        "formula (not cross-checked: order exceeds solver cap)",
                        None,
                    )?;
                }
                Err(e) => return Err(e.into()),
            },
            None => {
                let r = sdim_via_cover(g)?;
                report_sdim(out, r.size, "pipeline", Some((g, &r.basis)))?;
            }
        },
    }
    Ok(EXIT_OK)
}

fn report_sdim(
    out: &mut dyn Write,
    size: usize,
    method: &str,
    basis: Option<(&Graph, &[usize])>,
) -> std::io::Result<()> {
    writeln!(out, "sdim = {size}")?;
    writeln!(out, "method = {method}")?;
    if let Some((g, basis)) = basis {
        writeln!(out, "basis = {}", name_set(g, basis))?;
    }
    Ok(())
}

/// Parses `a..b` (inclusive) or a single value.
fn parse_range(text: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || usage(format!("bad range `{text}` (expected a..b)"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(usage(format!("empty range `{text}`")));
    }
    Ok(lo..=hi)
}

fn cmd_verify(
    n_range: &str,
    m_range: &str,
    brute_cap: usize,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let ns = parse_range(n_range)?;
    let ms = parse_range(m_range)?;
    let cells = ns
        .flat_map(|n| ms.clone().map(move |m| JahangirParams::new(n, m)))
        .collect::<Result<Vec<_>>>()?;
    let opts = VerifyOptions {
        brute_cap,
        ..VerifyOptions::default()
    };
    let reports: Vec<_> = cells
        .par_iter()
        .map(|&p| verify_paper_with(p, &opts))
        .collect();

    if json {
        let text = serde_json::to_string_pretty(&reports).expect("reports serialize");
        writeln!(out, "{text}")?;
    } else {
        write!(out, "{}", report_table(&reports))?;
        for r in reports.iter().filter(|r| !r.passed()) {
            for d in &r.discrepancies {
                writeln!(
                    out,
                    "{}: {}",
                    r.params,
                    serde_json::to_string(d).expect("finding serializes")
                )?;
            }
        }
    }
    let all_pass = reports.iter().all(jahangir::VerificationReport::passed);
    Ok(if all_pass { EXIT_OK } else { EXIT_MISMATCH })
}
