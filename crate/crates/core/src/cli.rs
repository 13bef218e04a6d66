//! Command-line front end. [`run`] parses arguments, dispatches to the
//! searches and renders results; the binary only forwards its exit status.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::classify::{brute_force_crosscheck, classify_all, ClassificationReport, EIGENVALUES};
use crate::exact::{integral_spectrum, Spectrum};
use crate::glg::is_generalized_line_graph;
use crate::glgsearch::{certify, glg_roots_with, SearchCaps};
use crate::graph::{parse_graph6, to_dot, write_graph6, Graph};
use crate::starsearch::{enumerate_foundation, exceptional_candidates_from, CompatGraph, ExceptionalCandidate};

/// Environment variable overriding the worker count when `--jobs` is absent.
pub const JOBS_ENV: &str = "INTEGRAL_GRAPHS_JOBS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    G6,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "integral-graphs", version, about = "Connected non-bipartite integral graphs with spectral radius 3")]
pub struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for the parallel searches.
    #[arg(long, global = true, env = JOBS_ENV)]
    pub jobs: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run both searches and compare with the expected multiplicity table.
    Classify,
    /// Adjacency spectrum of a graph, if integral.
    Spectrum { graph6: String },
    /// Find a weighted root graph, or report that the graph is exceptional.
    RecognizeGlg { graph6: String },
    /// Integral exceptional graphs built from one star complement for -2.
    StarExtend {
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 4)]
        max_clique: usize,
    },
    /// Weighted graphs whose signless Laplacian spectrum lies in 0..=5 and contains 5.
    SearchGlg {
        #[arg(long, default_value_t = 32)]
        max_n: usize,
        #[arg(long)]
        emit_certificates: Option<PathBuf>,
    },
    /// Foundation graphs and their extensions by star sets for -2.
    SearchExceptional {
        #[arg(long, default_value_t = 4)]
        max_clique: usize,
        #[arg(long)]
        foundation_out: Option<PathBuf>,
    },
    /// Brute-force enumeration compared with the classification.
    Crosscheck {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 1,
        }
    }
}

/// Rendered output of a command; `ok` is false when a verification failed.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit status: 0 success, 1 verification failure, 2 usage error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(jobs) = cli.jobs {
        // the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match execute(&cli) {
        Ok(out) => {
            if let Err(e) = emit(cli.out.as_ref(), &out.text) {
                eprintln!("error: {e}");
                return e.exit_code();
            }
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn emit(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn parse(text: &str) -> Result<Graph, CliError> {
    parse_graph6(text.trim()).map_err(|e| CliError::Usage(format!("invalid graph6 {text:?}: {e}")))
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::Usage(format!("format {format:?} is not available for {command}").to_lowercase())
}

fn json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn multiplicity_fields(spectrum: &Spectrum) -> String {
    let m: Vec<String> = spectrum
        .multiplicity_vector(&EIGENVALUES)
        .iter()
        .map(|k| k.to_string())
        .collect();
    m.join(",")
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Classify => Ok(render_report(&classify_all(), cli.format.unwrap_or(Format::Json))),
        Command::Spectrum { graph6 } => spectrum(&parse(graph6)?, cli.format.unwrap_or(Format::Json)),
        Command::RecognizeGlg { graph6 } => recognize(&parse(graph6)?, cli.format),
        Command::StarExtend { base, max_clique } => {
            let base = parse(base)?;
            CompatGraph::new(&base, -2).map_err(|e| CliError::Usage(e.to_string()))?;
            let found = exceptional_candidates_from(std::slice::from_ref(&base), *max_clique);
            render_candidates(&found, cli.format.unwrap_or(Format::Json))
        }
        Command::SearchGlg {
            max_n,
            emit_certificates,
        } => search_glg(*max_n, emit_certificates.as_ref(), cli.format.unwrap_or(Format::Json)),
        Command::SearchExceptional {
            max_clique,
            foundation_out,
        } => {
            let bases = enumerate_foundation();
            for n in 6..=8 {
                eprintln!("{n} vertices: {}", bases.iter().filter(|g| g.order() == n).count());
            }
            eprintln!("foundation total: {}", bases.len());
            if let Some(path) = foundation_out {
                let lines: String = bases.iter().map(|g| write_graph6(g) + "\n").collect();
                write_file(path, &lines)?;
            }
            let found = exceptional_candidates_from(&bases, *max_clique);
            render_candidates(&found, cli.format.unwrap_or(Format::Json))
        }
        Command::Crosscheck { max_n } => crosscheck(*max_n, cli.format.unwrap_or(Format::Json)),
    }
}

fn render_report(report: &ClassificationReport, format: Format) -> Outcome {
    let text = match format {
        Format::Json => json(report),
        Format::Csv => {
            let mut s = String::from("name,graph6,n,m3,m2,m1,m0,m-1,m-2,class\n");
            for e in &report.entries {
                writeln!(
                    s,
                    "{},{},{},{},{}",
                    e.name(),
                    e.graph6,
                    e.n,
                    multiplicity_fields(&e.spectrum),
                    e.class.as_str()
                )
                .unwrap();
            }
            s
        }
        Format::G6 => report.entries.iter().map(|e| e.graph6.clone() + "\n").collect(),
        Format::Dot => report.entries.iter().map(|e| format!("// {}\n{}", e.name(), to_dot(&e.graph, None))).collect(),
    };
    let problems = report.problems();
    for p in &problems {
        eprintln!("invariant violated: {p}");
    }
    if !report.expected_rows.matches() {
        eprintln!("missing table rows: {:?}", report.expected_rows.missing_rows);
        eprintln!("unexpected graphs: {:?}", report.expected_rows.unexpected);
    }
    Outcome {
        text,
        ok: problems.is_empty() && report.expected_rows.matches(),
    }
}

fn spectrum(g: &Graph, format: Format) -> Result<Outcome, CliError> {
    let Some(spec) = integral_spectrum(&g.adjacency_matrix()) else {
        eprintln!("spectrum is not integral");
        return Ok(Outcome {
            text: String::new(),
            ok: false,
        });
    };
    match format {
        Format::Json => Ok(Outcome::ok(serde_json::to_string(&spec).expect("map of integers") + "\n")),
        Format::Csv => {
            let mut s = String::from("eigenvalue,multiplicity\n");
            for (v, m) in spec.iter_desc() {
                writeln!(s, "{v},{m}").unwrap();
            }
            Ok(Outcome::ok(s))
        }
        other => Err(unsupported(other, "spectrum")),
    }
}

fn recognize(g: &Graph, format: Option<Format>) -> Result<Outcome, CliError> {
    let root = is_generalized_line_graph(g);
    let text = match (format, &root) {
        (None, Some(r)) => format!("glg {} {:?}\n", write_graph6(r.graph()), r.weights()),
        (None, None) => "exceptional\n".to_string(),
        (Some(Format::Json), Some(r)) => json(&serde_json::json!({"class": "glg", "root": r})),
        (Some(Format::Json), None) => json(&serde_json::json!({"class": "exceptional"})),
        (Some(Format::G6), Some(r)) => write_graph6(r.graph()) + "\n",
        (Some(Format::Dot), Some(r)) => {
            let labels: Vec<String> = r.weights().iter().map(|w| format!("f={w}")).collect();
            to_dot(r.graph(), Some(&labels))
        }
        (Some(Format::G6 | Format::Dot), None) => "exceptional\n".to_string(),
        (Some(Format::Csv), _) => return Err(unsupported(Format::Csv, "recognize-glg")),
    };
    Ok(Outcome::ok(text))
}

fn render_candidates(found: &[ExceptionalCandidate], format: Format) -> Result<Outcome, CliError> {
    let text = match format {
        Format::Json => {
            let rows: Vec<_> = found
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "graph6": write_graph6(&c.graph),
                        "spectrum": c.spectrum,
                        "base_graph6": write_graph6(&c.base),
                        "clique_size": c.clique_size,
                    })
                })
                .collect();
            json(&rows)
        }
        Format::Csv => {
            let mut s = String::from("graph6,n,m3,m2,m1,m0,m-1,m-2,base_graph6,clique_size\n");
            for c in found {
                writeln!(
                    s,
                    "{},{},{},{},{}",
                    write_graph6(&c.graph),
                    c.graph.order(),
                    multiplicity_fields(&c.spectrum),
                    write_graph6(&c.base),
                    c.clique_size
                )
                .unwrap();
            }
            s
        }
        Format::G6 => found.iter().map(|c| write_graph6(&c.graph) + "\n").collect(),
        Format::Dot => found.iter().map(|c| to_dot(&c.graph, None)).collect(),
    };
    Ok(Outcome::ok(text))
}

fn search_glg(max_n: usize, certificates: Option<&PathBuf>, format: Format) -> Result<Outcome, CliError> {
    let roots = glg_roots_with(SearchCaps::new(max_n));
    let certs: Vec<_> = roots.iter().filter_map(certify).collect();
    let ok = certs.len() == roots.len() && certs.iter().all(|c| c.checks.all_pass());
    if !ok {
        eprintln!("some root failed its certificate checks");
    }
    if let Some(path) = certificates {
        write_file(path, &json(&certs))?;
    }
    let text = match format {
        Format::Json => json(&certs),
        Format::Csv => {
            let mut s = String::from("h,f,q_spectrum,checks\n");
            for c in &certs {
                let f: Vec<String> = c.root.f.iter().map(|w| w.to_string()).collect();
                let verdict = if c.checks.all_pass() { "pass" } else { "fail" };
                writeln!(s, "{},{},\"{}\",{verdict}", c.root.h, f.join(" "), c.q_spectrum).unwrap();
            }
            s
        }
        Format::G6 => certs.iter().map(|c| c.root.h.clone() + "\n").collect(),
        Format::Dot => roots
            .iter()
            .map(|r| {
                let labels: Vec<String> = r.weights().iter().map(|w| format!("f={w}")).collect();
                to_dot(r.graph(), Some(&labels))
            })
            .collect(),
    };
    Ok(Outcome { text, ok })
}

fn crosscheck(max_n: usize, format: Format) -> Result<Outcome, CliError> {
    if max_n > 13 {
        return Err(CliError::Usage(format!("--max-n {max_n} exceeds 13")));
    }
    let found = brute_force_crosscheck(max_n);
    let report = classify_all();
    let mut brute: Vec<String> = found.iter().map(write_graph6).collect();
    let mut expected: Vec<String> = report
        .entries
        .iter()
        .filter(|e| e.n <= max_n)
        .map(|e| write_graph6(&e.graph))
        .collect();
    let brute_keys: std::collections::BTreeSet<_> = found.iter().map(|g| g.canonical_key()).collect();
    let expected_keys: std::collections::BTreeSet<_> = report
        .entries
        .iter()
        .filter(|e| e.n <= max_n)
        .map(|e| e.graph.canonical_key())
        .collect();
    let agree = brute_keys == expected_keys;
    if !agree {
        eprintln!("brute force and classification disagree");
    }
    brute.sort();
    expected.sort();
    let text = match format {
        Format::Json => json(&serde_json::json!({
            "max_n": max_n,
            "brute_force": brute,
            "classification": expected,
            "agree": agree,
        })),
        Format::G6 => found.iter().map(|g| write_graph6(g) + "\n").collect(),
        Format::Csv => {
            let mut s = String::from("graph6,n,m3,m2,m1,m0,m-1,m-2\n");
            for g in &found {
                let spec = integral_spectrum(&g.adjacency_matrix()).expect("integral by construction");
                writeln!(s, "{},{},{}", write_graph6(g), g.order(), multiplicity_fields(&spec)).unwrap();
            }
            s
        }
        Format::Dot => found.iter().map(|g| to_dot(g, None)).collect(),
    };
    Ok(Outcome { text, ok: agree })
}
