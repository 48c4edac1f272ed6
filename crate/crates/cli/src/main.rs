use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use signed_turan::bounds::audit;
use signed_turan::constructions::NamedFamily;
use signed_turan::io::{parse_any, round_sig, to_json, to_text, GraphJson};
use signed_turan::spectral::char_poly;
use signed_turan::subgraphs::contains_unbalanced_clique;
use signed_turan::verify::{
    canonicalize, extremal_search, verify_lemma22, verify_theorem_with_jobs, Mode, SCHEMA_VERSION,
};
use signed_turan::{eigenvalues, SignedGraph};

#[derive(Parser, Debug)]
#[command(name = "sgt", version, about = "Spectral tools for signed graphs without unbalanced cliques")]
struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues and characteristic polynomial of a graph file.
    Spectrum { file: PathBuf },
    /// Build a named graph: gamma1, gamma2, gamma3, gamma5, complete, unbalanced-complete.
    Construct {
        family: String,
        /// Order (gamma5 is fixed at 4).
        #[arg(long)]
        n: Option<usize>,
        /// Write here instead of stdout; a `.json` suffix selects JSON.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Report whether the graph contains an unbalanced K_k.
    CheckFree {
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
    /// Frustration index and a switching attaining it.
    Frustration { file: PathBuf },
    /// Evaluate every spectral upper bound against the graph.
    Bounds { file: PathBuf },
    /// Canonical representative up to switching and relabeling.
    Canonicalize { file: PathBuf },
    /// Computational verification drivers.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Randomized search for large spectral radius among unbalanced K_k-free graphs.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long, default_value_t = 10_000)]
        iters: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Maximum spectral radius over unbalanced K5-free graphs of order n.
    Theorem {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = ["exhaustive", "pruned"])]
        mode: String,
        #[arg(long, env = "SG_JOBS")]
        jobs: Option<usize>,
        /// Also write the full JSON report (with timing metadata) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quotient-matrix comparisons of gamma1, gamma2, gamma3 with n - 2.
    Lemma22 {
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
    },
}

/// Result of a command that ran to completion.
enum Outcome {
    Ok,
    /// Verification failed or a counterexample was found.
    Failed,
}

/// Operator errors: bad arguments, unreadable or malformed input.
struct UsageError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.into())
    }
}

fn read_graph(path: &Path) -> Result<SignedGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_any(&text).with_context(|| format!("cannot parse {}", path.display()))
}

/// Write to stdout, treating a closed pipe as success.
fn write_stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(format: Format, value: &Value, table: impl FnOnce() -> String) {
    match format {
        Format::Json => write_stdout(&format!("{}\n", serde_json::to_string_pretty(value).expect("serializable"))),
        Format::Table => write_stdout(&table()),
    }
}

fn rounded(xs: &[f64]) -> Vec<f64> {
    xs.iter().copied().map(round_sig).collect()
}

fn spectrum(format: Format, file: &Path) -> Result<Outcome, UsageError> {
    let g = read_graph(file)?;
    let s = eigenvalues(&g);
    let poly = char_poly(&g.adjacency_i64(), g.order())?;
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "n": g.order(),
        "m": g.edge_count(),
        "eigenvalues": rounded(&s.eigenvalues),
        "index": round_sig(s.index()),
        "least": round_sig(s.least()),
        "spectral_radius": round_sig(s.spectral_radius()),
        "char_poly": poly,
    });
    emit(format, &value, || {
        let list: Vec<String> = s.eigenvalues.iter().map(|x| format!("{x:.9}")).collect();
        format!(
            "n = {}, m = {}\neigenvalues: {}\nlambda1 = {:.9}\nlambda_n = {:.9}\nrho = {:.9}\nchar poly: {}\n",
            g.order(),
            g.edge_count(),
            list.join(" "),
            s.index(),
            s.least(),
            s.spectral_radius(),
            poly
        )
    });
    Ok(Outcome::Ok)
}

fn construct(family: &str, n: Option<usize>, out: Option<&Path>) -> Result<Outcome, UsageError> {
    let family: NamedFamily = family.parse()?;
    let n = match (family, n) {
        (NamedFamily::Gamma5, None) => 4,
        (_, Some(n)) => n,
        (_, None) => return Err(anyhow::anyhow!("--n is required for {family}").into()),
    };
    let g = family.build(n)?;
    match out {
        Some(path) => {
            let body = if path.extension().is_some_and(|e| e == "json") { to_json(&g) } else { to_text(&g) };
            fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))?;
        }
        None => write_stdout(&to_text(&g)),
    }
    Ok(Outcome::Ok)
}

fn check_free(format: Format, k: usize, file: &Path) -> Result<Outcome, UsageError> {
    if k < 2 {
        return Err(anyhow::anyhow!("--k must be at least 2").into());
    }
    let g = read_graph(file)?;
    let witness = contains_unbalanced_clique(&g, k);
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "k": k,
        "free": witness.is_none(),
        "witness": witness.as_ref().map(|w| w.vertices.as_slice().to_vec()),
    });
    emit(format, &value, || match &witness {
        None => format!("K{k}^- -free: true\n"),
        Some(w) => format!("K{k}^- -free: false\nwitness: {:?}\n", w.vertices.as_slice()),
    });
    Ok(Outcome::Ok)
}

fn frustration(format: Format, file: &Path) -> Result<Outcome, UsageError> {
    let g = read_graph(file)?;
    let (eps, set) = g.frustration_switching()?;
    let switched = g.switch(&set)?;
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "frustration_index": eps,
        "balanced": eps == 0,
        "switching_set": set.as_slice(),
        "negative_edges_after_switching": switched.negative_edges(),
    });
    emit(format, &value, || {
        format!(
            "frustration index: {eps}\nswitching set: {:?}\nnegative edges after switching: {:?}\n",
            set.as_slice(),
            switched.negative_edges()
        )
    });
    Ok(Outcome::Ok)
}

fn bounds(format: Format, file: &Path) -> Result<Outcome, UsageError> {
    let g = read_graph(file)?;
    if g.order() > 30 {
        return Err(
            anyhow::anyhow!("bounds audit needs an exact frustration index; n = {} exceeds 30", g.order()).into()
        );
    }
    let report = audit(&g);
    let mut value = serde_json::to_value(&report)?;
    value["schema_version"] = json!(SCHEMA_VERSION);
    emit(format, &value, || {
        let mut s = format!(
            "n = {}, m = {}, eps = {}, omega = {}, omega_b = {}, lambda1 = {}, rho = {}\n",
            report.n,
            report.m,
            report.frustration_index,
            report.clique_number,
            report.balanced_clique_number,
            report.index,
            report.spectral_radius
        );
        s.push_str(&format!(
            "{:<16} {:<17} {:>10} {:>14} {:>14} {:>14}\n",
            "bound", "quantity", "applies", "bound", "actual", "slack"
        ));
        for r in &report.records {
            s.push_str(&format!(
                "{:<16} {:<17} {:>10} {:>14} {:>14} {:>14}{}\n",
                r.bound.name(),
                r.quantity,
                r.applicable,
                r.bound_value,
                r.actual_value,
                r.slack,
                if r.satisfied { "" } else { "  VIOLATED" }
            ));
        }
        s
    });
    Ok(if report.all_satisfied() { Outcome::Ok } else { Outcome::Failed })
}

fn canonical(format: Format, file: &Path) -> Result<Outcome, UsageError> {
    let g = read_graph(file)?;
    if g.order() > signed_turan::verify::canon::MAX_CANON_ORDER {
        return Err(anyhow::anyhow!(
            "canonical forms are limited to n <= {}",
            signed_turan::verify::canon::MAX_CANON_ORDER
        )
        .into());
    }
    let (form, normal) = canonicalize(&g);
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "form": form,
        "graph": GraphJson::from(&normal),
    });
    emit(format, &value, || to_text(&normal));
    Ok(Outcome::Ok)
}

fn theorem(
    format: Format,
    n: usize,
    mode: &str,
    jobs: Option<usize>,
    out: Option<&Path>,
) -> Result<Outcome, UsageError> {
    let mode: Mode = mode.parse()?;
    if jobs == Some(0) {
        return Err(anyhow::anyhow!("--jobs must be positive").into());
    }
    let report = verify_theorem_with_jobs(n, mode, jobs)?;
    if let Some(path) = out {
        fs::write(path, serde_json::to_string_pretty(&report)?)
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    let value = serde_json::to_value(report.without_metadata())?;
    emit(format, &value, || {
        let mut s = report.summary();
        if let Some(c) = report.radius.counterexamples.first() {
            s.push_str(&format!("first counterexample (rho = {}):\n{}", c.radius, to_text(&c.to_graph())));
        }
        s
    });
    Ok(if report.verified { Outcome::Ok } else { Outcome::Failed })
}

fn lemma22(format: Format, n_min: usize, n_max: usize) -> Result<Outcome, UsageError> {
    let report = verify_lemma22(n_min, n_max)?;
    emit(format, &serde_json::to_value(&report)?, || report.summary());
    Ok(if report.all_hold { Outcome::Ok } else { Outcome::Failed })
}

fn search(format: Format, n: usize, k: usize, iters: u64, seed: u64) -> Result<Outcome, UsageError> {
    let report = extremal_search(n, k, iters, seed)?;
    emit(format, &serde_json::to_value(&report)?, || {
        let g = SignedGraph::try_from(report.best.clone()).expect("search returns a valid graph");
        format!(
            "n = {}, k = {}, seed = {}, {} iterations ({} accepted)\nstart rho = {}\nbest rho = {} (lambda1 = {})\n{}",
            report.n,
            report.k,
            report.seed,
            report.iterations,
            report.accepted_moves,
            report.start_radius,
            report.best_radius,
            report.best_index,
            to_text(&g)
        )
    });
    Ok(Outcome::Ok)
}

fn run(cli: Cli) -> Result<Outcome, UsageError> {
    let f = cli.format;
    match cli.command {
        Command::Spectrum { file } => spectrum(f, &file),
        Command::Construct { family, n, out } => construct(&family, n, out.as_deref()),
        Command::CheckFree { k, file } => check_free(f, k, &file),
        Command::Frustration { file } => frustration(f, &file),
        Command::Bounds { file } => bounds(f, &file),
        Command::Canonicalize { file } => canonical(f, &file),
        Command::Verify { what: VerifyCommand::Theorem { n, mode, jobs, out } } => {
            theorem(f, n, &mode, jobs, out.as_deref())
        }
        Command::Verify { what: VerifyCommand::Lemma22 { n_min, n_max } } => lemma22(f, n_min, n_max),
        Command::Search { n, k, iters, seed } => search(f, n, k, iters, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(UsageError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
