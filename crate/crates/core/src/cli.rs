//! The `turan` command line. Every subcommand prints one JSON document on
//! stdout; diagnostics go to stderr. Exit codes: 0 success, 1 negative
//! verdict, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::construct::{best_construction, construct_variant, Attempt, ConstructionReport, Variant};
use crate::family::GraphFamily;
use crate::formula::{f_max, predicted_maximizers, ResidueBranch};
use crate::freeness::{contains_subgraph_budgeted, contains_suspension_budgeted, SearchOutcome};
use crate::graph::{canonical_form_with_cap, parse_graph6, suspension, write_graph6, Graph};
use crate::oracle::{decomposition_family_bruteforce, ex_bruteforce, EX_CAP, EX_PRUNED_CAP};
use crate::tree::{
    certify_tree, check_decomposition, decompose_bruteforce, decompose_lemma4, parse_parent_array, s_hat_family, Tree,
};

/// Default largest `n` for which `verify --oracle` runs the exhaustive search.
pub const DEFAULT_ORACLE_CAP: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "turan", version, about = "Turán numbers of suspensions of balanced trees")]
pub struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// JSON only: suppress the human-readable table on stderr.
    #[arg(long, global = true)]
    json: bool,
    /// Node-expansion budget for each containment search.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Largest n for exhaustive oracle runs.
    #[arg(long, global = true)]
    oracle_cap: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate f(n, k) by scanning every split.
    Formula { n: u64, k: u64 },
    /// Build a lower-bound construction and certify it.
    Construct {
        n: usize,
        /// Tree file (.g6 or .tree parent array).
        tree: PathBuf,
        /// Prop4, Prop5, Prop6, Case2DoubleMatching, Case2TwoRegularMatching or SmallSideMatching.
        #[arg(long)]
        variant: Option<String>,
        /// Write the graph certificate here (graph6, or an edge list above 62 vertices).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Independent set whose removal leaves components of at most k - a + 1 vertices.
    Decompose {
        tree: PathBuf,
        a: usize,
        /// Use the exhaustive search instead of the inductive construction.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Suspensions of coverings of size at most k, plus the tree, and their minimal elements.
    Family { tree: PathBuf },
    /// Search a host graph for a tree or, with --suspension, for its suspension.
    Check {
        /// Host file (.g6, otherwise an edge list).
        host: PathBuf,
        tree: PathBuf,
        #[arg(long)]
        suspension: bool,
    },
    /// Exhaustive searches.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Construction, certification and optional oracle for every n in a range.
    Verify {
        tree: PathBuf,
        n_min: usize,
        n_max: usize,
        /// Also compute ex(n, suspension) exhaustively where n is within the oracle cap.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// ex(n, family) with all extremal graphs.
    Ex {
        n: usize,
        /// Family members (.g6 files may hold several graphs, one per line).
        #[arg(required = true)]
        family: Vec<PathBuf>,
        /// Do not extend graphs that already contain a member.
        #[arg(long)]
        prune: bool,
        /// Replace every member by its suspension.
        #[arg(long)]
        suspend: bool,
    },
    /// Minimal graphs whose placement in one side of a large K_{N,N} creates the suspension.
    DecompFamily {
        tree: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
    },
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let g = &cli.global;
    match &cli.command {
        Command::Formula { n, k } => cmd_formula(*n, *k, out),
        Command::Construct {
            n,
            tree,
            variant,
            out: file,
        } => cmd_construct(
            *n,
            &read_tree(tree)?,
            variant.as_deref(),
            file.as_deref(),
            g.budget,
            out,
        ),
        Command::Decompose { tree, a, bruteforce } => cmd_decompose(&read_tree(tree)?, *a, *bruteforce, out),
        Command::Family { tree } => cmd_family(&read_tree(tree)?, out),
        Command::Check { host, tree, suspension } => {
            cmd_check(&read_host(host)?, &read_tree(tree)?, *suspension, g.budget, out)
        }
        Command::Oracle { command } => match command {
            OracleCommand::Ex {
                n,
                family,
                prune,
                suspend,
            } => {
                let cap = g.oracle_cap.unwrap_or(if *prune { EX_PRUNED_CAP } else { EX_CAP });
                if *n > cap {
                    bail!("n = {n} exceeds the oracle cap {cap}");
                }
                let mut members = Vec::new();
                for path in family {
                    members.extend(read_graphs(path)?);
                }
                if *suspend {
                    members = members.iter().map(suspension).collect();
                }
                let family = GraphFamily::from_graphs(&members)?;
                let r = with_threads(g.threads, || Ok(ex_bruteforce(*n, &family, *prune)?))?;
                emit(out, &r)?;
                Ok(0)
            }
            OracleCommand::DecompFamily { tree, max_vertices } => {
                let t = read_tree(tree)?;
                let family = with_threads(g.threads, || Ok(decomposition_family_bruteforce(&t, *max_vertices)?))?;
                cmd_oracle_decomp_family(&t, *max_vertices, family, out)
            }
        },
        Command::Verify {
            tree,
            n_min,
            n_max,
            oracle,
        } => {
            let t = read_tree(tree)?;
            let cap = g.oracle_cap.unwrap_or(DEFAULT_ORACLE_CAP);
            let report = with_threads(g.threads, || {
                cmd_verify(&t, *n_min, *n_max, oracle.then_some(cap), g.budget)
            })?;
            if !g.json {
                write_table(&report, err)?;
            }
            emit(out, &report)?;
            Ok(if report.summary.ok { 0 } else { 1 })
        }
    }
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> anyhow::Result<T> + Send) -> anyhow::Result<T> {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .context("building the thread pool")?
            .install(f),
        None => f(),
    }
}

/// Version of the JSON layout, stamped on every document.
pub const SCHEMA_VERSION: u32 = 1;

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> anyhow::Result<()> {
    let mut doc = serde_json::to_value(value)?;
    if let Some(map) = doc.as_object_mut() {
        map.insert("schema_version".into(), SCHEMA_VERSION.into());
    }
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)?;
    Ok(())
}

/// Reads a tree: `.g6` as graph6 (first non-empty line), `.tree` as a
/// parent array.
pub fn read_tree(path: &Path) -> anyhow::Result<Tree> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let tree = match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .context("empty graph6 file")?;
            certify_tree(&parse_graph6(line.as_bytes())?)?
        }
        Some("tree") => parse_parent_array(&text)?,
        _ => bail!("tree files need a .g6 or .tree extension: {}", path.display()),
    };
    Ok(tree)
}

fn read_graphs(path: &Path) -> anyhow::Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if path.extension().and_then(|e| e.to_str()) == Some("g6") {
        let graphs = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| parse_graph6(l.as_bytes()))
            .collect::<Result<Vec<_>, _>>()?;
        if graphs.is_empty() {
            bail!("no graphs in {}", path.display());
        }
        Ok(graphs)
    } else {
        Ok(vec![Graph::parse_edge_list(&text)?])
    }
}

/// Reads a host graph: `.g6` as graph6, anything else as an edge list.
pub fn read_host(path: &Path) -> anyhow::Result<Graph> {
    let mut graphs = read_graphs(path)?;
    if graphs.len() != 1 {
        bail!("{} holds {} graphs, expected one", path.display(), graphs.len());
    }
    Ok(graphs.remove(0))
}

/// graph6 when it fits the short form, otherwise an edge list.
pub fn certificate(g: &Graph) -> String {
    if g.n() <= crate::graph::MAX_SHORT_N {
        String::from_utf8(write_graph6(g)).expect("graph6 is ASCII")
    } else {
        g.to_edge_list()
    }
}

fn cmd_formula(n: u64, k: u64, out: &mut dyn Write) -> anyhow::Result<i32> {
    let f = f_max(n, k)?;
    emit(
        out,
        &json!({
            "n": n,
            "k": k,
            "value": f.value,
            "maximizers": f.maximizers,
            "predicted": predicted_maximizers(n, k),
            "branch": ResidueBranch::of(n, k).label(),
        }),
    )?;
    Ok(0)
}

#[derive(Serialize)]
struct ConstructOutput<'a> {
    n: usize,
    report: Option<&'a ConstructionReport>,
    freeness: Option<&'static str>,
    certificate: Option<String>,
    attempts: &'a [Attempt],
}

fn cmd_construct(
    n: usize,
    t: &Tree,
    variant: Option<&str>,
    file: Option<&Path>,
    budget: Option<u64>,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let (report, verdict, attempts) = match variant {
        Some(name) => {
            let v = Variant::parse(name).with_context(|| format!("unknown variant {name}"))?;
            match construct_variant(v, n, t) {
                Ok(r) => {
                    let verdict = contains_suspension_budgeted(&r.graph, t, budget).label();
                    (Some(r), Some(verdict), Vec::new())
                }
                Err(e) => (
                    None,
                    None,
                    vec![Attempt {
                        variant: v.name(),
                        accepted: false,
                        reason: e.to_string(),
                    }],
                ),
            }
        }
        None => {
            let d = best_construction(n, t, budget)?;
            let verdict = d.report.as_ref().map(|_| "absent");
            (d.report, verdict, d.attempts)
        }
    };
    let cert = report.as_ref().map(|r| certificate(&r.graph));
    if let (Some(path), Some(text)) = (file, &cert) {
        std::fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display()))?;
    }
    emit(
        out,
        &ConstructOutput {
            n,
            report: report.as_ref(),
            freeness: verdict,
            certificate: cert,
            attempts: &attempts,
        },
    )?;
    Ok(if verdict == Some("absent") { 0 } else { 1 })
}

fn cmd_decompose(t: &Tree, a: usize, bruteforce: bool, out: &mut dyn Write) -> anyhow::Result<i32> {
    let d = if bruteforce {
        decompose_bruteforce(t, a)?
    } else {
        Some(decompose_lemma4(t, a)?)
    };
    let Some(d) = d else {
        emit(out, &json!({ "a": a, "k": t.k(), "feasible": false }))?;
        return Ok(1);
    };
    let valid = check_decomposition(t, a, &d).is_ok();
    emit(
        out,
        &json!({
            "a": a,
            "k": t.k(),
            "bound": t.k() + 1 - a,
            "feasible": true,
            "valid": valid,
            "independent_set": d.independent_set,
            "components": d.components,
        }),
    )?;
    Ok(if valid { 0 } else { 1 })
}

fn cmd_family(t: &Tree, out: &mut dyn Write) -> anyhow::Result<i32> {
    let f = s_hat_family(t)?;
    emit(out, &json!({ "k": t.k(), "raw": f.raw, "minimal": f.minimal }))?;
    Ok(0)
}

fn cmd_check(host: &Graph, t: &Tree, susp: bool, budget: Option<u64>, out: &mut dyn Write) -> anyhow::Result<i32> {
    let outcome = if susp {
        contains_suspension_budgeted(host, t, budget)
    } else {
        contains_subgraph_budgeted(host, t.graph(), budget)
    };
    let embedding = match &outcome {
        SearchOutcome::Found(e) => Some(e.map.clone()),
        _ => None,
    };
    emit(out, &json!({ "verdict": outcome.label(), "embedding": embedding }))?;
    Ok(if outcome.is_found() { 0 } else { 1 })
}

fn cmd_oracle_decomp_family(
    t: &Tree,
    max_vertices: usize,
    family: GraphFamily,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let minimal = s_hat_family(t)?.minimal;
    let within: GraphFamily = GraphFamily::from_graphs(minimal.graphs().filter(|g| g.n() <= max_vertices))?;
    let agrees = family == within;
    emit(
        out,
        &json!({ "max_vertices": max_vertices, "family": family, "s_hat_minimal": within, "agrees": agrees }),
    )?;
    Ok(if agrees { 0 } else { 1 })
}

/// One `n` of a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub n: usize,
    pub f_value: u64,
    pub status: RowStatus,
    pub construction_variant: Option<&'static str>,
    pub edge_count: Option<usize>,
    pub meets_target: Option<bool>,
    pub freeness_verdict: Option<&'static str>,
    pub oracle_value: Option<usize>,
    pub attempts: Vec<Attempt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    /// A certified construction met `f(n, k)`.
    Ok,
    /// A certified construction fell short of `f(n, k)`.
    BelowTarget,
    /// A certified construction had more than `f(n, k)` edges.
    ExceedsF,
    /// No variant applied, or `n` is too small for the suspension to fit.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub rows: usize,
    pub certified: usize,
    pub met_target: usize,
    pub exceeded_f: usize,
    pub not_applicable: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    /// Canonical graph6 of the tree (up to 16 vertices).
    pub tree: Option<String>,
    pub k: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub rows: Vec<VerifyRow>,
    pub summary: VerifySummary,
}

/// For each `n`: `f(n, k)`, the dispatched construction and its freeness
/// verdict, and `ex(n, suspension)` when `oracle_cap` covers `n`. Rows run
/// in parallel and come back in `n` order.
pub fn cmd_verify(
    t: &Tree,
    n_min: usize,
    n_max: usize,
    oracle_cap: Option<usize>,
    budget: Option<u64>,
) -> anyhow::Result<VerifyReport> {
    t.require_balanced()?;
    if n_min > n_max {
        bail!("empty range {n_min}..={n_max}");
    }
    let k = t.k();
    let pattern = GraphFamily::from_graphs(&[suspension(t.graph())])?;
    let rows: Vec<VerifyRow> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| -> anyhow::Result<VerifyRow> {
            let f_value = f_max(n as u64, k as u64)?.value;
            let oracle_value = match oracle_cap {
                Some(cap) if n <= cap && n <= EX_PRUNED_CAP => Some(ex_bruteforce(n, &pattern, true)?.value),
                _ => None,
            };
            let mut row = VerifyRow {
                n,
                f_value,
                status: RowStatus::NotApplicable,
                construction_variant: None,
                edge_count: None,
                meets_target: None,
                freeness_verdict: None,
                oracle_value,
                attempts: Vec::new(),
            };
            if n <= t.n() {
                row.attempts.push(Attempt {
                    variant: "all",
                    accepted: false,
                    reason: format!("n = {n} is below |T| + 1 = {}, every graph is free", t.n() + 1),
                });
                return Ok(row);
            }
            let d = best_construction(n, t, budget)?;
            row.attempts = d.attempts;
            if let Some(r) = d.report {
                row.construction_variant = Some(r.variant.name());
                row.edge_count = Some(r.edge_count);
                row.meets_target = Some(r.meets_target);
                row.freeness_verdict = Some("absent");
                row.status = match (r.edge_count as u64).cmp(&f_value) {
                    std::cmp::Ordering::Equal => RowStatus::Ok,
                    std::cmp::Ordering::Less => RowStatus::BelowTarget,
                    std::cmp::Ordering::Greater => RowStatus::ExceedsF,
                };
            }
            Ok(row)
        })
        .collect::<anyhow::Result<_>>()?;
    let count = |s: RowStatus| rows.iter().filter(|r| r.status == s).count();
    let summary = VerifySummary {
        rows: rows.len(),
        certified: rows.iter().filter(|r| r.freeness_verdict.is_some()).count(),
        met_target: count(RowStatus::Ok),
        exceeded_f: count(RowStatus::ExceedsF),
        not_applicable: count(RowStatus::NotApplicable),
        ok: count(RowStatus::ExceedsF) == 0 && count(RowStatus::BelowTarget) == 0,
    };
    Ok(VerifyReport {
        tree: (t.n() <= 16)
            .then(|| canonical_form_with_cap(t.graph(), 16).map(|c| c.to_string()))
            .transpose()?,
        k,
        n_min,
        n_max,
        rows,
        summary,
    })
}

fn write_table(r: &VerifyReport, err: &mut dyn Write) -> anyhow::Result<()> {
    writeln!(
        err,
        "{:>4} {:>7} {:>24} {:>7} {:>8} {:>7}  status",
        "n", "f", "variant", "edges", "free", "ex"
    )?;
    for row in &r.rows {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        writeln!(
            err,
            "{:>4} {:>7} {:>24} {:>7} {:>8} {:>7}  {:?}",
            row.n,
            row.f_value,
            row.construction_variant.unwrap_or("-"),
            opt(row.edge_count.map(|e| e.to_string())),
            row.freeness_verdict.unwrap_or("-"),
            opt(row.oracle_value.map(|e| e.to_string())),
            row.status,
        )?;
    }
    Ok(())
}
