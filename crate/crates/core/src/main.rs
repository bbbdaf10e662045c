use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use indgap::hereditary::catalog::{mine_with_budget, MINING_BUDGET};
use indgap::hereditary::{find_claw_or_two_p3, recognize_hereditary_gap_at_most, ForbiddenCatalog};
use indgap::hereditary::induced::ClawOr2P3;
use indgap::io::{parse_edge_list, parse_graph6_lines, to_graph6};
use indgap::oracles::{self, HEREDITARY_CAP};
use indgap::partitions::{certify_gap_at_most, find_alpha_clique_partition, is_k_tight, CliquePartition};
use indgap::reductions::{
    build_gap1_gadget, reduce_is_to_hereditary_gap, reduce_wellcovered_to_gap, verify_gadget_claims_with,
    verify_star_union_reduction, verify_universal_reduction, OracleBudget,
};
use indgap::selftest::{run_suite, Suite};
use indgap::{Error, Graph, VertexSet};

const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

/// Default vertex cap for oracle-backed commands; `GRAPH_CAP` overrides it.
const DEFAULT_GRAPH_CAP: usize = 64;

#[derive(Parser)]
#[command(name = "indgap", version, about = "Independence gap analysis of small graphs")]
struct Cli {
    /// Input format.
    #[arg(long, value_enum, default_value_t = Format::Graph6, global = true)]
    format: Format,
    /// Emit one JSON object per line instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write results here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct Input {
    /// Input file, or "-" for standard input.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Report α, i, gap, ω, θ and witnesses for every input graph.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Test whether a clique partition is k-tight.
    CheckTight {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        /// Cliques separated by ';', vertices by ',' (e.g. "0,1;2").
        /// Defaults to an α-clique partition.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Decide a property for every input graph.
    Recognize {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        k: Option<usize>,
        /// Clique bound p: route the gap test through bounded certification
        /// on K_p-free graphs.
        #[arg(long)]
        p: Option<usize>,
        /// Persisted catalog for the hereditary mode.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Order up to which a catalog is mined when none is given.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Mine minimal forbidden induced subgraphs for hereditary gap at most k.
    Mine {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = MINING_BUDGET)]
        budget: usize,
    },
    /// Build a reduction gadget for every input graph.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        kind: ReductionKind,
        #[arg(long)]
        k: usize,
        /// Star size for the star-union reduction (default k + 1).
        #[arg(long)]
        star_leaves: Option<usize>,
    },
    /// Check the iff-properties of a reduction on every input graph.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        kind: ReductionKind,
        #[arg(long)]
        k: usize,
    },
    /// Run the exhaustive self-test suites.
    Selftest {
        /// Suites to run (default: all).
        #[arg(long = "suite", value_parser = parse_suite)]
        suites: Vec<Suite>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Values of k for suites that take one (repeatable).
        #[arg(long = "k")]
        ks: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Gap,
    Hereditary,
    WellCovered,
    SemiPerfect,
    #[value(name = "claw-2p3-free")]
    Claw2p3Free,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionKind {
    Star,
    Gadget,
    Universal,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure that ends the run with a specific exit code.
struct Fatal {
    code: u8,
    message: String,
}

impl From<Error> for Fatal {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => EXIT_CAPACITY,
            _ => EXIT_INPUT,
        };
        Fatal {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Fatal {
    fn from(e: io::Error) -> Self {
        Error::from(e).into()
    }
}

type CliResult<T> = Result<T, Fatal>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("indgap: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn graph_cap() -> CliResult<usize> {
    match std::env::var("GRAPH_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| Fatal {
            code: EXIT_INPUT,
            message: format!("GRAPH_CAP must be a non-negative integer, got {v:?}"),
        }),
        Err(_) => Ok(DEFAULT_GRAPH_CAP),
    }
}

fn read_graphs(input: &Input, format: Format, cap: usize) -> CliResult<Vec<Graph>> {
    let text = if input.input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&input.input).map_err(|e| Fatal {
            code: EXIT_INPUT,
            message: format!("{}: {e}", input.input),
        })?
    };
    let graphs = match format {
        Format::Graph6 => parse_graph6_lines(&text)
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                r.map_err(|e| Fatal {
                    code: EXIT_INPUT,
                    message: format!("graph {}: {e}", i + 1),
                })
            })
            .collect::<CliResult<Vec<_>>>()?,
        Format::Edgelist if text.trim().is_empty() => Vec::new(),
        Format::Edgelist => vec![parse_edge_list(&text)?],
    };
    if let Some(g) = graphs.iter().find(|g| g.n() > cap) {
        return Err(Error::capacity("input vertex count (GRAPH_CAP)", g.n(), cap).into());
    }
    Ok(graphs)
}

struct Sink {
    out: Box<dyn Write>,
    json: bool,
}

impl Sink {
    fn open(path: Option<&Path>, json: bool) -> CliResult<Sink> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
            None => Box::new(io::BufWriter::new(io::stdout().lock())),
        };
        Ok(Sink { out, json })
    }

    /// One record: the JSON object in `--json` mode, `text` otherwise.
    fn emit(&mut self, value: &Value, text: &str) -> CliResult<()> {
        if self.json {
            writeln!(self.out, "{value}")?;
        } else {
            writeln!(self.out, "{text}")?;
        }
        Ok(())
    }
}

/// Per-graph outcome: a record, or an error that aborts the run.
type Row = CliResult<(Value, String, bool)>;

/// Evaluates `f` on every graph in parallel and writes the rows in input
/// order. Returns whether every row reported success.
fn for_each_graph<F>(graphs: &[Graph], sink: &mut Sink, f: F) -> CliResult<bool>
where
    F: Fn(&Graph) -> Row + Sync,
{
    let rows: Vec<Row> = graphs.par_iter().map(&f).collect();
    let mut all_ok = true;
    for (i, row) in rows.into_iter().enumerate() {
        let (mut value, text, ok) = row?;
        if let Value::Object(map) = &mut value {
            map.insert("index".into(), json!(i));
            map.insert("graph6".into(), json!(to_graph6(&graphs[i])));
        }
        sink.emit(&value, &format!("{}\t{text}", to_graph6(&graphs[i])))?;
        all_ok &= ok;
    }
    Ok(all_ok)
}

fn run(cli: Cli) -> CliResult<u8> {
    let mut sink = Sink::open(cli.output.as_deref(), cli.json)?;
    let cap = graph_cap()?;
    let code = match cli.command {
        Command::Analyze { input } => {
            let graphs = read_graphs(&input, cli.format, cap)?;
            for_each_graph(&graphs, &mut sink, analyze)?;
            0
        }
        Command::CheckTight { input, k, partition } => {
            let graphs = read_graphs(&input, cli.format, cap)?;
            for_each_graph(&graphs, &mut sink, |g| check_tight(g, k, partition.as_deref()))?;
            0
        }
        Command::Recognize {
            input,
            mode,
            k,
            p,
            catalog,
            max_n,
        } => {
            let graphs = read_graphs(&input, cli.format, cap)?;
            let need_k = || {
                k.ok_or_else(|| Fatal {
                    code: EXIT_INPUT,
                    message: "--k is required for this mode".into(),
                })
            };
            let loaded = match mode {
                Mode::Hereditary => Some(load_catalog(need_k()?, catalog.as_deref(), max_n)?),
                _ => None,
            };
            let k = match mode {
                Mode::Gap | Mode::Hereditary => Some(need_k()?),
                _ => k,
            };
            for_each_graph(&graphs, &mut sink, |g| recognize(g, mode, k, p, loaded.as_ref()))?;
            0
        }
        Command::Mine { k, max_n, budget } => mine(k, max_n, budget, cli.output.as_deref(), &mut sink)?,
        Command::Reduce {
            input,
            kind,
            k,
            star_leaves,
        } => {
            let graphs = read_graphs(&input, cli.format, cap)?;
            for_each_graph(&graphs, &mut sink, |g| {
                let a = match kind {
                    ReductionKind::Star => reduce_wellcovered_to_gap(g, k, star_leaves.unwrap_or(k + 1))?,
                    ReductionKind::Gadget => build_gap1_gadget(g, k)?,
                    ReductionKind::Universal => reduce_is_to_hereditary_gap(g, k)?,
                };
                let value = a.to_json();
                let text = format!("{}", value);
                Ok((value, text, true))
            })?;
            0
        }
        Command::Verify { input, kind, k } => {
            let graphs = read_graphs(&input, cli.format, cap)?;
            let budget = match std::env::var("GRAPH_CAP") {
                Ok(_) => OracleBudget {
                    max_vertices: cap,
                    ..OracleBudget::default()
                },
                Err(_) => OracleBudget::default(),
            };
            let ok = for_each_graph(&graphs, &mut sink, |g| verify(g, kind, k, budget))?;
            if ok {
                0
            } else {
                EXIT_FAILURE
            }
        }
        Command::Selftest { suites, max_n, ks } => selftest(&suites, max_n, &ks, &mut sink)?,
    };
    sink.out.flush()?;
    Ok(code)
}

fn members(s: &VertexSet) -> Vec<usize> {
    s.iter().collect()
}

fn analyze(g: &Graph) -> Row {
    let r = oracles::gap_report(g)?;
    let mut value = serde_json::to_value(&r).expect("plain data");
    let hereditary = if g.n() <= HEREDITARY_CAP {
        Some(oracles::hereditary_independence_gap(g)?)
    } else {
        None
    };
    value["well_covered"] = json!(r.gap == 0);
    value["hereditary_gap"] = json!(hereditary);
    let text = format!(
        "n={} alpha={} i={} gap={} omega={} theta={} semi_perfect={} hereditary_gap={} I1={:?} I2={:?}",
        g.n(),
        r.alpha,
        r.idom,
        r.gap,
        r.omega,
        r.theta,
        r.semi_perfect,
        hereditary.map_or("skipped".to_string(), |h| h.to_string()),
        members(&r.witnesses.i1),
        members(&r.witnesses.i2),
    );
    Ok((value, text, true))
}

fn parse_partition(g: &Graph, text: &str) -> Result<CliquePartition, Error> {
    let mut cliques = Vec::new();
    for part in text.split(';') {
        let vs = part
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parameter(format!("bad vertex {t:?} in partition"))))
            .collect::<Result<Vec<_>, _>>()?;
        cliques.push(VertexSet::from_members(g.n(), vs)?);
    }
    Ok(CliquePartition::new(cliques))
}

fn inapplicable(reason: String) -> Row {
    let text = format!("inapplicable: {reason}");
    Ok((json!({ "verdict": "inapplicable", "reason": reason }), text, true))
}

fn check_tight(g: &Graph, k: usize, partition: Option<&str>) -> Row {
    let p = match partition {
        Some(text) => parse_partition(g, text)?,
        None => match find_alpha_clique_partition(g)? {
            Some(p) => p,
            None => return inapplicable("graph is not semi-perfect; no α-clique partition".into()),
        },
    };
    let cert = is_k_tight(g, &p, k)?;
    let mut value = serde_json::to_value(&cert).expect("plain data");
    value["partition"] = serde_json::to_value(&p).expect("plain data");
    let text = match (&cert.witness_cliques, &cert.witness_set) {
        (Some(j), Some(s)) => format!("not {k}-tight: cliques {j:?} avoided, witness {:?}", members(s)),
        _ => format!("{k}-tight"),
    };
    Ok((value, text, true))
}

/// Default mining order: large enough for the star and the disjoint paths,
/// but kept to seven vertices beyond k = 1.
fn default_catalog_order(k: usize) -> usize {
    (3 * (k + 1)).min(7).max(k + 3)
}

fn load_catalog(k: usize, path: Option<&Path>, max_n: Option<usize>) -> CliResult<ForbiddenCatalog> {
    match path {
        Some(p) => {
            let c = ForbiddenCatalog::load(p)?;
            if c.k != k {
                return Err(Error::Parameter(format!("catalog is for k={}, requested k={k}", c.k)).into());
            }
            Ok(c)
        }
        None => Ok(mine_with_budget(k, max_n.unwrap_or_else(|| default_catalog_order(k)), MINING_BUDGET)?),
    }
}

fn verdict_row(verdict: bool, extra: Value) -> Row {
    let mut value = json!({ "verdict": verdict });
    if let (Value::Object(m), Value::Object(e)) = (&mut value, extra) {
        m.extend(e);
    }
    Ok((value, verdict.to_string(), true))
}

fn recognize(g: &Graph, mode: Mode, k: Option<usize>, p: Option<usize>, catalog: Option<&ForbiddenCatalog>) -> Row {
    match mode {
        Mode::Gap => {
            let k = k.expect("checked");
            match p {
                Some(p) => {
                    let Some(part) = find_alpha_clique_partition(g)? else {
                        return inapplicable("graph is not semi-perfect".into());
                    };
                    match certify_gap_at_most(g, &part, k, p) {
                        Ok(cert) => verdict_row(cert.verdict, serde_json::to_value(&cert).expect("plain data")),
                        Err(Error::Precondition(reason)) => inapplicable(reason),
                        Err(e) => Err(e.into()),
                    }
                }
                None => verdict_row(oracles::independence_gap(g)? <= k, json!({})),
            }
        }
        Mode::Hereditary => {
            let c = catalog.expect("loaded");
            let r = recognize_hereditary_gap_at_most(g, c);
            let witness = r.witness.as_ref().map(|(form, s)| json!({ "member": form, "vertices": s }));
            let mut row = verdict_row(r.verdict, json!({ "provisional": r.provisional, "witness": witness }))?;
            if r.provisional {
                row.1.push_str(" (provisional)");
            }
            Ok(row)
        }
        Mode::WellCovered => verdict_row(oracles::is_well_covered(g)?, json!({})),
        Mode::SemiPerfect => {
            let verdict = oracles::clique_cover_number(g)? == oracles::independence_number(g)?;
            verdict_row(verdict, json!({}))
        }
        Mode::Claw2p3Free => {
            let found = find_claw_or_two_p3(g);
            let witness = match &found {
                Some(ClawOr2P3::Claw(s)) => json!({ "claw": s }),
                Some(ClawOr2P3::TwoP3(s)) => json!({ "two_p3": s }),
                None => Value::Null,
            };
            verdict_row(found.is_none(), json!({ "witness": witness }))
        }
    }
}

fn verify(g: &Graph, kind: ReductionKind, k: usize, budget: OracleBudget) -> Row {
    let (value, ok) = match kind {
        ReductionKind::Gadget => {
            let a = build_gap1_gadget(g, k)?;
            let claims = verify_gadget_claims_with(&a, g, k, budget)?;
            let ok = claims.all_hold();
            (serde_json::to_value(&claims).expect("plain data"), ok)
        }
        ReductionKind::Star => {
            let r = verify_star_union_reduction(g, k)?;
            let ok = r.iff_with_k_plus_1_leaves;
            (serde_json::to_value(&r).expect("plain data"), ok)
        }
        ReductionKind::Universal => {
            let r = verify_universal_reduction(g, k)?;
            let ok = r.holds;
            (serde_json::to_value(&r).expect("plain data"), ok)
        }
    };
    let text = format!("{} {value}", if ok { "pass" } else { "FAIL" });
    Ok((value, text, ok))
}

fn mine(k: usize, max_n: usize, budget: usize, output: Option<&Path>, sink: &mut Sink) -> CliResult<u8> {
    let c = mine_with_budget(k, max_n, budget)?;
    let meta = serde_json::to_value(c.meta()).expect("plain data");
    match output {
        Some(path) => {
            // The output file holds the catalog itself; the summary goes to stdout.
            c.save(path)?;
            let summary = json!({ "meta": meta, "members": c.member_forms(), "path": path });
            println!("{}", if sink.json { summary.to_string() } else { catalog_text(&c) });
            sink.out = Box::new(io::sink());
        }
        None => {
            let value = json!({ "meta": meta, "members": c.member_forms() });
            sink.emit(&value, &catalog_text(&c))?;
        }
    }
    Ok(0)
}

fn catalog_text(c: &ForbiddenCatalog) -> String {
    let mut s = format!(
        "k={} max_n={} members={} derived_bound={} complete={}",
        c.k,
        c.max_n,
        c.members.len(),
        c.derived_bound,
        c.complete_flag
    );
    for f in c.member_forms() {
        s.push('\n');
        s.push_str(&f);
    }
    s
}

fn selftest(suites: &[Suite], max_n: Option<usize>, ks: &[usize], sink: &mut Sink) -> CliResult<u8> {
    let suites: Vec<Suite> = if suites.is_empty() { Suite::ALL.to_vec() } else { suites.to_vec() };
    let mut all = true;
    for s in suites {
        let out = run_suite(s, max_n, ks)?;
        all &= out.passed();
        let mut text = format!(
            "{} {}: {} cases up to n={} in {:.2?}",
            if out.passed() { "PASS" } else { "FAIL" },
            out.suite,
            out.checked,
            out.max_n,
            out.elapsed
        );
        for n in &out.notes {
            text.push_str(&format!("\n  note: {n}"));
        }
        for f in out.failures.iter().take(10) {
            text.push_str(&format!("\n  counterexample {}: {}", f.graph6, f.detail));
        }
        sink.emit(&serde_json::to_value(&out).expect("plain data"), &text)?;
        sink.out.flush()?;
    }
    Ok(if all { 0 } else { EXIT_FAILURE })
}
