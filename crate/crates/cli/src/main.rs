//! `mintough`: command-line access to the toughness toolkit.
//!
//! Exit codes: 0 success, 1 a check was falsified, 2 usage error, 3 input
//! parse error, 4 resource budget exceeded.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mintough::corpus::{census, read_graph6_stream, run_checks, Check, CorpusReport, OnError};
use mintough::embedding::{embed_minimally_t_tough, AlphaCriticalBudget, EmbedConfig, EmbeddingError};
use mintough::graph::{EdgeId, Graph, MAX_GRAPH6_ORDER};
use mintough::minimality::{is_minimally_t_tough, witness_1tough, MinimalityError};
use mintough::toughness::toughness_exact;
use mintough::Rational;

use input::GraphInput;

/// Failures mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    Falsified(String),
    Usage(String),
    Parse(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Falsified(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Parse(_) => 3,
            Failure::Budget(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Falsified(m) | Failure::Usage(m) | Failure::Parse(m) | Failure::Budget(m) => m,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Parser, Debug)]
#[command(name = "mintough", version, about = "Exact toughness computations on small graphs")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Worker threads (0 = one per core)
    #[arg(long, env = "MINTOUGH_WORKERS", default_value_t = 0, global = true)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Toughness and every tough set
    Tau {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Decide minimal t-toughness with per-edge witnesses
    Minimal {
        /// Target toughness as "a/b" or "a"
        #[arg(short, long, value_parser = parse_t)]
        t: Rational,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Witness set S(e) and k(e) for an edge of a 1-tough graph
    Witness {
        /// Edge as "u,v"
        #[arg(short, long, value_parser = parse_pair)]
        e: (usize, usize),
        #[command(flatten)]
        input: GraphInput,
    },
    /// Embed a graph into a minimally t-tough host
    Embed {
        #[arg(short, long, value_parser = parse_t)]
        t: Rational,
        /// Largest host order (graph6 output needs at most 62)
        #[arg(long, default_value_t = MAX_GRAPH6_ORDER)]
        max_host: usize,
        /// Most vertices the alpha-critical search may add
        #[arg(long, default_value_t = AlphaCriticalBudget::default().max_added)]
        max_added: usize,
        /// Most candidate supergraphs the alpha-critical search may test
        #[arg(long, default_value_t = AlphaCriticalBudget::default().max_candidates)]
        max_candidates: u64,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Run the theorem checks over a corpus
    Corpus {
        /// Enumerate every graph on 1..=K vertices (K <= 7); with --g6, keep
        /// only graphs of order <= K
        #[arg(long, value_name = "K")]
        max_n: Option<usize>,
        /// Read graphs from a graph6 file instead of enumerating
        #[arg(long, value_name = "FILE")]
        g6: Option<PathBuf>,
        /// Comma-separated checks, or "all"
        #[arg(long, default_value = "all", value_parser = parse_checks)]
        checks: CheckList,
        /// Log and skip malformed graph6 lines instead of stopping
        #[arg(long)]
        skip_bad_lines: bool,
    },
    /// First induced claw, if any
    Claw {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Vertex connectivity and a minimum vertex cut
    Kappa {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Independence number, a maximum independent set and alpha-criticality
    Alpha {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Hamiltonian cycle search
    Ham {
        #[command(flatten)]
        input: GraphInput,
    },
}

fn parse_t(text: &str) -> Result<Rational, String> {
    Rational::parse_positive(text).map_err(|e| e.to_string())
}

fn parse_pair(text: &str) -> Result<(usize, usize), String> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| format!("expected \"u,v\", got {text:?}"))?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|e| format!("{s:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

#[derive(Clone, Debug)]
struct CheckList(Vec<Check>);

fn parse_checks(text: &str) -> Result<CheckList, String> {
    Check::parse_list(text).map(CheckList).map_err(|e| e.to_string())
}

fn edge(g: &Graph, (u, v): (usize, usize)) -> Result<EdgeId, Failure> {
    EdgeId::new(g, u, v).map_err(|e| Failure::Usage(e.to_string()))
}

fn set_list(s: impl IntoIterator<Item = usize>) -> String {
    let items: Vec<String> = s.into_iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

/// Rendered output: JSON plus an optional plain-text form.
struct Output {
    json: Value,
    plain: String,
    csv: Option<String>,
}

impl Output {
    fn new(json: Value, plain: String) -> Self {
        Output { json, plain, csv: None }
    }

    fn render(self, format: Format) -> Result<String, Failure> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.json).expect("valid JSON") + "\n"),
            Format::Plain => Ok(self.plain),
            Format::Csv => self
                .csv
                .ok_or_else(|| Failure::Usage("CSV output is only available for the corpus subcommand".into())),
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serialisable")
}

fn tau(input: &GraphInput) -> Result<Output, Failure> {
    let g = input.load()?;
    let cert = toughness_exact(&g);
    let mut plain = format!(
        "tau: {}\n",
        if cert.disconnected {
            "0 (disconnected)".into()
        } else {
            cert.value.to_string()
        }
    );
    for s in &cert.tough_sets {
        plain += &format!("tough set: {}\n", set_list(s.iter()));
    }
    Ok(Output::new(to_json(&cert), plain))
}

fn minimal(input: &GraphInput, t: Rational) -> Result<Output, Failure> {
    let g = input.load()?;
    let report = is_minimally_t_tough(&g, t).map_err(|e| Failure::Falsified(e.to_string()))?;
    let mut plain = format!("t: {}\ntau: {}\nminimal: {}\n", report.t, report.tau, report.is_minimal);
    for v in &report.per_edge {
        plain += &format!("edge {}: tau(G-e) = {}", v.edge, v.tau_minus_e);
        if let Some(s) = v.witness {
            plain += &format!(", S = {}", set_list(s.iter()));
        }
        if let Some(k) = v.k {
            plain += &format!(", k = {k}");
        }
        plain.push('\n');
    }
    Ok(Output::new(to_json(&report), plain))
}

fn witness(input: &GraphInput, pair: (usize, usize)) -> Result<Output, Failure> {
    let g = input.load()?;
    let e = edge(&g, pair)?;
    let s = witness_1tough(&g, e).map_err(|err| match err {
        MinimalityError::ClaimViolation { .. } => Failure::Falsified(err.to_string()),
        other => Failure::Usage(other.to_string()),
    })?;
    let plain = format!("edge {e}: S = {}, k = {}\n", set_list(s.iter()), s.len());
    Ok(Output::new(json!({ "e": e, "S": s, "k": s.len() }), plain))
}

fn embed(input: &GraphInput, t: Rational, config: EmbedConfig) -> Result<Output, Failure> {
    let g = input.load()?;
    let result = embed_minimally_t_tough(&g, t, config).map_err(|e| match e {
        EmbeddingError::ConstructionBug { .. } => Failure::Falsified(e.to_string()),
        e if e.is_budget() => Failure::Budget(e.to_string()),
        e => Failure::Usage(e.to_string()),
    })?;
    let plain = format!(
        "t: {}\nhost: {}\nmap: {:?}\npruned edges: {}\n",
        t,
        result.host.reproducer(),
        result.map,
        result.pruned_edges.len()
    );
    Ok(Output::new(to_json(&result), plain))
}

fn corpus(
    max_n: Option<usize>,
    g6: Option<&PathBuf>,
    checks: &[Check],
    skip_bad_lines: bool,
    workers: usize,
) -> Result<(Output, bool), Failure> {
    let graphs: Vec<Graph> = match (g6, max_n) {
        (Some(path), limit) => {
            let mode = if skip_bad_lines {
                OnError::Skip
            } else {
                OnError::FailFast
            };
            let mut stream = read_graph6_stream(path, mode)
                .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
            let mut graphs = Vec::new();
            for item in stream.by_ref() {
                let item = item.map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
                if limit.is_none_or(|k| item.graph.order() <= k) {
                    graphs.push(item.graph);
                }
            }
            for err in stream.skipped() {
                eprintln!("skipped {}: {err}", path.display());
            }
            graphs
        }
        (None, Some(k)) => census(k).map_err(|e| Failure::Budget(e.to_string()))?,
        (None, None) => return Err(Failure::Usage("corpus needs --max-n or --g6".into())),
    };
    let report = run_checks(&graphs, checks, workers);
    let ok = report.all_passed();
    let mut out = Output::new(to_json(&report), plain_report(&report));
    out.csv = Some(report.to_csv());
    Ok((out, ok))
}

fn plain_report(report: &CorpusReport) -> String {
    let mut out = String::new();
    for (n, c) in &report.per_n {
        out += &format!(
            "n = {n}: {} graphs, {} connected, {} minimally 1-tough, {} claw-free\n",
            c.graphs, c.connected, c.minimally_1_tough, c.claw_free
        );
    }
    for t in &report.tallies {
        out += &format!(
            "n = {} {}: {} applicable, {} passed, {} failed\n",
            t.n, t.check, t.applicable, t.passed, t.failed
        );
    }
    for f in &report.falsifications {
        out += &format!("FALSIFIED {} on {}: {}\n", f.check, f.graph6, f.detail);
    }
    for c in &report.conjectures {
        out += &format!("{}: {}\n", c.check, c.summary);
    }
    out
}

fn claw(input: &GraphInput) -> Result<Output, Failure> {
    let g = input.load()?;
    let found = g.find_claw();
    let plain = match found {
        Some(c) => format!("claw: center {} leaves {:?}\n", c.center, c.leaves),
        None => "claw-free\n".into(),
    };
    Ok(Output::new(
        json!({ "claw_free": found.is_none(), "claw": found }),
        plain,
    ))
}

fn kappa(input: &GraphInput) -> Result<Output, Failure> {
    let g = input.load()?;
    let cut = g.min_vertex_cut();
    let k = g.vertex_connectivity();
    let plain = match cut {
        Some(s) => format!("kappa: {k}\nminimum cut: {}\n", set_list(s.iter())),
        None => format!("kappa: {k} (complete graph)\n"),
    };
    Ok(Output::new(json!({ "kappa": k, "min_cut": cut }), plain))
}

fn alpha(input: &GraphInput) -> Result<Output, Failure> {
    let g = input.load()?;
    let (a, set) = g.independence_number();
    let crit = g.alpha_criticality();
    let plain = format!(
        "alpha: {a}\nindependent set: {}\nalpha-critical: {}\n",
        set_list(set.iter()),
        crit.critical
    );
    Ok(Output::new(
        json!({
            "alpha": a,
            "independent_set": set,
            "alpha_critical": crit.critical,
            "non_critical_edges": crit.non_critical_edges,
        }),
        plain,
    ))
}

fn ham(input: &GraphInput) -> Result<Output, Failure> {
    let g = input.load()?;
    let cycle = g.hamiltonian_cycle().map_err(|e| Failure::Usage(e.to_string()))?;
    let plain = match &cycle {
        Some(c) => format!("hamiltonian: true\ncycle: {c:?}\n"),
        None => "hamiltonian: false\n".into(),
    };
    Ok(Output::new(
        json!({ "hamiltonian": cycle.is_some(), "cycle": cycle }),
        plain,
    ))
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    if cli.workers > 0 {
        // Ignore the error from a second initialisation (only possible in tests).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build_global();
    }
    let mut ok = true;
    let output = match &cli.command {
        Command::Tau { input } => tau(input)?,
        Command::Minimal { t, input } => minimal(input, *t)?,
        Command::Witness { e, input } => witness(input, *e)?,
        Command::Embed {
            t,
            max_host,
            max_added,
            max_candidates,
            input,
        } => {
            let config = EmbedConfig {
                max_host_order: *max_host,
                alpha_critical: AlphaCriticalBudget {
                    max_added: *max_added,
                    max_candidates: *max_candidates,
                },
            };
            embed(input, *t, config)?
        }
        Command::Corpus {
            max_n,
            g6,
            checks,
            skip_bad_lines,
        } => {
            let (out, passed) = corpus(*max_n, g6.as_ref(), &checks.0, *skip_bad_lines, cli.workers)?;
            ok = passed;
            out
        }
        Command::Claw { input } => claw(input)?,
        Command::Kappa { input } => kappa(input)?,
        Command::Alpha { input } => alpha(input)?,
        Command::Ham { input } => ham(input)?,
    };
    Ok((output.render(cli.format)?, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: at least one check was falsified");
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
