use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use domlab::analysis::{
    bridges, hamiltonian_cycle, is_cubic, is_cyclically_4_edge_connected, vertex_connectivity,
    HamiltonResult,
};
use domlab::claims::run_claims;
use domlab::domination::{certified_gamma, gamma_exact, Budget, GadgetOccurrence, SolveStatus};
use domlab::families;
use domlab::gadget::{self, RootedGadget};
use domlab::graph::Graph;
use domlab::graph6::{parse_graph6, to_dot, write_graph6};
use domlab::report::{exit_code, write_report, ReportFormat};
use domlab::scan::{scan_corpus, Conjecture, ScanFilters};
use serde::Deserialize;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

/// Laboratory for domination numbers of cubic graphs: family builders,
/// exact solvers, structural analysis, claim verification, corpus scans.
#[derive(Parser)]
#[command(name = "domlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph family instance and write it to a file
    Build(BuildArgs),
    /// Run structural checks on a graph6 file
    Analyze(AnalyzeArgs),
    /// Compute the domination number of a graph6 file exactly
    Solve(SolveArgs),
    /// Run the claim registry and emit a report
    Verify(VerifyArgs),
    /// Scan a graph6 corpus against a conjectured bound
    Scan(ScanArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Family name: A,B,S,T,P,Q,W,Pi,Qi,R,L,GP,GPB,GB,M,N,petersen
    #[arg(long)]
    family: String,
    /// Family size parameter (petersen: outer cycle length n)
    #[arg(long)]
    k: Option<usize>,
    /// Variant parameter for M/N and L
    #[arg(long)]
    r: Option<usize>,
    /// Recursion depth (Pi/Qi), swap position (N), or inner step (petersen)
    #[arg(long)]
    i: Option<usize>,
    /// Base graph for GP/GPB/GB: a graph6 string, or one of k2_3 | k4 | prism
    #[arg(long)]
    base: Option<String>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = BuildFormat::G6)]
    format: BuildFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BuildFormat {
    G6,
    Dot,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Comma-separated: cubic,bridges,kappa,cyc4,hamilton
    #[arg(long, value_delimiter = ',', default_value = "cubic,bridges,kappa,cyc4,hamilton")]
    checks: Vec<String>,
    /// Seconds allowed for the Hamiltonian cycle search
    #[arg(long, default_value_t = 60)]
    budget: u64,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 300)]
    budget: u64,
    /// Occurrence sidecar (JSON) enabling the compositional certificate
    #[arg(long)]
    certify: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// "all" or a comma-separated list of claim ids
    #[arg(long, default_value = "all")]
    claims: String,
    /// Seconds per claim
    #[arg(long, default_value_t = 300)]
    budget: u64,
    #[arg(long)]
    report: PathBuf,
    #[arg(long, value_enum, default_value_t = VerifyFormat::Json)]
    format: VerifyFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    conjecture: ScanConjecture,
    #[arg(long = "kappa-min")]
    kappa_min: Option<usize>,
    /// Only scan cubic graphs
    #[arg(long, default_value_t = true)]
    cubic: bool,
    /// Seconds per graph
    #[arg(long, default_value_t = 60)]
    budget: u64,
    #[arg(long)]
    report: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanConjecture {
    Kelmans,
    Reed,
}

fn base_graph(spec: &str) -> Result<Graph> {
    match spec {
        "k2_3" | "K2^3" | "k23" => Ok(families::k2_3()),
        "k4" | "K4" => Ok(families::k4()),
        "prism" => Ok(families::prism()),
        g6 => parse_graph6(g6).map_err(|e| anyhow!("bad --base graph6: {e}")),
    }
}

fn need(value: Option<usize>, name: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| anyhow!("--{name} is required for family {family}"))
}

fn build_graph(args: &BuildArgs) -> Result<Graph> {
    let fam = args.family.as_str();
    let graph = match fam {
        "A" | "B" | "S" | "T" | "P" | "Q" | "P'" | "Pprime" | "W" => gadget::gadget_catalog(fam)?.graph,
        "Pi" => gadget::gadget_p_i(need(args.i, "i", fam)?)?.graph,
        "Qi" => gadget::gadget_q_i(need(args.i, "i", fam)?)?.graph,
        "R" => families::build_r(need(args.k, "k", fam)?, None)?.0,
        "L" => families::build_l(need(args.r, "r", fam)?)?.0,
        "GP" => {
            let base = base_graph(args.base.as_deref().ok_or_else(|| anyhow!("--base is required for GP"))?)?;
            families::build_gp(&base)?.0
        }
        "GPB" => {
            let base = base_graph(args.base.as_deref().ok_or_else(|| anyhow!("--base is required for GPB"))?)?;
            families::build_gpb(&base)?.0
        }
        "GB" => {
            let base = base_graph(args.base.as_deref().ok_or_else(|| anyhow!("--base is required for GB"))?)?;
            families::build_gb(&base)?.0
        }
        "M" => families::build_m(need(args.r, "r", fam)?, need(args.k, "k", fam)?)?,
        "N" => families::build_n(need(args.r, "r", fam)?, need(args.k, "k", fam)?, need(args.i, "i", fam)?)?,
        "petersen" => families::generalized_petersen(need(args.k, "k", fam)?, need(args.i, "i", fam)?)?,
        other => bail!("unknown family: {other}"),
    };
    Ok(graph)
}

fn cmd_build(args: &BuildArgs) -> Result<i32> {
    let g = build_graph(args)?;
    let body = match args.format {
        BuildFormat::G6 => {
            let mut line = write_graph6(&g).context("graph6 cannot encode this graph")?;
            line.push('\n');
            line
        }
        BuildFormat::Dot => to_dot(&g, None),
    };
    std::fs::write(&args.out, body).with_context(|| format!("writing {}", args.out.display()))?;
    eprintln!("wrote {} ({} vertices, {} edges)", args.out.display(), g.vertex_count(), g.edge_count());
    Ok(0)
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let line = text.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| anyhow!("empty input file"))?;
    Ok(parse_graph6(line.trim())?)
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<i32> {
    let g = read_graph(&args.input)?;
    let mut out = serde_json::Map::new();
    out.insert("v".into(), json!(g.vertex_count()));
    out.insert("e".into(), json!(g.edge_count()));
    let mut inconclusive = false;
    for check in &args.checks {
        match check.as_str() {
            "cubic" => {
                out.insert("cubic".into(), json!(is_cubic(&g)));
            }
            "bridges" => {
                out.insert("bridges".into(), json!(bridges(&g)));
            }
            "kappa" => {
                out.insert("kappa".into(), json!(vertex_connectivity(&g)));
            }
            "cyc4" => match is_cyclically_4_edge_connected(&g) {
                Ok((flag, witness)) => {
                    out.insert("cyc4".into(), json!(flag));
                    if let Some(w) = witness {
                        out.insert("cyc4_witness_cut".into(), json!(w.cut));
                    }
                }
                Err(e) => {
                    out.insert("cyc4".into(), json!(null));
                    out.insert("cyc4_error".into(), json!(e.to_string()));
                }
            },
            "hamilton" => {
                let nodes = args.budget.saturating_mul(20_000_000).max(1_000_000);
                match hamiltonian_cycle(&g, nodes) {
                    HamiltonResult::Found(cycle) => {
                        out.insert("hamiltonian".into(), json!(true));
                        out.insert("hamiltonian_cycle".into(), json!(cycle));
                    }
                    HamiltonResult::NotFound => {
                        out.insert("hamiltonian".into(), json!(false));
                    }
                    HamiltonResult::BudgetExhausted => {
                        out.insert("hamiltonian".into(), json!(null));
                        inconclusive = true;
                    }
                }
            }
            other => bail!("unknown check: {other}"),
        }
    }
    println!("{}", serde_json::to_string_pretty(&serde_json::Value::Object(out))?);
    Ok(if inconclusive { 2 } else { 0 })
}

/// One entry of the `--certify` occurrence sidecar.
#[derive(Deserialize)]
struct OccurrenceSpec {
    /// Gadget family: a catalog name (A,B,S,T,P,Q,P',W) or Pi/Qi
    gadget: String,
    /// Recursion depth for Pi/Qi
    #[serde(default)]
    i: Option<usize>,
    /// Host vertex for each gadget vertex, in gadget vertex order
    embedding: Vec<usize>,
}

fn resolve_gadget(spec: &OccurrenceSpec) -> Result<RootedGadget> {
    match spec.gadget.as_str() {
        "Pi" => Ok(gadget::gadget_p_i(spec.i.ok_or_else(|| anyhow!("Pi occurrence needs \"i\""))?)?),
        "Qi" => Ok(gadget::gadget_q_i(spec.i.ok_or_else(|| anyhow!("Qi occurrence needs \"i\""))?)?),
        name => Ok(gadget::gadget_catalog(name)?),
    }
}

fn cmd_solve(args: &SolveArgs) -> Result<i32> {
    let g = read_graph(&args.input)?;
    let budget = Budget::seconds(args.budget);
    let res = match &args.certify {
        None => gamma_exact(&g, &budget),
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let specs: Vec<OccurrenceSpec> = serde_json::from_str(&text).context("parsing occurrence sidecar")?;
            let occs: Vec<GadgetOccurrence> = specs
                .iter()
                .map(|s| Ok(GadgetOccurrence { gadget: resolve_gadget(s)?, embedding: s.embedding.clone() }))
                .collect::<Result<_>>()?;
            certified_gamma(&g, &occs, None, &budget)?
        }
    };
    let out = json!({
        "v": res.vertex_count,
        "gamma": res.gamma,
        "lower_bound": res.lower_bound,
        "upper_bound": res.upper_bound,
        "rho": res.ratio().map(|r| r.to_string()),
        "witness": res.witness.members(),
        "certificate": res.certificate,
        "status": res.status,
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(if res.status == SolveStatus::Optimal { 0 } else { 2 })
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let selection: Option<Vec<String>> = if args.claims == "all" {
        None
    } else {
        Some(args.claims.split(',').map(|s| s.trim().to_string()).collect())
    };
    let reports = run_claims(selection.as_deref(), &Budget::seconds(args.budget))?;
    let format = match args.format {
        VerifyFormat::Json => ReportFormat::Json,
        VerifyFormat::Csv => ReportFormat::Csv,
    };
    write_report(&reports, format, &args.report)?;
    for r in &reports {
        println!("{:<14} {:<12} {:>8.2}s  {}", r.claim_id, r.status.to_string(), r.runtime_s, r.citation);
    }
    let code = exit_code(&reports);
    eprintln!(
        "{} claims: {} pass, {} fail, {} inconclusive; report: {}",
        reports.len(),
        reports.iter().filter(|r| r.status == domlab::report::ClaimStatus::Pass).count(),
        reports.iter().filter(|r| r.status == domlab::report::ClaimStatus::Fail).count(),
        reports.iter().filter(|r| r.status == domlab::report::ClaimStatus::Inconclusive).count(),
        args.report.display(),
    );
    Ok(code)
}

fn cmd_scan(args: &ScanArgs) -> Result<i32> {
    let corpus = std::fs::read_to_string(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let conjecture = match args.conjecture {
        ScanConjecture::Kelmans => Conjecture::Kelmans,
        ScanConjecture::Reed => Conjecture::Reed,
    };
    let filters = ScanFilters { kappa_min: args.kappa_min, cubic_only: args.cubic };
    let out = scan_corpus(&corpus, conjecture, filters, &Budget::seconds(args.budget));
    std::fs::write(&args.report, serde_json::to_string_pretty(&out)?)
        .with_context(|| format!("writing {}", args.report.display()))?;
    println!(
        "scanned {} graphs ({} filtered out, {} parse errors): {} pass, {} violations, {} inconclusive",
        out.summary.scanned, out.summary.filtered_out, out.summary.parse_errors,
        out.summary.pass, out.summary.violations, out.summary.inconclusive,
    );
    for rec in out.records.iter().filter(|r| r.verdict == domlab::scan::Verdict::Violation) {
        println!("violation at line {}: gamma={:?} > {} for {}", rec.line, rec.gamma, rec.bound, rec.graph6);
    }
    Ok(if out.summary.violations > 0 {
        1
    } else if out.summary.inconclusive > 0 || out.summary.parse_errors > 0 {
        2
    } else {
        0
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Scan(args) => cmd_scan(args),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(3)
        }
    }
}
