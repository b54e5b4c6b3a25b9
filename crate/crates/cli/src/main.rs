//! Command-line front end: certificates, inequality checks, the constant
//! graph, the prime sandbox and parameter searches.

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use leastprime::certificate::Certificate;
use leastprime::config::{Effort, RunConfig};
use leastprime::graph::{derive_all, NodeStatus, ParamSet};
use leastprime::optimize::{best_row, refine, sweep, Objective, RefineOutcome, SweepRow, SweepSpec};
use leastprime::sandbox;
use leastprime::verify::{run_claims, select, ClaimOutcome, SuiteStatus, Verdict};
use leastprime::{Error, Interval};
use serde_json::json;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

/// Exit status for failures of the tool itself, as opposed to a verdict.
const TOOL_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "leastprime", version, about = "Certified constants for an explicit least-prime-ideal bound")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// TOML file with `[params]` and `[effort]` tables.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Requested working precision in bits; tightens the quadrature tolerance.
    #[arg(long, global = true, value_name = "BITS")]
    precision: Option<u32>,
    /// Target width of quadrature enclosures.
    #[arg(long = "quad-tol", global = true, value_name = "T")]
    quad_tol: Option<f64>,
    /// Bisection depth limit for branch-and-bound.
    #[arg(long = "bnb-depth", global = true, value_name = "D")]
    bnb_depth: Option<u32>,
    /// Output file, written atomically.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads; affects speed only.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Leave wall-clock times out of written artifacts so reruns are byte-identical.
    #[arg(long = "no-timings", global = true)]
    no_timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate every constant and write the JSON certificate.
    Derive {
        /// Claims to include in the certificate (`none` to skip).
        #[arg(long, default_value = "all")]
        claims: String,
    },
    /// Run the inequality checks and print a verdict table.
    Ineq {
        /// all, Q, G0, monotone, lemma84, lemma86, zfr, cor75, a group or claim ids.
        #[arg(long, default_value = "all")]
        claim: String,
        /// Print each record's notes under its row.
        #[arg(long)]
        notes: bool,
    },
    /// Write the constant dependency graph as DOT.
    Dag,
    /// Exact prime counts against the explicit bounds.
    Sandbox {
        #[command(subcommand)]
        check: SandboxCmd,
    },
    /// Parameter sweeps and local refinement.
    Optimize {
        #[command(subcommand)]
        mode: OptimizeCmd,
    },
}

#[derive(Subcommand, Debug)]
enum SandboxCmd {
    /// Prime counting bound at every integer up to the limit.
    Pi {
        #[arg(long, default_value_t = 1_000_000)]
        x_max: u64,
    },
    /// Higher prime power counting bound at every integer up to the limit.
    #[command(name = "S", alias = "s")]
    S {
        #[arg(long, default_value_t = 1_000_000)]
        x_max: u64,
        /// Also report the exact count at this point.
        #[arg(long)]
        at: Option<u64>,
    },
    /// Prime power tail sums at sampled points.
    Tail {
        #[arg(long, default_value_t = 10_000_000)]
        prime_limit: u64,
        /// Sample points (default: 101 doubling while the sieve tail is small).
        #[arg(long, value_delimiter = ',')]
        x: Vec<u64>,
    },
    /// Least primes in each reduced residue class modulo q.
    Ap {
        #[arg(long)]
        q: u64,
    },
}

#[derive(Subcommand, Debug)]
enum OptimizeCmd {
    /// Evaluate a grid from a TOML spec; CSV unless --out ends in .json.
    Sweep {
        /// Spec with `objective`, `[[axes]]` and an optional `[base]`.
        spec: PathBuf,
    },
    /// Coordinate search from the configured parameters.
    Refine {
        #[arg(long)]
        objective: String,
        #[arg(long, default_value_t = 4)]
        max_iters: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(TOOL_ERROR)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    if let Some(n) = cli.global.threads {
        if n == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    }
    let config = load_config(&cli.global)?;
    let g = &cli.global;
    match &cli.command {
        Command::Derive { claims } => cmd_derive(g, &config, claims),
        Command::Ineq { claim, notes } => cmd_ineq(g, &config, claim, *notes),
        Command::Dag => cmd_dag(g, &config),
        Command::Sandbox { check } => cmd_sandbox(g, &config, check),
        Command::Optimize { mode: OptimizeCmd::Sweep { spec } } => cmd_sweep(g, &config, spec),
        Command::Optimize { mode: OptimizeCmd::Refine { objective, max_iters } } => {
            cmd_refine(g, &config, objective, *max_iters)
        }
    }
}

/// Config file first, then flag overrides.
fn load_config(g: &Global) -> anyhow::Result<RunConfig> {
    let mut config = match &g.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(bits) = g.precision {
        config.effort = config.effort.with_precision(bits)?;
    }
    if let Some(t) = g.quad_tol {
        config.effort.quad_tol = t;
    }
    if let Some(d) = g.bnb_depth {
        config.effort.bnb_depth = d;
    }
    config.validate()?;
    Ok(config)
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating a temporary file in {}", dir.display()))?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// To `--out` if given, otherwise stdout.
fn emit(g: &Global, text: &str) -> anyhow::Result<()> {
    match &g.out {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn code(status: SuiteStatus) -> u8 {
    status.exit_code() as u8
}

fn certify(g: &Global, params: &ParamSet, effort: &Effort, claims: &str) -> anyhow::Result<Certificate> {
    let start = Instant::now();
    let graph = derive_all(params, effort)?;
    let derive_secs = start.elapsed().as_secs_f64();
    let mut cert = Certificate::new(params, effort, &graph);
    cert.push_timing("derive", derive_secs);
    if !claims.eq_ignore_ascii_case("none") {
        let start = Instant::now();
        let outcomes = run_claims(&graph, effort, &select(claims)?)?;
        cert = cert.with_claims(outcomes);
        cert.push_timing("claims", start.elapsed().as_secs_f64());
    }
    Ok(if g.no_timings { cert.without_timings() } else { cert })
}

fn cmd_derive(g: &Global, config: &RunConfig, claims: &str) -> anyhow::Result<u8> {
    let cert = certify(g, &config.params, &config.effort, claims)?;
    emit(g, &(cert.to_json() + "\n"))?;
    let count = |s: NodeStatus| cert.nodes.iter().filter(|n| n.status == s).count();
    eprintln!(
        "{} nodes: {} verified, {} tighter, {} computed, {} axioms, {} inconclusive, {} contradicted, {} failed, {} unevaluated",
        cert.nodes.len(),
        count(NodeStatus::Verified),
        count(NodeStatus::Tighter),
        count(NodeStatus::Computed),
        count(NodeStatus::Axiom),
        count(NodeStatus::Inconclusive),
        count(NodeStatus::Contradicts),
        count(NodeStatus::Failed),
        count(NodeStatus::Unevaluated),
    );
    for n in cert.bad_nodes() {
        eprintln!("  {} {:?}: {} {}", n.id, n.status, n.enclosure, n.notes.join("; "));
    }
    if let Some(a1) = cert.node("A_1") {
        eprintln!("A_1 = {}", a1.enclosure);
    }
    let status = cert.status();
    eprintln!("status: {status:?}");
    Ok(code(status))
}

fn fmt_margin(m: Interval) -> String {
    if m.is_empty() {
        "-".into()
    } else {
        format!("{:.6e}", m.lo())
    }
}

fn print_table(outcomes: &[ClaimOutcome], notes: bool) {
    println!("{:<24} {:<9} {:>14} {:>9} {:>8}  role", "claim", "verdict", "margin", "boxes", "time_s");
    for o in outcomes {
        let r = &o.record;
        let verdict = match r.verdict {
            Verdict::Proved => "PROVED",
            Verdict::Refuted => "REFUTED",
            Verdict::Undecided => "UNDECIDED",
        };
        let role = if r.gating { "gating" } else { "informational" };
        println!(
            "{:<24} {:<9} {:>14} {:>9} {:>8.3}  {}",
            r.claim,
            verdict,
            fmt_margin(r.margin),
            r.boxes_explored,
            o.seconds,
            role
        );
        if notes {
            for n in &r.notes {
                println!("    {n}");
            }
        }
    }
}

fn cmd_ineq(g: &Global, config: &RunConfig, selector: &str, notes: bool) -> anyhow::Result<u8> {
    let selected = select(selector)?;
    let graph = derive_all(&config.params, &config.effort)?;
    let mut outcomes = run_claims(&graph, &config.effort, &selected)?;
    print_table(&outcomes, notes);
    let status = SuiteStatus::of(outcomes.iter().map(|o| &o.record));
    println!("status: {status:?}");
    if let Some(path) = &g.out {
        if g.no_timings {
            outcomes.iter_mut().for_each(|o| o.seconds = 0.0);
        }
        write_atomic(path, (serde_json::to_string_pretty(&outcomes)? + "\n").as_bytes())?;
    }
    Ok(code(status))
}

fn cmd_dag(g: &Global, config: &RunConfig) -> anyhow::Result<u8> {
    let graph = derive_all(&config.params, &config.effort)?;
    emit(g, &graph.to_dot())?;
    Ok(0)
}

fn alpha0(config: &RunConfig) -> anyhow::Result<Interval> {
    Ok(derive_all(&config.params, &config.effort)?.value("alpha_0")?)
}

fn cmd_sandbox(g: &Global, config: &RunConfig, check: &SandboxCmd) -> anyhow::Result<u8> {
    let (value, pass) = match check {
        SandboxCmd::Pi { x_max } => {
            let r = sandbox::check_prime_count(*x_max, alpha0(config)?)?;
            print_sandbox(&r);
            (serde_json::to_value(&r)?, r.pass)
        }
        SandboxCmd::S { x_max, at } => {
            let r = sandbox::check_prime_power_count(*x_max, alpha0(config)?)?;
            print_sandbox(&r);
            let mut v = serde_json::to_value(&r)?;
            if let Some(x) = at {
                let s = sandbox::higher_prime_power_count(*x)?;
                println!("S({x}) = {s}");
                v["at"] = json!({ "x": x, "count": s });
            }
            (v, r.pass)
        }
        SandboxCmd::Tail { prime_limit, x } => {
            let samples = if x.is_empty() { sandbox::default_tail_samples(*prime_limit) } else { x.clone() };
            let r = sandbox::check_prime_power_tail(&samples, *prime_limit, alpha0(config)?)?;
            print_sandbox(&r);
            (serde_json::to_value(&r)?, r.pass)
        }
        SandboxCmd::Ap { q } => {
            let r = sandbox::least_primes_in_progressions(*q)?;
            println!(
                "modulus {} (phi = {}), discriminant {} ({} digits)",
                r.modulus, r.phi, r.discriminant, r.discriminant_digits
            );
            println!("{:>8} {:>12} {:>22}", "residue", "least_prime", "log p / log d");
            for row in &r.rows {
                println!("{:>8} {:>12} {:>22.6}", row.residue, row.least_prime, row.ratio.mid());
            }
            println!("max ratio {:.6} against the proven exponent 12577", r.max_ratio.hi());
            (serde_json::to_value(&r)?, true)
        }
    };
    if let Some(path) = &g.out {
        write_atomic(path, (serde_json::to_string_pretty(&value)? + "\n").as_bytes())?;
    }
    Ok(if pass { 0 } else { 1 })
}

fn print_sandbox(r: &sandbox::SandboxResult) {
    println!("{}: {} ({} points)", r.check, if r.pass { "PASS" } else { "FAIL" }, r.points_checked);
    for (name, v) in &r.quantities {
        println!("  {name} = {v}");
    }
    for c in &r.comparisons {
        println!("  at {}: {} vs bound {} {}", c.at, c.count, c.bound, if c.holds { "holds" } else { "FAILS" });
    }
}

fn sweep_csv(spec: &SweepSpec, rows: &[SweepRow]) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = vec!["index".into()];
    header.extend(spec.axes.iter().map(|a| a.param.clone()));
    header.extend(["objective_lo", "objective_hi", "feasible", "issues"].map(String::from));
    w.write_record(&header)?;
    for r in rows {
        let mut rec: Vec<String> = vec![r.index.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(":")];
        rec.extend(r.values.iter().map(|(_, v)| v.to_string()));
        match r.objective {
            Some(v) if !v.is_empty() => rec.extend([format!("{:e}", v.lo()), format!("{:e}", v.hi())]),
            _ => rec.extend([String::new(), String::new()]),
        }
        rec.push(r.feasible.to_string());
        rec.push(r.issues.join("; "));
        w.write_record(&rec)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn cmd_sweep(g: &Global, config: &RunConfig, spec_path: &Path) -> anyhow::Result<u8> {
    let text = std::fs::read_to_string(spec_path).with_context(|| format!("reading {}", spec_path.display()))?;
    let spec = SweepSpec::from_toml(&text)?;
    let rows = sweep(&spec, &config.effort)?;
    let best = best_row(&rows, spec.objective);
    let feasible = rows.iter().filter(|r| r.feasible).count();
    eprintln!("{} points, {} feasible, objective {}", rows.len(), feasible, spec.objective.name());
    let best_cert = match best {
        Some(row) => {
            let v = row.values.iter().map(|(n, v)| format!("{n} = {v}")).collect::<Vec<_>>().join(", ");
            eprintln!("best: {v} gives {}", row.objective.unwrap_or(Interval::EMPTY));
            let mut params = spec.base.clone();
            for (n, v) in &row.values {
                params.set(n, *v)?;
            }
            Some(certify(g, &params, &config.effort, "all")?)
        }
        None => None,
    };
    let json_out = g.out.as_ref().is_some_and(|p| p.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")));
    if json_out {
        let doc = json!({ "spec": spec, "rows": rows, "best": best, "best_certificate": best_cert });
        emit(g, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
    } else {
        emit(g, &sweep_csv(&spec, &rows)?)?;
        if let (Some(path), Some(cert)) = (&g.out, &best_cert) {
            write_atomic(&path.with_extension("best.json"), (cert.to_json() + "\n").as_bytes())?;
        }
    }
    Ok(0)
}

fn cmd_refine(g: &Global, config: &RunConfig, objective: &str, max_iters: usize) -> anyhow::Result<u8> {
    let objective = Objective::parse(objective)?;
    let outcome = match refine(&config.params, objective, max_iters, &config.effort) {
        Ok(o) => {
            println!("{} {} -> {} ({} evaluations)", objective.name(), o.seed_objective, o.objective, o.evaluations);
            for s in &o.steps {
                println!("  {s}");
            }
            Some(o)
        }
        Err(Error::NoImprovement) => {
            println!("{}: no rigorous improvement over the seed; the seed is returned", objective.name());
            None
        }
        Err(e) => return Err(e.into()),
    };
    let params = outcome.as_ref().map_or(&config.params, |o: &RefineOutcome| &o.params);
    if let Some(path) = &g.out {
        let cert = certify(g, params, &config.effort, "all")?;
        let doc = json!({ "objective": objective, "outcome": outcome, "certificate": cert });
        write_atomic(path, (serde_json::to_string_pretty(&doc)? + "\n").as_bytes())?;
    }
    Ok(0)
}
