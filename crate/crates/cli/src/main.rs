use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cotvd::error::{CycleError, ParseError, SolverError};
use cotvd::generate::{generate, GeneratorSpec};
use cotvd::io::{parse_instance, parse_vertex_set, write_instance, write_vertex_set};
use cotvd::kernel::trace::{parse_trace, write_trace};
use cotvd::kernel::{
    assert_phase_invariants, kernelize_with, measure, replay, size_bound, KernelOptions, KernelOutcome, Phase,
    RuleOutcome, SolutionMode,
};
use cotvd::longest_cycle::{longest_cycle_with, CycleOptions};
use cotvd::multigraph::Instance;
use cotvd::par::{self, Parallelism};
use cotvd::solvers::{brute_force_ctov, exact_ctov, minimum_ctov};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "cotvd",
    version,
    about = "Cliques-or-trees vertex deletion kernel and longest cycle solver"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the reduction rules to a fixpoint and report the outcome.
    Kernelize {
        instance: PathBuf,
        #[command(flatten)]
        kernel: KernelArgs,
        /// Write the rule firings here, one per line.
        #[arg(long, value_name = "PATH")]
        emit_trace: Option<PathBuf>,
        /// Write the reduced instance here.
        #[arg(long, short, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Print a minimum deletion set, or `none` when it exceeds the budget.
    Solve {
        instance: PathBuf,
        /// Overrides the budget in the file; without it the minimum is searched for without limit.
        #[arg(long)]
        budget: Option<usize>,
        /// Also run the exhaustive oracle when the graph has at most this many vertices.
        #[arg(long, value_name = "N")]
        oracle_cap: Option<usize>,
    },
    /// Print the length of a longest cycle, or `none` for a forest.
    LongestCycle {
        instance: PathBuf,
        /// Vertex set whose deletion leaves cliques and trees; a minimum one is computed when omitted.
        #[arg(long, value_name = "PATH")]
        modulator: Option<PathBuf>,
        /// Guess over every component instead of the best-ranked ones per pair.
        #[arg(long)]
        all_components: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Replay a trace, re-deriving every firing, and re-check the bounds.
    Verify {
        instance: PathBuf,
        trace: PathBuf,
        #[command(flatten)]
        kernel: KernelArgs,
        /// Check with the exhaustive oracle that each firing keeps the answer, up to this many vertices.
        #[arg(long, value_name = "N")]
        oracle_cap: Option<usize>,
    },
    /// Print a seeded instance with a planted solution.
    Generate {
        #[command(flatten)]
        gen: GenArgs,
        /// Write the planted set here.
        #[arg(long, value_name = "PATH")]
        planted_out: Option<PathBuf>,
    },
    /// Kernelize a batch of generated instances and print one TSV row per instance.
    Bench {
        #[command(flatten)]
        gen: GenArgs,
        /// Number of instances; seeds run from `--seed` upward.
        #[arg(long, default_value_t = 20)]
        count: u64,
        #[arg(long, value_enum, default_value_t = Solver::Exact)]
        solver: Solver,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args)]
struct KernelArgs {
    /// Overrides the budget in the file.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, value_enum, default_value_t = Solver::Exact)]
    solver: Solver,
    /// Solve small reduced instances exactly instead of returning them.
    #[arg(long)]
    decide_residual: bool,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Planted deletion vertices.
    #[arg(long, default_value_t = 2)]
    planted: usize,
    #[arg(long, default_value_t = 3)]
    cliques: usize,
    #[arg(long, default_value = "3..5", value_parser = parse_range)]
    clique_size: (usize, usize),
    #[arg(long, default_value_t = 3)]
    trees: usize,
    #[arg(long, default_value = "3..6", value_parser = parse_range)]
    tree_size: (usize, usize),
    /// Components that need one extra deletion each.
    #[arg(long, default_value_t = 0)]
    noise: usize,
    #[arg(long, default_value = "4..6", value_parser = parse_range)]
    noise_size: (usize, usize),
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    /// Probability of a multi-edge at a planted vertex.
    #[arg(long, default_value_t = 0.0)]
    multi: f64,
    /// Budget written to the instance; the planted count when omitted.
    #[arg(long)]
    budget: Option<usize>,
}

impl GenArgs {
    fn spec(&self, seed: u64) -> GeneratorSpec {
        GeneratorSpec {
            seed,
            planted: self.planted,
            cliques: self.cliques,
            clique_size: self.clique_size.0..=self.clique_size.1,
            trees: self.trees,
            tree_size: self.tree_size.0..=self.tree_size.1,
            noise: self.noise,
            noise_size: self.noise_size.0..=self.noise_size.1,
            density: self.density,
            multi: self.multi,
            k: self.budget,
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let a: usize = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range '{s}', expected A..B"))?;
    let b: usize = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range '{s}', expected A..B"))?;
    if a > b {
        return Err(format!("empty range '{s}'"));
    }
    Ok((a, b))
}

#[derive(Clone, Copy, ValueEnum)]
enum Solver {
    Exact,
    Approx,
}

impl From<Solver> for SolutionMode {
    fn from(s: Solver) -> Self {
        match s {
            Solver::Exact => SolutionMode::Exact,
            Solver::Approx => SolutionMode::Approx,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Precondition(_) => 3,
            CliError::Io { .. } | CliError::Failed(_) => 1,
        }
    }
}

impl From<CycleError> for CliError {
    fn from(e: CycleError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load(path: &Path, budget: Option<usize>) -> Result<Instance, CliError> {
    let mut inst = parse_instance(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })?;
    if let Some(k) = budget {
        inst.k = k;
    }
    Ok(inst)
}

fn yes_no(a: bool) -> &'static str {
    if a {
        "yes"
    } else {
        "no"
    }
}

fn kernel_options(args: &KernelArgs) -> KernelOptions {
    KernelOptions {
        mode: args.solver.into(),
        decide_residual: args.decide_residual,
        ..Default::default()
    }
}

fn kernelize_cmd(path: &Path, args: &KernelArgs, trace: Option<&Path>, output: Option<&Path>) -> Result<(), CliError> {
    let inst = load(path, args.budget)?;
    let out = kernelize_with(&inst, &kernel_options(args));
    if let Some(p) = trace {
        write(p, &write_trace(&out.trace))?;
    }
    match &out.outcome {
        KernelOutcome::Decided(a) => println!("Decided {}", yes_no(*a)),
        KernelOutcome::Reduced(red) => {
            let (n, k) = (red.graph.num_vertices(), red.k);
            let bound = size_bound(k);
            println!("Reduced n={n} k={k}");
            println!(
                "bound 1389k^2+52k = {bound} {}",
                if n <= bound { "holds" } else { "VIOLATED" }
            );
            if let Some(p) = output {
                write(p, &write_instance(red))?;
            }
        }
    }
    println!("rules fired: {}", out.stats.total_fired());
    for v in &out.stats.phase_violations {
        eprintln!("phase violation: {v}");
    }
    if out.stats.measure_violations > 0 || !out.stats.phase_violations.is_empty() {
        return Err(CliError::Failed("kernel invariants violated".into()));
    }
    Ok(())
}

fn solve_cmd(path: &Path, budget: Option<usize>, oracle_cap: Option<usize>) -> Result<(), CliError> {
    let inst = load(path, None)?;
    let g = &inst.graph;
    let found = match budget {
        Some(k) => exact_ctov(g, k),
        None => Some(minimum_ctov(g)),
    };
    match &found {
        Some(s) => print!("{}", write_vertex_set(s)),
        None => println!("none"),
    }
    if let Some(cap) = oracle_cap {
        if g.num_vertices() <= cap {
            let k = budget.unwrap_or(g.num_vertices());
            let brute = brute_force_ctov(g, k, cap)?;
            if brute.as_ref().map(BTreeSet::len) != found.as_ref().map(BTreeSet::len) {
                return Err(CliError::Failed(format!("oracle disagrees: {brute:?}")));
            }
            eprintln!("oracle agrees");
        } else {
            eprintln!("oracle skipped: {} vertices above cap {cap}", g.num_vertices());
        }
    }
    Ok(())
}

fn longest_cycle_cmd(path: &Path, modulator: Option<&Path>, all: bool, sequential: bool) -> Result<(), CliError> {
    let inst = load(path, None)?;
    let g = &inst.graph;
    if let Some((u, v)) = g.multi_edges().next() {
        return Err(CycleError::NotSimple(u, v).into());
    }
    let s = match modulator {
        Some(p) => parse_vertex_set(&read(p)?, g.id_bound()).map_err(|source| CliError::Parse {
            path: p.to_owned(),
            source,
        })?,
        None => minimum_ctov(g),
    };
    let opts = CycleOptions {
        restrict_to_labels: !all,
        parallelism: if sequential {
            Parallelism::Sequential
        } else {
            Parallelism::Parallel
        },
    };
    match longest_cycle_with(g, &s, &opts)? {
        Some(len) => println!("{len}"),
        None => println!("none"),
    }
    Ok(())
}

fn verify_cmd(path: &Path, trace_path: &Path, args: &KernelArgs, oracle_cap: Option<usize>) -> Result<(), CliError> {
    let inst = load(path, args.budget)?;
    let trace = parse_trace(&read(trace_path)?).map_err(|source| CliError::Parse {
        path: trace_path.to_owned(),
        source,
    })?;
    let outcome =
        replay(&inst, &trace, args.solver.into()).map_err(|e| CliError::Failed(format!("replay failed at {e}")))?;

    // progress and, when asked, answer preservation per firing
    let mut cur = inst.clone();
    for (i, f) in trace.iter().enumerate() {
        let after = f.apply(&cur);
        if let Some(cap) = oracle_cap.filter(|&c| cur.graph.num_vertices() <= c) {
            let before = brute_force_ctov(&cur.graph, cur.k, cap)?.is_some();
            let kept = match &after {
                RuleOutcome::Decided(a) => *a,
                RuleOutcome::Reduced(next) => brute_force_ctov(&next.graph, next.k, cap)?.is_some(),
            };
            if before != kept {
                return Err(CliError::Failed(format!(
                    "step {}: {} changes the answer",
                    i + 1,
                    f.rule
                )));
            }
        }
        match after {
            RuleOutcome::Reduced(next) => {
                if measure(&next) >= measure(&cur) {
                    return Err(CliError::Failed(format!("step {}: measure did not decrease", i + 1)));
                }
                cur = next;
            }
            RuleOutcome::Decided(_) => break,
        }
    }

    match outcome {
        RuleOutcome::Decided(a) => println!("Decided {}", yes_no(a)),
        RuleOutcome::Reduced(red) => {
            let finished = red.k == 0 || red.graph.is_empty();
            if !finished {
                let more = kernelize_with(&red, &kernel_options(args));
                if let Some(f) = more.trace.first() {
                    return Err(CliError::Failed(format!("trace stops early: {} still applies", f.rule)));
                }
                let bad = assert_phase_invariants(&red, Phase::Final, None);
                if !bad.is_empty() {
                    return Err(CliError::Failed(bad.join("; ")));
                }
            }
            println!("Reduced n={} k={}", red.graph.num_vertices(), red.k);
        }
    }
    println!("verified {} firings", trace.len());
    Ok(())
}

fn generate_cmd(gen: &GenArgs, planted_out: Option<&Path>) -> Result<(), CliError> {
    let out = generate(&gen.spec(gen.seed));
    print!("{}", write_instance(&out.instance));
    if let Some(p) = planted_out {
        write(p, &write_vertex_set(&out.planted))?;
    }
    Ok(())
}

fn bench_cmd(gen: &GenArgs, count: u64, solver: Solver, sequential: bool) -> Result<(), CliError> {
    let seeds: Vec<u64> = (gen.seed..gen.seed + count).collect();
    let mode = if sequential {
        Parallelism::Sequential
    } else {
        Parallelism::Parallel
    };
    let opts = KernelOptions {
        mode: solver.into(),
        ..Default::default()
    };
    let rows = par::map(mode, &seeds, |&seed| {
        let inst = generate(&gen.spec(seed)).instance;
        let start = Instant::now();
        let out = kernelize_with(&inst, &opts);
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let n_out = out.outcome.reduced().map_or(0, |r| r.graph.num_vertices());
        format!(
            "{}\t{}\t{}\t{}\t{:.3}",
            inst.k,
            inst.graph.num_vertices(),
            n_out,
            out.stats.total_fired(),
            ms
        )
    });
    println!("k\tn_in\tn_out\trules_fired\ttime_ms");
    for r in rows {
        println!("{r}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Kernelize {
            instance,
            kernel,
            emit_trace,
            output,
        } => kernelize_cmd(instance, kernel, emit_trace.as_deref(), output.as_deref()),
        Command::Solve {
            instance,
            budget,
            oracle_cap,
        } => solve_cmd(instance, *budget, *oracle_cap),
        Command::LongestCycle {
            instance,
            modulator,
            all_components,
            sequential,
        } => longest_cycle_cmd(instance, modulator.as_deref(), *all_components, *sequential),
        Command::Verify {
            instance,
            trace,
            kernel,
            oracle_cap,
        } => verify_cmd(instance, trace, kernel, *oracle_cap),
        Command::Generate { gen, planted_out } => generate_cmd(gen, planted_out.as_deref()),
        Command::Bench {
            gen,
            count,
            solver,
            sequential,
        } => bench_cmd(gen, *count, *solver, *sequential),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
