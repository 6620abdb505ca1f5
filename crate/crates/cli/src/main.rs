//! Experiment runner for the log-likelihood bias corrections.
//!
//! ```bash
//! # Fit one model to numbers from a file or stdin
//! icbench fit --model laplace data.txt
//!
//! # Every bias estimate for one scenario/size
//! icbench bias --data laplace --model gauss --n 25
//!
//! # Comparison tables across n = 25, 100, 400, 1600
//! icbench table1                  # Gaussian model
//! icbench table2 --format csv    # Laplace model
//! icbench table3                  # c1/c2/c3 decomposition
//! ```
//!
//! Results go to stdout (or `--out`), progress to stderr. Runs are
//! deterministic: the same invocation with the same seed produces
//! byte-identical results for any `--threads` value.

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use icbench_core::analytic::{Scenario, SeriesOrder};
use icbench_core::dist::{Family, Sample};
use icbench_core::montecarlo::{self, ExperimentSpec};
use icbench_core::report::{self, BiasReport, DecompReport, Method};
use icbench_core::{infomat, models};

const TABLE_SIZES: [usize; 4] = [25, 100, 400, 1600];

#[derive(Parser)]
#[command(name = "icbench", version, about = "Bias corrections for Gaussian and Laplace model selection", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a model to whitespace-separated numbers from a file or stdin
    Fit(FitArgs),
    /// Estimate the bias for one scenario and sample size by every method
    Bias(BiasArgs),
    /// Gaussian-model comparison table, both data families
    Table1(TableArgs),
    /// Laplace-model comparison table, both data families
    Table2(TableArgs),
    /// Decomposition table: component means and variances, all scenarios
    Table3(TableArgs),
}

#[derive(Args)]
struct FitArgs {
    /// Model family (gauss or laplace)
    #[arg(long)]
    model: Family,
    /// Input file; stdin when omitted
    file: Option<PathBuf>,
}

#[derive(Args)]
struct BiasArgs {
    /// Data-generating family (gauss or laplace)
    #[arg(long)]
    data: Family,
    /// Model family (gauss or laplace)
    #[arg(long)]
    model: Family,
    /// Sample size per replication
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    n: u64,
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    run: RunArgs,
    #[command(flatten)]
    output: OutputArgs,
}

/// Knobs shared by every Monte Carlo command.
#[derive(Args)]
struct RunArgs {
    /// Monte Carlo replications (default: 10^5 for n <= 100, 10^4 for
    /// n <= 400, 10^3 above)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    reps: Option<u64>,
    /// Bootstrap resamples per replication
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    nb: u64,
    /// Base seed; replication streams derive from it
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Series truncation for the analytic bias (1-3; default: the
    /// truncation each scenario's reference table uses)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=SeriesOrder::MAX_POWER as i64))]
    order: Option<u32>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Write results to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; 0 picks the default pool (env: ICBENCH_THREADS)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Md,
    Csv,
}

/// Failures after argument parsing. Usage problems exit 2 (like clap),
/// data/runtime problems exit 1.
enum CliError {
    Usage(String),
    Data(String),
}

impl From<icbench_core::Error> for CliError {
    fn from(e: icbench_core::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Fit(args) => run_fit(&args),
        Command::Bias(args) => run_bias(&args),
        Command::Table1(args) => run_method_table("table1", Family::Gaussian, &args),
        Command::Table2(args) => run_method_table("table2", Family::Laplace, &args),
        Command::Table3(args) => run_decomp_table(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run_fit(args: &FitArgs) -> Result<(), CliError> {
    let text = match &args.file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Data(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let values = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<f64>()
                .map_err(|_| CliError::Data(format!("not a number: '{tok}'")))
        })
        .collect::<Result<Vec<f64>, _>>()?;
    let sample = Sample::new(values)?;
    let fitted = models::fit(args.model, &sample)?;
    let ll = models::max_loglik(&fitted);

    let sig = |x: f64| report::fmt_sig(x, 6);
    println!("model: {}", args.model);
    println!("n: {}", sample.len());
    println!("location: {}", sig(fitted.params.location));
    println!("scale: {}", sig(fitted.params.scale));
    println!("max_loglik: {}", sig(ll));
    println!("aic: {}", sig(-2.0 * ll + 2.0 * 2.0));
    if args.model == Family::Gaussian {
        println!("tic_emp: {}", sig(infomat::empirical_tic_gauss(&sample)?));
    }
    Ok(())
}

fn build_spec(scenario: Scenario, n: usize, run: &RunArgs, methods: Vec<Method>) -> ExperimentSpec {
    let reps = run.reps.unwrap_or_else(|| montecarlo::desk_reps(n));
    let mut spec = ExperimentSpec::new(scenario, n, reps, run.seed);
    spec.methods = methods;
    spec.nb = run.nb as usize;
    spec.order = run
        .order
        .map(|p| SeriesOrder::new(p).expect("range checked by the parser"));
    spec
}

fn run_bias(args: &BiasArgs) -> Result<(), CliError> {
    let scenario = Scenario::new(args.data, args.model);
    let spec = build_spec(scenario, args.n as usize, &args.run, Method::all().to_vec());
    eprintln!("bias: {scenario}, n={}, reps={}", spec.n, spec.reps);
    let rows = with_pool(&args.output, || montecarlo::run_methods_table(&spec))??;
    emit_bias(&rows, &args.output)
}

fn run_method_table(name: &str, model: Family, args: &TableArgs) -> Result<(), CliError> {
    let rows = with_pool(&args.output, || -> Result<Vec<BiasReport>, CliError> {
        let mut rows = Vec::new();
        for truth in [Family::Gaussian, Family::Laplace] {
            for n in TABLE_SIZES {
                let spec = build_spec(
                    Scenario::new(truth, model),
                    n,
                    &args.run,
                    Method::table_set().to_vec(),
                );
                eprintln!("{name}: {} data, n={n}, reps={}", truth, spec.reps);
                rows.extend(montecarlo::run_methods_table(&spec)?);
            }
        }
        Ok(rows)
    })??;
    emit_bias(&rows, &args.output)
}

fn run_decomp_table(args: &TableArgs) -> Result<(), CliError> {
    let rows = with_pool(&args.output, || -> Result<Vec<DecompReport>, CliError> {
        let mut rows = Vec::new();
        for scenario in Scenario::all() {
            for n in TABLE_SIZES {
                let reps = args.run.reps.unwrap_or_else(|| montecarlo::desk_reps(n));
                eprintln!("table3: {scenario}, n={n}, reps={reps}");
                let summary = montecarlo::run_true_bias(scenario, n, reps, args.run.seed)?;
                rows.extend(summary.decomp_reports());
            }
        }
        Ok(rows)
    })??;
    let text = match args.output.format {
        Format::Md => report::decomp_to_markdown_table(&rows),
        Format::Csv => report::decomp_to_csv(&rows),
    };
    write_output(&args.output.out, &text)
}

fn emit_bias(rows: &[BiasReport], output: &OutputArgs) -> Result<(), CliError> {
    let text = match output.format {
        Format::Md => report::to_markdown_table(rows),
        Format::Csv => report::to_csv(rows),
    };
    write_output(&output.out, &text)
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Run `f` on a dedicated pool of `--threads` workers, or on the default
/// pool when the count is 0/absent. `ICBENCH_THREADS` fills in for a missing
/// flag.
fn with_pool<T: Send>(
    output: &OutputArgs,
    f: impl FnOnce() -> T + Send,
) -> Result<T, CliError> {
    let threads = match output.threads {
        Some(t) => t,
        None => match std::env::var("ICBENCH_THREADS") {
            Ok(v) => v.parse().map_err(|_| {
                CliError::Usage(format!("ICBENCH_THREADS must be a thread count, got '{v}'"))
            })?,
            Err(_) => 0,
        },
    };
    if threads == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Data(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(f))
}
