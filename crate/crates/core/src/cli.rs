//! Command-line surface.
//!
//! Exit codes: 0 success, 1 unexpected failure, 2 usage or configuration
//! error, 3 missing tool, 4 schema mismatch, 5 degenerate statistics.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand};

use crate::benchselect::{self, AdapterSmoke, SelectOptions, ToySmoke};
use crate::config::{self, BenchmarkSuite, EvaluationConfig};
use crate::metrics::{self, MetricsError, MetricsOptions, MetricsRecord, TRANSCRIPT_FILE};
use crate::orchestrator::{self, GenerateOptions, OrchestratorError};
use crate::parallel::{with_jobs, Execution};
use crate::scoring::{self, MatrixOptions};
use crate::stats::{self, StatsError};

pub const BENCHMARKS_FILE: &str = "benchmarks.list";
pub const EVAL_CONFIG_FILE: &str = "eval.conf";
pub const RESULTS_FILE: &str = "results.csv";

#[derive(Parser, Debug)]
#[command(
    name = "benchtool",
    version,
    about = "Benchmark automated unit-test generators"
)]
pub struct Cli {
    /// Working root holding the configuration files and results folders.
    #[arg(long, global = true, default_value = ".")]
    pub root: PathBuf,
    /// Benchmark description file [default: <root>/benchmarks.list].
    #[arg(long, global = true)]
    pub benchmarks: Option<PathBuf>,
    /// Evaluation configuration file [default: <root>/eval.conf].
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Only log warnings and errors.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a generator over every benchmark and store the generated tests in
    /// results_<tool>_<budget>/.
    Generate {
        tool: String,
        repetitions: u32,
        start_from: u32,
        budget: u64,
        /// Seconds to wait for the adapter's handshake reply.
        #[arg(long, default_value_t = 30)]
        handshake_timeout: u64,
    },
    /// Measure every run folder of a results directory into transcript.csv.
    ComputeMetrics {
        results_dir: PathBuf,
        /// Worker threads for mutant evaluation.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Collect every transcript.csv below a directory into one file.
    Merge {
        dir: PathBuf,
        /// Output file [default: <dir>/results.csv].
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Score merged results and rank the tools.
    Score {
        results_csv: PathBuf,
        out_dir: PathBuf,
        /// Drop units some tool has no result for instead of scoring them -2.
        #[arg(long)]
        drop_incomplete_blocks: bool,
        /// Use one block per unit (summing budgets) instead of per (unit, budget).
        #[arg(long)]
        collapse_budgets: bool,
    },
    /// Select benchmark units from a candidates CSV.
    Select {
        candidates_csv: PathBuf,
        n_per_project: usize,
        seed: u64,
        out_dir: PathBuf,
        #[arg(long, default_value_t = benchselect::DEFAULT_MIN_COMPLEXITY)]
        min_complexity: u32,
        /// Budget in seconds for the baseline smoke run.
        #[arg(long, default_value_t = benchselect::DEFAULT_SMOKE_BUDGET_S)]
        smoke_budget: u64,
        /// Tool home of the baseline adapter; the built-in random generator
        /// is used when absent.
        #[arg(long)]
        adapter: Option<PathBuf>,
    },
    /// Serve the external analyzer contract for toy units on stdout.
    Analyzer {
        /// validate, run, coverage, mutants or execute-mutant.
        command: String,
        unit: PathBuf,
        suite_dir: PathBuf,
        /// Mutant id for execute-mutant, execution round for run.
        arg: Option<String>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Config {
        path: PathBuf,
        source: config::ConfigError,
    },
    #[error(transparent)]
    MissingTool(OrchestratorError),
    #[error("{0}")]
    Schema(String),
    #[error("{0}")]
    Degenerate(StatsError),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) | CliError::Config { .. } => 2,
            CliError::MissingTool(_) => 3,
            CliError::Schema(_) => 4,
            CliError::Degenerate(_) => 5,
        }
    }
}

fn failure(e: impl std::fmt::Display) -> CliError {
    CliError::Failure(e.to_string())
}

fn read_config_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

impl Cli {
    fn benchmarks_path(&self) -> PathBuf {
        self.benchmarks
            .clone()
            .unwrap_or_else(|| self.root.join(BENCHMARKS_FILE))
    }

    fn config_path(&self) -> PathBuf {
        self.config
            .clone()
            .unwrap_or_else(|| self.root.join(EVAL_CONFIG_FILE))
    }

    fn load_benchmarks(&self) -> Result<BenchmarkSuite, CliError> {
        let path = self.benchmarks_path();
        config::parse_benchmarks(&read_config_file(&path)?)
            .map_err(|source| CliError::Config { path, source })
    }

    /// The evaluation config; defaults when `required` is false and the file
    /// is absent. Relative tool homes are resolved against the root.
    fn load_config(&self, required: bool) -> Result<EvaluationConfig, CliError> {
        let path = self.config_path();
        if !required && !path.exists() {
            return Ok(EvaluationConfig::default());
        }
        let mut cfg = config::parse_eval_config(&read_config_file(&path)?)
            .map_err(|source| CliError::Config { path, source })?;
        for home in &mut cfg.tool_homes {
            if home.is_relative() {
                *home = self.root.join(&*home);
            }
        }
        Ok(cfg)
    }

    fn resolve(&self, p: &Path) -> PathBuf {
        if p.is_relative() {
            self.root.join(p)
        } else {
            p.to_path_buf()
        }
    }
}

/// Parse arguments, run, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let level = if cli.quiet { "warn" } else { "info" };
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .try_init();
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            log::error!("{e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Generate {
            tool,
            repetitions,
            start_from,
            budget,
            handshake_timeout,
        } => cmd_generate(
            cli,
            tool,
            *repetitions,
            *start_from,
            *budget,
            *handshake_timeout,
        ),
        Command::ComputeMetrics { results_dir, jobs } => {
            cmd_compute_metrics(cli, &cli.resolve(results_dir), *jobs)
        }
        Command::Merge { dir, output } => {
            let dir = cli.resolve(dir);
            let out = output
                .as_ref()
                .map_or_else(|| dir.join(RESULTS_FILE), |o| cli.resolve(o));
            cmd_merge(&dir, &out).map(|_| ())
        }
        Command::Score {
            results_csv,
            out_dir,
            drop_incomplete_blocks,
            collapse_budgets,
        } => {
            let opts = MatrixOptions {
                drop_incomplete_blocks: *drop_incomplete_blocks,
                collapse_budgets: *collapse_budgets,
            };
            let cfg = cli.load_config(false)?;
            cmd_score(
                &cli.resolve(results_csv),
                &cli.resolve(out_dir),
                &cfg.weights,
                opts,
            )
        }
        Command::Select {
            candidates_csv,
            n_per_project,
            seed,
            out_dir,
            min_complexity,
            smoke_budget,
            adapter,
        } => {
            let opts = SelectOptions {
                min_complexity: *min_complexity,
                smoke_budget_s: *smoke_budget,
                n_per_project: *n_per_project,
                seed: *seed,
            };
            cmd_select(
                cli,
                &cli.resolve(candidates_csv),
                &cli.resolve(out_dir),
                &opts,
                adapter.as_deref(),
            )
        }
        Command::Analyzer {
            command,
            unit,
            suite_dir,
            arg,
        } => metrics::serve_toy_command(
            command,
            unit,
            suite_dir,
            arg.as_deref(),
            io::stdout().lock(),
        )
        .map_err(failure),
    }
}

fn cmd_generate(
    cli: &Cli,
    tool: &str,
    repetitions: u32,
    start_from: u32,
    budget: u64,
    handshake_timeout: u64,
) -> Result<(), CliError> {
    if repetitions == 0 {
        return Err(CliError::Usage("repetitions must be positive".into()));
    }
    if start_from == 0 {
        return Err(CliError::Usage("start_from must be positive".into()));
    }
    if budget == 0 {
        return Err(CliError::Usage("budget must be positive".into()));
    }
    let cfg = cli.load_config(true)?;
    orchestrator::find_runtool(&cfg, tool).map_err(CliError::MissingTool)?;
    let suite = cli.load_benchmarks()?;
    let opts = GenerateOptions {
        results_root: cli.root.clone(),
        handshake_timeout: Duration::from_secs(handshake_timeout),
    };
    let records =
        orchestrator::generate_tests(&cfg, &suite, tool, repetitions, start_from, budget, &opts)
            .map_err(|e| match e {
                OrchestratorError::MissingRuntool { .. } => CliError::MissingTool(e),
                OrchestratorError::UnknownBudget(_) => CliError::Usage(e.to_string()),
                other => failure(other),
            })?;
    let failed = records.iter().filter(|r| r.error.is_some()).count();
    let timed_out = records.iter().filter(|r| r.timed_out).count();
    log::info!(
        "{} runs in {}: {timed_out} timed out, {failed} failed",
        records.len(),
        orchestrator::results_dir_name(tool, budget)
    );
    Ok(())
}

/// Run folders (those holding a runs file) directly below `results_dir`.
fn run_folders(results_dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut dirs: Vec<PathBuf> = fs::read_dir(results_dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.join(orchestrator::RUNS_FILE).is_file())
        .collect();
    dirs.sort();
    Ok(dirs)
}

fn cmd_compute_metrics(cli: &Cli, results_dir: &Path, jobs: usize) -> Result<(), CliError> {
    if !results_dir.is_dir() {
        return Err(CliError::Usage(format!(
            "{} is not a directory",
            results_dir.display()
        )));
    }
    let suite = cli.load_benchmarks()?;
    let cfg = cli.load_config(false)?;
    let backend = metrics::backend_for(&cfg.analyzer);
    let opts = MetricsOptions::from_config(&cfg, Execution::from_jobs(jobs));
    let folders = run_folders(results_dir).map_err(failure)?;
    if folders.is_empty() {
        log::warn!("no run folders in {}", results_dir.display());
        return Ok(());
    }
    with_jobs(jobs, || {
        for folder in &folders {
            match measure_folder(cli, folder, &suite, backend.as_ref(), &opts) {
                Ok(n) => log::info!("{}: {n} runs measured", folder.display()),
                Err(e) => log::error!("{}: {e}; skipped", folder.display()),
            }
        }
    });
    Ok(())
}

fn measure_folder(
    cli: &Cli,
    folder: &Path,
    suite: &BenchmarkSuite,
    backend: &dyn metrics::AnalyzerBackend,
    opts: &MetricsOptions,
) -> Result<usize, String> {
    let runs = orchestrator::read_runs(folder).map_err(|e| e.to_string())?;
    let mut records: Vec<MetricsRecord> = Vec::new();
    for run in &runs {
        let Some(bench) = suite.get(&run.benchmark_id) else {
            log::error!(
                "benchmark {} is not in the benchmark list",
                run.benchmark_id
            );
            continue;
        };
        let unit = cli.resolve(&Path::new(&bench.src).join(&run.unit_name));
        match metrics::compute_metrics(backend, run, &unit, opts) {
            Ok(r) => records.push(r),
            Err(e) => log::error!("{}/{}: {e}", run.benchmark_id, run.unit_name),
        }
    }
    metrics::write_transcript(&records, &folder.join(TRANSCRIPT_FILE))
        .map_err(|e| e.to_string())?;
    Ok(records.len())
}

/// Concatenate every transcript below `dir` into `out`; returns the row count.
pub fn cmd_merge(dir: &Path, out: &Path) -> Result<usize, CliError> {
    let mut rows: Vec<MetricsRecord> = Vec::new();
    let mut found = 0;
    let walk = walkdir::WalkDir::new(dir).sort_by_file_name();
    for entry in walk.into_iter().filter_map(Result::ok) {
        if entry.file_type().is_file() && entry.file_name() == TRANSCRIPT_FILE {
            found += 1;
            let recs = metrics::read_transcript(entry.path()).map_err(|e| match e {
                MetricsError::Schema(m) => {
                    CliError::Schema(format!("{}: {m}", entry.path().display()))
                }
                other => failure(format!("{}: {other}", entry.path().display())),
            })?;
            rows.extend(recs);
        }
    }
    if found == 0 {
        return Err(CliError::Usage(format!(
            "no {TRANSCRIPT_FILE} below {}",
            dir.display()
        )));
    }
    rows.sort_by(|a, b| {
        (&a.tool, &a.benchmark_id, a.budget_s, a.repetition).cmp(&(
            &b.tool,
            &b.benchmark_id,
            b.budget_s,
            b.repetition,
        ))
    });
    metrics::write_transcript(&rows, out).map_err(failure)?;
    log::info!(
        "{} rows from {found} transcripts into {}",
        rows.len(),
        out.display()
    );
    Ok(rows.len())
}

pub fn cmd_score(
    results_csv: &Path,
    out_dir: &Path,
    weights: &config::Weights,
    opts: MatrixOptions,
) -> Result<(), CliError> {
    let records = metrics::read_transcript(results_csv).map_err(|e| match e {
        MetricsError::Io(e) => CliError::Usage(format!("{}: {e}", results_csv.display())),
        other => CliError::Usage(format!("{}: {other}", results_csv.display())),
    })?;
    fs::create_dir_all(out_dir).map_err(failure)?;
    let scores: Vec<_> = records
        .iter()
        .map(|m| scoring::score_run(m, weights))
        .collect();
    scoring::write_scores_csv(&scoring::aggregate(&scores), &out_dir.join("scores.csv"))
        .map_err(failure)?;
    let table = scoring::build_score_table(&scores, weights, opts).map_err(failure)?;
    let degenerate = |e: StatsError| match e {
        StatsError::DegenerateMatrix { .. } => CliError::Degenerate(e),
        other => failure(other),
    };
    let fr = stats::friedman(&table.matrix).map_err(degenerate)?;
    let conover = stats::conover_posthoc(&table.matrix, &fr).map_err(degenerate)?;
    let report =
        stats::build_report(&table.matrix, &table.stddevs, &fr, &conover).map_err(failure)?;
    report
        .write_ranking_csv(&out_dir.join("ranking.csv"))
        .map_err(failure)?;
    report
        .write_pairwise_csv(&out_dir.join("pairwise.csv"))
        .map_err(failure)?;
    fs::write(out_dir.join("report.txt"), report.render()).map_err(failure)?;
    let mut err = io::stderr().lock();
    let _ = write!(err, "{}", report.render_scores());
    Ok(())
}

fn cmd_select(
    cli: &Cli,
    candidates_csv: &Path,
    out_dir: &Path,
    opts: &SelectOptions,
    adapter: Option<&Path>,
) -> Result<(), CliError> {
    let cands = benchselect::read_candidates(candidates_csv).map_err(|e| match e {
        benchselect::SelectError::Schema { .. } => CliError::Schema(e.to_string()),
        other => CliError::Usage(format!("{}: {other}", candidates_csv.display())),
    })?;
    let cfg = cli.load_config(false)?;
    let mopts = MetricsOptions::from_config(&cfg, Execution::Sequential);
    let backend = metrics::backend_for(&cfg.analyzer);
    let selection = match adapter {
        Some(home) => {
            let home = cli.resolve(home);
            let runtool = home.join(orchestrator::RUNTOOL);
            if !runtool.is_file() {
                return Err(CliError::MissingTool(OrchestratorError::MissingRuntool {
                    tool: home.display().to_string(),
                    path: runtool,
                }));
            }
            let home = home.canonicalize().map_err(failure)?;
            let runner = AdapterSmoke {
                runtool: home.join(orchestrator::RUNTOOL),
                home,
                backend: backend.as_ref(),
                opts: mopts,
                handshake_timeout: crate::protocol::DEFAULT_HANDSHAKE_TIMEOUT,
            };
            benchselect::select(cands, opts, &runner)
        }
        None => benchselect::select(
            cands,
            opts,
            &ToySmoke {
                seed: opts.seed,
                opts: mopts,
            },
        ),
    };
    fs::create_dir_all(out_dir).map_err(failure)?;
    selection
        .write_selection_csv(&out_dir.join("selection.csv"))
        .map_err(failure)?;
    selection
        .write_summary_csv(&out_dir.join("selection_summary.csv"))
        .map_err(failure)?;
    log::info!(
        "{} candidates, {} after complexity filter, {} after smoke run, {} selected",
        selection.candidates,
        selection.complexity_filtered,
        selection.smoked.iter().filter(|c| c.smoke_ok).count(),
        selection.selected.len()
    );
    Ok(())
}
