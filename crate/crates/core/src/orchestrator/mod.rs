//! Drives generators over the (benchmark, unit, repetition) matrix for one
//! tool and budget, and lays out results as
//! `results_<tool>_<budget>/<benchmark>_<repetition>/`.
//!
//! Inside a run folder each unit gets `testcases/<unit>/` and `data/<unit>/`;
//! `runs.csv` lists the unit runs and `log.txt` collects adapter stderr and
//! orchestrator events.

mod deadline;

pub use deadline::*;

use std::fs::{self, File, OpenOptions};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::Stdio;
use std::time::{Duration, Instant};

use crate::config::{Benchmark, BenchmarkSuite, EvaluationConfig};
use crate::protocol::{AdapterSession, Completion, RunRequest, DEFAULT_HANDSHAKE_TIMEOUT};

pub const RUNTOOL: &str = "runtool";
pub const RUNS_FILE: &str = "runs.csv";
pub const LOG_FILE: &str = "log.txt";
/// Set in the adapter's environment to the current repetition index.
pub const REPETITION_ENV: &str = "BENCHTOOL_REPETITION";

const RUNS_HEADER: [&str; 11] = [
    "tool",
    "benchmark",
    "class",
    "budget",
    "repetition",
    "consumed_s",
    "timed_out",
    "testcases_dir",
    "data_dir",
    "log_path",
    "error",
];

#[derive(Debug, thiserror::Error)]
pub enum OrchestratorError {
    #[error("no runtool for `{tool}` (looked for {path})")]
    MissingRuntool { tool: String, path: PathBuf },
    #[error("budget {0}s is not configured")]
    UnknownBudget(u64),
    #[error("could not terminate process group {0}")]
    KillFailed(u32),
    #[error("malformed {RUNS_FILE}: {0}")]
    Schema(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

/// One generation request for one unit.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub tool: String,
    pub benchmark_id: String,
    pub unit_name: String,
    pub budget_s: u64,
    pub repetition: u32,
    pub consumed_s: f64,
    pub timed_out: bool,
    pub testcases_dir: PathBuf,
    pub data_dir: PathBuf,
    pub log_path: PathBuf,
    pub error: Option<String>,
}

pub fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

pub fn results_dir_name(tool: &str, budget_s: u64) -> String {
    format!("results_{tool}_{budget_s}")
}

pub fn run_dir_name(benchmark_id: &str, repetition: u32) -> String {
    format!("{benchmark_id}_{repetition}")
}

fn relative(path: &Path, base: &Path) -> String {
    path.strip_prefix(base)
        .unwrap_or(path)
        .to_string_lossy()
        .into_owned()
}

fn runs_writer(path: &Path, append: bool) -> Result<csv::Writer<File>, OrchestratorError> {
    let file = OpenOptions::new()
        .create(true)
        .append(append)
        .write(true)
        .truncate(!append)
        .open(path)?;
    Ok(csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(file))
}

impl RunRecord {
    fn fields(&self, run_dir: &Path) -> [String; 11] {
        [
            self.tool.clone(),
            self.benchmark_id.clone(),
            self.unit_name.clone(),
            self.budget_s.to_string(),
            self.repetition.to_string(),
            self.consumed_s.to_string(),
            self.timed_out.to_string(),
            relative(&self.testcases_dir, run_dir),
            relative(&self.data_dir, run_dir),
            relative(&self.log_path, run_dir),
            self.error.clone().unwrap_or_default(),
        ]
    }
}

/// Write `runs.csv` in `run_dir`; paths are stored relative to it.
pub fn write_runs(run_dir: &Path, records: &[RunRecord]) -> Result<(), OrchestratorError> {
    let mut w = runs_writer(&run_dir.join(RUNS_FILE), false)?;
    w.write_record(RUNS_HEADER)?;
    for r in records {
        w.write_record(r.fields(run_dir))?;
    }
    w.flush()?;
    Ok(())
}

/// Read `runs.csv` from `run_dir`, resolving paths against it.
pub fn read_runs(run_dir: &Path) -> Result<Vec<RunRecord>, OrchestratorError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(run_dir.join(RUNS_FILE))?;
    if !r.headers()?.iter().eq(RUNS_HEADER.iter().copied()) {
        return Err(OrchestratorError::Schema("unexpected header".into()));
    }
    r.records()
        .map(|rec| {
            let rec = rec?;
            let bad = |f: &str| OrchestratorError::Schema(format!("bad `{f}` in {:?}", rec));
            Ok(RunRecord {
                tool: rec[0].to_string(),
                benchmark_id: rec[1].to_string(),
                unit_name: rec[2].to_string(),
                budget_s: rec[3].parse().map_err(|_| bad("budget"))?,
                repetition: rec[4].parse().map_err(|_| bad("repetition"))?,
                consumed_s: rec[5].parse().map_err(|_| bad("consumed_s"))?,
                timed_out: rec[6].parse().map_err(|_| bad("timed_out"))?,
                testcases_dir: run_dir.join(&rec[7]),
                data_dir: run_dir.join(&rec[8]),
                log_path: run_dir.join(&rec[9]),
                error: Some(rec[10].to_string()).filter(|e| !e.is_empty()),
            })
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct GenerateOptions {
    /// Directory receiving `results_<tool>_<budget>/`.
    pub results_root: PathBuf,
    pub handshake_timeout: Duration,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        Self {
            results_root: PathBuf::from("."),
            handshake_timeout: DEFAULT_HANDSHAKE_TIMEOUT,
        }
    }
}

/// Locate `<tool-home>/runtool` for a configured tool.
pub fn find_runtool(
    cfg: &EvaluationConfig,
    tool: &str,
) -> Result<(PathBuf, PathBuf), OrchestratorError> {
    let missing = |path: PathBuf| OrchestratorError::MissingRuntool {
        tool: tool.to_string(),
        path,
    };
    let home = cfg
        .tool_home(tool)
        .ok_or_else(|| missing(PathBuf::from(format!("<{tool}>/{RUNTOOL}"))))?
        .to_path_buf();
    let runtool = home.join(RUNTOOL);
    if !runtool.is_file() {
        return Err(missing(runtool));
    }
    let home = home.canonicalize()?;
    Ok((home.join(RUNTOOL), home))
}

fn reset_dir(dir: &Path) -> io::Result<()> {
    if dir.exists() {
        fs::remove_dir_all(dir)?;
    }
    fs::create_dir_all(dir)
}

fn copy_tree(from: &Path, to: &Path) -> io::Result<()> {
    fs::create_dir_all(to)?;
    if !from.exists() {
        return Ok(());
    }
    for entry in walkdir::WalkDir::new(from).min_depth(1) {
        let entry = entry.map_err(io::Error::other)?;
        let target = to.join(
            entry
                .path()
                .strip_prefix(from)
                .expect("walk stays below root"),
        );
        if entry.file_type().is_dir() {
            fs::create_dir_all(&target)?;
        } else if entry.file_type().is_file() {
            fs::copy(entry.path(), &target)?;
        }
    }
    Ok(())
}

struct Campaign<'a> {
    tool: &'a str,
    runtool: PathBuf,
    home: PathBuf,
    budget_s: u64,
    opts: &'a GenerateOptions,
}

struct RunLog {
    file: File,
}

impl RunLog {
    fn event(&mut self, msg: &str) {
        let _ = writeln!(self.file, "{} {msg}", timestamp());
        log::info!("{msg}");
    }

    fn stdio(&self) -> Stdio {
        self.file
            .try_clone()
            .map_or_else(|_| Stdio::null(), Stdio::from)
    }
}

impl Campaign<'_> {
    fn temp(&self, which: &str) -> PathBuf {
        self.home.join("temp").join(which)
    }

    fn start_session(
        &self,
        bench: &Benchmark,
        rep: u32,
        log: &mut RunLog,
    ) -> Result<AdapterSession, String> {
        let env = [(REPETITION_ENV.to_string(), rep.to_string())];
        let mut session = AdapterSession::spawn(&self.runtool, &self.home, log.stdio(), &env)
            .map_err(|e| format!("cannot start {}: {e}", self.runtool.display()))?
            .with_handshake_timeout(self.opts.handshake_timeout);
        log.event(&format!("handshake for {}", bench.id));
        match session.handshake(bench) {
            Ok(()) => {
                if !session.extra_classpath().is_empty() {
                    log.event(&format!(
                        "adapter classpath: {}",
                        session.extra_classpath().join(" ")
                    ));
                }
                Ok(session)
            }
            Err(e) => {
                self.shutdown(session, log, true);
                Err(format!("handshake failed: {e}"))
            }
        }
    }

    fn shutdown(&self, mut session: AdapterSession, log: &mut RunLog, force: bool) {
        let Some(mut child) = session.close() else {
            return;
        };
        let result = if force {
            terminate_group(&mut child).map(|_| Outcome::Killed)
        } else {
            enforce_deadline(&mut child, self.opts.handshake_timeout)
        };
        match result {
            Ok(Outcome::Killed) if !force => {
                log.event("adapter did not exit after end of input; killed")
            }
            Ok(_) => {}
            Err(e) => log.event(&format!("{e}")),
        }
    }

    fn run_benchmark(
        &self,
        bench: &Benchmark,
        rep: u32,
        run_dir: &Path,
    ) -> Result<Vec<RunRecord>, OrchestratorError> {
        reset_dir(run_dir)?;
        let log_path = run_dir.join(LOG_FILE);
        let mut log = RunLog {
            file: OpenOptions::new()
                .create(true)
                .append(true)
                .open(&log_path)?,
        };
        let mut runs_csv = runs_writer(&run_dir.join(RUNS_FILE), false)?;
        runs_csv.write_record(RUNS_HEADER)?;
        runs_csv.flush()?;
        let mut records = Vec::new();
        let mut session: Option<AdapterSession> = None;
        let mut sessions_started = 0;
        for unit in &bench.classes {
            let mut rec = RunRecord {
                tool: self.tool.to_string(),
                benchmark_id: bench.id.clone(),
                unit_name: unit.clone(),
                budget_s: self.budget_s,
                repetition: rep,
                consumed_s: 0.0,
                timed_out: false,
                testcases_dir: run_dir.join("testcases").join(unit),
                data_dir: run_dir.join("data").join(unit),
                log_path: log_path.clone(),
                error: None,
            };
            reset_dir(&self.temp("testcases"))?;
            reset_dir(&self.temp("data"))?;
            if session.is_none() && sessions_started < 2 {
                sessions_started += 1;
                match self.start_session(bench, rep, &mut log) {
                    Ok(s) => session = Some(s),
                    Err(e) => {
                        log.event(&e);
                        rec.error = Some(e);
                    }
                }
            }
            match session.as_mut() {
                Some(s) => self.generate_one(s, &mut rec, &mut log),
                None if rec.error.is_none() => {
                    rec.error = Some("adapter unavailable after restart".into());
                    log.event(&format!("skipping {unit}: adapter unavailable"));
                }
                None => {}
            }
            if rec.error.is_some() || rec.timed_out {
                if let Some(s) = session.take() {
                    self.shutdown(s, &mut log, true);
                }
            }
            copy_tree(&self.temp("testcases"), &rec.testcases_dir)?;
            copy_tree(&self.temp("data"), &rec.data_dir)?;
            runs_csv.write_record(rec.fields(run_dir))?;
            runs_csv.flush()?;
            records.push(rec);
        }
        if let Some(s) = session.take() {
            self.shutdown(s, &mut log, false);
        }
        Ok(records)
    }

    fn generate_one(&self, session: &mut AdapterSession, rec: &mut RunRecord, log: &mut RunLog) {
        let req = RunRequest {
            budget_s: self.budget_s,
            unit_name: rec.unit_name.clone(),
        };
        let limit = Duration::from_secs(2 * self.budget_s);
        log.event(&format!(
            "generate {} budget {}s",
            req.unit_name, req.budget_s
        ));
        let t0 = Instant::now();
        let outcome = session
            .send_request(&req)
            .and_then(|_| session.await_ready(limit));
        rec.consumed_s = t0.elapsed().as_secs_f64();
        match outcome {
            Ok(Completion::Ready) => {
                log.event(&format!("{} done in {:.3}s", req.unit_name, rec.consumed_s));
            }
            Ok(Completion::Pending) => {
                rec.timed_out = true;
                log.event(&format!(
                    "{} exceeded {}s; terminating adapter",
                    req.unit_name,
                    limit.as_secs()
                ));
            }
            Err(e) => {
                log.event(&format!("{}: {e}", req.unit_name));
                rec.error = Some(e.to_string());
            }
        }
    }
}

/// Run every benchmark of `suite` for repetitions
/// `start_from .. start_from + repetitions` with one tool and budget.
/// Per-run failures are recorded, not returned.
pub fn generate_tests(
    cfg: &EvaluationConfig,
    suite: &BenchmarkSuite,
    tool: &str,
    repetitions: u32,
    start_from: u32,
    budget_s: u64,
    opts: &GenerateOptions,
) -> Result<Vec<RunRecord>, OrchestratorError> {
    let (runtool, home) = find_runtool(cfg, tool)?;
    if !cfg.budgets_s.contains(&budget_s) {
        return Err(OrchestratorError::UnknownBudget(budget_s));
    }
    let campaign = Campaign {
        tool,
        runtool,
        home,
        budget_s,
        opts,
    };
    let results = opts.results_root.join(results_dir_name(tool, budget_s));
    let mut records = Vec::new();
    for rep in start_from..start_from.saturating_add(repetitions) {
        for bench in suite.iter() {
            let run_dir = results.join(run_dir_name(&bench.id, rep));
            records.extend(campaign.run_benchmark(bench, rep, &run_dir)?);
        }
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(results_dir_name("randoop", 10), "results_randoop_10");
        assert_eq!(run_dir_name("BCEL-1", 1), "BCEL-1_1");
    }

    #[test]
    fn runs_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let rec = RunRecord {
            tool: "t".into(),
            benchmark_id: "B-1".into(),
            unit_name: "abs".into(),
            budget_s: 10,
            repetition: 2,
            consumed_s: 1.25,
            timed_out: false,
            testcases_dir: dir.path().join("testcases/abs"),
            data_dir: dir.path().join("data/abs"),
            log_path: dir.path().join(LOG_FILE),
            error: Some("boom, twice".into()),
        };
        write_runs(dir.path(), std::slice::from_ref(&rec)).unwrap();
        let text = fs::read_to_string(dir.path().join(RUNS_FILE)).unwrap();
        assert!(text.contains(",testcases/abs,data/abs,log.txt,"));
        assert_eq!(read_runs(dir.path()).unwrap(), vec![rec]);
    }

    #[test]
    fn missing_runtool() {
        let dir = tempfile::tempdir().unwrap();
        let home = dir.path().join("mytool");
        fs::create_dir(&home).unwrap();
        let cfg = crate::config::parse_eval_config(&format!(
            "tools={}\nbudgets=10\nrepetitions=1\n",
            home.display()
        ))
        .unwrap();
        let err = generate_tests(
            &cfg,
            &BenchmarkSuite::default(),
            "mytool",
            1,
            1,
            10,
            &GenerateOptions::default(),
        );
        assert!(matches!(err, Err(OrchestratorError::MissingRuntool { .. })));
        let err = generate_tests(
            &cfg,
            &BenchmarkSuite::default(),
            "other",
            1,
            1,
            10,
            &GenerateOptions::default(),
        );
        assert!(matches!(err, Err(OrchestratorError::MissingRuntool { .. })));
    }
}
