//! Benchmark selection: complexity filter, smoke run with a baseline
//! generator, then per-project random sampling.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::Stdio;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::Benchmark;
use crate::metrics::{measure, AnalyzerBackend, MetricsOptions, MetricsRecord, ToySession};
use crate::orchestrator::{enforce_deadline, terminate_group};
use crate::protocol::{AdapterSession, Completion, RunRequest};
use crate::toybench::{self, Quality, ToySuite};

pub const DEFAULT_MIN_COMPLEXITY: u32 = 5;
pub const DEFAULT_SMOKE_BUDGET_S: u64 = 10;

#[derive(Debug, thiserror::Error)]
pub enum SelectError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("candidates line {line}: {message}")]
    Schema { line: u64, message: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CandidateUnit {
    pub project: String,
    pub unit: String,
    pub complexity: u32,
    pub path: PathBuf,
    pub smoke_ok: bool,
    pub smoke_metrics: Option<MetricsRecord>,
}

impl CandidateUnit {
    pub fn new(project: &str, unit: &str, complexity: u32, path: impl Into<PathBuf>) -> Self {
        Self {
            project: project.into(),
            unit: unit.into(),
            complexity,
            path: path.into(),
            smoke_ok: false,
            smoke_metrics: None,
        }
    }
}

const CANDIDATES_HEADER: [&str; 4] = ["project", "unit", "complexity", "path"];

/// Read a `project,unit,complexity,path` CSV.
pub fn read_candidates_from(input: impl io::Read) -> Result<Vec<CandidateUnit>, SelectError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(input);
    if !r.headers()?.iter().eq(CANDIDATES_HEADER) {
        return Err(SelectError::Schema {
            line: 1,
            message: format!("header must be `{}`", CANDIDATES_HEADER.join(",")),
        });
    }
    r.records()
        .enumerate()
        .map(|(i, rec)| {
            let rec = rec?;
            let line = i as u64 + 2;
            let complexity = rec[2]
                .parse::<u32>()
                .ok()
                .filter(|c| *c >= 1)
                .ok_or_else(|| SelectError::Schema {
                    line,
                    message: format!("complexity must be a positive integer, got `{}`", &rec[2]),
                })?;
            Ok(CandidateUnit::new(&rec[0], &rec[1], complexity, &rec[3]))
        })
        .collect()
}

pub fn read_candidates(path: &Path) -> Result<Vec<CandidateUnit>, SelectError> {
    read_candidates_from(fs::File::open(path)?)
}

pub fn write_candidates(cands: &[CandidateUnit], path: &Path) -> Result<(), SelectError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)?;
    w.write_record(CANDIDATES_HEADER)?;
    for c in cands {
        w.write_record([
            c.project.clone(),
            c.unit.clone(),
            c.complexity.to_string(),
            c.path.to_string_lossy().into_owned(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn filter_by_complexity(cands: Vec<CandidateUnit>, threshold: u32) -> Vec<CandidateUnit> {
    cands
        .into_iter()
        .filter(|c| c.complexity >= threshold)
        .collect()
}

/// Baseline generator run used by the smoke filter.
pub trait SmokeRunner {
    fn smoke(&self, cand: &CandidateUnit, budget_s: u64) -> Result<MetricsRecord, String>;
}

/// In-process random generation and toy analysis.
#[derive(Debug, Clone, Copy)]
pub struct ToySmoke {
    pub seed: u64,
    pub opts: MetricsOptions,
}

impl SmokeRunner for ToySmoke {
    fn smoke(&self, cand: &CandidateUnit, budget_s: u64) -> Result<MetricsRecord, String> {
        let path = crate::metrics::toy_unit_path(&cand.path);
        let text = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let unit = toybench::parse_unit(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let tests = toybench::mock_generate(&unit, budget_s, Quality::Random, self.seed);
        let suites = tests
            .chunks(10)
            .enumerate()
            .map(|(i, c)| {
                let suite = ToySuite {
                    unit: unit.name.clone(),
                    tests: c.to_vec(),
                };
                (format!("{}_{i}", cand.unit), suite)
            })
            .collect();
        let session = ToySession::from_suites(unit, suites);
        let mut record = smoke_record(cand, budget_s);
        measure(&session, &self.opts, &mut record, |m| {
            log::warn!("{}: {m}", cand.unit)
        });
        Ok(record)
    }
}

fn smoke_record(cand: &CandidateUnit, budget_s: u64) -> MetricsRecord {
    MetricsRecord {
        tool: "smoke".into(),
        benchmark_id: cand.project.clone(),
        unit_name: cand.unit.clone(),
        budget_s,
        repetition: 1,
        ..Default::default()
    }
}

/// Smoke runs through a `runtool` adapter. Each candidate is presented as a
/// one-unit benchmark whose source root is the directory of its path.
pub struct AdapterSmoke<'a> {
    pub runtool: PathBuf,
    pub home: PathBuf,
    pub backend: &'a dyn AnalyzerBackend,
    pub opts: MetricsOptions,
    pub handshake_timeout: Duration,
}

impl AdapterSmoke<'_> {
    fn generate(&self, bench: &Benchmark, budget_s: u64) -> Result<(f64, bool), String> {
        let mut session = AdapterSession::spawn(&self.runtool, &self.home, Stdio::null(), &[])
            .map_err(|e| e.to_string())?
            .with_handshake_timeout(self.handshake_timeout);
        let result = session
            .handshake(bench)
            .map_err(|e| e.to_string())
            .and_then(|_| {
                let req = RunRequest {
                    budget_s,
                    unit_name: bench.classes[0].clone(),
                };
                let t0 = Instant::now();
                session.send_request(&req).map_err(|e| e.to_string())?;
                let done = session
                    .await_ready(Duration::from_secs(2 * budget_s))
                    .map_err(|e| e.to_string())?;
                Ok((t0.elapsed().as_secs_f64(), done == Completion::Pending))
            });
        if let Some(mut child) = session.close() {
            let stop = match result {
                Ok((_, false)) => enforce_deadline(&mut child, self.handshake_timeout).map(|_| ()),
                _ => terminate_group(&mut child),
            };
            stop.map_err(|e| e.to_string())?;
        }
        result
    }
}

impl SmokeRunner for AdapterSmoke<'_> {
    fn smoke(&self, cand: &CandidateUnit, budget_s: u64) -> Result<MetricsRecord, String> {
        let cases = self.home.join("temp").join("testcases");
        for d in [cases.clone(), self.home.join("temp").join("data")] {
            if d.exists() {
                fs::remove_dir_all(&d).map_err(|e| e.to_string())?;
            }
            fs::create_dir_all(&d).map_err(|e| e.to_string())?;
        }
        let src = cand
            .path
            .parent()
            .map(|p| p.to_string_lossy().into_owned())
            .unwrap_or_default();
        let bench = Benchmark {
            id: cand.project.clone(),
            src: src.clone(),
            bin: src,
            classes: vec![cand.unit.clone()],
            classpath: Vec::new(),
        };
        let (consumed, timed_out) = self.generate(&bench, budget_s)?;
        let session = self
            .backend
            .open(&cand.path, &cases)
            .map_err(|e| e.to_string())?;
        let mut record = smoke_record(cand, budget_s);
        record.consumed_s = consumed;
        record.timed_out = timed_out;
        measure(session.as_ref(), &self.opts, &mut record, |m| {
            log::warn!("{}: {m}", cand.unit)
        });
        Ok(record)
    }
}

/// Run the baseline on every candidate and keep those with at least one
/// test in a valid suite.
pub fn smoke_filter(
    cands: Vec<CandidateUnit>,
    budget_s: u64,
    runner: &dyn SmokeRunner,
) -> (Vec<CandidateUnit>, Vec<CandidateUnit>) {
    let mut all = Vec::with_capacity(cands.len());
    for mut c in cands {
        match runner.smoke(&c, budget_s) {
            Ok(m) => {
                c.smoke_ok = m.tests_total > 0;
                c.smoke_metrics = Some(m);
            }
            Err(e) => {
                log::warn!("smoke run failed for {}/{}: {e}", c.project, c.unit);
                c.smoke_ok = false;
            }
        }
        all.push(c);
    }
    let kept = all.iter().filter(|c| c.smoke_ok).cloned().collect();
    (kept, all)
}

/// Uniform sample of `min(n, available)` units per project, without
/// replacement. Input order does not matter; output is sorted by
/// (project, unit).
pub fn sample_per_project(cands: &[CandidateUnit], n: usize, seed: u64) -> Vec<CandidateUnit> {
    let mut by_project: BTreeMap<&str, Vec<&CandidateUnit>> = BTreeMap::new();
    for c in cands {
        by_project.entry(&c.project).or_default().push(c);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut selected = Vec::new();
    for (_, mut group) in by_project {
        group.sort_by(|a, b| a.unit.cmp(&b.unit).then_with(|| a.path.cmp(&b.path)));
        let take = n.min(group.len());
        let mut picked: Vec<usize> =
            rand::seq::index::sample(&mut rng, group.len(), take).into_vec();
        picked.sort_unstable();
        selected.extend(picked.into_iter().map(|i| group[i].clone()));
    }
    selected
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelectOptions {
    pub min_complexity: u32,
    pub smoke_budget_s: u64,
    pub n_per_project: usize,
    pub seed: u64,
}

impl Default for SelectOptions {
    fn default() -> Self {
        Self {
            min_complexity: DEFAULT_MIN_COMPLEXITY,
            smoke_budget_s: DEFAULT_SMOKE_BUDGET_S,
            n_per_project: 20,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    pub candidates: usize,
    pub complexity_filtered: usize,
    /// Every complexity-filtered candidate with its smoke outcome.
    pub smoked: Vec<CandidateUnit>,
    pub selected: Vec<CandidateUnit>,
}

/// Complexity filter, smoke filter, then sampling, in that order.
pub fn select(
    cands: Vec<CandidateUnit>,
    opts: &SelectOptions,
    runner: &dyn SmokeRunner,
) -> Selection {
    let candidates = cands.len();
    let filtered = filter_by_complexity(cands, opts.min_complexity);
    let complexity_filtered = filtered.len();
    let (kept, smoked) = smoke_filter(filtered, opts.smoke_budget_s, runner);
    let selected = sample_per_project(&kept, opts.n_per_project, opts.seed);
    Selection {
        candidates,
        complexity_filtered,
        smoked,
        selected,
    }
}

impl Selection {
    pub fn write_selection_csv(&self, path: &Path) -> Result<(), SelectError> {
        write_candidates(&self.selected, path)
    }

    /// One row per smoked candidate with its smoke metrics and whether it
    /// was selected.
    pub fn write_summary_csv(&self, path: &Path) -> Result<(), SelectError> {
        let chosen: std::collections::BTreeSet<(&str, &str)> = self
            .selected
            .iter()
            .map(|c| (c.project.as_str(), c.unit.as_str()))
            .collect();
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_path(path)?;
        w.write_record([
            "project",
            "unit",
            "complexity",
            "smoke_ok",
            "selected",
            "tests_total",
            "lines_covered",
            "lines_total",
            "branches_covered",
            "branches_total",
            "mutants_killed",
            "mutants_total",
        ])?;
        let mut rows: Vec<&CandidateUnit> = self.smoked.iter().collect();
        rows.sort_by(|a, b| (&a.project, &a.unit).cmp(&(&b.project, &b.unit)));
        for c in rows {
            let m = c.smoke_metrics.clone().unwrap_or_default();
            let selected = chosen.contains(&(c.project.as_str(), c.unit.as_str()));
            w.write_record([
                c.project.clone(),
                c.unit.clone(),
                c.complexity.to_string(),
                c.smoke_ok.to_string(),
                selected.to_string(),
                m.tests_total.to_string(),
                m.lines_covered.to_string(),
                m.lines_total.to_string(),
                m.branches_covered.to_string(),
                m.branches_total.to_string(),
                m.mutants_killed.to_string(),
                m.mutants_total.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}
