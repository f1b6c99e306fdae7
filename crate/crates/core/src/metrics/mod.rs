//! From generated suites to measurements: suite validation, flakiness,
//! coverage and coverage-filtered mutation analysis.

mod backend;
mod record;

pub use backend::*;
pub use record::*;

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use crate::config::{AnalyzerSpec, EvaluationConfig};
use crate::orchestrator::RunRecord;
use crate::parallel::{map_ordered, Execution};

#[derive(Debug, thiserror::Error)]
pub enum MetricsError {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("schema mismatch: {0}")]
    Schema(String),
    #[error("analyzer failure: {0}")]
    Backend(String),
    #[error("unit under test: {0}")]
    Unit(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricsOptions {
    pub flaky_runs: u32,
    pub mutation_deadline: Duration,
    pub execution: Execution,
}

impl Default for MetricsOptions {
    fn default() -> Self {
        Self {
            flaky_runs: crate::config::DEFAULT_FLAKY_RUNS,
            mutation_deadline: Duration::from_secs(crate::config::DEFAULT_MUTATION_DEADLINE_S),
            execution: Execution::Sequential,
        }
    }
}

impl MetricsOptions {
    pub fn from_config(cfg: &EvaluationConfig, execution: Execution) -> Self {
        Self {
            flaky_runs: cfg.flaky_runs,
            mutation_deadline: Duration::from_secs(cfg.mutation_deadline_s),
            execution,
        }
    }
}

pub fn backend_for(spec: &AnalyzerSpec) -> Box<dyn AnalyzerBackend> {
    match spec {
        AnalyzerSpec::Toy => Box::new(ToyBackend),
        AnalyzerSpec::External(cmd) => Box::new(ExternalBackend::new(cmd.clone())),
    }
}

/// Valid suite names and the number of invalid ones.
pub fn validate_suites(session: &dyn AnalysisSession) -> (Vec<String>, u64) {
    let v = session.validation();
    (v.valid.clone(), v.invalid.len() as u64)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FlakyReport {
    pub tests_total: u64,
    /// Tests with identical verdicts on every run, in execution order.
    pub stable: Vec<TestId>,
    /// Stable tests that passed every run.
    pub passing: Vec<TestId>,
    pub flaky: Vec<TestId>,
    /// Stable tests that failed every run.
    pub failing: Vec<TestId>,
}

pub fn detect_flaky(
    session: &dyn AnalysisSession,
    flaky_runs: u32,
) -> Result<FlakyReport, MetricsError> {
    let mut order: Vec<TestId> = Vec::new();
    let mut verdicts: BTreeMap<TestId, Vec<bool>> = BTreeMap::new();
    for round in 0..flaky_runs.max(1) {
        for (id, passed) in session.run_tests(round)? {
            let v = verdicts.entry(id.clone()).or_default();
            if v.is_empty() {
                order.push(id);
            }
            v.push(passed);
        }
    }
    let mut report = FlakyReport {
        tests_total: order.len() as u64,
        ..Default::default()
    };
    for id in order {
        let v = &verdicts[&id];
        // a test missing from some round counts as flaky
        let complete = v.len() == flaky_runs.max(1) as usize;
        if !complete || v.iter().any(|x| *x != v[0]) {
            report.flaky.push(id);
        } else {
            if v[0] {
                report.passing.push(id.clone());
            } else {
                report.failing.push(id.clone());
            }
            report.stable.push(id);
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverageResult {
    pub lines_total: u64,
    pub lines_covered: u64,
    pub branches_total: u64,
    pub branches_covered: u64,
    pub per_test_lines: BTreeMap<TestId, BTreeSet<usize>>,
}

/// Union coverage of the `stable` tests.
pub fn measure_coverage(
    session: &dyn AnalysisSession,
    stable: &[TestId],
) -> Result<CoverageResult, MetricsError> {
    let report = session.coverage()?;
    let keep: BTreeSet<&TestId> = stable.iter().collect();
    let mut lines = BTreeSet::new();
    let mut branches = BTreeSet::new();
    let mut per_test_lines = BTreeMap::new();
    for t in report
        .per_test
        .into_iter()
        .filter(|t| keep.contains(&t.test))
    {
        lines.extend(t.lines.iter().copied());
        branches.extend(t.branches.iter().copied());
        per_test_lines.insert(t.test, t.lines.into_iter().collect());
    }
    Ok(CoverageResult {
        lines_total: report.lines_total,
        lines_covered: (lines.len() as u64).min(report.lines_total),
        branches_total: report.branches_total,
        branches_covered: (branches.len() as u64).min(report.branches_total),
        per_test_lines,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MutationResult {
    pub mutants_total: u64,
    pub mutants_covered: u64,
    pub mutants_killed: u64,
    pub deadline_hit: bool,
    pub killed: Vec<String>,
}

/// Coverage-filtered mutation analysis. A mutant is covered when a stable
/// test covers its line; it is killed when a test that passes on the original
/// and covers the line fails on it. Mutants not reached before `deadline`
/// count as not killed.
pub fn mutation_analysis(
    session: &dyn AnalysisSession,
    coverage: &CoverageResult,
    passing: &[TestId],
    deadline: Duration,
    execution: Execution,
) -> Result<MutationResult, MetricsError> {
    let start = Instant::now();
    let mutants = session.mutants()?;
    let covered: Vec<(&MutantInfo, Vec<TestId>)> = mutants
        .iter()
        .filter(|m| {
            coverage
                .per_test_lines
                .values()
                .any(|l| l.contains(&m.line))
        })
        .map(|m| {
            let relevant = passing
                .iter()
                .filter(|t| {
                    coverage
                        .per_test_lines
                        .get(*t)
                        .is_some_and(|l| l.contains(&m.line))
                })
                .cloned()
                .collect();
            (m, relevant)
        })
        .collect();
    let outcomes = map_ordered(
        &covered,
        execution,
        |(m, tests)| -> Result<Option<bool>, MetricsError> {
            if start.elapsed() >= deadline {
                return Ok(None);
            }
            if tests.is_empty() {
                return Ok(Some(false));
            }
            let verdicts = session.execute_mutant(m, tests)?;
            Ok(Some(verdicts.iter().any(|(_, passed)| !passed)))
        },
    );
    let mut result = MutationResult {
        mutants_total: mutants.len() as u64,
        mutants_covered: covered.len() as u64,
        ..Default::default()
    };
    for ((m, _), outcome) in covered.iter().zip(outcomes) {
        match outcome? {
            Some(true) => result.killed.push(m.id.clone()),
            Some(false) => {}
            None => result.deadline_hit = true,
        }
    }
    result.mutants_killed = result.killed.len() as u64;
    Ok(result)
}

fn note(run: &RunRecord, message: &str) {
    log::warn!(
        "{}/{}/{}: {message}",
        run.tool,
        run.benchmark_id,
        run.unit_name
    );
    if let Ok(mut f) = std::fs::OpenOptions::new()
        .append(true)
        .create(true)
        .open(&run.log_path)
    {
        let _ = writeln!(f, "{} metrics: {message}", crate::orchestrator::timestamp());
    }
}

/// Full pipeline for one run. Analyzer failures after the suites are opened
/// zero the affected fields and are noted in the run log.
pub fn compute_metrics(
    backend: &dyn AnalyzerBackend,
    run: &RunRecord,
    unit: &Path,
    opts: &MetricsOptions,
) -> Result<MetricsRecord, MetricsError> {
    let session = backend.open(unit, &run.testcases_dir)?;
    let mut record = MetricsRecord {
        tool: run.tool.clone(),
        benchmark_id: run.benchmark_id.clone(),
        unit_name: run.unit_name.clone(),
        budget_s: run.budget_s,
        repetition: run.repetition,
        consumed_s: run.consumed_s,
        timed_out: run.timed_out,
        ..Default::default()
    };
    measure(session.as_ref(), opts, &mut record, |msg| note(run, msg));
    Ok(record)
}

/// Fill the measurement fields of `record` from an opened session.
pub fn measure(
    session: &dyn AnalysisSession,
    opts: &MetricsOptions,
    record: &mut MetricsRecord,
    mut warn: impl FnMut(&str),
) {
    let (valid, invalid) = validate_suites(session);
    record.suites_total = valid.len() as u64 + invalid;
    record.suites_invalid = invalid;
    let flaky = match detect_flaky(session, opts.flaky_runs) {
        Ok(f) => f,
        Err(e) => return warn(&format!("test execution failed: {e}")),
    };
    record.tests_total = flaky.tests_total;
    record.tests_flaky = flaky.flaky.len() as u64;
    record.tests_failing = flaky.failing.len() as u64;
    let coverage = match measure_coverage(session, &flaky.stable) {
        Ok(c) => c,
        Err(e) => return warn(&format!("coverage failed: {e}")),
    };
    record.lines_total = coverage.lines_total;
    record.lines_covered = coverage.lines_covered;
    record.branches_total = coverage.branches_total;
    record.branches_covered = coverage.branches_covered;
    match mutation_analysis(
        session,
        &coverage,
        &flaky.passing,
        opts.mutation_deadline,
        opts.execution,
    ) {
        Ok(m) => {
            record.mutants_total = m.mutants_total;
            record.mutants_covered = m.mutants_covered;
            record.mutants_killed = m.mutants_killed;
            record.mutation_deadline_hit = m.deadline_hit;
            if m.deadline_hit {
                warn("mutation deadline reached");
            }
        }
        Err(e) => warn(&format!("mutation analysis failed: {e}")),
    }
}
