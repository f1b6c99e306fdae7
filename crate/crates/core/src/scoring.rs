//! Per-run scores and their aggregation.
//!
//! A run scores
//! `(w_l cov_l + w_b cov_b + w_m cov_m) * min(1, 2 budget / consumed) - penalty`
//! where the penalty is 2 when no suite is usable and otherwise the invalid
//! suite ratio plus the flaky test ratio. A tool's final score sums, over
//! (unit, budget) pairs, the mean score across repetitions.

use std::collections::{BTreeMap, BTreeSet};
use std::io;
use std::path::Path;

use crate::config::Weights;
use crate::metrics::MetricsRecord;
use crate::stats::{ScoreMatrix, StatsError};

#[derive(Debug, thiserror::Error)]
pub enum ScoringError {
    #[error("no records to average")]
    EmptyGroup,
    #[error(transparent)]
    Stats(#[from] StatsError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreRecord {
    pub tool: String,
    pub benchmark_id: String,
    pub unit_name: String,
    pub budget_s: u64,
    pub repetition: u32,
    pub cov_l: f64,
    pub cov_b: f64,
    pub cov_m: f64,
    pub time_factor: f64,
    pub penalty: f64,
    pub score: f64,
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

pub fn time_factor(budget_s: u64, consumed_s: f64) -> f64 {
    if consumed_s <= 0.0 {
        1.0
    } else {
        (2.0 * budget_s as f64 / consumed_s).min(1.0)
    }
}

pub fn penalty_of(m: &MetricsRecord) -> f64 {
    if m.suites_total == 0 || m.suites_invalid >= m.suites_total {
        return 2.0;
    }
    ratio(m.suites_invalid, m.suites_total) + ratio(m.tests_flaky, m.tests_total)
}

pub fn score_run(m: &MetricsRecord, w: &Weights) -> ScoreRecord {
    let cov_l = ratio(m.lines_covered, m.lines_total);
    let cov_b = ratio(m.branches_covered, m.branches_total);
    let cov_m = ratio(m.mutants_killed, m.mutants_total);
    let time_factor = time_factor(m.budget_s, m.consumed_s);
    let penalty = penalty_of(m);
    let score = (w.line * cov_l + w.branch * cov_b + w.mutation * cov_m) * time_factor - penalty;
    ScoreRecord {
        tool: m.tool.clone(),
        benchmark_id: m.benchmark_id.clone(),
        unit_name: m.unit_name.clone(),
        budget_s: m.budget_s,
        repetition: m.repetition,
        cov_l,
        cov_b,
        cov_m,
        time_factor,
        penalty,
        score,
    }
}

/// Score of a run that produced nothing: always -2.
pub fn missing_run_score(w: &Weights) -> f64 {
    score_run(&MetricsRecord::default(), w).score
}

pub fn average_over_reps(records: &[ScoreRecord]) -> Result<f64, ScoringError> {
    if records.is_empty() {
        return Err(ScoringError::EmptyGroup);
    }
    Ok(records.iter().map(|r| r.score).sum::<f64>() / records.len() as f64)
}

type CellKey = (String, String, u64);

fn cell_key(r: &ScoreRecord) -> CellKey {
    (r.benchmark_id.clone(), r.unit_name.clone(), r.budget_s)
}

fn group_cells<'a>(
    records: impl IntoIterator<Item = &'a ScoreRecord>,
) -> BTreeMap<CellKey, Vec<ScoreRecord>> {
    let mut groups: BTreeMap<CellKey, Vec<ScoreRecord>> = BTreeMap::new();
    for r in records {
        groups.entry(cell_key(r)).or_default().push(r.clone());
    }
    groups
}

/// Sum over (unit, budget) of the mean score across repetitions, for the
/// records of one tool.
pub fn final_score(records: &[ScoreRecord]) -> f64 {
    group_cells(records)
        .values()
        .map(|g| average_over_reps(g).expect("groups are non-empty"))
        .sum()
}

fn sample_stddev(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (values.len() - 1) as f64;
    var.sqrt()
}

/// Mean and spread of one (tool, unit, budget) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreCell {
    pub tool: String,
    pub benchmark_id: String,
    pub unit_name: String,
    pub budget_s: u64,
    pub score_avg: f64,
    pub score_stddev: f64,
    pub repetitions: usize,
}

/// Cells sorted by (tool, benchmark, unit, budget).
pub fn aggregate(records: &[ScoreRecord]) -> Vec<ScoreCell> {
    let mut by_tool: BTreeMap<&str, Vec<&ScoreRecord>> = BTreeMap::new();
    for r in records {
        by_tool.entry(&r.tool).or_default().push(r);
    }
    let mut cells = Vec::new();
    for (tool, recs) in by_tool {
        for ((bench, unit, budget), group) in group_cells(recs) {
            let scores: Vec<f64> = group.iter().map(|r| r.score).collect();
            cells.push(ScoreCell {
                tool: tool.to_string(),
                benchmark_id: bench,
                unit_name: unit,
                budget_s: budget,
                score_avg: average_over_reps(&group).expect("groups are non-empty"),
                score_stddev: sample_stddev(&scores),
                repetitions: group.len(),
            });
        }
    }
    cells
}

pub fn write_scores_csv(cells: &[ScoreCell], path: &Path) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)?;
    w.write_record([
        "tool",
        "benchmark",
        "class",
        "budget",
        "score_avg",
        "score_stddev",
        "repetitions",
    ])?;
    for c in cells {
        w.write_record([
            c.tool.clone(),
            c.benchmark_id.clone(),
            c.unit_name.clone(),
            c.budget_s.to_string(),
            c.score_avg.to_string(),
            c.score_stddev.to_string(),
            c.repetitions.to_string(),
        ])?;
    }
    w.flush()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MatrixOptions {
    /// Drop blocks some tool has no record for, instead of scoring them -2.
    pub drop_incomplete_blocks: bool,
    /// One block per unit, summing its budgets, instead of one per
    /// (unit, budget).
    pub collapse_budgets: bool,
}

/// Per-tool block scores plus the spread of per-repetition totals.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreTable {
    pub matrix: ScoreMatrix,
    /// Sample standard deviation of each tool's per-repetition total score,
    /// indexed like `matrix.tools`.
    pub stddevs: Vec<f64>,
}

/// Arrange repetition-averaged scores as a block x tool matrix. Tools are
/// sorted by name, blocks by (benchmark, unit, budget).
pub fn build_score_table(
    records: &[ScoreRecord],
    weights: &Weights,
    opts: MatrixOptions,
) -> Result<ScoreTable, ScoringError> {
    let missing = missing_run_score(weights);
    let tools: Vec<String> = records
        .iter()
        .map(|r| r.tool.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cells: BTreeMap<(String, CellKey), f64> = aggregate(records)
        .into_iter()
        .map(|c| {
            (
                (c.tool, (c.benchmark_id, c.unit_name, c.budget_s)),
                c.score_avg,
            )
        })
        .collect();
    let all_cells: BTreeSet<CellKey> = cells.keys().map(|(_, k)| k.clone()).collect();
    let complete = |k: &CellKey| {
        tools
            .iter()
            .all(|t| cells.contains_key(&(t.clone(), k.clone())))
    };
    let kept: Vec<CellKey> = all_cells
        .into_iter()
        .filter(|k| !opts.drop_incomplete_blocks || complete(k))
        .collect();
    let block_of = |k: &CellKey| {
        if opts.collapse_budgets {
            format!("{}/{}", k.0, k.1)
        } else {
            format!("{}/{}@{}", k.0, k.1, k.2)
        }
    };
    let mut blocks: BTreeMap<String, Vec<f64>> = BTreeMap::new();
    for k in &kept {
        let row = blocks
            .entry(block_of(k))
            .or_insert_with(|| vec![0.0; tools.len()]);
        for (j, t) in tools.iter().enumerate() {
            row[j] += cells
                .get(&(t.clone(), k.clone()))
                .copied()
                .unwrap_or(missing);
        }
    }
    let kept: BTreeSet<CellKey> = kept.into_iter().collect();
    let stddevs = tools
        .iter()
        .map(|t| {
            let mut totals: BTreeMap<u32, f64> = BTreeMap::new();
            for r in records
                .iter()
                .filter(|r| &r.tool == t && kept.contains(&cell_key(r)))
            {
                *totals.entry(r.repetition).or_default() += r.score;
            }
            sample_stddev(&totals.into_values().collect::<Vec<_>>())
        })
        .collect();
    let (names, values): (Vec<String>, Vec<Vec<f64>>) = blocks.into_iter().unzip();
    Ok(ScoreTable {
        matrix: ScoreMatrix::new(tools, names, values)?,
        stddevs,
    })
}
