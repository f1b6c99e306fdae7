//! Final ranking tables.

use std::io;
use std::path::Path;

use super::ranking::{FriedmanResult, ScoreMatrix};
use super::{holm_bonferroni, StatsError};

#[derive(Debug, Clone, PartialEq)]
pub struct ToolRanking {
    pub tool: String,
    pub final_score: f64,
    pub score_stddev: f64,
    pub mean_rank: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseComparison {
    pub tool_a: String,
    pub tool_b: String,
    pub p_raw: f64,
    pub p_adjusted: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankingReport {
    /// Sorted by final score, best first.
    pub tools: Vec<ToolRanking>,
    /// Every unordered pair once, `tool_a` ranked above `tool_b`.
    pub pairwise: Vec<PairwiseComparison>,
    pub friedman_statistic: f64,
    pub friedman_p: f64,
}

/// Assemble the report. `stddevs` is indexed like `matrix.tools`.
pub fn build_report(
    matrix: &ScoreMatrix,
    stddevs: &[f64],
    fr: &FriedmanResult,
    conover: &[Vec<f64>],
) -> Result<RankingReport, StatsError> {
    let k = matrix.n_tools();
    if stddevs.len() != k || fr.mean_ranks.len() != k || conover.len() != k {
        return Err(StatsError::Shape(
            "report inputs disagree on tool count".into(),
        ));
    }
    let sums = matrix.column_sums();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| {
        sums[b]
            .total_cmp(&sums[a])
            .then_with(|| matrix.tools[a].cmp(&matrix.tools[b]))
    });
    let tools = order
        .iter()
        .map(|&j| ToolRanking {
            tool: matrix.tools[j].clone(),
            final_score: sums[j],
            score_stddev: stddevs[j],
            mean_rank: fr.mean_ranks[j],
        })
        .collect();
    let mut pairs = Vec::new();
    for (x, &a) in order.iter().enumerate() {
        for &b in &order[x + 1..] {
            pairs.push((a, b));
        }
    }
    let raw: Vec<f64> = pairs.iter().map(|&(a, b)| conover[a][b]).collect();
    let adjusted = holm_bonferroni(&raw);
    let pairwise = pairs
        .iter()
        .zip(raw.iter().zip(&adjusted))
        .map(|(&(a, b), (&p_raw, &p_adjusted))| PairwiseComparison {
            tool_a: matrix.tools[a].clone(),
            tool_b: matrix.tools[b].clone(),
            p_raw,
            p_adjusted,
        })
        .collect();
    Ok(RankingReport {
        tools,
        pairwise,
        friedman_statistic: fr.statistic,
        friedman_p: fr.p_value,
    })
}

fn whole(v: f64) -> String {
    let s = format!("{v:.0}");
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// Pairwise table cell: `<0.01` below 0.01, two decimals otherwise.
pub fn format_p(p: f64) -> String {
    if p < 0.01 {
        "<0.01".into()
    } else {
        format!("{p:.2}")
    }
}

pub fn format_ranking_row(r: &ToolRanking) -> String {
    format!(
        "{} {} {:.2} {:.2}",
        r.tool,
        whole(r.final_score),
        r.score_stddev,
        r.mean_rank
    )
}

impl RankingReport {
    pub fn adjusted_p(&self, a: &str, b: &str) -> Option<f64> {
        self.pairwise
            .iter()
            .find(|c| (c.tool_a == a && c.tool_b == b) || (c.tool_a == b && c.tool_b == a))
            .map(|c| c.p_adjusted)
    }

    /// Score table: tool, final score, standard deviation, mean rank.
    pub fn render_scores(&self) -> String {
        let mut out = String::from("Tool Score Std.dev Ranking\n");
        for r in &self.tools {
            out.push_str(&format_ranking_row(r));
            out.push('\n');
        }
        out
    }

    /// Lower-triangular table of adjusted pairwise p-values.
    pub fn render_pairwise(&self) -> String {
        let names: Vec<&str> = self.tools.iter().map(|t| t.tool.as_str()).collect();
        let mut out = format!("Tool {}\n", names.join(" "));
        for (i, row) in names.iter().enumerate() {
            let mut cells = vec![row.to_string()];
            for (j, col) in names.iter().enumerate() {
                cells.push(if j < i {
                    self.adjusted_p(row, col)
                        .map_or_else(|| "-".into(), format_p)
                } else {
                    "-".into()
                });
            }
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn render(&self) -> String {
        format!(
            "{}\nFriedman statistic {:.4}, p-value {}\n\n{}",
            self.render_scores(),
            self.friedman_statistic,
            format_p_precise(self.friedman_p),
            self.render_pairwise()
        )
    }

    pub fn write_ranking_csv(&self, path: &Path) -> io::Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["tool", "score", "score_stddev", "mean_rank"])?;
        for r in &self.tools {
            w.write_record([
                r.tool.clone(),
                r.final_score.to_string(),
                r.score_stddev.to_string(),
                r.mean_rank.to_string(),
            ])?;
        }
        w.flush()
    }

    pub fn write_pairwise_csv(&self, path: &Path) -> io::Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["tool_a", "tool_b", "p_raw", "p_adjusted"])?;
        for c in &self.pairwise {
            w.write_record([
                c.tool_a.clone(),
                c.tool_b.clone(),
                c.p_raw.to_string(),
                c.p_adjusted.to_string(),
            ])?;
        }
        w.flush()
    }
}

fn format_p_precise(p: f64) -> String {
    if p != 0.0 && p < 1e-4 {
        format!("{p:.3e}")
    } else {
        format!("{p:.4}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{conover_posthoc, friedman};

    #[test]
    fn cells() {
        assert_eq!(format_p(0.004), "<0.01");
        assert_eq!(format_p(0.06), "0.06");
        assert_eq!(format_p(0.0123), "0.01");
        assert_eq!(format_p(1.0), "1.00");
    }

    #[test]
    fn row_shape() {
        let row = ToolRanking {
            tool: "EvoSuite".into(),
            final_score: 1457.0,
            score_stddev: 192.72,
            mean_rank: 1.55,
        };
        assert_eq!(format_ranking_row(&row), "EvoSuite 1457 192.72 1.55");
    }

    #[test]
    fn two_tools_one_cell() {
        let m = ScoreMatrix::new(
            vec!["a".into(), "b".into()],
            vec!["x".into(), "y".into(), "z".into()],
            vec![vec![1.0, 2.0], vec![3.0, 1.0], vec![0.0, 5.0]],
        )
        .unwrap();
        let fr = friedman(&m).unwrap();
        let p = conover_posthoc(&m, &fr).unwrap();
        let report = build_report(&m, &[0.0, 0.0], &fr, &p).unwrap();
        assert_eq!(report.pairwise.len(), 1);
        assert_eq!(report.tools[0].tool, "b");
        let table = report.render_pairwise();
        assert_eq!(table.lines().count(), 3);
        assert_eq!(table.lines().nth(1).unwrap(), "b - -");
    }
}
