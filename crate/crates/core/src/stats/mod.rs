//! Nonparametric ranking of generators: Friedman omnibus test, Conover
//! pairwise post-hoc comparisons and Holm-Bonferroni adjustment.
//!
//! Blocks are problems (unit and budget pairs), treatments are tools. Ranks
//! run from 1 (best score) to k, with midranks for ties.

mod ranking;
mod report;
pub mod special;

use thiserror::Error;

pub use ranking::{
    conover_posthoc, friedman, holm_bonferroni, midranks_descending, rank_blocks, FriedmanResult,
    ScoreMatrix,
};
pub use report::{
    build_report, format_p, format_ranking_row, PairwiseComparison, RankingReport, ToolRanking,
};
pub use special::{chi_square_sf, student_t_sf};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StatsError {
    #[error("need at least 2 tools and 2 blocks, got {tools} tools and {blocks} blocks")]
    DegenerateMatrix { tools: usize, blocks: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("malformed input: {0}")]
    Shape(String),
}
