use super::special::{chi_square_sf, student_t_sf};
use super::StatsError;

/// Scores of `k` tools on `n` blocks (problems); row = block, column = tool.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreMatrix {
    pub tools: Vec<String>,
    pub blocks: Vec<String>,
    values: Vec<Vec<f64>>,
}

impl ScoreMatrix {
    pub fn new(
        tools: Vec<String>,
        blocks: Vec<String>,
        values: Vec<Vec<f64>>,
    ) -> Result<Self, StatsError> {
        if values.len() != blocks.len() || values.iter().any(|row| row.len() != tools.len()) {
            return Err(StatsError::Shape(format!(
                "expected {} rows of {} scores",
                blocks.len(),
                tools.len()
            )));
        }
        if values.iter().flatten().any(|v| !v.is_finite()) {
            return Err(StatsError::Shape("scores must be finite".into()));
        }
        Ok(Self {
            tools,
            blocks,
            values,
        })
    }

    /// Matrix with generated names, for numeric work.
    pub fn from_rows(values: Vec<Vec<f64>>) -> Result<Self, StatsError> {
        let k = values.first().map_or(0, Vec::len);
        let tools = (0..k).map(|j| format!("tool{j}")).collect();
        let blocks = (0..values.len()).map(|i| format!("block{i}")).collect();
        Self::new(tools, blocks, values)
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn n_tools(&self) -> usize {
        self.tools.len()
    }

    /// Column sums: each tool's total over all blocks.
    pub fn column_sums(&self) -> Vec<f64> {
        let mut sums = vec![0.0; self.n_tools()];
        for row in &self.values {
            for (s, v) in sums.iter_mut().zip(row) {
                *s += v;
            }
        }
        sums
    }

    fn check_shape(&self) -> Result<(), StatsError> {
        if self.n_tools() < 2 || self.n_blocks() < 2 {
            return Err(StatsError::DegenerateMatrix {
                tools: self.n_tools(),
                blocks: self.n_blocks(),
            });
        }
        Ok(())
    }
}

/// Rank one block: highest score gets rank 1, ties share the mean position.
pub fn midranks_descending(scores: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]));
    let mut ranks = vec![0.0; scores.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && scores[order[j]] == scores[order[i]] {
            j += 1;
        }
        // positions i+1 ..= j share their average
        let shared = (i + 1 + j) as f64 / 2.0;
        for &idx in &order[i..j] {
            ranks[idx] = shared;
        }
        i = j;
    }
    ranks
}

pub fn rank_blocks(matrix: &ScoreMatrix) -> Result<Vec<Vec<f64>>, StatsError> {
    matrix.check_shape()?;
    Ok(matrix
        .rows()
        .iter()
        .map(|r| midranks_descending(r))
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct FriedmanResult {
    pub statistic: f64,
    pub p_value: f64,
    pub mean_ranks: Vec<f64>,
    pub rank_sums: Vec<f64>,
    /// Sum of squared in-block ranks.
    pub a1: f64,
    /// n k (k + 1)^2 / 4.
    pub c1: f64,
    pub n: usize,
    pub k: usize,
}

impl FriedmanResult {
    /// Every block fully tied: no rank information at all.
    pub fn all_tied(&self) -> bool {
        self.a1 <= self.c1
    }
}

/// Tie-corrected Friedman test; when every block is fully tied the statistic
/// is 0 and the p-value 1.
pub fn friedman(matrix: &ScoreMatrix) -> Result<FriedmanResult, StatsError> {
    let ranks = rank_blocks(matrix)?;
    let (n, k) = (matrix.n_blocks(), matrix.n_tools());
    let (nf, kf) = (n as f64, k as f64);
    let mut rank_sums = vec![0.0; k];
    let mut a1 = 0.0;
    for row in &ranks {
        for (s, r) in rank_sums.iter_mut().zip(row) {
            *s += r;
            a1 += r * r;
        }
    }
    let c1 = nf * kf * (kf + 1.0).powi(2) / 4.0;
    let mean_ranks = rank_sums.iter().map(|s| s / nf).collect();
    let (statistic, p_value) = if a1 <= c1 {
        (0.0, 1.0)
    } else {
        let centre = nf * (kf + 1.0) / 2.0;
        let spread: f64 = rank_sums.iter().map(|s| (s - centre).powi(2)).sum();
        let t1 = (kf - 1.0) * spread / (a1 - c1);
        (t1, chi_square_sf(t1, kf - 1.0)?)
    };
    Ok(FriedmanResult {
        statistic,
        p_value,
        mean_ranks,
        rank_sums,
        a1,
        c1,
        n,
        k,
    })
}

/// Symmetric k x k matrix of two-sided Conover p-values; diagonal is 1.
pub fn conover_posthoc(
    matrix: &ScoreMatrix,
    fr: &FriedmanResult,
) -> Result<Vec<Vec<f64>>, StatsError> {
    matrix.check_shape()?;
    let k = fr.k;
    let mut p = vec![vec![1.0; k]; k];
    if fr.all_tied() {
        return Ok(p);
    }
    let (nf, kf) = (fr.n as f64, k as f64);
    let df = (nf - 1.0) * (kf - 1.0);
    let factor = 1.0 - fr.statistic / (nf * (kf - 1.0));
    let se = (2.0 * nf * (fr.a1 - fr.c1) * factor / df).sqrt();
    for i in 0..k {
        for j in (i + 1)..k {
            let diff = (fr.rank_sums[i] - fr.rank_sums[j]).abs();
            let pij = if diff == 0.0 {
                1.0
            } else if factor <= 0.0 || se == 0.0 {
                0.0
            } else {
                (2.0 * student_t_sf(diff / se, df)?).min(1.0)
            };
            p[i][j] = pij;
            p[j][i] = pij;
        }
    }
    Ok(p)
}

/// Holm-Bonferroni step-down adjustment; output in input order.
pub fn holm_bonferroni(raw: &[f64]) -> Vec<f64> {
    let m = raw.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| raw[a].total_cmp(&raw[b]));
    let mut adjusted = vec![0.0; m];
    let mut running = 0.0f64;
    for (rank, &idx) in order.iter().enumerate() {
        let scaled = ((m - rank) as f64 * raw[idx]).min(1.0);
        running = running.max(scaled);
        adjusted[idx] = running;
    }
    adjusted
}
