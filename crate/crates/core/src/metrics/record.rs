use std::io;
use std::path::Path;

use super::MetricsError;

pub const TRANSCRIPT_HEADER: [&str; 20] = [
    "tool",
    "benchmark",
    "class",
    "budget",
    "repetition",
    "consumed_s",
    "timed_out",
    "suites_total",
    "suites_invalid",
    "tests_total",
    "tests_flaky",
    "tests_failing",
    "lines_total",
    "lines_covered",
    "branches_total",
    "branches_covered",
    "mutants_total",
    "mutants_covered",
    "mutants_killed",
    "mutation_deadline_hit",
];

pub const TRANSCRIPT_FILE: &str = "transcript.csv";

/// Measurements for one (tool, benchmark, unit, budget, repetition) run.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MetricsRecord {
    pub tool: String,
    pub benchmark_id: String,
    pub unit_name: String,
    pub budget_s: u64,
    pub repetition: u32,
    pub consumed_s: f64,
    pub timed_out: bool,
    pub suites_total: u64,
    pub suites_invalid: u64,
    pub tests_total: u64,
    pub tests_flaky: u64,
    pub tests_failing: u64,
    pub lines_total: u64,
    pub lines_covered: u64,
    pub branches_total: u64,
    pub branches_covered: u64,
    pub mutants_total: u64,
    pub mutants_covered: u64,
    pub mutants_killed: u64,
    pub mutation_deadline_hit: bool,
}

impl MetricsRecord {
    pub fn check_invariants(&self) -> Result<(), String> {
        let checks = [
            (
                self.suites_invalid <= self.suites_total,
                "suites_invalid > suites_total",
            ),
            (
                self.tests_flaky + self.tests_failing <= self.tests_total,
                "tests_flaky + tests_failing > tests_total",
            ),
            (
                self.lines_covered <= self.lines_total,
                "lines_covered > lines_total",
            ),
            (
                self.branches_covered <= self.branches_total,
                "branches_covered > branches_total",
            ),
            (
                self.mutants_killed <= self.mutants_covered,
                "mutants_killed > mutants_covered",
            ),
            (
                self.mutants_covered <= self.mutants_total,
                "mutants_covered > mutants_total",
            ),
            (
                self.consumed_s.is_finite() && self.consumed_s >= 0.0,
                "consumed_s must be a non-negative number",
            ),
        ];
        match checks.iter().find(|(ok, _)| !ok) {
            Some((_, msg)) => Err(msg.to_string()),
            None => Ok(()),
        }
    }

    fn to_fields(&self) -> [String; 20] {
        [
            self.tool.clone(),
            self.benchmark_id.clone(),
            self.unit_name.clone(),
            self.budget_s.to_string(),
            self.repetition.to_string(),
            self.consumed_s.to_string(),
            self.timed_out.to_string(),
            self.suites_total.to_string(),
            self.suites_invalid.to_string(),
            self.tests_total.to_string(),
            self.tests_flaky.to_string(),
            self.tests_failing.to_string(),
            self.lines_total.to_string(),
            self.lines_covered.to_string(),
            self.branches_total.to_string(),
            self.branches_covered.to_string(),
            self.mutants_total.to_string(),
            self.mutants_covered.to_string(),
            self.mutants_killed.to_string(),
            self.mutation_deadline_hit.to_string(),
        ]
    }

    fn from_fields(rec: &csv::StringRecord, line: u64) -> Result<Self, MetricsError> {
        let bad = |field: &str| MetricsError::Schema(format!("line {line}: bad `{field}` value"));
        let get = |i: usize| rec.get(i).unwrap_or("");
        let int = |i: usize| get(i).parse::<u64>().map_err(|_| bad(TRANSCRIPT_HEADER[i]));
        let boolean = |i: usize| match get(i) {
            "true" => Ok(true),
            "false" => Ok(false),
            _ => Err(bad(TRANSCRIPT_HEADER[i])),
        };
        if rec.len() != TRANSCRIPT_HEADER.len() {
            return Err(MetricsError::Schema(format!(
                "line {line}: expected {} fields, found {}",
                TRANSCRIPT_HEADER.len(),
                rec.len()
            )));
        }
        let record = MetricsRecord {
            tool: get(0).to_string(),
            benchmark_id: get(1).to_string(),
            unit_name: get(2).to_string(),
            budget_s: int(3)?,
            repetition: get(4).parse().map_err(|_| bad("repetition"))?,
            consumed_s: get(5).parse().map_err(|_| bad("consumed_s"))?,
            timed_out: boolean(6)?,
            suites_total: int(7)?,
            suites_invalid: int(8)?,
            tests_total: int(9)?,
            tests_flaky: int(10)?,
            tests_failing: int(11)?,
            lines_total: int(12)?,
            lines_covered: int(13)?,
            branches_total: int(14)?,
            branches_covered: int(15)?,
            mutants_total: int(16)?,
            mutants_covered: int(17)?,
            mutants_killed: int(18)?,
            mutation_deadline_hit: boolean(19)?,
        };
        record
            .check_invariants()
            .map_err(|m| MetricsError::Schema(format!("line {line}: {m}")))?;
        Ok(record)
    }
}

/// Serialize records under the transcript header.
pub fn write_transcript_to<W: io::Write>(
    records: &[MetricsRecord],
    out: W,
) -> Result<(), MetricsError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(TRANSCRIPT_HEADER)?;
    for r in records {
        w.write_record(r.to_fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_transcript(records: &[MetricsRecord], path: &Path) -> Result<(), MetricsError> {
    let file = std::fs::File::create(path)?;
    write_transcript_to(records, io::BufWriter::new(file))
}

/// Parse a transcript (or merged results) CSV; the header must match exactly.
pub fn read_transcript_from<R: io::Read>(input: R) -> Result<Vec<MetricsRecord>, MetricsError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(input);
    let mut rows = r.records();
    let header = match rows.next() {
        Some(h) => h?,
        None => return Err(MetricsError::Schema("empty file, header missing".into())),
    };
    if !header.iter().eq(TRANSCRIPT_HEADER.iter().copied()) {
        return Err(MetricsError::Schema(format!(
            "unexpected header `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    rows.enumerate()
        .map(|(i, rec)| MetricsRecord::from_fields(&rec?, i as u64 + 2))
        .collect()
}

pub fn read_transcript(path: &Path) -> Result<Vec<MetricsRecord>, MetricsError> {
    read_transcript_from(std::fs::File::open(path)?)
}
