//! Analyzer backends.
//!
//! A backend is opened on one unit under test and one directory of generated
//! suites. Opening validates every suite; later calls only see valid ones.
//!
//! External analyzers are executables invoked as
//! `analyzer <command> <unit> <suite-dir> [arg]`, writing CSV with a header
//! row to standard output. `arg` is the execution round for `run` and the
//! mutant id for `execute-mutant`.
//!
//! | command | columns |
//! |---------|---------|
//! | `validate` | `suite,valid` |
//! | `run` | `suite,test,passed` |
//! | `coverage` | `suite,test,lines,branches` (space-separated ids; a first row `*,*,<lines_total>,<branches_total>` carries totals) |
//! | `mutants` | `mutant,line` |
//! | `execute-mutant` | `suite,test,passed` |
//!
//! A nonzero exit status is a backend failure.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;

use crate::toybench::{self, Mutant, ToySuite, ToyUnit, SUITE_EXTENSION};

use super::MetricsError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TestId {
    pub suite: String,
    pub test: String,
}

impl TestId {
    pub fn new(suite: impl Into<String>, test: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            test: test.into(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteValidation {
    pub valid: Vec<String>,
    pub invalid: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestCoverage {
    pub test: TestId,
    pub lines: Vec<usize>,
    pub branches: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverageReport {
    pub lines_total: u64,
    pub branches_total: u64,
    pub per_test: Vec<TestCoverage>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutantInfo {
    pub id: String,
    pub line: usize,
}

pub type Verdicts = Vec<(TestId, bool)>;

pub trait AnalyzerBackend: Send + Sync {
    fn id(&self) -> &str;

    fn open(&self, unit: &Path, suite_dir: &Path)
        -> Result<Box<dyn AnalysisSession>, MetricsError>;
}

pub trait AnalysisSession: Send + Sync {
    fn validation(&self) -> &SuiteValidation;

    /// Execute every test of the valid suites once. `round` numbers repeated
    /// executions.
    fn run_tests(&self, round: u32) -> Result<Verdicts, MetricsError>;

    /// Per-test coverage for every test of the valid suites.
    fn coverage(&self) -> Result<CoverageReport, MetricsError>;

    fn mutants(&self) -> Result<Vec<MutantInfo>, MetricsError>;

    /// Verdicts of `tests` against one mutant.
    fn execute_mutant(
        &self,
        mutant: &MutantInfo,
        tests: &[TestId],
    ) -> Result<Verdicts, MetricsError>;
}

/// Built-in backend for `.toy` units and `.suite` files.
#[derive(Debug, Default, Clone, Copy)]
pub struct ToyBackend;

pub struct ToySession {
    unit: ToyUnit,
    suites: Vec<(String, ToySuite)>,
    validation: SuiteValidation,
    mutants: OnceLock<Vec<Mutant>>,
}

/// Suite files of a directory, sorted by name. A missing directory has none.
pub fn suite_files(dir: &Path) -> Result<Vec<PathBuf>, MetricsError> {
    if !dir.exists() {
        return Ok(Vec::new());
    }
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == SUITE_EXTENSION))
        .collect();
    files.sort();
    Ok(files)
}

fn file_name(p: &Path) -> String {
    p.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default()
}

impl ToySession {
    pub fn new(unit: ToyUnit, suite_dir: &Path) -> Result<Self, MetricsError> {
        let mut suites = Vec::new();
        let mut validation = SuiteValidation::default();
        for path in suite_files(suite_dir)? {
            let name = file_name(&path);
            let parsed = fs::read_to_string(&path)
                .ok()
                .and_then(|text| toybench::validate_suite(&text, &unit).ok());
            match parsed {
                Some(suite) => {
                    validation.valid.push(name.clone());
                    suites.push((name, suite));
                }
                None => validation.invalid.push(name),
            }
        }
        Ok(Self {
            unit,
            suites,
            validation,
            mutants: OnceLock::new(),
        })
    }

    /// Session over in-memory suites, all valid.
    pub fn from_suites(unit: ToyUnit, suites: Vec<(String, ToySuite)>) -> Self {
        let validation = SuiteValidation {
            valid: suites.iter().map(|(n, _)| n.clone()).collect(),
            invalid: Vec::new(),
        };
        Self {
            unit,
            suites,
            validation,
            mutants: OnceLock::new(),
        }
    }

    pub fn unit(&self) -> &ToyUnit {
        &self.unit
    }

    fn tests(&self) -> impl Iterator<Item = (&str, &toybench::ToyTest)> {
        self.suites
            .iter()
            .flat_map(|(name, s)| s.tests.iter().map(move |t| (name.as_str(), t)))
    }

    fn all_mutants(&self) -> &[Mutant] {
        self.mutants
            .get_or_init(|| toybench::mutants_of(&self.unit))
    }
}

/// Unit descriptors are `<src>/<unit>`; toy units live in `<src>/<unit>.toy`.
pub fn toy_unit_path(descriptor: &Path) -> PathBuf {
    let suffix = format!(".{}", toybench::UNIT_EXTENSION);
    if descriptor.to_string_lossy().ends_with(&suffix) {
        descriptor.to_path_buf()
    } else {
        let mut s = descriptor.as_os_str().to_owned();
        s.push(&suffix);
        PathBuf::from(s)
    }
}

impl AnalyzerBackend for ToyBackend {
    fn id(&self) -> &str {
        "toy"
    }

    fn open(
        &self,
        unit: &Path,
        suite_dir: &Path,
    ) -> Result<Box<dyn AnalysisSession>, MetricsError> {
        let unit = &toy_unit_path(unit);
        let text = fs::read_to_string(unit)
            .map_err(|e| MetricsError::Unit(format!("{}: {e}", unit.display())))?;
        let unit = toybench::parse_unit(&text)
            .map_err(|e| MetricsError::Unit(format!("{}: {e}", unit.display())))?;
        Ok(Box::new(ToySession::new(unit, suite_dir)?))
    }
}

impl AnalysisSession for ToySession {
    fn validation(&self) -> &SuiteValidation {
        &self.validation
    }

    fn run_tests(&self, round: u32) -> Result<Verdicts, MetricsError> {
        Ok(self
            .tests()
            .map(|(suite, t)| {
                (
                    TestId::new(suite, &t.name),
                    t.passes(&self.unit, suite, round),
                )
            })
            .collect())
    }

    fn coverage(&self) -> Result<CoverageReport, MetricsError> {
        let per_test = self
            .tests()
            .map(|(suite, t)| {
                let (_, trace) = toybench::execute(&self.unit, &t.args);
                TestCoverage {
                    test: TestId::new(suite, &t.name),
                    lines: trace.covered_lines().iter().collect(),
                    branches: trace.covered_branches(),
                }
            })
            .collect();
        Ok(CoverageReport {
            lines_total: toybench::lines_total(&self.unit) as u64,
            branches_total: toybench::branches_total(&self.unit) as u64,
            per_test,
        })
    }

    fn mutants(&self) -> Result<Vec<MutantInfo>, MetricsError> {
        Ok(self
            .all_mutants()
            .iter()
            .map(|m| MutantInfo {
                id: m.id.clone(),
                line: m.site.line,
            })
            .collect())
    }

    fn execute_mutant(
        &self,
        mutant: &MutantInfo,
        tests: &[TestId],
    ) -> Result<Verdicts, MetricsError> {
        let m = self
            .all_mutants()
            .iter()
            .find(|m| m.id == mutant.id)
            .ok_or_else(|| MetricsError::Backend(format!("unknown mutant `{}`", mutant.id)))?;
        let index: HashMap<(&str, &str), &toybench::ToyTest> = self
            .tests()
            .map(|(s, t)| ((s, t.name.as_str()), t))
            .collect();
        tests
            .iter()
            .map(|id| {
                let t = index
                    .get(&(id.suite.as_str(), id.test.as_str()))
                    .ok_or_else(|| MetricsError::Backend(format!("unknown test {id:?}")))?;
                Ok((id.clone(), t.passes(&m.mutated_unit, &id.suite, 0)))
            })
            .collect()
    }
}

/// Backend delegating to an external executable.
#[derive(Debug, Clone)]
pub struct ExternalBackend {
    command: Vec<String>,
}

impl ExternalBackend {
    /// `command` is the program followed by any leading arguments.
    pub fn new(command: Vec<String>) -> Self {
        assert!(!command.is_empty(), "external analyzer needs a program");
        Self { command }
    }
}

pub struct ExternalSession {
    command: Vec<String>,
    unit: PathBuf,
    suite_dir: PathBuf,
    validation: SuiteValidation,
}

impl ExternalSession {
    fn invoke(&self, sub: &str, extra: &[&str]) -> Result<Vec<csv::StringRecord>, MetricsError> {
        let out = Command::new(&self.command[0])
            .args(&self.command[1..])
            .arg(sub)
            .arg(&self.unit)
            .arg(&self.suite_dir)
            .args(extra)
            .output()
            .map_err(|e| MetricsError::Backend(format!("cannot run `{}`: {e}", self.command[0])))?;
        if !out.status.success() {
            return Err(MetricsError::Backend(format!(
                "`{sub}` exited with {}: {}",
                out.status,
                String::from_utf8_lossy(&out.stderr).trim()
            )));
        }
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(out.stdout.as_slice());
        reader
            .records()
            .collect::<Result<_, _>>()
            .map_err(|e| MetricsError::Backend(format!("`{sub}` wrote malformed CSV: {e}")))
    }

    fn verdicts(&self, rows: Vec<csv::StringRecord>) -> Result<Verdicts, MetricsError> {
        rows.iter()
            .map(|r| match (r.get(0), r.get(1), r.get(2)) {
                (Some(s), Some(t), Some(p)) => Ok((TestId::new(s, t), parse_bool(p)?)),
                _ => Err(MetricsError::Backend("expected `suite,test,passed`".into())),
            })
            .collect()
    }
}

fn parse_bool(s: &str) -> Result<bool, MetricsError> {
    match s {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(MetricsError::Backend(format!(
            "expected true/false, got `{other}`"
        ))),
    }
}

fn parse_ids(s: &str) -> Result<Vec<usize>, MetricsError> {
    s.split_whitespace()
        .map(|x| {
            x.parse()
                .map_err(|_| MetricsError::Backend(format!("bad id `{x}`")))
        })
        .collect()
}

impl AnalyzerBackend for ExternalBackend {
    fn id(&self) -> &str {
        &self.command[0]
    }

    fn open(
        &self,
        unit: &Path,
        suite_dir: &Path,
    ) -> Result<Box<dyn AnalysisSession>, MetricsError> {
        let mut session = ExternalSession {
            command: self.command.clone(),
            unit: unit.to_path_buf(),
            suite_dir: suite_dir.to_path_buf(),
            validation: SuiteValidation::default(),
        };
        for row in session.invoke("validate", &[])? {
            match (row.get(0), row.get(1)) {
                (Some(name), Some(v)) => {
                    if parse_bool(v)? {
                        session.validation.valid.push(name.to_string());
                    } else {
                        session.validation.invalid.push(name.to_string());
                    }
                }
                _ => return Err(MetricsError::Backend("expected `suite,valid`".into())),
            }
        }
        Ok(Box::new(session))
    }
}

impl AnalysisSession for ExternalSession {
    fn validation(&self) -> &SuiteValidation {
        &self.validation
    }

    fn run_tests(&self, round: u32) -> Result<Verdicts, MetricsError> {
        let rows = self.invoke("run", &[&round.to_string()])?;
        self.verdicts(rows)
    }

    fn coverage(&self) -> Result<CoverageReport, MetricsError> {
        let mut report = CoverageReport::default();
        let mut saw_totals = false;
        for r in self.invoke("coverage", &[])? {
            let field = |i: usize| r.get(i).unwrap_or("");
            if field(0) == "*" && field(1) == "*" {
                let total = |s: &str| {
                    s.parse::<u64>()
                        .map_err(|_| MetricsError::Backend(format!("bad total `{s}`")))
                };
                report.lines_total = total(field(2))?;
                report.branches_total = total(field(3))?;
                saw_totals = true;
                continue;
            }
            report.per_test.push(TestCoverage {
                test: TestId::new(field(0), field(1)),
                lines: parse_ids(field(2))?,
                branches: parse_ids(field(3))?,
            });
        }
        if !saw_totals {
            return Err(MetricsError::Backend(
                "coverage output lacks the totals row".into(),
            ));
        }
        Ok(report)
    }

    fn mutants(&self) -> Result<Vec<MutantInfo>, MetricsError> {
        self.invoke("mutants", &[])?
            .iter()
            .map(
                |r| match (r.get(0), r.get(1).and_then(|l| l.parse().ok())) {
                    (Some(id), Some(line)) => Ok(MutantInfo {
                        id: id.to_string(),
                        line,
                    }),
                    _ => Err(MetricsError::Backend("expected `mutant,line`".into())),
                },
            )
            .collect()
    }

    fn execute_mutant(
        &self,
        mutant: &MutantInfo,
        tests: &[TestId],
    ) -> Result<Verdicts, MetricsError> {
        let rows = self.invoke("execute-mutant", &[&mutant.id])?;
        let all = self.verdicts(rows)?;
        Ok(all
            .into_iter()
            .filter(|(id, _)| tests.contains(id))
            .collect())
    }
}

/// Serve the external analyzer contract from the toy backend, writing the
/// command's CSV to `out`.
pub fn serve_toy_command(
    command: &str,
    unit: &Path,
    suite_dir: &Path,
    arg: Option<&str>,
    out: impl std::io::Write,
) -> Result<(), MetricsError> {
    let session = ToyBackend.open(unit, suite_dir)?;
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let join = |ids: &[usize]| {
        ids.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    match command {
        "validate" => {
            w.write_record(["suite", "valid"])?;
            let v = session.validation();
            let mut rows: Vec<(&String, bool)> = v
                .valid
                .iter()
                .map(|s| (s, true))
                .chain(v.invalid.iter().map(|s| (s, false)))
                .collect();
            rows.sort();
            for (s, ok) in rows {
                w.write_record([s.as_str(), if ok { "true" } else { "false" }])?;
            }
        }
        "run" | "execute-mutant" => {
            let verdicts = if command == "run" {
                let round = match arg {
                    Some(r) => r
                        .parse()
                        .map_err(|_| MetricsError::Backend(format!("bad round `{r}`")))?,
                    None => 0,
                };
                session.run_tests(round)?
            } else {
                let id = arg.ok_or_else(|| MetricsError::Backend("missing mutant id".into()))?;
                let info = session
                    .mutants()?
                    .into_iter()
                    .find(|m| m.id == id)
                    .ok_or_else(|| MetricsError::Backend(format!("unknown mutant `{id}`")))?;
                let all: Vec<TestId> = session.run_tests(0)?.into_iter().map(|(t, _)| t).collect();
                session.execute_mutant(&info, &all)?
            };
            w.write_record(["suite", "test", "passed"])?;
            for (t, p) in verdicts {
                w.write_record([
                    t.suite.as_str(),
                    t.test.as_str(),
                    if p { "true" } else { "false" },
                ])?;
            }
        }
        "coverage" => {
            let c = session.coverage()?;
            w.write_record(["suite", "test", "lines", "branches"])?;
            w.write_record([
                "*".to_string(),
                "*".to_string(),
                c.lines_total.to_string(),
                c.branches_total.to_string(),
            ])?;
            for t in &c.per_test {
                w.write_record([
                    t.test.suite.clone(),
                    t.test.test.clone(),
                    join(&t.lines),
                    join(&t.branches),
                ])?;
            }
        }
        "mutants" => {
            w.write_record(["mutant", "line"])?;
            for m in session.mutants()? {
                w.write_record([m.id, m.line.to_string()])?;
            }
        }
        other => {
            return Err(MetricsError::Backend(format!(
                "unknown analyzer command `{other}`"
            )))
        }
    }
    w.flush()?;
    Ok(())
}
