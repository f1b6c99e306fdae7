//! Benchmark descriptions (`benchmarks.list`) and evaluation settings
//! (`eval.conf`).
//!
//! The benchmark file is a brace-block document:
//!
//! ```text
//! {
//!   BCEL-1= {
//!     src=/var/benchmarks/projects/bcel-6.0-src/src/main/java
//!     bin=/var/benchmarks/projects/bcel-6.0-src/target/classes
//!     classes=(org.apache.bcel.classfile.Utility)
//!     classpath=(/var/benchmarks/projects/bcel-6.0-src/target/classes)
//!   }
//! }
//! ```
//!
//! Lines whose first non-blank character is `#` are comments. Paths are kept
//! exactly as written.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("duplicate benchmark id `{0}`")]
    DuplicateId(String),
    #[error("benchmark `{0}` has no classes")]
    EmptyClasses(String),
    #[error("benchmark `{id}` lists class `{class}` twice")]
    DuplicateClass { id: String, class: String },
    #[error("invalid benchmark id `{0}`")]
    InvalidId(String),
    #[error("budget must be a positive number of seconds, got `{0}`")]
    NonPositiveBudget(String),
    #[error("repetitions must be positive, got `{0}`")]
    NonPositiveRepetitions(String),
    #[error("invalid value for `{key}`: {message}")]
    InvalidValue { key: String, message: String },
}

fn syntax(line: usize, message: impl Into<String>) -> ConfigError {
    ConfigError::Syntax {
        line,
        message: message.into(),
    }
}

/// One group of units under test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Benchmark {
    pub id: String,
    pub src: String,
    pub bin: String,
    pub classes: Vec<String>,
    pub classpath: Vec<String>,
}

/// Benchmarks in file order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BenchmarkSuite {
    benchmarks: Vec<Benchmark>,
}

impl BenchmarkSuite {
    pub fn new(benchmarks: Vec<Benchmark>) -> Result<Self, ConfigError> {
        let mut seen = HashSet::new();
        for bench in &benchmarks {
            validate_benchmark(bench)?;
            if !seen.insert(bench.id.clone()) {
                return Err(ConfigError::DuplicateId(bench.id.clone()));
            }
        }
        Ok(Self { benchmarks })
    }

    pub fn get(&self, id: &str) -> Option<&Benchmark> {
        self.benchmarks.iter().find(|b| b.id == id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Benchmark> {
        self.benchmarks.iter()
    }

    pub fn len(&self) -> usize {
        self.benchmarks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.benchmarks.is_empty()
    }

    /// Render back into the brace-block format.
    pub fn to_list_string(&self) -> String {
        let mut out = String::from("{\n");
        for b in &self.benchmarks {
            let _ = writeln!(out, "  {}= {{", b.id);
            let _ = writeln!(out, "    src={}", b.src);
            let _ = writeln!(out, "    bin={}", b.bin);
            let _ = writeln!(out, "    classes=({})", b.classes.join(" "));
            let _ = writeln!(out, "    classpath=({})", b.classpath.join(" "));
            out.push_str("  }\n");
        }
        out.push_str("}\n");
        out
    }
}

pub fn is_valid_id(id: &str) -> bool {
    !id.is_empty()
        && id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-'))
}

fn validate_benchmark(bench: &Benchmark) -> Result<(), ConfigError> {
    if !is_valid_id(&bench.id) {
        return Err(ConfigError::InvalidId(bench.id.clone()));
    }
    if bench.classes.is_empty() {
        return Err(ConfigError::EmptyClasses(bench.id.clone()));
    }
    let mut seen = HashSet::new();
    for class in &bench.classes {
        if !seen.insert(class.as_str()) {
            return Err(ConfigError::DuplicateClass {
                id: bench.id.clone(),
                class: class.clone(),
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Eq,
    LParen,
    RParen,
    Comma,
    Word(String),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ConfigError> {
    let mut toks = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        if raw.trim_start().starts_with('#') {
            continue;
        }
        let mut word = String::new();
        let flush = |word: &mut String, toks: &mut Vec<(Tok, usize)>| {
            if !word.is_empty() {
                toks.push((Tok::Word(std::mem::take(word)), line_no));
            }
        };
        for c in raw.chars() {
            let tok = match c {
                '{' => Some(Tok::Open),
                '}' => Some(Tok::Close),
                '=' => Some(Tok::Eq),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                ',' => Some(Tok::Comma),
                '[' | ']' => return Err(syntax(line_no, "unexpanded `[...]` placeholder")),
                c if c.is_whitespace() => None,
                c => {
                    word.push(c);
                    continue;
                }
            };
            flush(&mut word, &mut toks);
            if let Some(t) = tok {
                toks.push((t, line_no));
            }
        }
        flush(&mut word, &mut toks);
    }
    Ok(toks)
}

struct Cursor {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    last_line: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn line(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, l)| *l)
            .unwrap_or(self.last_line)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ConfigError> {
        let line = self.line();
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(syntax(line, format!("expected {what}, found {t:?}"))),
            None => Err(syntax(line, format!("expected {what}, found end of input"))),
        }
    }

    fn word(&mut self, what: &str) -> Result<String, ConfigError> {
        let line = self.line();
        match self.next() {
            Some(Tok::Word(w)) => Ok(w),
            Some(t) => Err(syntax(line, format!("expected {what}, found {t:?}"))),
            None => Err(syntax(line, format!("expected {what}, found end of input"))),
        }
    }

    fn list(&mut self) -> Result<Vec<String>, ConfigError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut items = Vec::new();
        loop {
            let line = self.line();
            match self.next() {
                Some(Tok::RParen) => return Ok(items),
                Some(Tok::Comma) => {}
                Some(Tok::Word(w)) => items.push(w),
                Some(t) => return Err(syntax(line, format!("malformed list item {t:?}"))),
                None => return Err(syntax(line, "unterminated list")),
            }
        }
    }
}

/// Parse a `benchmarks.list` document.
pub fn parse_benchmarks(text: &str) -> Result<BenchmarkSuite, ConfigError> {
    let toks = tokenize(text)?;
    let last_line = text.lines().count().max(1);
    let mut cur = Cursor {
        toks,
        pos: 0,
        last_line,
    };
    cur.expect(Tok::Open, "opening `{`")?;
    let mut benchmarks: Vec<Benchmark> = Vec::new();
    loop {
        let line = cur.line();
        match cur.next() {
            Some(Tok::Close) => break,
            Some(Tok::Word(id)) => {
                cur.expect(Tok::Eq, "`=` after benchmark id")?;
                cur.expect(Tok::Open, "`{` opening the benchmark block")?;
                let bench = parse_block(&mut cur, id, line)?;
                if benchmarks.iter().any(|b| b.id == bench.id) {
                    return Err(ConfigError::DuplicateId(bench.id));
                }
                benchmarks.push(bench);
            }
            Some(t) => return Err(syntax(line, format!("expected benchmark id, found {t:?}"))),
            None => return Err(syntax(line, "unbalanced braces: missing closing `}`")),
        }
    }
    if cur.peek().is_some() {
        return Err(syntax(cur.line(), "trailing content after closing `}`"));
    }
    BenchmarkSuite::new(benchmarks)
}

fn parse_block(cur: &mut Cursor, id: String, start: usize) -> Result<Benchmark, ConfigError> {
    let mut src = None;
    let mut bin = None;
    let mut classes = None;
    let mut classpath = None;
    loop {
        let line = cur.line();
        let key = match cur.next() {
            Some(Tok::Close) => break,
            Some(Tok::Word(k)) => k,
            Some(t) => return Err(syntax(line, format!("expected key, found {t:?}"))),
            None => return Err(syntax(line, format!("unbalanced braces in block `{id}`"))),
        };
        cur.expect(Tok::Eq, "`=` after key")?;
        let dup = match key.as_str() {
            "src" => src.replace(cur.word("path")?).is_some(),
            "bin" => bin.replace(cur.word("path")?).is_some(),
            "classes" => classes.replace(cur.list()?).is_some(),
            "classpath" => classpath.replace(cur.list()?).is_some(),
            other => return Err(syntax(line, format!("unknown key `{other}`"))),
        };
        if dup {
            return Err(syntax(line, format!("key `{key}` given twice")));
        }
    }
    let missing = |k: &str| syntax(start, format!("benchmark `{id}` is missing `{k}`"));
    Ok(Benchmark {
        src: src.ok_or_else(|| missing("src"))?,
        bin: bin.ok_or_else(|| missing("bin"))?,
        classes: classes.ok_or_else(|| missing("classes"))?,
        classpath: classpath.unwrap_or_default(),
        id,
    })
}

/// Which analyzer computes validity, coverage and mutation results.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnalyzerSpec {
    /// The built-in toy-language backend.
    Toy,
    /// An external executable (program followed by leading arguments).
    External(Vec<String>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weights {
    pub line: f64,
    pub branch: f64,
    pub mutation: f64,
}

impl Default for Weights {
    fn default() -> Self {
        Self {
            line: 1.0,
            branch: 2.0,
            mutation: 4.0,
        }
    }
}

pub const DEFAULT_FLAKY_RUNS: u32 = 5;
pub const DEFAULT_MUTATION_DEADLINE_S: u64 = 300;

#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationConfig {
    /// One directory per generator configuration; its folder name is the tool name.
    pub tool_homes: Vec<PathBuf>,
    pub budgets_s: Vec<u64>,
    pub repetitions: u32,
    pub start_from: u32,
    pub weights: Weights,
    pub flaky_runs: u32,
    pub mutation_deadline_s: u64,
    pub analyzer: AnalyzerSpec,
}

impl Default for EvaluationConfig {
    fn default() -> Self {
        Self {
            tool_homes: Vec::new(),
            budgets_s: Vec::new(),
            repetitions: 1,
            start_from: 1,
            weights: Weights::default(),
            flaky_runs: DEFAULT_FLAKY_RUNS,
            mutation_deadline_s: DEFAULT_MUTATION_DEADLINE_S,
            analyzer: AnalyzerSpec::Toy,
        }
    }
}

impl EvaluationConfig {
    pub fn tool_home(&self, tool: &str) -> Option<&PathBuf> {
        self.tool_homes
            .iter()
            .find(|home| home.file_name().and_then(|n| n.to_str()) == Some(tool))
    }
}

fn split_list(value: &str) -> impl Iterator<Item = &str> {
    value
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
}

fn positive<T: std::str::FromStr + PartialOrd + Default>(
    key: &str,
    value: &str,
) -> Result<T, ConfigError> {
    let parsed = value.parse::<T>().ok().filter(|v| *v > T::default());
    parsed.ok_or_else(|| ConfigError::InvalidValue {
        key: key.to_string(),
        message: format!("expected a positive integer, got `{value}`"),
    })
}

/// Parse a line-oriented `key=value` evaluation config.
pub fn parse_eval_config(text: &str) -> Result<EvaluationConfig, ConfigError> {
    let mut cfg = EvaluationConfig::default();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| syntax(line_no, "expected `key=value`"))?;
        let (key, value) = (key.trim(), value.trim());
        if !seen.insert(key.to_string()) {
            return Err(syntax(line_no, format!("key `{key}` given twice")));
        }
        match key {
            "tools" => cfg.tool_homes = split_list(value).map(PathBuf::from).collect(),
            "budgets" => {
                cfg.budgets_s = split_list(value)
                    .map(|b| match b.parse::<i64>() {
                        Ok(v) if v > 0 => Ok(v as u64),
                        Ok(_) => Err(ConfigError::NonPositiveBudget(b.to_string())),
                        Err(_) => Err(ConfigError::InvalidValue {
                            key: "budgets".into(),
                            message: format!("`{b}` is not an integer"),
                        }),
                    })
                    .collect::<Result<_, _>>()?;
                if cfg.budgets_s.is_empty() {
                    return Err(syntax(line_no, "`budgets` is empty"));
                }
            }
            "repetitions" => {
                cfg.repetitions = match value.parse::<i64>() {
                    Ok(v) if v > 0 => v as u32,
                    Ok(_) => return Err(ConfigError::NonPositiveRepetitions(value.to_string())),
                    Err(_) => return Err(syntax(line_no, "`repetitions` is not an integer")),
                }
            }
            "start_from" => cfg.start_from = positive(key, value)?,
            "weights" => {
                let parts: Vec<f64> = split_list(value)
                    .map(|w| w.parse::<f64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| syntax(line_no, "weights must be numbers"))?;
                match parts[..] {
                    [l, b, m] if [l, b, m].iter().all(|w| w.is_finite() && *w >= 0.0) => {
                        cfg.weights = Weights {
                            line: l,
                            branch: b,
                            mutation: m,
                        }
                    }
                    _ => {
                        return Err(ConfigError::InvalidValue {
                            key: "weights".into(),
                            message: "expected three non-negative numbers".into(),
                        })
                    }
                }
            }
            "flaky_runs" => cfg.flaky_runs = positive(key, value)?,
            "mutation_deadline" => cfg.mutation_deadline_s = positive(key, value)?,
            "analyzer" => {
                let mut words = value.split_whitespace().map(str::to_string);
                cfg.analyzer = match words.next() {
                    None => return Err(syntax(line_no, "`analyzer` is empty")),
                    Some(w) if w == "toy" && value == "toy" => AnalyzerSpec::Toy,
                    Some(w) => AnalyzerSpec::External(std::iter::once(w).chain(words).collect()),
                };
            }
            other => return Err(syntax(line_no, format!("unknown key `{other}`"))),
        }
    }
    Ok(cfg)
}
