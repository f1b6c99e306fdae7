//! Generated test suites.
//!
//! ```text
//! suite abs
//! test t0: call(-3) == 3
//! test t1: call(5) == choose(5|6)
//! ```
//!
//! `choose(a|b|...)` draws the expected value afresh on every execution; it
//! exists to model nondeterministic assertions.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::exec::eval;
use super::lang::ToyUnit;
use super::ToyError;

pub const SUITE_EXTENSION: &str = "suite";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expected {
    Value(i64),
    Choice(Vec<i64>),
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Value(v) => write!(f, "{v}"),
            Expected::Choice(vs) => {
                let parts: Vec<String> = vs.iter().map(i64::to_string).collect();
                write!(f, "choose({})", parts.join("|"))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ToyTest {
    pub name: String,
    pub args: Vec<i64>,
    pub expected: Expected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToySuite {
    pub unit: String,
    pub tests: Vec<ToyTest>,
}

impl fmt::Display for ToySuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.unit)?;
        for t in &self.tests {
            let args: Vec<String> = t.args.iter().map(i64::to_string).collect();
            writeln!(
                f,
                "test {}: call({}) == {}",
                t.name,
                args.join(","),
                t.expected
            )?;
        }
        Ok(())
    }
}

fn parse_int(s: &str, line: usize) -> Result<i64, ToyError> {
    s.trim().parse().map_err(|_| ToyError::Syntax {
        line,
        message: format!("`{}` is not an integer", s.trim()),
    })
}

fn parse_test(line: &str, ln: usize) -> Result<ToyTest, ToyError> {
    let syntax = |m: &str| ToyError::Syntax {
        line: ln,
        message: m.to_string(),
    };
    let rest = line
        .strip_prefix("test ")
        .ok_or_else(|| syntax("expected `test <name>: ...`"))?;
    let (name, rest) = rest.split_once(':').ok_or_else(|| syntax("missing `:`"))?;
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(syntax("invalid test name"));
    }
    let rest = rest
        .trim()
        .strip_prefix("call(")
        .ok_or_else(|| syntax("expected `call(`"))?;
    let (args, rest) = rest.split_once(')').ok_or_else(|| syntax("missing `)`"))?;
    let args = if args.trim().is_empty() {
        Vec::new()
    } else {
        args.split(',')
            .map(|a| parse_int(a, ln))
            .collect::<Result<Vec<_>, _>>()?
    };
    let expected = rest
        .trim()
        .strip_prefix("==")
        .ok_or_else(|| syntax("expected `==`"))?
        .trim();
    let expected = match expected.strip_prefix("choose(") {
        Some(inner) => {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| syntax("unterminated `choose(`"))?;
            let vs = inner
                .split('|')
                .map(|v| parse_int(v, ln))
                .collect::<Result<Vec<_>, _>>()?;
            if vs.is_empty() {
                return Err(syntax("empty choice"));
            }
            Expected::Choice(vs)
        }
        None => Expected::Value(parse_int(expected, ln)?),
    };
    Ok(ToyTest {
        name: name.to_string(),
        args,
        expected,
    })
}

/// Parse a suite file. Any unparseable line makes the whole suite invalid.
pub fn parse_suite(text: &str) -> Result<ToySuite, ToyError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, header) = lines.next().ok_or(ToyError::Syntax {
        line: 1,
        message: "empty suite file".into(),
    })?;
    let unit = header
        .strip_prefix("suite ")
        .map(str::trim)
        .filter(|u| !u.is_empty())
        .ok_or(ToyError::Syntax {
            line: ln,
            message: "expected `suite <unit-name>`".into(),
        })?
        .to_string();
    let tests = lines
        .map(|(ln, l)| parse_test(l, ln))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ToySuite { unit, tests })
}

/// Parse and check a suite against the unit it claims to test.
pub fn validate_suite(text: &str, unit: &ToyUnit) -> Result<ToySuite, ToyError> {
    let suite = parse_suite(text)?;
    if suite.unit != unit.name {
        return Err(ToyError::WrongUnit {
            expected: unit.name.clone(),
            found: suite.unit,
        });
    }
    for (i, t) in suite.tests.iter().enumerate() {
        if t.args.len() != unit.arity() {
            return Err(ToyError::Arity {
                test: t.name.clone(),
                expected: unit.arity(),
                found: t.args.len(),
            });
        }
        if suite.tests[..i].iter().any(|o| o.name == t.name) {
            return Err(ToyError::DuplicateTest(t.name.clone()));
        }
    }
    Ok(suite)
}

fn fnv1a(parts: &[&[u8]]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for part in parts {
        for b in *part {
            h ^= u64::from(*b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        h ^= 0xff;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

impl ToyTest {
    /// Expected value for the given execution round.
    pub fn expected_for(&self, suite: &str, round: u32) -> i64 {
        match &self.expected {
            Expected::Value(v) => *v,
            Expected::Choice(vs) => {
                let seed = fnv1a(&[suite.as_bytes(), self.name.as_bytes(), &round.to_le_bytes()]);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                vs[rng.gen_range(0..vs.len())]
            }
        }
    }

    /// Pass/fail on `unit` in execution round `round`.
    pub fn passes(&self, unit: &ToyUnit, suite: &str, round: u32) -> bool {
        eval(unit, &self.args) == self.expected_for(suite, round)
    }
}
