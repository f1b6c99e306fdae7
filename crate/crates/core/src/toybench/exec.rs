use super::lang::ToyUnit;

/// What one execution touched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageTrace {
    /// Guard outcome per rule; `None` when the rule was never reached.
    pub guards: Vec<Option<bool>>,
    pub else_reached: bool,
}

impl CoverageTrace {
    pub fn covers_line(&self, line: usize) -> bool {
        match self.guards.get(line) {
            Some(outcome) => outcome.is_some(),
            None => line == self.guards.len() && self.else_reached,
        }
    }

    pub fn covered_lines(&self) -> LineSet {
        let n = self.guards.len();
        let mut set = LineSet::new(n + 1);
        for line in 0..=n {
            if self.covers_line(line) {
                set.insert(line);
            }
        }
        set
    }

    /// Branch ids: `2k` true outcome of rule k, `2k + 1` false outcome, `2n`
    /// reaching `else`.
    pub fn covered_branches(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (k, g) in self.guards.iter().enumerate() {
            match g {
                Some(true) => out.push(2 * k),
                Some(false) => out.push(2 * k + 1),
                None => {}
            }
        }
        if self.else_reached {
            out.push(2 * self.guards.len());
        }
        out
    }
}

/// Fixed-size set of line indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LineSet(Vec<bool>);

impl LineSet {
    pub fn new(lines: usize) -> Self {
        Self(vec![false; lines])
    }

    pub fn insert(&mut self, line: usize) {
        self.0[line] = true;
    }

    pub fn contains(&self, line: usize) -> bool {
        self.0.get(line).copied().unwrap_or(false)
    }

    pub fn union_with(&mut self, other: &LineSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= *b;
        }
    }

    pub fn len(&self) -> usize {
        self.0.iter().filter(|b| **b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(|(i, _)| i)
    }
}

/// Evaluate guards top to bottom; the first one that holds decides the value.
pub fn execute(unit: &ToyUnit, args: &[i64]) -> (i64, CoverageTrace) {
    assert_eq!(
        args.len(),
        unit.arity(),
        "arity mismatch for `{}`",
        unit.name
    );
    let mut guards = vec![None; unit.rules.len()];
    for (k, rule) in unit.rules.iter().enumerate() {
        let taken = rule.guard.holds(args);
        guards[k] = Some(taken);
        if taken {
            let value = rule.ret.eval(args);
            return (
                value,
                CoverageTrace {
                    guards,
                    else_reached: false,
                },
            );
        }
    }
    (
        unit.default_return.eval(args),
        CoverageTrace {
            guards,
            else_reached: true,
        },
    )
}

/// Value only, for callers that do not need the trace.
pub fn eval(unit: &ToyUnit, args: &[i64]) -> i64 {
    unit.rules
        .iter()
        .find(|r| r.guard.holds(args))
        .map(|r| r.ret.eval(args))
        .unwrap_or_else(|| unit.default_return.eval(args))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CoverageCounts {
    pub lines_total: usize,
    pub lines_covered: usize,
    pub branches_total: usize,
    pub branches_covered: usize,
}

pub fn lines_total(unit: &ToyUnit) -> usize {
    unit.rules.len() + 1
}

pub fn branches_total(unit: &ToyUnit) -> usize {
    2 * unit.rules.len() + 1
}

/// Union coverage of a set of argument vectors.
pub fn coverage_of<'a>(
    unit: &ToyUnit,
    inputs: impl IntoIterator<Item = &'a [i64]>,
) -> CoverageCounts {
    let mut lines = LineSet::new(lines_total(unit));
    let mut branches = vec![false; branches_total(unit)];
    for args in inputs {
        let (_, trace) = execute(unit, args);
        lines.union_with(&trace.covered_lines());
        for b in trace.covered_branches() {
            branches[b] = true;
        }
    }
    CoverageCounts {
        lines_total: lines_total(unit),
        lines_covered: lines.len(),
        branches_total: branches_total(unit),
        branches_covered: branches.iter().filter(|b| **b).count(),
    }
}

/// Coverage of a test list; failing tests count as well.
pub fn coverage(unit: &ToyUnit, tests: &[super::ToyTest]) -> CoverageCounts {
    coverage_of(unit, tests.iter().map(|t| t.args.as_slice()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toybench::{parse_unit, Expected, ToyTest};

    fn abs() -> ToyUnit {
        parse_unit("unit abs\nin x\nL1: if x < 0 then return 0 - x\nelse return x\n").unwrap()
    }

    fn t(x: i64) -> ToyTest {
        ToyTest {
            name: format!("t{x}"),
            args: vec![x],
            expected: Expected::Value(x.abs()),
        }
    }

    #[test]
    fn abs_negative() {
        let (v, trace) = execute(&abs(), &[-3]);
        assert_eq!(v, 3);
        assert_eq!(trace.guards, vec![Some(true)]);
        assert!(!trace.else_reached);
    }

    #[test]
    fn abs_positive() {
        let (v, trace) = execute(&abs(), &[5]);
        assert_eq!(v, 5);
        assert_eq!(trace.guards, vec![Some(false)]);
        assert!(trace.else_reached);
        assert_eq!(eval(&abs(), &[5]), 5);
    }

    #[test]
    fn abs_coverage() {
        let u = abs();
        let one = coverage(&u, &[t(-3)]);
        assert_eq!((one.lines_covered, one.lines_total), (1, 2));
        assert_eq!((one.branches_covered, one.branches_total), (1, 3));
        let two = coverage(&u, &[t(-3), t(5)]);
        assert_eq!((two.lines_covered, two.lines_total), (2, 2));
        assert_eq!((two.branches_covered, two.branches_total), (3, 3));
        let none = coverage(&u, &[]);
        assert_eq!((none.lines_covered, none.branches_covered), (0, 0));
    }
}
