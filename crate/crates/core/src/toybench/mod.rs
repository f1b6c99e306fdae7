//! A small, total subject language with exactly computable coverage and
//! mutation results, plus seeded mock generators.
//!
//! Units are ordered guarded rules over integer inputs: the first guard that
//! holds decides the return value, otherwise the `else` expression does.
//! Arithmetic wraps, so every expression is defined for every input.

mod exec;
mod lang;
mod mockgen;
mod mutate;
mod testfile;

use thiserror::Error;

pub use exec::{
    branches_total, coverage, coverage_of, eval, execute, lines_total, CoverageCounts,
    CoverageTrace, LineSet,
};
pub use lang::{parse_unit, ArithOp, CmpOp, Expr, Guard, GuardedRule, ToyUnit};
pub use mockgen::{mock_generate, Quality, RANDOM_RANGE, RANDOM_TESTS};
pub use mutate::{line_tokens, mutants_of, replace_token, Mutant, MutationOperator, Site, Token};
pub use testfile::{parse_suite, validate_suite, Expected, ToySuite, ToyTest, SUITE_EXTENSION};

pub const UNIT_EXTENSION: &str = "toy";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToyError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: undeclared variable `{name}`")]
    UndeclaredVariable { line: usize, name: String },
    #[error("suite targets `{found}`, expected `{expected}`")]
    WrongUnit { expected: String, found: String },
    #[error("test `{test}` passes {found} arguments, unit takes {expected}")]
    Arity {
        test: String,
        expected: usize,
        found: usize,
    },
    #[error("test `{0}` defined twice")]
    DuplicateTest(String),
}

/// The bundled subject units.
pub mod corpus {
    pub const UNITS: &[(&str, &str)] = &[
        ("abs", include_str!("../../corpus/abs.toy")),
        ("bucket", include_str!("../../corpus/bucket.toy")),
        ("clamp", include_str!("../../corpus/clamp.toy")),
        ("discount", include_str!("../../corpus/discount.toy")),
        ("distance", include_str!("../../corpus/distance.toy")),
        ("grade", include_str!("../../corpus/grade.toy")),
        ("quadrant", include_str!("../../corpus/quadrant.toy")),
        ("shipping", include_str!("../../corpus/shipping.toy")),
        ("sign", include_str!("../../corpus/sign.toy")),
        ("tax", include_str!("../../corpus/tax.toy")),
        ("triangle", include_str!("../../corpus/triangle.toy")),
        ("window", include_str!("../../corpus/window.toy")),
    ];

    pub fn units() -> Vec<super::ToyUnit> {
        UNITS
            .iter()
            .map(|(_, text)| super::parse_unit(text).expect("bundled unit parses"))
            .collect()
    }
}
