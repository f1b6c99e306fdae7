//! Seeded mock test generators of tunable strength.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::exec::eval;
use super::lang::ToyUnit;
use super::testfile::{Expected, ToyTest};

pub const RANDOM_TESTS: usize = 20;
pub const RANDOM_RANGE: i64 = 100;
/// Upper bound on points visited when scanning for guard boundaries.
const SCAN_POINTS: usize = 50_000;
const SCAN_RADIUS: i64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quality {
    /// A single test at the origin.
    Weak,
    /// Uniform random vectors.
    Random,
    /// Random vectors plus inputs on each guard's boundary.
    Boundary,
}

impl FromStr for Quality {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "weak" => Ok(Quality::Weak),
            "random" => Ok(Quality::Random),
            "boundary" => Ok(Quality::Boundary),
            other => Err(format!("unknown generator quality `{other}`")),
        }
    }
}

impl fmt::Display for Quality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quality::Weak => "weak",
            Quality::Random => "random",
            Quality::Boundary => "boundary",
        })
    }
}

fn unit_seed(unit: &ToyUnit, seed: u64) -> u64 {
    unit.name
        .bytes()
        .fold(seed ^ 0x9e37_79b9_7f4a_7c15, |h, b| {
            (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
        })
}

fn radius_for(arity: usize) -> i64 {
    let mut r = SCAN_RADIUS;
    while r > 1
        && (2 * r + 1)
            .checked_pow(arity as u32)
            .is_none_or(|n| n as usize > SCAN_POINTS)
    {
        r -= 1;
    }
    r
}

/// Visit the cube `[-r, r]^arity` in lexicographic order.
fn scan_cube(arity: usize, r: i64, mut visit: impl FnMut(&[i64]) -> bool) {
    let mut point = vec![-r; arity];
    loop {
        if visit(&point) {
            return;
        }
        let mut i = arity;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if point[i] < r {
                point[i] += 1;
                break;
            }
            point[i] = -r;
        }
    }
}

fn boundary_inputs(unit: &ToyUnit) -> Vec<Vec<i64>> {
    let r = radius_for(unit.arity());
    let mut out: Vec<Vec<i64>> = Vec::new();
    for (k, rule) in unit.rules.iter().enumerate() {
        for gap in [-1, 0, 1] {
            let mut reaching = None;
            let mut any = None;
            scan_cube(unit.arity(), r, |p| {
                if rule.guard.gap(p) != gap {
                    return false;
                }
                if any.is_none() {
                    any = Some(p.to_vec());
                }
                if unit.rules[..k].iter().all(|prev| !prev.guard.holds(p)) {
                    reaching = Some(p.to_vec());
                    return true;
                }
                false
            });
            if let Some(p) = reaching.or(any) {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Generate regression-style tests: expected values come from running the
/// original unit. The budget does not influence the output.
pub fn mock_generate(unit: &ToyUnit, _budget_s: u64, quality: Quality, seed: u64) -> Vec<ToyTest> {
    let inputs: Vec<Vec<i64>> = match quality {
        Quality::Weak => vec![vec![0; unit.arity()]],
        Quality::Random | Quality::Boundary => {
            let mut rng = ChaCha8Rng::seed_from_u64(unit_seed(unit, seed));
            let mut inputs: Vec<Vec<i64>> = (0..RANDOM_TESTS)
                .map(|_| {
                    (0..unit.arity())
                        .map(|_| rng.gen_range(-RANDOM_RANGE..=RANDOM_RANGE))
                        .collect()
                })
                .collect();
            if quality == Quality::Boundary {
                inputs.extend(boundary_inputs(unit));
            }
            inputs
        }
    };
    inputs
        .into_iter()
        .enumerate()
        .map(|(i, args)| ToyTest {
            name: format!("t{i}"),
            expected: Expected::Value(eval(unit, &args)),
            args,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toybench::{execute, parse_unit};

    fn abs() -> ToyUnit {
        parse_unit("unit abs\nin x\nL1: if x < 0 then return 0 - x\nelse return x\n").unwrap()
    }

    #[test]
    fn weak_is_origin() {
        let tests = mock_generate(&abs(), 10, Quality::Weak, 1);
        assert_eq!(
            tests,
            vec![ToyTest {
                name: "t0".into(),
                args: vec![0],
                expected: Expected::Value(0)
            }]
        );
    }

    #[test]
    fn deterministic_per_seed() {
        let u = abs();
        for q in [Quality::Random, Quality::Boundary] {
            assert_eq!(mock_generate(&u, 10, q, 7), mock_generate(&u, 10, q, 7));
        }
        assert_ne!(
            mock_generate(&u, 10, Quality::Random, 7),
            mock_generate(&u, 10, Quality::Random, 8)
        );
        let r = mock_generate(&u, 10, Quality::Random, 7);
        assert_eq!(r.len(), RANDOM_TESTS);
        assert!(r.iter().all(|t| t.args[0].abs() <= RANDOM_RANGE));
    }

    #[test]
    fn boundary_covers_both_branches() {
        let u = abs();
        let tests = mock_generate(&u, 10, Quality::Boundary, 3);
        let mut outcomes = (false, false);
        for t in &tests {
            let (_, trace) = execute(&u, &t.args);
            match trace.guards[0] {
                Some(true) => outcomes.0 = true,
                Some(false) => outcomes.1 = true,
                None => {}
            }
        }
        assert_eq!(outcomes, (true, true));
        assert!(tests.iter().any(|t| t.args == [0]));
        assert!(tests.iter().any(|t| t.args == [-1]));
    }

    #[test]
    fn radius_bounds() {
        assert_eq!(radius_for(1), SCAN_RADIUS);
        assert_eq!(radius_for(3), SCAN_RADIUS);
        assert!((2 * radius_for(5) + 1).pow(5) as usize <= SCAN_POINTS);
    }
}
