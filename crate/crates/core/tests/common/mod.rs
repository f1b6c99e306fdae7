//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use std::fs;
use std::os::unix::fs::PermissionsExt;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use benchtool::config::{parse_benchmarks, BenchmarkSuite};
use benchtool::toybench::{eval, mutants_of, ToyTest, ToyUnit, UNIT_EXTENSION};

pub const TOY_RUNTOOL: &str = env!("CARGO_BIN_EXE_toy-runtool");
pub const BENCHTOOL: &str = env!("CARGO_BIN_EXE_benchtool");

/// Create `<root>/<name>/runtool` launching the mock adapter with `args`.
pub fn make_tool_home(root: &Path, name: &str, args: &[&str]) -> PathBuf {
    let home = root.join(name);
    fs::create_dir_all(&home).unwrap();
    let quoted: Vec<String> = args.iter().map(|a| format!("'{a}'")).collect();
    let script = format!(
        "#!/bin/sh\nexec '{TOY_RUNTOOL}' {} \"$@\"\n",
        quoted.join(" ")
    );
    let path = home.join("runtool");
    fs::write(&path, script).unwrap();
    fs::set_permissions(&path, fs::Permissions::from_mode(0o755)).unwrap();
    home
}

/// Write the bundled units into `dir` as `<name>.toy`.
pub fn write_corpus(dir: &Path) -> Vec<String> {
    fs::create_dir_all(dir).unwrap();
    benchtool::toybench::corpus::UNITS
        .iter()
        .map(|(name, text)| {
            fs::write(dir.join(format!("{name}.{UNIT_EXTENSION}")), text).unwrap();
            name.to_string()
        })
        .collect()
}

/// `benchmarks.list` text: one benchmark per `(id, units)` entry, all
/// sharing the absolute source directory `src`.
pub fn benchmarks_text(src: &Path, benches: &[(&str, Vec<String>)]) -> String {
    let src = src.canonicalize().unwrap();
    let mut out = String::from("{\n");
    for (id, units) in benches {
        out.push_str(&format!(
            "  {id}= {{\n    src={0}\n    bin={0}\n    classes=({1})\n    classpath=({0})\n  }}\n",
            src.display(),
            units.join(" ")
        ));
    }
    out.push_str("}\n");
    out
}

pub fn write_benchmarks(
    root: &Path,
    src: &Path,
    benches: &[(&str, Vec<String>)],
) -> BenchmarkSuite {
    let text = benchmarks_text(src, benches);
    fs::write(root.join("benchmarks.list"), &text).unwrap();
    parse_benchmarks(&text).unwrap()
}

pub fn write_eval_conf(root: &Path, tools: &[&str], budgets: &[u64], repetitions: u32) {
    let budgets: Vec<String> = budgets.iter().map(u64::to_string).collect();
    let text = format!(
        "tools={}\nbudgets={}\nrepetitions={repetitions}\nweights=1,2,4\nflaky_runs=5\nmutation_deadline=300\nanalyzer=toy\n",
        tools.join(","),
        budgets.join(",")
    );
    fs::write(root.join("eval.conf"), text).unwrap();
}

/// Run the `benchtool` binary under `root`.
pub fn benchtool(root: &Path, args: &[&str]) -> Output {
    Command::new(BENCHTOOL)
        .arg("--root")
        .arg(root)
        .arg("--quiet")
        .args(args)
        .output()
        .unwrap()
}

/// Killed mutant ids by exhaustive execution: every mutant against every
/// test that passes on the original.
pub fn brute_force_killed(unit: &ToyUnit, tests: &[ToyTest], suite: &str) -> Vec<String> {
    let passing: Vec<&ToyTest> = tests
        .iter()
        .filter(|t| (0..5).all(|r| eval(unit, &t.args) == t.expected_for(suite, r)))
        .collect();
    mutants_of(unit)
        .into_iter()
        .filter(|m| {
            passing
                .iter()
                .any(|t| eval(&m.mutated_unit, &t.args) != t.expected_for(suite, 0))
        })
        .map(|m| m.id)
        .collect()
}
