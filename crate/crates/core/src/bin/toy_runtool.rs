//! Mock generator adapter for toy units.
//!
//! Speaks the runtool protocol on stdin/stdout. For each request it loads
//! `<src>/<unit>.toy`, generates tests with the chosen strategy and writes
//! them as suites of at most `--suite-size` tests to `temp/testcases/`
//! (relative to the working directory).

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::thread;
use std::time::Duration;

use benchtool::orchestrator::REPETITION_ENV;
use benchtool::toybench::{self, Expected, Quality, ToySuite, SUITE_EXTENSION, UNIT_EXTENSION};
use clap::Parser;

#[derive(Parser, Debug)]
#[command(
    name = "toy-runtool",
    about = "Mock test generator speaking the runtool protocol"
)]
struct Args {
    /// Generation strategy: weak, random or boundary.
    #[arg(long, default_value = "random")]
    quality: Quality,
    /// Base seed; combined with the repetition index from the environment.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sleep this multiple of the budget after writing tests.
    #[arg(long, default_value_t = 0.0)]
    sleep_factor: f64,
    /// Only sleep for these units (repeatable); all units when absent.
    #[arg(long)]
    sleep_unit: Vec<String>,
    /// Sleep before writing tests instead of after.
    #[arg(long)]
    sleep_first: bool,
    /// Announce an extra classpath entry during the handshake (repeatable).
    #[arg(long)]
    extra_classpath: Vec<String>,
    /// Append every received line to this file.
    #[arg(long)]
    record: Option<PathBuf>,
    /// Maximum tests per suite file.
    #[arg(long, default_value_t = 10)]
    suite_size: usize,
    /// Make every n-th test's expectation nondeterministic.
    #[arg(long)]
    flaky_every: Option<usize>,
    /// Also write one suite file that does not parse.
    #[arg(long)]
    broken_suite: bool,
}

struct Input<R> {
    lines: io::Lines<R>,
    record: Option<fs::File>,
}

impl<R: BufRead> Input<R> {
    fn next(&mut self) -> io::Result<Option<String>> {
        let Some(line) = self.lines.next().transpose()? else {
            return Ok(None);
        };
        if let Some(f) = self.record.as_mut() {
            writeln!(f, "{line}")?;
        }
        Ok(Some(line))
    }

    fn expect(&mut self) -> io::Result<String> {
        self.next()?
            .ok_or_else(|| io::Error::new(io::ErrorKind::UnexpectedEof, "input ended mid-message"))
    }

    fn count(&mut self) -> io::Result<usize> {
        let line = self.expect()?;
        line.parse()
            .map_err(|_| io::Error::new(io::ErrorKind::InvalidData, format!("bad count `{line}`")))
    }
}

fn reply(out: &mut impl Write, lines: &[&str]) -> io::Result<()> {
    for l in lines {
        writeln!(out, "{l}")?;
    }
    out.flush()
}

fn generate(
    args: &Args,
    src: &str,
    unit_name: &str,
    budget: u64,
    repetition: u64,
) -> io::Result<()> {
    let cases = Path::new("temp").join("testcases");
    let data = Path::new("temp").join("data");
    fs::create_dir_all(&cases)?;
    fs::create_dir_all(&data)?;
    let path = Path::new(src).join(format!("{unit_name}.{UNIT_EXTENSION}"));
    let text = fs::read_to_string(&path)
        .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    let unit = toybench::parse_unit(&text).map_err(|e| {
        io::Error::new(
            io::ErrorKind::InvalidData,
            format!("{}: {e}", path.display()),
        )
    })?;
    let seed = args.seed.wrapping_mul(1_000_003).wrapping_add(repetition);
    let mut tests = toybench::mock_generate(&unit, budget, args.quality, seed);
    if let Some(n) = args.flaky_every.filter(|n| *n > 0) {
        for t in tests.iter_mut().skip(n - 1).step_by(n) {
            if let Expected::Value(v) = t.expected {
                t.expected = Expected::Choice(vec![v, v.wrapping_add(1)]);
            }
        }
    }
    let chunks: Vec<_> = tests.chunks(args.suite_size.max(1)).collect();
    for (i, chunk) in chunks.iter().enumerate() {
        let suite = ToySuite {
            unit: unit.name.clone(),
            tests: chunk.to_vec(),
        };
        fs::write(
            cases.join(format!("{unit_name}_{i}.{SUITE_EXTENSION}")),
            suite.to_string(),
        )?;
    }
    if args.broken_suite {
        fs::write(
            cases.join(format!("{unit_name}_broken.{SUITE_EXTENSION}")),
            format!("suite {}\ntest t0: call(\n", unit.name),
        )?;
    }
    fs::write(
        data.join(format!("{unit_name}.txt")),
        format!(
            "quality={} seed={seed} tests={}\n",
            args.quality,
            tests.len()
        ),
    )?;
    Ok(())
}

fn main() -> io::Result<()> {
    let args = Args::parse();
    let repetition: u64 = std::env::var(REPETITION_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0);
    let record = match &args.record {
        Some(p) => Some(fs::OpenOptions::new().create(true).append(true).open(p)?),
        None => None,
    };
    let mut input = Input {
        lines: io::stdin().lock().lines(),
        record,
    };
    let mut out = io::stdout().lock();

    match input.next()?.as_deref() {
        Some("BENCHMARK") => {}
        Some(other) => {
            eprintln!("expected BENCHMARK, got `{other}`");
            std::process::exit(1);
        }
        None => return Ok(()),
    }
    let src = input.expect()?;
    let _bin = input.expect()?;
    for _ in 0..input.count()? {
        input.expect()?;
    }
    let _units = input.count()?;
    if !args.extra_classpath.is_empty() {
        let n = args.extra_classpath.len().to_string();
        let mut lines = vec!["CLASSPATH", n.as_str()];
        lines.extend(args.extra_classpath.iter().map(String::as_str));
        reply(&mut out, &lines)?;
    }
    reply(&mut out, &["READY"])?;

    while let Some(budget) = input.next()? {
        let unit = input.expect()?;
        let budget: u64 = budget.parse().unwrap_or(0);
        let sleeps = args.sleep_factor > 0.0
            && (args.sleep_unit.is_empty() || args.sleep_unit.contains(&unit));
        let nap = || thread::sleep(Duration::from_secs_f64(args.sleep_factor * budget as f64));
        if sleeps && args.sleep_first {
            nap();
        }
        if let Err(e) = generate(&args, &src, &unit, budget, repetition) {
            eprintln!("toy-runtool: {e}");
        }
        if sleeps && !args.sleep_first {
            nap();
        }
        reply(&mut out, &["READY"])?;
    }
    Ok(())
}
