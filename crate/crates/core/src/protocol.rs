//! Host side of the `runtool` adapter protocol.
//!
//! One field per line. The host opens a benchmark with
//!
//! ```text
//! BENCHMARK
//! <src>
//! <bin>
//! <n classpath entries>
//! <entry>...
//! <n units>
//! ```
//!
//! and the adapter answers `READY`, optionally preceded by one
//! `CLASSPATH`, `<n>`, `<path>...` block. Each generation request is a budget
//! line and a unit line, acknowledged by `READY`.

use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::Path;
use std::process::{Child, Command, Stdio};
use std::sync::mpsc::{self, Receiver, RecvTimeoutError};
use std::thread::{self, JoinHandle};
use std::time::{Duration, Instant};

use crate::config::Benchmark;

pub const DEFAULT_HANDSHAKE_TIMEOUT: Duration = Duration::from_secs(30);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Init,
    AwaitClasspath,
    Ready,
    Generating,
    Closed,
}

#[derive(Debug, thiserror::Error)]
pub enum ProtocolError {
    #[error("protocol error: expected {expected}, got `{found}`")]
    Unexpected { expected: String, found: String },
    #[error("adapter exited during {0:?}")]
    AdapterDied(Phase),
    #[error("no handshake reply within {0:?}")]
    HandshakeTimeout(Duration),
    #[error("`{op}` is not allowed in phase {phase:?}")]
    Precondition { op: &'static str, phase: Phase },
    #[error("budget must be positive")]
    ZeroBudget,
    #[error("I/O error talking to adapter: {0}")]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunRequest {
    pub budget_s: u64,
    pub unit_name: String,
}

/// Result of waiting for the end of a generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completion {
    Ready,
    /// The deadline passed first; the session is still `Generating`.
    Pending,
}

pub struct AdapterSession {
    phase: Phase,
    extra_classpath: Vec<String>,
    writer: Option<Box<dyn Write + Send>>,
    lines: Receiver<io::Result<String>>,
    child: Option<Child>,
    handshake_timeout: Duration,
}

impl std::fmt::Debug for AdapterSession {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AdapterSession")
            .field("phase", &self.phase)
            .field("extra_classpath", &self.extra_classpath)
            .field("pid", &self.child.as_ref().map(Child::id))
            .finish()
    }
}

fn spawn_reader(input: impl Read + Send + 'static) -> Receiver<io::Result<String>> {
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let reader = BufReader::new(input);
        for line in reader.lines() {
            let stop = line.is_err();
            if tx.send(line).is_err() || stop {
                break;
            }
        }
    });
    rx
}

fn check_line(s: &str) -> io::Result<()> {
    if s.contains('\n') || s.contains('\r') {
        return Err(io::Error::new(
            io::ErrorKind::InvalidInput,
            format!("field contains a line break: {s:?}"),
        ));
    }
    Ok(())
}

impl AdapterSession {
    /// Session over arbitrary streams: `from_adapter` carries adapter output.
    pub fn from_streams(
        from_adapter: impl Read + Send + 'static,
        to_adapter: impl Write + Send + 'static,
    ) -> Self {
        Self {
            phase: Phase::Init,
            extra_classpath: Vec::new(),
            writer: Some(Box::new(to_adapter)),
            lines: spawn_reader(from_adapter),
            child: None,
            handshake_timeout: DEFAULT_HANDSHAKE_TIMEOUT,
        }
    }

    /// Launch `runtool` in its own process group with `home` as working
    /// directory; adapter stderr goes to `stderr`.
    pub fn spawn(
        runtool: &Path,
        home: &Path,
        stderr: Stdio,
        env: &[(String, String)],
    ) -> io::Result<Self> {
        use std::os::unix::process::CommandExt;
        let mut child = Command::new(runtool)
            .current_dir(home)
            .envs(env.iter().map(|(k, v)| (k, v)))
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(stderr)
            .process_group(0)
            .spawn()?;
        let stdin = child.stdin.take().expect("piped stdin");
        let stdout = child.stdout.take().expect("piped stdout");
        let mut session = Self::from_streams(stdout, stdin);
        session.child = Some(child);
        Ok(session)
    }

    pub fn with_handshake_timeout(mut self, timeout: Duration) -> Self {
        self.handshake_timeout = timeout;
        self
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn extra_classpath(&self) -> &[String] {
        &self.extra_classpath
    }

    pub fn child_mut(&mut self) -> Option<&mut Child> {
        self.child.as_mut()
    }

    fn send(&mut self, fields: &[String]) -> Result<(), ProtocolError> {
        let phase = self.phase;
        let w = self
            .writer
            .as_mut()
            .ok_or(ProtocolError::AdapterDied(phase))?;
        let mut buf = String::new();
        for f in fields {
            check_line(f)?;
            buf.push_str(f);
            buf.push('\n');
        }
        let res = w.write_all(buf.as_bytes()).and_then(|_| w.flush());
        match res {
            Ok(()) => Ok(()),
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {
                self.phase = Phase::Closed;
                Err(ProtocolError::AdapterDied(phase))
            }
            Err(e) => Err(e.into()),
        }
    }

    /// Next adapter line, `None` on timeout.
    fn recv(&mut self, deadline: Instant) -> Result<Option<String>, ProtocolError> {
        let wait = deadline.saturating_duration_since(Instant::now());
        match self.lines.recv_timeout(wait) {
            Ok(Ok(line)) => Ok(Some(line.trim_end_matches('\r').to_string())),
            Ok(Err(e)) => Err(e.into()),
            Err(RecvTimeoutError::Timeout) => Ok(None),
            Err(RecvTimeoutError::Disconnected) => {
                let phase = self.phase;
                self.phase = Phase::Closed;
                Err(ProtocolError::AdapterDied(phase))
            }
        }
    }

    fn recv_handshake(&mut self, deadline: Instant) -> Result<String, ProtocolError> {
        self.recv(deadline)?
            .ok_or(ProtocolError::HandshakeTimeout(self.handshake_timeout))
    }

    fn unexpected(&mut self, expected: &str, found: String) -> ProtocolError {
        self.phase = Phase::Closed;
        ProtocolError::Unexpected {
            expected: expected.into(),
            found,
        }
    }

    pub fn handshake(&mut self, bench: &Benchmark) -> Result<(), ProtocolError> {
        if self.phase != Phase::Init {
            return Err(ProtocolError::Precondition {
                op: "handshake",
                phase: self.phase,
            });
        }
        let mut fields = vec![
            "BENCHMARK".to_string(),
            bench.src.clone(),
            bench.bin.clone(),
            bench.classpath.len().to_string(),
        ];
        fields.extend(bench.classpath.iter().cloned());
        fields.push(bench.classes.len().to_string());
        self.send(&fields)?;
        let deadline = Instant::now() + self.handshake_timeout;
        let mut seen_classpath = false;
        loop {
            let line = self.recv_handshake(deadline)?;
            match line.as_str() {
                "READY" => break,
                "CLASSPATH" if !seen_classpath => {
                    seen_classpath = true;
                    self.phase = Phase::AwaitClasspath;
                    let count = self.recv_handshake(deadline)?;
                    let n: usize = match count.parse() {
                        Ok(n) => n,
                        Err(_) => return Err(self.unexpected("a classpath entry count", count)),
                    };
                    for _ in 0..n {
                        let path = self.recv_handshake(deadline)?;
                        self.extra_classpath.push(path);
                    }
                }
                _ => {
                    let expected = if seen_classpath {
                        "READY"
                    } else {
                        "CLASSPATH or READY"
                    };
                    return Err(self.unexpected(expected, line));
                }
            }
        }
        self.phase = Phase::Ready;
        Ok(())
    }

    /// Send a request without waiting; the session becomes `Generating`.
    pub fn send_request(&mut self, req: &RunRequest) -> Result<(), ProtocolError> {
        if self.phase != Phase::Ready {
            return Err(ProtocolError::Precondition {
                op: "request_generation",
                phase: self.phase,
            });
        }
        if req.budget_s == 0 {
            return Err(ProtocolError::ZeroBudget);
        }
        self.send(&[req.budget_s.to_string(), req.unit_name.clone()])?;
        self.phase = Phase::Generating;
        Ok(())
    }

    /// Wait up to `timeout` for `READY`.
    pub fn await_ready(&mut self, timeout: Duration) -> Result<Completion, ProtocolError> {
        if self.phase != Phase::Generating {
            return Err(ProtocolError::Precondition {
                op: "await_ready",
                phase: self.phase,
            });
        }
        let deadline = Instant::now() + timeout;
        match self.recv(deadline)? {
            None => Ok(Completion::Pending),
            Some(line) if line == "READY" => {
                self.phase = Phase::Ready;
                Ok(Completion::Ready)
            }
            Some(line) => Err(self.unexpected("READY", line)),
        }
    }

    /// Send a request and block until `READY`.
    pub fn request_generation(&mut self, req: &RunRequest) -> Result<(), ProtocolError> {
        self.send_request(req)?;
        loop {
            if self.await_ready(Duration::from_secs(3600))? == Completion::Ready {
                return Ok(());
            }
        }
    }

    /// Close the adapter's input and mark the session closed. The child, if
    /// any, is returned for the caller to reap.
    pub fn close(&mut self) -> Option<Child> {
        self.writer = None;
        self.phase = Phase::Closed;
        self.child.take()
    }
}

/// One step of a scripted adapter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StubStep {
    /// Read a complete `BENCHMARK` block.
    ReceiveBenchmark,
    /// Read `n` lines.
    Receive(usize),
    Send(String),
    Sleep(Duration),
}

impl StubStep {
    pub fn send(s: &str) -> Self {
        StubStep::Send(s.to_string())
    }
}

pub struct StubHandle {
    thread: JoinHandle<io::Result<Vec<String>>>,
}

impl StubHandle {
    /// Every line the stub received, including those arriving after the
    /// script ended, up to end of input.
    pub fn join(self) -> io::Result<Vec<String>> {
        self.thread.join().expect("stub thread panicked")
    }
}

fn play(
    script: Vec<StubStep>,
    input: impl Read,
    mut output: Option<impl Write>,
) -> io::Result<Vec<String>> {
    let mut lines = BufReader::new(input).lines();
    let mut received = Vec::new();
    let mut take = |received: &mut Vec<String>| -> io::Result<Option<usize>> {
        match lines.next() {
            Some(l) => {
                let l = l?;
                let n = l.parse().ok();
                received.push(l);
                Ok(n)
            }
            None => Err(io::ErrorKind::UnexpectedEof.into()),
        }
    };
    let mut result = Ok(());
    for step in script {
        let r = match step {
            StubStep::ReceiveBenchmark => (|| {
                for _ in 0..3 {
                    take(&mut received)?;
                }
                let cp = take(&mut received)?.unwrap_or(0);
                for _ in 0..cp {
                    take(&mut received)?;
                }
                take(&mut received).map(|_| ())
            })(),
            StubStep::Receive(n) => (0..n).try_for_each(|_| take(&mut received).map(|_| ())),
            StubStep::Send(line) => match output.as_mut() {
                Some(w) => writeln!(w, "{line}").and_then(|_| w.flush()),
                None => Ok(()),
            },
            StubStep::Sleep(d) => {
                thread::sleep(d);
                Ok(())
            }
        };
        if let Err(e) = r {
            result = Err(e);
            break;
        }
    }
    drop(output.take());
    match result {
        Err(e) if e.kind() == io::ErrorKind::UnexpectedEof => Ok(received),
        Err(e) => Err(e),
        Ok(()) => {
            while take(&mut received).is_ok() {}
            Ok(received)
        }
    }
}

/// Play the adapter role from `script` on a background thread, connected to
/// the returned session. The stub closes its output when the script ends.
pub fn run_adapter_stub(script: Vec<StubStep>) -> io::Result<(AdapterSession, StubHandle)> {
    let (host_reads, stub_writes) = io::pipe()?;
    let (stub_reads, host_writes) = io::pipe()?;
    let thread = thread::spawn(move || play(script, stub_reads, Some(stub_writes)));
    Ok((
        AdapterSession::from_streams(host_reads, host_writes),
        StubHandle { thread },
    ))
}
