//! Wall-clock limits on child processes and their descendants.

use std::fs;
use std::process::Child;
use std::thread;
use std::time::{Duration, Instant};

use super::OrchestratorError;

/// Time between the terminate and kill signals.
pub const KILL_GRACE: Duration = Duration::from_secs(2);
const POLL: Duration = Duration::from_millis(20);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Completed,
    Killed,
}

/// True while some non-zombie process belongs to group `pgid`.
pub fn group_alive(pgid: u32) -> bool {
    let Ok(entries) = fs::read_dir("/proc") else {
        // SAFETY: signal 0 only checks for existence
        return unsafe { libc::kill(-(pgid as libc::pid_t), 0) } == 0;
    };
    entries.flatten().any(|e| {
        let Ok(stat) = fs::read_to_string(e.path().join("stat")) else {
            return false;
        };
        // fields after the parenthesised command name: state ppid pgrp
        let Some(rest) = stat.rfind(')').map(|i| &stat[i + 1..]) else {
            return false;
        };
        let mut fields = rest.split_whitespace();
        let state = fields.next();
        let pgrp = fields.nth(1).and_then(|p| p.parse::<u32>().ok());
        pgrp == Some(pgid) && state != Some("Z") && state != Some("X")
    })
}

fn signal_group(pgid: u32, sig: libc::c_int) {
    // SAFETY: plain kill(2) on a process group we created
    unsafe {
        libc::kill(-(pgid as libc::pid_t), sig);
    }
}

fn wait_gone(child: &mut Child, pgid: u32, within: Duration) -> bool {
    let end = Instant::now() + within;
    loop {
        let _ = child.try_wait();
        if !group_alive(pgid) {
            return true;
        }
        if Instant::now() >= end {
            return false;
        }
        thread::sleep(POLL);
    }
}

/// Terminate the process group led by `child`: SIGTERM, then SIGKILL after
/// the grace period. The child is reaped.
pub fn terminate_group(child: &mut Child) -> Result<(), OrchestratorError> {
    let pgid = child.id();
    signal_group(pgid, libc::SIGTERM);
    if !wait_gone(child, pgid, KILL_GRACE) {
        signal_group(pgid, libc::SIGKILL);
        if !wait_gone(child, pgid, KILL_GRACE) {
            return Err(OrchestratorError::KillFailed(pgid));
        }
    }
    let _ = child.wait();
    Ok(())
}

/// Let `child` (a process-group leader) run until it exits or `deadline`
/// passes, in which case its whole group is terminated.
pub fn enforce_deadline(
    child: &mut Child,
    deadline: Duration,
) -> Result<Outcome, OrchestratorError> {
    let end = Instant::now() + deadline;
    loop {
        if child.try_wait()?.is_some() {
            return Ok(Outcome::Completed);
        }
        if Instant::now() >= end {
            terminate_group(child)?;
            return Ok(Outcome::Killed);
        }
        thread::sleep(POLL);
    }
}
