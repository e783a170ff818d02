#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Run {
    /// Value of a `key=value` line in the machine section.
    pub fn value(&self, key: &str) -> Option<&str> {
        npp_cli::report::machine_section(&self.stdout).into_iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

/// Run the binary with the data directory as working directory.
pub fn npp_in(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_npp")).args(args).current_dir(dir).output().expect("spawn npp");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().unwrap_or(-1),
    }
}

pub fn npp(args: &[&str]) -> Run {
    npp_in(&data_dir(), args)
}

/// Compare with `tests/golden/NAME`, rewriting it when `UPDATE_GOLDEN` is set.
pub fn golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        return Ok(());
    }
    let first = expected.lines().zip(actual.lines()).position(|(a, b)| a != b).unwrap_or(expected.lines().count().min(actual.lines().count()));
    Err(format!(
        "{name} differs from the golden file at line {}: expected {:?}, got {:?}",
        first + 1,
        expected.lines().nth(first),
        actual.lines().nth(first)
    ))
}
