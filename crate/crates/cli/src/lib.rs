//! Command line front end for `npp-core`: a file format for algebras, tensors,
//! forms, maps, representations and comultiplications, and commands that
//! check, construct and convert them with exact arithmetic.

pub mod commands;
pub mod format;
pub mod report;

pub use format::{ParseError, Workspace};
pub use report::Report;

/// What a run printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    /// 0 when every requested check passes, 1 when one fails, 2 on input or
    /// usage errors.
    pub code: i32,
}

/// Run one invocation; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    commands::dispatch(&args)
}
