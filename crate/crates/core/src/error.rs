use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid contraction pattern r{0}{1} * r{2}{3}")]
    Pattern(usize, usize, usize, usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("singular map: {0}")]
    Singular(String),
    #[error("invalid form: {0}")]
    Form(String),
    #[error("search budget exceeded: {candidates} candidates > budget {budget}")]
    Budget { candidates: u128, budget: u128 },
    /// Two independent evaluations of the same statement disagree.
    #[error("consistency fault: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
