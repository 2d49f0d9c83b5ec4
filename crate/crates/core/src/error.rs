use alloc::boxed::Box;

use crate::solve::SolveResult;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid label {label} on vertex {vertex}; labels are 0, 1 or 2")]
    InvalidLabel { vertex: usize, label: u8 },
    #[error("labeling has {found} entries but graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("domain error: {0}")]
    Domain(&'static str),
    /// The closed form does not cover this instance (double comet with p = 2).
    #[error("excluded: double comet with p = 2 lies outside the closed form's domain")]
    Excluded,
    #[error("node budget of {limit} exceeded")]
    BudgetExceeded {
        limit: u64,
        /// Best RDF found before the budget ran out, if any.
        best: Option<Box<SolveResult>>,
    },
    #[error("malformed family spec `{0}`")]
    BadSpec(alloc::string::String),
}

pub type Result<T> = core::result::Result<T, Error>;
