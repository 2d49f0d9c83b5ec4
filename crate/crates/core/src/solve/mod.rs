//! Exact Roman domination solvers.
//!
//! [`tree_dp`] is linear-time on trees; [`brute`] is a branch-and-bound
//! search for arbitrary graphs of up to roughly twenty vertices. The two share
//! no code beyond [`Graph`](crate::Graph) and are used as oracles for each
//! other and for the closed forms.

pub mod brute;
mod random_tree;
pub mod tree_dp;

use core::fmt;
use core::str::FromStr;

use crate::graph::Labeling;

pub use brute::{solve_brute, BruteOptions};
pub use random_tree::{random_tree, tree_from_pruefer};
pub use tree_dp::{solve_tree_dp, solve_tree_dp_rooted, DpStateTable};

/// How a [`SolveResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Formula,
    Construction,
    TreeDp,
    BruteForce,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Construction => "construction",
            Method::TreeDp => "tree-dp",
            Method::BruteForce => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "formula" => Ok(Method::Formula),
            "construction" => Ok(Method::Construction),
            "tree-dp" => Ok(Method::TreeDp),
            "brute" | "brute-force" => Ok(Method::BruteForce),
            _ => Err(crate::Error::Domain("unknown method")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub gamma: u64,
    pub labeling: Labeling,
    pub method: Method,
    /// Search nodes explored; 0 where not applicable.
    pub nodes: u64,
}
