//! Roman domination on simple undirected graphs.
//!
//! A Roman dominating function (RDF) labels every vertex with 0, 1 or 2 so
//! that each vertex labeled 0 has a neighbor labeled 2. The Roman domination
//! number is the least total label weight over all RDFs.
//!
//! The crate provides:
//!
//! * [`Graph`] and [`Labeling`] with RDF validation and weight,
//! * generators for comet, double comet and comb graphs ([`families`]),
//! * closed-form values and explicit optimal labelings for those families
//!   ([`closed_form`]),
//! * two independent exact solvers: a linear tree DP and a branch-and-bound
//!   search for small arbitrary graphs ([`solve`]).
//!
//! Everything here is `no_std` + `alloc`; parsing files and the command line
//! live in the companion CLI crate.

#![no_std]

extern crate alloc;

pub mod closed_form;
mod error;
pub mod families;
mod graph;
pub mod solve;

pub use closed_form::{FormulaCase, Subcase};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Graph, Labeling, Partition};
pub use solve::{Method, SolveResult};
