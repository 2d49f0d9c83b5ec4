//! Exhaustive Roman domination search with branch-and-bound.
//!
//! Vertices are labeled in id order, trying 0, then 1, then 2. A branch is cut
//! when its partial weight already matches the incumbent, or when some vertex
//! whose whole closed neighborhood is labeled sits at 0 without a neighbor
//! labeled 2. Only strictly better labelings replace the incumbent, so the
//! result is the lexicographically least optimal labeling, with or without
//! pruning.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use super::{Method, SolveResult};
use crate::error::{Error, Result};
use crate::graph::{Graph, Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteOptions {
    /// Give up after this many search nodes.
    pub node_limit: Option<u64>,
    /// Turning this off enumerates every labeling; only useful for checking
    /// that pruning never changes the answer.
    pub prune: bool,
}

impl Default for BruteOptions {
    fn default() -> Self {
        Self {
            node_limit: None,
            prune: true,
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    prune: bool,
    labels: Vec<u8>,
    /// Assigned neighbors labeled 2, per vertex.
    defenders: Vec<u32>,
    /// `closes[i]`: vertices whose closed neighborhood is fully labeled once
    /// vertex `i` is.
    closes: Vec<Vec<usize>>,
    weight: u64,
    best_weight: u64,
    best: Option<Vec<u8>>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, label: u8) {
        self.labels[v] = label;
        self.weight += u64::from(label);
        if label == 2 {
            for &w in self.g.neighbors(v) {
                self.defenders[w] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let label = self.labels[v];
        self.weight -= u64::from(label);
        if label == 2 {
            for &w in self.g.neighbors(v) {
                self.defenders[w] -= 1;
            }
        }
        self.labels[v] = 0;
    }

    fn closed_ok(&self, v: usize) -> bool {
        self.closes[v]
            .iter()
            .all(|&u| self.labels[u] != 0 || self.defenders[u] > 0)
    }

    fn leaf(&mut self) {
        if self.weight >= self.best_weight {
            return;
        }
        if !self.prune {
            let n = self.labels.len();
            let ok = (0..n).all(|u| self.labels[u] != 0 || self.defenders[u] > 0);
            if !ok {
                return;
            }
        }
        self.best_weight = self.weight;
        self.best = Some(self.labels.clone());
    }
}

pub fn solve_brute(g: &Graph, opts: &BruteOptions) -> Result<SolveResult> {
    let n = g.n();
    let mut closes = vec![Vec::new(); n];
    for v in 0..n {
        let last = g.neighbors(v).last().map_or(v, |&w| w.max(v));
        closes[last].push(v);
    }
    let mut s = Search {
        g,
        prune: opts.prune,
        labels: vec![0; n],
        defenders: vec![0; n],
        closes,
        weight: 0,
        // all-ones is always an RDF, so the optimum is at most n
        best_weight: n as u64 + 1,
        best: None,
    };

    let mut nodes = 0u64;
    let mut next = vec![0u8; n];
    let mut depth = 0usize;
    loop {
        if depth == n {
            s.leaf();
            if n == 0 {
                break;
            }
            depth -= 1;
            s.unassign(depth);
            continue;
        }
        let label = next[depth];
        if label > 2 || (s.prune && s.weight + u64::from(label) >= s.best_weight) {
            next[depth] = 0;
            if depth == 0 {
                break;
            }
            depth -= 1;
            s.unassign(depth);
            continue;
        }
        next[depth] = label + 1;
        nodes += 1;
        if let Some(limit) = opts.node_limit {
            if nodes > limit {
                let best = s.best.take().map(|labels| {
                    Box::new(SolveResult {
                        gamma: s.best_weight,
                        labeling: Labeling::new(labels).expect("labels are 0..=2"),
                        method: Method::BruteForce,
                        nodes: limit,
                    })
                });
                return Err(Error::BudgetExceeded { limit, best });
            }
        }
        s.assign(depth, label);
        if !s.prune || s.closed_ok(depth) {
            depth += 1;
        } else {
            s.unassign(depth);
        }
    }

    let labels = s.best.expect("some RDF always exists");
    Ok(SolveResult {
        gamma: s.best_weight,
        labeling: Labeling::new(labels).expect("labels are 0..=2"),
        method: Method::BruteForce,
        nodes,
    })
}
