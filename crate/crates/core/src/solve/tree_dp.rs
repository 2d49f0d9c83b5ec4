//! Linear-time Roman domination on trees.
//!
//! The tree is rooted and every vertex gets four minimal partial weights for
//! its subtree:
//!
//! * `w2`: the vertex is labeled 2;
//! * `w1`: the vertex is labeled 1;
//! * `w0d`: labeled 0 and defended by a child labeled 2;
//! * `w0u`: labeled 0 and not yet defended, so the parent must be labeled 2.
//!
//! In each state every other vertex of the subtree is already satisfied.
//! Traversal is iterative, so path-like trees of any depth are fine.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{Method, SolveResult};
use crate::error::{Error, Result};
use crate::graph::{Graph, Labeling};

/// Stands in for an impossible state. Large enough that sums over any
/// realistic tree never reach it, and all arithmetic on it saturates.
pub const INF: u64 = u64::MAX / 4;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Two,
    One,
    ZeroDefended,
    ZeroPending,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpStateTable {
    pub root: usize,
    pub w2: Vec<u64>,
    pub w1: Vec<u64>,
    pub w0d: Vec<u64>,
    pub w0u: Vec<u64>,
    /// Child forced to 2 when a vertex takes the `w0d` state.
    upgrade: Vec<usize>,
    parent: Vec<usize>,
    /// Breadth-first order from the root.
    order: Vec<usize>,
}

impl DpStateTable {
    pub fn build(g: &Graph, root: usize) -> Result<Self> {
        if !g.is_tree() {
            return Err(Error::NotATree);
        }
        let n = g.n();
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, n });
        }

        let mut parent = vec![NONE; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        parent[root] = root;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &c in g.neighbors(v) {
                if parent[c] == NONE {
                    parent[c] = v;
                    queue.push_back(c);
                }
            }
        }

        let mut t = Self {
            root,
            w2: vec![0; n],
            w1: vec![0; n],
            w0d: vec![0; n],
            w0u: vec![0; n],
            upgrade: vec![NONE; n],
            parent,
            order,
        };

        for i in (0..n).rev() {
            let v = t.order[i];
            let mut any = 0u64;
            let mut settled = 0u64;
            let mut best_delta = INF;
            let mut best_child = NONE;
            for &c in g.neighbors(v) {
                if c == t.parent[v] {
                    continue;
                }
                let m = t.settled(c);
                any = any.saturating_add(m.min(t.w0u[c]));
                settled = settled.saturating_add(m);
                let delta = t.w2[c] - m;
                if delta < best_delta {
                    best_delta = delta;
                    best_child = c;
                }
            }
            t.w2[v] = any.saturating_add(2);
            t.w1[v] = settled.saturating_add(1);
            t.w0u[v] = settled;
            t.w0d[v] = if best_child == NONE {
                INF
            } else {
                settled.saturating_add(best_delta).min(INF)
            };
            t.upgrade[v] = best_child;
        }
        Ok(t)
    }

    /// Cheapest state of `v` that needs nothing from its parent.
    fn settled(&self, v: usize) -> u64 {
        self.w2[v].min(self.w1[v]).min(self.w0d[v])
    }

    fn cost(&self, v: usize, s: State) -> u64 {
        match s {
            State::Two => self.w2[v],
            State::One => self.w1[v],
            State::ZeroDefended => self.w0d[v],
            State::ZeroPending => self.w0u[v],
        }
    }

    /// Cheapest state among `candidates`, earliest winning ties.
    fn pick(&self, v: usize, candidates: &[State]) -> State {
        let mut best = candidates[0];
        for &s in &candidates[1..] {
            if self.cost(v, s) < self.cost(v, best) {
                best = s;
            }
        }
        best
    }

    pub fn gamma(&self) -> u64 {
        self.settled(self.root)
    }

    pub fn labeling(&self, g: &Graph) -> Labeling {
        use State::*;
        const SETTLED: [State; 3] = [ZeroDefended, One, Two];
        const ANY: [State; 4] = [ZeroDefended, ZeroPending, One, Two];

        let n = g.n();
        let mut state = vec![Two; n];
        state[self.root] = self.pick(self.root, &SETTLED);
        let mut f = Labeling::zeros(n);
        for &v in &self.order {
            let s = state[v];
            f.put(
                v,
                match s {
                    Two => 2,
                    One => 1,
                    ZeroDefended | ZeroPending => 0,
                },
            );
            for &c in g.neighbors(v) {
                if c == self.parent[v] {
                    continue;
                }
                state[c] = match s {
                    Two => self.pick(c, &ANY),
                    ZeroDefended if c == self.upgrade[v] => Two,
                    _ => self.pick(c, &SETTLED),
                };
            }
        }
        f
    }
}

/// Roman domination number of a tree, rooted at vertex 0.
pub fn solve_tree_dp(g: &Graph) -> Result<SolveResult> {
    if g.is_empty() {
        return Ok(SolveResult {
            gamma: 0,
            labeling: Labeling::default(),
            method: Method::TreeDp,
            nodes: 0,
        });
    }
    solve_tree_dp_rooted(g, 0)
}

pub fn solve_tree_dp_rooted(g: &Graph, root: usize) -> Result<SolveResult> {
    let table = DpStateTable::build(g, root)?;
    Ok(SolveResult {
        gamma: table.gamma(),
        labeling: table.labeling(g),
        method: Method::TreeDp,
        nodes: 0,
    })
}
