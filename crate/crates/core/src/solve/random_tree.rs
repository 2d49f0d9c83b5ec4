use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Decodes a Prüfer sequence of length `n - 2` into the labeled tree on `n`
/// vertices. Returns `None` if an entry is out of range.
pub fn tree_from_pruefer(seq: &[usize]) -> Option<Graph> {
    let n = seq.len() + 2;
    if seq.iter().any(|&x| x >= n) {
        return None;
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop()?;
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(u) = leaves.pop()?;
    let Reverse(v) = leaves.pop()?;
    edges.push((u, v));
    Graph::from_edges(n, edges).ok()
}

/// Uniformly random labeled tree on `n` vertices. The same `(n, seed)` always
/// gives the same tree.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    match n {
        0 => Err(Error::Domain("random tree needs n >= 1")),
        1 => Ok(Graph::empty(1)),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            Ok(tree_from_pruefer(&seq).expect("sequence entries are in range"))
        }
    }
}
