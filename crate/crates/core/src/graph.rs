use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Undirected simple graph on the dense vertex ids `0..n`.
///
/// Adjacency is stored in compressed sparse row form with every neighbor
/// list sorted and free of duplicates. Display names are optional metadata.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    names: Option<Vec<String>>,
}

impl Default for Graph {
    fn default() -> Self {
        Self::empty(0)
    }
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
            names: None,
        }
    }

    /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
    /// collapse to one; self-loops and ids `>= n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut pairs = Vec::new();
        let mut degree = vec![0usize; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            degree[u] += 1;
            degree[v] += 1;
            pairs.push((u, v));
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0usize; offsets[n]];
        for (u, v) in pairs {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }

        // sort each row, drop duplicates, then compact
        let mut write = 0;
        let mut compact_offsets = Vec::with_capacity(n + 1);
        compact_offsets.push(0);
        for v in 0..n {
            let row = &mut targets[offsets[v]..offsets[v + 1]];
            row.sort_unstable();
            let mut last = None;
            for i in offsets[v]..offsets[v + 1] {
                let w = targets[i];
                if last != Some(w) {
                    targets[write] = w;
                    write += 1;
                    last = Some(w);
                }
            }
            compact_offsets.push(write);
        }
        targets.truncate(write);

        Ok(Self {
            offsets: compact_offsets,
            targets,
            names: None,
        })
    }

    /// Attaches one display name per vertex.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.n() == 0
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Sorted neighbor ids of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn name(&self, v: usize) -> Option<&str> {
        self.names.as_ref().map(|names| names[v].as_str())
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Vertices of degree one.
    pub fn pendants(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| self.degree(v) == 1)
    }

    /// Connected with exactly `n - 1` edges. The empty graph is not a tree.
    pub fn is_tree(&self) -> bool {
        let n = self.n();
        if n == 0 || self.edge_count() != n - 1 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    /// Vertices labeled 0 by `f` that have no neighbor labeled 2.
    pub fn undefended(&self, f: &Labeling) -> Result<Vec<usize>> {
        self.check_len(f)?;
        Ok((0..self.n())
            .filter(|&v| f.get(v) == 0 && !self.neighbors(v).iter().any(|&w| f.get(w) == 2))
            .collect())
    }

    /// Whether `f` is a Roman dominating function of this graph.
    pub fn is_valid_rdf(&self, f: &Labeling) -> Result<bool> {
        self.check_len(f)?;
        Ok(
            (0..self.n())
                .all(|v| f.get(v) != 0 || self.neighbors(v).iter().any(|&w| f.get(w) == 2)),
        )
    }

    fn check_len(&self, f: &Labeling) -> Result<()> {
        if f.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: f.len(),
            });
        }
        Ok(())
    }
}

/// Total assignment of labels from {0, 1, 2} to vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling(Vec<u8>);

/// Vertex ids grouped by label, each group ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Partition {
    pub v0: Vec<usize>,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
}

impl Labeling {
    pub fn new(labels: Vec<u8>) -> Result<Self> {
        if let Some((vertex, &label)) = labels.iter().enumerate().find(|(_, &l)| l > 2) {
            return Err(Error::InvalidLabel { vertex, label });
        }
        Ok(Self(labels))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn constant(n: usize, label: u8) -> Result<Self> {
        Self::new(vec![label; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, label: u8) -> Result<()> {
        if v >= self.len() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.len(),
            });
        }
        if label > 2 {
            return Err(Error::InvalidLabel { vertex: v, label });
        }
        self.0[v] = label;
        Ok(())
    }

    pub(crate) fn put(&mut self, v: usize, label: u8) {
        debug_assert!(label <= 2);
        self.0[v] = label;
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// Sum of labels, i.e. `|V1| + 2|V2|`.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&l| u64::from(l)).sum()
    }

    pub fn partition(&self) -> Partition {
        let mut p = Partition::default();
        for (v, &l) in self.0.iter().enumerate() {
            match l {
                0 => p.v0.push(v),
                1 => p.v1.push(v),
                _ => p.v2.push(v),
            }
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn labels(l: &[u8]) -> Labeling {
        Labeling::new(l.to_vec()).unwrap()
    }

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(1, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn rdf_on_p3() {
        let g = path(3);
        assert!(g.is_valid_rdf(&labels(&[0, 2, 0])).unwrap());
        assert!(!g.is_valid_rdf(&labels(&[0, 1, 0])).unwrap());
        assert!(g.is_valid_rdf(&Labeling::constant(3, 2).unwrap()).unwrap());
        assert_eq!(g.undefended(&labels(&[0, 1, 0])).unwrap(), vec![0, 2]);
        assert_eq!(
            g.is_valid_rdf(&labels(&[2, 2])),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn isolated_vertex_cannot_be_zero() {
        let g = Graph::empty(1);
        assert!(!g.is_valid_rdf(&labels(&[0])).unwrap());
        assert!(g.is_valid_rdf(&labels(&[1])).unwrap());
        assert!(Graph::empty(0).is_valid_rdf(&Labeling::zeros(0)).unwrap());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(labels(&[0, 2, 0]).weight(), 2);
        assert_eq!(labels(&[1, 1, 1]).weight(), 3);
        assert_eq!(labels(&[2, 1, 0, 2]).weight(), 5);
        assert_eq!(Labeling::default().weight(), 0);
    }

    #[test]
    fn partition_examples() {
        let p = labels(&[0, 2, 1]).partition();
        assert_eq!((p.v0, p.v1, p.v2), (vec![0], vec![2], vec![1]));
        let p = Labeling::zeros(3).partition();
        assert_eq!((p.v0, p.v1, p.v2), (vec![0, 1, 2], vec![], vec![]));
        assert_eq!(Labeling::default().partition(), Partition::default());
    }

    #[test]
    fn invalid_labels_rejected() {
        assert_eq!(
            Labeling::new(vec![0, 3]),
            Err(Error::InvalidLabel {
                vertex: 1,
                label: 3
            })
        );
        let mut f = Labeling::zeros(2);
        assert!(f.set(1, 7).is_err());
        assert!(f.set(2, 1).is_err());
        f.set(1, 2).unwrap();
        assert_eq!(f.as_slice(), &[0, 2]);
    }

    #[test]
    fn tree_detection() {
        assert!(path(4).is_tree());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(0).is_tree());
        let cycle = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!cycle.is_tree());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_tree());
        // right edge count, but a triangle plus an isolated vertex
        let tri = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!tri.is_tree());
    }

    #[test]
    fn names_must_match_vertex_count() {
        let g = path(2);
        assert!(g.clone().with_names(vec!["a".into()]).is_err());
        let g = g.with_names(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(g.name(1), Some("b"));
    }
}
