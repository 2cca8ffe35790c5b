//! Simple undirected graphs on a dense bit-matrix, and exact invariants.

pub(crate) mod bits;
mod bipartite;
mod clique;
mod distance;
pub mod io;
mod iso;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use bipartite::{is_bipartite, is_complete_bipartite, Bipartition};
pub use clique::clique_number;
pub use clique::maximum_clique;
pub use distance::{
    all_pairs_distances, antipodal, connected_components, diameter, triameter,
    triameter_with_witness, DistanceMatrix, Triameter,
};
pub use iso::{iso_check, ISO_ORACLE_LIMIT};

/// Immutable simple graph. Row `u` of the adjacency matrix is a bitset of
/// the neighbours of `u`; the matrix is symmetric with a zero diagonal.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    /// Labeled equality of edge sets; display labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            labels: None,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Evaluates `adjacent(u, v)` for every pair `u < v`, rows in parallel.
    pub fn from_rule<F>(n: usize, adjacent: F) -> Self
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let words = bits::words_for(n);
        let mut adj = vec![0u64; n * words];
        if words > 0 {
            adj.par_chunks_mut(words).enumerate().for_each(|(u, row)| {
                for v in u + 1..n {
                    if adjacent(u, v) {
                        bits::set(row, v);
                    }
                }
            });
        }
        let mut g = Graph {
            n,
            words,
            adj,
            labels: None,
        };
        g.mirror_upper();
        g
    }

    fn mirror_upper(&mut self) {
        for u in 0..self.n {
            let upper: Vec<usize> = bits::ones(self.row(u)).filter(|&v| v > u).collect();
            for v in upper {
                bits::set(&mut self.adj[v * self.words..(v + 1) * self.words], u);
            }
        }
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::set(&mut self.adj[u * w..(u + 1) * w], v);
        bits::set(&mut self.adj[v * w..(v + 1) * w], u);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    pub fn degree(&self, u: usize) -> usize {
        bits::count(self.row(u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut it = (0..self.n).map(|u| self.degree(u));
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(u))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        Graph::from_rule(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// First pair `u < v` on which the two graphs disagree.
    pub fn first_difference(&self, other: &Graph) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((self.n.min(other.n), self.n.max(other.n)));
        }
        (0..self.n).find_map(|u| {
            let diff = self
                .row(u)
                .iter()
                .zip(other.row(u))
                .map(|(a, b)| a ^ b)
                .collect::<Vec<_>>();
            let first = bits::ones(&diff).find(|&v| v > u);
            first.map(|v| (u, v))
        })
    }

    /// Structural sanity: zero diagonal and symmetric adjacency.
    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|u| {
            !self.has_edge(u, u) && self.neighbors(u).all(|v| self.has_edge(v, u))
        })
    }
}
