//! Builders for the graphs under study: unitary Cayley graphs, Hamming
//! graphs and their antipodal graphs, complete (bipartite) graphs, the
//! semistrong product, and the diagonal quotient of `C_{T_n(F)}`.
//!
//! Vertex order is always the canonical encoding order of the underlying
//! objects (ring elements, base-`q` tuples, product pairs `u * |V(h)| + v`),
//! so results can be compared as labeled graphs.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::ring::{decode_digits, encode_digits, Ring, RingSpec, TriMatrix, TriRing};

/// Bijection between vertex indices and canonical codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    codes: Vec<u64>,
    index: HashMap<u64, usize>,
}

impl VertexLabeling {
    /// Fails if two vertices share a code.
    pub fn new(codes: Vec<u64>) -> Result<Self> {
        let mut index = HashMap::with_capacity(codes.len());
        for (v, &c) in codes.iter().enumerate() {
            if index.insert(c, v).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "code {c} assigned to two vertices"
                )));
            }
        }
        Ok(VertexLabeling { codes, index })
    }

    pub fn identity(n: usize) -> Self {
        VertexLabeling::new((0..n as u64).collect()).expect("distinct codes")
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn code(&self, vertex: usize) -> u64 {
        self.codes[vertex]
    }

    pub fn vertex(&self, code: u64) -> Option<usize> {
        self.index.get(&code).copied()
    }

    /// True iff `vertex(code(v)) == v` for every vertex.
    pub fn is_consistent(&self) -> bool {
        self.index.len() == self.codes.len()
            && self.codes.iter().enumerate().all(|(v, c)| self.index.get(c) == Some(&v))
    }

    /// The codes as a permutation of `0..n`, if they are one.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let n = self.codes.len() as u64;
        self.codes
            .iter()
            .all(|&c| c < n)
            .then(|| self.codes.iter().map(|&c| c as usize).collect())
    }
}

#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labeling: VertexLabeling,
}

/// `C_R` for the ring described by `spec`.
pub fn unitary_cayley(spec: &RingSpec, limits: &Limits) -> Result<LabeledGraph> {
    let ring = Ring::build(spec, limits)?;
    let graph = unitary_cayley_of(&ring);
    Ok(LabeledGraph {
        labeling: VertexLabeling::identity(graph.vertex_count()),
        graph,
    })
}

/// `x ~ y` iff `x - y` is a unit. Triangular units are detected by a
/// nonzero determinant of the full difference matrix.
pub fn unitary_cayley_of(ring: &Ring) -> Graph {
    let n = ring.order() as usize;
    let graph = match ring {
        Ring::Tri(r) => {
            let elems: Vec<TriMatrix<'_>> = r.enumerate().collect();
            Graph::from_rule(n, |x, y| {
                elems[x]
                    .sub(&elems[y])
                    .expect("elements of one ring")
                    .det()
                    != 0
            })
        }
        Ring::Zn(z) => Graph::from_rule(n, |x, y| z.is_unit(z.sub(x as u64, y as u64))),
    };
    let labels = (0..n as u64).map(|c| ring.label(c)).collect();
    graph.with_labels(labels).expect("one label per vertex")
}

/// `C_{T_n(F)}` from the shortcut rule: adjacent iff the diagonals differ in
/// every position.
pub fn unitary_cayley_by_diagonals(ring: &TriRing) -> Graph {
    let diags: Vec<Vec<Elem>> = ring.enumerate().map(|m| m.diagonal_of()).collect();
    Graph::from_rule(diags.len(), |x, y| {
        diags[x].iter().zip(&diags[y]).all(|(a, b)| a != b)
    })
}

fn tuples(len: usize, q: u32, limits: &Limits) -> Result<Vec<Vec<Elem>>> {
    let count = u32::try_from(len)
        .ok()
        .and_then(|l| (q as u64).checked_pow(l));
    let count = limits.check_vertices(count)?;
    Ok((0..count as u64).map(|c| decode_digits(c, q, len)).collect())
}

fn tuple_labels(ts: &[Vec<Elem>]) -> Vec<String> {
    ts.iter()
        .map(|t| {
            let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        })
        .collect()
}

fn check_alphabet(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "alphabet size must be at least 2, got {q}"
        )));
    }
    Ok(())
}

/// `H(l, q)`: `l`-tuples over `0..q`, adjacent iff they differ in exactly
/// one coordinate.
pub fn hamming_graph(l: usize, q: u32, limits: &Limits) -> Result<Graph> {
    check_alphabet(q)?;
    let ts = tuples(l, q, limits)?;
    Graph::from_rule(ts.len(), |x, y| {
        ts[x].iter().zip(&ts[y]).filter(|(a, b)| a != b).count() == 1
    })
    .with_labels(tuple_labels(&ts))
}

/// `A(H(n, q))` built directly: adjacent iff the tuples differ in every
/// coordinate.
pub fn antipodal_hamming_direct(n: usize, q: u32, limits: &Limits) -> Result<Graph> {
    check_alphabet(q)?;
    let ts = tuples(n, q, limits)?;
    Graph::from_rule(ts.len(), |x, y| ts[x].iter().zip(&ts[y]).all(|(a, b)| a != b))
        .with_labels(tuple_labels(&ts))
}

/// `G • H`: `(u1,v1) ~ (u2,v2)` iff `v1 v2 ∈ E(H)` and either `u1 = u2` or
/// `u1 u2 ∈ E(G)`. Vertex `(u, v)` has index `u * |V(H)| + v`.
pub fn semistrong_product(g: &Graph, h: &Graph, limits: &Limits) -> Result<Graph> {
    let gn = g.vertex_count();
    let hn = h.vertex_count();
    let n = limits.check_vertices((gn as u64).checked_mul(hn as u64))?;
    let product = Graph::from_rule(n, |a, b| {
        let (u1, v1) = (a / hn, a % hn);
        let (u2, v2) = (b / hn, b % hn);
        h.has_edge(v1, v2) && (u1 == u2 || g.has_edge(u1, u2))
    });
    match (g.labels(), h.labels()) {
        (Some(gl), Some(hl)) => {
            let labels = (0..n).map(|a| format!("({},{})", gl[a / hn], hl[a % hn])).collect();
            product.with_labels(labels)
        }
        _ => Ok(product),
    }
}

pub fn complete_graph(m: usize, limits: &Limits) -> Result<Graph> {
    let m = limits.check_vertices(Some(m as u64))?;
    Ok(Graph::from_rule(m, |_, _| true))
}

/// `K_{a,b}` with parts `[0, a)` and `[a, a + b)`.
pub fn complete_bipartite(a: usize, b: usize, limits: &Limits) -> Result<Graph> {
    let n = limits.check_vertices((a as u64).checked_add(b as u64))?;
    Ok(Graph::from_rule(n, |x, y| (x < a) != (y < a)))
}

/// Quotient of `C_{T_n(F)}` by diagonal classes. Classes are numbered by the
/// base-`q` code of their diagonal; two classes are adjacent iff some pair
/// of representatives is adjacent in the Cayley graph.
pub fn diagonal_quotient(spec: &RingSpec, limits: &Limits) -> Result<Graph> {
    let ring = tri_ring(spec, limits)?;
    let cayley = unitary_cayley_of(&Ring::Tri(ring.clone()));
    Ok(QuotientCounts::new(&ring, &cayley, limits)?.some_pair())
}

fn tri_ring(spec: &RingSpec, limits: &Limits) -> Result<TriRing> {
    match *spec {
        RingSpec::TriangularMatrix { n, p, k } => {
            let classes = spec.field_order().and_then(|q| q.checked_pow(n as u32));
            limits.check_vertices(classes)?;
            TriRing::new(n, p, k, limits)
        }
        RingSpec::IntegersMod { .. } => Err(Error::InvalidParameter(format!(
            "diagonal quotient needs a triangular ring, got {spec}"
        ))),
    }
}

/// Edge counts between diagonal classes of a triangular Cayley graph.
pub struct QuotientCounts {
    classes: usize,
    class_size: u64,
    counts: Vec<u64>,
}

impl QuotientCounts {
    pub fn new(ring: &TriRing, cayley: &Graph, limits: &Limits) -> Result<Self> {
        let q = ring.q();
        let classes = limits.check_vertices((q as u64).checked_pow(ring.n() as u32))?;
        let class_of: Vec<usize> = ring
            .enumerate()
            .map(|m| encode_digits(&m.diagonal_of(), q) as usize)
            .collect();
        let mut counts = vec![0u64; classes * classes];
        for (x, y) in cayley.edges() {
            let (a, b) = (class_of[x], class_of[y]);
            counts[a * classes + b] += 1;
            if a != b {
                counts[b * classes + a] += 1;
            }
        }
        Ok(QuotientCounts {
            classes,
            class_size: ring.order() / classes as u64,
            counts,
        })
    }

    /// Classes adjacent iff at least one representative pair is adjacent.
    pub fn some_pair(&self) -> Graph {
        let c = self.classes;
        Graph::from_rule(c, |a, b| self.counts[a * c + b] > 0)
    }

    /// Classes adjacent iff every representative pair is adjacent.
    pub fn every_pair(&self) -> Graph {
        let c = self.classes;
        let full = self.class_size * self.class_size;
        Graph::from_rule(c, |a, b| self.counts[a * c + b] == full)
    }

    /// Edges with both ends in one class; zero for triangular rings.
    pub fn internal_edges(&self) -> u64 {
        (0..self.classes).map(|a| self.counts[a * self.classes + a]).sum()
    }
}
