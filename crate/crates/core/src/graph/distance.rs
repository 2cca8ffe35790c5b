use std::sync::atomic::{AtomicU32, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{bits, Graph};
use crate::error::{Error, Result};

/// Hop distances between all vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u16>,
}

const UNREACHABLE: u16 = u16::MAX;

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `None` when `u` and `v` lie in different components.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d as u32),
        }
    }

    #[inline]
    fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v] as u32
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }

    /// Largest finite distance; defined for any graph.
    pub fn max_finite(&self) -> u32 {
        self.dist
            .iter()
            .filter(|&&d| d != UNREACHABLE)
            .max()
            .copied()
            .unwrap_or(0) as u32
    }

    pub fn diameter(&self) -> Result<u32> {
        if !self.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        Ok(self.max_finite())
    }

    /// `d(u,v) + d(u,w) + d(v,w)`, `None` if any pair is disconnected.
    pub fn triple_sum(&self, u: usize, v: usize, w: usize) -> Option<u32> {
        Some(self.get(u, v)? + self.get(u, w)? + self.get(v, w)?)
    }

    fn eccentricity(&self, u: usize) -> u32 {
        (0..self.n).map(|v| self.raw(u, v)).max().unwrap_or(0)
    }
}

fn bfs_row(g: &Graph, source: usize, out: &mut [u16]) {
    let n = g.vertex_count();
    out.fill(UNREACHABLE);
    out[source] = 0;
    let mut visited = vec![0u64; g.words()];
    bits::set(&mut visited, source);
    let mut unvisited = n - 1;
    let mut frontier = vec![source];
    let mut frontier_bits = vec![0u64; g.words()];
    let mut next = vec![0u64; g.words()];
    let mut level = 0u16;
    while !frontier.is_empty() && unvisited > 0 {
        level += 1;
        next.fill(0);
        if frontier.len() > unvisited {
            // bottom-up: each unvisited vertex looks for a frontier neighbour
            frontier_bits.fill(0);
            for &u in &frontier {
                bits::set(&mut frontier_bits, u);
            }
            for (w, vis) in visited.iter().enumerate() {
                let mut free = !vis;
                while free != 0 {
                    let v = w * 64 + free.trailing_zeros() as usize;
                    free &= free - 1;
                    if v >= n {
                        break;
                    }
                    if g.row(v).iter().zip(&frontier_bits).any(|(a, b)| a & b != 0) {
                        bits::set(&mut next, v);
                    }
                }
            }
        } else {
            for &u in &frontier {
                for (x, r) in next.iter_mut().zip(g.row(u)) {
                    *x |= r;
                }
            }
            for (x, v) in next.iter_mut().zip(&visited) {
                *x &= !v;
            }
        }
        frontier.clear();
        frontier.extend(bits::ones(&next));
        unvisited -= frontier.len();
        for &v in &frontier {
            out[v] = level;
        }
        for (v, x) in visited.iter_mut().zip(&next) {
            *v |= x;
        }
    }
}

/// BFS from every vertex, sources in parallel.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut dist = vec![UNREACHABLE; n * n];
    if n > 0 {
        dist.par_chunks_mut(n)
            .enumerate()
            .for_each(|(s, row)| bfs_row(g, s, row));
    }
    DistanceMatrix { n, dist }
}

/// Vertex sets of the components, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![0u64; g.words()];
    let mut comps = vec![];
    for s in 0..n {
        if bits::test(&seen, s) {
            continue;
        }
        let mut comp = vec![0u64; g.words()];
        bits::set(&mut comp, s);
        let mut frontier = vec![s];
        while !frontier.is_empty() {
            let mut next = vec![0u64; g.words()];
            for &u in &frontier {
                for (x, r) in next.iter_mut().zip(g.row(u)) {
                    *x |= r;
                }
            }
            for (x, c) in next.iter_mut().zip(&comp) {
                *x &= !c;
            }
            for (c, x) in comp.iter_mut().zip(&next) {
                *c |= x;
            }
            frontier = bits::ones(&next).collect();
        }
        for (a, c) in seen.iter_mut().zip(&comp) {
            *a |= c;
        }
        comps.push(bits::ones(&comp).collect());
    }
    comps
}

pub fn diameter(g: &Graph) -> Result<u32> {
    all_pairs_distances(g).diameter()
}

/// Triameter together with the lexicographically first triple attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triameter {
    pub value: u32,
    pub triple: (usize, usize, usize),
}

pub fn triameter(g: &Graph) -> Result<u32> {
    Ok(triameter_with_witness(&all_pairs_distances(g))?.value)
}

/// Exact maximum of `d(u,v) + d(u,w) + d(v,w)` over vertex triples.
///
/// Triples with repeated vertices never beat distinct ones once `n >= 3`,
/// so only `u < v < w` is scanned. A pair `(u, v)` is skipped when
/// `d(u,v) + ecc(u) + ecc(v)` cannot reach the best value seen so far, and
/// the scan for `u` stops once `3 * diam` is attained.
pub fn triameter_with_witness(dm: &DistanceMatrix) -> Result<Triameter> {
    let diam = dm.diameter()?;
    let n = dm.n;
    match n {
        0 => return Err(Error::InvalidParameter("triameter of the empty graph".into())),
        1 => return Ok(Triameter { value: 0, triple: (0, 0, 0) }),
        2 => {
            return Ok(Triameter {
                value: 2 * dm.raw(0, 1),
                triple: (0, 0, 1),
            })
        }
        _ => {}
    }
    let bound = 3 * diam;
    let ecc: Vec<u32> = (0..n).map(|u| dm.eccentricity(u)).collect();
    let global_best = AtomicU32::new(0);
    // smallest u whose scan attained the bound; larger u cannot win ties
    let first_at_bound = AtomicUsize::new(usize::MAX);

    let per_u: Vec<Option<Triameter>> = (0..n - 2)
        .into_par_iter()
        .map(|u| {
            if u > first_at_bound.load(Ordering::Relaxed) {
                return None;
            }
            let mut best: Option<Triameter> = None;
            for v in u + 1..n - 1 {
                let duv = dm.raw(u, v);
                let upper = duv + ecc[u] + ecc[v];
                let local = best.map_or(0, |b| b.value);
                if upper < global_best.load(Ordering::Relaxed) || (best.is_some() && upper <= local) {
                    continue;
                }
                for w in v + 1..n {
                    let s = duv + dm.raw(u, w) + dm.raw(v, w);
                    if best.is_none_or(|b| s > b.value) {
                        best = Some(Triameter { value: s, triple: (u, v, w) });
                        global_best.fetch_max(s, Ordering::Relaxed);
                        if s == bound {
                            first_at_bound.fetch_min(u, Ordering::Relaxed);
                            return best;
                        }
                    }
                }
            }
            best
        })
        .collect();

    let best = per_u
        .into_iter()
        .flatten()
        .fold(None::<Triameter>, |acc, t| match acc {
            Some(a) if a.value >= t.value => Some(a),
            _ => Some(t),
        })
        .expect("n >= 3 gives at least one triple");
    Ok(best)
}

/// Same vertex set; `uv` is an edge iff `d(u,v) = diam(g)`.
pub fn antipodal(g: &Graph) -> Result<Graph> {
    let dm = all_pairs_distances(g);
    let diam = dm.diameter()?;
    Ok(Graph::from_rule(g.vertex_count(), |u, v| {
        dm.raw(u, v) == diam
    }))
}
