use serde::{Deserialize, Serialize};

use super::{bits, connected_components, Graph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    /// The part containing the smallest vertex.
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
}

impl Bipartition {
    pub fn sizes(&self) -> (usize, usize) {
        (self.part_a.len(), self.part_b.len())
    }

    /// Checks, pair by pair, that `g` restricted to the two parts is the
    /// complete bipartite graph between them.
    pub fn verify_complete(&self, g: &Graph) -> bool {
        let cross = self
            .part_a
            .iter()
            .all(|&a| self.part_b.iter().all(|&b| g.has_edge(a, b)));
        let inside = |part: &[usize]| {
            part.iter()
                .enumerate()
                .all(|(i, &x)| part[i + 1..].iter().all(|&y| !g.has_edge(x, y)))
        };
        cross && inside(&self.part_a) && inside(&self.part_b)
    }
}

/// Proper 2-colouring (colour 0 on the smallest vertex of each component),
/// or `None` if some component has an odd cycle.
pub fn is_bipartite(g: &Graph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// The unique bipartition if the connected graph `g` is `K_{a,b}` with
/// `a, b >= 1`.
pub fn is_complete_bipartite(g: &Graph) -> Result<Option<Bipartition>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(None);
    }
    if connected_components(g).len() != 1 {
        return Err(Error::DisconnectedGraph);
    }
    let Some(color) = is_bipartite(g) else {
        return Ok(None);
    };
    let (part_a, part_b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| color[v] == 0);
    if part_b.is_empty() {
        return Ok(None);
    }
    let mut mask_a = vec![0u64; g.words()];
    let mut mask_b = vec![0u64; g.words()];
    part_a.iter().for_each(|&v| bits::set(&mut mask_a, v));
    part_b.iter().for_each(|&v| bits::set(&mut mask_b, v));
    let complete = part_a.iter().all(|&a| g.row(a) == mask_b.as_slice())
        && part_b.iter().all(|&b| g.row(b) == mask_a.as_slice());
    Ok(complete.then_some(Bipartition { part_a, part_b }))
}
