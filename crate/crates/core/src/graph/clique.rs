//! Exact maximum clique by branch and bound over bitsets. Candidate sets are
//! greedily coloured; a branch is cut when the current clique plus the
//! number of colours left cannot beat the incumbent.

use super::{bits, Graph};

struct Search<'g> {
    g: &'g Graph,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    /// Greedy sequential colouring of `p`; vertices come out grouped by
    /// colour, colours non-decreasing.
    fn colour_sort(&self, p: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut uncoloured = p.to_vec();
        let mut colour = 0;
        while !bits::is_empty(&uncoloured) {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = bits::first(&q) {
                bits::clear(&mut q, v);
                bits::clear(&mut uncoloured, v);
                for (x, r) in q.iter_mut().zip(self.g.row(v)) {
                    *x &= !r;
                }
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, mut p: Vec<u64>) {
        let (order, colours) = self.colour_sort(&p);
        for i in (0..order.len()).rev() {
            if self.current.len() + colours[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next: Vec<u64> = p.iter().zip(self.g.row(v)).map(|(a, b)| a & b).collect();
            if bits::is_empty(&next) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            bits::clear(&mut p, v);
        }
    }
}

/// A maximum clique, vertices sorted.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let mut s = Search {
        g,
        current: Vec::new(),
        best: Vec::new(),
    };
    s.expand(bits::full(g.vertex_count()));
    let mut best = s.best;
    best.sort_unstable();
    best
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_clique(g: &Graph, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }

    #[test]
    fn complete_graphs() {
        for m in 1..=12 {
            assert_eq!(clique_number(&Graph::from_rule(m, |_, _| true)), m);
        }
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        assert_eq!(clique_number(&Graph::empty(4)), 1);
    }

    #[test]
    fn complete_bipartite() {
        let k44 = Graph::from_rule(8, |u, v| (u < 4) != (v < 4));
        assert_eq!(clique_number(&k44), 2);
    }

    #[test]
    fn planted_clique() {
        // sparse ring plus a 6-clique on {3, 17, 40, 41, 77, 99}
        let planted = [3, 17, 40, 41, 77, 99];
        let g = Graph::from_rule(120, |u, v| {
            v == u + 1 || (planted.contains(&u) && planted.contains(&v))
        });
        let c = maximum_clique(&g);
        assert_eq!(c, planted.to_vec());
        assert!(is_clique(&g, &c));
    }
}
