//! Isomorphism oracle for small graphs.
//!
//! Both graphs are coloured jointly by colour refinement (a vertex's new
//! colour is its old colour plus the multiset of its neighbours' colours).
//! The search individualises one vertex of `g` from the smallest
//! non-singleton cell against each candidate of `h` in the same cell,
//! re-refines, and backtracks when the cell sizes stop matching.

use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};

pub const ISO_ORACLE_LIMIT: usize = 512;

type Colouring = Vec<u32>;

/// Refines both colourings to a common stable partition. Returns `false` if
/// the colour class sizes diverge between the graphs.
fn refine(g: &Graph, h: &Graph, cg: &mut Colouring, ch: &mut Colouring) -> bool {
    let mut classes = count_classes(cg, ch);
    loop {
        let sig = |graph: &Graph, c: &Colouring, v: usize| {
            let mut nb: Vec<u32> = graph.neighbors(v).map(|u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sg: Vec<_> = (0..g.vertex_count()).map(|v| sig(g, cg, v)).collect();
        let sh: Vec<_> = (0..h.vertex_count()).map(|v| sig(h, ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            ids.entry(s).or_insert(0u32);
        }
        for (i, id) in ids.values_mut().enumerate() {
            *id = i as u32;
        }
        let next_g: Colouring = sg.iter().map(|s| ids[s]).collect();
        let next_h: Colouring = sh.iter().map(|s| ids[s]).collect();
        let next_classes = ids.len();
        *cg = next_g;
        *ch = next_h;
        if !same_histogram(cg, ch) {
            return false;
        }
        if next_classes == classes {
            return true;
        }
        classes = next_classes;
    }
}

fn count_classes(cg: &Colouring, ch: &Colouring) -> usize {
    let mut all: Vec<u32> = cg.iter().chain(ch).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn same_histogram(cg: &Colouring, ch: &Colouring) -> bool {
    let hist = |c: &Colouring| {
        let mut m = BTreeMap::new();
        for &x in c {
            *m.entry(x).or_insert(0usize) += 1;
        }
        m
    };
    hist(cg) == hist(ch)
}

fn search(g: &Graph, h: &Graph, mut cg: Colouring, mut ch: Colouring) -> Option<Vec<usize>> {
    if !refine(g, h, &mut cg, &mut ch) {
        return None;
    }
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &cg {
        *sizes.entry(c).or_default() += 1;
    }
    let cell = sizes
        .iter()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|(&c, &s)| (s, c))
        .map(|(&c, _)| c);
    let Some(cell) = cell else {
        // discrete: colours pair vertices one-to-one
        let mut by_colour = vec![0usize; h.vertex_count()];
        for (w, &c) in ch.iter().enumerate() {
            by_colour[c as usize] = w;
        }
        let map: Vec<usize> = cg.iter().map(|&c| by_colour[c as usize]).collect();
        return is_isomorphism(g, h, &map).then_some(map);
    };
    let fresh = sizes.len() as u32;
    let v = cg.iter().position(|&c| c == cell).unwrap();
    for w in (0..h.vertex_count()).filter(|&w| ch[w] == cell) {
        let mut cg2 = cg.clone();
        let mut ch2 = ch.clone();
        cg2[v] = fresh;
        ch2[w] = fresh;
        if let Some(map) = search(g, h, cg2, ch2) {
            return Some(map);
        }
    }
    None
}

/// Edge-by-edge check that `map` (vertex of `g` -> vertex of `h`) is an
/// isomorphism.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.vertex_count();
    if h.vertex_count() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    if map.iter().any(|&w| w >= n || std::mem::replace(&mut hit[w], true)) {
        return false;
    }
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(map[u], map[v])))
}

/// A verified isomorphism `g -> h`, or `None` if the graphs are not
/// isomorphic.
pub fn iso_check(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    for x in [g, h] {
        if x.vertex_count() > ISO_ORACLE_LIMIT {
            return Err(Error::GraphTooLargeForOracle {
                vertices: x.vertex_count(),
                limit: ISO_ORACLE_LIMIT,
            });
        }
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let n = g.vertex_count();
    Ok(search(g, h, vec![0; n], vec![0; n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn cycle(n: usize) -> Graph {
        Graph::from_rule(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    #[test]
    fn relabelled_copy_is_found() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let petersen = Graph::from_edges(
            10,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap();
        let cube = Graph::from_rule(16, |u, v| (u ^ v).count_ones() == 1);
        for g in [petersen, cube, cycle(9)] {
            let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            let map = iso_check(&g, &h).unwrap().expect("isomorphic");
            assert!(is_isomorphism(&g, &h, &map));
        }
    }

    #[test]
    fn k22_is_c4() {
        let k22 = Graph::from_rule(4, |u, v| (u < 2) != (v < 2));
        assert!(iso_check(&k22, &cycle(4)).unwrap().is_some());
    }

    #[test]
    fn triangle_vs_path() {
        let k3 = Graph::from_rule(3, |_, _| true);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(iso_check(&k3, &p3), Ok(None));
    }

    #[test]
    fn same_degree_sequence_but_different() {
        // C6 vs two triangles: both 2-regular on 6 vertices
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(iso_check(&cycle(6), &two_triangles), Ok(None));
    }

    #[test]
    fn oracle_limit() {
        let big = Graph::empty(513);
        assert!(matches!(
            iso_check(&big, &big),
            Err(Error::GraphTooLargeForOracle { .. })
        ));
    }
}
