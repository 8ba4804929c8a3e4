//! Random instance generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{subdivide_twice, BipartiteGraph, Graph, VertexSet};

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("pairs u < v are valid edges")
}

/// Random graph with exactly `min(m, C(n,2))` distinct edges.
pub fn gnm<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::from_edges(n, pairs).expect("pairs u < v are valid edges")
}

/// Random bipartite graph with each of the `na * nb` edges present with
/// probability `p`.
pub fn random_bipartite<R: Rng + ?Sized>(na: usize, nb: usize, p: f64, rng: &mut R) -> BipartiteGraph {
    let edges: Vec<(usize, usize)> = (0..na)
        .flat_map(|i| (0..nb).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    BipartiteGraph::from_parts(na, nb, edges).expect("indices are in range")
}

/// Double subdivision of a random `G(base_n, base_m)` graph; it has
/// `base_n + 2 base_m` vertices.
pub fn random_two_subdivided<R: Rng + ?Sized>(base_n: usize, base_m: usize, rng: &mut R) -> Graph {
    subdivide_twice(&gnm(base_n, base_m, rng))
}

/// Both endpoints of a maximal matching built greedily over the edges in
/// random order. The result is a vertex cover at most twice the minimum.
pub fn matching_cover<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> VertexSet {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.shuffle(rng);
    let mut used = vec![false; g.n()];
    for (u, v) in edges {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
        }
    }
    VertexSet::from_mask(&used)
}
