//! Instance generators from the hardness reductions: Clique to Hall Set,
//! Clique to Hall Set on 2-subdivided graphs, Hall Set to strict local
//! search for Vertex Cover, and the +m shift of minimum covers under
//! double subdivision.
//!
//! Vertex ids are laid out deterministically. For a Clique instance on
//! `n` vertices and `m` edges the Hall Set graph keeps the original
//! vertices as `0..n`, puts the edge vertex `v_e` of the `i`-th edge (in
//! lexicographic edge order) at `n + i`, and the `t` universal vertices at
//! `n + m..n + m + t`. The 2-subdivided variant appends subdivision
//! vertices as [`subdivide_twice`] does.

use thiserror::Error;

use crate::graph::{neighborhood, subdivide_twice, BipartiteGraph, Graph, GraphError, VertexSet};
use crate::strict::{CoverInstance, HallInstance, HallSetOutcome, InstanceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("clique size k = {0} is too small: the reduction needs k >= 4 so that t = C(k,2) - k - 1 is positive")]
    KTooSmall(usize),
    #[error("clique size k = {k} exceeds the number of vertices {n}")]
    KExceedsN { k: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueInstance {
    graph: Graph,
    k: usize,
}

impl CliqueInstance {
    pub fn new(graph: Graph, k: usize) -> Result<Self, ReductionError> {
        if k > graph.n() {
            return Err(ReductionError::KExceedsN { k, n: graph.n() });
        }
        Ok(CliqueInstance { graph, k })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Output of [`clique_to_hallset`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallReduction {
    pub instance: HallInstance,
    /// Number of universal vertices, `C(k,2) - k - 1`.
    pub t: usize,
    /// Size bound `C(k,2)`.
    pub k_prime: usize,
    /// `v_e` for each edge of the clique graph, in edge order.
    pub edge_vertices: Vec<(usize, (usize, usize))>,
}

impl HallReduction {
    /// `{v_e : e ⊆ clique}`.
    pub fn witness_for_clique(&self, clique: &VertexSet) -> VertexSet {
        self.edge_vertices
            .iter()
            .filter(|(_, (x, y))| clique.contains(*x) && clique.contains(*y))
            .map(|&(v, _)| v)
            .collect()
    }
}

struct BaseLayout {
    graph: Graph,
    a: VertexSet,
    b: VertexSet,
    t: usize,
    edge_vertices: Vec<(usize, (usize, usize))>,
}

fn base_layout(ci: &CliqueInstance) -> Result<BaseLayout, ReductionError> {
    let k = ci.k();
    if k < 4 {
        return Err(ReductionError::KTooSmall(k));
    }
    let g = ci.graph();
    let (n, m) = (g.n(), g.m());
    let t = choose2(k) - k - 1;
    let mut edges = Vec::with_capacity(m * (2 + t));
    let mut edge_vertices = Vec::with_capacity(m);
    for (i, (x, y)) in g.edges().enumerate() {
        let ve = n + i;
        edge_vertices.push((ve, (x, y)));
        edges.push((x, ve));
        edges.push((y, ve));
        for u in 0..t {
            edges.push((ve, n + m + u));
        }
    }
    let total = n + m + t;
    let graph = Graph::from_edges(total, edges)?;
    let a: VertexSet = (n..n + m).collect();
    let b: VertexSet = (0..n).chain(n + m..total).collect();
    Ok(BaseLayout {
        graph,
        a,
        b,
        t,
        edge_vertices,
    })
}

/// Subdivides every edge by `v_e`, adds `t = C(k,2) - k - 1` vertices
/// adjacent to every `v_e`, and asks for a Hall set of size at most
/// `C(k,2)` among the `v_e`.
pub fn clique_to_hallset(ci: &CliqueInstance) -> Result<HallReduction, ReductionError> {
    let base = base_layout(ci)?;
    let bg = BipartiteGraph::new(base.a, base.b, base.graph)?;
    let k_prime = choose2(ci.k());
    Ok(HallReduction {
        instance: HallInstance::new(bg, k_prime)?,
        t: base.t,
        k_prime,
        edge_vertices: base.edge_vertices,
    })
}

/// Output of [`clique_to_hallset_2subdivided`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdividedHallReduction {
    pub instance: HallInstance,
    pub t: usize,
    /// Size bound `(3 + t) C(k,2)`.
    pub k_prime: usize,
    /// The `v_e` vertices, i.e. the A-side before subdivision.
    pub core_a: VertexSet,
    pub edge_vertices: Vec<(usize, (usize, usize))>,
}

impl SubdividedHallReduction {
    /// `S ∪ N²(S)` for `S = {v_e : e ⊆ clique}`.
    pub fn witness_for_clique(&self, clique: &VertexSet) -> VertexSet {
        let s: VertexSet = self
            .edge_vertices
            .iter()
            .filter(|(_, (x, y))| clique.contains(*x) && clique.contains(*y))
            .map(|&(v, _)| v)
            .collect();
        s.union(&neighborhood(self.instance.bipartite().graph(), &s, 2, false))
    }
}

/// As [`clique_to_hallset`], followed by a double subdivision of every
/// edge. The new bipartition extends `(A, B)` by path parity.
pub fn clique_to_hallset_2subdivided(ci: &CliqueInstance) -> Result<SubdividedHallReduction, ReductionError> {
    let base = base_layout(ci)?;
    let sub = subdivide_twice(&base.graph);
    let n1 = base.graph.n();
    let mut on_a = base.a.to_mask(n1);
    on_a.resize(sub.n(), false);
    for (i, (x, _)) in base.graph.edges().enumerate() {
        // x - z - z' - y: z sits opposite x, z' on x's side
        let z = n1 + 2 * i;
        on_a[z] = !on_a[x];
        on_a[z + 1] = on_a[x];
    }
    let a = VertexSet::from_mask(&on_a);
    let b: VertexSet = (0..sub.n()).filter(|&v| !on_a[v]).collect();
    let bg = BipartiteGraph::new(a, b, sub)?;
    let k_prime = (3 + base.t) * choose2(ci.k());
    Ok(SubdividedHallReduction {
        instance: HallInstance::new(bg, k_prime)?,
        t: base.t,
        k_prime,
        core_a: base.a,
        edge_vertices: base.edge_vertices,
    })
}

/// Exhaustively removes `{v} ∪ N²(v)` from `s` whenever it meets `s` only
/// partially, for `v` in `core_a`. Scans `core_a` in ascending order and
/// restarts after each removal.
pub fn minimize_rule(g: &Graph, core_a: &VertexSet, s: &VertexSet) -> VertexSet {
    let blocks: Vec<VertexSet> = core_a
        .iter()
        .map(|v| {
            let single: VertexSet = [v].into();
            single.union(&neighborhood(g, &single, 2, false))
        })
        .collect();
    let mut current = s.clone();
    'restart: loop {
        for block in &blocks {
            let hit = block.iter().filter(|&v| current.contains(v)).count();
            if hit != 0 && hit != block.len() {
                current = current.difference(block);
                continue 'restart;
            }
        }
        return current;
    }
}

/// Hall set search restricted to unions of whole blocks `{v} ∪ N²(v)`,
/// `v ∈ core_a`, of total size at most `k'`. By [`minimize_rule`] a Hall
/// set of size at most `k'` exists iff one of this form does.
pub fn closed_hall_search(red: &SubdividedHallReduction) -> HallSetOutcome {
    let g = red.instance.bipartite().graph();
    let blocks: Vec<Vec<usize>> = red
        .core_a
        .iter()
        .map(|v| {
            let single: VertexSet = [v].into();
            single.union(&neighborhood(g, &single, 2, false)).as_slice().to_vec()
        })
        .collect();
    let mut search = ClosedSearch {
        g,
        blocks: &blocks,
        limit: red.k_prime,
        in_set: vec![false; g.n()],
        nb_count: vec![0; g.n()],
        size: 0,
        nb_size: 0,
        chosen: Vec::new(),
    };
    if search.run(0) {
        let set = search.chosen.iter().flat_map(|&i| blocks[i].iter().copied()).collect();
        HallSetOutcome::HallSet(set)
    } else {
        HallSetOutcome::NoHallSet
    }
}

struct ClosedSearch<'a> {
    g: &'a Graph,
    blocks: &'a [Vec<usize>],
    limit: usize,
    in_set: Vec<bool>,
    /// members of the set adjacent to each vertex
    nb_count: Vec<usize>,
    size: usize,
    /// vertices outside the set with a neighbor inside
    nb_size: usize,
    chosen: Vec<usize>,
}

impl ClosedSearch<'_> {
    fn run(&mut self, start: usize) -> bool {
        for i in start..self.blocks.len() {
            if self.size + self.blocks[i].len() > self.limit {
                continue;
            }
            self.toggle(i, true);
            if self.nb_size < self.size || self.run(i + 1) {
                return true;
            }
            self.toggle(i, false);
        }
        false
    }

    fn toggle(&mut self, i: usize, add: bool) {
        let block = &self.blocks[i];
        if add {
            self.chosen.push(i);
            for &v in block {
                if self.nb_count[v] > 0 {
                    self.nb_size -= 1;
                }
                self.in_set[v] = true;
            }
            self.size += block.len();
        } else {
            self.chosen.pop();
            for &v in block {
                self.in_set[v] = false;
                if self.nb_count[v] > 0 {
                    self.nb_size += 1;
                }
            }
            self.size -= block.len();
        }
        for &v in block {
            for &w in self.g.neighbors(v) {
                if add {
                    self.nb_count[w] += 1;
                    if self.nb_count[w] == 1 && !self.in_set[w] {
                        self.nb_size += 1;
                    }
                } else {
                    self.nb_count[w] -= 1;
                    if self.nb_count[w] == 0 && !self.in_set[w] {
                        self.nb_size -= 1;
                    }
                }
            }
        }
    }
}

/// `(G, A, 2k - 1)`: the A-side of a bipartite graph is a vertex cover, and
/// it improves within distance `2k - 1` iff a Hall set of size at most `k`
/// exists.
pub fn hallset_to_lsvc(hi: &HallInstance) -> CoverInstance {
    let bg = hi.bipartite();
    CoverInstance::new(bg.graph().clone(), bg.a().clone(), 2 * hi.k() - 1)
        .expect("one side of a bipartite graph covers every edge")
}

/// The double subdivision of `g` together with its edge count `m`: `g` has
/// a vertex cover of size `s` iff the subdivision has one of size `s + m`.
pub fn vc_subdivision_shift(g: &Graph) -> (Graph, usize) {
    (subdivide_twice(g), g.m())
}
