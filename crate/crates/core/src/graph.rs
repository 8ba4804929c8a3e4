//! Simple undirected graphs over dense vertex ids, vertex sets, and the
//! structural queries the local-search engines are built on.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("sides do not partition the vertex set (vertex {0})")]
    NotAPartition(usize),
    #[error("edge {0}-{1} does not cross the bipartition")]
    NotBipartite(usize, usize),
}

/// A sorted set of vertex ids without duplicates.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Wraps a vector that is already strictly increasing.
    pub(crate) fn from_sorted_unchecked(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            if a < b {
                out.push(a);
                i += 1;
            } else if b < a {
                out.push(b);
                j += 1;
            } else {
                out.push(a);
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Membership bitmap over `0..n`. Ids `>= n` are ignored.
    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter().filter(|&v| v < n) {
            mask[v] = true;
        }
        mask
    }

    pub fn from_mask(mask: &[bool]) -> VertexSet {
        VertexSet(mask.iter().enumerate().filter_map(|(v, &m)| m.then_some(v)).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// Symmetric-difference cardinality `|s1 ∪ s2| - |s1 ∩ s2|`.
pub fn set_distance(s1: &VertexSet, s2: &VertexSet) -> usize {
    let common = s1.iter().filter(|&v| s2.contains(v)).count();
    s1.len() + s2.len() - 2 * common
}

/// Finite simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) are merged; self-loops and out-of-range ids are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m2 = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m2 += list.len();
        }
        Ok(Graph { adj, m: m2 / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n()).collect())
    }

    /// Errors if `s` mentions an id outside `0..n`.
    pub fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.max() {
            Some(v) if v >= self.n() => Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() }),
            _ => Ok(()),
        }
    }

    /// `N(S)`: union of neighborhoods minus `S` itself.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        neighborhood(self, s, 1, false)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| self.adj[u].iter().all(|&v| !s.contains(v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Vertices at distance exactly `d` from `s` (`closed = false`), or at
/// distance at most `d`, `s` included (`closed = true`).
pub fn neighborhood(g: &Graph, s: &VertexSet, d: usize, closed: bool) -> VertexSet {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for v in s.iter().filter(|&v| v < g.n()) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        if dist[u] == d {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    VertexSet(
        (0..g.n())
            .filter(|&v| if closed { dist[v] <= d } else { dist[v] == d })
            .collect(),
    )
}

/// Degeneracy by minimum-degree peeling with a bucket queue.
pub fn degeneracy(g: &Graph) -> usize {
    degeneracy_ordering(g).1
}

/// Peeling order together with the degeneracy it witnesses.
pub fn degeneracy_ordering(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let max_deg = g.max_degree();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in 0..n {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut result = 0;
    let mut low = 0;
    while order.len() < n {
        // lazy deletion: stale entries are skipped
        let v = loop {
            while buckets[low].is_empty() {
                low += 1;
            }
            let v = buckets[low].pop().unwrap();
            if !removed[v] && deg[v] == low {
                break v;
            }
        };
        result = result.max(low);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(w);
                low = low.min(deg[w]);
            }
        }
    }
    (order, result)
}

/// A partition `(v1, v2)` of the vertices witnessing β-separability:
/// every `v1` vertex has at most β neighbors in `v1`, every `v2` vertex has
/// degree at most β.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityCertificate {
    beta: usize,
    v1: VertexSet,
    v2: VertexSet,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graph is not {beta}-separable (vertex {vertex} has {inside} neighbors among high-degree vertices)")]
pub struct NotSeparable {
    pub beta: usize,
    pub vertex: usize,
    pub inside: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {vertex} in V1 has {count} neighbors in V1, more than beta = {beta}")]
    V1Degree { vertex: usize, count: usize, beta: usize },
    #[error("vertex {vertex} in V2 has degree {degree}, more than beta = {beta}")]
    V2Degree { vertex: usize, degree: usize, beta: usize },
}

impl SeparabilityCertificate {
    /// Validates an arbitrary partition against `g`.
    pub fn new(g: &Graph, beta: usize, v1: VertexSet, v2: VertexSet) -> Result<Self, CertificateError> {
        check_partition(g, &v1, &v2)?;
        let cert = SeparabilityCertificate { beta, v1, v2 };
        cert.verify(g)?;
        Ok(cert)
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn v1(&self) -> &VertexSet {
        &self.v1
    }

    pub fn v2(&self) -> &VertexSet {
        &self.v2
    }

    /// Re-checks both degree conditions directly.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        for v in self.v1.iter() {
            let count = g.neighbors(v).iter().filter(|&&w| self.v1.contains(w)).count();
            if count > self.beta {
                return Err(CertificateError::V1Degree {
                    vertex: v,
                    count,
                    beta: self.beta,
                });
            }
        }
        for w in self.v2.iter() {
            if g.degree(w) > self.beta {
                return Err(CertificateError::V2Degree {
                    vertex: w,
                    degree: g.degree(w),
                    beta: self.beta,
                });
            }
        }
        Ok(())
    }
}

fn check_partition(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<(), GraphError> {
    g.check_set(a)?;
    g.check_set(b)?;
    let mut seen = vec![false; g.n()];
    for v in a.iter().chain(b.iter()) {
        if std::mem::replace(&mut seen[v], true) {
            return Err(GraphError::NotAPartition(v));
        }
    }
    match seen.iter().position(|&s| !s) {
        Some(v) => Err(GraphError::NotAPartition(v)),
        None => Ok(()),
    }
}

/// Canonical certificate: `v2` holds every vertex of degree at most β.
///
/// Any certifying partition has its low side inside the canonical `v2`, so
/// the canonical high side is a subset of any certifying high side and its
/// internal degrees can only be smaller. Hence this succeeds whenever some
/// certificate exists.
pub fn certify_separability(g: &Graph, beta: usize) -> Result<SeparabilityCertificate, NotSeparable> {
    let high: Vec<bool> = (0..g.n()).map(|v| g.degree(v) > beta).collect();
    for v in (0..g.n()).filter(|&v| high[v]) {
        let inside = g.neighbors(v).iter().filter(|&&w| high[w]).count();
        if inside > beta {
            return Err(NotSeparable {
                beta,
                vertex: v,
                inside,
            });
        }
    }
    let v1 = VertexSet((0..g.n()).filter(|&v| high[v]).collect());
    let v2 = VertexSet((0..g.n()).filter(|&v| !high[v]).collect());
    Ok(SeparabilityCertificate { beta, v1, v2 })
}

/// Smallest β in `0..=cap` for which `g` is β-separable.
pub fn min_separability(g: &Graph, cap: usize) -> Option<SeparabilityCertificate> {
    (0..=cap).find_map(|beta| certify_separability(g, beta).ok())
}

/// Replaces every edge `xy` (x < y, lexicographic edge order, index `i`) by
/// the path `x - z - z' - y` with `z = n + 2i` and `z' = n + 2i + 1`.
pub fn subdivide_twice(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(3 * g.m());
    for (i, (x, y)) in g.edges().enumerate() {
        let z = n + 2 * i;
        edges.push((x, z));
        edges.push((z, z + 1));
        edges.push((z + 1, y));
    }
    Graph::from_edges(n + 2 * g.m(), edges).expect("subdivision of a simple graph is simple")
}

/// True iff `g` arises from some simple graph by subdividing every edge
/// twice.
///
/// Labels each vertex original or subdivision by propagation: neighbors of
/// an original are subdivision vertices, and a subdivision vertex has one
/// original and one subdivision neighbor. Components made only of
/// degree-2 vertices are cycles and get an arbitrary original seed.
pub fn is_two_subdivided(g: &Graph) -> bool {
    two_subdivision_originals(g).is_some()
}

/// Original vertices of a 2-subdivided graph, if `g` is one.
pub fn two_subdivision_originals(g: &Graph) -> Option<VertexSet> {
    #[derive(Clone, Copy, PartialEq)]
    enum Label {
        Unknown,
        Original,
        Inner,
    }
    let n = g.n();
    let mut label = vec![Label::Unknown; n];
    let mut queue = VecDeque::new();

    let assign = |label: &mut Vec<Label>, queue: &mut VecDeque<usize>, v: usize, l: Label| -> bool {
        match label[v] {
            Label::Unknown => {
                label[v] = l;
                queue.push_back(v);
                true
            }
            existing => existing == l,
        }
    };

    let seeds = (0..n).filter(|&v| g.degree(v) != 2).chain(0..n);
    for seed in seeds {
        if label[seed] != Label::Unknown {
            continue;
        }
        assign(&mut label, &mut queue, seed, Label::Original);
        while let Some(v) = queue.pop_front() {
            match label[v] {
                Label::Original => {
                    for &w in g.neighbors(v) {
                        if !assign(&mut label, &mut queue, w, Label::Inner) {
                            return None;
                        }
                    }
                }
                Label::Inner => {
                    let nb = g.neighbors(v);
                    if nb.len() != 2 {
                        return None;
                    }
                    // the neighbor this vertex was reached from is labeled;
                    // fully labeled neighborhoods are checked below
                    let (known, other) = match (label[nb[0]], label[nb[1]]) {
                        (Label::Unknown, Label::Unknown) => unreachable!(),
                        (Label::Unknown, l) => (l, nb[0]),
                        (l, Label::Unknown) => (l, nb[1]),
                        _ => continue,
                    };
                    let other_label = if known == Label::Original {
                        Label::Inner
                    } else {
                        Label::Original
                    };
                    if !assign(&mut label, &mut queue, other, other_label) {
                        return None;
                    }
                }
                Label::Unknown => unreachable!(),
            }
        }
    }

    // every inner vertex: exactly one original and one inner neighbor;
    // reconstructed edges must be simple
    let mut reconstructed = Vec::new();
    for v in 0..n {
        if label[v] != Label::Inner {
            continue;
        }
        let nb = g.neighbors(v);
        let originals = nb.iter().filter(|&&w| label[w] == Label::Original).count();
        if originals != 1 {
            return None;
        }
        let (x, partner) = if label[nb[0]] == Label::Original {
            (nb[0], nb[1])
        } else {
            (nb[1], nb[0])
        };
        if v < partner {
            let pb = g.neighbors(partner);
            let y = if pb[0] == v { pb[1] } else { pb[0] };
            if label[y] != Label::Original || x == y {
                return None;
            }
            reconstructed.push((x.min(y), x.max(y)));
        }
    }
    let before = reconstructed.len();
    reconstructed.sort_unstable();
    reconstructed.dedup();
    if reconstructed.len() != before {
        return None;
    }
    Some(VertexSet((0..n).filter(|&v| label[v] == Label::Original).collect()))
}

pub fn is_vertex_cover(g: &Graph, s: &VertexSet) -> bool {
    g.edges().all(|(u, v)| s.contains(u) || s.contains(v))
}

/// Which part of a bipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// A graph together with a bipartition `(a, b)` that every edge crosses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    a: VertexSet,
    b: VertexSet,
    graph: Graph,
}

impl BipartiteGraph {
    pub fn new(a: VertexSet, b: VertexSet, graph: Graph) -> Result<Self, GraphError> {
        check_partition(&graph, &a, &b)?;
        let in_a = a.to_mask(graph.n());
        if let Some((u, v)) = graph.edges().find(|&(u, v)| in_a[u] == in_a[v]) {
            return Err(GraphError::NotBipartite(u, v));
        }
        Ok(BipartiteGraph { a, b, graph })
    }

    /// Builds `(A, B, E)` from part sizes: A-vertices are `0..na`,
    /// B-vertices `na..na+nb`, and edges are given as (a-index, b-index).
    pub fn from_parts<I>(na: usize, nb: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (i, j) in edges {
            if i >= na {
                return Err(GraphError::VertexOutOfRange { vertex: i, n: na });
            }
            if j >= nb {
                return Err(GraphError::VertexOutOfRange { vertex: j, n: nb });
            }
            list.push((i, na + j));
        }
        let graph = Graph::from_edges(na + nb, list)?;
        Self::new(VertexSet((0..na).collect()), VertexSet((na..na + nb).collect()), graph)
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }

    pub fn side(&self, side: Side) -> &VertexSet {
        match side {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}
