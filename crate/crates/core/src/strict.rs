//! Exhaustive strict local search for Vertex Cover and a brute-force
//! size-bounded Hall set solver. Both are exponential in `k` and meant for
//! small instances and as reference answers.

use thiserror::Error;

use crate::graph::{is_vertex_cover, BipartiteGraph, Graph, GraphError, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge {0}-{1} is not covered")]
    NotACover(usize, usize),
    #[error("k must be at least 1")]
    ZeroK,
}

/// A graph, one of its vertex covers, and the exchange radius `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInstance {
    graph: Graph,
    cover: VertexSet,
    k: usize,
}

impl CoverInstance {
    pub fn new(graph: Graph, cover: VertexSet, k: usize) -> Result<Self, InstanceError> {
        graph.check_set(&cover)?;
        if let Some((u, v)) = graph.edges().find(|&(u, v)| !cover.contains(u) && !cover.contains(v)) {
            return Err(InstanceError::NotACover(u, v));
        }
        Ok(CoverInstance { graph, cover, k })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cover(&self) -> &VertexSet {
        &self.cover
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn with_cover(&self, cover: VertexSet) -> Result<Self, InstanceError> {
        CoverInstance::new(self.graph.clone(), cover, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrictOutcome {
    ImprovedCover(VertexSet),
    NoImprovementWithinK,
}

impl StrictOutcome {
    pub fn is_improved(&self) -> bool {
        matches!(self, StrictOutcome::ImprovedCover(_))
    }
}

/// Searches the k-exchange neighborhood of the cover for a strictly smaller
/// cover.
///
/// Enumerates independent `S* ⊆ S` in lexicographic order, keeping only
/// prefixes with `|S*| + |N(S*) \ S| <= k` (both terms grow with `S*`), and
/// stops at the first one with `|N(S*) \ S| < |S*|`. The answer is then
/// `(S \ S*) ∪ (N(S*) \ S)`.
pub fn strict_search(inst: &CoverInstance) -> StrictOutcome {
    let g = inst.graph();
    let s = inst.cover();
    let in_s = s.to_mask(g.n());
    let mut search = WitnessSearch {
        g,
        cover: s.as_slice(),
        in_s: &in_s,
        k: inst.k(),
        chosen: Vec::new(),
        blocked: vec![0; g.n()],
        outside: vec![0; g.n()],
        outside_count: 0,
    };
    match search.run(0) {
        true => {
            let star: VertexSet = search.chosen.iter().copied().collect();
            let added = (0..g.n()).filter(|&w| search.outside[w] > 0);
            StrictOutcome::ImprovedCover(s.difference(&star).union(&added.collect()))
        }
        false => StrictOutcome::NoImprovementWithinK,
    }
}

struct WitnessSearch<'a> {
    g: &'a Graph,
    cover: &'a [usize],
    in_s: &'a [bool],
    k: usize,
    chosen: Vec<usize>,
    /// chosen neighbors of each cover vertex
    blocked: Vec<usize>,
    /// chosen neighbors of each non-cover vertex
    outside: Vec<usize>,
    outside_count: usize,
}

impl WitnessSearch<'_> {
    fn run(&mut self, start: usize) -> bool {
        for i in start..self.cover.len() {
            let v = self.cover[i];
            if self.blocked[v] > 0 {
                continue;
            }
            self.push(v);
            let size = self.chosen.len();
            if size + self.outside_count <= self.k && (self.outside_count < size || self.run(i + 1)) {
                return true;
            }
            self.pop();
        }
        false
    }

    fn push(&mut self, v: usize) {
        self.chosen.push(v);
        for &w in self.g.neighbors(v) {
            if self.in_s[w] {
                self.blocked[w] += 1;
            } else {
                if self.outside[w] == 0 {
                    self.outside_count += 1;
                }
                self.outside[w] += 1;
            }
        }
    }

    fn pop(&mut self) {
        let v = self.chosen.pop().unwrap();
        for &w in self.g.neighbors(v) {
            if self.in_s[w] {
                self.blocked[w] -= 1;
            } else {
                self.outside[w] -= 1;
                if self.outside[w] == 0 {
                    self.outside_count -= 1;
                }
            }
        }
    }
}

/// Calls `f` on each `size`-combination of `items` in lexicographic order
/// until it returns `true`. Returns whether it stopped early.
pub(crate) fn any_combination<F>(items: &[usize], size: usize, mut f: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if size > items.len() {
        return false;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut buf: Vec<usize> = idx.iter().map(|&i| items[i]).collect();
    loop {
        if f(&buf) {
            return true;
        }
        let Some(i) = (0..size).rev().find(|&i| idx[i] < items.len() - size + i) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..size {
            buf[j] = items[idx[j]];
        }
    }
}

/// Direct enumeration of every `S'` with `dist(S, S') <= k` and `|S'| < |S|`:
/// drop `r` cover vertices and add `d < r` others with `r + d <= k`.
///
/// Independent of [`strict_search`]; the two agree exactly when the
/// structural characterization they rely on holds.
pub fn raw_neighborhood_search(inst: &CoverInstance) -> StrictOutcome {
    let g = inst.graph();
    let s = inst.cover();
    let outside: Vec<usize> = (0..g.n()).filter(|&v| !s.contains(v)).collect();
    let mut found = None;
    'outer: for r in 1..=inst.k().min(s.len()) {
        for d in 0..r.min(inst.k() - r + 1) {
            let hit = any_combination(s.as_slice(), r, |removed| {
                let kept: VertexSet = s.iter().filter(|v| !removed.contains(v)).collect();
                any_combination(&outside, d, |added| {
                    let candidate = kept.union(&added.iter().copied().collect());
                    if is_vertex_cover(g, &candidate) {
                        found = Some(candidate);
                        true
                    } else {
                        false
                    }
                })
            });
            if hit {
                break 'outer;
            }
        }
    }
    match found {
        Some(c) => StrictOutcome::ImprovedCover(c),
        None => StrictOutcome::NoImprovementWithinK,
    }
}

/// A bipartite graph `(A, B, E)` with a size bound `k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallInstance {
    bg: BipartiteGraph,
    k: usize,
}

impl HallInstance {
    pub fn new(bg: BipartiteGraph, k: usize) -> Result<Self, InstanceError> {
        if k == 0 {
            return Err(InstanceError::ZeroK);
        }
        Ok(HallInstance { bg, k })
    }

    pub fn bipartite(&self) -> &BipartiteGraph {
        &self.bg
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HallSetOutcome {
    HallSet(VertexSet),
    NoHallSet,
}

impl HallSetOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, HallSetOutcome::HallSet(_))
    }
}

/// Smallest-first search for `S ⊆ A`, `|S| <= k`, with `|N(S)| < |S|`.
pub fn hall_set_bruteforce(inst: &HallInstance) -> HallSetOutcome {
    let bg = inst.bipartite();
    let g = bg.graph();
    let a: Vec<usize> = bg.a().iter().collect();
    let mut b_index = vec![usize::MAX; g.n()];
    for (i, v) in bg.b().iter().enumerate() {
        b_index[v] = i;
    }
    let words = bg.b().len().div_ceil(64).max(1);
    let masks: Vec<Vec<u64>> = a
        .iter()
        .map(|&u| {
            let mut m = vec![0u64; words];
            for &w in g.neighbors(u) {
                m[b_index[w] / 64] |= 1 << (b_index[w] % 64);
            }
            m
        })
        .collect();

    for size in 1..=inst.k().min(a.len()) {
        let mut stack = vec![vec![0u64; words]; size + 1];
        let mut picked = Vec::with_capacity(size);
        if hall_dfs(&masks, size, 0, &mut picked, &mut stack) {
            return HallSetOutcome::HallSet(picked.iter().map(|&i| a[i]).collect());
        }
    }
    HallSetOutcome::NoHallSet
}

fn hall_dfs(masks: &[Vec<u64>], size: usize, start: usize, picked: &mut Vec<usize>, stack: &mut [Vec<u64>]) -> bool {
    let depth = picked.len();
    if depth == size {
        let nb: u32 = stack[depth].iter().map(|w| w.count_ones()).sum();
        return (nb as usize) < size;
    }
    for i in start..=masks.len() - (size - depth) {
        let (lo, hi) = stack.split_at_mut(depth + 1);
        for (dst, (src, m)) in hi[0].iter_mut().zip(lo[depth].iter().zip(&masks[i])) {
            *dst = src | m;
        }
        picked.push(i);
        if hall_dfs(masks, size, i + 1, picked, stack) {
            return true;
        }
        picked.pop();
    }
    false
}
