//! Hopcroft–Karp maximum matching and Hall-condition violators.

use std::collections::VecDeque;

use crate::graph::{BipartiteGraph, Side, VertexSet};

const NONE: usize = usize::MAX;

/// Bipartite graph in local indices: left vertices `0..left.len()`, right
/// vertices `0..right_len`.
#[derive(Clone, Debug, Default)]
pub(crate) struct LocalBipartite {
    pub left: Vec<Vec<usize>>,
    pub right_len: usize,
}

/// Maximum matching as mate arrays (`NONE` for unmatched).
pub(crate) struct Mates {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Mates {
    pub fn size(&self) -> usize {
        self.left.iter().filter(|&&m| m != NONE).count()
    }
}

impl LocalBipartite {
    pub fn hopcroft_karp(&self) -> Mates {
        let nl = self.left.len();
        let mut mate_l = vec![NONE; nl];
        let mut mate_r = vec![NONE; self.right_len];
        let mut dist = vec![0usize; nl];

        // greedy warm start
        for (u, adj) in self.left.iter().enumerate() {
            if let Some(&w) = adj.iter().find(|&&w| mate_r[w] == NONE) {
                mate_l[u] = w;
                mate_r[w] = u;
            }
        }

        loop {
            // BFS layering from free left vertices
            let mut queue = VecDeque::new();
            for u in 0..nl {
                if mate_l[u] == NONE {
                    dist[u] = 0;
                    queue.push_back(u);
                } else {
                    dist[u] = NONE;
                }
            }
            let mut found = false;
            while let Some(u) = queue.pop_front() {
                for &w in &self.left[u] {
                    let next = mate_r[w];
                    if next == NONE {
                        found = true;
                    } else if dist[next] == NONE {
                        dist[next] = dist[u] + 1;
                        queue.push_back(next);
                    }
                }
            }
            if !found {
                break;
            }
            let mut cursor = vec![0usize; nl];
            for u in 0..nl {
                if mate_l[u] == NONE {
                    self.augment(u, &mut mate_l, &mut mate_r, &mut dist, &mut cursor);
                }
            }
        }
        Mates {
            left: mate_l,
            right: mate_r,
        }
    }

    /// Iterative layered DFS for one augmenting path starting at `root`.
    fn augment(
        &self,
        root: usize,
        mate_l: &mut [usize],
        mate_r: &mut [usize],
        dist: &mut [usize],
        cursor: &mut [usize],
    ) -> bool {
        let mut stack = vec![root];
        while let Some(&u) = stack.last() {
            if cursor[u] == self.left[u].len() {
                dist[u] = NONE;
                stack.pop();
                continue;
            }
            let w = self.left[u][cursor[u]];
            cursor[u] += 1;
            let next = mate_r[w];
            if next == NONE {
                // flip the path recorded on the stack
                let mut w = w;
                while let Some(u) = stack.pop() {
                    let prev = mate_l[u];
                    mate_l[u] = w;
                    mate_r[w] = u;
                    w = prev;
                }
                return true;
            }
            if dist[next] != NONE && dist[next] == dist[u] + 1 {
                stack.push(next);
            }
        }
        false
    }

    /// Left vertices reachable by alternating paths from unmatched left
    /// vertices. Empty iff the matching saturates the left side.
    pub fn deficiency_set(&self, mates: &Mates) -> Vec<usize> {
        let mut seen_l = vec![false; self.left.len()];
        let mut seen_r = vec![false; self.right_len];
        let mut queue: VecDeque<usize> = (0..self.left.len()).filter(|&u| mates.left[u] == NONE).collect();
        for &u in &queue {
            seen_l[u] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.left[u] {
                if std::mem::replace(&mut seen_r[w], true) {
                    continue;
                }
                let next = mates.right[w];
                debug_assert_ne!(next, NONE, "augmenting path left in a maximum matching");
                if !seen_l[next] {
                    seen_l[next] = true;
                    queue.push_back(next);
                }
            }
        }
        (0..self.left.len()).filter(|&u| seen_l[u]).collect()
    }
}

/// Set of `(a, b)` pairs of a bipartite graph, each vertex used at most once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Outcome of checking Hall's condition for one side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HallCheck {
    /// Some matching covers every vertex of the side.
    Saturated,
    /// A subset `W` of the side with `|N(W)| < |W|`.
    Violator(VertexSet),
}

struct Localized {
    local: LocalBipartite,
    left_ids: Vec<usize>,
    right_ids: Vec<usize>,
}

fn localize(bg: &BipartiteGraph, side: Side) -> Localized {
    let g = bg.graph();
    let (left_set, right_set) = match side {
        Side::A => (bg.a(), bg.b()),
        Side::B => (bg.b(), bg.a()),
    };
    let mut index = vec![NONE; g.n()];
    let right_ids: Vec<usize> = right_set.iter().collect();
    for (i, &v) in right_ids.iter().enumerate() {
        index[v] = i;
    }
    let left_ids: Vec<usize> = left_set.iter().collect();
    let left = left_ids
        .iter()
        .map(|&u| g.neighbors(u).iter().map(|&w| index[w]).collect())
        .collect();
    Localized {
        local: LocalBipartite {
            left,
            right_len: right_ids.len(),
        },
        left_ids,
        right_ids,
    }
}

/// Maximum-cardinality matching; pairs are reported as `(a, b)`.
pub fn maximum_matching(bg: &BipartiteGraph) -> Matching {
    let loc = localize(bg, Side::A);
    let mates = loc.local.hopcroft_karp();
    let pairs = mates
        .left
        .iter()
        .enumerate()
        .filter(|&(_, &w)| w != NONE)
        .map(|(u, &w)| (loc.left_ids[u], loc.right_ids[w]))
        .collect();
    Matching { pairs }
}

/// Checks Hall's condition for `side`; on failure returns the maximal
/// deficient set reachable from the unmatched vertices of that side.
pub fn find_hall_violator(bg: &BipartiteGraph, side: Side) -> HallCheck {
    let loc = localize(bg, side);
    let mates = loc.local.hopcroft_karp();
    let w = loc.local.deficiency_set(&mates);
    if w.is_empty() {
        HallCheck::Saturated
    } else {
        HallCheck::Violator(w.into_iter().map(|u| loc.left_ids[u]).collect())
    }
}
