//! Brute-force reference implementations shared by the integration tests.
//! None of these call into the algorithms they are used to check.
#![allow(dead_code)]

use kexchange_core::coloring::ColoringFamily;
use kexchange_core::generate::{gnp, matching_cover};
use kexchange_core::graph::{BipartiteGraph, Graph, Side, VertexSet};
use kexchange_core::strict::CoverInstance;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect()
}

/// Minimum vertex cover size by enumerating all subsets (n <= 24).
pub fn brute_min_cover(g: &Graph) -> usize {
    brute_min_cover_set(g).len()
}

pub fn brute_min_cover_set(g: &Graph) -> VertexSet {
    let n = g.n();
    assert!(n <= 24);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mask = (0u64..1 << n)
        .filter(|&mask| edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
        .min_by_key(|mask| mask.count_ones())
        .unwrap();
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Minimum vertex cover size by branch and bound (n <= 64).
///
/// Degree-0 vertices are dropped, a degree-1 vertex forces its neighbor,
/// otherwise branch on a maximum-degree vertex: take it, or take all its
/// neighbors.
pub fn exact_min_cover(g: &Graph) -> usize {
    let adj = adjacency_masks(g);
    let alive = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = g.n();
    mvc(&adj, alive, 0, &mut best);
    best
}

fn mvc(adj: &[u64], mut alive: u64, mut taken: usize, best: &mut usize) {
    loop {
        if taken >= *best {
            return;
        }
        let mut changed = false;
        let mut v_iter = alive;
        while v_iter != 0 {
            let v = v_iter.trailing_zeros() as usize;
            v_iter &= v_iter - 1;
            if alive >> v & 1 == 0 {
                continue;
            }
            let nb = adj[v] & alive;
            match nb.count_ones() {
                0 => {
                    alive &= !(1 << v);
                    changed = true;
                }
                1 => {
                    alive &= !(1 << v) & !nb;
                    taken += 1;
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    if taken >= *best {
        return;
    }
    if alive == 0 {
        *best = taken;
        return;
    }
    let mut pick = 0;
    let mut deg = 0;
    let mut it = alive;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        let d = (adj[v] & alive).count_ones();
        if d > deg {
            deg = d;
            pick = v;
        }
    }
    // a lower bound: every remaining edge needs a vertex of degree <= deg
    let edges: u32 = {
        let mut total = 0;
        let mut it = alive;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            total += (adj[v] & alive).count_ones();
        }
        total / 2
    };
    if taken + (edges as usize).div_ceil(deg as usize) >= *best {
        return;
    }
    mvc(adj, alive & !(1 << pick), taken + 1, best);
    let nb = adj[pick] & alive;
    mvc(adj, alive & !nb & !(1 << pick), taken + nb.count_ones() as usize, best);
}

/// Whether `g` has a clique on `k` vertices, by subset enumeration.
pub fn has_clique(g: &Graph, k: usize) -> bool {
    let adj = adjacency_masks(g);
    (0u64..1 << g.n()).filter(|m| m.count_ones() as usize == k).any(|m| {
        (0..g.n())
            .filter(|&v| m >> v & 1 == 1)
            .all(|v| (m & !(1 << v)) & !adj[v] == 0)
    })
}

/// Degeneracy as the maximum over all vertex subsets of the minimum degree.
pub fn brute_degeneracy(g: &Graph) -> usize {
    let adj = adjacency_masks(g);
    (1u64..1 << g.n())
        .map(|m| {
            (0..g.n())
                .filter(|&v| m >> v & 1 == 1)
                .map(|v| (adj[v] & m).count_ones() as usize)
                .min()
                .unwrap()
        })
        .max()
        .unwrap_or(0)
}

/// Whether some bipartition of the vertices certifies β-separability.
pub fn brute_separable(g: &Graph, beta: usize) -> bool {
    let adj = adjacency_masks(g);
    (0u64..1 << g.n()).any(|v1| {
        (0..g.n()).all(|v| {
            if v1 >> v & 1 == 1 {
                (adj[v] & v1).count_ones() as usize <= beta
            } else {
                g.degree(v) <= beta
            }
        })
    })
}

/// `max_{W ⊆ side} (|W| - |N(W)|)` over all subsets, and one maximizer.
pub fn brute_max_deficiency(bg: &BipartiteGraph, side: Side) -> (usize, Vec<usize>) {
    let q: Vec<usize> = bg.side(side).iter().collect();
    assert!(q.len() <= 16);
    let g = bg.graph();
    let mut best = (0, Vec::new());
    for mask in 0u32..1 << q.len() {
        let w: Vec<usize> = (0..q.len()).filter(|&i| mask >> i & 1 == 1).map(|i| q[i]).collect();
        let nb: VertexSet = w.iter().flat_map(|&v| g.neighbors(v).iter().copied()).collect();
        let def = w.len().saturating_sub(nb.len());
        if def > best.0 {
            best = (def, w);
        }
    }
    best
}

/// Maximum matching size by Kuhn's simple augmenting paths from A.
pub fn kuhn_matching_size(bg: &BipartiteGraph) -> usize {
    let g = bg.graph();
    let mut mate = vec![usize::MAX; g.n()];
    fn try_kuhn(g: &Graph, u: usize, seen: &mut [bool], mate: &mut [usize]) -> bool {
        for &w in g.neighbors(u) {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if mate[w] == usize::MAX || try_kuhn(g, mate[w], seen, mate) {
                mate[w] = u;
                return true;
            }
        }
        false
    }
    bg.a()
        .iter()
        .filter(|&u| try_kuhn(g, u, &mut vec![false; g.n()], &mut mate))
        .count()
}

/// Every `t`-subset of the ground set sees all `2^t` patterns.
pub fn is_universal(f: &ColoringFamily, t: usize) -> bool {
    let n = f.ground_size();
    if t > n {
        return false;
    }
    if t == 0 {
        return !f.is_empty();
    }
    let mut ok = true;
    for_each_subset(n, t, &mut |subset| {
        let mut seen = vec![false; 1 << t];
        for c in f.colorings() {
            let p = subset
                .iter()
                .enumerate()
                .fold(0, |acc, (j, &i)| acc | ((c.label(i) as usize) << j));
            seen[p] = true;
        }
        if !seen.iter().all(|&s| s) {
            ok = false;
        }
    });
    ok
}

pub fn for_each_subset(n: usize, t: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == t {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, t, cur, f);
            cur.pop();
        }
    }
    rec(0, n, t, &mut Vec::new(), f);
}

/// Every `S* ⊆ S` passing the three structural conditions, by enumeration
/// of all subsets of the cover (|S| <= 16).
pub fn structural_witnesses(g: &Graph, s: &VertexSet, k: usize) -> Vec<VertexSet> {
    let cover: Vec<usize> = s.iter().collect();
    assert!(cover.len() <= 16);
    let mut out = Vec::new();
    for mask in 1u32..1 << cover.len() {
        let star: VertexSet = (0..cover.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| cover[i])
            .collect();
        if star.len() > k {
            continue;
        }
        let independent = star.iter().all(|u| g.neighbors(u).iter().all(|&w| !star.contains(w)));
        if !independent {
            continue;
        }
        let outside: VertexSet = star
            .iter()
            .flat_map(|u| g.neighbors(u).iter().copied())
            .filter(|&w| !s.contains(w))
            .collect();
        if outside.len() < star.len() && outside.len() + star.len() <= k {
            out.push(star);
        }
    }
    out
}

/// Random cover instance: `G(n, p)` with a maximal-matching cover.
pub fn random_cover_instance<R: Rng>(rng: &mut R, max_n: usize, k: usize) -> CoverInstance {
    let n = rng.gen_range(3..=max_n);
    let p = rng.gen_range(0.2..=0.5);
    let g = gnp(n, p, rng);
    let cover = matching_cover(&g, rng);
    CoverInstance::new(g, cover, k).unwrap()
}
