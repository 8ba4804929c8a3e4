//! Permissive local search for Vertex Cover on β-separable graphs.
//!
//! A cover `S` admits a strictly smaller cover within distance `k` iff some
//! independent `S* ⊆ S` has `|N(S*) \ S| < |S*|` and
//! `|N(S*) \ S| + |S*| <= k`. The search never enumerates such sets
//! directly. Instead every coloring of a family over `S` (parameter
//! `q = k + βk`) is pruned to an independent candidate `Q ⊆ S`, and Hall's
//! condition is checked for `Q` against `I = V \ S` with a maximum matching.
//! A deficient `W ⊆ Q` gives the smaller cover `(S \ W) ∪ N_I(W)`, which
//! need not lie within distance `k`.
//!
//! With a universal family some candidate contains `S*` whenever one
//! exists, so a negative answer is exact. With random colorings a negative
//! answer holds up to the reported failure bound.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{
    default_repetitions, miss_probability, random_family, universal_family_cached, Coloring, FamilyError, FamilyMode,
};
use crate::graph::{certify_separability, CertificateError, Graph, NotSeparable, SeparabilityCertificate, VertexSet};
use crate::matching::LocalBipartite;
use crate::strict::CoverInstance;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error(transparent)]
    NotSeparable(#[from] NotSeparable),
    #[error("certificate does not fit the graph: {0}")]
    Certificate(#[from] CertificateError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("coloring has {got} labels but the cover has {expected} vertices")]
    ColoringLength { got: usize, expected: usize },
}

/// How the coloring family over the cover is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Deterministic universal family; negatives are exact.
    Universal,
    /// Independent uniform colorings. `repetitions = None` uses `2^t`.
    Randomized { seed: u64, repetitions: Option<usize> },
}

/// An independent subset of the cover produced by pruning one coloring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CandidateSet(VertexSet);

impl CandidateSet {
    pub fn as_set(&self) -> &VertexSet {
        &self.0
    }

    pub fn into_set(self) -> VertexSet {
        self.0
    }
}

/// `q = k + βk`.
pub fn structural_q(k: usize, beta: usize) -> usize {
    k + beta * k
}

/// Prunes the 0-labeled part of the cover to an independent set.
///
/// With `C0` the cover vertices labeled 0: drop low-side (`V2`) vertices
/// that have a neighbor in `C0`, then drop every vertex still incident to
/// an edge inside what remains. Labels are indexed by position in `s`.
pub fn prune_coloring(
    g: &Graph,
    cert: &SeparabilityCertificate,
    s: &VertexSet,
    f: &Coloring,
) -> Result<CandidateSet, SearchError> {
    if f.len() != s.len() {
        return Err(SearchError::ColoringLength {
            got: f.len(),
            expected: s.len(),
        });
    }
    let in_v2 = cert.v2().to_mask(g.n());
    Ok(prune_with_mask(g, &in_v2, s, f))
}

fn prune_with_mask(g: &Graph, in_v2: &[bool], s: &VertexSet, f: &Coloring) -> CandidateSet {
    let n = g.n();
    let mut in_c0 = vec![false; n];
    for (i, v) in s.iter().enumerate() {
        in_c0[v] = !f.is_one(i);
    }
    let has_neighbor_in = |mask: &[bool], v: usize| g.neighbors(v).iter().any(|&w| mask[w]);

    let mut in_c0p = in_c0.clone();
    for v in s.iter() {
        if in_c0[v] && in_v2[v] && has_neighbor_in(&in_c0, v) {
            in_c0p[v] = false;
        }
    }
    let q: Vec<usize> = s
        .iter()
        .filter(|&v| in_c0p[v] && !has_neighbor_in(&in_c0p, v))
        .collect();
    CandidateSet(VertexSet::from_sorted_unchecked(q))
}

/// Parameters under which a family of candidates was produced.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyParams {
    pub k: usize,
    pub beta: usize,
    pub q: usize,
    /// Family parameter actually used: `min(q, |S|)`.
    pub t: usize,
    pub mode: FamilyMode,
    /// Number of colorings in the family.
    pub family_size: usize,
    /// Distinct non-empty candidates after pruning.
    pub candidates: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CandidateFamily {
    pub params: FamilyParams,
    pub candidates: Vec<CandidateSet>,
}

/// Builds the coloring family over `s` and maps it through
/// [`prune_coloring`], keeping the first occurrence of each distinct
/// non-empty candidate in family order.
pub fn candidate_family(
    g: &Graph,
    cert: &SeparabilityCertificate,
    s: &VertexSet,
    k: usize,
    mode: SearchMode,
) -> Result<CandidateFamily, SearchError> {
    let beta = cert.beta();
    let q = structural_q(k, beta);
    let t = q.min(s.len());
    let family = match mode {
        SearchMode::Universal => universal_family_cached(s.len(), t)?,
        SearchMode::Randomized { seed, repetitions } => {
            let reps = repetitions.unwrap_or_else(|| default_repetitions(t));
            random_family(s.len(), t, reps, seed)?.into()
        }
    };
    let in_v2 = cert.v2().to_mask(g.n());
    let pruned: Vec<CandidateSet> = family
        .colorings()
        .par_iter()
        .map(|f| prune_with_mask(g, &in_v2, s, f))
        .collect();
    let mut seen = HashSet::new();
    let candidates: Vec<CandidateSet> = pruned
        .into_iter()
        .filter(|c| !c.0.is_empty() && seen.insert(c.clone()))
        .collect();
    Ok(CandidateFamily {
        params: FamilyParams {
            k,
            beta,
            q,
            t,
            mode: family.mode(),
            family_size: family.len(),
            candidates: candidates.len(),
        },
        candidates,
    })
}

/// Where an improved cover came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// Position of the successful candidate in the deduplicated family.
    pub candidate_index: usize,
    pub q_set: VertexSet,
    /// Deficient subset of `q_set`: `|N_I(W)| < |W|`.
    pub w: VertexSet,
    pub params: FamilyParams,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Confidence {
    /// Universal family: no smaller cover exists within distance `k`.
    Deterministic,
    /// Random family: a smaller cover within distance `k` is missed with
    /// probability at most `failure_bound`.
    Probabilistic { failure_bound: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum PermissiveOutcome {
    ImprovedCover {
        cover: VertexSet,
        witness: Witness,
    },
    NoImprovementWithinK {
        confidence: Confidence,
        params: FamilyParams,
    },
}

impl PermissiveOutcome {
    pub fn is_improved(&self) -> bool {
        matches!(self, PermissiveOutcome::ImprovedCover { .. })
    }

    pub fn params(&self) -> &FamilyParams {
        match self {
            PermissiveOutcome::ImprovedCover { witness, .. } => &witness.params,
            PermissiveOutcome::NoImprovementWithinK { params, .. } => params,
        }
    }
}

/// Runs the permissive search with the canonical β certificate.
pub fn permissive_search(
    inst: &CoverInstance,
    beta: usize,
    mode: SearchMode,
) -> Result<PermissiveOutcome, SearchError> {
    let cert = certify_separability(inst.graph(), beta)?;
    permissive_search_with_certificate(inst, &cert, mode)
}

/// Runs the permissive search with a caller-supplied certificate.
///
/// Candidates are checked in parallel; the reported result is always the
/// one from the lowest-index successful candidate.
pub fn permissive_search_with_certificate(
    inst: &CoverInstance,
    cert: &SeparabilityCertificate,
    mode: SearchMode,
) -> Result<PermissiveOutcome, SearchError> {
    let g = inst.graph();
    let s = inst.cover();
    cert.verify(g)?;
    let family = candidate_family(g, cert, s, inst.k(), mode)?;

    // local ids of the independent side I = V \ S
    let mut i_index = vec![usize::MAX; g.n()];
    let mut i_len = 0;
    for v in (0..g.n()).filter(|&v| !s.contains(v)) {
        i_index[v] = i_len;
        i_len += 1;
    }

    let hit = family
        .candidates
        .par_iter()
        .enumerate()
        .find_map_first(|(idx, cand)| hall_violator(g, &i_index, i_len, cand.as_set()).map(|w| (idx, w)));

    let params = family.params;
    Ok(match hit {
        Some((idx, w)) => {
            let n_w: VertexSet = w
                .iter()
                .flat_map(|v| g.neighbors(v).iter().copied())
                .filter(|&x| i_index[x] != usize::MAX)
                .collect();
            let cover = s.difference(&w).union(&n_w);
            PermissiveOutcome::ImprovedCover {
                cover,
                witness: Witness {
                    candidate_index: idx,
                    q_set: family.candidates[idx].as_set().clone(),
                    w,
                    params,
                },
            }
        }
        None => {
            let confidence = match params.mode {
                FamilyMode::Universal => Confidence::Deterministic,
                FamilyMode::Randomized { repetitions, .. } => Confidence::Probabilistic {
                    failure_bound: miss_probability(params.t, repetitions),
                },
            };
            PermissiveOutcome::NoImprovementWithinK { confidence, params }
        }
    })
}

/// Deficient subset of `q` in the bipartite graph `G[Q ∪ I]`, if any.
fn hall_violator(g: &Graph, i_index: &[usize], i_len: usize, q: &VertexSet) -> Option<VertexSet> {
    let local = LocalBipartite {
        left: q
            .iter()
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .filter_map(|&w| (i_index[w] != usize::MAX).then_some(i_index[w]))
                    .collect()
            })
            .collect(),
        right_len: i_len,
    };
    // cheap exit: a left vertex without I-neighbors is a violator by itself
    if let Some(u) = local.left.iter().position(Vec::is_empty) {
        return Some(VertexSet::from_sorted_unchecked(vec![q.as_slice()[u]]));
    }
    let mates = local.hopcroft_karp();
    if mates.size() == q.len() {
        return None;
    }
    let w = local.deficiency_set(&mates);
    Some(VertexSet::from_sorted_unchecked(
        w.into_iter().map(|u| q.as_slice()[u]).collect(),
    ))
}

/// Checks the three conditions on `s_star ⊆ s`: independent,
/// `|N(S*) \ S| < |S*|`, and `|N(S*) \ S| + |S*| <= k`.
pub fn check_structural_witness(g: &Graph, s: &VertexSet, k: usize, s_star: &VertexSet) -> bool {
    if !s_star.is_subset(s) || !g.is_independent(s_star) {
        return false;
    }
    let outside = g.open_neighborhood(s_star).difference(s).len();
    outside < s_star.len() && outside + s_star.len() <= k
}
