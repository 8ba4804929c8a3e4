//! k-exchange local search for Vertex Cover.
//!
//! Given a graph, a vertex cover `S` and a radius `k`, strict local search
//! asks for a smaller cover within symmetric-difference distance `k` of `S`.
//! Permissive local search may instead return any smaller cover, but must
//! only give up when none exists within distance `k`.
//!
//! - [`strict`]: exhaustive strict search (exponential in `k`) and a
//!   brute-force Hall set solver.
//! - [`permissive`]: the fixed-parameter permissive search for β-separable
//!   graphs, driven by [`coloring`] families and [`matching`].
//! - [`reductions`]: hard-instance generators for the strict problem.
//! - [`graph`], [`io`], [`generate`]: substrate, file formats, random
//!   instances.

pub mod coloring;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;
pub mod permissive;
pub mod reductions;
pub mod strict;

pub use coloring::{random_family, universal_family, Coloring, ColoringFamily, FamilyMode};
pub use graph::{
    certify_separability, degeneracy, is_vertex_cover, neighborhood, set_distance, subdivide_twice, BipartiteGraph,
    Graph, SeparabilityCertificate, Side, VertexSet,
};
pub use matching::{find_hall_violator, maximum_matching, HallCheck, Matching};
pub use permissive::{permissive_search, PermissiveOutcome, SearchMode};
pub use strict::{hall_set_bruteforce, strict_search, CoverInstance, HallInstance, HallSetOutcome, StrictOutcome};
