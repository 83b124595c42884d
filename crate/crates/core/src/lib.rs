//! Preference profiles that are intermediate on median graphs.
//!
//! Voters sit on the vertices of a graph; a profile is intermediate when,
//! for every pair of alternatives `a, b`, the voters preferring `a` to `b`
//! form a geodesically convex set. This crate recognizes such profiles,
//! builds them from median graphs, verifies Condorcet domains and solves
//! the Chamberlin-Courant committee problem on trees.

pub mod cc;
pub mod domain;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod intermediate;
pub mod order;
pub mod profile;
pub mod recognition;
pub mod synthesis;

pub use cc::{cc_brute_force, cc_tree_dp, CcError, CcSolution, Misrepresentation, Objective};
pub use domain::{condorcet_oracle, is_condorcet_domain};
pub use format::ParseError;
pub use graph::{DistanceMatrix, Graph, GraphError, Vertex};
pub use intermediate::{ab_cuts, check_condition_iii, is_intermediate, CutEdge};
pub use order::{is_order_between, Alternative, LinearOrder, PairSet};
pub use profile::{MajorityRelation, Profile, ProfileError};
pub use recognition::{recognize, recognition_oracle, RecognitionResult, Verdict};
pub use synthesis::{mulder_decompose, random_median_graph, synthesize_profile};
