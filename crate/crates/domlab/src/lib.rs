//! domlab: a laboratory for domination numbers of cubic graphs.
//!
//! The crate builds the gadget-based graph families that beat the γ ≤ ⌈v/3⌉
//! bound for connected cubic graphs, computes exact domination numbers with
//! certificates, and re-checks every structural claim (connectivity,
//! bridges, cyclic edge-connectivity, Hamiltonicity) independently.
//!
//! Entry points:
//! - [`graph::Graph`] — small multigraph type with an explicit edge list
//! - [`gadget`] — the rooted gadgets A, B, S, T, P, Q, P', W and the
//!   doubling operators T1, T2, F2, F3
//! - [`families`] — builders for R_k, L_r, G(P), G[B], G(P,B), M^r_k,
//!   N^r_k(i), generalized Petersen graphs
//! - [`domination`] — exact solvers (brute force + branch and bound) and
//!   compositional lower-bound certification from gadget occurrences
//! - [`analysis`] — cubicity, bridges, vertex connectivity, cyclic
//!   4-edge-connectivity, Hamiltonian cycle search
//! - [`claims`] — the registry of verifiable numeric claims behind the
//!   counterexamples, with machine-checkable reports
//! - [`scan`] — bulk scanning of graph6 corpora against the conjectured
//!   bounds

pub mod analysis;
pub mod claims;
pub mod corpus;
pub mod domination;
pub mod families;
pub mod gadget;
pub mod graph;
pub mod graph6;
pub mod ratio;
pub mod report;
pub mod scan;

pub use domination::{gamma_bruteforce, gamma_exact, is_dominating, Budget, DominationResult};
pub use graph::{Graph, VertexSet};
pub use ratio::Ratio;
