//! Exact invariants of Möbius and cylinder octagonal-quadrilateral chains.
//!
//! The chain of order n consists of n octagons and n quadrilaterals sharing
//! edges, closed into a ring either with a half-twist (Möbius) or without
//! (cylinder). This crate builds the graphs explicitly, splits their
//! Laplacians along the plain/primed pairing into the cycle block L_A and
//! the corner-perturbed tridiagonal block L_S, and evaluates Kirchhoff
//! index, Wiener index and spanning-tree count in exact big-rational
//! arithmetic through Lucas-type integer sequences over Q(√14).
//!
//! Every closed form is cross-checked against an independent brute-force
//! oracle (grounded-Laplacian resistance solves, BFS distance sums,
//! matrix-tree cofactors, exact characteristic polynomials); the
//! [`verify`] module bundles the whole battery. One genuine finding comes
//! out of it: the cylinder Wiener closed form `32n³+16n²−8n` disagrees
//! with the exact distance sum of the cylinder graphs (which instead fits
//! `32n³+16n²+8n` at every order checked). The verification report says so
//! rather than hiding it.

pub mod error;
pub mod graph;
pub mod invariants;
pub mod laplacian;
pub mod matrix;
pub mod oracles;
pub mod sequences;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{build_chain, ChainGraph, ChainVariant, Side, VertexId};
pub use invariants::{
    complexity_closed, compute_report, kirchhoff_closed, kirchhoff_cycle, kirchhoff_spectral,
    ratio, sum_reciprocal_ls, wiener_closed, InvariantReport, Method,
};
pub use laplacian::{decompose, laplacian, BlockDecomposition};
pub use matrix::{decimal_string, RationalMatrix};
pub use oracles::{
    charpoly_exact, kirchhoff_resistance, principal_minor_sum_bruteforce, spanning_trees,
    wiener_bfs, CharPoly, ResistanceSum,
};
pub use sequences::{det_ls, lucas, lucas_sequence, minor_sum, q_value, MinorKind, QuadFieldElement};
pub use verify::{run_verification, CheckResult, VerificationReport};
