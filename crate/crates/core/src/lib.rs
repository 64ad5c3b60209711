//! Seidel switching, two-graph groups, extensible graphs and the
//! equiangular line systems they carry.
//!
//! Vertices are `0..n`. A graph is identified with its ±1 matrix `E`
//! (diagonal `+1`, `-1` on edges); see [`graph`] for the conventions.

pub mod construct;
pub mod extensible;
pub mod field;
pub mod graph;
pub mod graph6;
pub mod groups;
pub mod linalg;
pub mod lines;
pub mod paley;
pub mod perm;
pub mod poly;
mod refine;
pub mod spectra;
pub mod uniqueness;

pub use construct::{construct, verify_t1_structure, Construction, T1Structure};
pub use extensible::{complement_params, extend, extensible_params, srg_params, ExtParams};
pub use field::{FieldCtx, QuadResidues};
pub use graph::{is_switching_equivalent, Distance, GraphError, GraphJson, SeidelGraph, SwitchingVector, TripleSign};
pub use groups::{automorphism_group, two_graph_group, GroupError};
pub use lines::{embed_lines, reduced_gram, LineSystem};
pub use perm::{group_order, Perm, PermError, PermGroup};
pub use poly::IntPoly;
pub use spectra::{char_poly, chi_polynomial, spectrum, two_eigenvalue_check, Cosine, Eigenvalue, SeidelSpectrum};
