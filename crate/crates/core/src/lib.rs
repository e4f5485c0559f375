//! Exact cevian calculus on triangles.
//!
//! Cevian parameters `(ρ, σ, τ)` place the feet `A_ρ`, `B_σ`, `C_τ` on the
//! lines opposite `A`, `B`, `C`. This crate classifies which triples form
//! triangles, checks concurrency with Ceva's condition, builds ξ-median and
//! ξ-outer median triangles and verifies their area-ratio and iterated
//! similarity identities exactly, over Q or Q(√5). Every symbolic result has a
//! coordinate counterpart in [`geometry`] that it is tested against.

pub mod calculus;
pub mod cli;
pub mod error;
pub mod families;
pub mod figure;
pub mod geometry;
pub mod median;
pub mod poly;
pub mod scalar;

pub use calculus::{
    ceva_value, concurrency_point, heron_squared_area, squared_cevian_lengths, stewart_matrix, CevianTriple,
    ConcurrencyResult, Matrix3, SquaredSides, StewartMatrix,
};
pub use error::{Error, Result};
pub use families::{
    ceva_intersection, classify_triple, family_parameterization, forms_triangle, is_parallel_triple, Family,
    FamilyKind, FamilyMembership, SignChoice, TriangleVerdict,
};
pub use geometry::{Point, Triangle, Vector, Vertex};
pub use median::{
    area_ratio_formula, classical_properties_suite, similarity_identity_check, xi_median_triangle,
    xi_outer_median_triangles, MedianTriangleReport,
};
pub use scalar::{is_golden_excluded, QuadExt5, Scalar};
