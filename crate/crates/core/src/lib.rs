//! Exact Minkowski-sum algebra of integral polytopes.
//!
//! Everything in this crate is computed in arbitrary-precision rational
//! arithmetic: polytopes are canonical vertex lists, equality of group
//! elements is the exact Minkowski cancellation test, and all the named
//! identities (cutting, partition, shadow, stretching, gluing) hold as
//! exact polytope equalities rather than up to tolerance.
//!
//! Modules follow the conceptual layering:
//!
//! * [`geometry`] — points, hyperplanes, canonical polytopes, face lattices;
//! * [`ops`] — Minkowski sums, reflections, shadows, cuts, stretching,
//!   grounded/pillar predicates and vertical gluing;
//! * [`group`] — the polytope group `P(H)` and its translation quotient
//!   `P_T(H)`: formal differences, involution, face Euler characteristic,
//!   seminorms;
//! * [`partition`] — partitions of a polytope and the alternating-sign
//!   partition relations;
//! * [`basis`] — pure subgroup charts and the recursive basis decomposition
//!   of classes in `P_T(Z^n)`;
//! * [`witness`] — seminorm-kernel tests and constructive antisymmetric
//!   witnesses.

pub mod basis;
pub mod geometry;
pub mod group;
mod hull3d;
pub mod lattice;
pub mod lp;
pub mod mat;
pub mod ops;
pub mod partition;
pub mod scalar;
pub mod witness;

/// Arbitrary-precision integer used for lattice data (normals, directions,
/// chart matrices).
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational used for all coordinates.
pub type Rat = num_rational::BigRational;

pub use geometry::{Face, Hyperplane, Point, Polytope};
pub use group::{Flavor, FormalSum, GroupElement};

use thiserror::Error;

/// Errors surfaced by the library operations.
///
/// Internal theorem violations (a paper identity failing on valid input) are
/// bugs and panic instead of returning one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("dimension mismatch: expected ambient dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("requires integral polytope")]
    NotIntegral,
    #[error("full-dimensional input required")]
    NotFullDimensional,
    #[error("polytope is not grounded")]
    NotGrounded,
    #[error("face has codimension != 1")]
    CodimNotOne,
    #[error("reflected polytope is not a grounded almost-pillar")]
    NotReflectedGroundedAlmostPillar,
    #[error("gluing assumption violated")]
    GluingAssumptionViolated,
    #[error("group element flavor mismatch")]
    FlavorMismatch,
    #[error("rank beyond desk-scale recursion")]
    RankGuard,
    #[error("element is not in ker(id + *)")]
    NotInKernel,
    #[error("partition condition ({condition}) violated: {detail}")]
    PartitionAxiom { condition: u8, detail: String },
    #[error("malformed basis key: {0}")]
    MalformedKey(String),
    #[error("zero direction vector")]
    ZeroDirection,
}

pub type Result<T> = std::result::Result<T, Error>;
