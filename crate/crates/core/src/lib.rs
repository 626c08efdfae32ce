//! Exact cross-ratio calculus for four collinear points over skew fields.
//!
//! The crate is organised in four layers:
//!
//! * [`skewfield`]: exact arithmetic over ℚ, GF(p) and the rational
//!   quaternions ℍ(ℚ), plus center/centralizer/conjugacy predicates.
//! * [`ratio`]: ratios of two and three points, the cross-ratio with its
//!   degenerate cases and the point at infinity, fourth-point solving.
//! * [`plane`]: the coordinatized affine plane over a skew field, the ruler
//!   constructions for point addition and multiplication, and a checker for
//!   Desargues configurations.
//! * [`verify`]: seeded, exact, randomized verification of every identity
//!   the library relies on, with machine-readable reports.

// Values are small immutable math objects; boxing variants would only add
// allocations.
#![allow(clippy::large_enum_variant)]

pub mod error;
pub mod plane;
pub mod ratio;
pub mod skewfield;
pub mod verify;

pub use error::{Error, Result};
pub use plane::{
    check_desargues, coordinatize, generate_desargues_config, geometric_add, geometric_mul,
    intersect, line_through, parallel_through, point_at, Construction, DesarguesClause,
    DesarguesConfig, Intersection, Perspective, PerspectiveMode, PlaneLine, PlanePoint,
};
pub use ratio::{
    cross_ratio, cross_ratio_alt, invert_all, negate_all, ratio2, ratio2_inverse_law, ratio3,
    ratio3_permutations, solve_fourth_point, CrossRatioArgs, ExtendedPoint,
};
pub use skewfield::{Field, FieldElement, GaloisPrime, Rational, RationalQuaternion};
pub use verify::{
    resolve_p6_form, run_check, run_suite, CheckRecord, CheckSpec, VerificationReport, Witness,
};
