//! Rigid-body kinematics built from constructive geometry.
//!
//! The crate takes two labeled configurations of a rigid body and explains the
//! motion between them in several equivalent ways:
//!
//! * the three-step scheme ([`decompose_three_step`]): translate one point into
//!   place, rotate about an axis normal to the plane swept by the second point,
//!   then rotate about the line through the first two points;
//! * the single Euler axis of those two rotations ([`euler_axis`]), obtained
//!   both algebraically and by the spherical invariant-point construction in
//!   [`spherical`];
//! * a translation plus rotation about an arbitrary translating point
//!   ([`chasles_decompose`]) and the check that the rotation part does not
//!   depend on that choice ([`chasles_independence_check`]);
//! * the screw (Mozzi) axis ([`screw_decompose`]) and its planar special case
//!   ([`planar_decompose`]).
//!
//! [`axis_angle_from_rotation`] recovers axis and angle from a rotation matrix
//! through its unit eigenvector and serves as the independent reference for the
//! constructions above. [`fourth_point_positions`] locates a point from its
//! distances to three others, which is why three non-collinear points fix a
//! rigid configuration.
//!
//! All types are plain immutable values and every operation is a pure function.

pub mod decomposition;
mod displacement;
mod error;
mod rigidity;
mod rotation;
pub mod spherical;
pub mod tolerance;
mod trilateration;

pub use decomposition::{
    chasles_decompose, chasles_independence_check, decompose_three_step, euler_axis,
    planar_decompose, screw_decompose, IndependenceReport, PlanarDecomposition, PlanarKind,
    ScrewDecomposition, ScrewKind, TwoRotationDecomposition,
};
pub use displacement::RigidDisplacement;
pub use error::{Error, Result};
pub use rigidity::{
    signed_volume, validate_rigidity, Handedness, RigidityReport, TripleConfiguration,
};
pub use rotation::{
    angle_between, axis_angle_from_rotation, canonical_perpendicular, rotation_deviation, Rotation,
    RotationDeviation,
};
pub use trilateration::{fourth_point_positions, FourthPointProblem, FourthPointSolution};

/// Position in 3-space.
pub type Point3 = nalgebra::Point3<f64>;
/// Position in the plane.
pub type Point2 = nalgebra::Point2<f64>;
/// Free vector in 3-space.
pub type Vector3 = nalgebra::Vector3<f64>;
/// Free vector in the plane.
pub type Vector2 = nalgebra::Vector2<f64>;
/// Direction in 3-space with unit norm.
pub type UnitVector3 = nalgebra::Unit<nalgebra::Vector3<f64>>;
/// 3×3 real matrix.
pub type Matrix3 = nalgebra::Matrix3<f64>;
