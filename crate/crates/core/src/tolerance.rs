//! Numerical tolerances shared by every module.

/// Norm deviation allowed for a unit vector; also the axis tie-break threshold.
pub const EPS_UNIT: f64 = 1e-12;

/// Allowed deviation of `MᵀM` from the identity and of `det M` from one.
pub const EPS_ORTH: f64 = 1e-10;

/// Relative tolerance on preserved distances.
pub const EPS_RIGID: f64 = 1e-9;

/// A triangle is degenerate when its area is at most this times its squared
/// longest side.
pub const EPS_AREA: f64 = 1e-9;

/// Out-of-plane height, relative to the reference scale, below which the two
/// trilateration solutions merge into one.
pub const EPS_TANGENT: f64 = 1e-9;

/// Rotation angles below this many radians are reported as the identity.
pub const EPS_ANGLE: f64 = 1e-12;

/// Stopping residual for the bisection searches of the spherical construction.
pub const EPS_ROOT: f64 = 1e-12;
