use std::f64::consts::PI;

use crate::tolerance::{EPS_ANGLE, EPS_ORTH, EPS_UNIT};
use crate::{Error, Matrix3, Point3, Result, UnitVector3, Vector3};

/// A proper rotation of 3-space, held as axis and angle together with its
/// matrix.
///
/// The angle is normalized to `(-π, π]`. At exactly `π` the axis sign is fixed
/// by [`tie_break`]. Below [`EPS_ANGLE`] the rotation is the identity, the axis
/// is reported as `+z` and [`Rotation::is_axis_defined`] returns `false`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation {
    axis: UnitVector3,
    angle: f64,
    axis_defined: bool,
    matrix: Matrix3,
}

impl Rotation {
    pub fn identity() -> Self {
        Self {
            axis: Vector3::z_axis(),
            angle: 0.0,
            axis_defined: false,
            matrix: Matrix3::identity(),
        }
    }

    pub fn from_axis_angle(axis: &UnitVector3, angle: f64) -> Self {
        let angle = normalize_angle(angle);
        if angle.abs() < EPS_ANGLE {
            return Self::identity();
        }
        let axis = if angle == PI {
            UnitVector3::new_unchecked(tie_break(axis.into_inner()))
        } else {
            *axis
        };
        Self {
            axis,
            angle,
            axis_defined: true,
            matrix: rodrigues(&axis, angle),
        }
    }

    /// Same as [`axis_angle_from_rotation`].
    pub fn from_matrix(m: &Matrix3) -> Result<Self> {
        axis_angle_from_rotation(m)
    }

    pub fn axis(&self) -> &UnitVector3 {
        &self.axis
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn is_axis_defined(&self) -> bool {
        self.axis_defined
    }

    pub fn is_identity(&self) -> bool {
        !self.axis_defined
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.matrix
    }

    /// Axis and angle with the angle flipped into `[0, π]`.
    pub fn canonical(&self) -> (UnitVector3, f64) {
        if self.angle < 0.0 {
            (-self.axis, -self.angle)
        } else {
            (self.axis, self.angle)
        }
    }

    pub fn inverse(&self) -> Self {
        if self.is_identity() {
            *self
        } else {
            Self::from_axis_angle(&self.axis, -self.angle)
        }
    }

    /// `self ∘ first`: apply `first`, then `self`. Both rotations are taken
    /// about the same fixed point.
    pub fn compose(&self, first: &Rotation) -> Rotation {
        let (a2, b2) = self.half_angle_parameters();
        let (a1, b1) = first.half_angle_parameters();
        let mut a = a2 * a1 - b2.dot(&b1);
        let mut b = a2 * b1 + a1 * b2 + b2.cross(&b1);
        if a < 0.0 {
            a = -a;
            b = -b;
        }
        let sin_half = b.norm();
        let angle = 2.0 * sin_half.atan2(a);
        if angle < EPS_ANGLE || sin_half == 0.0 {
            return Rotation::identity();
        }
        Rotation::from_axis_angle(&UnitVector3::new_unchecked(b / sin_half), angle)
    }

    pub fn rotate_vector(&self, v: &Vector3) -> Vector3 {
        self.matrix * v
    }

    /// `base + M·(p − base)`.
    pub fn apply_about(&self, base: &Point3, p: &Point3) -> Point3 {
        base + self.matrix * (p - base)
    }

    /// Euler–Rodrigues parameters `(cos(Θ/2), sin(Θ/2)·n̂)`.
    fn half_angle_parameters(&self) -> (f64, Vector3) {
        if self.is_identity() {
            return (1.0, Vector3::zeros());
        }
        let half = 0.5 * self.angle;
        (half.cos(), self.axis.into_inner() * half.sin())
    }
}

impl Default for Rotation {
    fn default() -> Self {
        Self::identity()
    }
}

impl std::ops::Mul for Rotation {
    type Output = Rotation;

    fn mul(self, rhs: Rotation) -> Rotation {
        self.compose(&rhs)
    }
}

/// Recovers axis and angle from a rotation matrix.
///
/// The axis is the eigenvector of `M` for eigenvalue one, found as the null
/// direction of `M − I` (the largest cross product of two of its rows). Its
/// sign is chosen so that the angle lies in `[0, π]`, with `trace M = 1 + 2 cos Θ`.
/// When the skew part of `M` vanishes (`Θ = π`) the sign follows [`tie_break`].
pub fn axis_angle_from_rotation(m: &Matrix3) -> Result<Rotation> {
    check_rotation_matrix(m)?;

    let cos = ((m.trace() - 1.0) * 0.5).clamp(-1.0, 1.0);
    // 2 sin Θ · n̂
    let skew = Vector3::new(
        m[(2, 1)] - m[(1, 2)],
        m[(0, 2)] - m[(2, 0)],
        m[(1, 0)] - m[(0, 1)],
    );
    if (0.5 * skew.norm()).atan2(cos) < EPS_ANGLE {
        return Ok(Rotation::identity());
    }

    let shifted = m - Matrix3::identity();
    let rows = [
        shifted.row(0).transpose(),
        shifted.row(1).transpose(),
        shifted.row(2).transpose(),
    ];
    let null = [
        rows[0].cross(&rows[1]),
        rows[0].cross(&rows[2]),
        rows[1].cross(&rows[2]),
    ]
    .into_iter()
    .max_by(|a, b| a.norm_squared().total_cmp(&b.norm_squared()))
    .expect("three candidates");
    let norm = null.norm();
    if norm == 0.0 {
        return Err(Error::NotARotation("no unit eigenvector found".into()));
    }
    let mut axis = null / norm;

    let mut twice_sin = skew.dot(&axis);
    if twice_sin < 0.0 {
        axis = -axis;
        twice_sin = -twice_sin;
    }
    if twice_sin <= 2.0 * EPS_UNIT {
        axis = tie_break(axis);
    }
    let angle = (0.5 * twice_sin).atan2(cos);
    if angle < EPS_ANGLE {
        return Ok(Rotation::identity());
    }
    Ok(Rotation::from_axis_angle(
        &UnitVector3::new_unchecked(axis),
        angle,
    ))
}

fn check_rotation_matrix(m: &Matrix3) -> Result<()> {
    if m.iter().any(|v| !v.is_finite()) {
        return Err(Error::NotARotation("non-finite entry".into()));
    }
    let orth = (m.transpose() * m - Matrix3::identity()).amax();
    if orth > EPS_ORTH {
        return Err(Error::NotARotation(format!(
            "|MᵀM − I| = {orth:e} exceeds {EPS_ORTH:e}"
        )));
    }
    let det = m.determinant();
    if (det - 1.0).abs() > EPS_ORTH {
        return Err(Error::NotARotation(format!("determinant {det} is not +1")));
    }
    Ok(())
}

/// Maps an angle into `(-π, π]`.
pub(crate) fn normalize_angle(angle: f64) -> f64 {
    let a = angle.rem_euclid(2.0 * PI);
    if a > PI {
        a - 2.0 * PI
    } else {
        a
    }
}

/// Flips `v` so that its first component with magnitude above [`EPS_UNIT`]
/// (in x, y, z order) is positive.
pub(crate) fn tie_break(v: Vector3) -> Vector3 {
    match v.iter().find(|c| c.abs() > EPS_UNIT) {
        Some(c) if *c < 0.0 => -v,
        _ => v,
    }
}

fn rodrigues(axis: &UnitVector3, angle: f64) -> Matrix3 {
    let k = axis.cross_matrix();
    Matrix3::identity() + k * angle.sin() + k * k * (1.0 - angle.cos())
}

/// Angle between two directions in `[0, π]`.
pub fn angle_between(a: &Vector3, b: &Vector3) -> f64 {
    a.cross(b).norm().atan2(a.dot(b))
}

/// A unit vector perpendicular to `v`: `v × ẑ` normalized, or `v × x̂` when `v`
/// is parallel to `ẑ`.
pub fn canonical_perpendicular(v: &UnitVector3) -> UnitVector3 {
    let c = v.cross(&Vector3::z());
    if c.norm() > 1e-6 {
        UnitVector3::new_normalize(c)
    } else {
        UnitVector3::new_normalize(v.cross(&Vector3::x()))
    }
}

/// How far apart two rotations are in axis direction and angle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RotationDeviation {
    /// Angle between the axes, in radians.
    pub axis: f64,
    /// Absolute difference of rotation angles, in radians.
    pub angle: f64,
}

/// Compares two rotations up to a simultaneous sign flip of axis and angle.
///
/// An undefined (identity) axis matches any axis. At `Θ = π` the axes are
/// compared up to sign.
pub fn rotation_deviation(a: &Rotation, b: &Rotation) -> RotationDeviation {
    let (na, ta) = a.canonical();
    let (nb, tb) = b.canonical();
    let angle = (ta - tb).abs();
    if a.is_identity() || b.is_identity() {
        return RotationDeviation { axis: 0.0, angle };
    }
    let mut axis = angle_between(&na, &nb);
    if PI - ta < 1e-9 && PI - tb < 1e-9 {
        axis = axis.min(angle_between(&na, &-nb.into_inner()));
    }
    RotationDeviation { axis, angle }
}
