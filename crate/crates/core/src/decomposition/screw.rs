use nalgebra::{Matrix2, Vector2};

use crate::tolerance::{EPS_ANGLE, EPS_UNIT};
use crate::{Point3, RigidDisplacement, Rotation, UnitVector3, Vector3};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScrewKind {
    Screw,
    PureTranslation,
    Identity,
}

/// Rotation by `angle` about the line through `axis_point` along `axis_dir`,
/// then a slide of `slide` along `axis_dir`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScrewDecomposition {
    pub axis_point: Point3,
    pub axis_dir: UnitVector3,
    /// Radians in `(-π, π]`.
    pub angle: f64,
    pub slide: f64,
    pub kind: ScrewKind,
}

impl ScrewDecomposition {
    pub fn rotation(&self) -> Rotation {
        Rotation::from_axis_angle(&self.axis_dir, self.angle)
    }

    pub fn apply(&self, p: &Point3) -> Point3 {
        self.rotation().apply_about(&self.axis_point, p) + self.slide * self.axis_dir.into_inner()
    }

    pub fn to_displacement(&self) -> RigidDisplacement {
        RigidDisplacement::new(
            self.rotation(),
            self.axis_point,
            self.slide * self.axis_dir.into_inner(),
        )
    }
}

/// Finds the screw axis of a displacement.
///
/// The translation `F` splits into `g·n̂` along the rotation axis and `s` across
/// it. Points whose rotational displacement is `−s` form the screw axis; the
/// representative returned is the one in the plane through `base_point`
/// perpendicular to `n̂`.
pub fn screw_decompose(d: &RigidDisplacement) -> ScrewDecomposition {
    let f = d.translation;
    if d.rotation.is_identity() || d.rotation.angle().abs() < EPS_ANGLE {
        let len = f.norm();
        return if len > EPS_UNIT {
            ScrewDecomposition {
                axis_point: d.base_point,
                axis_dir: UnitVector3::new_unchecked(f / len),
                angle: 0.0,
                slide: len,
                kind: ScrewKind::PureTranslation,
            }
        } else {
            ScrewDecomposition {
                axis_point: d.base_point,
                axis_dir: Vector3::z_axis(),
                angle: 0.0,
                slide: 0.0,
                kind: ScrewKind::Identity,
            }
        };
    }

    let n = *d.rotation.axis();
    let angle = d.rotation.angle();
    let slide = f.dot(&n);
    let across = f - slide * n.into_inner();

    // (M − I) restricted to the plane ⟂ n̂, in the basis (e1, e2 = n̂ × e1)
    let e1 = crate::canonical_perpendicular(&n).into_inner();
    let e2 = n.cross(&e1);
    let (sin, cos) = angle.sin_cos();
    let system = Matrix2::new(cos - 1.0, -sin, sin, cos - 1.0);
    let rhs = -Vector2::new(across.dot(&e1), across.dot(&e2));
    let coords = system
        .lu()
        .solve(&rhs)
        .expect("M − I is invertible across the axis for a nonzero angle");

    ScrewDecomposition {
        axis_point: d.base_point + coords.x * e1 + coords.y * e2,
        axis_dir: n,
        angle,
        slide,
        kind: ScrewKind::Screw,
    }
}
