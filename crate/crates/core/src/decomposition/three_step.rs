use std::f64::consts::PI;

use crate::rotation::canonical_perpendicular;
use crate::tolerance::EPS_RIGID;
use crate::{
    validate_rigidity, Point3, Result, RigidDisplacement, Rotation, TripleConfiguration,
    UnitVector3, Vector3,
};

/// The three-step description of a displacement.
///
/// 1. translate by `translation`, carrying `P1` onto `P1′ = fixed_point`;
/// 2. rotate by `phi` about `ab_axis` through `P1′`, carrying `P2″` onto `P2′`;
/// 3. rotate by `theta` about `second_axis` (the direction `P1′ → P2′`),
///    carrying `P3‴` onto `P3′`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoRotationDecomposition {
    pub translation: Vector3,
    pub ab_axis: UnitVector3,
    /// Radians in `[0, 2π)`.
    pub phi: f64,
    pub second_axis: UnitVector3,
    /// Radians in `(-π, π]`, right-handed about `second_axis`.
    pub theta: f64,
    pub fixed_point: Point3,
}

impl TwoRotationDecomposition {
    pub fn ab_rotation(&self) -> Rotation {
        Rotation::from_axis_angle(&self.ab_axis, self.phi)
    }

    pub fn second_rotation(&self) -> Rotation {
        Rotation::from_axis_angle(&self.second_axis, self.theta)
    }

    /// Images of `p` after steps 1, 2 and 3.
    pub fn trace(&self, p: &Point3) -> [Point3; 3] {
        let shifted = p + self.translation;
        let turned = self.ab_rotation().apply_about(&self.fixed_point, &shifted);
        let done = self
            .second_rotation()
            .apply_about(&self.fixed_point, &turned);
        [shifted, turned, done]
    }

    /// Replays the three steps on `p`.
    pub fn apply(&self, p: &Point3) -> Point3 {
        self.trace(p)[2]
    }

    /// Translation followed by the single Euler rotation about `fixed_point`.
    pub fn to_displacement(&self) -> RigidDisplacement {
        RigidDisplacement::new(
            euler_axis(self),
            self.fixed_point - self.translation,
            self.translation,
        )
    }
}

/// Splits the motion `initial → fin` into the three steps.
///
/// Step 2 is skipped (`phi = 0`, `ab_axis` perpendicular to `second_axis`)
/// when `P2″` already coincides with `P2′`. When `P2″` is the antipode of `P2′`
/// the cross product vanishes and `ab_axis` is the normal of the plane through
/// `P1′`, `P2″` and `P3″`.
pub fn decompose_three_step(
    initial: &TripleConfiguration,
    fin: &TripleConfiguration,
) -> Result<TwoRotationDecomposition> {
    validate_rigidity(initial.points(), fin.points())?.into_result()?;
    let [p1, p2, p3] = *initial.points();
    let [q1, q2, q3] = *fin.points();

    let translation = q1 - p1;
    // P1′ → P2″ and P1′ → P2′
    let from = p2 - p1;
    let to = q2 - q1;
    let second_axis = UnitVector3::new_normalize(to);

    let scale = from.norm();
    let (ab_axis, phi) = if (from - to).norm() <= EPS_RIGID * scale {
        (canonical_perpendicular(&second_axis), 0.0)
    } else if (from + to).norm() <= EPS_RIGID * scale {
        let normal = from.cross(&(p3 - p1));
        let axis = if normal.norm() > EPS_RIGID * scale * (p3 - p1).norm() {
            UnitVector3::new_normalize(normal)
        } else {
            canonical_perpendicular(&second_axis)
        };
        (axis, PI)
    } else {
        let normal = from.cross(&to);
        (
            UnitVector3::new_normalize(normal),
            normal.norm().atan2(from.dot(&to)),
        )
    };

    let step2 = Rotation::from_axis_angle(&ab_axis, phi);
    let w = step2.rotate_vector(&(p3 - p1));
    let w_final = q3 - q1;
    let n = second_axis.into_inner();
    let w_perp = w - w.dot(&n) * n;
    let w_final_perp = w_final - w_final.dot(&n) * n;
    let mut theta = n
        .dot(&w_perp.cross(&w_final_perp))
        .atan2(w_perp.dot(&w_final_perp));
    if theta <= -PI {
        theta = PI;
    }

    Ok(TwoRotationDecomposition {
        translation,
        ab_axis,
        phi,
        second_axis,
        theta,
        fixed_point: q1,
    })
}

/// The single rotation about `fixed_point` equivalent to steps 2 and 3.
pub fn euler_axis(decomp: &TwoRotationDecomposition) -> Rotation {
    decomp.second_rotation().compose(&decomp.ab_rotation())
}
