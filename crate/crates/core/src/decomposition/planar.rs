use std::f64::consts::PI;

use crate::tolerance::{EPS_AREA, EPS_RIGID};
use crate::{
    chasles_decompose, screw_decompose, Error, Point2, Point3, Result, ScrewKind,
    TripleConfiguration, Vector2,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanarKind {
    Rotation,
    Translation,
    Identity,
}

/// A planar rigid motion: a rotation about `center`, or a translation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanarDecomposition {
    pub kind: PlanarKind,
    /// Fixed point; meaningful for [`PlanarKind::Rotation`].
    pub center: Point2,
    /// Counterclockwise, radians in `(-π, π]`.
    pub angle: f64,
    /// Meaningful for [`PlanarKind::Translation`].
    pub translation: Vector2,
}

impl PlanarDecomposition {
    pub fn apply(&self, p: &Point2) -> Point2 {
        match self.kind {
            PlanarKind::Identity => *p,
            PlanarKind::Translation => p + self.translation,
            PlanarKind::Rotation => {
                let (sin, cos) = self.angle.sin_cos();
                let v = p - self.center;
                self.center + Vector2::new(cos * v.x - sin * v.y, sin * v.x + cos * v.y)
            }
        }
    }
}

fn signed_area(p: &[Point2; 3]) -> f64 {
    let (u, v) = (p[1] - p[0], p[2] - p[0]);
    0.5 * (u.x * v.y - u.y * v.x)
}

fn embed(p: &Point2) -> Point3 {
    Point3::new(p.x, p.y, 0.0)
}

/// Classifies a planar motion as a rotation about a fixed point or a
/// translation, via the screw axis of its embedding in 3-space.
pub fn planar_decompose(initial: &[Point2; 3], fin: &[Point2; 3]) -> Result<PlanarDecomposition> {
    if initial
        .iter()
        .chain(fin)
        .any(|p| !(p.x.is_finite() && p.y.is_finite()))
    {
        return Err(Error::InvalidInput("non-finite coordinate".into()));
    }
    let area = signed_area(initial);
    let longest = (0..3)
        .map(|i| (initial[(i + 1) % 3] - initial[i]).norm_squared())
        .fold(0.0, f64::max);
    if area.abs() <= EPS_AREA * longest {
        return Err(Error::DegenerateTriple);
    }
    let mut diameter = 0.0_f64;
    let mut worst = 0.0_f64;
    for i in 0..3 {
        let j = (i + 1) % 3;
        let d0 = (initial[j] - initial[i]).norm();
        diameter = diameter.max(d0);
        worst = worst.max(((fin[j] - fin[i]).norm() - d0).abs());
    }
    let discrepancy = worst / diameter;
    if discrepancy > EPS_RIGID {
        return Err(Error::NotRigid {
            discrepancy,
            handedness_preserved: true,
        });
    }
    if signed_area(fin) * area <= 0.0 {
        return Err(Error::ReflectionNotAllowed);
    }

    let lift = |p: &[Point2; 3]| TripleConfiguration::new(embed(&p[0]), embed(&p[1]), embed(&p[2]));
    let motion = chasles_decompose(&lift(initial)?, &lift(fin)?, &embed(&initial[0]))?;
    let screw = screw_decompose(&motion);

    Ok(match screw.kind {
        ScrewKind::Identity => PlanarDecomposition {
            kind: PlanarKind::Identity,
            center: initial[0],
            angle: 0.0,
            translation: Vector2::zeros(),
        },
        ScrewKind::PureTranslation => {
            let t = screw.slide * screw.axis_dir.into_inner();
            PlanarDecomposition {
                kind: PlanarKind::Translation,
                center: initial[0],
                angle: 0.0,
                translation: Vector2::new(t.x, t.y),
            }
        }
        ScrewKind::Screw => PlanarDecomposition {
            kind: PlanarKind::Rotation,
            center: Point2::new(screw.axis_point.x, screw.axis_point.y),
            angle: if screw.axis_dir.z >= 0.0 || screw.angle == PI {
                screw.angle
            } else {
                -screw.angle
            },
            translation: Vector2::zeros(),
        },
    })
}
