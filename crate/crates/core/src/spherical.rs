//! The invariant-point construction on the sphere around the fixed point.
//!
//! After the translation step the two remaining rotations keep `P1′` fixed.
//! On the sphere centred at `P1′` through `P2″`, the first rotation turns the
//! meridian through `P2″` (running from pole `A` to pole `B` of the first axis)
//! onto the meridian through `P2′`. The meridian halfway between them is the
//! bisecting arc `ADB`, with `D` on the equator.
//!
//! A point `M` on the bisecting arc and its image `M′` under the first rotation
//! are the same distance from `P2′`, so a rotation about the `P1′P2′` axis can
//! carry `M′` back to `M`. The angle needed, [`latitude_return_angle`], grows
//! strictly from 0 at the pole to π at `D`. The point where it equals the
//! second rotation angle is left in place by both rotations together, and so
//! lies on the single equivalent rotation axis.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::tolerance::{EPS_ANGLE, EPS_RIGID, EPS_ROOT};
use crate::{
    angle_between, Error, Point3, Result, Rotation, TwoRotationDecomposition, UnitVector3, Vector3,
};

/// Allowed deviation of the scene's equator directions from the pole's normal
/// plane when built from world points.
const EQUATOR_TOLERANCE: f64 = 1e-9;

/// Tolerance on the fixed-point residual `|R·X − X|` of the constructed point.
const FIXED_POINT_TOLERANCE: f64 = 1e-9;

const MAX_BISECTIONS: usize = 200;

/// Largest spacing between consecutive samples of an arc, in radians.
const MAX_SAMPLE_STEP: f64 = 2.0 * PI / 180.0;

/// A point on the unit sphere of a [`SphereScene`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphericalPoint {
    pub direction: UnitVector3,
}

impl SphericalPoint {
    pub fn new(direction: UnitVector3) -> Self {
        Self { direction }
    }
}

/// The sphere around `P1′` with the first rotation axis as its polar axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphereScene {
    center: Point3,
    radius: f64,
    a_pole: UnitVector3,
    p2_initial: UnitVector3,
    p2_final: UnitVector3,
    phi: f64,
    theta: f64,
}

impl SphereScene {
    /// Builds a scene from its pole, the equatorial direction of `P2″` and the
    /// two rotation angles. `P2′` is `P2″` turned by `phi` about the pole.
    pub fn new(
        center: Point3,
        radius: f64,
        a_pole: UnitVector3,
        p2_initial: &Vector3,
        phi: f64,
        theta: f64,
    ) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::DegenerateScene(format!(
                "radius {radius} is not positive"
            )));
        }
        if !phi.is_finite() || !theta.is_finite() || !center.iter().all(|c| c.is_finite()) {
            return Err(Error::InvalidInput("non-finite scene parameter".into()));
        }
        let along = p2_initial.dot(&a_pole);
        let across = p2_initial - along * a_pole.into_inner();
        if across.norm() <= EQUATOR_TOLERANCE * p2_initial.norm() || p2_initial.norm() == 0.0 {
            return Err(Error::DegenerateScene(
                "P2 direction is parallel to the pole".into(),
            ));
        }
        if along.abs() > EQUATOR_TOLERANCE * p2_initial.norm() {
            return Err(Error::DegenerateScene(
                "P2 direction is not on the equator of the pole".into(),
            ));
        }
        let p2_initial = UnitVector3::new_normalize(across);
        let phi = phi.rem_euclid(2.0 * PI);
        let p2_final = UnitVector3::new_normalize(turn(&a_pole, phi, &p2_initial));
        Ok(Self {
            center,
            radius,
            a_pole,
            p2_initial,
            p2_final,
            phi,
            theta,
        })
    }

    /// Unit sphere at the origin, pole `+z`, `P2″` at `+x`.
    pub fn canonical(phi: f64, theta: f64) -> Result<Self> {
        Self::new(
            Point3::origin(),
            1.0,
            Vector3::z_axis(),
            &Vector3::x(),
            phi,
            theta,
        )
    }

    pub fn center(&self) -> &Point3 {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn a_pole(&self) -> &UnitVector3 {
        &self.a_pole
    }

    pub fn b_pole(&self) -> UnitVector3 {
        -self.a_pole
    }

    pub fn p2_initial(&self) -> &UnitVector3 {
        &self.p2_initial
    }

    pub fn p2_final(&self) -> &UnitVector3 {
        &self.p2_final
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `D`: the equatorial point midway in azimuth between `P2″` and `P2′`.
    pub fn bisector(&self) -> UnitVector3 {
        UnitVector3::new_normalize(turn(&self.a_pole, 0.5 * self.phi, &self.p2_initial))
    }

    /// `D′`: the image of `D` under the first rotation.
    pub fn bisector_image(&self) -> UnitVector3 {
        UnitVector3::new_normalize(turn(&self.a_pole, 1.5 * self.phi, &self.p2_initial))
    }

    pub fn first_rotation(&self) -> Rotation {
        Rotation::from_axis_angle(&self.a_pole, self.phi)
    }

    pub fn second_rotation(&self) -> Rotation {
        Rotation::from_axis_angle(&self.p2_final, self.theta)
    }

    /// Both rotations in sequence, as one rotation about the centre.
    pub fn composed_rotation(&self) -> Rotation {
        self.second_rotation().compose(&self.first_rotation())
    }

    pub fn to_world(&self, p: &SphericalPoint) -> Point3 {
        self.center + self.radius * p.direction.into_inner()
    }

    fn has_lune(&self) -> bool {
        self.phi >= EPS_ANGLE && self.phi <= 2.0 * PI - EPS_ANGLE
    }

    fn require_lune(&self) -> Result<()> {
        if self.has_lune() {
            Ok(())
        } else {
            Err(Error::DegenerateScene(
                "first rotation angle is zero".into(),
            ))
        }
    }
}

/// Builds the scene for a three-step decomposition, given the world positions
/// of `P2″` (after the translation) and `P2′`.
pub fn build_scene(
    decomp: &TwoRotationDecomposition,
    p2_initial_world: &Point3,
    p2_final_world: &Point3,
) -> Result<SphereScene> {
    let center = decomp.fixed_point;
    let u = p2_initial_world - center;
    let v = p2_final_world - center;
    let (r_initial, r_final) = (u.norm(), v.norm());
    if (r_initial - r_final).abs() > EPS_RIGID * r_initial.max(r_final) {
        return Err(Error::RadiusMismatch {
            initial: r_initial,
            fin: r_final,
        });
    }
    let scene = SphereScene::new(
        center,
        r_initial,
        decomp.ab_axis,
        &u,
        decomp.phi,
        decomp.theta,
    )?;
    let v_dir = v / r_final;
    if angle_between(&v_dir, scene.p2_final()) > EQUATOR_TOLERANCE {
        return Err(Error::DegenerateScene(
            "P2′ is not the image of P2″ under the first rotation".into(),
        ));
    }
    Ok(scene)
}

/// The point on the bisecting arc `ADB` at colatitude `t·π/2`: `A` at `t = 0`,
/// `D` at `t = 1`. Values of `t` outside `[0, 1]` are clamped.
pub fn bisecting_arc_point(scene: &SphereScene, t: f64) -> SphericalPoint {
    let colatitude = t.clamp(0.0, 1.0) * FRAC_PI_2;
    let (sin, cos) = colatitude.sin_cos();
    SphericalPoint::new(UnitVector3::new_normalize(
        cos * scene.a_pole.into_inner() + sin * scene.bisector().into_inner(),
    ))
}

/// Angle at vertex `v` between the great-circle arcs `v → p` and `v → q`,
/// in `[0, π]`.
pub fn spherical_angle(v: &Vector3, p: &Vector3, q: &Vector3) -> f64 {
    angle_between(&tangent(v, p), &tangent(v, q))
}

/// Signed angle at `v` from arc `v → p` to arc `v → q`, right-handed about `v`.
fn signed_spherical_angle(v: &Vector3, p: &Vector3, q: &Vector3) -> f64 {
    let (tp, tq) = (tangent(v, p), tangent(v, q));
    v.dot(&tp.cross(&tq)).atan2(tp.dot(&tq))
}

fn tangent(v: &Vector3, p: &Vector3) -> Vector3 {
    p - p.dot(v) * v
}

fn turn(axis: &UnitVector3, angle: f64, v: &Vector3) -> Vector3 {
    Rotation::from_axis_angle(axis, angle).rotate_vector(v)
}

/// The rotation about `P1′P2′` needed to carry `M′` back to `M`, where `M` is
/// the bisecting-arc point at `t` and `M′` its image under the first rotation.
pub fn latitude_return_angle(scene: &SphereScene, t: f64) -> Result<f64> {
    scene.require_lune()?;
    let m = bisecting_arc_point(scene, t).direction.into_inner();
    let m_image = turn(&scene.a_pole, scene.phi, &m);
    let pole = scene.p2_final.into_inner();
    let gap = (angle_between(&pole, &m) - angle_between(&pole, &m_image)).abs();
    if gap > EPS_RIGID {
        return Err(Error::ResidualExceeded {
            what: "latitude equidistance",
            value: gap,
            tolerance: EPS_RIGID,
        });
    }
    Ok(spherical_angle(&pole, &m, &m_image))
}

/// Signed version of [`latitude_return_angle`] for any point: positive when
/// the return is counterclockwise about `P2′`.
pub fn signed_return_angle(scene: &SphereScene, m: &SphericalPoint) -> f64 {
    let m = m.direction.into_inner();
    let m_image = turn(&scene.a_pole, scene.phi, &m);
    signed_spherical_angle(&scene.p2_final.into_inner(), &m_image, &m)
}

/// Smallest `t` in `[0, 1]` with `f(t) ≥ target`, for `f` increasing, to a
/// residual of [`EPS_ROOT`].
fn bisect_increasing(f: impl Fn(f64) -> Result<f64>, target: f64) -> Result<f64> {
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    if f(hi)? - target <= EPS_ROOT {
        return Ok(hi);
    }
    let mut mid = 0.5;
    for _ in 0..MAX_BISECTIONS {
        mid = 0.5 * (lo + hi);
        let r = f(mid)? - target;
        if r.abs() <= EPS_ROOT || hi - lo <= f64::EPSILON {
            break;
        }
        if r < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(mid)
}

fn require_second_rotation(scene: &SphereScene) -> Result<()> {
    scene.require_lune()?;
    if scene.theta.abs() < EPS_ANGLE {
        return Err(Error::NoRotation);
    }
    Ok(())
}

/// Mirror across the equatorial plane for a negative second rotation.
fn orient(scene: &SphereScene, p: SphericalPoint) -> SphericalPoint {
    if scene.theta >= 0.0 {
        return p;
    }
    let a = scene.a_pole.into_inner();
    let d = p.direction.into_inner();
    SphericalPoint::new(UnitVector3::new_normalize(d - 2.0 * d.dot(&a) * a))
}

/// The invariant point found by solving `latitude_return_angle(t) = |θ|`.
///
/// For `θ > 0` the point lies in the hemisphere of `A`, for `θ < 0` it is the
/// mirror point below the equator. The antipode is invariant as well.
pub fn invariant_point_by_root(scene: &SphereScene) -> Result<SphericalPoint> {
    require_second_rotation(scene)?;
    let t = bisect_increasing(|t| latitude_return_angle(scene, t), scene.theta.abs())?;
    let x = orient(scene, bisecting_arc_point(scene, t));
    let rotation = scene.composed_rotation();
    let d = x.direction.into_inner();
    let residual = (rotation.rotate_vector(&d) - d).norm();
    if residual > FIXED_POINT_TOLERANCE {
        return Err(Error::ResidualExceeded {
            what: "invariant point",
            value: residual,
            tolerance: FIXED_POINT_TOLERANCE,
        });
    }
    Ok(x)
}

/// The invariant point found as the point `X` of the bisecting arc where the
/// angle at `P2′` between arcs `P2′X` and `P2′A` equals `|θ|/2`.
///
/// `M` and `M′` are mirror images across the plane of `A` and `P2′`, so the
/// arc `P2′A` halves the return angle at `P2′`.
pub fn invariant_point_by_half_angle(scene: &SphereScene) -> Result<SphericalPoint> {
    require_second_rotation(scene)?;
    let pole = scene.p2_final.into_inner();
    let a = scene.a_pole.into_inner();
    let t = bisect_increasing(
        |t| {
            let x = bisecting_arc_point(scene, t).direction.into_inner();
            Ok(spherical_angle(&pole, &x, &a))
        },
        0.5 * scene.theta.abs(),
    )?;
    Ok(orient(scene, bisecting_arc_point(scene, t)))
}

/// A labeled polyline in world coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct ArcSample {
    pub label: String,
    pub points: Vec<Point3>,
}

/// World-coordinate polylines of the construction.
///
/// Arcs: the meridians `A-P2i-B`, `A-D-B`, `A-P2f-B`, `A-Dp-B`, the equator
/// arc `P2i-D-P2f`, the latitude arcs `L-M-N` (`t = 0.5`) and `H-Q-S`
/// (`t = 0.25`) swept by the first rotation, and when an invariant point
/// exists the circle around `P2′` through it (`lat-X`). Single points: `A`,
/// `B`, `D`, `Dp`, `P2i`, `P2f` and `X`. Each arc has at least `resolution`
/// points, spaced at most 2° apart.
pub fn sample_arcs(scene: &SphereScene, resolution: usize) -> Result<Vec<ArcSample>> {
    if resolution < 8 {
        return Err(Error::InvalidInput(format!(
            "resolution must be at least 8, got {resolution}"
        )));
    }
    let a = scene.a_pole.into_inner();
    let segments = |span: f64| (resolution - 1).max((span / MAX_SAMPLE_STEP).ceil() as usize);
    let world = |d: &Vector3| scene.center + scene.radius * d;

    let meridian = |label: &str, through: &Vector3| {
        let n = segments(PI);
        let mut points: Vec<_> = (0..=n)
            .map(|i| {
                let (s, c) = (PI * i as f64 / n as f64).sin_cos();
                world(&(c * a + s * through))
            })
            .collect();
        points[0] = world(&a);
        points[n] = world(&-a);
        ArcSample {
            label: label.to_string(),
            points,
        }
    };
    let latitude = |label: &str, t: f64| {
        let (s, c) = (t * FRAC_PI_2).sin_cos();
        let n = segments(scene.phi.max(0.0));
        let points = (0..=n)
            .map(|i| {
                let az = scene.phi * i as f64 / n as f64;
                world(&(c * a + s * turn(&scene.a_pole, az, &scene.p2_initial)))
            })
            .collect();
        ArcSample {
            label: label.to_string(),
            points,
        }
    };
    let single = |label: &str, d: &Vector3| ArcSample {
        label: label.to_string(),
        points: vec![world(d)],
    };

    let d = scene.bisector().into_inner();
    let d_image = scene.bisector_image().into_inner();
    let p2i = scene.p2_initial.into_inner();
    let p2f = scene.p2_final.into_inner();

    let mut arcs = vec![
        meridian("A-P2i-B", &p2i),
        meridian("A-D-B", &d),
        meridian("A-P2f-B", &p2f),
        meridian("A-Dp-B", &d_image),
        latitude("P2i-D-P2f", 1.0),
        latitude("L-M-N", 0.5),
        latitude("H-Q-S", 0.25),
    ];

    let invariant = match invariant_point_by_root(scene) {
        Ok(x) => Some(x.direction.into_inner()),
        Err(Error::NoRotation | Error::DegenerateScene(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some(x) = invariant {
        let n = segments(2.0 * PI);
        let mut points: Vec<_> = (0..=n)
            .map(|i| world(&turn(&scene.p2_final, 2.0 * PI * i as f64 / n as f64, &x)))
            .collect();
        points[0] = world(&x);
        points[n] = world(&x);
        arcs.push(ArcSample {
            label: "lat-X".into(),
            points,
        });
    }

    arcs.extend([
        single("A", &a),
        single("B", &-a),
        single("D", &d),
        single("Dp", &d_image),
        single("P2i", &p2i),
        single("P2f", &p2f),
    ]);
    if let Some(x) = invariant {
        arcs.push(single("X", &x));
    }
    Ok(arcs)
}
