mod common;

use common::*;
use proptest::prelude::*;
use rigidkin::tolerance::EPS_RIGID;
use rigidkin::{
    angle_between, axis_angle_from_rotation, chasles_decompose, chasles_independence_check,
    decompose_three_step, euler_axis, planar_decompose, rotation_deviation, screw_decompose,
    PlanarKind, Point2, Point3, RigidDisplacement, Rotation, ScrewKind, TripleConfiguration,
    TwoRotationDecomposition, UnitVector3, Vector2, Vector3,
};

fn triple() -> impl Strategy<Value = TripleConfiguration> {
    (point(5.0), point(5.0), point(5.0)).prop_filter_map("non-degenerate triple", |(a, b, c)| {
        let longest = (b - a).norm().max((c - a).norm()).max((c - b).norm());
        let area = 0.5 * (b - a).cross(&(c - a)).norm();
        (area > 1e-2 * longest * longest)
            .then(|| TripleConfiguration::new(a, b, c).ok())
            .flatten()
    })
}

fn image(t: &TripleConfiguration, d: &RigidDisplacement) -> TripleConfiguration {
    let [a, b, c] = t.points().map(|p| d.apply(&p));
    TripleConfiguration::new(a, b, c).unwrap()
}

fn diameter(t: &TripleConfiguration) -> f64 {
    let [a, b, c] = *t.points();
    (b - a).norm().max((c - a).norm()).max((c - b).norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn three_step_replay(t in triple(), d in displacement()) {
        let fin = image(&t, &d);
        let dec = decompose_three_step(&t, &fin).unwrap();
        let scale = diameter(&t);
        for (p, q) in t.points().iter().zip(fin.points()) {
            prop_assert!((dec.apply(p) - q).norm() <= EPS_RIGID * scale);
        }
        prop_assert!((0.0..2.0 * std::f64::consts::PI).contains(&dec.phi));
        prop_assert!(dec.theta > -std::f64::consts::PI && dec.theta <= std::f64::consts::PI);
        prop_assert!(dec.ab_axis.dot(&dec.second_axis).abs() <= 1e-12);
    }

    #[test]
    fn three_step_skip_case(t in triple(), angle in angle(), shift in vector(10.0)) {
        // rotate about the line P1P2, then translate: P2″ coincides with P2′
        let axis = UnitVector3::new_normalize(t.p2() - t.p1());
        let d = RigidDisplacement::new(Rotation::from_axis_angle(&axis, angle), *t.p1(), shift);
        let fin = image(&t, &d);
        let dec = decompose_three_step(&t, &fin).unwrap();
        prop_assert_eq!(dec.phi, 0.0);
        prop_assert!(dec.ab_axis.dot(&dec.second_axis).abs() <= 1e-12);
        for (p, q) in t.points().iter().zip(fin.points()) {
            prop_assert!((dec.apply(p) - q).norm() <= EPS_RIGID * diameter(&t));
        }
    }

    #[test]
    fn euler_axis_is_fixed_and_matches_oracle(phi in 0.0..2.0 * std::f64::consts::PI, theta in angle(), n in unit_vector()) {
        let second = UnitVector3::new_normalize(n.cross(&rigidkin::canonical_perpendicular(&n)));
        let dec = TwoRotationDecomposition {
            translation: Vector3::zeros(),
            ab_axis: n,
            phi,
            second_axis: second,
            theta,
            fixed_point: Point3::origin(),
        };
        let r = euler_axis(&dec);
        if r.is_axis_defined() {
            let axis = r.axis().into_inner();
            prop_assert!((r.rotate_vector(&axis) - axis).norm() <= 1e-10);
        }
        let oracle = axis_angle_from_rotation(&(dec.second_rotation().matrix() * dec.ab_rotation().matrix())).unwrap();
        let dev = rotation_deviation(&oracle, &r);
        prop_assert!(dev.axis <= 1e-9 && dev.angle <= 1e-9, "{dev:?}");
    }

    #[test]
    fn chasles_rotation_is_independent_of_translating_point(
        t in triple(),
        d in displacement(),
        samples in proptest::collection::vec(point(20.0), 2..8),
    ) {
        let fin = image(&t, &d);
        let rep = chasles_independence_check(&t, &fin, &samples).unwrap();
        prop_assert!(rep.passed, "{rep:?}");
        for q in &samples {
            let c = chasles_decompose(&t, &fin, q).unwrap();
            for p in t.points() {
                prop_assert!((c.apply(p) - d.apply(p)).norm() <= 1e-9 * (1.0 + (p - q).norm()));
            }
        }
    }

    #[test]
    fn screw_reconstruction(d in displacement(), probes in proptest::collection::vec(point(10.0), 100)) {
        let s = screw_decompose(&d);
        for p in &probes {
            let scale = 1.0 + (p - d.base_point).norm();
            prop_assert!((s.apply(p) - d.apply(p)).norm() <= EPS_RIGID * scale);
        }
        let slide = s.to_displacement().translation;
        prop_assert!(slide.cross(&s.axis_dir).norm() <= 1e-10);
        if s.kind == ScrewKind::Screw {
            prop_assert!((s.axis_point - d.base_point).dot(&s.axis_dir).abs() <= 1e-10 * (1.0 + (s.axis_point - d.base_point).norm()));
        }
    }

    #[test]
    fn planar_fixed_point(angle in angle(), tx in -10.0..10.0f64, ty in -10.0..10.0f64,
                          pts in proptest::collection::vec((-5.0..5.0f64, -5.0..5.0f64), 3)) {
        let initial = [0, 1, 2].map(|i| Point2::new(pts[i].0, pts[i].1));
        let area = {
            let (u, v) = (initial[1] - initial[0], initial[2] - initial[0]);
            u.x * v.y - u.y * v.x
        };
        prop_assume!(area.abs() > 0.5);
        let (s, c) = angle.sin_cos();
        let map = |p: &Point2| Point2::new(c * p.x - s * p.y + tx, s * p.x + c * p.y + ty);
        let fin = initial.map(|p| map(&p));
        let dec = planar_decompose(&initial, &fin).unwrap();
        match dec.kind {
            PlanarKind::Rotation => {
                prop_assert!((map(&dec.center) - dec.center).norm() <= 1e-10 * (1.0 + dec.center.coords.norm()));
                prop_assert!((dec.angle - angle).abs() <= 1e-9);
            }
            PlanarKind::Translation => prop_assert!((dec.translation - Vector2::new(tx, ty)).norm() <= 1e-9),
            PlanarKind::Identity => prop_assert!(tx.hypot(ty) < 1e-9),
        }
        for (p, q) in initial.iter().zip(&fin) {
            prop_assert!((dec.apply(p) - q).norm() <= 1e-9 * (1.0 + q.coords.norm()));
        }
        let mirrored = fin.map(|p| Point2::new(-p.x, p.y));
        prop_assert_eq!(planar_decompose(&initial, &mirrored), Err(rigidkin::Error::ReflectionNotAllowed));
    }
}

#[test]
fn chasles_at_two_points_for_quarter_turn() {
    let t = TripleConfiguration::new(
        Point3::origin(),
        Point3::new(1.0, 0.0, 0.0),
        Point3::new(0.0, 0.0, 1.0),
    )
    .unwrap();
    let d = RigidDisplacement::new(
        Rotation::from_axis_angle(&Vector3::z_axis(), std::f64::consts::FRAC_PI_2),
        Point3::origin(),
        Vector3::zeros(),
    );
    let fin = image(&t, &d);
    let a = chasles_decompose(&t, &fin, &Point3::new(2.0, 0.0, 0.0)).unwrap();
    let b = chasles_decompose(&t, &fin, &Point3::new(0.0, -1.0, 5.0)).unwrap();
    let dev = rotation_deviation(&a.rotation, &b.rotation);
    assert!(dev.axis < 1e-12 && dev.angle < 1e-12);
    assert!((a.translation - b.translation).norm() > 1.0);
    assert!(angle_between(a.rotation.axis(), &Vector3::z()) < 1e-12);
}
