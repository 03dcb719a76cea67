use std::f64::consts::{PI, TAU};
use std::path::PathBuf;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rigidkin::spherical::{
    invariant_point_by_half_angle, invariant_point_by_root, latitude_return_angle, SphereScene,
};
use rigidkin::{
    angle_between, axis_angle_from_rotation, chasles_decompose, decompose_three_step,
    fourth_point_positions, planar_decompose, rotation_deviation, screw_decompose, Error,
    FourthPointProblem, FourthPointSolution, PlanarKind, Point2, Point3, RigidDisplacement,
    Rotation, ScrewKind, TripleConfiguration, UnitVector3, Vector2, Vector3,
};
use rigidkin_cli::RunReport;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn verdict(n: u32, name: &str, passed: bool, detail: String) {
    println!(
        "criterion {n:>2} {name:<26} {} {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {n} ({name}) failed: {detail}");
}

fn unit(rng: &mut ChaCha8Rng) -> UnitVector3 {
    loop {
        let v = Vector3::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        if (0.01..=1.0).contains(&v.norm_squared()) {
            return UnitVector3::new_normalize(v);
        }
    }
}

fn point(rng: &mut ChaCha8Rng, scale: f64) -> Point3 {
    Point3::new(
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
    )
}

/// Angle in `(-π, π]`.
fn angle(rng: &mut ChaCha8Rng) -> f64 {
    PI - rng.random_range(0.0..TAU)
}

fn displacement(rng: &mut ChaCha8Rng) -> RigidDisplacement {
    let rotation = Rotation::from_axis_angle(&unit(rng), angle(rng));
    let base = point(rng, 10.0);
    let shift = point(rng, 10.0).coords;
    RigidDisplacement::new(rotation, base, shift)
}

fn triple(rng: &mut ChaCha8Rng) -> TripleConfiguration {
    loop {
        let [a, b, c] = [0; 3].map(|_| point(rng, 5.0));
        let longest = (b - a).norm().max((c - a).norm()).max((c - b).norm());
        if (b - a).cross(&(c - a)).norm() > 1e-2 * longest * longest {
            return TripleConfiguration::new(a, b, c).unwrap();
        }
    }
}

fn image(t: &TripleConfiguration, d: &RigidDisplacement) -> TripleConfiguration {
    let [a, b, c] = t.points().map(|p| d.apply(&p));
    TripleConfiguration::new(a, b, c).unwrap()
}

fn scene(rng: &mut ChaCha8Rng, phi: f64, theta: f64) -> SphereScene {
    let pole = unit(rng);
    loop {
        let v = unit(rng).into_inner();
        let across = v - v.dot(&pole) * pole.into_inner();
        if across.norm() > 0.1 {
            let radius = rng.random_range(0.1..10.0);
            return SphereScene::new(point(rng, 5.0), radius, pole, &across, phi, theta).unwrap();
        }
    }
}

fn nonzero_theta(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let t = angle(rng);
        if t != 0.0 {
            return t;
        }
    }
}

#[test]
fn criterion_01_euler_theorem() {
    let mut rng = rng(1);
    let (mut fixed, mut axis) = (0.0_f64, 0.0_f64);
    for _ in 0..10_000 {
        let phi = loop {
            let p = rng.random_range(0.0..TAU);
            if p > 0.0 {
                break p;
            }
        };
        let theta = nonzero_theta(&mut rng);
        let s = scene(&mut rng, phi, theta);
        let x = invariant_point_by_root(&s).unwrap().direction.into_inner();
        let r = s.composed_rotation();
        fixed = fixed.max((r.rotate_vector(&x) - x).norm());
        let oracle = axis_angle_from_rotation(r.matrix()).unwrap();
        if oracle.is_axis_defined() {
            let n = oracle.axis();
            axis = axis.max(angle_between(&x, n).min(angle_between(&-x, n)));
        }
    }
    verdict(
        1,
        "euler theorem",
        fixed <= 1e-9 && axis <= 1e-9,
        format!("10000 scenes, max |RX-X| {fixed:.2e}, max axis deviation {axis:.2e} rad"),
    );
}

#[test]
fn criterion_02_construction_consistency() {
    let mut rng = rng(2);
    let (mut agree, mut fixed) = (0.0_f64, 0.0_f64);
    for i in 0..20 {
        for j in 0..20 {
            let phi = TAU * (i as f64 + 1.0) / 21.0;
            let theta = -PI + TAU * (j as f64 + 0.5) / 20.0;
            let s = scene(&mut rng, phi, theta);
            let r = s.composed_rotation();
            let x = invariant_point_by_root(&s).unwrap().direction.into_inner();
            let y = invariant_point_by_half_angle(&s)
                .unwrap()
                .direction
                .into_inner();
            agree = agree.max(angle_between(&x, &y));
            for p in [x, y] {
                fixed = fixed.max((r.rotate_vector(&p) - p).norm());
            }
        }
    }
    verdict(
        2,
        "construction consistency",
        agree <= 1e-8 && fixed <= 1e-9,
        format!("20x20 grid, max arc between constructions {agree:.2e}, max |RX-X| {fixed:.2e}"),
    );
}

#[test]
fn criterion_03_ordering_lemma() {
    let mut rng = rng(3);
    let (mut increasing, mut endpoints) = (true, 0.0_f64);
    for _ in 0..50 {
        let phi = rng.random_range(1e-3..TAU - 1e-3);
        let theta = nonzero_theta(&mut rng);
        let s = scene(&mut rng, phi, theta);
        let values: Vec<f64> = (0..200)
            .map(|i| latitude_return_angle(&s, i as f64 / 199.0).unwrap())
            .collect();
        increasing &= values.windows(2).all(|w| w[1] > w[0]);
        endpoints = endpoints.max(values[0].abs()).max((values[199] - PI).abs());
    }
    verdict(
        3,
        "ordering lemma",
        increasing && endpoints <= 1e-9,
        format!("50 scenes x 200 points, strictly increasing {increasing}, endpoint error {endpoints:.2e}"),
    );
}

#[test]
fn criterion_04_three_step_round_trip() {
    let mut rng = rng(4);
    let (mut worst, mut skips) = (0.0_f64, 0);
    for n in 0..10_000 {
        let t = triple(&mut rng);
        let d = if n % 10 == 0 {
            // a turn about line P1P2 plus a shift leaves P2″ on P2′
            let axis = UnitVector3::new_normalize(t.p2() - t.p1());
            let shift = point(&mut rng, 10.0).coords;
            RigidDisplacement::new(
                Rotation::from_axis_angle(&axis, angle(&mut rng)),
                *t.p1(),
                shift,
            )
        } else {
            displacement(&mut rng)
        };
        let fin = image(&t, &d);
        let dec = decompose_three_step(&t, &fin).unwrap();
        if dec.phi == 0.0 {
            skips += 1;
        }
        let [a, b, c] = *t.points();
        let scale = (b - a).norm().max((c - a).norm()).max((c - b).norm());
        for (p, q) in t.points().iter().zip(fin.points()) {
            worst = worst.max((dec.apply(p) - q).norm() / scale);
        }
    }
    verdict(
        4,
        "three-step round trip",
        worst <= 1e-9 && skips >= 1000,
        format!("10000 displacements, {skips} skip cases, max relative error {worst:.2e}"),
    );
}

#[test]
fn criterion_05_chasles_independence() {
    let mut rng = rng(5);
    let (mut axis, mut angle_diff) = (0.0_f64, 0.0_f64);
    for _ in 0..1000 {
        let t = triple(&mut rng);
        let fin = image(&t, &displacement(&mut rng));
        let rotations: Vec<Rotation> = (0..10)
            .map(|_| {
                chasles_decompose(&t, &fin, &point(&mut rng, 20.0))
                    .unwrap()
                    .rotation
            })
            .collect();
        for r in &rotations[1..] {
            let dev = rotation_deviation(&rotations[0], r);
            axis = axis.max(dev.axis);
            angle_diff = angle_diff.max(dev.angle);
        }
    }
    verdict(
        5,
        "chasles independence",
        axis <= 1e-9 && angle_diff <= 1e-9,
        format!("1000 displacements x 10 points, max axis deviation {axis:.2e}, max angle difference {angle_diff:.2e}"),
    );
}

#[test]
fn criterion_06_screw_reconstruction() {
    let mut rng = rng(6);
    let (mut worst, mut perpendicular) = (0.0_f64, 0.0_f64);
    let probes: Vec<Point3> = (0..100).map(|_| point(&mut rng, 10.0)).collect();
    let mut check = |d: &RigidDisplacement| {
        let s = screw_decompose(d);
        for p in &probes {
            let scale = 1.0 + (p - d.base_point).norm();
            worst = worst.max((s.apply(p) - d.apply(p)).norm() / scale);
        }
        let slide = s.to_displacement().translation;
        perpendicular = perpendicular.max(slide.cross(&s.axis_dir).norm());
        s
    };
    for _ in 0..10_000 {
        check(&displacement(&mut rng));
    }

    let half_turn = RigidDisplacement::new(
        Rotation::from_axis_angle(&Vector3::z_axis(), PI),
        Point3::origin(),
        Vector3::new(1.0, 0.0, 0.0),
    );
    let s = check(&half_turn);
    let half_turn_ok = s.kind == ScrewKind::Screw
        && (s.axis_point - Point3::new(0.5, 0.0, 0.0)).norm() <= 1e-12
        && (s.angle - PI).abs() <= 1e-12
        && s.slide.abs() <= 1e-12;
    let s = check(&RigidDisplacement::from_translation(Vector3::new(
        1.0, 2.0, -2.0,
    )));
    let translation_ok = s.kind == ScrewKind::PureTranslation
        && (s.slide - 3.0).abs() <= 1e-12
        && (s.axis_dir.into_inner() - Vector3::new(1.0, 2.0, -2.0) / 3.0).norm() <= 1e-12;
    let s = check(&RigidDisplacement::identity());
    let identity_ok = s.kind == ScrewKind::Identity && s.slide == 0.0 && s.angle == 0.0;

    verdict(
        6,
        "screw reconstruction",
        worst <= 1e-9 && perpendicular <= 1e-10 && half_turn_ok && translation_ok && identity_ok,
        format!(
            "10000 displacements x 100 probes, max error {worst:.2e}, max perpendicular slide {perpendicular:.2e}, \
             half turn {half_turn_ok}, pure translation {translation_ok}, identity {identity_ok}"
        ),
    );
}

#[test]
fn criterion_07_planar_corollary() {
    let mut rng = rng(7);
    let (mut fixed, mut rejected, mut kinds) = (0.0_f64, 0, [0; 3]);
    let mut cases = 0;
    while cases < 1000 {
        let initial =
            [0; 3].map(|_| Point2::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)));
        let (u, v) = (initial[1] - initial[0], initial[2] - initial[0]);
        if (u.x * v.y - u.y * v.x).abs() < 0.5 {
            continue;
        }
        cases += 1;
        let (s, c) = angle(&mut rng).sin_cos();
        let t = Vector2::new(rng.random_range(-10.0..10.0), rng.random_range(-10.0..10.0));
        let map = |p: &Point2| Point2::new(c * p.x - s * p.y, s * p.x + c * p.y) + t;
        let fin = initial.map(|p| map(&p));
        let dec = planar_decompose(&initial, &fin).unwrap();
        match dec.kind {
            PlanarKind::Rotation => {
                kinds[0] += 1;
                fixed = fixed.max((map(&dec.center) - dec.center).norm());
            }
            PlanarKind::Translation => kinds[1] += 1,
            PlanarKind::Identity => kinds[2] += 1,
        }
        let mirrored = fin.map(|p| Point2::new(p.x, -p.y));
        if planar_decompose(&initial, &mirrored) == Err(Error::ReflectionNotAllowed) {
            rejected += 1;
        }
    }
    // the degenerate kinds need exact inputs
    let square = [
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(0.0, 1.0),
    ];
    let shifted = square.map(|p| p + Vector2::new(2.0, -1.0));
    let translation_ok = planar_decompose(&square, &shifted).is_ok_and(|d| {
        d.kind == PlanarKind::Translation && d.translation == Vector2::new(2.0, -1.0)
    });
    let identity_ok =
        planar_decompose(&square, &square).is_ok_and(|d| d.kind == PlanarKind::Identity);

    verdict(
        7,
        "planar corollary",
        fixed <= 1e-10 && rejected == 1000 && translation_ok && identity_ok,
        format!(
            "1000 motions ({} rotations), max fixed-point drift {fixed:.2e}, reflections rejected {rejected}/1000, \
             translation {translation_ok}, identity {identity_ok}",
            kinds[0]
        ),
    );
}

#[test]
fn criterion_08_trilateration() {
    let mut rng = rng(8);
    let (mut residual, mut recovered, mut mirrored, mut inconsistent) = (0.0_f64, 0.0_f64, true, 0);
    let mut cases = 0;
    while cases < 1000 {
        let [a, b, c, d] = [0; 4].map(|_| point(&mut rng, 10.0));
        let Ok(problem) = FourthPointProblem::from_planted(a, b, c, &d) else {
            continue;
        };
        cases += 1;
        let solution = fourth_point_positions(&problem).unwrap();
        for p in solution.points() {
            residual = residual.max(problem.residual(&p));
        }
        match solution {
            FourthPointSolution::Mirror(p, q) => {
                let scale = 1.0 + (d - a).norm();
                recovered = recovered.max((p - d).norm().min((q - d).norm()) / scale);
                let normal = (b - a).cross(&(c - a)).normalize();
                let (hp, hq) = ((p - a).dot(&normal), (q - a).dot(&normal));
                mirrored &= (hp + hq).abs() <= 1e-9 * scale
                    && ((p - q) - (hp - hq) * normal).norm() <= 1e-9 * scale;
            }
            FourthPointSolution::InPlane(p) => recovered = recovered.max((p - d).norm()),
        }

        // d1 longer than |AB| + d2 breaks the triangle inequality
        let [d1, d2, d3] = problem.distances();
        let bad = FourthPointProblem::new(a, b, c, d1 + (b - a).norm() + d2 + 1.0, d2, d3).unwrap();
        if fourth_point_positions(&bad) == Err(Error::InconsistentConstraints) {
            inconsistent += 1;
        }
    }
    verdict(
        8,
        "trilateration",
        residual <= 1e-9 && recovered <= 1e-9 && mirrored && inconsistent == 1000,
        format!(
            "1000 planted points, max residual {residual:.2e}, max recovery error {recovered:.2e}, \
             mirror pairs {mirrored}, inconsistent rejected {inconsistent}/1000"
        ),
    );
}

#[test]
fn criterion_09_oracle_validity() {
    let mut rng = rng(9);
    let (mut angle_err, mut axis_err) = (0.0_f64, 0.0_f64);
    for _ in 0..10_000 {
        let n = unit(&mut rng);
        let theta = angle(&mut rng);
        let m = Rotation::from_axis_angle(&n, theta).matrix().to_owned();
        let oracle = axis_angle_from_rotation(&m).unwrap();
        // normalize the sign convention: angle in [0, π]
        let (expected_axis, expected_angle) = if theta < 0.0 {
            (-n.into_inner(), -theta)
        } else {
            (n.into_inner(), theta)
        };
        angle_err = angle_err.max((oracle.angle().abs() - expected_angle).abs());
        let got = oracle.axis().into_inner() * oracle.angle().signum();
        let mut deviation = angle_between(&got, &expected_axis);
        if expected_angle > PI - 1e-9 {
            deviation = deviation.min(angle_between(&-got, &expected_axis));
        }
        axis_err = axis_err.max(deviation);
    }
    verdict(
        9,
        "oracle validity",
        angle_err <= 1e-9 && axis_err <= 1e-9,
        format!("10000 pairs, max angle error {angle_err:.2e}, max axis error {axis_err:.2e}"),
    );
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn run_json(subcommand: &str, input: &str) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_rigidkin"))
        .args([subcommand, "--format", "json", "--input"])
        .arg(golden(input))
        .output()
        .unwrap();
    (out.stdout, out.status.code().unwrap_or(-1))
}

#[test]
fn criterion_10_cli_golden() {
    let cases = [
        ("screw", "screw_half_turn"),
        ("planar", "planar_quarter_turn"),
        ("decompose", "composed_axis"),
    ];
    let mut stable = true;
    let mut reports = Vec::new();
    for (subcommand, name) in cases {
        let (first, code) = run_json(subcommand, &format!("{name}.json"));
        let (second, _) = run_json(subcommand, &format!("{name}.json"));
        let frozen = std::fs::read(golden(&format!("{name}.{subcommand}.expected.json"))).unwrap();
        stable &= code == 0 && first == second && first == frozen;
        reports.push(serde_json::from_slice::<RunReport>(&first).unwrap());
    }

    let screw = reports[0].screw.as_ref().unwrap();
    let screw_ok = (Point3::from(screw.axis_point) - Point3::new(0.5, 0.0, 0.0)).norm() <= 1e-12
        && screw.axis_dir[2].abs() >= 1.0 - 1e-12;
    let planar = reports[1].planar.as_ref().unwrap();
    let planar_ok = planar.kind == "rotation"
        && (Point2::from(planar.center) - Point2::new(0.5, 0.5)).norm() <= 1e-12
        && (planar.angle - PI / 2.0).abs() <= 1e-12;
    let euler = reports[2].euler_axis.as_ref().unwrap();
    let diagonal = Vector3::new(1.0, 1.0, 1.0).normalize();
    let axis_ok = (Vector3::from(euler.axis) - diagonal).norm() <= 1e-12
        && (euler.angle - TAU / 3.0).abs() <= 1e-12;

    verdict(
        10,
        "cli golden",
        stable && screw_ok && planar_ok && axis_ok,
        format!(
            "byte-stable {stable}, screw axis point (0.5,0,0) {screw_ok}, planar center (0.5,0.5) {planar_ok}, \
             composed axis (1,1,1)/sqrt3 {axis_ok}"
        ),
    );
}
