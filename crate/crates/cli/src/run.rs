use rigidkin::spherical::{
    build_scene, invariant_point_by_half_angle, invariant_point_by_root, sample_arcs,
};
use rigidkin::tolerance::{EPS_ORTH, EPS_RIGID};
use rigidkin::{
    angle_between, axis_angle_from_rotation, chasles_decompose, chasles_independence_check,
    decompose_three_step, euler_axis, fourth_point_positions, planar_decompose, rotation_deviation,
    screw_decompose, signed_volume, validate_rigidity, Error, FourthPointProblem, PlanarKind,
    Point2, Point3, Result, Rotation, ScrewKind, TripleConfiguration, TwoRotationDecomposition,
    Vector2, Vector3,
};

use crate::config::ConfigurationFile;
use crate::report::*;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NOT_RIGID: u8 = 2;
pub const EXIT_INVALID: u8 = 3;
pub const EXIT_RESIDUAL: u8 = 4;

/// Tolerance for the axis and angle comparisons between independent routes.
const AXIS_TOLERANCE: f64 = 1e-9;
/// Two constructions of the invariant point must agree to this arc length.
const CONSTRUCTION_TOLERANCE: f64 = 1e-8;
/// Relative distance between a trilaterated point and its observed position.
const POSITION_TOLERANCE: f64 = 1e-6;
const DEFAULT_RESOLUTION: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Decompose,
    Screw,
    Planar,
    FourthPoint,
    Trace,
    Verify,
}

impl Command {
    pub const ALL: [Command; 6] = [
        Command::Decompose,
        Command::Screw,
        Command::Planar,
        Command::FourthPoint,
        Command::Trace,
        Command::Verify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Decompose => "decompose",
            Command::Screw => "screw",
            Command::Planar => "planar",
            Command::FourthPoint => "fourth-point",
            Command::Trace => "trace",
            Command::Verify => "verify",
        }
    }

    pub fn from_name(name: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.name() == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    #[default]
    Table,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Flags {
    pub format: Format,
    pub degrees: bool,
    /// Overrides the translating point of the input document.
    pub translating_point: Option<Point3>,
    pub resolution: usize,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            format: Format::Table,
            degrees: false,
            translating_point: None,
            resolution: DEFAULT_RESOLUTION,
        }
    }
}

pub fn exit_code(error: &Error) -> u8 {
    match error {
        Error::NotRigid { .. } | Error::ReflectionNotAllowed | Error::InconsistentConstraints => {
            EXIT_NOT_RIGID
        }
        Error::ResidualExceeded { .. } | Error::NotARotation(_) | Error::RadiusMismatch { .. } => {
            EXIT_RESIDUAL
        }
        _ => EXIT_INVALID,
    }
}

/// Runs one subcommand. The report is filled as far as the computation got;
/// `error` holds the message of the failure that stopped it.
pub fn run_subcommand(
    command: Command,
    config: &ConfigurationFile,
    flags: &Flags,
) -> (RunReport, u8) {
    let mut report = RunReport::new(command.name(), config.clone(), flags.degrees);
    let outcome =
        Run::new(config, flags, &mut report).and_then(|run| run.dispatch(command, &mut report));
    let code = match outcome {
        Ok(()) if report.checks.iter().all(|c| c.passed) => EXIT_OK,
        Ok(()) => EXIT_RESIDUAL,
        Err(e) => {
            report.error = Some(e.to_string());
            exit_code(&e)
        }
    };
    report.passed = code == EXIT_OK;
    (report, code)
}

fn arr(p: &Point3) -> Triple {
    [p.x, p.y, p.z]
}

fn vec3(v: &Vector3) -> Triple {
    [v.x, v.y, v.z]
}

fn vec2(v: &Vector2) -> [f64; 2] {
    [v.x, v.y]
}

fn check(report: &mut RunReport, name: &str, residual: f64, tolerance: f64) {
    report
        .checks
        .push(CheckRecord::new(name, residual, tolerance));
}

struct Run<'a> {
    config: &'a ConfigurationFile,
    flags: &'a Flags,
    initial: Vec<Point3>,
    fin: Vec<Point3>,
    diameter: f64,
    triple: [usize; 3],
    tri_initial: TripleConfiguration,
    tri_final: TripleConfiguration,
    translating_point: Point3,
}

impl<'a> Run<'a> {
    fn new(
        config: &'a ConfigurationFile,
        flags: &'a Flags,
        report: &mut RunReport,
    ) -> Result<Self> {
        if flags.format == Format::Csv && report.command != Command::Trace.name() {
            return Err(Error::InvalidInput(
                "csv output is only available for trace".into(),
            ));
        }
        let (initial, fin) = config.point_pairs();
        let rigidity = validate_rigidity(&initial, &fin)?;
        report.rigidity = Some(RigidityRecord {
            max_discrepancy: rigidity.max_discrepancy,
            tolerance: EPS_RIGID,
            handedness: format!("{:?}", rigidity.handedness).to_lowercase(),
            accepted: rigidity.accepted,
        });
        check(
            report,
            "rigidity.distances",
            rigidity.max_discrepancy,
            EPS_RIGID,
        );
        rigidity.into_result()?;

        let n = initial.len();
        let triple = (0..n)
            .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| [i, j, k])))
            .find(|&[i, j, k]| TripleConfiguration::new(initial[i], initial[j], initial[k]).is_ok())
            .ok_or(Error::DegenerateTriple)?;
        let [i, j, k] = triple;
        let tri_initial = TripleConfiguration::new(initial[i], initial[j], initial[k])?;
        let tri_final = TripleConfiguration::new(fin[i], fin[j], fin[k])?;
        report.triple = Some(triple.map(|t| config.initial[t].label.clone()));

        let diameter = initial
            .iter()
            .flat_map(|p| initial.iter().map(move |q| (p - q).norm()))
            .fold(0.0, f64::max);
        let translating_point = flags
            .translating_point
            .or_else(|| config.translating_point.map(|c| c.to_point()))
            .unwrap_or(initial[i]);
        Ok(Run {
            config,
            flags,
            initial,
            fin,
            diameter,
            triple,
            tri_initial,
            tri_final,
            translating_point,
        })
    }

    fn dispatch(&self, command: Command, report: &mut RunReport) -> Result<()> {
        match command {
            Command::Decompose => self.decompose(report).map(drop),
            Command::Screw => self.screw(report),
            Command::Planar => self.planar(report),
            Command::FourthPoint => self.fourth_point(report),
            Command::Trace => self
                .decompose(report)
                .and_then(|dec| self.trace(&dec, report)),
            Command::Verify => {
                let dec = self.decompose(report)?;
                self.trace(&dec, report)?;
                self.screw(report)?;
                self.independence(report)?;
                self.fourth_point(report)?;
                if self.config.is_planar() {
                    self.planar(report)?;
                }
                report.arcs = None;
                Ok(())
            }
        }
    }

    fn angle(&self, radians: f64) -> f64 {
        if self.flags.degrees {
            radians.to_degrees()
        } else {
            radians
        }
    }

    fn rotation_record(&self, r: &Rotation, through: &Point3) -> RotationRecord {
        RotationRecord {
            axis: vec3(r.axis()),
            angle: self.angle(r.angle()),
            axis_defined: r.is_axis_defined(),
            through: arr(through),
        }
    }

    /// Largest replay error over all points, relative to the body size.
    fn replay_residual(&self, map: impl Fn(&Point3) -> Point3) -> f64 {
        let worst = self
            .initial
            .iter()
            .zip(&self.fin)
            .map(|(p, q)| (map(p) - q).norm())
            .fold(0.0, f64::max);
        worst / self.diameter
    }

    fn decompose(&self, report: &mut RunReport) -> Result<TwoRotationDecomposition> {
        let dec = decompose_three_step(&self.tri_initial, &self.tri_final)?;
        report.three_step = Some(ThreeStepRecord {
            translation: vec3(&dec.translation),
            ab_axis: vec3(&dec.ab_axis),
            phi: self.angle(dec.phi),
            second_axis: vec3(&dec.second_axis),
            theta: self.angle(dec.theta),
            fixed_point: arr(&dec.fixed_point),
        });
        check(
            report,
            "three_step.replay",
            self.replay_residual(|p| dec.apply(p)),
            EPS_RIGID,
        );

        let r = euler_axis(&dec);
        report.euler_axis = Some(self.rotation_record(&r, &dec.fixed_point));
        let axis = r.axis().into_inner();
        check(
            report,
            "euler_axis.fixed",
            (r.rotate_vector(&axis) - axis).norm(),
            EPS_ORTH,
        );
        let oracle = axis_angle_from_rotation(
            &(dec.second_rotation().matrix() * dec.ab_rotation().matrix()),
        )?;
        let dev = rotation_deviation(&oracle, &r);
        check(
            report,
            "euler_axis.oracle",
            dev.axis.max(dev.angle),
            AXIS_TOLERANCE,
        );

        let scene = build_scene(
            &dec,
            &(self.tri_initial.p2() + dec.translation),
            self.tri_final.p2(),
        )?;
        match (
            invariant_point_by_root(&scene),
            invariant_point_by_half_angle(&scene),
        ) {
            (Ok(x), Ok(y)) => {
                report.invariant_point = Some(InvariantPointRecord {
                    by_root: arr(&scene.to_world(&x)),
                    by_half_angle: arr(&scene.to_world(&y)),
                });
                let (x, y) = (x.direction.into_inner(), y.direction.into_inner());
                let composed = scene.composed_rotation();
                check(
                    report,
                    "invariant_point.fixed",
                    (composed.rotate_vector(&x) - x).norm(),
                    EPS_RIGID,
                );
                check(
                    report,
                    "invariant_point.constructions",
                    angle_between(&x, &y),
                    CONSTRUCTION_TOLERANCE,
                );
                if r.is_axis_defined() {
                    let line = angle_between(&x, &axis).min(angle_between(&-x, &axis));
                    check(report, "invariant_point.axis", line, AXIS_TOLERANCE);
                }
            }
            (Err(Error::NoRotation | Error::DegenerateScene(_)), _)
            | (_, Err(Error::NoRotation | Error::DegenerateScene(_))) => {}
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }

        let tp = self.translating_point;
        let c = chasles_decompose(&self.tri_initial, &self.tri_final, &tp)?;
        report.chasles = Some(ChaslesRecord {
            translating_point: arr(&tp),
            translation: vec3(&c.translation),
            axis: vec3(c.rotation.axis()),
            angle: self.angle(c.rotation.angle()),
        });
        let reach = self
            .initial
            .iter()
            .map(|p| (p - tp).norm())
            .fold(self.diameter, f64::max);
        let replay = self.replay_residual(|p| c.apply(p)) * self.diameter / reach;
        check(report, "chasles.replay", replay, EPS_RIGID);
        Ok(dec)
    }

    fn independence(&self, report: &mut RunReport) -> Result<()> {
        let mut samples = vec![self.translating_point];
        samples.extend(&self.initial);
        let centroid = self
            .initial
            .iter()
            .fold(Vector3::zeros(), |s, p| s + p.coords)
            / self.initial.len() as f64;
        samples.push(Point3::from(centroid));
        let rep = chasles_independence_check(&self.tri_initial, &self.tri_final, &samples)?;
        check(
            report,
            "chasles.independence",
            rep.max_axis_deviation.max(rep.max_angle_difference),
            EPS_RIGID,
        );
        Ok(())
    }

    fn screw(&self, report: &mut RunReport) -> Result<()> {
        let c = chasles_decompose(&self.tri_initial, &self.tri_final, &self.translating_point)?;
        let s = screw_decompose(&c);
        report.screw = Some(ScrewRecord {
            kind: match s.kind {
                ScrewKind::Screw => "screw",
                ScrewKind::PureTranslation => "pure_translation",
                ScrewKind::Identity => "identity",
            }
            .to_string(),
            axis_point: arr(&s.axis_point),
            axis_dir: vec3(&s.axis_dir),
            angle: self.angle(s.angle),
            slide: s.slide,
        });
        let reach = self
            .initial
            .iter()
            .map(|p| (p - s.axis_point).norm())
            .fold(self.diameter, f64::max);
        let replay = self.replay_residual(|p| s.apply(p)) * self.diameter / reach;
        check(report, "screw.replay", replay, EPS_RIGID);
        let slide = s.to_displacement().translation;
        check(
            report,
            "screw.parallel",
            slide.cross(&s.axis_dir).norm(),
            1e-10,
        );
        Ok(())
    }

    fn planar(&self, report: &mut RunReport) -> Result<()> {
        if !self.config.is_planar() {
            return Err(Error::InvalidInput(
                "planar needs mode 2d or every z equal to 0".into(),
            ));
        }
        let flat = |p: &Point3| Point2::new(p.x, p.y);
        let initial = self.triple.map(|t| flat(&self.initial[t]));
        let fin = self.triple.map(|t| flat(&self.fin[t]));
        let dec = planar_decompose(&initial, &fin)?;
        report.planar = Some(PlanarRecord {
            kind: format!("{:?}", dec.kind).to_lowercase(),
            center: [dec.center.x, dec.center.y],
            angle: self.angle(dec.angle),
            translation: vec2(&dec.translation),
        });
        let replay = self.replay_residual(|p| {
            let q = dec.apply(&flat(p));
            Point3::new(q.x, q.y, 0.0)
        });
        check(report, "planar.replay", replay, EPS_RIGID);
        if dec.kind == PlanarKind::Rotation {
            // the motion read directly off the first two points
            let (u, v) = (initial[1] - initial[0], fin[1] - fin[0]);
            let (s, c) = (u.x * v.y - u.y * v.x).atan2(u.dot(&v)).sin_cos();
            let w = dec.center - initial[0];
            let moved = fin[0] + Vector2::new(c * w.x - s * w.y, s * w.x + c * w.y);
            check(
                report,
                "planar.fixed_point",
                (moved - dec.center).norm(),
                1e-10 * (1.0 + dec.center.coords.norm()),
            );
        }
        Ok(())
    }

    fn fourth_point(&self, report: &mut RunReport) -> Result<()> {
        let [i, j, k] = self.triple;
        let mut records = Vec::new();
        for m in (0..self.initial.len()).filter(|m| !self.triple.contains(m)) {
            let p = self.initial[m];
            let d = [i, j, k].map(|t| (p - self.initial[t]).norm());
            let [a, b, c] = *self.tri_final.points();
            let problem = FourthPointProblem::new(a, b, c, d[0], d[1], d[2])?;
            let candidates = fourth_point_positions(&problem)?.points();
            let volume = signed_volume(&self.initial[i], &self.initial[j], &self.initial[k], &p);
            let selected = *candidates
                .iter()
                .min_by(|x, y| {
                    let dx = (signed_volume(&a, &b, &c, x) - volume).abs();
                    let dy = (signed_volume(&a, &b, &c, y) - volume).abs();
                    dx.total_cmp(&dy)
                })
                .expect("at least one solution");
            let label = &self.config.initial[m].label;
            check(
                report,
                &format!("fourth_point.{label}.residual"),
                problem.residual(&selected),
                EPS_RIGID,
            );
            check(
                report,
                &format!("fourth_point.{label}.position"),
                (selected - self.fin[m]).norm() / self.diameter,
                POSITION_TOLERANCE,
            );
            records.push(FourthPointRecord {
                label: label.clone(),
                distances: d,
                solutions: candidates.iter().map(arr).collect(),
                selected: arr(&selected),
                observed: arr(&self.fin[m]),
            });
        }
        report.fourth_point = Some(records);
        Ok(())
    }

    fn trace(&self, dec: &TwoRotationDecomposition, report: &mut RunReport) -> Result<()> {
        let scene = build_scene(
            dec,
            &(self.tri_initial.p2() + dec.translation),
            self.tri_final.p2(),
        )?;
        let arcs = sample_arcs(&scene, self.flags.resolution)?;
        let off_sphere = arcs
            .iter()
            .flat_map(|a| &a.points)
            .map(|p| ((p - scene.center()).norm() - scene.radius()).abs() / scene.radius())
            .fold(0.0, f64::max);
        check(report, "trace.on_sphere", off_sphere, EPS_RIGID);
        report.arcs = Some(
            arcs.into_iter()
                .map(|a| ArcRecord {
                    label: a.label,
                    points: a.points.iter().map(arr).collect(),
                })
                .collect(),
        );
        Ok(())
    }
}
