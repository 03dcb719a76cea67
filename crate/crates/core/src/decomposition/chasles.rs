use crate::tolerance::EPS_RIGID;
use crate::{
    decompose_three_step, euler_axis, rotation_deviation, Error, Point3, Result, RigidDisplacement,
    TripleConfiguration,
};

/// Translation of `translating_point` followed by a rotation about it.
///
/// The translating point `Q1` need not belong to the body. `Q2` and `Q3` are
/// attached to it by the same offsets that lead from `P1` to `P2` and `P3`;
/// their images under the motion form a congruent triple, and the three-step
/// decomposition of `Q → Q′` supplies the rotation.
pub fn chasles_decompose(
    initial: &TripleConfiguration,
    fin: &TripleConfiguration,
    translating_point: &Point3,
) -> Result<RigidDisplacement> {
    let motion = decompose_three_step(initial, fin)?;
    let [p1, p2, p3] = *initial.points();
    let q1 = *translating_point;
    let q = TripleConfiguration::new(q1, q1 + (p2 - p1), q1 + (p3 - p1))?;
    let q_image = TripleConfiguration::new(
        motion.apply(&q1),
        motion.apply(q.p2()),
        motion.apply(q.p3()),
    )?;
    let rebased = decompose_three_step(&q, &q_image)?;
    Ok(RigidDisplacement::new(
        euler_axis(&rebased),
        q1,
        rebased.translation,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndependenceReport {
    pub samples: usize,
    /// Largest angle between the rotation axis found at any translating point
    /// and the one found at the first.
    pub max_axis_deviation: f64,
    pub max_angle_difference: f64,
    pub passed: bool,
}

/// Runs [`chasles_decompose`] at every sample point and compares the rotations.
pub fn chasles_independence_check(
    initial: &TripleConfiguration,
    fin: &TripleConfiguration,
    sample_points: &[Point3],
) -> Result<IndependenceReport> {
    if sample_points.len() < 2 {
        return Err(Error::TooFewSamples(sample_points.len()));
    }
    let rotations = sample_points
        .iter()
        .map(|q| chasles_decompose(initial, fin, q).map(|d| d.rotation))
        .collect::<Result<Vec<_>>>()?;
    let (axis, angle) = rotations[1..]
        .iter()
        .map(|r| rotation_deviation(&rotations[0], r))
        .fold((0.0_f64, 0.0_f64), |(a, b), d| {
            (a.max(d.axis), b.max(d.angle))
        });
    Ok(IndependenceReport {
        samples: sample_points.len(),
        max_axis_deviation: axis,
        max_angle_difference: angle,
        passed: axis <= EPS_RIGID && angle <= EPS_RIGID,
    })
}
