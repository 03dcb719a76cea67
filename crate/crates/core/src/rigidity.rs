use crate::tolerance::{EPS_AREA, EPS_RIGID};
use crate::{Error, Point3, Result};

/// Whether a motion keeps the orientation of a point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Handedness {
    Preserved,
    Reversed,
    /// The initial set is planar, so every congruent copy is reachable by a
    /// proper motion and orientation carries no information.
    Planar,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RigidityReport {
    /// Largest change of a pairwise distance, divided by the diameter of the
    /// initial set.
    pub max_discrepancy: f64,
    pub handedness: Handedness,
    pub accepted: bool,
}

impl RigidityReport {
    pub fn into_result(self) -> Result<Self> {
        if self.accepted {
            Ok(self)
        } else {
            Err(Error::NotRigid {
                discrepancy: self.max_discrepancy,
                handedness_preserved: self.handedness != Handedness::Reversed,
            })
        }
    }
}

/// Checks that `fin` is a rigid, orientation-preserving copy of `initial`.
///
/// Distances are compared relative to the diameter of `initial`. Orientation is
/// read from the signed volume of the largest tetrahedron spanned by the
/// initial points.
pub fn validate_rigidity(initial: &[Point3], fin: &[Point3]) -> Result<RigidityReport> {
    if initial.len() != fin.len() {
        return Err(Error::LengthMismatch {
            initial: initial.len(),
            fin: fin.len(),
        });
    }
    if initial.len() < 3 {
        return Err(Error::TooFewPoints(initial.len()));
    }
    if initial
        .iter()
        .chain(fin)
        .any(|p| !p.iter().all(|c| c.is_finite()))
    {
        return Err(Error::InvalidInput("non-finite coordinate".into()));
    }
    let (i, j, k) = spanning_triple(initial)
        .ok_or_else(|| Error::DegenerateConfiguration("all points are collinear".into()))?;

    let mut diameter = 0.0_f64;
    let mut worst = 0.0_f64;
    for a in 0..initial.len() {
        for b in a + 1..initial.len() {
            let d0 = (initial[b] - initial[a]).norm();
            let d1 = (fin[b] - fin[a]).norm();
            diameter = diameter.max(d0);
            worst = worst.max((d1 - d0).abs());
        }
    }
    let max_discrepancy = worst / diameter;

    let handedness = match apex(initial, i, j, k) {
        None => Handedness::Planar,
        Some(l) => {
            let v0 = signed_volume(&initial[i], &initial[j], &initial[k], &initial[l]);
            let v1 = signed_volume(&fin[i], &fin[j], &fin[k], &fin[l]);
            if v0 * v1 > 0.0 {
                Handedness::Preserved
            } else {
                Handedness::Reversed
            }
        }
    };

    Ok(RigidityReport {
        max_discrepancy,
        handedness,
        accepted: max_discrepancy <= EPS_RIGID && handedness != Handedness::Reversed,
    })
}

/// Six times the signed volume of tetrahedron `abcd`: `det[b−a, c−a, d−a]`.
pub fn signed_volume(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> f64 {
    (b - a).cross(&(c - a)).dot(&(d - a))
}

/// True when the triangle area exceeds `EPS_AREA` times its squared longest side.
pub(crate) fn is_non_collinear(a: &Point3, b: &Point3, c: &Point3) -> bool {
    let longest = (b - a)
        .norm_squared()
        .max((c - a).norm_squared())
        .max((c - b).norm_squared());
    let area = 0.5 * (b - a).cross(&(c - a)).norm();
    longest > 0.0 && area > EPS_AREA * longest
}

/// A well-spread non-collinear triple: the first point, the point farthest
/// from it, and the point farthest from the line through those two.
fn spanning_triple(points: &[Point3]) -> Option<(usize, usize, usize)> {
    let p0 = points[0];
    let j = argmax(points, |p| (p - p0).norm_squared())?;
    let dir = points[j] - p0;
    let k = argmax(points, |p| (p - p0).cross(&dir).norm_squared())?;
    is_non_collinear(&p0, &points[j], &points[k]).then_some((0, j, k))
}

/// The point farthest from the plane of the triple, if the set is not planar.
fn apex(points: &[Point3], i: usize, j: usize, k: usize) -> Option<usize> {
    let (a, b, c) = (points[i], points[j], points[k]);
    let l = argmax(points, |p| signed_volume(&a, &b, &c, p).abs())?;
    let scale = (b - a).norm().max((c - a).norm()).max((c - b).norm());
    (signed_volume(&a, &b, &c, &points[l]).abs() > EPS_AREA * scale.powi(3)).then_some(l)
}

fn argmax(points: &[Point3], key: impl Fn(&Point3) -> f64) -> Option<usize> {
    points
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| key(a).total_cmp(&key(b)))
        .map(|(i, _)| i)
}

/// Three labeled non-collinear points `P1, P2, P3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TripleConfiguration {
    points: [Point3; 3],
}

impl TripleConfiguration {
    pub fn new(p1: Point3, p2: Point3, p3: Point3) -> Result<Self> {
        if [p1, p2, p3]
            .iter()
            .any(|p| !p.iter().all(|c| c.is_finite()))
        {
            return Err(Error::InvalidInput("non-finite coordinate".into()));
        }
        if !is_non_collinear(&p1, &p2, &p3) {
            return Err(Error::DegenerateTriple);
        }
        Ok(Self {
            points: [p1, p2, p3],
        })
    }

    pub fn p1(&self) -> &Point3 {
        &self.points[0]
    }

    pub fn p2(&self) -> &Point3 {
        &self.points[1]
    }

    pub fn p3(&self) -> &Point3 {
        &self.points[2]
    }

    pub fn points(&self) -> &[Point3; 3] {
        &self.points
    }
}
