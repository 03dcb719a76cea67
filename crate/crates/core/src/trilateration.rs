use crate::rigidity::is_non_collinear;
use crate::tolerance::{EPS_RIGID, EPS_TANGENT};
use crate::{Error, Point3, Result, Vector3};

/// Locate `D` from its distances `d1, d2, d3` to the known points `A, B, C`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourthPointProblem {
    a: Point3,
    b: Point3,
    c: Point3,
    distances: [f64; 3],
}

impl FourthPointProblem {
    pub fn new(a: Point3, b: Point3, c: Point3, d1: f64, d2: f64, d3: f64) -> Result<Self> {
        if [d1, d2, d3].iter().any(|d| !d.is_finite() || *d < 0.0) {
            return Err(Error::InvalidInput(
                "distances must be finite and nonnegative".into(),
            ));
        }
        if [a, b, c].iter().any(|p| !p.iter().all(|v| v.is_finite())) {
            return Err(Error::InvalidInput("non-finite coordinate".into()));
        }
        if !is_non_collinear(&a, &b, &c) {
            return Err(Error::DegenerateTriple);
        }
        Ok(Self {
            a,
            b,
            c,
            distances: [d1, d2, d3],
        })
    }

    /// Builds the problem from a planted point, for checking solutions.
    pub fn from_planted(a: Point3, b: Point3, c: Point3, d: &Point3) -> Result<Self> {
        Self::new(a, b, c, (d - a).norm(), (d - b).norm(), (d - c).norm())
    }

    pub fn anchors(&self) -> [Point3; 3] {
        [self.a, self.b, self.c]
    }

    pub fn distances(&self) -> [f64; 3] {
        self.distances
    }

    /// Largest relative deviation of `|p − anchor|` from the prescribed distance,
    /// relative to the larger of that distance and the anchor triangle's size.
    pub fn residual(&self, p: &Point3) -> f64 {
        let scale = self.scale();
        self.anchors()
            .iter()
            .zip(self.distances)
            .map(|(anchor, d)| ((p - anchor).norm() - d).abs() / d.max(scale))
            .fold(0.0, f64::max)
    }

    fn scale(&self) -> f64 {
        (self.b - self.a)
            .norm()
            .max((self.c - self.a).norm())
            .max((self.c - self.b).norm())
    }
}

/// Either one point in the plane of the anchors, or a mirror pair across it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FourthPointSolution {
    InPlane(Point3),
    /// The first point lies on the side of `(B − A) × (C − A)`.
    Mirror(Point3, Point3),
}

impl FourthPointSolution {
    pub fn points(&self) -> Vec<Point3> {
        match *self {
            Self::InPlane(p) => vec![p],
            Self::Mirror(p, q) => vec![p, q],
        }
    }
}

/// Intersects the three distance spheres.
///
/// Works in an orthonormal frame with `A` at the origin, `B` on the first axis
/// and `C` in the first two axes: subtracting sphere equations gives the two
/// in-plane coordinates linearly, and the first sphere then fixes the squared
/// height above the plane.
pub fn fourth_point_positions(prob: &FourthPointProblem) -> Result<FourthPointSolution> {
    let [d1, d2, d3] = prob.distances;
    let ab = prob.b - prob.a;
    let ac = prob.c - prob.a;

    let ab_len = ab.norm();
    let ex = ab / ab_len;
    let i = ex.dot(&ac);
    let ey = (ac - i * ex).normalize();
    let ez = ex.cross(&ey);
    let j = ey.dot(&ac);

    let x = (d1 * d1 - d2 * d2 + ab_len * ab_len) / (2.0 * ab_len);
    let y = (d1 * d1 - d3 * d3 + i * i + j * j) / (2.0 * j) - (i / j) * x;
    let z_sq = d1 * d1 - x * x - y * y;

    let scale = prob.scale().max(d1).max(d2).max(d3);
    let scale_sq = scale * scale;
    // the squared height carries a few ulps of scale² of rounding
    let noise = 16.0 * f64::EPSILON * scale_sq;
    let in_plane = prob.a + x * ex + y * ey;
    if z_sq < -(EPS_RIGID * scale_sq).max(noise) {
        return Err(Error::InconsistentConstraints);
    }
    if z_sq <= (EPS_TANGENT * scale).powi(2).max(noise) {
        return Ok(FourthPointSolution::InPlane(in_plane));
    }
    let offset: Vector3 = z_sq.sqrt() * ez;
    Ok(FourthPointSolution::Mirror(
        in_plane + offset,
        in_plane - offset,
    ))
}
