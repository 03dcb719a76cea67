use crate::{Point3, Rotation, Vector3};

/// A rotation about an axis through `base_point`, followed by a translation.
///
/// `p ↦ base_point + M·(p − base_point) + translation`
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RigidDisplacement {
    pub rotation: Rotation,
    pub base_point: Point3,
    pub translation: Vector3,
}

impl RigidDisplacement {
    pub fn new(rotation: Rotation, base_point: Point3, translation: Vector3) -> Self {
        Self {
            rotation,
            base_point,
            translation,
        }
    }

    pub fn identity() -> Self {
        Self::from_translation(Vector3::zeros())
    }

    pub fn from_translation(translation: Vector3) -> Self {
        Self::new(Rotation::identity(), Point3::origin(), translation)
    }

    pub fn apply(&self, p: &Point3) -> Point3 {
        self.rotation.apply_about(&self.base_point, p) + self.translation
    }

    pub fn apply_all(&self, points: &[Point3]) -> Vec<Point3> {
        points.iter().map(|p| self.apply(p)).collect()
    }

    /// The same motion expressed with another point on a parallel axis as base.
    pub fn rebased(&self, base_point: Point3) -> Self {
        let image = self.apply(&base_point);
        Self::new(self.rotation, base_point, image - base_point)
    }
}
