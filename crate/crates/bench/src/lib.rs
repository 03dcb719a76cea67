//! Seeded fixtures for the benchmarks.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rigidkin::spherical::SphereScene;
use rigidkin::{
    FourthPointProblem, Matrix3, Point3, RigidDisplacement, Rotation, TripleConfiguration,
    UnitVector3, Vector3,
};

pub struct Fixtures {
    rng: ChaCha8Rng,
}

impl Fixtures {
    pub fn new(seed: u64) -> Self {
        Fixtures {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn unit(&mut self) -> UnitVector3 {
        loop {
            let v = Vector3::from_fn(|_, _| self.rng.random_range(-1.0..1.0));
            if (0.01..=1.0).contains(&v.norm_squared()) {
                return UnitVector3::new_normalize(v);
            }
        }
    }

    pub fn point(&mut self, scale: f64) -> Point3 {
        Point3::from(Vector3::from_fn(|_, _| {
            self.rng.random_range(-scale..scale)
        }))
    }

    pub fn rotation(&mut self) -> Rotation {
        let axis = self.unit();
        Rotation::from_axis_angle(&axis, PI - self.rng.random_range(0.0..TAU))
    }

    pub fn matrix(&mut self) -> Matrix3 {
        *self.rotation().matrix()
    }

    pub fn displacement(&mut self) -> RigidDisplacement {
        let rotation = self.rotation();
        let base = self.point(10.0);
        let shift = self.point(10.0).coords;
        RigidDisplacement::new(rotation, base, shift)
    }

    /// A triple and its image under a random displacement.
    pub fn motion(&mut self) -> (TripleConfiguration, TripleConfiguration) {
        loop {
            let [a, b, c] = [0; 3].map(|_| self.point(5.0));
            let Ok(initial) = TripleConfiguration::new(a, b, c) else {
                continue;
            };
            let d = self.displacement();
            let [p, q, r] = initial.points().map(|p| d.apply(&p));
            return (initial, TripleConfiguration::new(p, q, r).unwrap());
        }
    }

    pub fn scene(&mut self) -> SphereScene {
        loop {
            let pole = self.unit();
            let v = self.unit().into_inner();
            let across = v - v.dot(&pole) * pole.into_inner();
            let phi = self.rng.random_range(1e-3..TAU - 1e-3);
            let theta = PI - self.rng.random_range(0.0..TAU);
            if across.norm() > 0.1 && theta != 0.0 {
                return SphereScene::new(Point3::origin(), 1.0, pole, &across, phi, theta).unwrap();
            }
        }
    }

    pub fn fourth_point(&mut self) -> FourthPointProblem {
        loop {
            let [a, b, c, d] = [0; 4].map(|_| self.point(10.0));
            if let Ok(p) = FourthPointProblem::from_planted(a, b, c, &d) {
                return p;
            }
        }
    }

    pub fn batch<T>(&mut self, n: usize, mut f: impl FnMut(&mut Self) -> T) -> Vec<T> {
        (0..n).map(|_| f(self)).collect()
    }
}
