#![allow(dead_code)]

use proptest::prelude::*;
use rigidkin::{Point3, RigidDisplacement, Rotation, UnitVector3, Vector3};
use std::f64::consts::PI;

pub fn unit_vector() -> impl Strategy<Value = UnitVector3> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64).prop_filter_map("non-zero axis", |(x, y, z)| {
        let v = Vector3::new(x, y, z);
        (v.norm_squared() > 0.01).then(|| UnitVector3::new_normalize(v))
    })
}

pub fn angle() -> impl Strategy<Value = f64> {
    -PI..PI
}

pub fn rotation() -> impl Strategy<Value = Rotation> {
    (unit_vector(), angle()).prop_map(|(n, a)| Rotation::from_axis_angle(&n, a))
}

pub fn point(scale: f64) -> impl Strategy<Value = Point3> {
    (-scale..scale, -scale..scale, -scale..scale).prop_map(|(x, y, z)| Point3::new(x, y, z))
}

pub fn vector(scale: f64) -> impl Strategy<Value = Vector3> {
    point(scale).prop_map(|p| p.coords)
}

pub fn displacement() -> impl Strategy<Value = RigidDisplacement> {
    (rotation(), point(10.0), vector(10.0)).prop_map(|(r, b, t)| RigidDisplacement::new(r, b, t))
}
