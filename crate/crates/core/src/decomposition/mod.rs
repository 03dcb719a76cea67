//! Decompositions of a rigid displacement.

mod chasles;
mod planar;
mod screw;
mod three_step;

pub use chasles::{chasles_decompose, chasles_independence_check, IndependenceReport};
pub use planar::{planar_decompose, PlanarDecomposition, PlanarKind};
pub use screw::{screw_decompose, ScrewDecomposition, ScrewKind};
pub use three_step::{decompose_three_step, euler_axis, TwoRotationDecomposition};
