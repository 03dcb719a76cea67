use serde::{Deserialize, Serialize};

use crate::config::ConfigurationFile;

pub type Triple = [f64; 3];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RigidityRecord {
    pub max_discrepancy: f64,
    pub tolerance: f64,
    pub handedness: String,
    pub accepted: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThreeStepRecord {
    pub translation: Triple,
    pub ab_axis: Triple,
    pub phi: f64,
    pub second_axis: Triple,
    pub theta: f64,
    pub fixed_point: Triple,
}

/// A rotation about a line through `through`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RotationRecord {
    pub axis: Triple,
    pub angle: f64,
    pub axis_defined: bool,
    pub through: Triple,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantPointRecord {
    pub by_root: Triple,
    pub by_half_angle: Triple,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChaslesRecord {
    pub translating_point: Triple,
    pub translation: Triple,
    pub axis: Triple,
    pub angle: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScrewRecord {
    pub kind: String,
    pub axis_point: Triple,
    pub axis_dir: Triple,
    pub angle: f64,
    pub slide: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanarRecord {
    pub kind: String,
    pub center: [f64; 2],
    pub angle: f64,
    pub translation: [f64; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourthPointRecord {
    pub label: String,
    pub distances: Triple,
    pub solutions: Vec<Triple>,
    pub selected: Triple,
    pub observed: Triple,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArcRecord {
    pub label: String,
    pub points: Vec<Triple>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckRecord {
    pub fn new(name: &str, residual: f64, tolerance: f64) -> Self {
        CheckRecord {
            name: name.to_string(),
            residual,
            tolerance,
            passed: residual <= tolerance,
        }
    }
}

/// Everything one subcommand computed, in serializable form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub angle_unit: String,
    pub input: ConfigurationFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triple: Option<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rigidity: Option<RigidityRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub three_step: Option<ThreeStepRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_axis: Option<RotationRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant_point: Option<InvariantPointRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chasles: Option<ChaslesRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub screw: Option<ScrewRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub planar: Option<PlanarRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fourth_point: Option<Vec<FourthPointRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<ArcRecord>>,
    pub checks: Vec<CheckRecord>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunReport {
    pub fn new(command: &str, input: ConfigurationFile, degrees: bool) -> Self {
        RunReport {
            command: command.to_string(),
            angle_unit: if degrees { "deg" } else { "rad" }.to_string(),
            input,
            triple: None,
            rigidity: None,
            three_step: None,
            euler_axis: None,
            invariant_point: None,
            chasles: None,
            screw: None,
            planar: None,
            fourth_point: None,
            arcs: None,
            checks: Vec::new(),
            passed: false,
            error: None,
        }
    }
}
