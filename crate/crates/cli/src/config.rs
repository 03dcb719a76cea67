use std::collections::HashSet;

use rigidkin::Point3;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error: {0}")]
    Validation(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum Mode {
    #[default]
    #[serde(rename = "3d")]
    ThreeD,
    #[serde(rename = "2d")]
    TwoD,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabeledPoint {
    pub label: String,
    pub x: f64,
    pub y: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Coordinates {
    pub x: f64,
    pub y: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<f64>,
}

impl Coordinates {
    pub fn to_point(self) -> Point3 {
        Point3::new(self.x, self.y, self.z.unwrap_or(0.0))
    }
}

/// An input document: the labeled points of both configurations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigurationFile {
    pub initial: Vec<LabeledPoint>,
    #[serde(rename = "final")]
    pub fin: Vec<LabeledPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translating_point: Option<Coordinates>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
}

impl ConfigurationFile {
    pub fn mode(&self) -> Mode {
        self.mode.unwrap_or_default()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.initial.iter().map(|p| p.label.as_str()).collect()
    }

    /// Initial points and the final points reordered to match them by label.
    pub fn point_pairs(&self) -> (Vec<Point3>, Vec<Point3>) {
        let to_point = |p: &LabeledPoint| Point3::new(p.x, p.y, p.z.unwrap_or(0.0));
        let initial = self.initial.iter().map(to_point).collect();
        let fin = self
            .initial
            .iter()
            .map(|p| {
                let q = self
                    .fin
                    .iter()
                    .find(|q| q.label == p.label)
                    .expect("validated label sets match");
                to_point(q)
            })
            .collect();
        (initial, fin)
    }

    /// True when every point lies in the plane `z = 0`.
    pub fn is_planar(&self) -> bool {
        self.mode() == Mode::TwoD
            || self
                .initial
                .iter()
                .chain(&self.fin)
                .all(|p| p.z.unwrap_or(0.0) == 0.0)
    }

    fn validate(&self) -> Result<(), ConfigError> {
        let invalid = |m: String| Err(ConfigError::Validation(m));
        if self.initial.len() != self.fin.len() {
            return invalid(format!(
                "initial has {} points but final has {}",
                self.initial.len(),
                self.fin.len()
            ));
        }
        if self.initial.len() < 3 {
            return invalid(format!(
                "at least 3 points are required, got {}",
                self.initial.len()
            ));
        }
        for (name, list) in [("initial", &self.initial), ("final", &self.fin)] {
            let mut seen = HashSet::new();
            for p in list {
                if !seen.insert(p.label.as_str()) {
                    return invalid(format!("duplicate label {:?} in {name}", p.label));
                }
                self.validate_point(name, &p.label, p.x, p.y, p.z)?;
            }
        }
        let initial: HashSet<_> = self.initial.iter().map(|p| p.label.as_str()).collect();
        if let Some(p) = self
            .fin
            .iter()
            .find(|p| !initial.contains(p.label.as_str()))
        {
            return invalid(format!(
                "label {:?} of final is missing from initial",
                p.label
            ));
        }
        if let Some(t) = &self.translating_point {
            self.validate_point("translating_point", "translating_point", t.x, t.y, t.z)?;
        }
        Ok(())
    }

    fn validate_point(
        &self,
        list: &str,
        label: &str,
        x: f64,
        y: f64,
        z: Option<f64>,
    ) -> Result<(), ConfigError> {
        if !(x.is_finite() && y.is_finite() && z.is_none_or(f64::is_finite)) {
            return Err(ConfigError::Validation(format!(
                "non-finite coordinate for {label:?} in {list}"
            )));
        }
        match (self.mode(), z) {
            (Mode::ThreeD, None) if list != "translating_point" => Err(ConfigError::Validation(
                format!("point {label:?} in {list} has no z coordinate (mode 3d)"),
            )),
            (Mode::TwoD, Some(z)) if z != 0.0 => Err(ConfigError::Validation(format!(
                "point {label:?} in {list} has z = {z} in mode 2d"
            ))),
            _ => Ok(()),
        }
    }
}

/// Parses and validates an input document.
pub fn parse_configuration(text: &str) -> Result<ConfigurationFile, ConfigError> {
    let config: ConfigurationFile = serde_json::from_str(text).map_err(|e| ConfigError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    config.validate()?;
    Ok(config)
}
