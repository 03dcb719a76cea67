use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not a rotation: {0}")]
    NotARotation(String),

    #[error("at least 3 points are required, got {0}")]
    TooFewPoints(usize),

    #[error("initial and final point lists differ in length ({initial} vs {fin})")]
    LengthMismatch { initial: usize, fin: usize },

    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),

    #[error("degenerate triple: points are collinear")]
    DegenerateTriple,

    #[error("{}", not_rigid_message(*.discrepancy, *.handedness_preserved))]
    NotRigid {
        discrepancy: f64,
        handedness_preserved: bool,
    },

    #[error("reflection not allowed: signed area changes sign")]
    ReflectionNotAllowed,

    #[error("inconsistent constraints: the distance spheres do not intersect")]
    InconsistentConstraints,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("sphere radius mismatch: {initial} vs {fin}")]
    RadiusMismatch { initial: f64, fin: f64 },

    #[error("degenerate scene: {0}")]
    DegenerateScene(String),

    #[error("second rotation angle is zero; there is no isolated invariant point")]
    NoRotation,

    #[error("at least 2 translating points are required, got {0}")]
    TooFewSamples(usize),

    #[error("{what}: residual {value:e} exceeds tolerance {tolerance:e}")]
    ResidualExceeded {
        what: &'static str,
        value: f64,
        tolerance: f64,
    },
}

fn not_rigid_message(discrepancy: f64, handedness_preserved: bool) -> String {
    if handedness_preserved {
        format!("not rigid: pairwise distances change by {discrepancy:e} (relative)")
    } else {
        "not rigid: handedness violated".to_string()
    }
}
