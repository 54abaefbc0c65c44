use thiserror::Error;

/// Which hypothesis of a 2-cocycle lifting theorem failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftCondition {
    /// The Lie 2-cochain is not a cocycle.
    Cocycle,
    /// `τ(x)ω(y) = τ(y)ω(x)`.
    Proportional,
    /// `ω([x,y]) = 0`.
    KillsDerived,
    /// The third (cyclic) condition of the theorem.
    Cyclic,
}

impl LiftCondition {
    pub fn number(self) -> u8 {
        match self {
            LiftCondition::Cocycle => 0,
            LiftCondition::Proportional => 1,
            LiftCondition::KillsDerived => 2,
            LiftCondition::Cyclic => 3,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("bracket expects {expected} arguments, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("bracket on {tuple:?} repeats an index but has a nonzero value")]
    Antisymmetry { tuple: Vec<usize> },

    #[error("bracket on {tuple:?} is defined more than once")]
    DuplicateDefinition { tuple: Vec<usize> },

    #[error("linear form is not a trace of the bracket (fails on {tuple:?})")]
    NotATrace { tuple: Vec<usize> },

    #[error("subspace is not an ideal of the algebra")]
    NotAnIdeal,

    #[error("linear map is not a derivation (fails on {tuple:?})")]
    NotADerivation { tuple: Vec<usize> },

    #[error("unsupported {theory} cochain degree {degree}")]
    UnsupportedDegree { theory: &'static str, degree: usize },

    #[error("cochain does not match the expected shape: {0}")]
    CochainShape(String),

    #[error("cochain is not a cocycle (fails on {tuple:?})")]
    NotACocycle { tuple: Vec<usize> },

    #[error("lifting hypothesis {} fails on {tuple:?}", condition.number())]
    Lift { condition: LiftCondition, tuple: Vec<usize> },

    #[error("theorem check failed: {0}")]
    Contract(String),

    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),

    #[error("invalid parameters for `{id}`: {reason}")]
    InvalidParams { id: String, reason: String },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
