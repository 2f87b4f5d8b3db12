use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra parameters differ: {left} vs {right}")]
    ParamsMismatch { left: String, right: String },

    #[error("{operation} is defined only for {expected}, got {actual}")]
    DomainMismatch {
        operation: &'static str,
        expected: &'static str,
        actual: String,
    },

    #[error("element has zero norm and is not invertible")]
    NotInvertible,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid scalar `{0}`")]
    Scalar(String),

    #[error("invalid element literal `{literal}`: {reason}")]
    Element { literal: String, reason: String },

    #[error("invalid parameters `{literal}`: {reason}")]
    Params { literal: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("characteristic cubic has repeated roots or no real root dominating the others (discriminant {discriminant})")]
    NotThreeDistinctRealRoots { discriminant: String },

    #[error("dominant root {sigma1} is not greater than one")]
    DominantRootNotGreaterThanOne { sigma1: f64 },

    #[error("root refinement failed: residual {residual:e} exceeds tolerance")]
    ResidualTooLarge { residual: f64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown check id `{0}`")]
    UnknownId(String),

    #[error("counterexample does not match the shape of check `{0}`")]
    MalformedInputs(String),
}
