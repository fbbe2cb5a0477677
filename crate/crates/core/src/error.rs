use thiserror::Error;

use crate::grassmann::GrassmannianDesc;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable {var} has no assignment")]
    UnassignedVariable { var: usize },

    #[error("variable e{var} is out of range for a flag ring in {num_vars} variables")]
    VariableOutOfRange { var: usize, num_vars: usize },

    #[error("expected a homogeneous class of degree {expected}")]
    NotTopDegree { expected: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{desc} is not a real Grassmannian")]
    NotReal { desc: GrassmannianDesc },

    #[error("partition weight {weight} does not match dimension {dim}")]
    WeightMismatch { weight: u32, dim: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("dimension {dim} exceeds the Stiefel-Whitney computation limit {limit}; pass --allow-large to override")]
    TooLarge { dim: u32, limit: u32 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
