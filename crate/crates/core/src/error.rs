use thiserror::Error;

use crate::rootsystem::LieType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("unknown Lie family `{0}`")]
    UnknownFamily(String),

    #[error("weight has {got} coordinates, type {ty} needs {expected}")]
    LengthMismatch {
        ty: LieType,
        expected: usize,
        got: usize,
    },

    #[error("type mismatch: {0} vs {1}")]
    TypeMismatch(LieType, LieType),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("{0} does not dominate {1}")]
    NotComparable(String, String),

    #[error("negative coefficient at node {node} in {weight}")]
    NegativeCoefficient { weight: String, node: usize },

    #[error("node index {node} out of range for {ty}")]
    NodeOutOfRange { ty: LieType, node: usize },

    #[error("invalid subdiagram: {0}")]
    InvalidSubdiagram(String),

    #[error("pair ({0}; {1}) is not primitive")]
    NotPrimitive(String, String),

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("Freudenthal recursion failed at {weight}: {reason}")]
    Recursion { weight: String, reason: String },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("cannot write output: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;
