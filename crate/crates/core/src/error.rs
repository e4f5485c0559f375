use thiserror::Error;

use crate::families::Family;
use crate::scalar::Scalar;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("degenerate triangle: vertices are collinear")]
    DegenerateTriangle,

    #[error("lines are parallel")]
    ParallelLines,

    #[error("signed cevian vector sum is not zero")]
    NonClosingChain,

    #[error("cevian chain closes but its vectors are collinear")]
    DegenerateChain,

    #[error("cevians are not concurrent (Ceva value {0})")]
    NotConcurrent(Box<Scalar>),

    /// The triple lies on one of the outer families at a golden-ratio
    /// parameter, where the cevians are parallel and the triangle collapses.
    #[error("family {family:?} at golden parameter xi = {xi}: triangle is degenerate")]
    GoldenDegenerate { family: Family, xi: Box<Scalar> },

    #[error("invalid canvas: {0}")]
    InvalidCanvas(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
