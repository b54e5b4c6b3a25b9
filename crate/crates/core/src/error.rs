use crate::interval::Interval;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by an interval containing zero")]
    DivisionByZeroInterval,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("tolerance not reached: enclosure {enclosure} has width {width:e} after {boxes} boxes")]
    ToleranceNotReached { enclosure: Interval, width: f64, boxes: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("unknown function {0:?}")]
    UnknownFunction(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("no improvement over the seed")]
    NoImprovement,
    #[error("seed is infeasible: {0}")]
    InfeasibleSeed(String),
    #[error("depth limit exceeded")]
    DepthExceeded,
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
