use thiserror::Error;

use crate::algebra::Bidegree;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("({a}, {b}) does not satisfy b + b^4 = a^5")]
    NotInGroup { a: String, b: String },
    #[error("elements belong to different generator tables")]
    TableMismatch,
    #[error("bidegree {0} lies outside the computed window")]
    OutsideWindow(Bidegree),
    #[error("element is not bihomogeneous: {0}")]
    Inhomogeneous(String),
    #[error("element at {bidegree} is not a cycle: {element}")]
    NotACycle { bidegree: Bidegree, element: String },
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
