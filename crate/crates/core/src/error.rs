use thiserror::Error;

use crate::exactfield::{FieldError, MatrixError};
use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition failed for {what}: {}", summarize(.report))]
    Precondition { what: String, report: Box<Report> },
    #[error("{0} has no inverse antipode")]
    MissingInverseAntipode(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown reference {0:?}")]
    UnknownReference(String),
    #[error("{0}")]
    Unsupported(String),
}

fn summarize(report: &Report) -> String {
    match report.first_failure() {
        Some(o) => o.to_string(),
        None => "no failing outcome recorded".to_string(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Turns a failed report into an [`Error::Precondition`].
pub fn require(what: &str, report: Report) -> Result<Report> {
    if report.passed() {
        Ok(report)
    } else {
        Err(Error::Precondition {
            what: what.to_string(),
            report: Box::new(report),
        })
    }
}
