use thiserror::Error;

use crate::families::affine::ParamViolation;
use crate::link::diagram::DiagramReport;
use crate::report::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must contain at least one element")]
    EmptyCarrier,

    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("entry {value} at ({row}, {col}) is outside the carrier of size {n}")]
    OutOfRange { row: usize, col: usize, value: usize, n: usize },

    #[error("carrier sizes disagree: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("column {column} of the operation table is not a bijection")]
    NonBijectiveColumn { column: usize },

    #[error("axiom check failed: {}", .0.summary())]
    Axioms(Box<AxiomReport>),

    #[error("parameter rejected: {0}")]
    Parameter(ParamViolation),

    #[error("constructed structure failed validation ({}); the family constructor is inconsistent", .0.summary())]
    Internal(Box<AxiomReport>),

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("seed set must be non-empty")]
    EmptySeed,

    #[error("element {element} is outside the carrier of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("unknown builtin structure `{0}`")]
    UnknownBuiltin(String),

    #[error("unknown catalog link `{0}`")]
    UnknownLink(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(DiagramReport),

    #[error("search space of {required} exceeds the ceiling of {ceiling}")]
    CeilingExceeded { required: u128, ceiling: u128 },

    #[error("table {table} compares {expected} structure(s), got {found}")]
    StructureCount { table: u8, expected: usize, found: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, column, message: message.into() }
    }
}
