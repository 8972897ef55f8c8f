use thiserror::Error;

use crate::cartan::CartanType;

/// Errors raised by queries against the type, label and table data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidType(String),

    #[error("cannot parse {input:?} as a character label for {cartan}: {reason}")]
    BadLabel {
        cartan: String,
        input: String,
        reason: String,
    },

    #[error("cannot parse {input:?} as a subsystem type: {reason}")]
    BadSubsystem { input: String, reason: String },

    #[error("unknown finite group label {0:?}")]
    BadGroup(String),

    #[error("no strata table available for {0}")]
    NoTableAvailable(CartanType),

    #[error("{label} is not a stratum of {cartan}")]
    NotAStratum { cartan: CartanType, label: String },

    #[error("triple {0} is not a parameter of a unipotent character sheaf or lies in no fibre")]
    TripleNotFound(String),

    #[error("{cartan} has no cuspidal character sheaves with d = {d}")]
    NoCuspidal { cartan: CartanType, d: String },

    #[error("no centralizer data for {cartan} at d = {d}")]
    NoCentralizerData { cartan: CartanType, d: String },

    #[error("unsupported component-group collection: {0}")]
    UnsupportedCollection(String),

    #[error("malformed table data: {0}")]
    TableData(String),

    #[error("schema violation: {0}")]
    Schema(String),

    #[error("triple placement mismatch: {0}")]
    Placement(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
