use thiserror::Error;

use crate::tiles::{Edge, Tile};

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("tile {tile} has no connection point on its {edge:?} edge")]
    NoConnectionPoint { tile: Tile, edge: Edge },

    #[error("not a knot mosaic")]
    NotAKnotMosaic,

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("n = {n} exceeds the configured cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("observable is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("index set is not an orbit of the ambient group")]
    NotAnOrbit,

    #[error("move table line {line}: {message}")]
    MoveTable { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse { offset, message: message.into() }
    }

    pub(crate) fn out_of_range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::OutOfRange { what, detail: detail.into() }
    }

    /// True for errors that come from a size cap rather than from bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::ClosureCapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
