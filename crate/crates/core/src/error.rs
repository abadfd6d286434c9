use std::path::PathBuf;

use crate::ograph::OGraphError;
use crate::subpoly::SubpolyError;
use crate::triangulate::{BoundaryError, TriangulationError};
use crate::volume::VolumeError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("o-graph: {0}")]
    OGraph(#[from] OGraphError),
    #[error("triangulation: {0}")]
    Triangulation(#[from] TriangulationError),
    #[error("boundary: {0}")]
    Boundary(#[from] BoundaryError),
    #[error(transparent)]
    Subpoly(#[from] SubpolyError),
    #[error("volume: {0}")]
    Volume(#[from] VolumeError),
    #[error("unrecognized input: expected an `ograph v1` or `tri v1` header")]
    UnknownFormat,
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
