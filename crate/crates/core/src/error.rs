use thiserror::Error;

/// Errors raised by the library.
///
/// Domain errors reject malformed input; resource errors report that a
/// configured enumeration cap would be exceeded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing positive integers, got {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("inner partition {inner} does not fit inside outer partition {outer}: {reason}")]
    NotContained {
        outer: String,
        inner: String,
        reason: String,
    },

    #[error("shape has {shape} boxes but content has {content}")]
    SizeMismatch { shape: usize, content: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("edge {0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("{0}")]
    Domain(String),

    #[error("graph has {edges} edges, over the edge-subset cap of {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },

    #[error("graph has {vertices} vertices, over the stable-partition cap of {cap}")]
    VertexCapExceeded { vertices: usize, cap: usize },

    #[error("graph search on {vertices} vertices exceeds the search cap of {cap}")]
    SearchCapExceeded { vertices: usize, cap: usize },

    #[error("malformed symmetric-function JSON: {0}")]
    Json(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for the cap violations, as opposed to malformed input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::EdgeCapExceeded { .. }
                | Error::VertexCapExceeded { .. }
                | Error::SearchCapExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
