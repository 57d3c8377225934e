use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("circulant: {0}")]
    Circulant(String),

    #[error("unknown catalog graph '{0}'")]
    UnknownCatalog(String),

    #[error("graph must be connected")]
    Disconnected,

    #[error("graph is empty")]
    Empty,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not symmetric and no symmetrizing witness was supplied")]
    NotSymmetric,

    #[error("symmetrizing witness is invalid: {0}")]
    BadWitness(String),

    #[error("vertex eccentricity below diameter (vertex {vertex}: {ecc} < {diameter})")]
    Eccentricity {
        vertex: usize,
        ecc: usize,
        diameter: usize,
    },

    #[error("zero intersection parameter c_{0}")]
    ZeroC(usize),

    #[error("degenerate evaluation: |p_D(mu_{index})| = {value:e}")]
    DegenerateEvaluation { index: usize, value: f64 },

    #[error("internal consistency: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
