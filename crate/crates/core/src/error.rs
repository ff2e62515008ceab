use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range in pair ({u}, {v}) for a graph on {n} vertices")]
    VertexOutOfRange { u: usize, v: usize, vertex: usize, n: usize },

    #[error("self-loop at vertex {0} in pair ({0}, {0})")]
    SelfLoop(usize),

    #[error("graph has {n} vertices, limit is {limit}")]
    TooManyVertices { n: usize, limit: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("invalid family spec `{spec}`: {reason}")]
    Family { spec: String, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix has a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix entry ({row}, {col}) = {value} is not an integer")]
    NonInteger { row: usize, col: usize, value: f64 },

    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),

    #[error("jacobi iteration did not converge after {sweeps} sweeps")]
    NotConverged { sweeps: usize },

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("requested {requested} real roots but the polynomial has {available}")]
    NotEnoughRoots { requested: usize, available: usize },

    #[error("partition is not equitable: vertices {u} and {v} of block {block} have {count_u} and {count_v} neighbors in block {target}")]
    NotEquitable {
        u: usize,
        v: usize,
        block: usize,
        target: usize,
        count_u: usize,
        count_v: usize,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("infeasible enumeration or search: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
