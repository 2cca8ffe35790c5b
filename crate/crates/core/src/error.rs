use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {p}^{k} exceeds the field cap {cap}")]
    FieldTooLarge { p: u64, k: u32, cap: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrices belong to different fields")]
    FieldMismatch,
    #[error("ring {ring} has order {order} which exceeds the vertex cap {cap}")]
    RingTooLarge { ring: String, order: String, cap: u64 },
    #[error("graph with {vertices} vertices exceeds the vertex cap {cap}")]
    GraphTooLarge { vertices: String, cap: u64 },
    #[error("graph with {vertices} vertices exceeds the isomorphism oracle limit {limit}")]
    GraphTooLargeForOracle { vertices: usize, limit: usize },
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("check {check} does not apply to {spec}: {reason}")]
    WrongField {
        check: String,
        spec: String,
        reason: String,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vertex cap {0} exceeds the hard ceiling 2^20")]
    CapAboveCeiling(u64),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by a size limit rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::FieldTooLarge { .. }
                | Error::RingTooLarge { .. }
                | Error::GraphTooLarge { .. }
                | Error::GraphTooLargeForOracle { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
