use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {0} is outside the supported range {min}..={max}", min = crate::MIN_RANK, max = crate::MAX_RANK)]
    RankOutOfRange(usize),

    #[error("generator index {index} exceeds rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("`{0}` is a foundation variable; no ideal generator targets it")]
    FoundationVariable(String),

    #[error("unknown verification kind `{0}`")]
    UnknownKind(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("representation sampling gave up after {0} retries")]
    SamplingFailed(usize),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
