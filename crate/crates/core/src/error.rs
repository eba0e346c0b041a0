use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("loop at vertex {0}; graphs are simple")]
    Loop(usize),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("n = {n} is below the case threshold of {case}")]
    BelowCaseThreshold { n: usize, case: &'static str },

    #[error("unknown {kind} `{key}`; known: {known}")]
    UnknownKey {
        kind: &'static str,
        key: String,
        known: String,
    },

    #[error("invalid two-factor set: {0}")]
    FactorSet(String),

    #[error("plan failed at step {step}: {reason}")]
    Plan { step: usize, reason: String },

    #[error("store record at line {line} is corrupt: {reason}")]
    Store { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
