use std::fmt;

/// Predicted vertex count of a construction, `None` when it overflows `u128`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PredictedSize(pub Option<u128>);

impl fmt::Display for PredictedSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "more than 2^128"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("construction too large: predicted {predicted} vertices, cap is {cap}")]
    TooLarge { predicted: PredictedSize, cap: u128 },

    #[error("host is not K_{}-minor-free: the search produced a minor model", .0.t)]
    HostNotMinorFree(Box<crate::region::TModelCertificate>),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
