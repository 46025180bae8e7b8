use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation undefined on the zero polynomial: {0}")]
    ZeroPolynomial(&'static str),

    #[error("unknown variable tag `{0}` (expected `x` or `z`)")]
    UnknownVariable(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot parse rational `{input}`: {reason}")]
    ParseRational { input: String, reason: String },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("{which} is not real-rooted (non-real deficit {deficit})")]
    NotRealRooted { which: String, deficit: usize },

    #[error("theorem violation [{theorem}]: {detail}")]
    TheoremViolation { theorem: String, detail: String },

    #[error("collision or singularity near x = {x}: {detail}")]
    CollisionOrSingularity { x: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
