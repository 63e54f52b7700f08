use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// `a = b = 0`: the equation does not involve either unknown.
    #[error("degenerate equation: a and b are both zero")]
    DegenerateEquation,

    /// The equation cannot be put into the `a ≥ 1, b ≥ 1` normal form.
    #[error("no indefinite normal form for a = {a}, b = {b}, c = {c}: {reason}")]
    NotNormalizable {
        a: BigInt,
        b: BigInt,
        c: BigInt,
        reason: &'static str,
    },

    /// A caller-supplied value violated an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A solution failed to re-verify against its equation.
    #[error("verification failed: ({x}, {y}) does not satisfy {equation}")]
    Verification {
        x: BigInt,
        y: BigInt,
        equation: String,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
