use num_bigint::BigInt;
use thiserror::Error;

use crate::identities::IdentityId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter k must be an integer >= 2 (got {0})")]
    InvalidK(u64),

    #[error("empty index range: from {from} > to {to}")]
    InvalidRange { from: u64, to: u64 },

    #[error("{what} must be at least {min} (got {got})")]
    TooSmall {
        what: &'static str,
        min: u64,
        got: u64,
    },

    #[error("{identity}: precondition violated: {detail}")]
    Precondition {
        identity: IdentityId,
        detail: String,
    },

    #[error("power series denominator must have constant term 1 (got {0})")]
    DenominatorConstant(BigInt),

    #[error("empty sweep: {0}")]
    EmptySweep(&'static str),
}
