use thiserror::Error;

use crate::monomial::ExponentVector;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A module must have at least one generator; the zero ideal is not in F(D).
    #[error("the zero ideal is not a nonzero fractional ideal (no generators given)")]
    ZeroIdeal,

    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("{0} is not an integral ideal")]
    NotIntegral(String),

    /// The chain `[A : P^n]` kept growing. `escaped` is a generator of the
    /// first chain step that is not in `A`, so it lies in `A_S \ A`.
    #[error(
        "S-transform did not stabilize within {max_iter} steps (escaped element {escaped}): \
         some generator of S is not a GV-ideal, so D_S strictly contains D and the \
         transform is not a fractional ideal of D"
    )]
    NonStabilizing {
        max_iter: usize,
        escaped: ExponentVector,
    },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("bad variable subset: {0}")]
    BadSigma(String),

    #[error("prime family does not cover variables {missing:?}; D is not the intersection of the localizations")]
    NonCovering { missing: Vec<usize> },
}
