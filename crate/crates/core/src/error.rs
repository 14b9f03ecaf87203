use thiserror::Error;

use crate::constructions::MatchedFailure;
use crate::finite_tables::{GroupError, ReesError, Triple};
use crate::ideals::IdealReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("carrier sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("dot operation is not associative, violations {0:?}")]
    DotNotSemigroup(Vec<Triple>),

    #[error("circ operation is not a group: {0}")]
    CircNotGroup(GroupError),

    #[error("semi-brace identity fails at {0:?}")]
    IdentityFails(Vec<Triple>),

    #[error("rho is not an anti-homomorphism, c(a∘(1∘b)) ≠ c(a∘b) at (a,b,c) = {0:?}")]
    RhoNotAntihomomorphism(Triple),

    #[error("multiplicative semigroup is not completely simple: {0}")]
    NotCompletelySimple(ReesError),

    #[error("the first factor is not a skew brace (its dot table is not a group)")]
    NotSkewBrace,

    #[error("element {0} is not in B·1∘")]
    NotInK(usize),

    #[error("{what}: size {requested} exceeds cap {limit}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("invalid matched product data: {0}")]
    InvalidMatchedData(MatchedFailure),

    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(IdealReport),

    #[error("induced relation is not a congruence for {op} at ({0}, {1})", .pair.0, .pair.1)]
    CongruenceBroken {
        op: &'static str,
        pair: (usize, usize),
    },

    #[error("map does not respect {op} at ({0}, {1})", .pair.0, .pair.1)]
    NotAMorphism {
        op: &'static str,
        pair: (usize, usize),
    },

    #[error("semi-brace is neither right zero nor left zero")]
    NotZeroSemibrace,

    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),

    /// A consequence of the axioms failed to hold; points at a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl From<ReesError> for Error {
    fn from(e: ReesError) -> Self {
        Error::NotCompletelySimple(e)
    }
}

pub(crate) fn check_cap(what: &'static str, requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        Err(Error::CapExceeded {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
