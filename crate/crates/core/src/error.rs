use thiserror::Error;

/// Errors raised while building or querying semigroups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generators must be positive integers")]
    ZeroGenerator,

    #[error("generators have gcd {gcd}; the complement is infinite")]
    NotNumerical { gcd: u32 },

    #[error("0 cannot be a gap")]
    ZeroGap,

    #[error("complement of the gap set is not closed: {left} + {right} = {sum} is a gap")]
    NotClosed { left: u32, right: u32, sum: u32 },

    #[error("{0} is not a member of the semigroup")]
    NotMember(u32),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("max genus {max_genus} is below the base genus {base_genus}; the fibre is empty")]
    BoundTooSmall { max_genus: u32, base_genus: u32 },

    #[error("genus {requested} exceeds the configured ceiling {ceiling}")]
    LimitExceeded { requested: u32, ceiling: u32 },
}

pub type Result<T> = std::result::Result<T, SemigroupError>;
