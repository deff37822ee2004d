use thiserror::Error;

/// Errors raised by the algebra and coding routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("field order {p}^{m} exceeds the supported width of 2^32")]
    FieldTooLarge { p: u64, m: u32 },

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("the zero element has no multiplicative order or inverse")]
    ZeroElement,

    #[error("no element of order {order} exists in a field of {field_order} elements")]
    NoRootOfUnity { order: u64, field_order: u64 },

    #[error("gcd({a}, {b}) != 1")]
    NotCoprime { a: u64, b: u64 },

    #[error("characteristic {characteristic} divides {order}; the algebra is not semisimple")]
    NotSemisimple { characteristic: u64, order: u64 },

    #[error("{what} needs {needed} steps but the budget is {budget}; pass a larger budget explicitly")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("cannot parse {0:?}")]
    Parse(String),

    #[error("subgroup is not co-cyclic")]
    NotCocyclic,

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
