use thiserror::Error;

use crate::poly::Var;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable `{0}` is not declared in the polynomial")]
    UnknownVariable(Var),

    #[error("polynomial is not homogeneous: total degrees {first} and {second} both occur")]
    NotHomogeneous { first: u32, second: u32 },

    #[error("polynomial depends on `{0}`, which this operation does not accept")]
    UnexpectedVariable(Var),

    #[error("the zero polynomial has no palindromic structure")]
    ZeroPolynomial,

    /// Coefficients of `t^low` and `t^high` should agree but do not.
    #[error("not palindromic: coeff(t^{low}) = {low_coeff} but coeff(t^{high}) = {high_coeff}")]
    NotPalindromic {
        low: u32,
        high: u32,
        low_coeff: String,
        high_coeff: String,
    },

    #[error("expansion has even length {0}; only odd-length expansions can be split")]
    EvenLength(u32),

    #[error("gamma coefficient {index} is negative ({value})")]
    NotGammaPositive { index: usize, value: String },

    #[error("halving produced a fractional coefficient at {at}: {value} is odd")]
    OddCoefficient { at: String, value: String },

    #[error("enumeration of {size} elements exceeds the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u128 },

    #[error("invalid group specification: {0}")]
    InvalidSpec(String),

    #[error("invalid window at position {position}: {reason}")]
    InvalidWindow { position: usize, reason: String },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("cycle contains the entry {0} more than once")]
    DuplicateEntries(u32),

    #[error("statistic `{stat}` is not defined on {kind} elements")]
    UndefinedStatistic { stat: String, kind: &'static str },

    #[error("family `{family}` has no `{class}` class")]
    UnsupportedClass { family: String, class: String },

    #[error("letters must be strictly increasing positive integers")]
    NonIncreasingLetters,

    #[error("no base value available for {family} at n = {n}")]
    MissingBase { family: String, n: u32 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
