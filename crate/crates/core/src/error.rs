//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Division of rational functions by the zero function.
    #[error("division by zero")]
    DivisionByZero,

    /// A power-series expansion was requested for a rational function whose
    /// denominator vanishes at z = 0.
    #[error("denominator vanishes at z = 0; no Maclaurin expansion exists")]
    SingularAtZero,

    /// The weight system (or a user-supplied linear system) has no unique
    /// solution over the rational-function field.
    #[error("linear system is singular over the rational-function field")]
    SingularMatrix,

    /// A word violates the alphabet or length constraints.
    #[error("invalid word: {0}")]
    InvalidWord(String),

    /// Streak length must be at least 2.
    #[error("streak length k = {0} is invalid; k must be at least 2")]
    InvalidK(u32),

    /// An exhaustive enumeration would exceed the configured budget.
    #[error("enumeration of {words} words exceeds the budget of {budget}")]
    BudgetExceeded { words: u128, budget: u128 },

    /// A simulation that can never stop: a strict streak of length k > n is
    /// impossible over an alphabet of n letters.
    #[error("simulation cannot terminate: no strict streak of {k} exists over {n} letters")]
    NonTerminating { n: u32, k: u32 },

    /// A numeric denominator too close to zero to evaluate reliably.
    #[error("denominator magnitude {0:e} is below the requested threshold")]
    NearZeroDenominator(f64),

    /// A nominally real quantity came out with a non-negligible imaginary part.
    #[error("imaginary residue {0:e} exceeds tolerance")]
    ImaginaryResidue(f64),
}
