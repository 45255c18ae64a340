//! Exact enumeration of n-ary words avoiding forbidden subwords.
//!
//! The crate is organized around the Goulden-Jackson cluster method: given an
//! alphabet `{1, ..., n}` and a finite set of forbidden words, the generating
//! function of the avoiding-word counts is `1 / (1 - nz - W(F))`, where the
//! weight `W(F)` solves a linear system over the field of rational functions
//! built from suffix-prefix overlaps between forbidden words.
//!
//! On top of that sit the closed forms for words avoiding *streaks* (strictly
//! increasing subwords of a fixed length `k`) and *soft streaks* (non-decreasing
//! subwords), expected-draw statistics for uniform random letters, and the
//! continuous limit `mu_k` of the expected draw count, evaluated to any number
//! of decimal digits with tracked binary precision.
//!
//! Modules:
//! - [`algebra`]: big rationals, dense polynomials, rational functions,
//!   truncated power series, and an exact linear solver over rational functions.
//! - [`cluster`]: the cluster method itself (overlaps, weight systems, `f(z)`).
//! - [`streaks`]: streak/soft-streak closed forms, the `psi` symbol, streak
//!   weights, and generalized binomial coefficients.
//! - [`oracle`]: independent ground truth: exhaustive and automaton-based
//!   counters plus a seeded Monte Carlo draw simulator.
//! - [`analysis`]: expected draws, the continuous limit `mu_k` in arbitrary
//!   precision, and radius-of-convergence checks.

pub mod algebra;
pub mod analysis;
pub mod cluster;
pub mod error;
pub mod oracle;
pub mod streaks;

pub use error::Error;

/// A value derived from an unproven formula.
///
/// The soft-streak generating function and everything downstream of it are
/// conjectural: they have been verified against brute-force enumeration over
/// the ranges exercised by the test suite but carry no proof. The wrapper
/// keeps that status attached to the value so user-facing output can surface
/// it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjectural<T>(T);

impl<T> Conjectural<T> {
    pub fn new(value: T) -> Self {
        Conjectural(value)
    }

    pub fn get(&self) -> &T {
        &self.0
    }

    pub fn into_inner(self) -> T {
        self.0
    }
}
