//! Expected-draw statistics, the continuous limit, and radius checks.
//!
//! Drawing uniform letters from `{1, ..., n}` until a forbidden word appears
//! has expected draw count `f(1/n)`, where `f` is the avoiding-word
//! generating function: `E[X] = sum P(X > s) = sum alpha_s n^-s`. The
//! specializations to streaks and soft streaks evaluate exactly as rationals
//! here; the continuous limit `mu_k` is in [`mu`], the supporting ODE system
//! checks in f64 are in `continuous`, and the radius-of-convergence evidence
//! is in `radius`.

mod bigfloat;
mod continuous;
mod mu;
mod radius;

pub use bigfloat::{exp, pi, sin_cos, BigComplex, BigFloat};
pub use continuous::{mu_closed_form_check, mu_f64, ode_residual, u_solution, ClosedFormK};
pub use mu::{asymptotic_gap, factorial_sum, mu, MuResult};
pub use radius::{radius_check, RadiusReport};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{rat, Poly, Rat, RatFun};
use crate::error::Error;
use crate::streaks::{soft_streak_genfun, streak_genfun, StreakParams};
use crate::Conjectural;

/// Expected number of draws, which is infinite when the stopping pattern can
/// never occur (strict streaks with `k > n`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExpectedDraws {
    Finite(Rat),
    Infinite,
}

impl std::fmt::Display for ExpectedDraws {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExpectedDraws::Finite(v) => write!(f, "{v}"),
            ExpectedDraws::Infinite => write!(f, "infinite"),
        }
    }
}

/// Expected draws from `{1, ..., n}` until a strict streak of `k` appears:
/// the exact rational `f(1/n)`, or infinite when `k > n`.
pub fn expected_draws(n: u32, k: u32) -> Result<ExpectedDraws, Error> {
    let params = StreakParams::new(n, k)?;
    let f = streak_genfun(&params);
    let point = Rat::new(BigInt::from(1), BigInt::from(n));
    if f.den().eval(&point).is_zero() {
        return Ok(ExpectedDraws::Infinite);
    }
    Ok(ExpectedDraws::Finite(f.eval(&point).expect("denominator checked nonzero")))
}

/// Expected draws until a soft streak of `k` appears; always finite (a soft
/// streak is unavoidable), but conjectural: it inherits the unproven
/// soft-streak generating function.
pub fn expected_draws_soft(n: u32, k: u32) -> Result<Conjectural<Rat>, Error> {
    let params = StreakParams::new(n, k)?;
    let f = soft_streak_genfun(&params);
    let point = Rat::new(BigInt::from(1), BigInt::from(n));
    Ok(Conjectural::new(f.get().eval(&point).expect("soft denominators are positive at 1/n")))
}

/// Generating function of the minimal forbidden set (one word, a single
/// letter repeated `k` times):
/// `(1 + z + ... + z^(k-1)) / (1 - (n-1)(z + z^2 + ... + z^k))`.
///
/// This is the least forbidding set with a word of length `k`; its
/// coefficients dominate those of any forbidden set whose longest word has
/// length `k`, which is what drives the radius bound.
pub fn minimal_set_genfun(n: u32, k: u32) -> Result<RatFun, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    if n < 1 {
        return Err(Error::InvalidWord("alphabet must have at least one letter".into()));
    }
    let num = Poly::from_coeffs(vec![rat(1); k as usize]);
    let mut den_coeffs = vec![rat(-(i64::from(n) - 1)); k as usize + 1];
    den_coeffs[0] = rat(1);
    let den = Poly::from_coeffs(den_coeffs);
    RatFun::new(num, den)
}
