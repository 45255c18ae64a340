//! Radius-of-convergence checks.
//!
//! For a non-empty forbidden set over `n` letters, the radius of convergence
//! of the avoiding-word generating function is strictly greater than `1/n`.
//! The radius equals the smallest positive zero of the denominator (the
//! counting coefficients are non-negative, so the smallest singularity sits
//! on the positive real axis). This module isolates that zero with exact
//! rational bisection; no floating point enters the assertion path.

use num_traits::Zero;

use crate::algebra::{rat, Poly, Rat};
use crate::cluster::{cluster_genfun, ForbiddenSet};
use crate::error::Error;

/// Result of a radius check.
#[derive(Clone, PartialEq, Debug)]
pub struct RadiusReport {
    pub n: u32,
    /// Denominator of the generating function in lowest terms, oriented so
    /// that its value at 0 is positive.
    pub denominator: Poly,
    /// Isolating interval `[lo, hi]` around the smallest positive real root
    /// of the denominator, or `None` when no positive root exists below the
    /// search bound (for instance when the generating function is a
    /// polynomial).
    pub smallest_positive_root: Option<(Rat, Rat)>,
    /// Whether the evidence confirms the radius exceeds `1/n`: the
    /// denominator is positive on `[0, 1/n]` and any isolated root lies
    /// strictly above `1/n`. A `false` here would falsify the bound.
    pub exceeds_one_over_n: bool,
}

/// Number of bisection refinements of the initial bracket.
const BISECTION_STEPS: u32 = 80;
/// Subdivisions used when scanning for the first sign change.
const SCAN_STEPS: i64 = 256;
/// Doubling cap for the scan bound.
const MAX_BOUND: i64 = 1024;

/// Compute the generating function of `forbidden`, isolate the smallest
/// positive root of its denominator, and check the `1/n` bound.
pub fn radius_check(forbidden: &ForbiddenSet) -> Result<RadiusReport, Error> {
    let genfun = cluster_genfun(forbidden)?;
    let denominator = genfun.den().clone();
    // Canonical form makes the lowest-order coefficient positive, and a
    // generating function with f(0) = 1 cannot have den(0) = 0, so the
    // denominator is positive at zero as printed.
    debug_assert!(denominator.coeff(0) > rat(0));

    let n = forbidden.alphabet_size();
    let root = isolate_smallest_positive_root(&denominator);
    let at_inverse_n = denominator.eval(&Rat::new(1.into(), n.into()));
    let exceeds = !at_inverse_n.is_zero()
        && at_inverse_n > rat(0)
        && match &root {
            Some((lo, _)) => *lo > Rat::new(1.into(), n.into()),
            None => true,
        };
    Ok(RadiusReport { n, denominator, smallest_positive_root: root, exceeds_one_over_n: exceeds })
}

/// Scan `(0, bound]` for the first sign change of `p`, doubling the bound as
/// needed, then bisect. Exact rational arithmetic throughout.
fn isolate_smallest_positive_root(p: &Poly) -> Option<(Rat, Rat)> {
    if p.degree().unwrap_or(0) == 0 {
        return None;
    }
    let mut bound = 2i64;
    loop {
        if let Some(bracket) = scan_for_sign_change(p, bound) {
            return Some(bisect(p, bracket));
        }
        bound *= 2;
        if bound > MAX_BOUND {
            return None;
        }
    }
}

fn scan_for_sign_change(p: &Poly, bound: i64) -> Option<(Rat, Rat)> {
    let mut prev = Rat::zero();
    let mut prev_sign = p.sign_at(&prev);
    debug_assert!(prev_sign != 0, "denominators are positive at zero");
    for i in 1..=SCAN_STEPS {
        let x = Rat::new((i * bound).into(), SCAN_STEPS.into());
        let sign = p.sign_at(&x);
        if sign == 0 {
            // Landed exactly on a root; return a degenerate bracket.
            return Some((x.clone(), x));
        }
        if sign != prev_sign {
            return Some((prev, x));
        }
        prev = x;
        prev_sign = sign;
    }
    None
}

fn bisect(p: &Poly, (mut lo, mut hi): (Rat, Rat)) -> (Rat, Rat) {
    if lo == hi {
        return (lo, hi);
    }
    let lo_sign = p.sign_at(&lo);
    for _ in 0..BISECTION_STEPS {
        let mid = (&lo + &hi) / rat(2);
        let sign = p.sign_at(&mid);
        if sign == 0 {
            return (mid.clone(), mid);
        }
        if sign == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}
