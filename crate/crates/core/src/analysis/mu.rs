//! The continuous limit `mu_k`: expected draws from a continuous
//! distribution until `k` consecutive increasing values appear.
//!
//! `mu_k = k / sum_{s=1}^{k-1} e^(w^s) (1 - w^-s)` with `w = e^(2 pi i / k)`.
//!
//! The sum is a cancellation trap: its value is about `k / k!` while the
//! individual terms are of order 1, and `mu_k` itself is about `k!`, so the
//! absolute error of the sum gets amplified by roughly `k!^2 / k` on the way
//! to `mu_k`. The working precision therefore budgets for *twice*
//! `log2(k!)` on top of the requested digits, plus guard bits; that provably
//! absorbs both the cancellation and the magnification.

use num_bigint::BigInt;
use num_traits::One;

use super::bigfloat::{exp, pi, sin_cos, BigComplex, BigFloat};
use crate::algebra::factorial;
use crate::error::Error;

/// `mu_k` rendered to a requested number of decimal places.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MuResult {
    pub k: u32,
    /// Decimal places after the point.
    pub digits: u32,
    /// Decimal rendering, rounded at the last place.
    pub value: String,
    /// Binary working precision that produced it.
    pub working_precision: u32,
}

/// Working precision in bits for `digits` decimal places of `mu_k`.
fn working_bits(k: u32, digits: u32) -> u32 {
    let factorial_bits = factorial(u64::from(k)).bits() as u32;
    let digit_bits = (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32;
    digit_bits + 2 * factorial_bits + 96
}

/// `mu_k` as a fixed-point value at precision `prec`.
///
/// Terms for `s` and `k - s` are complex conjugates, so the sum is assembled
/// from paired real parts (plus the real middle term `2/e` for even `k`);
/// the accumulator is real by construction, not by discarding a residue.
pub(crate) fn mu_bigfloat(k: u32, prec: u32) -> BigFloat {
    debug_assert!(k >= 2);
    let tau = pi(prec + 2).mul_pow2(1); // 2 pi, exact doubling
    let one = BigFloat::from_i64(1, prec);
    let mut sum = BigFloat::zero(prec);
    for s in 1..=(k - 1) / 2 {
        let angle = tau.mul_u32(s).div_u32(k).with_prec(prec);
        let (sin_a, cos_a) = sin_cos(&angle, prec);
        let omega = BigComplex::new(cos_a, sin_a);
        // e^(w^s) (1 - w^-s); w^-s is the conjugate of w^s.
        let factor = BigComplex::new(one.clone(), BigFloat::zero(prec)).sub(&omega.conj());
        let term = omega.exp(prec).mul(&factor);
        sum = sum.add(&term.re.mul_pow2(1));
    }
    if k % 2 == 0 {
        // s = k/2: w^s = -1, the term is 2/e exactly.
        let inv_e = exp(&BigFloat::from_i64(-1, prec), prec);
        sum = sum.add(&inv_e.mul_pow2(1));
    }
    BigFloat::from_i64(i64::from(k), prec).div(&sum)
}

/// `mu_k` to `digits` decimal places.
pub fn mu(k: u32, digits: u32) -> Result<MuResult, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    assert!(digits >= 1, "at least one decimal digit is required");
    let prec = working_bits(k, digits);
    let value = mu_bigfloat(k, prec).to_decimal(digits);
    Ok(MuResult { k, digits, value, working_precision: prec })
}

/// `mu_k - k! - (k-1)!` to `digits` decimal places (signed decimal string).
///
/// The table of `mu_k` values hugs `k! + (k-1)!` from below ever more
/// tightly as `k` grows; this renders the (tiny, negative) gap so that the
/// observation can be checked digit by digit. The asymptotic claim itself is
/// unproven.
pub fn asymptotic_gap(k: u32, digits: u32) -> Result<String, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let prec = working_bits(k, digits);
    let mu_value = mu_bigfloat(k, prec);
    let target = factorial(u64::from(k)) + factorial(u64::from(k) - 1);
    let gap = mu_value.sub(&BigFloat::from_bigint(BigInt::from(target), prec));
    Ok(gap.to_decimal(digits))
}

/// Exact `k! + (k-1)!` for cross-checks.
pub fn factorial_sum(k: u32) -> BigInt {
    BigInt::from(factorial(u64::from(k)) + factorial(u64::from(k) - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn mu_2_is_e_to_sixty_places() {
        let r = mu(2, 60).unwrap();
        assert_eq!(
            r.value,
            "2.718281828459045235360287471352662497757247093699959574966968"
        );
    }

    #[test]
    fn mu_3_to_sixty_places() {
        let r = mu(3, 60).unwrap();
        assert_eq!(
            r.value,
            "7.924372434513184628799810694208415749584787751007803272302703"
        );
    }

    #[test]
    fn mu_10_to_sixty_places() {
        let r = mu(10, 60).unwrap();
        assert_eq!(
            r.value,
            "3991679.999993762687261148961681589183499555116134021765003499924135"
        );
    }

    #[test]
    fn mu_rejects_k_below_2() {
        assert_eq!(mu(1, 10), Err(Error::InvalidK(1)));
    }

    #[test]
    fn mu_matches_double_precision_sum() {
        use num_complex::Complex64;
        for k in 2..=12u32 {
            let mut sum = Complex64::new(0.0, 0.0);
            for s in 1..k {
                let angle = std::f64::consts::TAU * f64::from(s) / f64::from(k);
                let w = Complex64::new(angle.cos(), angle.sin());
                sum += w.exp() * (Complex64::new(1.0, 0.0) - w.conj());
            }
            let direct = f64::from(k) / sum.re;
            let precise: f64 = mu(k, 30).unwrap().value.parse().unwrap();
            assert!(
                ((direct - precise) / precise).abs() < 1e-11,
                "k={k}: {direct} vs {precise}"
            );
        }
    }

    #[test]
    fn requested_digit_counts_are_self_consistent() {
        use crate::algebra::Rat;
        fn parse_decimal(s: &str) -> Rat {
            let (int_part, frac_part) = s.split_once('.').unwrap();
            let negative = int_part.starts_with('-');
            let scale = BigInt::from(10).pow(frac_part.len() as u32);
            let combined = int_part.trim_start_matches('-').parse::<BigInt>().unwrap() * &scale
                + frac_part.parse::<BigInt>().unwrap();
            let v = Rat::new(combined, scale);
            if negative {
                -v
            } else {
                v
            }
        }
        let resolution = Rat::new(BigInt::one(), BigInt::from(10).pow(25));
        for k in [2u32, 5, 9, 17, 30] {
            let a = parse_decimal(&mu(k, 25).unwrap().value);
            let b = parse_decimal(&mu(k, 35).unwrap().value);
            let diff = if a > b { &a - &b } else { &b - &a };
            // Values agree to the shorter rendering's resolution.
            assert!(diff <= resolution, "k={k}: {a} vs {b}");
        }
    }

    #[test]
    fn gap_for_k2_is_e_minus_three() {
        let gap = asymptotic_gap(2, 20).unwrap();
        assert_eq!(gap, "-0.28171817154095476464");
    }

    #[test]
    fn gap_for_k10_matches_table_row() {
        let gap = asymptotic_gap(10, 30).unwrap();
        assert_eq!(gap, "-0.000006237312738851038318410817");
        let as_f64: f64 = gap.parse().unwrap();
        assert!((as_f64 + 6.237e-6).abs() < 1e-9);
    }

    #[test]
    fn factorial_sum_small() {
        assert_eq!(factorial_sum(2).to_i64(), Some(3));
        assert_eq!(factorial_sum(4).to_i64(), Some(30));
        assert_eq!(factorial_sum(10).to_i64(), Some(3_991_680));
    }
}
