//! Closed forms for words avoiding streaks.
//!
//! A *streak* of length `k` is a strictly increasing subword of length `k`;
//! a *soft streak* is a non-decreasing one. Specializing the cluster method
//! to the set of all streaks collapses the weight system into explicit
//! polynomials: the generating function of streak-free word counts is
//!
//! ```text
//! f(z) = 1 / sum_{r=0}^{n} psi(k,r) C(n,r) z^r
//! ```
//!
//! where `psi(k,r)` is 1 for `r = 0 (mod k)`, -1 for `r = 1 (mod k)` and 0
//! otherwise. Equivalently, `f` is a roots-of-unity average, which is what
//! the numeric cross-check evaluates. The analogous soft-streak formula,
//! with generalized binomial coefficients in place of `C(n,r)`, is
//! conjectural: it is verified against brute force, not proven, and every
//! value derived from it is wrapped in [`Conjectural`].

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{binomial, binomial_int, rat, Poly, Rat, RatFun};
use crate::cluster::{ForbiddenSet, Word};
use crate::error::Error;
use crate::Conjectural;

/// Alphabet size and streak length. Streaks need `k >= 2`; the alphabet may
/// be smaller than `k`, in which case no streak exists at all.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StreakParams {
    n: u32,
    k: u32,
}

impl StreakParams {
    pub fn new(n: u32, k: u32) -> Result<Self, Error> {
        if k < 2 {
            return Err(Error::InvalidK(k));
        }
        if n < 1 {
            return Err(Error::InvalidWord("alphabet must have at least one letter".into()));
        }
        Ok(StreakParams { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

/// The three-valued symbol filtering binomial expansions:
/// 1 when `r = 0 (mod k)`, -1 when `r = 1 (mod k)`, 0 otherwise.
///
/// Any integer `r` is accepted; the value only depends on `r mod k`.
pub fn psi(k: u32, r: i64) -> Result<i32, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    Ok(psi_val(k, r))
}

pub(crate) fn psi_val(k: u32, r: i64) -> i32 {
    debug_assert!(k >= 2);
    match r.rem_euclid(i64::from(k)) {
        0 => 1,
        1 => -1,
        _ => 0,
    }
}

/// `e^(2*pi*i*s/k)` in double precision.
fn omega(k: u32, s: i64) -> Complex64 {
    let angle = std::f64::consts::TAU * (s as f64) / f64::from(k);
    Complex64::new(angle.cos(), angle.sin())
}

/// The roots-of-unity average equal to `psi(k, r)`:
/// `(1/k) sum_{s=1}^{k-1} (1 - w^-s) w^(r s)` with `w = e^(2 pi i / k)`.
///
/// Double precision; the imaginary part is a numerical residue.
pub fn psi_numeric(k: u32, r: i64) -> Result<Complex64, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for s in 1..i64::from(k) {
        sum += (Complex64::new(1.0, 0.0) - omega(k, -s)) * omega(k, r * s);
    }
    Ok(sum / f64::from(k))
}

/// Denominator of the streak-free generating function:
/// `sum_{r=0}^{n} psi(k,r) C(n,r) z^r`, exact.
pub fn streak_denominator(p: &StreakParams) -> Poly {
    let coeffs = (0..=u64::from(p.n))
        .map(|r| {
            let sign = psi_val(p.k, r as i64);
            Rat::from_integer(BigInt::from(sign) * binomial_int(u64::from(p.n), r))
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// The streak-free generating function `f(z) = 1 / streak_denominator`.
///
/// For `k > n` every `psi` term beyond `r = 1` vanishes, so it degenerates
/// to `1/(1 - nz)`: no streak of length `k` fits in the alphabet and all
/// `n^s` words are counted.
pub fn streak_genfun(p: &StreakParams) -> RatFun {
    RatFun::new(Poly::one(), streak_denominator(p)).expect("denominator has constant term 1")
}

/// The same function by its roots-of-unity form,
/// `k / sum_{s=1}^{k-1} (1 - w^-s)(1 + w^s z)^n`, in double precision.
///
/// `min_denominator` guards the final division; a denominator magnitude
/// below it is reported as [`Error::NearZeroDenominator`].
pub fn streak_genfun_rou(
    p: &StreakParams,
    z: Complex64,
    min_denominator: f64,
) -> Result<Complex64, Error> {
    let mut sum = Complex64::new(0.0, 0.0);
    for s in 1..i64::from(p.k) {
        let w = omega(p.k, s);
        sum += (Complex64::new(1.0, 0.0) - omega(p.k, -s))
            * (Complex64::new(1.0, 0.0) + w * z).powi(p.n as i32);
    }
    if sum.norm() < min_denominator {
        return Err(Error::NearZeroDenominator(sum.norm()));
    }
    Ok(f64::from(p.k) / sum)
}

/// Weight of any streak of length `k` starting with letter `m`, in closed
/// form: `w_m = -z^k sum_{r=0}^{m-1} psi(k,r) C(m-1,r) z^r`.
///
/// The weight depends only on the first letter (and on `k`), not on the rest
/// of the streak, and not on the alphabet size.
pub fn weight_w_closed(m: u32, k: u32) -> Result<Poly, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    if m < 1 {
        return Err(Error::InvalidWord("streak weights are indexed from m = 1".into()));
    }
    let mut coeffs = vec![rat(0); k as usize];
    for r in 0..u64::from(m) {
        let sign = psi_val(k, r as i64);
        coeffs.push(Rat::from_integer(
            BigInt::from(-sign) * binomial_int(u64::from(m) - 1, r),
        ));
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// The same weights by the recursion obtained from the overlap structure of
/// the streak set:
/// `w_m = -z^k - sum_{r=1}^{m-1} sum_{s=1}^{k-1} C(m-r-1, s-1) z^s w_r`.
///
/// Produces output identical to [`weight_w_closed`]; the two routes are kept
/// separate so they can check each other.
pub fn weight_w_recursive(m: u32, k: u32) -> Result<Poly, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    if m < 1 {
        return Err(Error::InvalidWord("streak weights are indexed from m = 1".into()));
    }
    let mut weights: Vec<Poly> = Vec::with_capacity(m as usize);
    for cur in 1..=u64::from(m) {
        let mut w = Poly::monomial(rat(-1), k as usize);
        for r in 1..cur {
            let mut coupling = Poly::zero();
            for s in 1..u64::from(k) {
                let c = binomial_int(cur - r - 1, s - 1);
                if !c.is_zero() {
                    coupling = &coupling + &Poly::monomial(Rat::from_integer(c), s as usize);
                }
            }
            w = &w - &(&coupling * &weights[(r - 1) as usize]);
        }
        weights.push(w);
    }
    Ok(weights.pop().expect("m >= 1"))
}

/// Total weight of the set of all streaks over `{1, ..., n}`:
/// `W(F) = -sum_{r=k}^{n} psi(k,r) C(n,r) z^r`, the zero polynomial when
/// `k > n`.
pub fn sum_of_weights(p: &StreakParams) -> Poly {
    if p.k > p.n {
        return Poly::zero();
    }
    let mut coeffs = vec![rat(0); p.n as usize + 1];
    for r in u64::from(p.k)..=u64::from(p.n) {
        let sign = psi_val(p.k, r as i64);
        coeffs[r as usize] =
            Rat::from_integer(BigInt::from(-sign) * binomial_int(u64::from(p.n), r));
    }
    Poly::from_coeffs(coeffs)
}

/// Generalized binomial coefficient `B(n, k, r)`: the coefficient of `x^r`
/// in `(1 + x + ... + x^(k-1))^n`, computed by the alternating sum
/// `sum_{s=0}^{floor(r/k)} (-1)^s C(n,s) C(n+r-ks-1, n-1)`.
pub fn gen_binom(n: u32, k: u32, r: u64) -> Result<BigUint, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    if n == 0 {
        // (empty product)^0 = 1: only the constant term survives.
        return Ok(if r == 0 { BigUint::one() } else { BigUint::zero() });
    }
    if r > u64::from(k - 1) * u64::from(n) {
        return Ok(BigUint::zero());
    }
    let mut acc = BigInt::zero();
    for s in 0..=(r / u64::from(k)) {
        let term = binomial_int(u64::from(n), s)
            * binomial_int(u64::from(n) + r - u64::from(k) * s - 1, u64::from(n) - 1);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    debug_assert!(!acc.is_negative(), "generalized binomial coefficients are non-negative");
    Ok(acc.to_biguint().expect("non-negative"))
}

/// Conjectural generating function for soft-streak-free word counts:
/// `f(z) = (1 - z^k)^n / sum_{r=0}^{(k-1)n} psi(k,r) B(n,k,r) z^r`.
///
/// Unproven; verified against enumeration over the tested ranges only.
pub fn soft_streak_genfun(p: &StreakParams) -> Conjectural<RatFun> {
    let num = Poly::from_coeffs({
        let mut c = vec![rat(0); p.k as usize + 1];
        c[0] = rat(1);
        c[p.k as usize] = rat(-1);
        c
    })
    .pow(p.n);
    let top = u64::from(p.k - 1) * u64::from(p.n);
    let den = Poly::from_coeffs(
        (0..=top)
            .map(|r| {
                let sign = psi_val(p.k, r as i64);
                let b = BigInt::from(gen_binom(p.n, p.k, r).expect("k >= 2"));
                Rat::from_integer(BigInt::from(sign) * b)
            })
            .collect(),
    );
    Conjectural::new(RatFun::new(num, den).expect("denominator has constant term 1"))
}

/// Roots-of-unity form of the conjectural soft-streak generating function:
/// `k / sum_{s=1}^{k} (1 - w^-s)(1 - w^s z)^-n`, double precision.
pub fn soft_streak_genfun_rou(
    p: &StreakParams,
    z: Complex64,
    min_denominator: f64,
) -> Result<Conjectural<Complex64>, Error> {
    let mut sum = Complex64::new(0.0, 0.0);
    for s in 1..=i64::from(p.k) {
        let w = omega(p.k, s);
        let base = Complex64::new(1.0, 0.0) - w * z;
        if base.norm() < min_denominator {
            return Err(Error::NearZeroDenominator(base.norm()));
        }
        sum += (Complex64::new(1.0, 0.0) - omega(p.k, -s)) * base.powi(-(p.n as i32));
    }
    if sum.norm() < min_denominator {
        return Err(Error::NearZeroDenominator(sum.norm()));
    }
    Ok(Conjectural::new(f64::from(p.k) / sum))
}

/// All strictly increasing words of length `k` over `{1, ..., n}`: the
/// forbidden set whose cluster solution the closed forms shortcut. Empty
/// when `k > n`.
pub fn streak_set(p: &StreakParams) -> ForbiddenSet {
    let mut words = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(p.k as usize);
    gather_monotone(p.n, p.k, false, &mut current, &mut words);
    ForbiddenSet::new(p.n, words).expect("streaks are valid words")
}

/// All non-decreasing words of length `k` over `{1, ..., n}`.
pub fn soft_streak_set(p: &StreakParams) -> ForbiddenSet {
    let mut words = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(p.k as usize);
    gather_monotone(p.n, p.k, true, &mut current, &mut words);
    ForbiddenSet::new(p.n, words).expect("soft streaks are valid words")
}

fn gather_monotone(n: u32, k: u32, soft: bool, current: &mut Vec<u32>, out: &mut Vec<Word>) {
    if current.len() == k as usize {
        out.push(Word::new(current.clone()).expect("non-empty"));
        return;
    }
    let low = match current.last() {
        None => 1,
        Some(&l) if soft => l,
        Some(&l) => l + 1,
    };
    for letter in low..=n {
        current.push(letter);
        gather_monotone(n, k, soft, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_frac;

    #[test]
    fn psi_direct_cases() {
        assert_eq!(psi(3, 0).unwrap(), 1);
        assert_eq!(psi(3, 1).unwrap(), -1);
        assert_eq!(psi(3, 2).unwrap(), 0);
    }

    #[test]
    fn psi_k2_is_alternating_sign() {
        for r in -10..=10i64 {
            assert_eq!(psi(2, r).unwrap(), if r.rem_euclid(2) == 0 { 1 } else { -1 });
        }
        assert_eq!(psi(2, 5).unwrap(), -1);
    }

    #[test]
    fn psi_is_periodic_and_handles_negatives() {
        assert_eq!(psi(4, -3).unwrap(), -1); // -3 = 1 (mod 4)
        for k in 2..=12u32 {
            for r in -(3 * i64::from(k))..=(3 * i64::from(k)) {
                assert_eq!(psi(k, r).unwrap(), psi(k, r + i64::from(k)).unwrap());
            }
        }
    }

    #[test]
    fn psi_rejects_k_below_2() {
        assert_eq!(psi(1, 0), Err(Error::InvalidK(1)));
        assert_eq!(psi_numeric(0, 0), Err(Error::InvalidK(0)));
    }

    #[test]
    fn psi_numeric_matches_exact_symbol() {
        for k in 2..=16u32 {
            for r in 0..=(3 * i64::from(k)) {
                let numeric = psi_numeric(k, r).unwrap();
                let exact = f64::from(psi(k, r).unwrap());
                assert!(
                    (numeric - Complex64::new(exact, 0.0)).norm() < 1e-10,
                    "k={k} r={r}: {numeric} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn psi_numeric_spot_values() {
        assert!((psi_numeric(5, 0).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((psi_numeric(3, 1).unwrap() - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert!(psi_numeric(7, 4).unwrap().norm() < 1e-12);
    }

    #[test]
    fn psi_cosine_forms_for_small_k() {
        // Decorative closed forms for k = 3 and k = 4.
        for r in 0..12i64 {
            let expect3 = 2.0 / 3f64.sqrt()
                * (std::f64::consts::TAU * r as f64 / 3.0 + std::f64::consts::FRAC_PI_6).cos();
            assert!((f64::from(psi(3, r).unwrap()) - expect3).abs() < 1e-12);
            let expect4 = (std::f64::consts::FRAC_PI_2 * r as f64 + std::f64::consts::FRAC_PI_4)
                .cos()
                / 2f64.sqrt()
                + 0.5 * (-1f64).powi(r as i32);
            assert!((f64::from(psi(4, r).unwrap()) - expect4).abs() < 1e-12);
        }
    }

    fn params(n: u32, k: u32) -> StreakParams {
        StreakParams::new(n, k).unwrap()
    }

    #[test]
    fn denominator_for_k2_is_binomial_expansion() {
        assert_eq!(streak_denominator(&params(2, 2)), Poly::from_int_coeffs(&[1, -2, 1]));
    }

    #[test]
    fn denominator_spot_values() {
        assert_eq!(streak_denominator(&params(4, 3)), Poly::from_int_coeffs(&[1, -4, 0, 4, -1]));
        assert_eq!(streak_denominator(&params(3, 3)), Poly::from_int_coeffs(&[1, -3, 0, 1]));
    }

    #[test]
    fn genfun_for_two_letters_pairs() {
        // 1/(1-z)^2: coefficients s + 1.
        let f = streak_genfun(&params(2, 2));
        let s = f.series(6).unwrap();
        for (i, c) in s.coeffs().iter().enumerate() {
            assert_eq!(c, &rat(i as i64 + 1));
        }
    }

    #[test]
    fn genfun_for_one_letter_never_streaks() {
        let f = streak_genfun(&params(1, 2));
        let s = f.series(5).unwrap();
        assert!(s.coeffs().iter().all(|c| c == &rat(1)));
    }

    #[test]
    fn genfun_for_small_alphabet_counts_all_words() {
        // k = 3 > n = 2: no streak fits, f = 1/(1 - 2z).
        let f = streak_genfun(&params(2, 3));
        let s = f.series(8).unwrap();
        for (i, c) in s.coeffs().iter().enumerate() {
            assert_eq!(c, &rat(1i64 << i));
        }
    }

    #[test]
    fn rou_form_matches_exact_evaluation() {
        for (n, k, z) in [(4u32, 3u32, 0.1f64), (5, 4, 0.05)] {
            let p = params(n, k);
            let exact = streak_genfun(&p)
                .eval(&(Rat::new(BigInt::from((z * 100.0).round() as i64), BigInt::from(100))))
                .unwrap();
            let exact_f = exact.to_f64().unwrap();
            let numeric = streak_genfun_rou(&p, Complex64::new(z, 0.0), 1e-12).unwrap();
            assert!(
                (numeric - Complex64::new(exact_f, 0.0)).norm() < 1e-10,
                "n={n} k={k}: {numeric} vs {exact_f}"
            );
        }
    }

    #[test]
    fn rou_form_at_zero_is_one() {
        let v = streak_genfun_rou(&params(3, 2), Complex64::new(0.0, 0.0), 1e-12).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn weight_closed_small_cases() {
        assert_eq!(weight_w_closed(1, 4).unwrap(), Poly::from_int_coeffs(&[0, 0, 0, 0, -1]));
        assert_eq!(weight_w_closed(2, 4).unwrap(), Poly::from_int_coeffs(&[0, 0, 0, 0, -1, 1]));
    }

    #[test]
    fn weight_recursive_base_case() {
        assert_eq!(weight_w_recursive(1, 3).unwrap(), Poly::from_int_coeffs(&[0, 0, 0, -1]));
    }

    #[test]
    fn weight_routes_agree() {
        for k in 2..=6u32 {
            for m in 1..=12u32 {
                assert_eq!(
                    weight_w_closed(m, k).unwrap(),
                    weight_w_recursive(m, k).unwrap(),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn weight_w5_matches_written_out_recursion() {
        // w5 = -z^4 - (3z^3+3z^2+z) w1 - (z^3+2z^2+z) w2 - (z^2+z) w3 - z w4
        let w: Vec<Poly> =
            (1..=4).map(|m| weight_w_closed(m, 4).unwrap()).collect();
        let mut expect = Poly::from_int_coeffs(&[0, 0, 0, 0, -1]);
        let couplings = [
            Poly::from_int_coeffs(&[0, 1, 3, 3]),
            Poly::from_int_coeffs(&[0, 1, 2, 1]),
            Poly::from_int_coeffs(&[0, 1, 1]),
            Poly::from_int_coeffs(&[0, 1]),
        ];
        for (c, w) in couplings.iter().zip(&w) {
            expect = &expect - &(c * w);
        }
        assert_eq!(weight_w_closed(5, 4).unwrap(), expect);
    }

    #[test]
    fn weight_w7_matches_written_out_recursion() {
        // w7 = -z^4 - (10z^3+5z^2+z) w1 - (6z^3+4z^2+z) w2 - (3z^3+3z^2+z) w3
        //      - (z^3+2z^2+z) w4 - (z^2+z) w5 - z w6
        let w: Vec<Poly> = (1..=6).map(|m| weight_w_closed(m, 4).unwrap()).collect();
        let mut expect = Poly::from_int_coeffs(&[0, 0, 0, 0, -1]);
        let couplings = [
            Poly::from_int_coeffs(&[0, 1, 5, 10]),
            Poly::from_int_coeffs(&[0, 1, 4, 6]),
            Poly::from_int_coeffs(&[0, 1, 3, 3]),
            Poly::from_int_coeffs(&[0, 1, 2, 1]),
            Poly::from_int_coeffs(&[0, 1, 1]),
            Poly::from_int_coeffs(&[0, 1]),
        ];
        for (c, w) in couplings.iter().zip(&w) {
            expect = &expect - &(c * w);
        }
        assert_eq!(weight_w_closed(7, 4).unwrap(), expect);
        assert_eq!(weight_w_recursive(7, 4).unwrap(), expect);
    }

    #[test]
    fn sum_of_weights_spot_values() {
        assert_eq!(sum_of_weights(&params(3, 3)), Poly::from_int_coeffs(&[0, 0, 0, -1]));
        assert_eq!(sum_of_weights(&params(4, 5)), Poly::zero());
        // n=5, k=3: -(C(5,3) z^3 - C(5,4) z^4) = -10z^3 + 5z^4.
        assert_eq!(sum_of_weights(&params(5, 3)), Poly::from_int_coeffs(&[0, 0, 0, -10, 5]));
    }

    #[test]
    fn gen_binom_reduces_to_binomial_for_k2() {
        for n in 0..=8u32 {
            for r in 0..=u64::from(n) + 2 {
                assert_eq!(gen_binom(n, 2, r).unwrap(), binomial(u64::from(n), r));
            }
        }
    }

    #[test]
    fn gen_binom_matches_direct_expansion() {
        assert_eq!(gen_binom(2, 3, 2).unwrap(), BigUint::from(3u32));
        for (n, k) in [(4u32, 3u32), (3, 4), (5, 2), (2, 5)] {
            let base = Poly::from_coeffs(vec![rat(1); k as usize]);
            let power = base.pow(n);
            for r in 0..=u64::from(k - 1) * u64::from(n) + 2 {
                let direct = power.coeff(r as usize);
                let formula = Rat::from_integer(BigInt::from(gen_binom(n, k, r).unwrap()));
                assert_eq!(direct, formula, "n={n} k={k} r={r}");
            }
        }
    }

    #[test]
    fn gen_binom_vanishes_beyond_top_degree() {
        assert_eq!(gen_binom(4, 3, 9).unwrap(), BigUint::zero());
        assert_eq!(gen_binom(0, 3, 0).unwrap(), BigUint::one());
        assert_eq!(gen_binom(0, 3, 1).unwrap(), BigUint::zero());
    }

    #[test]
    fn soft_genfun_for_k2_is_binomial_power() {
        // (1+z)^n after cancellation.
        let f = soft_streak_genfun(&params(3, 2));
        let expect =
            RatFun::from_poly(Poly::from_int_coeffs(&[1, 3, 3, 1]));
        assert_eq!(f.get(), &expect);
    }

    #[test]
    fn soft_genfun_equals_unreduced_formula() {
        // n=4, k=3: numerator (1-z^3)^4 over the psi-filtered B coefficients
        // of (1+x+x^2)^4. Both share a (1-z)^4 factor; equality as rational
        // functions is what matters.
        let f = soft_streak_genfun(&params(4, 3));
        let num = Poly::from_int_coeffs(&[1, 0, 0, -1]).pow(4);
        let den = Poly::from_int_coeffs(&[1, -4, 0, 16, -19, 0, 10, -4]);
        assert_eq!(f.get(), &RatFun::new(num, den.clone()).unwrap());
        // After cancellation the denominator is the degree-3 cofactor.
        assert_eq!(f.get().den(), &Poly::from_int_coeffs(&[1, 0, -6, -4]));
        assert_eq!(f.get().num(), &Poly::from_int_coeffs(&[1, 1, 1]).pow(4));
        // The removed factor is (1-z)^4.
        assert_eq!(
            &(f.get().den() * &Poly::from_int_coeffs(&[1, -1]).pow(4)),
            &den
        );
    }

    #[test]
    fn soft_rou_matches_exact_evaluation() {
        for (n, k, num, den) in [(4u32, 3u32, 1i64, 10i64), (2, 4, 1, 5)] {
            let p = params(n, k);
            let z = rat_frac(num, den);
            let exact = soft_streak_genfun(&p).get().eval(&z).unwrap().to_f64().unwrap();
            let numeric = soft_streak_genfun_rou(
                &p,
                Complex64::new(num as f64 / den as f64, 0.0),
                1e-12,
            )
            .unwrap();
            assert!(
                (numeric.get() - Complex64::new(exact, 0.0)).norm() < 1e-10,
                "n={n} k={k}"
            );
        }
    }

    #[test]
    fn soft_rou_at_zero_is_one() {
        let v = soft_streak_genfun_rou(&params(3, 2), Complex64::new(0.0, 0.0), 1e-12).unwrap();
        assert!((v.get() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn streak_sets_have_expected_sizes() {
        assert_eq!(streak_set(&params(5, 3)).words().len(), 10);
        assert_eq!(streak_set(&params(4, 5)).words().len(), 0);
        assert_eq!(soft_streak_set(&params(4, 3)).words().len(), 20);
        // Spot-check a member.
        let set = streak_set(&params(5, 3));
        assert!(set.words().contains(&Word::new(vec![2, 4, 5]).unwrap()));
    }
}
