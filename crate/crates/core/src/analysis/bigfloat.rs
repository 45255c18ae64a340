//! Arbitrary-precision real and complex arithmetic.
//!
//! [`BigFloat`] is a fixed-point value `mantissa * 2^-prec` with an explicit
//! binary precision `prec`. Fixed point keeps the error analysis elementary:
//! addition and subtraction of equal-precision values are exact, and every
//! rounding step costs at most half an ulp (`2^-prec-1`). Binary operations
//! on mixed precisions promote to the larger precision, never silently down.
//!
//! The transcendental functions (`exp`, `sin_cos`, [`pi`]) work at an
//! internal guard precision and round back, so the returned value is
//! accurate to a few ulps of the requested precision. Arguments here are
//! always of moderate size (at most a few multiples of pi), which the
//! argument-reduction steps rely on.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::Rat;

/// Guard bits used inside transcendental evaluations.
const GUARD: u32 = 64;

/// Fixed-point arbitrary-precision real: `mantissa * 2^-prec`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigFloat {
    mantissa: BigInt,
    prec: u32,
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat { mantissa: BigInt::zero(), prec }
    }

    pub fn from_bigint(value: BigInt, prec: u32) -> Self {
        BigFloat { mantissa: value << prec, prec }
    }

    pub fn from_i64(value: i64, prec: u32) -> Self {
        BigFloat::from_bigint(BigInt::from(value), prec)
    }

    /// Nearest fixed-point value to an exact rational.
    pub fn from_rat(value: &Rat, prec: u32) -> Self {
        let scaled = value.numer() << prec;
        BigFloat { mantissa: div_round(&scaled, value.denom()), prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Re-round to a different precision. Raising precision is exact.
    pub fn with_prec(&self, prec: u32) -> Self {
        if prec >= self.prec {
            BigFloat { mantissa: &self.mantissa << (prec - self.prec), prec }
        } else {
            BigFloat { mantissa: round_shift(&self.mantissa, self.prec - prec), prec }
        }
    }

    fn promote(a: &BigFloat, b: &BigFloat) -> (BigInt, BigInt, u32) {
        let prec = a.prec.max(b.prec);
        let ma = &a.mantissa << (prec - a.prec);
        let mb = &b.mantissa << (prec - b.prec);
        (ma, mb, prec)
    }

    /// Exact at the promoted precision.
    pub fn add(&self, rhs: &BigFloat) -> BigFloat {
        let (ma, mb, prec) = BigFloat::promote(self, rhs);
        BigFloat { mantissa: ma + mb, prec }
    }

    pub fn sub(&self, rhs: &BigFloat) -> BigFloat {
        let (ma, mb, prec) = BigFloat::promote(self, rhs);
        BigFloat { mantissa: ma - mb, prec }
    }

    pub fn neg(&self) -> BigFloat {
        BigFloat { mantissa: -&self.mantissa, prec: self.prec }
    }

    /// One rounding at the promoted precision.
    pub fn mul(&self, rhs: &BigFloat) -> BigFloat {
        let (ma, mb, prec) = BigFloat::promote(self, rhs);
        BigFloat { mantissa: round_shift(&(ma * mb), prec), prec }
    }

    /// One rounding at the promoted precision.
    ///
    /// Panics on division by zero; callers guard against zero denominators.
    pub fn div(&self, rhs: &BigFloat) -> BigFloat {
        assert!(!rhs.is_zero(), "BigFloat division by zero");
        let (ma, mb, prec) = BigFloat::promote(self, rhs);
        BigFloat { mantissa: div_round(&(ma << prec), &mb), prec }
    }

    /// Divide by a small integer.
    pub fn div_u32(&self, d: u32) -> BigFloat {
        BigFloat { mantissa: div_round(&self.mantissa, &BigInt::from(d)), prec: self.prec }
    }

    pub fn mul_u32(&self, f: u32) -> BigFloat {
        BigFloat { mantissa: &self.mantissa * f, prec: self.prec }
    }

    /// Multiply by `2^e` (exact for `e >= 0`, one rounding otherwise).
    pub fn mul_pow2(&self, e: i32) -> BigFloat {
        if e >= 0 {
            BigFloat { mantissa: &self.mantissa << e as u32, prec: self.prec }
        } else {
            BigFloat { mantissa: round_shift(&self.mantissa, (-e) as u32), prec: self.prec }
        }
    }

    pub fn abs(&self) -> BigFloat {
        BigFloat { mantissa: self.mantissa.abs(), prec: self.prec }
    }

    pub fn cmp_value(&self, rhs: &BigFloat) -> std::cmp::Ordering {
        let (ma, mb, _) = BigFloat::promote(self, rhs);
        ma.cmp(&mb)
    }

    /// Approximate conversion for diagnostics and cross-checks.
    pub fn to_f64(&self) -> f64 {
        // Split off the exponent so huge mantissas survive the conversion.
        let bits = self.mantissa.bits() as i64;
        let drop = (bits - 64).max(0) as u32;
        let head = round_shift(&self.mantissa, drop);
        head.to_f64().unwrap_or(f64::NAN) * 2f64.powi(drop as i32 - self.prec as i32)
    }

    /// Decimal string with exactly `digits` digits after the point, rounded
    /// half away from zero.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigUint::from(10u32).pow(digits);
        let scaled = self.mantissa.magnitude() * &scale;
        let units = round_shift_uint(&scaled, self.prec);
        let int_part = &units / &scale;
        let frac_part = &units % &scale;
        let sign = if self.mantissa.is_negative() && !units.is_zero() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part:0>width$}", width = digits as usize)
        }
    }
}

/// Round `x / 2^bits` to nearest, half away from zero.
fn round_shift(x: &BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return x.clone();
    }
    let magnitude = round_shift_uint(x.magnitude(), bits);
    BigInt::from_biguint(if x.is_negative() { Sign::Minus } else { Sign::Plus }, magnitude)
}

fn round_shift_uint(x: &BigUint, bits: u32) -> BigUint {
    if bits == 0 {
        return x.clone();
    }
    (x + (BigUint::from(1u32) << (bits - 1))) >> bits
}

/// Round `a / b` to nearest, half away from zero.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let doubled = a.magnitude() * 2u32;
    let magnitude = (doubled + b.magnitude()) / (b.magnitude() * 2u32);
    let sign = if a.is_negative() == b.is_negative() { Sign::Plus } else { Sign::Minus };
    BigInt::from_biguint(sign, magnitude)
}

/// Pi by the Machin formula `16 atan(1/5) - 4 atan(1/239)` with integer
/// arctangent series.
pub fn pi(prec: u32) -> BigFloat {
    let work = prec + GUARD;
    let value = (atan_inv_int(5, work) << 4u32) - (atan_inv_int(239, work) << 2u32);
    BigFloat { mantissa: value, prec: work }.with_prec(prec)
}

/// `atan(1/x) * 2^prec` for integer `x >= 2`.
fn atan_inv_int(x: u64, prec: u32) -> BigInt {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = (BigInt::from(1) << prec) / BigInt::from(x);
    let mut acc = BigInt::zero();
    let mut j = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        power /= &x2;
        j += 1;
    }
    acc
}

/// `e^x`, accurate to a few ulps at `prec`. Arguments of any moderate size
/// are handled by halving until `|t| < 1/2` and squaring back.
pub fn exp(x: &BigFloat, prec: u32) -> BigFloat {
    // Halvings needed: |x| < 2^(bits(x) - prec), so bits + 1 halvings put
    // the argument below 1/2.
    let magnitude_bits = (x.mantissa.bits() as i64 - i64::from(x.prec)).max(0) as u32;
    let halvings = magnitude_bits + 1;
    let work = prec + GUARD + 2 * halvings;
    let t = x.with_prec(work).mul_pow2(-(halvings as i32));

    let one = BigFloat::from_i64(1, work);
    let mut sum = one.clone();
    let mut term = one;
    let mut j = 1u32;
    while !term.is_zero() {
        term = term.mul(&t).div_u32(j);
        sum = sum.add(&term);
        j += 1;
    }
    for _ in 0..halvings {
        sum = sum.mul(&sum);
    }
    sum.with_prec(prec)
}

/// `(sin x, cos x)` for `|x| <= 2*pi`, accurate to a few ulps at `prec`.
///
/// Quadrant reduction against a high-precision pi brings the Taylor argument
/// into `[-pi/4, pi/4]`.
pub fn sin_cos(x: &BigFloat, prec: u32) -> (BigFloat, BigFloat) {
    let work = prec + GUARD;
    let x = x.with_prec(work);
    let half_pi = pi(work + 2).with_prec(work).mul_pow2(-1);

    // Nearest integer to x / (pi/2); |x| <= 2 pi keeps it in [-4, 4].
    let ratio = x.div(&half_pi);
    let quadrant = round_shift(&ratio.mantissa, work)
        .to_i64()
        .expect("quadrant fits i64 for |x| <= 2 pi");
    let t = x.sub(&BigFloat::from_i64(quadrant, work).mul(&half_pi));

    let one = BigFloat::from_i64(1, work);
    let t2 = t.mul(&t);
    // sin t = t - t^3/3! + ...
    let mut sin_t = t.clone();
    let mut term = t.clone();
    let mut j = 1u32;
    while !term.is_zero() {
        term = term.mul(&t2).div_u32(2 * j).div_u32(2 * j + 1).neg();
        sin_t = sin_t.add(&term);
        j += 1;
    }
    // cos t = 1 - t^2/2! + ...
    let mut cos_t = one.clone();
    let mut term = one;
    let mut j = 1u32;
    while !term.is_zero() {
        term = term.mul(&t2).div_u32(2 * j - 1).div_u32(2 * j).neg();
        cos_t = cos_t.add(&term);
        j += 1;
    }

    let (s, c) = match quadrant.rem_euclid(4) {
        0 => (sin_t, cos_t),
        1 => (cos_t, sin_t.neg()),
        2 => (sin_t.neg(), cos_t.neg()),
        _ => (cos_t.neg(), sin_t),
    };
    (s.with_prec(prec), c.with_prec(prec))
}

/// Complex number with [`BigFloat`] parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn add(&self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }

    pub fn sub(&self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }

    pub fn mul(&self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }

    pub fn conj(&self) -> BigComplex {
        BigComplex { re: self.re.clone(), im: self.im.neg() }
    }

    /// `e^(re + i im) = e^re (cos im + i sin im)`.
    pub fn exp(&self, prec: u32) -> BigComplex {
        let modulus = exp(&self.re, prec);
        let (s, c) = sin_cos(&self.im, prec);
        BigComplex { re: modulus.mul(&c), im: modulus.mul(&s) }
    }
}
