//! Exact arithmetic foundation: big rationals, dense univariate polynomials,
//! rational functions, truncated power series, and a linear solver over the
//! rational-function field.
//!
//! Everything here is a pure value type with structural equality; all
//! arithmetic is exact. Coefficients are arbitrary-precision rationals
//! throughout, since avoiding-word counts grow like `n^s` and leave fixed
//! width integers behind quickly.

mod linear;
mod poly;
mod ratfun;
mod series;

pub use linear::solve_linear_system;
pub use poly::Poly;
pub use ratfun::RatFun;
pub use series::TruncatedSeries;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Exact rational number: arbitrary-precision numerator over a positive
/// arbitrary-precision denominator, always reduced. Zero is `0/1`.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `num/den`.
///
/// Panics if `den == 0`.
pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient `C(n, r)`, zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Signed binomial coefficient for convenience in alternating sums.
pub fn binomial_int(n: u64, r: u64) -> BigInt {
    BigInt::from(binomial(n, r))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}
