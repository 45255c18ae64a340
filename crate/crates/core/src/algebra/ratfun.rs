//! Rational functions in canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Rat, TruncatedSeries};
use crate::error::Error;

/// Quotient of two polynomials in canonical form: numerator and denominator
/// are coprime, and the denominator is a primitive integer polynomial whose
/// lowest-degree nonzero coefficient is positive. The canonical form is
/// deterministic, so equality of values is structural equality.
///
/// The sign convention keeps generating functions in the shape they are
/// usually written in (denominator with constant term `1`), so a counting
/// function prints as `(1 + z^2)/(1 - 4z + 2z^2 - ...)` rather than some
/// rescaling of it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Build `num / den` in canonical form.
    ///
    /// Returns [`Error::DivisionByZero`] if `den` is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut f = RatFun { num, den };
        f.canonicalize();
        Ok(f)
    }

    pub fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFun { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn from_rat(c: Rat) -> Self {
        RatFun::from_poly(Poly::monomial(c, 0))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn canonicalize(&mut self) {
        debug_assert!(!self.den.is_zero());
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = Poly::gcd(&self.num, &self.den);
        if g.degree() != Some(0) {
            let (qn, rn) = self.num.div_rem(&g);
            let (qd, rd) = self.den.div_rem(&g);
            debug_assert!(rn.is_zero() && rd.is_zero());
            self.num = qn;
            self.den = qd;
        }
        let scale = self.den.content().recip();
        self.num = self.num.scale(&scale);
        self.den = self.den.scale(&scale);
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<RatFun, Error> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RatFun) -> Result<RatFun, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
            .expect("nonzero denominator"))
    }

    /// Exact evaluation at a rational point.
    ///
    /// Returns [`Error::DivisionByZero`] when the denominator vanishes there.
    pub fn eval(&self, x: &Rat) -> Result<Rat, Error> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Maclaurin expansion through `z^order`, computed by the long-division
    /// convolution recurrence.
    ///
    /// Returns [`Error::SingularAtZero`] when the denominator vanishes at 0.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries, Error> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::SingularAtZero);
        }
        let mut coeffs: Vec<Rat> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut acc = self.num.coeff(i);
            for j in 1..=i.min(self.den.degree().unwrap_or(0)) {
                let dj = self.den.coeff(j);
                if !dj.is_zero() {
                    acc -= dj * &coeffs[i - j];
                }
            }
            coeffs.push(acc / &d0);
        }
        Ok(TruncatedSeries::from_coeffs(coeffs))
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}
