//! Truncated power series: the comparison currency between closed forms and
//! the enumeration oracles.

use std::fmt;

use super::{rat, Rat};

/// Prefix of a power series through `z^order`, stored as exactly `order + 1`
/// rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    /// Wrap a coefficient vector; its length fixes the order (`len - 1`).
    ///
    /// Panics on an empty vector (a series prefix always has at least the
    /// constant term).
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least order 0");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&Rat> {
        self.coeffs.get(i)
    }

    /// Truncate to a smaller (or equal) order.
    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        assert!(order <= self.order());
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Cauchy product truncated to `min(order_a, order_b)`.
    pub fn mul_truncated(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![rat(0); order + 1];
        for i in 0..=order {
            for j in 0..=(order - i) {
                coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}
