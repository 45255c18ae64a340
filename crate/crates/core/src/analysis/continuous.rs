//! Double-precision checks of the continuous-limit machinery.
//!
//! After normalizing, the expected-draw functions satisfy the initial value
//! problem
//!
//! ```text
//! u_r'(x) = u_1(x) - u_{r+1}(x)   (r = 1, ..., k-2)
//! u_{k-1}'(x) = u_1(x)
//! u_1(1) = ... = u_{k-1}(1) = 1
//! ```
//!
//! whose solution is `u_r(x) = (1/k) sum_{s=1}^{k-1} (1 - w^(r s)) e^(w^s
//! (1-x))`, and `mu_k = 1 / u_{k-1}(0)`. Everything here stays in `f64`; the
//! high-precision version of `mu_k` lives in the sibling module.

use num_complex::Complex64;

use crate::error::Error;

const IMAGINARY_TOLERANCE: f64 = 1e-10;

fn omega(k: u32, e: i64) -> Complex64 {
    let angle = std::f64::consts::TAU * (e as f64) / f64::from(k);
    Complex64::new(angle.cos(), angle.sin())
}

/// `u_r(x)` for `1 <= r <= k-1`, `x` in `[0, 1]`.
///
/// The sum is real up to rounding; an imaginary residue above `1e-10` is
/// reported as [`Error::ImaginaryResidue`] instead of silently dropped.
pub fn u_solution(k: u32, r: u32, x: f64) -> Result<f64, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    assert!(r >= 1 && r < k, "r must lie in 1..k");
    assert!((0.0..=1.0).contains(&x), "x must lie in [0, 1]");
    let mut sum = Complex64::new(0.0, 0.0);
    for s in 1..i64::from(k) {
        let scale = Complex64::new(1.0, 0.0) - omega(k, i64::from(r) * s);
        sum += scale * (omega(k, s) * (1.0 - x)).exp();
    }
    sum /= f64::from(k);
    if sum.im.abs() > IMAGINARY_TOLERANCE {
        return Err(Error::ImaginaryResidue(sum.im));
    }
    Ok(sum.re)
}

/// Maximum residual of the normalized ODE system over an interior grid,
/// with `u'` approximated by central differences of step `1/grid_points`.
///
/// The closed form satisfies the system exactly, so the residual is pure
/// `O(h^2)` discretization error.
pub fn ode_residual(k: u32, grid_points: u32) -> Result<f64, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    assert!(grid_points >= 3, "need at least 3 grid points");
    let h = 1.0 / f64::from(grid_points);
    let mut worst: f64 = 0.0;
    for i in 1..grid_points {
        let x = f64::from(i) * h;
        let u1 = u_solution(k, 1, x)?;
        for r in 1..k {
            let ahead = u_solution(k, r, (x + h).min(1.0))?;
            let behind = u_solution(k, r, x - h)?;
            let derivative = (ahead - behind) / (2.0 * h);
            let rhs = if r + 1 < k { u1 - u_solution(k, r + 1, x)? } else { u1 };
            worst = worst.max((derivative - rhs).abs());
        }
    }
    Ok(worst)
}

/// `mu_k` by the double-precision roots-of-unity sum.
pub fn mu_f64(k: u32) -> Result<f64, Error> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for s in 1..i64::from(k) {
        let w = omega(k, s);
        sum += w.exp() * (Complex64::new(1.0, 0.0) - omega(k, -s));
    }
    Ok(f64::from(k) / sum.re)
}

/// The two `k` values with printed elementary closed forms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClosedFormK {
    K3,
    K4,
}

/// Evaluate the elementary closed form and the roots-of-unity sum for the
/// same `k` in double precision, returning `(closed_form, sum_form)`.
///
/// `mu_3 = sqrt(3e) / (2 cos(sqrt(3)/2 + pi/6))`,
/// `mu_4 = 2e / (1 - e (sin 1 - cos 1))`.
pub fn mu_closed_form_check(k: ClosedFormK) -> (f64, f64) {
    let closed = match k {
        ClosedFormK::K3 => {
            (3.0 * std::f64::consts::E).sqrt()
                / (2.0 * (3f64.sqrt() / 2.0 + std::f64::consts::FRAC_PI_6).cos())
        }
        ClosedFormK::K4 => {
            2.0 * std::f64::consts::E
                / (1.0 - std::f64::consts::E * (1f64.sin() - 1f64.cos()))
        }
    };
    let sum = mu_f64(match k {
        ClosedFormK::K3 => 3,
        ClosedFormK::K4 => 4,
    })
    .expect("k >= 2");
    (closed, sum)
}
