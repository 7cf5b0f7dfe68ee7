use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 4;

/// Associated Legendre `P_l^m(x)` for `0 <= m <= l <= 4`, Condon–Shortley phase,
/// written in terms of `x = cos θ` and `s = sin θ`.
fn associated_legendre(l: u32, m: u32, x: f64, s: f64) -> f64 {
    match (l, m) {
        (0, 0) => 1.0,
        (1, 0) => x,
        (1, 1) => -s,
        (2, 0) => 0.5 * (3.0 * x * x - 1.0),
        (2, 1) => -3.0 * x * s,
        (2, 2) => 3.0 * s * s,
        (3, 0) => 0.5 * (5.0 * x.powi(3) - 3.0 * x),
        (3, 1) => -1.5 * (5.0 * x * x - 1.0) * s,
        (3, 2) => 15.0 * x * s * s,
        (3, 3) => -15.0 * s.powi(3),
        (4, 0) => (35.0 * x.powi(4) - 30.0 * x * x + 3.0) / 8.0,
        (4, 1) => -2.5 * (7.0 * x.powi(3) - 3.0 * x) * s,
        (4, 2) => 7.5 * (7.0 * x * x - 1.0) * s * s,
        (4, 3) => -105.0 * x * s.powi(3),
        (4, 4) => 105.0 * s.powi(4),
        _ => unreachable!("degree checked by caller"),
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Orthonormal spherical harmonic `Y_lm(θ, φ)`, `l <= 4`.
pub fn spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Result<Complex64> {
    if l > MAX_DEGREE || m.unsigned_abs() > l {
        return Err(Error::InvalidArgument(format!(
            "spherical harmonic (l, m) = ({l}, {m}) outside 0 <= |m| <= l <= {MAX_DEGREE}"
        )));
    }
    let am = m.unsigned_abs();
    let norm = ((2 * l + 1) as f64 / (4.0 * PI) * factorial(l - am) / factorial(l + am)).sqrt();
    let (s, x) = theta.sin_cos();
    let positive = Complex64::from_polar(
        norm * associated_legendre(l, am, x, s),
        f64::from(am as i32) * phi,
    );
    if m >= 0 {
        Ok(positive)
    } else if am.is_multiple_of(2) {
        Ok(positive.conj())
    } else {
        Ok(-positive.conj())
    }
}

/// All `(l, m)` pairs with `l <= max_l`.
pub fn degree_orders(max_l: u32) -> Vec<(u32, i32)> {
    (0..=max_l)
        .flat_map(|l| (-(l as i32)..=l as i32).map(move |m| (l, m)))
        .collect()
}
