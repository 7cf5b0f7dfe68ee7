//! Brute-force references shared by the integration suites. Nothing here
//! calls the library's quadrature, Bessel functions or harmonics.
#![allow(dead_code)]

use std::f64::consts::PI;

pub fn j0(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.sin() / x
    }
}

pub fn j1(x: f64) -> f64 {
    if x.abs() < 1e-3 {
        x / 3.0 - x.powi(3) / 30.0
    } else {
        x.sin() / (x * x) - x.cos() / x
    }
}

/// First positive root of tan x = x by Newton.
pub fn p_wave_zero() -> f64 {
    let mut x: f64 = 4.5;
    for _ in 0..60 {
        x -= (x.sin() - x * x.cos()) / (x * x.sin());
    }
    x
}

pub fn simpson(a: f64, b: f64, n: usize, f: impl Fn(f64) -> f64) -> f64 {
    assert!(n.is_multiple_of(2));
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

/// U for unit well radius, mass-independent prefactors normalized so each
/// state's own inner product has modulus 1, external charge q at distance d.
pub fn simpson_u(e: f64, q: f64, d: f64, mass: f64) -> f64 {
    let (k0, k1) = (PI, p_wave_zero());
    let (w0, w1) = (
        (k0 * k0 + mass * mass).sqrt(),
        (k1 * k1 + mass * mass).sqrt(),
    );
    // Angular parts integrate to 1, so |own| = 2ω ∫ f² r² dr.
    let n0 = 1.0 / (2.0 * w0 * simpson(0.0, 1.0, 4000, |r| (j0(k0 * r) * r).powi(2))).sqrt();
    let n1 = 1.0 / (2.0 * w1 * simpson(0.0, 1.0, 4000, |r| (j1(k1 * r) * r).powi(2))).sqrt();
    let y00 = 1.0 / (4.0 * PI).sqrt();
    let y10 = (3.0 / (4.0 * PI)).sqrt();
    let radial = |r: f64| {
        let angular = simpson(-1.0, 1.0, 2000, |u| {
            y00 * y10 * u * q / (r * r + d * d - 2.0 * r * d * u).sqrt()
        });
        n0 * j0(k0 * r) * n1 * j1(k1 * r) * r * r * 2.0 * PI * angular
    };
    -2.0 * e * simpson(0.0, 1.0, 2000, radial)
}

/// Only the dipole term of 1/|x − dẑ| survives the Y₀₀Y₁₀ overlap.
pub fn multipole_u(e: f64, q: f64, d: f64, mass: f64) -> f64 {
    let (k0, k1) = (PI, p_wave_zero());
    let (w0, w1) = (
        (k0 * k0 + mass * mass).sqrt(),
        (k1 * k1 + mass * mass).sqrt(),
    );
    let n0 = 1.0 / (2.0 * w0 * simpson(0.0, 1.0, 4000, |r| (j0(k0 * r) * r).powi(2))).sqrt();
    let n1 = 1.0 / (2.0 * w1 * simpson(0.0, 1.0, 4000, |r| (j1(k1 * r) * r).powi(2))).sqrt();
    let radial = simpson(0.0, 1.0, 4000, |r| j0(k0 * r) * j1(k1 * r) * r.powi(3));
    -2.0 * e * q * n0 * n1 * radial / (3f64.sqrt() * d * d)
}
