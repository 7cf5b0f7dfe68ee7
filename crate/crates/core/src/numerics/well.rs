//! Lowest modes of the infinite spherical well.
//!
//! Inside a well of radius `R` the free radial equation
//! `f'' + 2f'/r − l(l+1)f/r² + k²f = 0` is solved by `j_l(kr)`; the boundary
//! condition `f(R) = 0` puts `kR` on a zero of `j_l`. The first positive zero
//! gives the nodeless ground state for each `l`, with `ω² = k² + m²`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tolerances::BISECTION_ABS;

/// Spherical Bessel function `j_l(x)` for `l ∈ {0, 1}`.
pub fn spherical_bessel_j(l: u32, x: f64) -> Result<f64> {
    match l {
        0 => Ok(j0(x)),
        1 => Ok(j1(x)),
        _ => Err(Error::Unsupported(format!("spherical Bessel order {l}"))),
    }
}

fn j0(x: f64) -> f64 {
    if x.abs() < 0.1 {
        let x2 = x * x;
        1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)))
    } else {
        x.sin() / x
    }
}

fn j1(x: f64) -> f64 {
    if x.abs() < 0.1 {
        let x2 = x * x;
        x / 3.0 - x * x2 / 30.0 + x * x2 * x2 / 840.0 - x * x2 * x2 * x2 / 45360.0
    } else {
        (x.sin() / x - x.cos()) / x
    }
}

/// Bisection on a bracketing interval until its width drops below `tol`.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut flo = f(lo);
    if flo == 0.0 {
        return Ok(lo);
    }
    if flo.signum() == f(hi).signum() {
        return Err(Error::InvalidArgument(format!(
            "interval [{lo}, {hi}] does not bracket a root"
        )));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// First positive zero of `j_l`, bracketed by a coarse scan.
pub fn first_bessel_zero(l: u32) -> Result<f64> {
    let f = |x: f64| spherical_bessel_j(l, x).expect("order validated");
    spherical_bessel_j(l, 1.0)?;
    let step = 0.25;
    let mut a = 0.5;
    while f(a).signum() == f(a + step).signum() {
        a += step;
    }
    bisect(f, a, a + step, BISECTION_ABS)
}

/// A nodeless radial profile `amplitude · j_l(k r)` on `[0, R]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialMode {
    pub l: u32,
    pub radius: f64,
    pub k: f64,
    pub omega: f64,
    pub amplitude: f64,
    pub node_count: usize,
}

impl RadialMode {
    pub fn eval(&self, r: f64) -> f64 {
        if r >= self.radius {
            return 0.0;
        }
        self.amplitude * spherical_bessel_j(self.l, self.k * r).expect("order validated")
    }

    pub fn sample(&self, r: &[f64]) -> Vec<f64> {
        r.iter().map(|&r| self.eval(r)).collect()
    }

    /// Same shape, different overall factor.
    pub fn scaled(&self, factor: f64) -> RadialMode {
        RadialMode {
            amplitude: self.amplitude * factor,
            ..self.clone()
        }
    }
}

fn count_interior_nodes(mode: &RadialMode) -> usize {
    let n = 4000;
    let values: Vec<f64> = (1..n)
        .map(|i| mode.eval(mode.radius * i as f64 / n as f64))
        .collect();
    values
        .windows(2)
        .filter(|w| w[0].signum() != w[1].signum())
        .count()
}

/// Lowest mode of angular momentum `l` in a well of radius `radius`.
pub fn solve_well_mode(l: u32, radius: f64, mass: f64) -> Result<RadialMode> {
    if l > 1 {
        return Err(Error::Unsupported(format!(
            "well modes are provided for l = 0 and l = 1 only, got l = {l}"
        )));
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "well radius must be positive, got {radius}"
        )));
    }
    if !(mass >= 0.0) || !mass.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "mass must be non-negative, got {mass}"
        )));
    }
    let k = first_bessel_zero(l)? / radius;
    let mut mode = RadialMode {
        l,
        radius,
        k,
        omega: (k * k + mass * mass).sqrt(),
        amplitude: 1.0,
        node_count: 0,
    };
    mode.node_count = count_interior_nodes(&mode);
    Ok(mode)
}
