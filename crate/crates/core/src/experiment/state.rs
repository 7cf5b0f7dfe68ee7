use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{solve_well_mode, spherical_harmonic, BallGrid, RadialMode, MAX_DEGREE};
use crate::report::sig17_complex;

/// Stationary scalar state `N f(r) Y_lm(θ, φ) e^{iσωt}` inside a well.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KgState {
    pub sigma: i8,
    pub omega: f64,
    pub l: u32,
    pub m: i32,
    pub radial: RadialMode,
    #[serde(serialize_with = "sig17_complex")]
    pub norm: Complex64,
}

impl KgState {
    /// Lowest well mode of angular momentum `l` (0 or 1) with `m = 0`, unit prefactor.
    pub fn lowest(l: u32, radius: f64, mass: f64, sigma: i8) -> Result<Self> {
        KgState::with_harmonic(solve_well_mode(l, radius, mass)?, l, 0, sigma)
    }

    /// Puts an arbitrary nodeless radial profile under `Y_lm`. The profile
    /// need not solve the well equation for this `l`; angular overlaps do not
    /// care.
    pub fn with_harmonic(radial: RadialMode, l: u32, m: i32, sigma: i8) -> Result<Self> {
        if sigma != 1 && sigma != -1 {
            return Err(Error::InvalidArgument(format!(
                "phase convention must be ±1, got {sigma}"
            )));
        }
        if l > MAX_DEGREE || m.unsigned_abs() > l {
            return Err(Error::InvalidArgument(format!(
                "no harmonic with l = {l}, m = {m}"
            )));
        }
        Ok(KgState {
            sigma,
            omega: radial.omega,
            l,
            m,
            radial,
            norm: Complex64::new(1.0, 0.0),
        })
    }

    pub fn with_norm(mut self, norm: Complex64) -> Self {
        self.norm = norm;
        self
    }

    fn phase(&self, t: f64) -> Complex64 {
        Complex64::from_polar(1.0, f64::from(self.sigma) * self.omega * t)
    }

    pub fn value(&self, r: f64, theta: f64, phi: f64, t: f64) -> Complex64 {
        let y = spherical_harmonic(self.l, self.m, theta, phi).expect("indices validated");
        self.norm * self.radial.eval(r) * y * self.phase(t)
    }

    /// `∂_t` of [`KgState::value`], taken from the phase factor.
    pub fn time_derivative(&self, r: f64, theta: f64, phi: f64, t: f64) -> Complex64 {
        Complex64::new(0.0, f64::from(self.sigma) * self.omega) * self.value(r, theta, phi, t)
    }

    pub fn sample(&self, grid: &BallGrid, t: f64) -> Vec<Complex64> {
        grid.sample(|r, theta, phi| self.value(r, theta, phi, t))
    }
}

/// Ball integral of the cross density, split into the part without the
/// potential and the `−2eV` part `U`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InnerProduct {
    #[serde(serialize_with = "sig17_complex")]
    pub total: Complex64,
    #[serde(serialize_with = "sig17_complex")]
    pub kinetic: Complex64,
    #[serde(serialize_with = "sig17_complex")]
    pub interaction: Complex64,
}

/// `∫ [i(φ_a* ∂_tφ_b − ∂_tφ_a* φ_b) − 2eV φ_a* φ_b] d³x` over the ball at time `t`.
///
/// `potential` holds `V` at every grid node, in grid order.
pub fn inner_product(
    a: &KgState,
    b: &KgState,
    potential: &[f64],
    charge: f64,
    grid: &BallGrid,
    t: f64,
) -> Result<InnerProduct> {
    for s in [a, b] {
        if (s.radial.radius - grid.radius()).abs() > 1e-12 * grid.radius() {
            return Err(Error::InvalidArgument(format!(
                "state lives in a well of radius {}, grid radius is {}",
                s.radial.radius,
                grid.radius()
            )));
        }
    }
    let fa = a.sample(grid, t);
    let fb = if a == b {
        fa.clone()
    } else {
        b.sample(grid, t)
    };
    sampled_inner_product(a, b, &fa, &fb, potential, charge, grid)
}

/// [`inner_product`] on samples already taken at the snapshot time; the
/// time derivatives follow from the states' phase factors.
pub(crate) fn sampled_inner_product(
    a: &KgState,
    b: &KgState,
    fa: &[Complex64],
    fb: &[Complex64],
    potential: &[f64],
    charge: f64,
    grid: &BallGrid,
) -> Result<InnerProduct> {
    if potential.len() != grid.len() || fa.len() != grid.len() || fb.len() != grid.len() {
        return Err(Error::InvalidArgument(format!(
            "{} potential and {}/{} state samples for a grid of {} nodes",
            potential.len(),
            fa.len(),
            fb.len(),
            grid.len()
        )));
    }
    // i(φ_a* · iσ_bω_b φ_b − (iσ_aω_a φ_a)* φ_b) = −(σ_aω_a + σ_bω_b) φ_a* φ_b
    let weight = -(f64::from(a.sigma) * a.omega + f64::from(b.sigma) * b.omega);
    let mut overlap = Complex64::new(0.0, 0.0);
    let mut coupled = Complex64::new(0.0, 0.0);
    for (((p, &v), x), y) in grid.points().zip(potential).zip(fa).zip(fb) {
        let prod = x.conj() * y * p.weight;
        overlap += prod;
        coupled += prod * v;
    }
    let kinetic = overlap * weight;
    let interaction = coupled * (-2.0 * charge);
    Ok(InnerProduct {
        total: kinetic + interaction,
        kinetic,
        interaction,
    })
}

/// Rescales the prefactor so the state's own potential-free inner product
/// has modulus 1. The phase of the prefactor is kept.
pub fn normalize_kg_state(state: &KgState, grid: &BallGrid) -> Result<KgState> {
    let zeros = vec![0.0; grid.len()];
    let own = inner_product(state, state, &zeros, 0.0, grid, 0.0)?
        .total
        .norm();
    if !(own > 0.0) || !own.is_finite() {
        return Err(Error::DegenerateState(format!(
            "state (l = {}, m = {}) has self inner product {own}",
            state.l, state.m
        )));
    }
    Ok(state.clone().with_norm(state.norm / own.sqrt()))
}
