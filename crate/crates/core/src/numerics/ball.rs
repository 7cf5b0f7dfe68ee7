use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;

use super::quadrature::{composite_gauss_legendre, gauss_legendre};
use super::well::RadialMode;
use crate::error::{Error, Result};

/// Quadrature resolution of a [`BallGrid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Resolution {
    /// Radial Gauss–Legendre panels.
    pub panels: usize,
    /// Nodes per radial panel.
    pub order: usize,
    /// Gauss–Legendre nodes in `cos θ`.
    pub n_theta: usize,
    /// Uniform azimuthal nodes.
    pub n_phi: usize,
}

impl Default for Resolution {
    fn default() -> Self {
        Resolution {
            panels: 16,
            order: 8,
            n_theta: 32,
            n_phi: 8,
        }
    }
}

impl Resolution {
    /// Doubles the panel count and both angular node counts.
    pub fn refined(&self) -> Resolution {
        Resolution {
            panels: 2 * self.panels,
            order: self.order,
            n_theta: 2 * self.n_theta,
            n_phi: 2 * self.n_phi,
        }
    }
}

/// Tensor-product quadrature over the ball `r <= R` with measure
/// `r² sin θ dr dθ dφ`. The `r²` factor is folded into the radial weights.
#[derive(Debug, Clone, PartialEq)]
pub struct BallGrid {
    radius: f64,
    resolution: Resolution,
    r: Vec<f64>,
    w_r: Vec<f64>,
    theta: Vec<f64>,
    w_theta: Vec<f64>,
    phi: Vec<f64>,
    w_phi: f64,
}

/// One quadrature node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
    pub weight: f64,
}

impl BallGrid {
    pub fn new(radius: f64, resolution: Resolution) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "ball radius must be positive, got {radius}"
            )));
        }
        if resolution.n_phi == 0 {
            return Err(Error::InvalidArgument(
                "azimuthal node count must be positive".into(),
            ));
        }
        let (r, w) = composite_gauss_legendre(0.0, radius, resolution.panels, resolution.order)?;
        let w_r = r.iter().zip(&w).map(|(r, w)| w * r * r).collect();
        let (x, w_theta) = gauss_legendre(resolution.n_theta)?;
        let theta = x.iter().map(|x| x.acos()).collect();
        let phi = (0..resolution.n_phi)
            .map(|k| 2.0 * PI * k as f64 / resolution.n_phi as f64)
            .collect();
        Ok(BallGrid {
            radius,
            resolution,
            r,
            w_r,
            theta,
            w_theta,
            phi,
            w_phi: 2.0 * PI / resolution.n_phi as f64,
        })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn resolution(&self) -> Resolution {
        self.resolution
    }

    pub fn radial_nodes(&self) -> &[f64] {
        &self.r
    }

    pub fn len(&self) -> usize {
        self.r.len() * self.theta.len() * self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Nodes in storage order: radius outermost, azimuth innermost.
    pub fn points(&self) -> impl Iterator<Item = BallPoint> + '_ {
        self.r.iter().zip(&self.w_r).flat_map(move |(&r, &wr)| {
            self.theta
                .iter()
                .zip(&self.w_theta)
                .flat_map(move |(&theta, &wt)| {
                    self.phi.iter().map(move |&phi| BallPoint {
                        r,
                        theta,
                        phi,
                        weight: wr * wt * self.w_phi,
                    })
                })
        })
    }

    pub fn sample(&self, f: impl Fn(f64, f64, f64) -> Complex64) -> Vec<Complex64> {
        self.points().map(|p| f(p.r, p.theta, p.phi)).collect()
    }

    pub fn sample_real(&self, f: impl Fn(f64, f64, f64) -> f64) -> Vec<f64> {
        self.points().map(|p| f(p.r, p.theta, p.phi)).collect()
    }

    /// `∫ f dΩ` over the unit sphere with the grid's angular rule.
    pub fn integrate_sphere(&self, f: impl Fn(f64, f64) -> Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&theta, &wt) in self.theta.iter().zip(&self.w_theta) {
            for &phi in &self.phi {
                acc += f(theta, phi) * (wt * self.w_phi);
            }
        }
        acc
    }

    /// CSV of the radial rule: `r,weight` where `weight` includes `r²`.
    pub fn radial_csv(&self) -> String {
        let mut out = String::from("r,weight\n");
        for (r, w) in self.r.iter().zip(&self.w_r) {
            let _ = writeln!(out, "{r:.17e},{w:.17e}");
        }
        out
    }

    /// CSV of a radial mode on this grid: `r,f,weight`.
    pub fn mode_csv(&self, mode: &RadialMode) -> String {
        let mut out = String::from("r,f,weight\n");
        for (r, w) in self.r.iter().zip(&self.w_r) {
            let _ = writeln!(out, "{r:.17e},{:.17e},{w:.17e}", mode.eval(*r));
        }
        out
    }
}

/// Weighted sum of `f` over the ball.
pub fn integrate_ball(f: &[Complex64], grid: &BallGrid) -> Result<Complex64> {
    if f.len() != grid.len() {
        return Err(Error::InvalidArgument(format!(
            "sample count {} does not match grid size {}",
            f.len(),
            grid.len()
        )));
    }
    Ok(grid.points().zip(f).map(|(p, v)| v * p.weight).sum())
}
