use num_complex::Complex64;
use serde::Serialize;

use super::gamma::{GammaSet, Spinor};
use crate::error::{Error, Result};

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Positive-energy plane-wave solution `u(p, s) e^{-i(Et - p·x)}` of the free
/// Dirac equation, normalised to `ū u = 2m`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorPlaneWave {
    pub momentum: [f64; 3],
    pub mass: f64,
    pub energy: f64,
    pub spin: u8,
    pub amplitude: Spinor,
}

impl SpinorPlaneWave {
    pub fn new(momentum: [f64; 3], mass: f64, spin: u8) -> Result<Self> {
        if !(mass > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "spinor mass must be positive, got {mass}"
            )));
        }
        let chi = match spin {
            1 => [1.0, 0.0],
            2 => [0.0, 1.0],
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "spin index must be 1 or 2, got {spin}"
                )))
            }
        };
        let [px, py, pz] = momentum;
        let energy = (dot3(momentum, momentum) + mass * mass).sqrt();
        let norm = (energy + mass).sqrt();
        let chi0 = Complex64::new(chi[0], 0.0);
        let chi1 = Complex64::new(chi[1], 0.0);
        // σ·p χ
        let lower0 = chi0 * pz + chi1 * Complex64::new(px, -py);
        let lower1 = chi0 * Complex64::new(px, py) - chi1 * pz;
        let scale = 1.0 / (energy + mass);
        let amplitude = Spinor::new(
            chi0 * norm,
            chi1 * norm,
            lower0 * (norm * scale),
            lower1 * (norm * scale),
        );
        Ok(SpinorPlaneWave {
            momentum,
            mass,
            energy,
            spin,
            amplitude,
        })
    }

    /// `p^μ = (E, p)`.
    pub fn four_momentum(&self) -> [f64; 4] {
        [
            self.energy,
            self.momentum[0],
            self.momentum[1],
            self.momentum[2],
        ]
    }

    pub fn value(&self, x: [f64; 4]) -> Spinor {
        let phase = -(self.energy * x[0] - dot3(self.momentum, [x[1], x[2], x[3]]));
        self.amplitude * Complex64::from_polar(1.0, phase)
    }

    /// `(γ^μ p_μ − m) u`, zero for a solution.
    pub fn equation_residual(&self, gammas: &GammaSet) -> f64 {
        let op = gammas.slash(self.four_momentum())
            - super::gamma::GammaMatrix::identity() * Complex64::new(self.mass, 0.0);
        (op * self.amplitude).norm()
    }
}

/// Free scalar plane wave `N e^{iσ(ωt − k·x)}` with `ω² = k² + m²`.
///
/// `sigma = -1` is the usual positive-frequency convention; `sigma = +1`
/// flips the sign of the charge density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KgPlaneWave {
    pub amplitude: Complex64,
    pub omega: f64,
    pub wavevector: [f64; 3],
    pub sigma: i8,
}

impl KgPlaneWave {
    pub fn new(amplitude: Complex64, wavevector: [f64; 3], mass: f64, sigma: i8) -> Result<Self> {
        if sigma != 1 && sigma != -1 {
            return Err(Error::InvalidArgument(format!(
                "phase convention must be ±1, got {sigma}"
            )));
        }
        Ok(KgPlaneWave {
            amplitude,
            omega: (dot3(wavevector, wavevector) + mass * mass).sqrt(),
            wavevector,
            sigma,
        })
    }

    pub fn value(&self, x: [f64; 4]) -> Complex64 {
        let phase =
            f64::from(self.sigma) * (self.omega * x[0] - dot3(self.wavevector, [x[1], x[2], x[3]]));
        self.amplitude * Complex64::from_polar(1.0, phase)
    }

    pub fn time_derivative(&self, x: [f64; 4]) -> Complex64 {
        Complex64::new(0.0, f64::from(self.sigma) * self.omega) * self.value(x)
    }

    pub fn gradient(&self, x: [f64; 4]) -> [Complex64; 3] {
        let v = self.value(x);
        let s = -f64::from(self.sigma);
        std::array::from_fn(|k| Complex64::new(0.0, s * self.wavevector[k]) * v)
    }
}
