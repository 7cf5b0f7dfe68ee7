use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{FourCurrent, Lattice, Provenance};

/// A complex scalar field with its first derivatives and the external
/// potentials `(V, A_k)`, sampled on a lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarFieldConfig {
    pub lattice: Lattice,
    pub phi: Vec<Complex64>,
    pub phi_t: Vec<Complex64>,
    pub grad: [Vec<Complex64>; 3],
    pub v: Vec<f64>,
    pub a: [Vec<f64>; 3],
}

/// Value, time derivative and gradient at one point.
pub type Jet = (Complex64, Complex64, [Complex64; 3]);

impl ScalarFieldConfig {
    /// Samples a field with analytically known derivatives; potentials vanish.
    pub fn from_fn(lattice: Lattice, f: impl Fn([f64; 4]) -> Jet) -> Self {
        let n = lattice.len();
        let mut phi = Vec::with_capacity(n);
        let mut phi_t = Vec::with_capacity(n);
        let mut grad = [
            Vec::with_capacity(n),
            Vec::with_capacity(n),
            Vec::with_capacity(n),
        ];
        for x in lattice.points() {
            let (v, dt, g) = f(x);
            phi.push(v);
            phi_t.push(dt);
            for k in 0..3 {
                grad[k].push(g[k]);
            }
        }
        ScalarFieldConfig {
            lattice,
            phi,
            phi_t,
            grad,
            v: vec![0.0; n],
            a: [vec![0.0; n], vec![0.0; n], vec![0.0; n]],
        }
    }

    /// Samples field values only and takes every first derivative by central
    /// differences. Only points at least one step from each face carry
    /// meaningful derivatives; the lattice needs 3 points along every axis.
    pub fn from_values(lattice: Lattice, f: impl Fn([f64; 4]) -> Complex64) -> Result<Self> {
        if lattice.shape.iter().any(|&n| n < 3) {
            return Err(Error::InvalidArgument(
                "finite-difference derivatives need 3 points along every axis".into(),
            ));
        }
        let phi: Vec<Complex64> = lattice.points().map(f).collect();
        let deriv = |axis: usize| -> Vec<Complex64> {
            let s = lattice.stride(axis);
            lattice
                .indices()
                .map(|idx| {
                    let at = lattice.index(idx);
                    let (lo, hi, span) = if idx[axis] == 0 {
                        (at, at + s, 1.0)
                    } else if idx[axis] + 1 == lattice.shape[axis] {
                        (at - s, at, 1.0)
                    } else {
                        (at - s, at + s, 2.0)
                    };
                    (phi[hi] - phi[lo]) / (span * lattice.spacing[axis])
                })
                .collect()
        };
        let n = lattice.len();
        Ok(ScalarFieldConfig {
            lattice,
            phi_t: deriv(0),
            grad: [deriv(1), deriv(2), deriv(3)],
            phi,
            v: vec![0.0; n],
            a: [vec![0.0; n], vec![0.0; n], vec![0.0; n]],
        })
    }

    pub fn with_potential(mut self, potential: impl Fn([f64; 4]) -> [f64; 4]) -> Self {
        let samples: Vec<[f64; 4]> = self.lattice.points().map(potential).collect();
        self.v = samples.iter().map(|p| p[0]).collect();
        self.a = std::array::from_fn(|k| samples.iter().map(|p| p[k + 1]).collect());
        self
    }
}

/// `ρ = i(φ* φ_t − φ*_t φ) − 2eV|φ|²` at a point.
pub fn kg_density_at(phi: Complex64, phi_t: Complex64, v: f64, charge: f64) -> f64 {
    -2.0 * (phi.conj() * phi_t).im - 2.0 * charge * v * phi.norm_sqr()
}

/// `j_k = i((∂_k φ*) φ − φ* ∂_k φ) − 2eA_k|φ|²` at a point.
pub fn kg_current_component_at(phi: Complex64, grad_k: Complex64, a_k: f64, charge: f64) -> f64 {
    2.0 * (phi.conj() * grad_k).im - 2.0 * charge * a_k * phi.norm_sqr()
}

/// `|φ_t + ieVφ|² + Σ_k |∂_kφ − ieA_kφ|² + m²|φ|²` at a point.
pub fn kg_hamiltonian_density_at(
    phi: Complex64,
    phi_t: Complex64,
    grad: [Complex64; 3],
    v: f64,
    a: [f64; 3],
    charge: f64,
    mass: f64,
) -> f64 {
    let ie = Complex64::new(0.0, charge);
    let time = (phi_t + ie * v * phi).norm_sqr();
    let space: f64 = (0..3).map(|k| (grad[k] - ie * a[k] * phi).norm_sqr()).sum();
    time + space + mass * mass * phi.norm_sqr()
}

/// Charge density and current of the complex scalar field on every lattice point.
pub fn kg_current(config: &ScalarFieldConfig, charge: f64) -> FourCurrent {
    let n = config.phi.len();
    let rho = (0..n)
        .map(|i| kg_density_at(config.phi[i], config.phi_t[i], config.v[i], charge))
        .collect();
    let j = std::array::from_fn(|k| {
        (0..n)
            .map(|i| {
                kg_current_component_at(config.phi[i], config.grad[k][i], config.a[k][i], charge)
            })
            .collect()
    });
    FourCurrent {
        lattice: config.lattice,
        rho,
        j,
        rho_t: None,
        provenance: Provenance::KleinGordon,
    }
}

pub fn kg_hamiltonian_density(config: &ScalarFieldConfig, charge: f64, mass: f64) -> Vec<f64> {
    (0..config.phi.len())
        .map(|i| {
            kg_hamiltonian_density_at(
                config.phi[i],
                config.phi_t[i],
                [config.grad[0][i], config.grad[1][i], config.grad[2][i]],
                config.v[i],
                [config.a[0][i], config.a[1][i], config.a[2][i]],
                charge,
                mass,
            )
        })
        .collect()
}
