use num_complex::Complex64;

use super::gamma::{GammaSet, Spinor};
use crate::error::{Error, Result};
use crate::numerics::{FourCurrent, Lattice, Provenance};

/// External four-potential `(V, A^1, A^2, A^3)` at one point.
pub type FourPotential = [f64; 4];

/// A spinor field together with the external potential it lives in.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracFieldConfig {
    pub lattice: Lattice,
    pub psi: Vec<Spinor>,
    pub potential: Vec<FourPotential>,
}

impl DiracFieldConfig {
    /// Samples `psi` on the lattice with vanishing potential.
    pub fn from_fn(lattice: Lattice, psi: impl Fn([f64; 4]) -> Spinor) -> Self {
        let psi: Vec<Spinor> = lattice.points().map(psi).collect();
        let potential = vec![[0.0; 4]; psi.len()];
        DiracFieldConfig {
            lattice,
            psi,
            potential,
        }
    }

    pub fn with_potential(mut self, potential: impl Fn([f64; 4]) -> FourPotential) -> Self {
        self.potential = self.lattice.points().map(potential).collect();
        self
    }
}

/// `ψ̄ γ^μ ψ` at a point.
pub fn dirac_current_at(gammas: &GammaSet, psi: &Spinor) -> [f64; 4] {
    std::array::from_fn(|mu| gammas.bilinear(psi, mu))
}

/// `j^μ = ψ̄ γ^μ ψ` on every lattice point. The density `j^0 = ψ†ψ`.
///
/// Reads only the spinor samples; the potential carried by the
/// configuration does not enter.
pub fn dirac_current(config: &DiracFieldConfig) -> FourCurrent {
    let gammas = GammaSet::dirac();
    let n = config.psi.len();
    let mut rho = Vec::with_capacity(n);
    let mut j = [
        Vec::with_capacity(n),
        Vec::with_capacity(n),
        Vec::with_capacity(n),
    ];
    for psi in &config.psi {
        rho.push(psi.norm_squared());
        for k in 0..3 {
            j[k].push(gammas.bilinear(psi, k + 1));
        }
    }
    FourCurrent {
        lattice: config.lattice,
        rho,
        j,
        rho_t: None,
        provenance: Provenance::Dirac,
    }
}

/// `Hψ` with `H = α·(−i∇ − eA) + eV + βm`, spatial derivatives by central
/// differences. Returned in storage order of the spatially interior points
/// of the lattice.
pub fn dirac_hamiltonian_apply(
    config: &DiracFieldConfig,
    mass: f64,
    charge: f64,
) -> Result<Vec<([usize; 4], Spinor)>> {
    let lat = &config.lattice;
    if config.psi.len() != lat.len() || config.potential.len() != lat.len() {
        return Err(Error::InvalidArgument(
            "field samples do not match lattice".into(),
        ));
    }
    lat.require_spatial_stencil()?;
    let gammas = GammaSet::dirac();
    let alpha = [gammas.alpha(1), gammas.alpha(2), gammas.alpha(3)];
    let beta = gammas.beta();
    let minus_i = Complex64::new(0.0, -1.0);
    let out = lat
        .spatial_interior()
        .map(|idx| {
            let at = lat.index(idx);
            let psi = config.psi[at];
            let [v, a1, a2, a3] = config.potential[at];
            let vector = [a1, a2, a3];
            let mut h =
                beta * psi * Complex64::new(mass, 0.0) + psi * Complex64::new(charge * v, 0.0);
            for k in 0..3 {
                let s = lat.stride(k + 1);
                let grad = (config.psi[at + s] - config.psi[at - s])
                    / Complex64::new(2.0 * lat.spacing[k + 1], 0.0);
                let kinetic = grad * minus_i - psi * Complex64::new(charge * vector[k], 0.0);
                h += alpha[k] * kinetic;
            }
            (idx, h)
        })
        .collect();
    Ok(out)
}

/// Max-norm of `Hψ − i∂_tψ` over the spatial interior, with `∂_tψ` supplied
/// per lattice point (usually analytic).
pub fn dirac_time_residual(
    config: &DiracFieldConfig,
    psi_t: &[Spinor],
    mass: f64,
    charge: f64,
) -> Result<f64> {
    if psi_t.len() != config.lattice.len() {
        return Err(Error::InvalidArgument(
            "time-derivative samples do not match lattice".into(),
        ));
    }
    let i = Complex64::new(0.0, 1.0);
    let h = dirac_hamiltonian_apply(config, mass, charge)?;
    Ok(h.into_iter()
        .map(|(idx, hpsi)| (hpsi - psi_t[config.lattice.index(idx)] * i).norm())
        .fold(0.0, f64::max))
}
