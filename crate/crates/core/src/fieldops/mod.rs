//! Conserved currents and energy densities of the spinor and scalar fields,
//! evaluated on lattice samples.

mod dirac;
mod gamma;
mod kg;
mod waves;

pub use crate::numerics::{FourCurrent, Provenance};
pub use dirac::{
    dirac_current, dirac_current_at, dirac_hamiltonian_apply, dirac_time_residual,
    DiracFieldConfig, FourPotential,
};
pub use gamma::{GammaMatrix, GammaSet, Spinor, METRIC};
pub use kg::{
    kg_current, kg_current_component_at, kg_density_at, kg_hamiltonian_density,
    kg_hamiltonian_density_at, Jet, ScalarFieldConfig,
};
pub use waves::{KgPlaneWave, SpinorPlaneWave};
