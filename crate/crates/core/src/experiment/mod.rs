//! Two stationary scalar states in a spherical well, and what an external
//! point charge does to their inner product.
//!
//! Without a potential the `l = 0` and `l = 1` states are orthogonal under the
//! scalar-field inner product. That product carries a `−2eV` term, so a charge
//! placed off centre gives a nonzero cross term `U`.
//!
//! ```
//! use densitycheck::experiment::{run_orthogonality_experiment, ExperimentConfig};
//!
//! let report = run_orthogonality_experiment(&ExperimentConfig::default()).unwrap();
//! assert!(report.i01.value.norm() < 1e-10);
//! assert!(report.interaction.iter().all(|p| p.normalized.value.norm() > 0.0));
//! ```

mod potential;
mod run;
mod state;

pub use potential::{external_potential, ExternalCharge};
pub use run::{
    run_orthogonality_experiment, Conventions, Estimate, ExperimentConfig, ExperimentReport,
    InteractionPoint, StateSummary,
};
pub use state::{inner_product, normalize_kg_state, InnerProduct, KgState};
