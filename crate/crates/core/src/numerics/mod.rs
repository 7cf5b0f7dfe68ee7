//! Numerical substrate: Gauss–Legendre rules, spherical harmonics,
//! infinite-well modes, ball quadrature and finite-difference divergences.

mod ball;
mod divergence;
mod harmonics;
mod quadrature;
mod well;

pub use ball::{integrate_ball, BallGrid, BallPoint, Resolution};
pub use divergence::{divergence_residual, observed_order, FourCurrent, Lattice, Provenance};
pub use harmonics::{degree_orders, spherical_harmonic, MAX_DEGREE};
pub use quadrature::{composite_gauss_legendre, gauss_legendre};
pub use well::{bisect, first_bessel_zero, solve_well_mode, spherical_bessel_j, RadialMode};
