//! Pinned numerical thresholds.
//!
//! Every threshold used by the built-in checks and by the acceptance suite
//! lives here so the two cannot drift apart.

/// Relative error allowed on the ball volume sum of quadrature weights.
pub const VOLUME_REL: f64 = 1e-12;

/// Max deviation of the spherical-harmonic Gram matrix from the identity.
pub const GRAM_ABS: f64 = 1e-12;

/// Absolute tolerance on the first zero of `j_1` (k·R for the p-wave).
pub const WELL_ZERO_ABS: f64 = 1e-9;

/// Bisection stops once the bracket is narrower than this.
pub const BISECTION_ABS: f64 = 1e-12;

/// Continuity residual allowed for currents that are constant in space-time.
pub const CONTINUITY_CONSTANT_ABS: f64 = 1e-10;

/// Minimum observed order of a second-order central difference under h -> h/2.
pub const MIN_OBSERVED_ORDER: f64 = 1.9;

/// Tolerance on the energy shift produced by a constant scalar potential.
pub const EIGEN_SHIFT_ABS: f64 = 1e-10;

/// `|I01|` at zero potential, normalized states.
pub const ORTHOGONALITY_ABS: f64 = 1e-10;

/// `|U|` has to exceed its refinement error estimate by this factor.
pub const SIGNIFICANCE_FACTOR: f64 = 10.0;

/// Agreement with the independent high-resolution quadrature oracle.
pub const ORACLE_REL: f64 = 1e-6;

/// Linearity of `U` in the couplings `e` and `q`.
pub const LINEARITY_REL: f64 = 1e-10;

/// Self inner product after normalization.
pub const NORMALIZATION_ABS: f64 = 1e-10;
