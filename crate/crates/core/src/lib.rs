//! Density and current consistency checks for relativistic wave equations.
//!
//! The crate is split along the lines of the checks it performs:
//!
//! * [`dims`]: exact length-dimension algebra in natural units.
//! * [`symexpr`]: a small canonical polynomial algebra with Euler–Lagrange
//!   and Legendre operations.
//! * [`numerics`]: quadrature on a ball, spherical harmonics, infinite-well
//!   modes and finite-difference divergences.
//! * [`fieldops`]: numeric spinor and scalar fields, their currents and
//!   Hamiltonians.
//! * [`experiment`]: the overlap of two scalar-field states in the presence
//!   of an external charge.
//!
//! A guide with worked examples lives in the `book/` directory of the
//! repository; its code blocks run as doc-tests of this crate.

pub mod dims;
pub mod error;
pub mod experiment;
pub mod fieldops;
pub mod numerics;
pub mod report;
pub mod symexpr;
pub mod tolerances;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/dimensions.md")]
    mod dimensions {}
    #[doc = include_str!("../../../book/src/symbolic.md")]
    mod symbolic {}
    #[doc = include_str!("../../../book/src/currents.md")]
    mod currents {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    mod quadrature {}
    #[doc = include_str!("../../../book/src/orthogonality.md")]
    mod orthogonality {}
}
