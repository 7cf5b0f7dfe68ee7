//! A small polynomial algebra over fields, their first derivatives,
//! potentials and couplings.
//!
//! Expressions are written as [`FieldExpr`] trees and reduced to a
//! [`Polynomial`], the canonical sorted sum of monomials. Equality of
//! canonical forms is structural, so derivations can be checked against
//! hand-written results exactly. The four operations on canonical forms are
//! [`euler_lagrange`], [`legendre_transform`], [`classify_time_symmetry`] and
//! [`substitute_real`].
//!
//! Gamma matrices are kept as tags (`gamma^μ`) on a monomial; the numeric
//! representation lives in [`crate::fieldops`]. A monomial holding `psibar`,
//! a tag and `psi` is read as the spinor contraction `ψ̄ γ^μ ψ`.

mod atom;
mod calculus;
mod expr;
pub mod library;
mod poly;
mod text;

pub use atom::{Atom, Symbol};
pub use calculus::{
    classify_time_symmetry, euler_lagrange, legendre_transform, substitute_real, TermSymmetry,
};
pub use expr::FieldExpr;
pub use poly::{coeff, ratio_coeff, Coeff, Monomial, Polynomial};
