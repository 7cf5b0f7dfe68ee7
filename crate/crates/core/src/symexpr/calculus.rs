use serde::Serialize;

use super::atom::{Atom, Symbol};
use super::poly::Polynomial;
use crate::error::{Error, Result};

fn require_first_order(lagrangian: &Polynomial) -> Result<()> {
    let order = lagrangian.max_derivative_order();
    if order > 1 {
        return Err(Error::UnsupportedStructure(format!(
            "Lagrangian density contains derivatives of order {order}; only first derivatives are supported"
        )));
    }
    Ok(())
}

/// Euler–Lagrange expression `∂_μ(∂L/∂f_{,μ}) − ∂L/∂f` for the field `vary`.
///
/// The field equation is this expression set to zero.
pub fn euler_lagrange(lagrangian: &Polynomial, vary: Symbol) -> Result<Polynomial> {
    require_first_order(lagrangian)?;
    let base = Atom::new(vary);
    let mut out = lagrangian.partial(&base).neg();
    for mu in 0..4u8 {
        let momentum = lagrangian.partial(&base.d(mu));
        out = out.add(&momentum.total_derivative(mu));
    }
    Ok(out)
}

/// Hamiltonian density `Σ_f f_{,0} ∂L/∂f_{,0} − L` over the listed
/// independent fields.
pub fn legendre_transform(lagrangian: &Polynomial, fields: &[Symbol]) -> Result<Polynomial> {
    require_first_order(lagrangian)?;
    let mut out = lagrangian.neg();
    for &field in fields {
        let velocity = Atom::new(field).d(0);
        let momentum = lagrangian.partial(&velocity);
        out = out.add(&Polynomial::atom(velocity).try_mul(&momentum)?);
    }
    Ok(out)
}

/// How the terms carrying the most time derivatives behave under exchange
/// of a conjugate pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TermSymmetry {
    Symmetric,
    Antisymmetric,
    NoTimeDerivative,
    Mixed,
}

fn exchange(expr: &Polynomial, (a, b): (Symbol, Symbol)) -> Polynomial {
    expr.map_atoms(|atom| {
        if atom.symbol == a {
            atom.with_symbol(b)
        } else if atom.symbol == b {
            atom.with_symbol(a)
        } else {
            atom
        }
    })
}

pub fn classify_time_symmetry(expr: &Polynomial, pair: (Symbol, Symbol)) -> TermSymmetry {
    let top_count = expr
        .terms()
        .map(|(m, _)| m.time_derivatives())
        .max()
        .unwrap_or(0);
    if top_count == 0 {
        return TermSymmetry::NoTimeDerivative;
    }
    let top = expr.filter(|m| m.time_derivatives() == top_count);
    let swapped = exchange(&top, pair);
    if swapped == top {
        TermSymmetry::Symmetric
    } else if swapped == top.neg() {
        TermSymmetry::Antisymmetric
    } else {
        TermSymmetry::Mixed
    }
}

/// Restricts a scalar-field expression to a real field: `phi* -> phi`, and
/// optionally drops every term carrying the coupling `e`.
pub fn substitute_real(expr: &Polynomial, charge_to_zero: bool) -> Polynomial {
    let real = expr.map_atoms(|atom| {
        if atom.symbol == Symbol::PhiStar {
            atom.with_symbol(Symbol::Phi)
        } else {
            atom
        }
    });
    if charge_to_zero {
        real.filter(|m| !m.contains_symbol(Symbol::Charge))
    } else {
        real
    }
}
