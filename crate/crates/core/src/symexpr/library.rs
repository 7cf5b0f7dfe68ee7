//! The densities of the spinor and complex scalar theories, written out as
//! expression trees with the spatial index expanded.

use super::atom::Symbol::{self, *};
use super::expr::FieldExpr;
use super::poly::Polynomial;

fn s(sym: Symbol) -> FieldExpr {
    FieldExpr::sym(sym)
}

fn canonical(e: FieldExpr) -> Polynomial {
    e.canonical()
        .expect("built-in densities contain no unsupported structure")
}

/// `φ_{,0} + i e V φ`
pub fn kg_time_covariant() -> FieldExpr {
    FieldExpr::d(Phi, 0) + FieldExpr::i() * s(Charge) * s(V) * s(Phi)
}

/// `φ_{,k} − i e A_k φ`
pub fn kg_space_covariant(k: u8) -> FieldExpr {
    FieldExpr::d(Phi, k) - FieldExpr::i() * s(Charge) * s(A(k)) * s(Phi)
}

fn kg_quadratic(spatial_sign: i64, mass_sign: i64) -> FieldExpr {
    let d0 = kg_time_covariant();
    let mut out = d0.clone().conj() * d0;
    for k in 1..=3 {
        let dk = kg_space_covariant(k);
        out = out + FieldExpr::int(spatial_sign) * dk.clone().conj() * dk;
    }
    out + FieldExpr::int(mass_sign) * s(Mass).pow(2) * s(PhiStar) * s(Phi)
}

/// Lagrangian density of the complex scalar field coupled to `(V, A_k)`.
pub fn kg_lagrangian_expr() -> FieldExpr {
    kg_quadratic(-1, -1)
}

pub fn kg_lagrangian() -> Polynomial {
    canonical(kg_lagrangian_expr())
}

/// Hamiltonian density of the complex scalar field in the
/// sum-of-squared-moduli form.
pub fn kg_hamiltonian_density_expr() -> FieldExpr {
    kg_quadratic(1, 1)
}

pub fn kg_hamiltonian_density() -> Polynomial {
    canonical(kg_hamiltonian_density_expr())
}

/// `ρ = i(φ* φ_{,0} − φ*_{,0} φ) − 2 e V φ* φ`
pub fn kg_density_expr() -> FieldExpr {
    FieldExpr::i() * (s(PhiStar) * FieldExpr::d(Phi, 0) - FieldExpr::d(PhiStar, 0) * s(Phi))
        - FieldExpr::int(2) * s(Charge) * s(V) * s(PhiStar) * s(Phi)
}

pub fn kg_density() -> Polynomial {
    canonical(kg_density_expr())
}

/// Spatial current component `j_k = i(φ*_{,k} φ − φ* φ_{,k}) − 2 e A_k φ* φ`.
pub fn kg_current_component(k: u8) -> Polynomial {
    canonical(
        FieldExpr::i() * (FieldExpr::d(PhiStar, k) * s(Phi) - s(PhiStar) * FieldExpr::d(Phi, k))
            - FieldExpr::int(2) * s(Charge) * s(A(k)) * s(PhiStar) * s(Phi),
    )
}

/// `ψ̄ [γ^μ (i ∂_μ − e A_μ) − m] ψ`
pub fn dirac_lagrangian_expr() -> FieldExpr {
    let operator_on_psi = FieldExpr::sum((0..4u8).map(|mu| {
        FieldExpr::Gamma(mu)
            * (FieldExpr::i() * FieldExpr::d(Psi, mu) - s(Charge) * s(ACov(mu)) * s(Psi))
    })) - s(Mass) * s(Psi);
    s(PsiBar) * operator_on_psi
}

pub fn dirac_lagrangian() -> Polynomial {
    canonical(dirac_lagrangian_expr())
}

/// `ψ̄ γ^0 ψ = ψ†ψ`
pub fn dirac_density() -> Polynomial {
    canonical(s(PsiBar) * FieldExpr::Gamma(0) * s(Psi))
}

/// `ψ̄ γ^μ ψ`
pub fn dirac_current_component(mu: u8) -> Polynomial {
    canonical(s(PsiBar) * FieldExpr::Gamma(mu) * s(Psi))
}
