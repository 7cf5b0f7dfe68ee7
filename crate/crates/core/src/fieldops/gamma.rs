use nalgebra::{Matrix4, RowVector4, Vector4};
use num_complex::Complex64;

pub type Spinor = Vector4<Complex64>;
pub type GammaMatrix = Matrix4<Complex64>;

/// Minkowski metric `diag(1, -1, -1, -1)`.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Gamma matrices `γ^0..γ^3` in the Dirac representation.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaSet {
    pub gamma: [GammaMatrix; 4],
}

impl GammaSet {
    pub fn dirac() -> Self {
        let o = c(0.0, 0.0);
        let p = c(1.0, 0.0);
        let n = c(-1.0, 0.0);
        let i = c(0.0, 1.0);
        let mi = c(0.0, -1.0);
        #[rustfmt::skip]
        let g0 = Matrix4::new(
            p, o, o, o,
            o, p, o, o,
            o, o, n, o,
            o, o, o, n,
        );
        // γ^k = [[0, σ_k], [-σ_k, 0]]
        #[rustfmt::skip]
        let g1 = Matrix4::new(
            o, o, o, p,
            o, o, p, o,
            o, n, o, o,
            n, o, o, o,
        );
        #[rustfmt::skip]
        let g2 = Matrix4::new(
            o, o, o, mi,
            o, o, i, o,
            o, i, o, o,
            mi, o, o, o,
        );
        #[rustfmt::skip]
        let g3 = Matrix4::new(
            o, o, p, o,
            o, o, o, n,
            n, o, o, o,
            o, p, o, o,
        );
        GammaSet {
            gamma: [g0, g1, g2, g3],
        }
    }

    /// `β = γ^0`
    pub fn beta(&self) -> GammaMatrix {
        self.gamma[0]
    }

    /// `α^k = γ^0 γ^k`, `k = 1..=3`.
    pub fn alpha(&self, k: usize) -> GammaMatrix {
        self.gamma[0] * self.gamma[k]
    }

    /// `γ^μ p_μ` for a contravariant four-vector `p^μ`.
    pub fn slash(&self, p: [f64; 4]) -> GammaMatrix {
        (0..4).fold(GammaMatrix::zeros(), |acc, mu| {
            acc + self.gamma[mu] * c(METRIC[mu] * p[mu], 0.0)
        })
    }

    /// Dirac adjoint `ψ̄ = ψ† γ^0`.
    pub fn bar(&self, psi: &Spinor) -> RowVector4<Complex64> {
        psi.adjoint() * self.gamma[0]
    }

    /// `ψ̄ γ^μ ψ`, real for every spinor.
    pub fn bilinear(&self, psi: &Spinor, mu: usize) -> f64 {
        (self.bar(psi) * self.gamma[mu] * psi)[(0, 0)].re
    }
}

impl Default for GammaSet {
    fn default() -> Self {
        GammaSet::dirac()
    }
}
