use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// Regular `(t, x, y, z)` lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lattice {
    pub origin: [f64; 4],
    pub spacing: [f64; 4],
    pub shape: [usize; 4],
}

impl Lattice {
    pub fn new(origin: [f64; 4], spacing: [f64; 4], shape: [usize; 4]) -> Self {
        Lattice {
            origin,
            spacing,
            shape,
        }
    }

    /// A single time slice at `t` with cubic spatial cells.
    pub fn spatial(t: f64, origin: [f64; 3], h: f64, n: usize) -> Self {
        Lattice::new(
            [t, origin[0], origin[1], origin[2]],
            [1.0, h, h, h],
            [1, n, n, n],
        )
    }

    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, idx: [usize; 4]) -> usize {
        ((idx[0] * self.shape[1] + idx[1]) * self.shape[2] + idx[2]) * self.shape[3] + idx[3]
    }

    pub fn coords(&self, idx: [usize; 4]) -> [f64; 4] {
        std::array::from_fn(|a| self.origin[a] + idx[a] as f64 * self.spacing[a])
    }

    /// All multi-indices in storage order.
    pub fn indices(&self) -> impl Iterator<Item = [usize; 4]> + '_ {
        let [nt, nx, ny, nz] = self.shape;
        (0..nt).flat_map(move |t| {
            (0..nx).flat_map(move |x| (0..ny).flat_map(move |y| (0..nz).map(move |z| [t, x, y, z])))
        })
    }

    pub fn points(&self) -> impl Iterator<Item = [f64; 4]> + '_ {
        self.indices().map(|i| self.coords(i))
    }

    /// Storage offset of one step along `axis`.
    pub fn stride(&self, axis: usize) -> usize {
        self.shape[axis + 1..].iter().product()
    }

    pub(crate) fn require_spatial_stencil(&self) -> Result<()> {
        if self.shape[1..].iter().any(|&n| n < 3) {
            return Err(Error::InvalidArgument(format!(
                "central differences need at least 3 points per spatial axis, got {:?}",
                &self.shape[1..]
            )));
        }
        Ok(())
    }

    /// Spatially interior indices (every time slice).
    pub fn spatial_interior(&self) -> impl Iterator<Item = [usize; 4]> + '_ {
        self.indices()
            .filter(move |i| (1..4).all(|a| i[a] >= 1 && i[a] + 1 < self.shape[a]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Dirac,
    KleinGordon,
    Other,
}

/// Density and current sampled on a lattice.
///
/// `rho_t`, when present, holds an analytic `∂ρ/∂t`; otherwise the time
/// derivative is taken by central differences along the time axis.
#[derive(Debug, Clone, PartialEq)]
pub struct FourCurrent {
    pub lattice: Lattice,
    pub rho: Vec<f64>,
    pub j: [Vec<f64>; 3],
    pub rho_t: Option<Vec<f64>>,
    pub provenance: Provenance,
}

impl FourCurrent {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,x,y,z,rho,jx,jy,jz\n");
        for (n, idx) in self.lattice.indices().enumerate() {
            let [t, x, y, z] = self.lattice.coords(idx);
            let _ = writeln!(
                out,
                "{t:.12e},{x:.12e},{y:.12e},{z:.12e},{:.17e},{:.17e},{:.17e},{:.17e}",
                self.rho[n], self.j[0][n], self.j[1][n], self.j[2][n]
            );
        }
        out
    }
}

/// Max over interior lattice points of `|∂_t ρ + ∇·j|`, second-order central
/// differences.
pub fn divergence_residual(current: &FourCurrent) -> Result<f64> {
    let lat = &current.lattice;
    let n = lat.len();
    if current.rho.len() != n || current.j.iter().any(|c| c.len() != n) {
        return Err(Error::InvalidArgument(
            "current samples do not match lattice".into(),
        ));
    }
    lat.require_spatial_stencil()?;
    if let Some(rt) = &current.rho_t {
        if rt.len() != n {
            return Err(Error::InvalidArgument(
                "rho_t samples do not match lattice".into(),
            ));
        }
    } else if lat.shape[0] < 3 {
        return Err(Error::InvalidArgument(
            "finite-difference time derivative needs at least 3 time slices".into(),
        ));
    }
    let central = |field: &[f64], at: usize, axis: usize| {
        let s = lat.stride(axis);
        (field[at + s] - field[at - s]) / (2.0 * lat.spacing[axis])
    };
    let mut worst: f64 = 0.0;
    for idx in lat.spatial_interior() {
        let at = lat.index(idx);
        let drho = match &current.rho_t {
            Some(rt) => rt[at],
            None if idx[0] >= 1 && idx[0] + 1 < lat.shape[0] => central(&current.rho, at, 0),
            None => continue,
        };
        let div: f64 = (0..3).map(|k| central(&current.j[k], at, k + 1)).sum();
        worst = worst.max((drho + div).abs());
    }
    Ok(worst)
}

/// `log2(coarse / fine)` for errors measured at `h` and `h/2`.
pub fn observed_order(coarse: f64, fine: f64) -> f64 {
    (coarse / fine).log2()
}
