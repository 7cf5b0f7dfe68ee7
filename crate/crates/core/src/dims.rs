//! Length-dimension algebra in natural units.
//!
//! With `ħ = c = 1` every quantity carries a single dimension `[L^n]`, where
//! `n` is a rational exponent. Exponents are held as reduced integer ratios so
//! that values such as `-3/2` compare exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

/// A length dimension `[L^n]` with exact rational exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dim(Ratio<i64>);

impl Dim {
    pub const DIMENSIONLESS: Dim = Dim(Ratio::new_raw(0, 1));
    /// Dimension of a Lagrangian density: the action is dimensionless and
    /// `d^4x` carries `[L^4]`.
    pub const LAGRANGIAN_DENSITY: Dim = Dim(Ratio::new_raw(-4, 1));
    /// Dimension required of a particle density.
    pub const DENSITY: Dim = Dim(Ratio::new_raw(-3, 1));
    /// Dimension of a Schrödinger wave function whose modulus squared is a density.
    pub const SCHRODINGER_FIELD: Dim = Dim(Ratio::new_raw(-3, 2));

    pub fn new(numer: i64, denom: i64) -> Self {
        Dim(Ratio::new(numer, denom))
    }

    pub fn integer(n: i64) -> Self {
        Dim(Ratio::from_integer(n))
    }

    pub fn exponent(&self) -> Ratio<i64> {
        self.0
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }
}

impl Add for Dim {
    type Output = Dim;
    fn add(self, rhs: Dim) -> Dim {
        Dim(self.0 + rhs.0)
    }
}

impl Sub for Dim {
    type Output = Dim;
    fn sub(self, rhs: Dim) -> Dim {
        Dim(self.0 - rhs.0)
    }
}

impl Neg for Dim {
    type Output = Dim;
    fn neg(self) -> Dim {
        Dim(-self.0)
    }
}

impl Mul<i64> for Dim {
    type Output = Dim;
    fn mul(self, rhs: i64) -> Dim {
        Dim(self.0 * rhs)
    }
}

impl std::iter::Sum for Dim {
    fn sum<I: Iterator<Item = Dim>>(iter: I) -> Dim {
        iter.fold(Dim::DIMENSIONLESS, Add::add)
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "[L^{}]", self.0.numer())
        } else {
            write!(f, "[L^{}/{}]", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Dim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            s.serialize_str(&self.0.numer().to_string())
        } else {
            s.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
        }
    }
}

/// Structural description of one term of a density: which fields appear and
/// how often, how many space-time derivatives act on them, and the dimension
/// carried by everything else (masses, couplings, ...).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TermSpec {
    pub field_powers: BTreeMap<String, u32>,
    pub derivative_count: u32,
    pub operator_dim: Dim,
}

impl Default for Dim {
    fn default() -> Self {
        Dim::DIMENSIONLESS
    }
}

impl TermSpec {
    pub fn new(fields: &[(&str, u32)], derivative_count: u32, operator_dim: Dim) -> Self {
        let mut field_powers = BTreeMap::new();
        for &(name, power) in fields {
            *field_powers.entry(name.to_string()).or_insert(0) += power;
        }
        TermSpec {
            field_powers,
            derivative_count,
            operator_dim,
        }
    }

    /// The product of two terms.
    pub fn concat(&self, other: &TermSpec) -> TermSpec {
        let mut field_powers = self.field_powers.clone();
        for (name, power) in &other.field_powers {
            *field_powers.entry(name.clone()).or_insert(0) += power;
        }
        TermSpec {
            field_powers,
            derivative_count: self.derivative_count + other.derivative_count,
            operator_dim: self.operator_dim + other.operator_dim,
        }
    }

    pub fn is_matter_term(&self) -> bool {
        self.field_powers.values().any(|&p| p > 0)
    }
}

/// Dimension of a term given the dimensions of its fields.
///
/// Each derivative contributes `[L^-1]`.
pub fn term_dimension(term: &TermSpec, field_dims: &BTreeMap<String, Dim>) -> Result<Dim> {
    let mut total = term.operator_dim - Dim::integer(i64::from(term.derivative_count));
    for (name, &power) in &term.field_powers {
        let d = field_dims
            .get(name)
            .ok_or_else(|| Error::UnknownSymbol(name.clone()))?;
        total = total + *d * i64::from(power);
    }
    Ok(total)
}

/// Field dimension forced by a bilinear Lagrangian density whose operator
/// carries `operator_dim`: solves `2d + operator_dim = -4`.
pub fn infer_field_dimension(operator_dim: Dim, bilinear: bool) -> Result<Dim> {
    if !bilinear {
        return Err(Error::UnsupportedStructure(
            "field dimension can only be inferred for bilinear densities".into(),
        ));
    }
    let twice = Dim::LAGRANGIAN_DENSITY - operator_dim;
    Ok(Dim(twice.0 / 2))
}

/// Whether a density term has the dimension `[L^-3]` of a particle density.
pub fn check_density_requirement_a(
    density_term: &TermSpec,
    field_dims: &BTreeMap<String, Dim>,
) -> Result<bool> {
    Ok(term_dimension(density_term, field_dims)? == Dim::DENSITY)
}

/// Convenience for building the `field_dims` map.
pub fn field_dims(entries: &[(&str, Dim)]) -> BTreeMap<String, Dim> {
    entries
        .iter()
        .map(|(name, d)| (name.to_string(), *d))
        .collect()
}

impl Zero for Dim {
    fn zero() -> Self {
        Dim::DIMENSIONLESS
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}
