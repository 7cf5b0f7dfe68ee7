//! Canonical sum-of-monomials form.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::atom::{Atom, Symbol};
use crate::error::{Error, Result};

/// Exact complex-rational coefficient. The imaginary unit lives here.
pub type Coeff = Complex<Ratio<i64>>;

pub fn coeff(re: i64, im: i64) -> Coeff {
    Complex::new(Ratio::from_integer(re), Ratio::from_integer(im))
}

pub fn ratio_coeff(re: Ratio<i64>, im: Ratio<i64>) -> Coeff {
    Complex::new(re, im)
}

/// Sorted product of atoms with an optional gamma-matrix tag `γ^μ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    factors: Vec<(Atom, u32)>,
    gamma: Option<u8>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_atom(atom: Atom) -> Self {
        Monomial {
            factors: vec![(atom, 1)],
            gamma: None,
        }
    }

    pub fn gamma_tag(mu: u8) -> Self {
        Monomial {
            factors: Vec::new(),
            gamma: Some(mu),
        }
    }

    pub fn factors(&self) -> &[(Atom, u32)] {
        &self.factors
    }

    pub fn gamma(&self) -> Option<u8> {
        self.gamma
    }

    pub fn power_of(&self, atom: &Atom) -> u32 {
        self.factors
            .iter()
            .find(|(a, _)| a == atom)
            .map_or(0, |(_, p)| *p)
    }

    pub fn contains_symbol(&self, symbol: Symbol) -> bool {
        self.factors.iter().any(|(a, _)| a.symbol == symbol)
    }

    /// Total number of time derivatives in the monomial.
    pub fn time_derivatives(&self) -> u32 {
        self.factors
            .iter()
            .map(|(a, p)| a.time_derivatives() * p)
            .sum()
    }

    pub fn max_derivative_order(&self) -> u32 {
        self.factors
            .iter()
            .map(|(a, _)| a.order())
            .max()
            .unwrap_or(0)
    }

    fn from_factors(factors: impl IntoIterator<Item = (Atom, u32)>, gamma: Option<u8>) -> Self {
        let mut map: BTreeMap<Atom, u32> = BTreeMap::new();
        for (a, p) in factors {
            if p > 0 {
                *map.entry(a).or_insert(0) += p;
            }
        }
        Monomial {
            factors: map.into_iter().collect(),
            gamma,
        }
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        let gamma = match (self.gamma, other.gamma) {
            (Some(_), Some(_)) => {
                return Err(Error::UnsupportedStructure(
                    "product of two gamma matrices".into(),
                ))
            }
            (g, None) | (None, g) => g,
        };
        Ok(Monomial::from_factors(
            self.factors.iter().chain(other.factors.iter()).copied(),
            gamma,
        ))
    }

    /// Remove one power of `atom`; `None` if it is absent.
    fn without_one(&self, atom: &Atom) -> Option<(u32, Monomial)> {
        let p = self.power_of(atom);
        if p == 0 {
            return None;
        }
        let factors = self
            .factors
            .iter()
            .map(|&(a, q)| if a == *atom { (a, q - 1) } else { (a, q) });
        Some((p, Monomial::from_factors(factors, self.gamma)))
    }

    fn map_atoms(&self, f: impl Fn(Atom) -> Atom) -> Monomial {
        Monomial::from_factors(self.factors.iter().map(|&(a, p)| (f(a), p)), self.gamma)
    }
}

/// Canonical polynomial: monomials in sorted order, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Coeff) -> Self {
        Polynomial::from_monomial(Monomial::one(), c)
    }

    pub fn atom(atom: Atom) -> Self {
        Polynomial::from_monomial(Monomial::from_atom(atom), Coeff::one())
    }

    pub fn gamma(mu: u8) -> Self {
        Polynomial::from_monomial(Monomial::gamma_tag(mu), Coeff::one())
    }

    pub fn from_monomial(m: Monomial, c: Coeff) -> Self {
        let mut p = Polynomial::zero();
        p.push(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn push(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Coeff::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.push(m.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(-Coeff::one())
    }

    pub fn scale(&self, c: Coeff) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, v) in &self.terms {
            out.push(m.clone(), v * c);
        }
        out
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.push(ma.try_mul(mb)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Complex conjugate: conjugates coefficients and swaps `phi <-> phi*`.
    pub fn conjugate(&self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.gamma.is_some() {
                return Err(Error::UnsupportedStructure(
                    "complex conjugation of gamma-tagged terms".into(),
                ));
            }
            let mut factors = Vec::with_capacity(m.factors.len());
            for &(a, p) in &m.factors {
                factors.push((a.with_symbol(a.symbol.conjugate()?), p));
            }
            out.push(Monomial::from_factors(factors, None), c.conj());
        }
        Ok(out)
    }

    /// Partial derivative with respect to `atom`, all other atoms held fixed.
    pub fn partial(&self, atom: &Atom) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if let Some((p, rest)) = m.without_one(atom) {
                out.push(rest, c * int(p));
            }
        }
        out
    }

    /// Total derivative `∂/∂x^mu` by the product rule.
    pub fn total_derivative(&self, mu: u8) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for &(a, p) in &m.factors {
                if a.symbol.is_constant() {
                    continue;
                }
                let (_, rest) = m.without_one(&a).expect("atom is present");
                let next = rest
                    .try_mul(&Monomial::from_atom(a.d(mu)))
                    .expect("atoms carry no gamma tag");
                out.push(next, c * int(p));
            }
        }
        out
    }

    pub fn max_derivative_order(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::max_derivative_order)
            .max()
            .unwrap_or(0)
    }

    pub fn contains_symbol(&self, symbol: Symbol) -> bool {
        self.terms.keys().any(|m| m.contains_symbol(symbol))
    }

    pub fn contains_time_derivative(&self) -> bool {
        self.terms.keys().any(|m| m.time_derivatives() > 0)
    }

    /// Rewrites every atom, keeping derivative indices; like terms are merged.
    pub fn map_atoms(&self, f: impl Fn(Atom) -> Atom) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.push(m.map_atoms(&f), *c);
        }
        out
    }

    /// Keeps only the monomials matching `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), *c))
                .collect(),
        }
    }
}

fn int(n: u32) -> Coeff {
    coeff(i64::from(n), 0)
}
