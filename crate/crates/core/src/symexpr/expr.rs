use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::atom::{Atom, Symbol};
use super::poly::{coeff, Coeff, Polynomial};
use crate::error::Result;

/// Expression tree as written by hand. Reduce with [`FieldExpr::canonical`]
/// before comparing or differentiating.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldExpr {
    Const(Coeff),
    Atom(Atom),
    /// Gamma-matrix tag `γ^μ`.
    Gamma(u8),
    Sum(Vec<FieldExpr>),
    Product(Vec<FieldExpr>),
    /// Complex conjugate of the wrapped expression.
    Conj(Box<FieldExpr>),
}

impl FieldExpr {
    pub fn int(n: i64) -> Self {
        FieldExpr::Const(coeff(n, 0))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        FieldExpr::Const(coeff(0, 1))
    }

    pub fn sym(symbol: Symbol) -> Self {
        FieldExpr::Atom(Atom::new(symbol))
    }

    /// `∂_mu` applied to a bare symbol.
    pub fn d(symbol: Symbol, mu: u8) -> Self {
        FieldExpr::Atom(Atom::new(symbol).d(mu))
    }

    pub fn conj(self) -> Self {
        FieldExpr::Conj(Box::new(self))
    }

    pub fn pow(self, n: u32) -> Self {
        FieldExpr::Product(vec![self; n as usize])
    }

    pub fn sum(items: impl IntoIterator<Item = FieldExpr>) -> Self {
        FieldExpr::Sum(items.into_iter().collect())
    }

    pub fn canonical(&self) -> Result<Polynomial> {
        Ok(match self {
            FieldExpr::Const(c) => Polynomial::constant(*c),
            FieldExpr::Atom(a) => Polynomial::atom(*a),
            FieldExpr::Gamma(mu) => Polynomial::gamma(*mu),
            FieldExpr::Sum(items) => {
                let mut acc = Polynomial::zero();
                for item in items {
                    acc = acc.add(&item.canonical()?);
                }
                acc
            }
            FieldExpr::Product(items) => {
                let mut acc = Polynomial::constant(Coeff::one());
                for item in items {
                    acc = acc.try_mul(&item.canonical()?)?;
                }
                acc
            }
            FieldExpr::Conj(inner) => inner.canonical()?.conjugate()?,
        })
    }
}

impl From<Atom> for FieldExpr {
    fn from(a: Atom) -> Self {
        FieldExpr::Atom(a)
    }
}

impl From<Symbol> for FieldExpr {
    fn from(s: Symbol) -> Self {
        FieldExpr::sym(s)
    }
}

impl Polynomial {
    /// Tree form of a canonical polynomial: a sum of products.
    pub fn to_expr(&self) -> FieldExpr {
        FieldExpr::Sum(
            self.terms()
                .map(|(m, c)| {
                    let mut items = vec![FieldExpr::Const(*c)];
                    if let Some(mu) = m.gamma() {
                        items.push(FieldExpr::Gamma(mu));
                    }
                    for &(a, p) in m.factors() {
                        items.extend(std::iter::repeat_n(FieldExpr::Atom(a), p as usize));
                    }
                    FieldExpr::Product(items)
                })
                .collect(),
        )
    }
}

impl Add for FieldExpr {
    type Output = FieldExpr;
    fn add(self, rhs: FieldExpr) -> FieldExpr {
        FieldExpr::Sum(vec![self, rhs])
    }
}

impl Sub for FieldExpr {
    type Output = FieldExpr;
    fn sub(self, rhs: FieldExpr) -> FieldExpr {
        FieldExpr::Sum(vec![self, -rhs])
    }
}

impl Mul for FieldExpr {
    type Output = FieldExpr;
    fn mul(self, rhs: FieldExpr) -> FieldExpr {
        FieldExpr::Product(vec![self, rhs])
    }
}

impl Neg for FieldExpr {
    type Output = FieldExpr;
    fn neg(self) -> FieldExpr {
        FieldExpr::Product(vec![FieldExpr::int(-1), self])
    }
}
