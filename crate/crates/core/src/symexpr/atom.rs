use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Named quantities that can appear in a density.
///
/// `Psi`/`PsiBar` stand for whole four-component spinors; a monomial holding
/// one of each is read as the contraction `psibar Γ psi` with the monomial's
/// gamma tag (if any) sandwiched in between.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Psi,
    PsiBar,
    Phi,
    PhiStar,
    /// Scalar potential.
    V,
    /// Vector potential component `A_k`, `k = 1..=3`, as it enters the scalar-field densities.
    A(u8),
    /// Covariant four-potential `A_μ`, `μ = 0..=3`, as it enters the spinor density.
    ACov(u8),
    /// Coupling constant `e`.
    Charge,
    /// Mass `m`.
    Mass,
}

impl Symbol {
    pub fn name(&self) -> String {
        match self {
            Symbol::Psi => "psi".into(),
            Symbol::PsiBar => "psibar".into(),
            Symbol::Phi => "phi".into(),
            Symbol::PhiStar => "phi*".into(),
            Symbol::V => "V".into(),
            Symbol::A(k) => format!("A{k}"),
            Symbol::ACov(mu) => format!("A_{mu}"),
            Symbol::Charge => "e".into(),
            Symbol::Mass => "m".into(),
        }
    }

    pub fn from_name(name: &str) -> Result<Symbol> {
        let sym = match name {
            "psi" => Symbol::Psi,
            "psibar" => Symbol::PsiBar,
            "phi" => Symbol::Phi,
            "phi*" => Symbol::PhiStar,
            "V" => Symbol::V,
            "e" => Symbol::Charge,
            "m" => Symbol::Mass,
            "A1" => Symbol::A(1),
            "A2" => Symbol::A(2),
            "A3" => Symbol::A(3),
            "A_0" => Symbol::ACov(0),
            "A_1" => Symbol::ACov(1),
            "A_2" => Symbol::ACov(2),
            "A_3" => Symbol::ACov(3),
            _ => return Err(Error::UnknownSymbol(name.to_string())),
        };
        Ok(sym)
    }

    /// Constants have vanishing space-time derivatives.
    pub fn is_constant(&self) -> bool {
        matches!(self, Symbol::Charge | Symbol::Mass)
    }

    pub fn is_field(&self) -> bool {
        matches!(
            self,
            Symbol::Psi | Symbol::PsiBar | Symbol::Phi | Symbol::PhiStar
        )
    }

    /// Complex conjugate. Potentials and constants are real; spinor
    /// conjugation needs a gamma representation and is not supported.
    pub fn conjugate(&self) -> Result<Symbol> {
        match self {
            Symbol::Phi => Ok(Symbol::PhiStar),
            Symbol::PhiStar => Ok(Symbol::Phi),
            Symbol::Psi | Symbol::PsiBar => Err(Error::UnsupportedStructure(
                "complex conjugation of spinor symbols".into(),
            )),
            other => Ok(*other),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A symbol together with the partial derivatives acting on it.
///
/// `deriv[μ]` counts derivatives with respect to `x^μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Atom {
    pub symbol: Symbol,
    pub deriv: [u8; 4],
}

impl Atom {
    pub fn new(symbol: Symbol) -> Self {
        Atom {
            symbol,
            deriv: [0; 4],
        }
    }

    /// One more derivative with respect to `x^mu`.
    pub fn d(mut self, mu: u8) -> Self {
        assert!(mu < 4, "space-time index out of range: {mu}");
        self.deriv[mu as usize] += 1;
        self
    }

    pub fn order(&self) -> u32 {
        self.deriv.iter().map(|&n| u32::from(n)).sum()
    }

    pub fn time_derivatives(&self) -> u32 {
        u32::from(self.deriv[0])
    }

    fn indices(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for (mu, &n) in self.deriv.iter().enumerate() {
            out.extend(std::iter::repeat_n(mu as u8, n as usize));
        }
        out
    }

    pub fn with_symbol(self, symbol: Symbol) -> Self {
        Atom { symbol, ..self }
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Lexicographic on (symbol name, derivative indices).
impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbol
            .name()
            .cmp(&other.symbol.name())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol)?;
        let idx = self.indices();
        if !idx.is_empty() {
            f.write_str("_{")?;
            for mu in idx {
                write!(f, ",{mu}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}
