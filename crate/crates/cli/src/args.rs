use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "densitycheck", version)]
#[command(
    about = "Checks densities, currents and Hamiltonians of the Dirac and Klein-Gordon fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Dirac field has dimension L^-3/2 and the scalar field L^-1; psi^dagger psi and the
    /// scalar charge density have density dimension L^-3, phi* phi alone does not
    Dimensions,
    /// Field equations of both Lagrangians match hand-derived forms; the Legendre transform
    /// of the scalar Lagrangian against the stated squared-moduli Hamiltonian density; the
    /// spinor Legendre transform has no time derivatives
    Derive,
    /// Scalar energy density is symmetric and scalar charge density antisymmetric in the
    /// highest time derivatives; the spinor density has none; a real scalar field has zero density
    Symmetry,
    /// Both currents satisfy the continuity equation (second-order convergence on
    /// superpositions); the spinor density is never negative, the scalar density takes both signs
    Continuity,
    /// The spinor Hamiltonian reproduces i d/dt on exact plane waves at second order; a
    /// constant potential V shifts the energy by eV
    DiracConsistency,
    /// Two well states are orthogonal without a potential; an off-centre point charge makes
    /// their inner product nonzero, growing as the charge approaches
    Orthogonality {
        /// Charge distances from the well centre, comma separated
        #[arg(long = "d", value_delimiter = ',', num_args = 1..)]
        distances: Option<Vec<f64>>,
    },
    /// Every check above
    All {
        /// Charge distances for the orthogonality experiment
        #[arg(long = "d", value_delimiter = ',', num_args = 1..)]
        distances: Option<Vec<f64>>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dimensions => "dimensions",
            Command::Derive => "derive",
            Command::Symmetry => "symmetry",
            Command::Continuity => "continuity",
            Command::DiracConsistency => "dirac-consistency",
            Command::Orthogonality { .. } => "orthogonality",
            Command::All { .. } => "all",
        }
    }

    pub fn distances(&self) -> Option<&[f64]> {
        match self {
            Command::Orthogonality { distances } | Command::All { distances } => {
                distances.as_deref()
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Default, clap::Args)]
pub struct Options {
    /// key=value file with experiment parameters
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Write the report to this file
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Report file format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Radial panel count N of the ball quadrature (2N polar, max(N/2, 4) azimuthal nodes)
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=4096))]
    pub resolution: Option<u32>,

    /// Double the base quadrature resolution
    #[arg(long, global = true)]
    pub refine: bool,
}

/// Parses arguments without the program name.
pub fn parse_args<I, T>(argv: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let full =
        std::iter::once(OsString::from("densitycheck")).chain(argv.into_iter().map(Into::into));
    Cli::try_parse_from(full)
}
