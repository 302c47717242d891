use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ncspectra", version, about = "Spectra, potentials and identity checks for noncommutative compactified Coulomb, Yukawa and Klein-Gordon problems")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// `key = value` parameter file (`#` starts a comment)
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Output file (stdout when omitted)
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    #[command(flatten)]
    pub params: ParamOverrides,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    JsonLines,
}

#[derive(Debug, Default, Args)]
pub struct ParamOverrides {
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub mass: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub c: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub qe2: Option<f64>,
    #[arg(long = "V0", global = true, allow_negative_numbers = true)]
    pub v0: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub eta: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    #[arg(long = "R", global = true, allow_negative_numbers = true)]
    pub radius: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub wp: Option<f64>,
    #[arg(long = "D", global = true, allow_negative_numbers = true)]
    pub dim: Option<u32>,
}

impl ParamOverrides {
    pub fn entries(&self) -> Vec<(&'static str, f64)> {
        let pairs = [
            ("hbar", self.hbar),
            ("mass", self.mass),
            ("c", self.c),
            ("qe2", self.qe2),
            ("V0", self.v0),
            ("eta", self.eta),
            ("theta", self.theta),
            ("R", self.radius),
            ("wp", self.wp),
            ("D", self.dim.map(f64::from)),
        ];
        pairs.into_iter().filter_map(|(k, v)| v.map(|v| (k, v))).collect()
    }
}

/// Inclusive integer range `a..b`, or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub start: i64,
    pub end: i64,
}

impl IntRange {
    pub fn iter(self) -> impl Iterator<Item = i64> {
        self.start..=self.end
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if end < start {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(Self { start, end })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CouplingArg {
    Coulomb,
    Yukawa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialArg {
    /// Compactified Coulomb potential in 4+1 dimensions
    #[value(name = "coulomb-4d")]
    Coulomb4d,
    /// Compactified Yukawa potential in 4+1 dimensions
    #[value(name = "yukawa-4d")]
    Yukawa4d,
    /// Compactified Coulomb potential in 6 dimensions
    #[value(name = "coulomb-6d")]
    Coulomb6d,
    /// Uncompactified Coulomb potential in D dimensions
    #[value(name = "nc-coulomb")]
    NcCoulomb,
    /// Uncompactified Yukawa potential in D dimensions
    #[value(name = "nc-yukawa")]
    NcYukawa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lattice,
    Fourier,
    Spectrum,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EquationArg {
    /// Compactified hydrogen-like equation, shooting against the closed form
    Compact,
    /// Uncompactified D-dimensional equation, shooting in a given bracket
    #[value(name = "d-dim")]
    DDim,
    /// Six-dimensional compact-mode equation, initial-value integration
    D6,
    /// Klein-Gordon U(r) equation, initial-value integration
    #[value(name = "kg-u")]
    KgU,
}

#[derive(Debug, Args)]
pub struct Sampling {
    #[arg(long = "r-min")]
    pub r_min: Option<f64>,
    #[arg(long = "r-max")]
    pub r_max: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    /// Uniform spacing instead of logarithmic
    #[arg(long)]
    pub linear: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form energies over ranges of quantum numbers
    Spectrum {
        #[arg(long, default_value = "0..2", allow_hyphen_values = true)]
        n: IntRange,
        #[arg(long, default_value = "0..3")]
        l: IntRange,
        #[arg(long, default_value = "0..2")]
        ell: IntRange,
        #[arg(long, value_enum, default_value_t = CouplingArg::Coulomb)]
        coupling: CouplingArg,
    },
    /// Potential profile along r
    Potential {
        #[arg(long, value_enum, default_value_t = PotentialArg::Coulomb4d)]
        kind: PotentialArg,
        /// Compact coordinate w
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        w: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        energy: f64,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Normalised closed-form radial wavefunction
    Wavefunction {
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        #[arg(long, value_enum, default_value_t = CouplingArg::Coulomb)]
        coupling: CouplingArg,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Closed forms against brute-force sums, quadrature and shooting
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Smaller truncations and grids
        #[arg(long)]
        quick: bool,
    },
    /// Klein-Gordon effective potential (defaults: R = 0.01, theta = 0.01, wp = 1/137)
    KgProfile {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        energy: f64,
        #[arg(long, default_value_t = 1)]
        ell: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i64,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Numerical solution of one radial equation
    Solve {
        #[arg(long, value_enum, default_value_t = EquationArg::Compact)]
        equation: EquationArg,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        #[arg(long, value_enum, default_value_t = CouplingArg::Coulomb)]
        coupling: CouplingArg,
        /// Energy (d6, kg-u)
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        energy: f64,
        /// Lower end of the energy bracket (d-dim)
        #[arg(long = "e-lo", allow_negative_numbers = true)]
        e_lo: Option<f64>,
        /// Upper end of the energy bracket (d-dim)
        #[arg(long = "e-hi", allow_negative_numbers = true)]
        e_hi: Option<f64>,
        /// Initial value psi(r_min) or U(r_start)
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        y0: f64,
        /// Initial derivative
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        dy0: f64,
        /// kg-u: start of integration, either --r-min or --r-max (default --r-max)
        #[arg(long = "r-start")]
        r_start: Option<f64>,
        /// Write the bracket log of the eigenvalue search here
        #[arg(long, value_name = "PATH")]
        log: Option<PathBuf>,
        #[command(flatten)]
        sampling: Sampling,
    },
}
