//! Physical parameters, unit conventions and quantum numbers.
//!
//! Units are natural (`hbar = mass = c = 1`) unless overridden. The
//! noncommutativity is purely space-time: `[x^0, x^j] = i theta^j`,
//! `[x^i, x^j] = 0`, with `theta` carrying dimension length·time. The
//! vector `theta^j` enters only through `r·theta -> r theta`, so it is stored
//! as a scalar.
//!
//! Sign convention for the compact circle: the Fourier modes
//! `exp(i n w / R)` are eigenfunctions of the compact Laplacian with
//! eigenvalue `-n²/R²`. In every energy formula this shows up as the
//! *positive* kinetic contribution `hbar² n² / (2 m R²)`.
//!
//! The energy `E` is never stored here. Every θ-correction couples the
//! potential to `E` (through `∂₀ -> -iE/hbar` on stationary states), so `E`
//! is always an explicit argument.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};

/// Hyperspherical eigenvalue `ℓ(ℓ + D − 2)` of the Laplace–Beltrami operator
/// on the `(D−1)`-sphere.
pub fn lambda_d(ell: u32, dim: u32) -> Result<f64> {
    if dim < 3 {
        return Err(Error::invalid("D", dim as f64, "spatial dimension must be at least 3"));
    }
    let ell = ell as f64;
    Ok(ell * (ell + dim as f64 - 2.0))
}

/// `λ₄ = ℓ(ℓ + 2)`, the value used by every compactified 4+1 equation.
pub fn lambda4(ell: u32) -> f64 {
    let ell = ell as f64;
    ell * (ell + 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    pub hbar: f64,
    pub mass: f64,
    pub c: f64,
    /// Coulomb coupling `q_e²`.
    pub qe2: f64,
    /// Yukawa strength `V₀`.
    pub v0: f64,
    /// Yukawa screening (inverse length).
    pub eta: f64,
    /// Noncommutativity (length·time).
    pub theta: f64,
    /// Compactification radius `R`.
    pub radius: f64,
    /// Dimensionless Klein–Gordon coupling `℘`.
    pub wp: f64,
    /// Spatial dimension `D`.
    pub dim: u32,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
            c: 1.0,
            qe2: 1.0,
            v0: 1.0,
            eta: 1.0,
            theta: 0.0,
            radius: 1.0,
            wp: 1.0 / 137.0,
            dim: 4,
        }
    }
}

/// Keys accepted by [`PhysicalParams::set`] and the config-file parser.
pub const PARAM_KEYS: [&str; 10] = ["hbar", "mass", "c", "qe2", "V0", "eta", "theta", "R", "wp", "D"];

impl PhysicalParams {
    /// Parameters of the Klein–Gordon effective-potential figure:
    /// `R = 0.01`, `theta = 0.01`, `hbar = c = 1`, `wp = 1/137`.
    pub fn kg_figure() -> Self {
        Self {
            radius: 0.01,
            theta: 0.01,
            wp: 1.0 / 137.0,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [("hbar", self.hbar), ("mass", self.mass), ("c", self.c), ("R", self.radius)];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::invalid(name, v, "must be finite and > 0"));
            }
        }
        let non_negative = [("theta", self.theta), ("eta", self.eta)];
        for (name, v) in non_negative {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::invalid(name, v, "must be finite and >= 0"));
            }
        }
        for (name, v) in [("qe2", self.qe2), ("V0", self.v0), ("wp", self.wp)] {
            if !v.is_finite() {
                return Err(Error::invalid(name, v, "must be finite"));
            }
        }
        if self.dim < 3 {
            return Err(Error::invalid("D", self.dim as f64, "spatial dimension must be at least 3"));
        }
        Ok(())
    }

    pub fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    /// `ν² = 2 m q_e² / ħ²`.
    pub fn nu2(&self) -> f64 {
        2.0 * self.mass * self.qe2 / (self.hbar * self.hbar)
    }

    /// `ζ = ν² / (2R)`, the effective 1/r strength of the compactified Coulomb problem.
    pub fn zeta(&self) -> f64 {
        self.nu2() / (2.0 * self.radius)
    }

    /// Yukawa analogue of [`zeta`](Self::zeta): `u = m V₀ / (ħ² R)`.
    pub fn yukawa_zeta(&self) -> f64 {
        self.mass * self.v0 / (self.hbar * self.hbar * self.radius)
    }

    /// `α² = 2 m E / ħ²`.
    pub fn alpha2(&self, energy: f64) -> f64 {
        2.0 * self.mass * energy / (self.hbar * self.hbar)
    }

    /// `μ_D = (D − 2) ν² θ E / ħ`.
    pub fn mu_d(&self, energy: f64) -> f64 {
        (self.dim as f64 - 2.0) * self.nu2() * self.theta * energy / self.hbar
    }

    /// `ν_θ² = λ₄ − ζ E θ / ħ`.
    pub fn nu_theta2(&self, ell: u32, energy: f64) -> f64 {
        lambda4(ell) - self.zeta() * energy * self.theta / self.hbar
    }

    /// Yukawa analogue of [`nu_theta2`](Self::nu_theta2): `v = λ₄ − m V₀ E θ / (ħ³ R)`.
    pub fn yukawa_nu_theta2(&self, ell: u32, energy: f64) -> f64 {
        lambda4(ell) - self.mass * self.v0 * energy * self.theta / (self.hbar.powi(3) * self.radius)
    }

    /// Kinetic energy of the compact mode `n`: `ħ² n² / (2 m R²)`.
    pub fn compact_mode_energy(&self, n: i64) -> f64 {
        let n = n as f64;
        self.hbar * self.hbar * n * n / (2.0 * self.mass * self.radius * self.radius)
    }

    /// Set one parameter by its config/CLI key.
    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        match key {
            "hbar" => self.hbar = value,
            "mass" | "m" => self.mass = value,
            "c" => self.c = value,
            "qe2" => self.qe2 = value,
            "V0" | "v0" => self.v0 = value,
            "eta" => self.eta = value,
            "theta" => self.theta = value,
            "R" | "radius" => self.radius = value,
            "wp" => self.wp = value,
            "D" | "dim" => {
                if value.fract() != 0.0 || value < 0.0 || value > u32::MAX as f64 {
                    return Err(Error::invalid("D", value, "must be a non-negative integer"));
                }
                self.dim = value as u32;
            }
            _ => {
                return Err(Error::Config {
                    line: 0,
                    message: format!("unknown parameter `{key}`"),
                });
            }
        }
        Ok(())
    }

    /// Apply `key = value` lines on top of `self`. `#` starts a comment.
    pub fn apply_config_str(&mut self, text: &str) -> Result<()> {
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Config {
                line: line_no,
                message: format!("expected `key = value`, got `{line}`"),
            })?;
            let key = key.trim();
            let value: f64 = value.trim().parse().map_err(|_| Error::Config {
                line: line_no,
                message: format!("cannot parse value for `{key}`: `{}`", value.trim()),
            })?;
            self.set(key, value).map_err(|e| match e {
                Error::Config { message, .. } => Error::Config { line: line_no, message },
                other => other,
            })?;
        }
        Ok(())
    }

    pub fn apply_config_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        self.apply_config_str(&text)
    }

    /// `(key, value)` pairs in [`PARAM_KEYS`] order.
    pub fn entries(&self) -> [(&'static str, f64); 10] {
        [
            ("hbar", self.hbar),
            ("mass", self.mass),
            ("c", self.c),
            ("qe2", self.qe2),
            ("V0", self.v0),
            ("eta", self.eta),
            ("theta", self.theta),
            ("R", self.radius),
            ("wp", self.wp),
            ("D", self.dim as f64),
        ]
    }
}

impl fmt::Display for PhysicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().iter().map(|(k, v)| format!("{k} = {v}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Kaluza–Klein mode `n`, radial quantum number `l` and angular momentum `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumNumbers {
    pub n: i64,
    pub l: u32,
    pub ell: u32,
}

impl QuantumNumbers {
    pub fn new(n: i64, l: u32, ell: u32) -> Self {
        Self { n, l, ell }
    }
}
