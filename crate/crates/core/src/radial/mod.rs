//! Radial ODEs of the form `ψ'' + (p/r)ψ' + W(r; E)ψ = 0`.
//!
//! `W` is a constant plus a finite sum of inverse powers, each coefficient
//! affine in the energy, plus an optional smooth callback.

pub mod ode;
mod exploratory;
mod residual;
mod shoot;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::model::{lambda4, lambda_d, PhysicalParams, QuantumNumbers};
use crate::potentials::kg_coefficients;
use crate::spectrum::Coupling;

pub use exploratory::{
    integrate_d6, kg_asymptotic, kg_decay_rate, kg_integrate_u, kg_integrate_u_with, D6Sensitivity, D6Solution,
    InitialData, KgProfile,
};
pub use residual::{fornberg_weights, residual, ResidualReport};
pub use shoot::{shoot_eigenvalue, EigenResult};

/// Extra smooth contribution to `W(r; E)`.
pub type Callback = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// `(coeff + energy_coeff·E) / r^power`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub power: u32,
    pub coeff: f64,
    pub energy_coeff: f64,
}

impl Term {
    pub fn value(&self, energy: f64) -> f64 {
        self.coeff + self.energy_coeff * energy
    }
}

#[derive(Clone)]
pub struct RadialProblem {
    /// `p` in `(p/r)ψ'`.
    pub friction_order: f64,
    pub terms: Vec<Term>,
    pub callback: Option<Callback>,
    pub r_min: f64,
    pub r_max: f64,
    pub grid_size: usize,
    pub rtol: f64,
    pub atol: f64,
    /// Acceptance threshold for the normalised matching Wronskian.
    pub matching_tol: f64,
}

impl fmt::Debug for RadialProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialProblem")
            .field("friction_order", &self.friction_order)
            .field("terms", &self.terms)
            .field("callback", &self.callback.as_ref().map(|_| "<fn>"))
            .field("r_min", &self.r_min)
            .field("r_max", &self.r_max)
            .field("grid_size", &self.grid_size)
            .field("rtol", &self.rtol)
            .field("atol", &self.atol)
            .field("matching_tol", &self.matching_tol)
            .finish()
    }
}

impl RadialProblem {
    pub fn new(friction_order: f64, r_min: f64, r_max: f64) -> Self {
        Self {
            friction_order,
            terms: Vec::new(),
            callback: None,
            r_min,
            r_max,
            grid_size: 1000,
            rtol: 1e-11,
            atol: 1e-300,
            matching_tol: 1e-6,
        }
    }

    /// Add `(coeff + energy_coeff·E)/r^power`; terms with equal powers merge.
    pub fn with_term(mut self, power: u32, coeff: f64, energy_coeff: f64) -> Self {
        if let Some(t) = self.terms.iter_mut().find(|t| t.power == power) {
            t.coeff += coeff;
            t.energy_coeff += energy_coeff;
        } else {
            self.terms.push(Term { power, coeff, energy_coeff });
            self.terms.sort_by_key(|t| t.power);
        }
        self
    }

    pub fn with_callback(mut self, callback: Callback) -> Self {
        self.callback = Some(callback);
        self
    }

    pub fn with_domain(mut self, r_min: f64, r_max: f64) -> Self {
        self.r_min = r_min;
        self.r_max = r_max;
        self
    }

    pub fn with_grid_size(mut self, grid_size: usize) -> Self {
        self.grid_size = grid_size;
        self
    }

    pub fn with_tolerances(mut self, rtol: f64, matching_tol: f64) -> Self {
        self.rtol = rtol;
        self.matching_tol = matching_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r_min > 0.0 && self.r_min.is_finite()) {
            return Err(Error::invalid("r_min", self.r_min, "must be positive and finite"));
        }
        if !(self.r_max > self.r_min && self.r_max.is_finite()) {
            return Err(Error::invalid("r_max", self.r_max, "must exceed r_min and be finite"));
        }
        if self.grid_size < 100 {
            return Err(Error::invalid("grid_size", self.grid_size as f64, "must be at least 100"));
        }
        if !(self.rtol > 0.0 && self.rtol < 1.0) {
            return Err(Error::invalid("rtol", self.rtol, "must lie in (0, 1)"));
        }
        if !self.friction_order.is_finite() {
            return Err(Error::invalid("friction_order", self.friction_order, "must be finite"));
        }
        for t in &self.terms {
            if !(t.coeff.is_finite() && t.energy_coeff.is_finite()) {
                return Err(Error::invalid("term coefficient", t.coeff, "must be finite"));
            }
        }
        Ok(())
    }

    /// Combined coefficient of `1/r^power`.
    pub fn coefficient(&self, power: u32, energy: f64) -> f64 {
        self.terms.iter().filter(|t| t.power == power).map(|t| t.value(energy)).sum()
    }

    pub fn max_power(&self) -> u32 {
        self.terms.iter().filter(|t| t.coeff != 0.0 || t.energy_coeff != 0.0).map(|t| t.power).max().unwrap_or(0)
    }

    /// `W(r; E)`.
    pub fn w(&self, r: f64, energy: f64) -> f64 {
        let inv = 1.0 / r;
        let mut acc = 0.0;
        for t in &self.terms {
            acc += t.value(energy) * inv.powi(t.power as i32);
        }
        if let Some(cb) = &self.callback {
            acc += cb(r, energy);
        }
        acc
    }

    /// `dE` derivative of `W`, used to check the Sturm ordering.
    pub fn dw_de(&self, r: f64) -> f64 {
        let inv = 1.0 / r;
        self.terms.iter().map(|t| t.energy_coeff * inv.powi(t.power as i32)).sum()
    }

    /// Compactified hydrogen-like radial equation
    /// `ψ'' + (2/r)ψ' + (α² − n²/R² + ζ/r − ν_θ²/r²)ψ = 0`
    /// with the default domain for `qn`.
    pub fn compact(coupling: Coupling, qn: &QuantumNumbers, params: &PhysicalParams) -> Result<Self> {
        params.validate()?;
        let (hbar, m, rad) = (params.hbar, params.mass, params.radius);
        let zeta = coupling.zeta(params);
        if !(zeta > 0.0) {
            return Err(Error::invalid("zeta", zeta, "must be positive for bound states"));
        }
        // d(ν_θ²)/dE, so that −ν_θ²/r² = (−λ₄ + slope·E)/r²
        let slope = lambda4(qn.ell) - coupling.nu_theta2(params, qn.ell, 1.0);
        let n = qn.n as f64;
        let kappa = zeta / (4.0 * (qn.l as f64 + qn.ell as f64 + 3.0));
        let r_min = 1e-4 * (1.0 / zeta).min(rad);
        Ok(Self::new(2.0, r_min, 40.0 / kappa)
            .with_term(0, -n * n / (rad * rad), 2.0 * m / (hbar * hbar))
            .with_term(1, zeta, 0.0)
            .with_term(2, -lambda4(qn.ell), slope))
    }

    /// Energy bracket used with [`compact`](Self::compact):
    /// `threshold − 4(ħ²/2m)ζ²` to `threshold − (ħ²/2m)(ζ/(4(l+ℓ+3)))²`.
    pub fn compact_bracket(coupling: Coupling, qn: &QuantumNumbers, params: &PhysicalParams) -> (f64, f64) {
        let scale = params.hbar * params.hbar / (2.0 * params.mass);
        let threshold = params.compact_mode_energy(qn.n);
        let zeta = coupling.zeta(params);
        let k = zeta / (4.0 * (qn.l as f64 + qn.ell as f64 + 3.0));
        (threshold - 4.0 * scale * zeta * zeta, threshold - scale * k * k)
    }

    /// Uncompactified D-dimensional radial equation
    /// `ψ'' + ((D−1)/r)ψ' + (α² − λ_D/r² + ν²/r^{D−2} + μ_D/r^{D−1})ψ = 0`.
    pub fn d_dimensional(ell: u32, params: &PhysicalParams, r_min: f64, r_max: f64) -> Result<Self> {
        params.validate()?;
        let d = params.dim;
        let lam = lambda_d(ell, d)?;
        let hbar = params.hbar;
        let nu2 = params.nu2();
        let mu_slope = (d as f64 - 2.0) * nu2 * params.theta / hbar;
        Ok(Self::new(d as f64 - 1.0, r_min, r_max)
            .with_term(0, 0.0, 2.0 * params.mass / (hbar * hbar))
            .with_term(2, -lam, 0.0)
            .with_term(d - 2, nu2, 0.0)
            .with_term(d - 1, 0.0, mu_slope))
    }

    /// The six-dimensional compact-mode equation
    /// `ψ'' + (2/r)ψ' + (α² − n²/R² − λ₄/r² + 2mq²/(4ħ²R r³) + 3mq²Eθ/(2ħ³R r⁴))ψ = 0`.
    ///
    /// The friction term is `2/r` and the angular eigenvalue `λ₄` even though
    /// the potential lives in six dimensions; both are kept as written.
    pub fn d6(n: i64, ell: u32, params: &PhysicalParams, r_min: f64, r_max: f64) -> Result<Self> {
        params.validate()?;
        let (hbar, m, rad, q2) = (params.hbar, params.mass, params.radius, params.qe2);
        let n = n as f64;
        Ok(Self::new(2.0, r_min, r_max)
            .with_term(0, -n * n / (rad * rad), 2.0 * m / (hbar * hbar))
            .with_term(2, -lambda4(ell), 0.0)
            .with_term(3, 2.0 * m * q2 / (4.0 * hbar * hbar * rad), 0.0)
            .with_term(4, 0.0, 3.0 * m * q2 * params.theta / (2.0 * hbar.powi(3) * rad)))
    }

    /// `Ψ'' + (2/r)Ψ' + Σ_{j=0..4} b_j/r^j Ψ = 0` at fixed energy.
    pub fn kg(qn: &QuantumNumbers, params: &PhysicalParams, energy: f64, r_min: f64, r_max: f64) -> Result<Self> {
        let b = kg_coefficients(qn, params, energy)?.as_array();
        let mut p = Self::new(2.0, r_min, r_max);
        for (j, bj) in b.iter().enumerate() {
            p = p.with_term(j as u32, *bj, 0.0);
        }
        Ok(p)
    }
}

/// Rewrite for `u = r^{p/2}ψ`: `u'' + Q u = 0` with
/// `Q = W − (p/2)(p/2 − 1)/r²`.
pub fn liouville_normal_form(problem: &RadialProblem) -> RadialProblem {
    let k = problem.friction_order / 2.0;
    let shift = k * (k - 1.0);
    let mut out = problem.clone();
    out.friction_order = 0.0;
    if shift != 0.0 {
        out = out.with_term(2, -shift, 0.0);
    }
    out
}

/// Map `ψ`-samples to `u = r^{p/2}ψ`.
pub fn to_normal_form_samples(problem: &RadialProblem, samples: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let k = problem.friction_order / 2.0;
    samples.iter().map(|&(r, psi)| (r, r.powf(k) * psi)).collect()
}

/// `n` points from `a` to `b` (either order), uniform in `ln r`.
pub fn log_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let (la, lb) = (a.ln(), b.ln());
    let mut g: Vec<f64> = (0..n).map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp()).collect();
    g[0] = a;
    g[n - 1] = b;
    g
}
