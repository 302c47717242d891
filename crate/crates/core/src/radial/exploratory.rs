//! Initial-value tools for equations without a bound-state solver: the
//! six-dimensional compact-mode equation and the asymptotic Klein–Gordon
//! reduction `Ψ = U e^{−kr}/r`.

use super::ode::{integrate, Action, OdeOptions};
use super::residual::{residual, ResidualReport};
use super::{log_grid, RadialProblem};
use crate::error::{Error, Result};
use crate::model::{PhysicalParams, QuantumNumbers};
use crate::potentials::{kg_coefficients, KgCoefficients};

/// `ψ(r_min)` and `ψ'(r_min)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialData {
    pub psi: f64,
    pub dpsi: f64,
}

/// Change in `ψ(probe_r)` when the same initial data is imposed at `r_min/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct D6Sensitivity {
    pub probe_r: f64,
    pub psi: f64,
    pub psi_half_rmin: f64,
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct D6Solution {
    pub energy: f64,
    /// `(r, ψ, ψ')` on a log grid of `grid_size` points.
    pub samples: Vec<(f64, f64, f64)>,
    pub residual: ResidualReport,
    pub sensitivity: D6Sensitivity,
}

/// Absolute tolerance scaled by the size of the initial state.
fn ode_options(problem: &RadialProblem, r0: f64, init: InitialData) -> OdeOptions {
    let size = init.psi.abs().max(r0 * init.dpsi.abs());
    OdeOptions { rtol: problem.rtol, atol: problem.atol.max(1e-3 * problem.rtol * size), ..OdeOptions::default() }
}

/// Integrate `ψ'' + (p/r)ψ' + Wψ = 0` through `grid`, restarting at every grid point.
fn sample_psi(problem: &RadialProblem, energy: f64, init: InitialData, grid: &[f64]) -> Result<Vec<(f64, f64, f64)>> {
    let p = problem.friction_order;
    let opts = ode_options(problem, grid[0], init);
    let rhs = |r: f64, y: &[f64; 2]| [y[1], -p / r * y[1] - problem.w(r, energy) * y[0]];
    let mut y = [init.psi, init.dpsi];
    let mut out = Vec::with_capacity(grid.len());
    out.push((grid[0], y[0], y[1]));
    for w in grid.windows(2) {
        y = integrate(rhs, w[0], y, w[1], &opts, |_| Action::Continue)?;
        if !(y[0].is_finite() && y[1].is_finite()) {
            return Err(Error::StepSizeCollapse { r: w[1], h: 0.0 });
        }
        out.push((w[1], y[0], y[1]));
    }
    Ok(out)
}

/// Initial-value solution of a six-dimensional compact-mode problem (see
/// [`RadialProblem::d6`]) from `r_min` to `r_max`, with the sensitivity of
/// the solution to halving `r_min`.
pub fn integrate_d6(problem: &RadialProblem, energy: f64, init: InitialData) -> Result<D6Solution> {
    problem.validate()?;
    if !(init.psi.is_finite() && init.dpsi.is_finite()) {
        return Err(Error::invalid("initial data", init.psi, "must be finite"));
    }
    let grid = log_grid(problem.r_min, problem.r_max, problem.grid_size);
    let samples = sample_psi(problem, energy, init, &grid)?;
    let pairs: Vec<(f64, f64)> = samples.iter().map(|s| (s.0, s.1)).collect();
    let res = residual(problem, energy, &pairs)?;

    let probe_r = 1.0f64.clamp(problem.r_min, problem.r_max);
    let psi = sample_psi(problem, energy, init, &[problem.r_min, probe_r])?[1].1;
    let halved = problem.clone().with_domain(problem.r_min / 2.0, problem.r_max);
    let psi_half = sample_psi(&halved, energy, init, &[halved.r_min, probe_r])?[1].1;
    Ok(D6Solution {
        energy,
        samples,
        residual: res,
        sensitivity: D6Sensitivity { probe_r, psi, psi_half_rmin: psi_half, delta: psi_half - psi },
    })
}

/// `√(−b₀)`; a domain error when `b₀ ≥ 0`.
pub fn kg_decay_rate(params: &PhysicalParams, qn: &QuantumNumbers, energy: f64) -> Result<f64> {
    let b0 = kg_coefficients(qn, params, energy)?.b0;
    decay_rate(b0)
}

fn decay_rate(b0: f64) -> Result<f64> {
    if b0 >= 0.0 || !b0.is_finite() {
        return Err(Error::domain(format!("b0 = {b0:e} ≥ 0: no decaying asymptotic solution")));
    }
    Ok((-b0).sqrt())
}

/// `e^{−√(−b₀) r}/r`.
pub fn kg_asymptotic(params: &PhysicalParams, qn: &QuantumNumbers, energy: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::invalid("r", r, "must be positive"));
    }
    let k = kg_decay_rate(params, qn, energy)?;
    Ok((-k * r).exp() / r)
}

#[derive(Debug, Clone, PartialEq)]
pub struct KgProfile {
    pub decay_rate: f64,
    pub coefficients: KgCoefficients,
    /// `(r, U, U')` in integration order.
    pub samples: Vec<(f64, f64, f64)>,
}

impl KgProfile {
    /// `(r, Ψ = U e^{−kr}/r)` with increasing `r`.
    pub fn psi_samples(&self) -> Vec<(f64, f64)> {
        let mut v: Vec<(f64, f64)> =
            self.samples.iter().map(|&(r, u, _)| (r, u * (-self.decay_rate * r).exp() / r)).collect();
        v.sort_by(|a, b| a.0.total_cmp(&b.0));
        v
    }
}

/// Integrate `U'' − 2kU' + Σ_{j=1..4} b_j/r^j U = 0` from `domain.0` to
/// `domain.1` (either direction) with `U, U'` given at `domain.0`.
pub fn kg_integrate_u_with(
    coefficients: &KgCoefficients,
    domain: (f64, f64),
    u0: f64,
    du0: f64,
    points: usize,
) -> Result<KgProfile> {
    let k = decay_rate(coefficients.b0)?;
    let (a, b) = domain;
    if !(a > 0.0 && b > 0.0 && a != b && a.is_finite() && b.is_finite()) {
        return Err(Error::invalid("domain", b - a, "need distinct positive finite endpoints"));
    }
    if points < 2 {
        return Err(Error::invalid("points", points as f64, "need at least 2"));
    }
    let size = u0.abs().max(a * du0.abs());
    let opts = OdeOptions { rtol: 1e-12, atol: 1e-15 * size, ..OdeOptions::default() };
    let c = *coefficients;
    let rhs = |r: f64, y: &[f64; 2]| [y[1], 2.0 * k * y[1] - c.potential_series(r) * y[0]];
    let grid = log_grid(a, b, points);
    let mut y = [u0, du0];
    let mut samples = Vec::with_capacity(points);
    samples.push((a, u0, du0));
    for w in grid.windows(2) {
        y = integrate(rhs, w[0], y, w[1], &opts, |_| Action::Continue)?;
        samples.push((w[1], y[0], y[1]));
    }
    Ok(KgProfile { decay_rate: k, coefficients: c, samples })
}

pub fn kg_integrate_u(
    params: &PhysicalParams,
    qn: &QuantumNumbers,
    energy: f64,
    domain: (f64, f64),
    u0: f64,
    du0: f64,
    points: usize,
) -> Result<KgProfile> {
    kg_integrate_u_with(&kg_coefficients(qn, params, energy)?, domain, u0, du0, points)
}
