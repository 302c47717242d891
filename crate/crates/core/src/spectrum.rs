//! Closed-form spectrum of the compactified 4+1 problem and the
//! θ-correction of the non-compact four-dimensional solution.
//!
//! For the Kaluza–Klein mode `n` the radial equation is
//!
//! `ψ'' + (2/r)ψ' + (α² − n²/R² + ζ/r − ν_θ²/r²)ψ = 0`,
//!
//! solved by `ψ = C r^{(a−1)/2} e^{−ζr/(2l+a+1)} L_l^a(2ζr/(2l+a+1))` with
//! `a = √(4ν_θ² + 1)`. The Yukawa coupling uses the same code path with
//! `ζ → u = mV₀/(ħ²R)` and `ν_θ² → v = λ₄ − uEθ/ħ`.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{lambda4, PhysicalParams, QuantumNumbers};
use crate::specfun::{bessel_jy, integrate, laguerre_pair, log_gamma_unchecked, Domain, QuadratureSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Coupling {
    #[default]
    Coulomb,
    Yukawa,
}

impl Coupling {
    /// `ζ` (Coulomb) or `u` (Yukawa).
    pub fn zeta(self, params: &PhysicalParams) -> f64 {
        match self {
            Self::Coulomb => params.zeta(),
            Self::Yukawa => params.yukawa_zeta(),
        }
    }

    /// `ν_θ²` (Coulomb) or `v` (Yukawa) at energy `E`.
    pub fn nu_theta2(self, params: &PhysicalParams, ell: u32, energy: f64) -> f64 {
        match self {
            Self::Coulomb => params.nu_theta2(ell, energy),
            Self::Yukawa => params.yukawa_nu_theta2(ell, energy),
        }
    }
}

impl std::str::FromStr for Coupling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "coulomb" => Ok(Self::Coulomb),
            "yukawa" => Ok(Self::Yukawa),
            other => Err(Error::domain(format!("unknown coupling `{other}` (expected coulomb or yukawa)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Principal,
    Rejected,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Principal => "principal",
            Self::Rejected => "rejected",
        })
    }
}

/// Why the second energy branch is discarded.
pub const REJECTION_REASON: &str =
    "singular as theta -> 0 and does not reproduce the compact-mode eigenvalues -n^2/R^2";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumResult {
    pub energy: f64,
    pub branch: Branch,
    /// Laguerre order `√(4ν_θ² + 1)` at this energy; NaN when complex.
    pub a: f64,
    pub zeta: f64,
    /// Normalization constant `C` of the wavefunction; NaN when `a` is.
    pub norm_const: f64,
    pub qn: QuantumNumbers,
}

impl SpectrumResult {
    pub fn reason(&self) -> Option<&'static str> {
        match self.branch {
            Branch::Principal => None,
            Branch::Rejected => Some(REJECTION_REASON),
        }
    }
}

/// `2l + 1 + √(1 + 4λ₄)`.
fn principal_denominator(qn: &QuantumNumbers) -> f64 {
    2.0 * qn.l as f64 + 1.0 + (1.0 + 4.0 * lambda4(qn.ell)).sqrt()
}

/// `ln C` with `C² = (2ζ)^{a+2} l! / ((2l+1+a)^{a+3} Γ(l+1+a))`.
fn log_norm_const(l: u32, a: f64, zeta: f64) -> f64 {
    let lf = l as f64;
    0.5 * ((a + 2.0) * (2.0 * zeta).ln() + log_gamma_unchecked(lf + 1.0)
        - (a + 3.0) * (2.0 * lf + 1.0 + a).ln()
        - log_gamma_unchecked(lf + 1.0 + a))
}

fn laguerre_order(nu_theta2: f64) -> f64 {
    let disc = 4.0 * nu_theta2 + 1.0;
    if disc >= 0.0 {
        disc.sqrt()
    } else {
        f64::NAN
    }
}

fn finish(energy: f64, branch: Branch, coupling: Coupling, qn: &QuantumNumbers, params: &PhysicalParams) -> SpectrumResult {
    let zeta = coupling.zeta(params);
    let a = laguerre_order(coupling.nu_theta2(params, qn.ell, energy));
    let norm_const = if a.is_nan() || zeta <= 0.0 {
        f64::NAN
    } else {
        log_norm_const(qn.l, a, zeta).exp()
    };
    SpectrumResult { energy, branch, a, zeta, norm_const, qn: *qn }
}

/// Principal branch `E = (ħ²/2m)(n²/R² − ζ²/(2l + 1 + √(1+4λ₄))²)`.
pub fn energy_level(qn: &QuantumNumbers, params: &PhysicalParams) -> Result<SpectrumResult> {
    energy_level_with(Coupling::Coulomb, qn, params)
}

pub fn energy_level_with(coupling: Coupling, qn: &QuantumNumbers, params: &PhysicalParams) -> Result<SpectrumResult> {
    params.validate()?;
    let p = params;
    let zeta = coupling.zeta(p);
    let n = qn.n as f64;
    let den = principal_denominator(qn);
    let energy = p.hbar * p.hbar / (2.0 * p.mass) * (n * n / (p.radius * p.radius) - zeta * zeta / (den * den));
    Ok(finish(energy, Branch::Principal, coupling, qn, p))
}

/// Rejected branch
/// `E = (ħ²/2m) ζ²/(2l+1+√(1+4λ₄))² + ħ√(1+4λ₄)(2l+1+√(1+4λ₄))/(4θζ)`.
pub fn rejected_branch(qn: &QuantumNumbers, params: &PhysicalParams) -> Result<SpectrumResult> {
    rejected_branch_with(Coupling::Coulomb, qn, params)
}

pub fn rejected_branch_with(coupling: Coupling, qn: &QuantumNumbers, params: &PhysicalParams) -> Result<SpectrumResult> {
    params.validate()?;
    let p = params;
    if p.theta == 0.0 {
        return Err(Error::domain("the rejected energy branch is not defined at theta = 0"));
    }
    let zeta = coupling.zeta(p);
    if zeta == 0.0 {
        return Err(Error::domain("the rejected energy branch is not defined at zero coupling"));
    }
    let root = (1.0 + 4.0 * lambda4(qn.ell)).sqrt();
    let den = principal_denominator(qn);
    let energy = p.hbar * p.hbar / (2.0 * p.mass) * zeta * zeta / (den * den) + p.hbar * root / (4.0 * p.theta * zeta) * den;
    Ok(finish(energy, Branch::Rejected, coupling, qn, p))
}

/// `l = −½ − ½√(4ν_θ²+1) + ζR/(2√(n² − α²R²))`.
pub fn quantum_number_l(n: i64, ell: u32, energy: f64, params: &PhysicalParams) -> Result<f64> {
    quantum_number_l_with(Coupling::Coulomb, n, ell, energy, params)
}

pub fn quantum_number_l_with(coupling: Coupling, n: i64, ell: u32, energy: f64, params: &PhysicalParams) -> Result<f64> {
    params.validate()?;
    let p = params;
    let nf = n as f64;
    let gap = nf * nf - p.alpha2(energy) * p.radius * p.radius;
    if !(gap > 0.0) {
        return Err(Error::domain(format!(
            "energy {energy} is not below the threshold of mode n = {n} (n² − α²R² = {gap})"
        )));
    }
    let a = laguerre_order(coupling.nu_theta2(p, ell, energy));
    if a.is_nan() {
        return Err(Error::domain("4 nu_theta^2 + 1 < 0: complex Laguerre order"));
    }
    Ok(-0.5 - 0.5 * a + coupling.zeta(p) * p.radius / (2.0 * gap.sqrt()))
}

/// `l(E_principal) − l` with the θ-dependent `ν_θ²`: zero at `θ = 0` and
/// `O(θ)` otherwise.
pub fn principal_fixed_point_defect(coupling: Coupling, qn: &QuantumNumbers, params: &PhysicalParams) -> Result<f64> {
    let e = energy_level_with(coupling, qn, params)?.energy;
    Ok(quantum_number_l_with(coupling, qn.n, qn.ell, e, params)? - qn.l as f64)
}

/// Closed-form eigenfunction for one set of quantum numbers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wavefunction {
    pub level: SpectrumResult,
    /// Decay rate `ζ/(2l + a + 1)`.
    pub kappa: f64,
    log_c: f64,
}

impl Wavefunction {
    pub fn new(coupling: Coupling, qn: &QuantumNumbers, params: &PhysicalParams) -> Result<Self> {
        let level = energy_level_with(coupling, qn, params)?;
        if level.a.is_nan() {
            return Err(Error::domain("4 nu_theta^2 + 1 < 0: complex Laguerre order"));
        }
        if !(level.zeta > 0.0) {
            return Err(Error::domain("wavefunction needs an attractive coupling (zeta > 0)"));
        }
        let a = level.a;
        let kappa = level.zeta / (2.0 * qn.l as f64 + a + 1.0);
        Ok(Self { level, kappa, log_c: log_norm_const(qn.l, a, level.zeta) })
    }

    fn check(r: f64) -> Result<()> {
        if !(r.is_finite() && r >= 0.0) {
            return Err(Error::invalid("r", r, "radius must be finite and >= 0"));
        }
        Ok(())
    }

    /// `C r^{(a−1)/2} e^{−κr}` with the power and exponential combined in log
    /// space.
    fn envelope(&self, r: f64, power: f64) -> f64 {
        if r == 0.0 {
            return if power == 0.0 { self.log_c.exp() } else if power > 0.0 { 0.0 } else { f64::INFINITY };
        }
        (self.log_c + power * r.ln() - self.kappa * r).exp()
    }

    pub fn value(&self, r: f64) -> Result<f64> {
        Self::check(r)?;
        let a = self.level.a;
        let (lag, _) = laguerre_pair(self.level.qn.l, a, 2.0 * self.kappa * r);
        Ok(self.envelope(r, 0.5 * (a - 1.0)) * lag)
    }

    pub fn derivative(&self, r: f64) -> Result<f64> {
        Self::check(r)?;
        let a = self.level.a;
        let l = self.level.qn.l;
        let p = 0.5 * (a - 1.0);
        let z = 2.0 * self.kappa * r;
        let (lag, _) = laguerre_pair(l, a, z);
        let dlag = if l == 0 { 0.0 } else { -laguerre_pair(l - 1, a + 1.0, z).0 };
        if r == 0.0 {
            let c = self.log_c.exp();
            return Ok(if p == 0.0 {
                c * (-self.kappa * lag + 2.0 * self.kappa * dlag)
            } else if p == 1.0 {
                c * lag
            } else if p > 1.0 {
                0.0
            } else {
                f64::INFINITY
            });
        }
        let env = self.envelope(r, p);
        Ok(env * ((p / r - self.kappa) * lag + 2.0 * self.kappa * dlag))
    }
}

pub fn wavefunction(qn: &QuantumNumbers, params: &PhysicalParams, r: f64) -> Result<f64> {
    Wavefunction::new(Coupling::Coulomb, qn, params)?.value(r)
}

pub fn wavefunction_derivative(qn: &QuantumNumbers, params: &PhysicalParams, r: f64) -> Result<f64> {
    Wavefunction::new(Coupling::Coulomb, qn, params)?.derivative(r)
}

/// Order `ε = √(1 + λ₄ − ν²)` of the Bessel modes of the θ = 0 non-compact
/// equation `ψ'' + (3/r)ψ' + (α² − (λ₄ − ν²)/r²)ψ = 0`.
pub fn bessel_order(ell: u32, params: &PhysicalParams) -> Result<f64> {
    let e2 = 1.0 + lambda4(ell) - params.nu2();
    if e2 < 0.0 {
        return Err(Error::domain(format!(
            "1 + lambda_4 - nu^2 = {e2} < 0: complex Bessel order"
        )));
    }
    Ok(e2.sqrt())
}

fn positive_alpha(params: &PhysicalParams, energy: f64) -> Result<f64> {
    let a2 = params.alpha2(energy);
    if !(a2 > 0.0) {
        return Err(Error::domain(format!("alpha^2 = {a2} must be > 0 for the oscillatory Bessel modes")));
    }
    Ok(a2.sqrt())
}

/// `ψ(r, 0) = (c/r)J_ε(αr) + (c'/r)Y_ε(αr)`.
pub fn bessel_mode_solution(r: f64, ell: u32, params: &PhysicalParams, energy: f64, c: f64, c_prime: f64) -> Result<f64> {
    WronskianSolution::new(ell, params, energy, c, c_prime)?.psi0(r)
}

/// `χ̃ = ∂ψ/∂θ|_{θ=0}` for the non-compact four-dimensional equation,
/// solving `χ'' + (3/r)χ' + (α² − (λ₄ − ν²)/r²)χ = g`,
/// `g = −2ν²E ψ(r,0)/(ħr³)`, by variation of parameters with the integrals
/// anchored at `r = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WronskianSolution {
    pub c: f64,
    pub c_prime: f64,
    pub epsilon: f64,
    pub alpha: f64,
    /// Coefficient `−2ν²E/ħ` of `ψ(r,0)/r³` in the source.
    pub source_coeff: f64,
    pub quad: QuadratureSpec,
}

impl WronskianSolution {
    pub fn new(ell: u32, params: &PhysicalParams, energy: f64, c: f64, c_prime: f64) -> Result<Self> {
        params.validate()?;
        let epsilon = bessel_order(ell, params)?;
        let alpha = positive_alpha(params, energy)?;
        Ok(Self {
            c,
            c_prime,
            epsilon,
            alpha,
            source_coeff: -2.0 * params.nu2() * energy / params.hbar,
            quad: QuadratureSpec::adaptive(1e-14, 1e-12),
        })
    }

    fn check(r: f64) -> Result<()> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::invalid("r", r, "radius must be finite and > 0"));
        }
        Ok(())
    }

    fn jy(&self, r: f64) -> (f64, f64) {
        let b = bessel_jy(self.epsilon, self.alpha * r).expect("validated Bessel arguments");
        (b.j, b.y)
    }

    /// Homogeneous combination `(c/r)J_ε(αr) + (c'/r)Y_ε(αr)`.
    pub fn psi0(&self, r: f64) -> Result<f64> {
        Self::check(r)?;
        let (j, y) = self.jy(r);
        Ok((self.c * j + self.c_prime * y) / r)
    }

    /// Source `g(r) = −2ν²Eψ(r,0)/(ħr³)`.
    pub fn source(&self, r: f64) -> Result<f64> {
        Ok(self.source_coeff * self.psi0(r)? / (r * r * r))
    }

    /// `χ̃(r)`.
    pub fn chi(&self, r: f64) -> Result<f64> {
        Self::check(r)?;
        let (j, y) = self.jy(r);
        let homogeneous = (self.c * j + self.c_prime * y) / r;
        if self.source_coeff == 0.0 || r == 1.0 {
            return Ok(homogeneous);
        }
        let weight = |x: f64| {
            let (jx, yx) = self.jy(x);
            let g = self.source_coeff * (self.c * jx + self.c_prime * yx) / x.powi(4);
            (x * x * g, jx, yx)
        };
        let int_y = integrate(|x| { let (w, _, yx) = weight(x); w * yx }, Domain::Finite(1.0, r), &self.quad)?.value;
        let int_j = integrate(|x| { let (w, jx, _) = weight(x); w * jx }, Domain::Finite(1.0, r), &self.quad)?.value;
        let half_pi_over_r = std::f64::consts::FRAC_PI_2 / r;
        Ok(homogeneous + half_pi_over_r * (-j * int_y + y * int_j))
    }

    /// First-order solution `ψ(r,0) + θχ̃(r)`.
    pub fn first_order(&self, r: f64, theta: f64) -> Result<f64> {
        Ok(self.psi0(r)? + theta * self.chi(r)?)
    }
}

pub fn nc_correction_chi(
    r: f64,
    ell: u32,
    params: &PhysicalParams,
    energy: f64,
    c: f64,
    c_prime: f64,
) -> Result<f64> {
    WronskianSolution::new(ell, params, energy, c, c_prime)?.chi(r)
}

/// Spectrum table row: `(n, l, ell, E_principal, E_rejected or NaN, a, zeta)`.
pub fn spectrum_row(coupling: Coupling, qn: &QuantumNumbers, params: &PhysicalParams) -> Result<(f64, f64, f64, f64)> {
    let principal = energy_level_with(coupling, qn, params)?;
    let rejected = match rejected_branch_with(coupling, qn, params) {
        Ok(r) => r.energy,
        Err(Error::Domain(_)) => f64::NAN,
        Err(e) => return Err(e),
    };
    Ok((principal.energy, rejected, principal.a, principal.zeta))
}
