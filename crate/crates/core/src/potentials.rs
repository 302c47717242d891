//! Potentials at first order in `θ`.
//!
//! Every noncommutative potential is affine in `θ`: `V = V_s + iθ∂₀ V_t`.
//! On a stationary state `e^{−iEt/ħ}` the operator `iθ∂₀` becomes `θE/ħ`, so
//! the evaluators that return a single number take the energy explicitly.

use crate::error::{Error, Result};
use crate::lattice::{self, PotentialKind};
use crate::model::{lambda4, lambda_d, PhysicalParams, QuantumNumbers};

/// `V = static_part + iθ∂₀ · time_derivative_part`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NcPotentialTerm {
    pub static_part: f64,
    pub time_derivative_part: f64,
}

impl NcPotentialTerm {
    /// Value on a stationary state of energy `E` (`iθ∂₀ ↦ θE/ħ`).
    pub fn contract(&self, theta: f64, energy: f64, hbar: f64) -> f64 {
        if theta == 0.0 {
            return self.static_part;
        }
        self.static_part + theta * energy / hbar * self.time_derivative_part
    }

    pub fn contract_with(&self, params: &PhysicalParams, energy: f64) -> f64 {
        self.contract(params.theta, energy, params.hbar)
    }
}

fn check_r(r: f64) -> Result<()> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::invalid("r", r, "radius must be finite and > 0"));
    }
    Ok(())
}

fn check_dim(dim: u32) -> Result<()> {
    if dim < 3 {
        return Err(Error::invalid("D", dim as f64, "dimension must be >= 3"));
    }
    Ok(())
}

/// `−q_e²/r^{D−2} (1 + i(D−2)(θ/r)∂₀)` split into its two parts.
pub fn nc_coulomb_term(r: f64, dim: u32, params: &PhysicalParams) -> Result<NcPotentialTerm> {
    check_r(r)?;
    check_dim(dim)?;
    let k = (dim - 2) as f64;
    let base = -params.qe2 / r.powi(dim as i32 - 2);
    Ok(NcPotentialTerm {
        static_part: base,
        time_derivative_part: base * k / r,
    })
}

/// `−q_e²/r^{D−2} (1 + (D−2)θE/(ħr))`.
pub fn nc_coulomb(r: f64, dim: u32, params: &PhysicalParams, energy: f64) -> Result<f64> {
    Ok(nc_coulomb_term(r, dim, params)?.contract_with(params, energy))
}

/// `−V₀e^{−ηr}/r^{D−2} [1 + i(ηr + D − 2)(θ/r)∂₀]` split into its two parts.
pub fn nc_yukawa_term(r: f64, dim: u32, params: &PhysicalParams) -> Result<NcPotentialTerm> {
    check_r(r)?;
    check_dim(dim)?;
    let base = -params.v0 * (-params.eta * r).exp() / r.powi(dim as i32 - 2);
    Ok(NcPotentialTerm {
        static_part: base,
        time_derivative_part: base * (params.eta * r + (dim - 2) as f64) / r,
    })
}

pub fn nc_yukawa(r: f64, dim: u32, params: &PhysicalParams, energy: f64) -> Result<f64> {
    Ok(nc_yukawa_term(r, dim, params)?.contract_with(params, energy))
}

/// Non-derivative coefficient `s_D(r)` of the Yukawa radial equation
/// `ψ'' + (D−1)/r ψ' + s_D ψ = 0`:
///
/// `s_D = 2mV₀e^{−ηr}(D−2+ηr)Eθ/(ħ³r^{D−1}) + 2mE/ħ² − λ_D/r² + 2mV₀e^{−ηr}/(ħ²r^{D−2})`.
pub fn yukawa_radial_coefficient(r: f64, ell: u32, params: &PhysicalParams, energy: f64) -> Result<f64> {
    check_r(r)?;
    let p = params;
    let dim = p.dim;
    let lam = lambda_d(ell, dim)?;
    let screened = 2.0 * p.mass * p.v0 * (-p.eta * r).exp() / r.powi(dim as i32 - 2);
    let theta_term = screened / p.hbar.powi(3) * ((dim - 2) as f64 + p.eta * r) * energy * p.theta / r;
    Ok(theta_term + p.alpha2(energy) - lam / (r * r) + screened / (p.hbar * p.hbar))
}

/// Compactified potential split into static and `iθ∂₀` parts, from the
/// closed-form image sums on a circle of radius `params.radius`.
pub fn compactified_term(kind: PotentialKind, r: f64, w: f64, params: &PhysicalParams) -> Result<NcPotentialTerm> {
    let radius = params.radius;
    if !(w.is_finite() && w.abs() <= std::f64::consts::PI * radius * (1.0 + 1e-15)) {
        return Err(Error::invalid("w", w, "compact coordinate must lie in [-πR, πR]"));
    }
    let (s, t) = lattice::closed_potential_parts(kind, r, w, radius, params)?;
    Ok(NcPotentialTerm { static_part: s, time_derivative_part: t })
}

pub fn compactified_potential(
    kind: PotentialKind,
    r: f64,
    w: f64,
    params: &PhysicalParams,
    energy: f64,
) -> Result<f64> {
    Ok(compactified_term(kind, r, w, params)?.contract_with(params, energy))
}

/// Klein–Gordon effective potential
///
/// `V_eff = −λ₄/r² + 3θ℘E²/(2r²Rħ²c) + ℘E/(rRħc) + ℘² coth(r/R)/(2Rr)²
///        + θ℘²E/((2Rr)²ħ) (2 coth(r/R)/r + r/sinh²(r/R))`.
///
/// Decays like `℘E/(rRħc)` at large `r`.
pub fn kg_effective_potential(r: f64, qn: &QuantumNumbers, params: &PhysicalParams, energy: f64) -> Result<f64> {
    check_r(r)?;
    let p = params;
    let (rad, wp, hbar, c, th) = (p.radius, p.wp, p.hbar, p.c, p.theta);
    let x = r / rad;
    let coth = 1.0 / x.tanh();
    // r / sinh²x = 4r e^{−2x} / (1 − e^{−2x})², finite for any x
    let e2 = (-2.0 * x).exp();
    let inv_sinh2 = 4.0 * e2 / ((-2.0 * x).exp_m1() * (-2.0 * x).exp_m1());
    let two_rr = 2.0 * rad * r;
    let lam = lambda4(qn.ell);
    Ok(-lam / (r * r)
        + 3.0 * th * wp * energy * energy / (2.0 * r * r * rad * hbar * hbar * c)
        + wp * energy / (r * rad * hbar * c)
        + wp * wp * coth / (two_rr * two_rr)
        + th * wp * wp * energy / (two_rr * two_rr * hbar) * (2.0 * coth / r + r * inv_sinh2))
}

/// Coefficients of `Ψ'' + (2/r)Ψ' + Σ_{j=0..4} b_j/r^j Ψ = 0` obtained from
/// the short-distance expansion of `V_eff`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KgCoefficients {
    pub b0: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    pub b4: f64,
}

impl KgCoefficients {
    /// `[b0, b1, b2, b3, b4]`.
    pub fn as_array(&self) -> [f64; 5] {
        [self.b0, self.b1, self.b2, self.b3, self.b4]
    }

    /// `Σ_{j=1..4} b_j/r^j`, the part contributed by `V_eff`.
    pub fn potential_series(&self, r: f64) -> f64 {
        let inv = 1.0 / r;
        inv * (self.b1 + inv * (self.b2 + inv * (self.b3 + inv * self.b4)))
    }

    /// `Σ_{j=0..4} b_j/r^j`.
    pub fn total(&self, r: f64) -> f64 {
        self.b0 + self.potential_series(r)
    }
}

pub fn kg_coefficients(qn: &QuantumNumbers, params: &PhysicalParams, energy: f64) -> Result<KgCoefficients> {
    params.validate()?;
    let p = params;
    let (rad, wp, hbar, c, th, e) = (p.radius, p.wp, p.hbar, p.c, p.theta, energy);
    let n = qn.n as f64;
    Ok(KgCoefficients {
        b4: th * wp * wp * e / (2.0 * rad * hbar),
        b3: th * wp * wp * e / (4.0 * hbar) + wp * wp / (4.0 * rad),
        b2: th * wp * wp * e / (6.0 * rad.powi(3) * hbar) + 3.0 * th * wp * e * e / (2.0 * rad * hbar * hbar * c)
            - lambda4(qn.ell),
        b1: wp * wp / (12.0 * rad.powi(3)) + wp * e / (rad * hbar * c),
        b0: e * e / (hbar * hbar * c * c) - p.mass * p.mass * c * c / (hbar * hbar) - n * n / (rad * rad),
    })
}

/// Leading term dropped by the printed expansion: the `−r/3` piece of
/// `r/sinh²(r/R)` contributes `−θ℘²E/(12R²ħ r)` to `V_eff`.
pub fn kg_expansion_missing_term(r: f64, params: &PhysicalParams, energy: f64) -> f64 {
    let p = params;
    -p.theta * p.wp * p.wp * energy / (12.0 * p.radius * p.radius * p.hbar * r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn coulomb_examples() {
        let p = PhysicalParams::default();
        assert_eq!(nc_coulomb(2.0, 4, &p, 1.0).unwrap(), -0.25);
        assert_eq!(nc_coulomb(2.0, 3, &p, 1.0).unwrap(), -0.5);
        // θ-term times 2m/ħ² is μ_D / r^{D−1} with μ_4 = 2ν²θE/ħ
        let p = PhysicalParams { theta: 0.01, mass: 0.7, qe2: 1.3, ..Default::default() };
        let (r, e) = (1.7, 0.9);
        let term = nc_coulomb_term(r, 4, &p).unwrap();
        let theta_part = -(nc_coulomb(r, 4, &p, e).unwrap() - term.static_part) * 2.0 * p.mass / (p.hbar * p.hbar);
        assert!(rel(theta_part, p.mu_d(e) / r.powi(3)) < 1e-14);
        assert!(nc_coulomb(0.0, 4, &p, 1.0).is_err());
        assert!(nc_coulomb(-1.0, 4, &p, 1.0).is_err());
    }

    #[test]
    fn yukawa_examples() {
        let p = PhysicalParams { v0: 1.0, eta: 1.0, ..Default::default() };
        assert!((nc_yukawa(1.0, 4, &p, 1.0).unwrap() + 0.36787944117144233).abs() < 1e-15);
        // screening off reproduces Coulomb
        let p = PhysicalParams { v0: 1.4, qe2: 1.4, eta: 0.0, theta: 0.2, ..Default::default() };
        for &(r, d, e) in &[(0.5, 3, 1.0), (2.0, 4, -0.3), (1.1, 6, 2.0)] {
            assert!(rel(nc_yukawa(r, d, &p, e).unwrap(), nc_coulomb(r, d, &p, e).unwrap()) < 1e-15);
        }
        // s_4 at θ = 0
        let p = PhysicalParams { mass: 0.8, v0: 1.2, eta: 0.6, hbar: 1.1, ..Default::default() };
        let (r, e) = (1.3, 0.4);
        let want = 2.0 * p.mass * e / (p.hbar * p.hbar) - 3.0 / (r * r)
            + 2.0 * p.mass * p.v0 * (-p.eta * r).exp() / (p.hbar * p.hbar * r * r);
        assert!(rel(yukawa_radial_coefficient(r, 1, &p, e).unwrap(), want) < 1e-14);
    }

    #[test]
    fn compactified_matches_lattice() {
        let p = PhysicalParams { qe2: 1.7, v0: 1.0, ..Default::default() };
        let v = compactified_potential(PotentialKind::Coulomb4d, 1.0, 0.4, &p, 2.0).unwrap();
        assert!(rel(v, -1.7 * lattice::coulomb_closed(1.0, 0.4, 1.0).unwrap()) < 1e-15);
        let y = compactified_term(PotentialKind::Yukawa4d, 1.0, 0.0, &p).unwrap();
        assert!((y.static_part + 1.08197670686933).abs() < 1e-13);
        let d6 = compactified_term(PotentialKind::Coulomb6d, 0.8, 1.0, &p).unwrap();
        assert_eq!(d6.static_part, -1.7 * lattice::d6_closed(0.8, 1.0, 1.0).unwrap().0);
        assert!(compactified_term(PotentialKind::Coulomb4d, 1.0, 4.0, &p).is_err());
    }

    #[test]
    fn decompactification_limit() {
        // static Coulomb-4d part → −q_e²/r² with corrections ~ (r/R)² for R ≫ r
        let base = PhysicalParams::default();
        for &ratio in &[1e2, 1e3] {
            let p = PhysicalParams { radius: ratio, ..base };
            let r = 1.0;
            let v = compactified_term(PotentialKind::Coulomb4d, r, 0.0, &p).unwrap().static_part;
            let flat = nc_coulomb_term(r, 4, &p).unwrap().static_part;
            let err = (v - flat).abs() / flat.abs();
            // sinh x/(cosh x − 1) · x/2 = 1 + x²/12 + …
            assert!(err <= (r / ratio).powi(2) / 12.0 * 1.01, "R/r = {ratio}: {err:e}");
        }
    }

    #[test]
    fn fourier_partial_sums_match_closed_form() {
        let p = PhysicalParams { qe2: 1.3, ..Default::default() };
        let fp = lattice::FourierPotential::new(PotentialKind::Coulomb4d, 0.6, 1.0, 20, &p).unwrap();
        let (ta, tb) = fp.tail_bounds().unwrap();
        let term = compactified_term(PotentialKind::Coulomb4d, 0.6, 1.1, &p).unwrap();
        let (sa, sb) = fp.partial_sums(1.1);
        assert!((sa - term.static_part).abs() <= ta + 1e-14);
        assert!((sb - term.time_derivative_part).abs() <= tb + 1e-13);
    }

    #[test]
    fn kg_figure_coefficients() {
        let p = PhysicalParams::kg_figure();
        let qn = QuantumNumbers::new(0, 0, 1);
        let b = kg_coefficients(&qn, &p, 1.0).unwrap();
        assert!(rel(b.b4, (1.0f64 / 137.0).powi(2) / 2.0) < 1e-15);
        assert!((b.b4 - 2.66397e-5).abs() < 1e-10);
        // n = 1 mode with m = 1: b0 = −1/R² = −1e4
        let b1 = kg_coefficients(&QuantumNumbers::new(1, 0, 1), &p, 1.0).unwrap();
        assert!(rel(b1.b0, -1e4) < 1e-12);
        let flat = PhysicalParams { theta: 0.0, ..p };
        let b = kg_coefficients(&qn, &flat, 1.0).unwrap();
        assert_eq!(b.b4, 0.0);
        assert!(rel(b.b3, flat.wp * flat.wp / (4.0 * flat.radius)) < 1e-15);
    }

    #[test]
    fn kg_potential_limits() {
        let qn = QuantumNumbers::new(0, 0, 1);
        let bare = PhysicalParams { theta: 0.0, wp: 0.0, ..PhysicalParams::kg_figure() };
        for &r in &[0.01, 0.3, 5.0] {
            assert!(rel(kg_effective_potential(r, &qn, &bare, 1.0).unwrap(), -3.0 / (r * r)) < 1e-15);
        }
        // r·V_eff → ℘E/(Rħc) at large r; no overflow for r ≫ R
        let p = PhysicalParams::kg_figure();
        let lead = p.wp / (p.radius * p.hbar * p.c);
        let far = kg_effective_potential(1e6, &qn, &p, 1.0).unwrap();
        assert!(far.is_finite());
        assert!(rel(far * 1e6, lead) < 1e-4);
        assert!(kg_effective_potential(0.0, &qn, &p, 1.0).is_err());
    }

    #[test]
    fn kg_expansion_matches_up_to_missing_term() {
        let p = PhysicalParams::kg_figure();
        let qn = QuantumNumbers::new(0, 0, 1);
        let e = 1.0;
        let b = kg_coefficients(&qn, &p, e).unwrap();
        for i in 0..=20 {
            let r = p.radius * (0.05 + 0.25 * i as f64 / 20.0);
            let v = kg_effective_potential(r, &qn, &p, e).unwrap();
            let series = b.potential_series(r);
            let resid = v - series - kg_expansion_missing_term(r, &p, e);
            // next terms of the expansion: −θ℘²E/(90R⁵ħ) + r(θ℘²E/(60R⁴ħ) − ℘²/(180R⁵))
            let (rad, wp, th) = (p.radius, p.wp, p.theta);
            let next = -th * wp * wp * e / (90.0 * rad.powi(5) * p.hbar)
                + r * (th * wp * wp * e / (60.0 * rad.powi(4) * p.hbar) - wp * wp / (180.0 * rad.powi(5)));
            let x = r / rad;
            assert!((resid - next).abs() / (b.b4 / r.powi(4)) <= x.powi(6), "r = {r}");
        }
        // with R = 1 the dropped 1/r term dominates the gap at r = 0.1R
        let q = PhysicalParams { radius: 1.0, ..p };
        let b = kg_coefficients(&qn, &q, e).unwrap();
        let r = 0.1;
        let gap = kg_effective_potential(r, &qn, &q, e).unwrap() - b.potential_series(r);
        let missing = kg_expansion_missing_term(r, &q, e);
        let next = -q.theta * q.wp * q.wp * e / 90.0 + r * (q.theta * q.wp * q.wp * e / 60.0 - q.wp * q.wp / 180.0);
        assert!(missing.abs() > 5.0 * next.abs());
        assert!(rel(gap, missing + next) < 1e-3, "{gap:e} vs {missing:e}");
    }

    proptest! {
        #[test]
        fn affine_in_theta(r in 0.05f64..5.0, e in -2.0f64..2.0, t in 0.0f64..0.5, w in -PI..PI) {
            let at = |theta: f64| {
                let p = PhysicalParams { theta, qe2: 1.3, v0: 0.7, eta: 0.4, ..Default::default() };
                [
                    nc_coulomb(r, 4, &p, e).unwrap(),
                    nc_yukawa(r, 5, &p, e).unwrap(),
                    compactified_potential(PotentialKind::Coulomb4d, r, w, &p, e).unwrap(),
                    compactified_potential(PotentialKind::Coulomb6d, r, w, &p, e).unwrap(),
                ]
            };
            let (a, b, c) = (at(0.0), at(t), at(2.0 * t));
            for k in 0..4 {
                let second = c[k] - 2.0 * b[k] + a[k];
                let scale = a[k].abs() + b[k].abs() + c[k].abs();
                prop_assert!(second.abs() <= 1e-12 * scale);
            }
        }
    }
}
