//! Browser bindings for the static demo page in `www/`.
//!
//! Every exported function returns a flat `Float64Array` of interleaved
//! samples; the stride is noted on each function.

use wasm_bindgen::prelude::*;

use ncspectra::lattice::{closed_potential_parts, FourierPotential, PotentialKind};
use ncspectra::potentials::kg_effective_potential;
use ncspectra::radial::log_grid;
use ncspectra::spectrum::{Coupling, Wavefunction};
use ncspectra::{PhysicalParams, QuantumNumbers, Result};

pub fn kind_from_name(name: &str) -> Option<PotentialKind> {
    PotentialKind::ALL.into_iter().find(|k| k.name() == name)
}

/// `(r, V_eff)` pairs on a log grid over `[r_min, r_max]`.
pub fn kg_profile_samples(energy: f64, ell: u32, theta: f64, radius: f64, r_min: f64, r_max: f64, points: usize) -> Result<Vec<f64>> {
    let params = PhysicalParams { theta, radius, ..PhysicalParams::kg_figure() }.validated()?;
    let qn = QuantumNumbers::new(0, 0, ell);
    let mut out = Vec::with_capacity(2 * points);
    for r in log_grid(r_min, r_max, points) {
        out.push(r);
        out.push(kg_effective_potential(r, &qn, &params, energy)?);
    }
    Ok(out)
}

/// `(w, closed, truncated Fourier sum)` triples of the static part over one
/// period `w ∈ [−πR, πR]`.
pub fn lattice_samples(kind: PotentialKind, r: f64, radius: f64, max_mode: u32, points: usize) -> Result<Vec<f64>> {
    let params = PhysicalParams { radius, ..PhysicalParams::default() }.validated()?;
    let series = FourierPotential::new(kind, r, radius, max_mode, &params)?;
    let half = std::f64::consts::PI * radius;
    let mut out = Vec::with_capacity(3 * points);
    for i in 0..points {
        let w = -half + 2.0 * half * i as f64 / (points.max(2) - 1) as f64;
        out.push(w);
        out.push(closed_potential_parts(kind, r, w, radius, &params)?.0);
        out.push(series.partial_sums(w).0);
    }
    Ok(out)
}

/// `[E, κ, r₀, ψ₀, r₁, ψ₁, …]` for the closed-form Coulomb state.
pub fn wavefunction_samples(n: i64, l: u32, ell: u32, qe2: f64, radius: f64, points: usize) -> Result<Vec<f64>> {
    let params = PhysicalParams { qe2, radius, ..PhysicalParams::default() }.validated()?;
    let wf = Wavefunction::new(Coupling::Coulomb, &QuantumNumbers::new(n, l, ell), &params)?;
    let mut out = Vec::with_capacity(2 + 2 * points);
    out.push(wf.level.energy);
    out.push(wf.kappa);
    let r_max = (2.0 * l as f64 + 12.0) / wf.kappa;
    for i in 0..points {
        let r = r_max * i as f64 / (points.max(2) - 1) as f64;
        out.push(r);
        out.push(wf.value(r)?);
    }
    Ok(out)
}

fn js<T>(r: Result<T>) -> std::result::Result<T, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

/// Stride 2: `(r, V_eff)`.
#[wasm_bindgen(js_name = kgProfile)]
pub fn kg_profile(energy: f64, ell: u32, theta: f64, radius: f64, r_min: f64, r_max: f64, points: usize) -> std::result::Result<Vec<f64>, JsError> {
    js(kg_profile_samples(energy, ell, theta, radius, r_min, r_max, points))
}

/// Stride 3: `(w, closed, Fourier sum)`.
#[wasm_bindgen(js_name = latticeProfile)]
pub fn lattice_profile(kind: &str, r: f64, radius: f64, max_mode: u32, points: usize) -> std::result::Result<Vec<f64>, JsError> {
    let kind = kind_from_name(kind).ok_or_else(|| JsError::new(&format!("unknown potential kind `{kind}`")))?;
    js(lattice_samples(kind, r, radius, max_mode, points))
}

/// `[E, κ]` then stride 2: `(r, ψ)`.
#[wasm_bindgen(js_name = wavefunction)]
pub fn wavefunction(n: i32, l: u32, ell: u32, qe2: f64, radius: f64, points: usize) -> std::result::Result<Vec<f64>, JsError> {
    js(wavefunction_samples(n.into(), l, ell, qe2, radius, points))
}
