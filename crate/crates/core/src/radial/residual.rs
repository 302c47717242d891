use std::f64::consts::PI;

use super::{liouville_normal_form, RadialProblem};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    /// `max |ψ'' + (p/r)ψ' + Wψ|` over interior points.
    pub max_abs: f64,
    /// `max_abs` divided by the largest `|ψ''| + |pψ'/r| + |Wψ|` on the grid.
    pub max_scaled: f64,
    pub worst_r: f64,
    pub points: usize,
    /// Some stencil spans more than a fifth of the local wavelength.
    pub coarse: bool,
}

/// Finite-difference weights (Fornberg) for derivatives 0, 1, 2 at `z`
/// from five nodes.
pub fn fornberg_weights(z: f64, x: &[f64; 5]) -> [[f64; 5]; 3] {
    let mut c = [[0.0; 5]; 3];
    let mut c1 = 1.0;
    let mut c4 = x[0] - z;
    c[0][0] = 1.0;
    for i in 1..5 {
        let mn = i.min(2);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - z;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c
}

/// Apply the ODE to sampled `(r, ψ)` with centred five-point stencils.
pub fn residual(problem: &RadialProblem, energy: f64, samples: &[(f64, f64)]) -> Result<ResidualReport> {
    if samples.len() < 5 {
        return Err(Error::invalid("samples", samples.len() as f64, "need at least 5 points"));
    }
    if samples.windows(2).any(|w| !(w[1].0 > w[0].0)) || samples[0].0 <= 0.0 {
        return Err(Error::domain("samples must have strictly increasing positive r"));
    }
    let nf = liouville_normal_form(problem);
    let p = problem.friction_order;
    let mut max_abs: f64 = 0.0;
    let mut worst_r = samples[2].0;
    let mut scale: f64 = 0.0;
    let mut coarse = false;
    for i in 2..samples.len() - 2 {
        let (r, psi) = samples[i];
        let x = [samples[i - 2].0, samples[i - 1].0, r, samples[i + 1].0, samples[i + 2].0];
        let y = [samples[i - 2].1, samples[i - 1].1, psi, samples[i + 1].1, samples[i + 2].1];
        let c = fornberg_weights(r, &x);
        let (mut d1, mut d2) = (0.0, 0.0);
        for j in 0..5 {
            d1 += c[1][j] * y[j];
            d2 += c[2][j] * y[j];
        }
        let w = problem.w(r, energy);
        let res = (d2 + p / r * d1 + w * psi).abs();
        scale = scale.max(d2.abs() + (p / r * d1).abs() + (w * psi).abs());
        if res > max_abs {
            max_abs = res;
            worst_r = r;
        }
        let k = nf.w(r, energy).max(0.0).sqrt();
        if (x[4] - x[0]) / 4.0 * k > 2.0 * PI / 5.0 {
            coarse = true;
        }
    }
    let max_scaled = if scale > 0.0 { max_abs / scale } else { 0.0 };
    Ok(ResidualReport { max_abs, max_scaled, worst_r, points: samples.len(), coarse })
}
