//! Bessel functions of the first and second kind for real order `ν ≥ 0`
//! and real argument `x > 0`.
//!
//! Uses the Temme/Steed scheme: a continued fraction for `J'_ν/J_ν`,
//! downward recurrence to an order `μ` with `|μ| ≤ 1/2` (or `μ < x`),
//! Temme's series for `x < 2` or Steed's complex continued fraction for
//! `x ≥ 2` at order `μ`, then upward recurrence for `Y` and rescaling of
//! `J` through the Wronskian.

use std::f64::consts::PI;

use super::gamma::RGAMMA1P;
use crate::error::{Error, Result};

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300;
const MAXIT: usize = 100_000;
const XMIN: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselJY {
    pub j: f64,
    pub y: f64,
    pub jp: f64,
    pub yp: f64,
}

/// Temme's auxiliary gamma combinations for `|μ| ≤ 1/2`:
/// `(Γ1, Γ2, 1/Γ(1+μ), 1/Γ(1−μ))`.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    // 1/Γ(1+z) = Σ d_k z^k, so
    // Γ2 = [1/Γ(1−μ) + 1/Γ(1+μ)]/2 = Σ_{k even} d_k μ^k
    // Γ1 = [1/Γ(1−μ) − 1/Γ(1+μ)]/(2μ) = −Σ_{k odd} d_k μ^{k−1}
    let mu2 = mu * mu;
    let mut even = 0.0;
    let mut odd = 0.0;
    for k in (0..RGAMMA1P.len()).rev() {
        if k % 2 == 0 {
            even = even * mu2 + RGAMMA1P[k];
        } else {
            odd = odd * mu2 + RGAMMA1P[k];
        }
    }
    let gam1 = -odd;
    let gam2 = even;
    let gampl = gam2 - mu * gam1;
    let gammi = gam2 + mu * gam1;
    (gam1, gam2, gampl, gammi)
}

/// `J_ν(x)`, `Y_ν(x)` and their derivatives together.
pub fn bessel_jy(nu: f64, x: f64) -> Result<BesselJY> {
    if !(nu.is_finite() && nu >= 0.0) {
        return Err(Error::invalid("nu", nu, "order must be finite and >= 0"));
    }
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::invalid("x", x, "argument must be finite and > 0"));
    }
    jy_unchecked(nu, x)
}

fn jy_unchecked(xnu: f64, x: f64) -> Result<BesselJY> {
    let nl = if x < XMIN {
        (xnu + 0.5) as usize
    } else {
        (xnu - x + 1.5).max(0.0) as usize
    };
    let xmu = xnu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: f = J'_ν / J_ν by modified Lentz
    let mut isign = 1.0;
    let mut h = (xnu * xi).max(FPMIN);
    let mut b = xi2 * xnu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence("Bessel continued fraction CF1"));
    }

    // downward recurrence from ν to μ with arbitrary normalisation
    let mut rjl = isign * 1e-30;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut fact = xnu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, mut rymu, mut ry1);
    if x < XMIN {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = 2.0 / PI * fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let e = e.exp();
        let mut p = e / (gampl * PI);
        let mut q = 1.0 / (e * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fact3 = if pimu2.abs() < EPS { 1.0 } else { pimu2.sin() / pimu2 };
        let r = PI * pimu2 * fact3 * fact3;
        let mut c = 1.0;
        let d = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        let mut converged = false;
        for i in 1..=MAXIT {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            c *= d / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = c * (ff + r * q);
            sum += del;
            let del1 = c * p - fi * del;
            sum1 += del1;
            if del.abs() < (1.0 + sum.abs()) * EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence("Temme series for Y_mu"));
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        let rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // Steed's CF2: p + iq = (J'_μ + iY'_μ)/(J_μ + iY_μ)
        let mut a = 0.25 - xmu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fact = a * xi / (p * p + q * q);
        let mut cr = br + q * fact;
        let mut ci = bi + p * fact;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        let mut converged = false;
        for i in 2..=MAXIT {
            a += 2.0 * (i as f64 - 1.0);
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < FPMIN {
                dr = FPMIN;
            }
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if cr.abs() + ci.abs() < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - 1.0).abs() + dli.abs() < EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence("Steed continued fraction CF2"));
        }
        let gam = (p - f) / q;
        let mag = (w / ((p - f) * gam + q)).sqrt();
        rjmu = mag.copysign(rjl);
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }

    let scale = rjmu / rjl;
    let j = rjl1 * scale;
    let jp = rjp1 * scale;
    for i in 1..=nl {
        let rytemp = (xmu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    let y = rymu;
    let yp = xnu * xi * rymu - ry1;
    Ok(BesselJY { j, y, jp, yp })
}

/// `J_ν(x)` for `ν ≥ 0`, `x ≥ 0` (the `x = 0` limit is returned exactly).
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if x == 0.0 && nu.is_finite() && nu >= 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    Ok(bessel_jy(nu, x)?.j)
}

/// `Y_ν(x)` for `ν ≥ 0`, `x > 0`.
pub fn bessel_y(nu: f64, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::invalid("x", x, "Y_nu is singular at the origin"));
    }
    Ok(bessel_jy(nu, x)?.y)
}

/// `J'_ν(x) = (ν/x) J_ν(x) − J_{ν+1}(x)`.
pub fn bessel_j_prime(nu: f64, x: f64) -> Result<f64> {
    let j = bessel_j(nu, x)?;
    let j1 = bessel_j(nu + 1.0, x)?;
    Ok(nu / x * j - j1)
}

/// `Y'_ν(x) = (ν/x) Y_ν(x) − Y_{ν+1}(x)`.
pub fn bessel_y_prime(nu: f64, x: f64) -> Result<f64> {
    let y = bessel_y(nu, x)?;
    let y1 = bessel_y(nu + 1.0, x)?;
    Ok(nu / x * y - y1)
}
