//! Dormand–Prince 5(4) with step-size control and the 4th-order continuous
//! extension of the method.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    /// Largest allowed |h|.
    pub h_max: f64,
    /// First trial step; chosen from the interval length when `None`.
    pub h_init: Option<f64>,
    /// Integrate with this constant step and no error control.
    pub fixed_step: Option<f64>,
    pub max_steps: usize,
}

impl Default for OdeOptions {
    fn default() -> Self {
        Self {
            rtol: 1e-11,
            atol: 1e-14,
            h_max: f64::INFINITY,
            h_init: None,
            fixed_step: None,
            max_steps: 2_000_000,
        }
    }
}

/// What the observer wants after an accepted step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Action {
    Continue,
    /// Multiply the state by this factor (only meaningful for linear
    /// homogeneous systems, where the scaled state is again a solution).
    Rescale(f64),
    Stop,
}

/// An accepted step with its continuous extension.
#[derive(Debug, Clone, Copy)]
pub struct Step<const N: usize> {
    pub t0: f64,
    pub t1: f64,
    pub y0: [f64; N],
    pub y1: [f64; N],
    /// `dy/dt` at `t1`.
    pub f1: [f64; N],
    rcont: [[f64; N]; 5],
}

impl<const N: usize> Step<N> {
    /// Dense output at `t` in `[t0, t1]`.
    pub fn interpolate(&self, t: f64) -> [f64; N] {
        let s = (t - self.t0) / (self.t1 - self.t0);
        let s1 = 1.0 - s;
        let r = &self.rcont;
        let mut out = [0.0; N];
        for i in 0..N {
            out[i] = r[0][i] + s * (r[1][i] + s1 * (r[2][i] + s * (r[3][i] + s1 * r[4][i])));
        }
        out
    }

    fn scale(&mut self, factor: f64) {
        for i in 0..N {
            self.y1[i] *= factor;
            self.f1[i] *= factor;
        }
    }
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = *y;
    for i in 0..N {
        let mut acc = 0.0;
        for (c, k) in terms {
            acc += c * k[i];
        }
        out[i] += h * acc;
    }
    out
}

/// Integrate `dy/dt = f(t, y)` from `t0` to `t_end` (either direction),
/// handing every accepted step to `observer`. Returns the final state.
pub fn integrate<const N: usize, F, O>(
    f: F,
    t0: f64,
    y0: [f64; N],
    t_end: f64,
    opts: &OdeOptions,
    mut observer: O,
) -> Result<[f64; N]>
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
    O: FnMut(&Step<N>) -> Action,
{
    let span = t_end - t0;
    if span == 0.0 {
        return Ok(y0);
    }
    let dir = span.signum();
    let h_max = opts.h_max.min(span.abs());
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    let mut h = match (opts.fixed_step, opts.h_init) {
        (Some(hf), _) => hf.abs().min(span.abs()),
        (None, Some(hi)) => hi.abs().min(h_max),
        (None, None) => initial_step(&f, t, &y, &k1, dir, h_max, opts),
    };
    let mut steps = 0;
    let mut last_err = 1e-4f64;
    loop {
        if steps >= opts.max_steps {
            return Err(Error::NoConvergence("ODE integration (step budget exhausted)"));
        }
        let remaining = (t_end - t).abs();
        let mut last = false;
        if h >= remaining * (1.0 - 1e-12) {
            h = remaining;
            last = true;
        }
        let hs = dir * h;
        let k2 = f(t + C2 * hs, &axpy(&y, hs, &[(A21, &k1)]));
        let k3 = f(t + C3 * hs, &axpy(&y, hs, &[(A31, &k1), (A32, &k2)]));
        let k4 = f(t + C4 * hs, &axpy(&y, hs, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = f(t + C5 * hs, &axpy(&y, hs, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
        let k6 = f(t + hs, &axpy(&y, hs, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]));
        let y_new = axpy(&y, hs, &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)]);
        let t_new = if last { t_end } else { t + hs };
        let k7 = f(t_new, &y_new);
        steps += 1;

        let accept = if opts.fixed_step.is_some() {
            true
        } else {
            let mut sq = 0.0;
            for i in 0..N {
                let e = hs * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
                let sc = opts.atol + opts.rtol * y[i].abs().max(y_new[i].abs());
                sq += (e / sc).powi(2);
            }
            let err = (sq / N as f64).sqrt();
            if !err.is_finite() {
                h *= 0.1;
                false
            } else if err <= 1.0 {
                // PI controller
                let fac = 0.9 * err.max(1e-10).powf(-0.7 / 5.0) * last_err.powf(0.4 / 5.0);
                let fac = fac.clamp(0.2, 10.0);
                last_err = err.max(1e-4);
                h = (h * fac).min(h_max);
                true
            } else {
                let fac = (0.9 * err.powf(-0.2)).clamp(0.1, 1.0);
                h *= fac;
                false
            }
        };
        if !accept {
            if h <= 1e-14 * t.abs().max(1e-300) || h < f64::MIN_POSITIVE {
                return Err(Error::StepSizeCollapse { r: t, h });
            }
            continue;
        }

        let mut rcont = [[0.0; N]; 5];
        for i in 0..N {
            let ydiff = y_new[i] - y[i];
            let bspl = hs * k1[i] - ydiff;
            rcont[0][i] = y[i];
            rcont[1][i] = ydiff;
            rcont[2][i] = bspl;
            rcont[3][i] = ydiff - hs * k7[i] - bspl;
            rcont[4][i] = hs * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] + D7 * k7[i]);
        }
        let mut step = Step { t0: t, t1: t_new, y0: y, y1: y_new, f1: k7, rcont };
        match observer(&step) {
            Action::Continue => {}
            Action::Rescale(s) => step.scale(s),
            Action::Stop => return Ok(step.y1),
        }
        t = t_new;
        y = step.y1;
        k1 = step.f1;
        if last {
            return Ok(y);
        }
    }
}

fn initial_step<const N: usize, F>(f: &F, t: f64, y: &[f64; N], k1: &[f64; N], dir: f64, h_max: f64, opts: &OdeOptions) -> f64
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    // Hairer–Nørsett–Wanner starting-step heuristic
    let mut d0 = 0.0;
    let mut d1 = 0.0;
    for i in 0..N {
        let sc = opts.atol + opts.rtol * y[i].abs();
        d0 += (y[i] / sc).powi(2);
        d1 += (k1[i] / sc).powi(2);
    }
    let (d0, d1) = ((d0 / N as f64).sqrt(), (d1 / N as f64).sqrt());
    let mut h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    h0 = h0.min(h_max);
    let y1 = axpy(y, dir * h0, &[(1.0, k1)]);
    let k2 = f(t + dir * h0, &y1);
    let mut d2 = 0.0;
    for i in 0..N {
        let sc = opts.atol + opts.rtol * y[i].abs();
        d2 += ((k2[i] - k1[i]) / sc).powi(2);
    }
    let d2 = (d2 / N as f64).sqrt() / h0;
    let h1 = if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(0.2)
    };
    (100.0 * h0).min(h1).min(h_max)
}
