use std::fmt::Write as _;

use super::ode::{integrate, Action, OdeOptions};
use super::{liouville_normal_form, log_grid, RadialProblem};
use crate::error::{Error, Result};

const RESCALE_ABOVE: f64 = 1e100;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub energy: f64,
    /// Nodes of the outward solution inside the matching radius.
    pub node_count: u32,
    /// `|normalised Wronskian|` at the matching radius.
    pub residual_norm: f64,
    pub converged: bool,
    pub matching_radius: f64,
    /// Node-count brackets, oldest first, followed by the final root bracket.
    pub bracket_history: Vec<(f64, f64)>,
}

impl EigenResult {
    /// One line per bracket followed by a summary line.
    pub fn log(&self) -> String {
        let mut s = String::new();
        for (i, (lo, hi)) in self.bracket_history.iter().enumerate() {
            let _ = writeln!(s, "bracket {i} lo={lo:.17e} hi={hi:.17e} width={:.3e}", hi - lo);
        }
        let _ = writeln!(
            s,
            "result E={:.17e} nodes={} residual={:.3e} r_match={:.6e} converged={}",
            self.energy, self.node_count, self.residual_norm, self.matching_radius, self.converged
        );
        s
    }
}

struct Shooter {
    nf: RadialProblem,
    opts: OdeOptions,
    grid: Vec<f64>,
}

struct Outward {
    u: f64,
    du: f64,
    nodes: u32,
}

impl Shooter {
    fn new(problem: &RadialProblem) -> Result<Self> {
        problem.validate()?;
        let nf = liouville_normal_form(problem);
        if nf.max_power() > 2 {
            return Err(Error::domain(format!(
                "shooting needs a regular singular origin; the equation has a 1/r^{} term",
                nf.max_power()
            )));
        }
        let grid = log_grid(nf.r_min, nf.r_max, nf.grid_size);
        for &r in &grid {
            if nf.dw_de(r) < 0.0 {
                return Err(Error::domain(format!("W decreases with E at r = {r:e}; node counting is not monotone")));
            }
        }
        let opts = OdeOptions {
            rtol: nf.rtol,
            atol: nf.atol,
            h_max: (nf.r_max - nf.r_min) / nf.grid_size as f64,
            ..OdeOptions::default()
        };
        Ok(Self { nf, opts, grid })
    }

    fn q(&self, r: f64, e: f64) -> f64 {
        self.nf.w(r, e)
    }

    /// Outermost classical turning point (largest r with Q ≥ 0).
    fn turning_point(&self, e: f64) -> Option<f64> {
        let idx = (0..self.grid.len()).rev().find(|&i| self.q(self.grid[i], e) >= 0.0)?;
        if idx + 1 == self.grid.len() {
            return Some(self.nf.r_max);
        }
        let (mut a, mut b) = (self.grid[idx], self.grid[idx + 1]);
        for _ in 0..60 {
            let m = 0.5 * (a + b);
            if self.q(m, e) >= 0.0 {
                a = m;
            } else {
                b = m;
            }
        }
        Some(a)
    }

    fn frobenius(&self, e: f64) -> Result<[f64; 2]> {
        let q2 = self.nf.coefficient(2, e);
        let q1 = self.nf.coefficient(1, e);
        let disc = 0.25 - q2;
        if disc < 0.0 {
            return Err(Error::domain(format!(
                "indicial exponent is complex (1/r² coefficient {q2} > 1/4); the potential falls to the centre"
            )));
        }
        let s = 0.5 + disc.sqrt();
        let c1 = -q1 / (2.0 * s);
        let r = self.nf.r_min;
        Ok([1.0, (s / r + c1 * (s + 1.0)) / (1.0 + c1 * r)])
    }

    /// Integrate outward to `r_stop`, counting nodes. With `early_exit`, stop
    /// once past the turning point with `u·u' > 0`: no further node can occur.
    fn outward(&self, e: f64, r_stop: f64, early_exit: bool) -> Result<Outward> {
        let y0 = self.frobenius(e)?;
        let r_turn = if early_exit { self.turning_point(e) } else { None };
        let mut nodes = 0u32;
        let y = integrate(
            |r, y: &[f64; 2]| [y[1], -self.q(r, e) * y[0]],
            self.nf.r_min,
            y0,
            r_stop,
            &self.opts,
            |s| {
                if s.y0[0] != 0.0 && (s.y1[0] == 0.0 || s.y0[0].signum() != s.y1[0].signum()) {
                    nodes += 1;
                }
                if let Some(rt) = r_turn {
                    if s.t1 > rt && s.y1[0] * s.y1[1] > 0.0 && s.y1[0] != 0.0 {
                        return Action::Stop;
                    }
                }
                let big = s.y1[0].abs().max(s.y1[1].abs() * s.t1);
                if big > RESCALE_ABOVE { Action::Rescale(1.0 / big) } else { Action::Continue }
            },
        )?;
        Ok(Outward { u: y[0], du: y[1], nodes })
    }

    fn nodes(&self, e: f64) -> Result<u32> {
        Ok(self.outward(e, self.nf.r_max, true)?.nodes)
    }

    fn matching_radius(&self, e: f64) -> f64 {
        let rt = self.turning_point(e).unwrap_or_else(|| {
            *self
                .grid
                .iter()
                .max_by(|a, b| self.q(**a, e).total_cmp(&self.q(**b, e)))
                .expect("grid is non-empty")
        });
        rt.clamp(self.grid[1], self.grid[self.grid.len() - 2])
    }

    fn inward(&self, e: f64, r_match: f64) -> Result<[f64; 2]> {
        let r_max = self.nf.r_max;
        let kappa = (-self.q(r_max, e)).max(0.0).sqrt();
        integrate(|r, y: &[f64; 2]| [y[1], -self.q(r, e) * y[0]], r_max, [1.0, -kappa], r_match, &self.opts, |s| {
            let big = s.y1[0].abs().max(s.y1[1].abs() * s.t1);
            if big > RESCALE_ABOVE { Action::Rescale(1.0 / big) } else { Action::Continue }
        })
    }

    /// Normalised Wronskian of outward and inward solutions, with nodes.
    fn matching(&self, e: f64) -> Result<(f64, u32, f64)> {
        let rm = self.matching_radius(e);
        let out = self.outward(e, rm, false)?;
        let inn = self.inward(e, rm)?;
        let wr = (out.du * inn[0] - inn[1] * out.u) * rm;
        let no = out.u.hypot(rm * out.du);
        let ni = inn[0].hypot(rm * inn[1]);
        Ok((wr / (no * ni), out.nodes, rm))
    }
}

/// Bound state with `target_nodes` radial nodes inside `bracket`.
pub fn shoot_eigenvalue(problem: &RadialProblem, target_nodes: u32, bracket: (f64, f64)) -> Result<EigenResult> {
    let sh = Shooter::new(problem)?;
    let (mut lo, mut hi) = bracket;
    if !(lo < hi && lo.is_finite() && hi.is_finite()) {
        return Err(Error::invalid("bracket", hi - lo, "need finite lo < hi"));
    }
    let mut n_lo = sh.nodes(lo)?;
    let mut n_hi = sh.nodes(hi)?;
    if !(n_lo <= target_nodes && n_hi > target_nodes) {
        return Err(Error::NoEigenvalue { lo, hi, nodes_lo: n_lo, nodes_hi: n_hi, target: target_nodes });
    }
    let mut history = vec![(lo, hi)];
    let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
    let narrow = |lo: f64, hi: f64| hi - lo <= 1e-6 * scale;
    let exhausted = |lo: f64, hi: f64| hi - lo <= 4.0 * f64::EPSILON * scale;
    while !(n_lo == target_nodes && n_hi == target_nodes + 1 && narrow(lo, hi)) && !exhausted(lo, hi) {
        let mid = 0.5 * (lo + hi);
        let nm = sh.nodes(mid)?;
        if nm > target_nodes {
            hi = mid;
            n_hi = nm;
        } else {
            lo = mid;
            n_lo = nm;
        }
        history.push((lo, hi));
    }

    let f_lo = sh.matching(lo)?.0;
    let f_hi = sh.matching(hi)?.0;
    let energy = if f_lo == 0.0 {
        lo
    } else if f_hi == 0.0 {
        hi
    } else if f_lo.signum() != f_hi.signum() {
        let (a, b) = brent(|e| sh.matching(e).map(|m| m.0), lo, hi, f_lo, f_hi, 2.0 * f64::EPSILON * scale)?;
        history.push((a.min(b), a.max(b)));
        a
    } else {
        // no sign change: fall back to the node-count limit
        while !exhausted(lo, hi) {
            let mid = 0.5 * (lo + hi);
            if sh.nodes(mid)? > target_nodes {
                hi = mid;
            } else {
                lo = mid;
            }
            history.push((lo, hi));
        }
        0.5 * (lo + hi)
    };
    let (f, nodes, rm) = sh.matching(energy)?;
    Ok(EigenResult {
        energy,
        node_count: nodes,
        residual_norm: f.abs(),
        converged: f.abs() <= problem.matching_tol && nodes == target_nodes,
        matching_radius: rm,
        bracket_history: history,
    })
}

/// Brent's method; returns the best estimate and the other bracket end.
fn brent<F>(f: F, a: f64, b: f64, fa: f64, fb: f64, xtol: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let (mut a, mut b, mut fa, mut fb) = (a, b, fa, fb);
    let (mut c, mut fc) = (b, fb);
    let (mut d, mut e) = (b - a, b - a);
    for _ in 0..200 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok((b, c));
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b)?;
    }
    Err(Error::NoConvergence("Brent refinement of the matching function"))
}
