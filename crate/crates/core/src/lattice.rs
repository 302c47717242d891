//! Image sums over the compact circle and their closed forms.
//!
//! A point source at the origin of `R³ × S¹` is represented by its periodic
//! images at `x⁴ = w − 2πnR`. With `ρ_n² = r² + (w − 2πnR)²`, the sums used
//! throughout are
//!
//! * `s1 = Σ 1/ρ_n²`, closed form `S(x, y)/(2Rr)`,
//! * `s2 = Σ 2r/ρ_n⁴ = −∂_r s1`,
//! * `Σ 1/ρ_n⁴` and `Σ 4r/ρ_n⁶` for the six-dimensional potential,
//!
//! where `x = r/R`, `y = w/R` and `S(x, y) = sinh x / (cosh x − cos y)`.
//!
//! `S` and its `x`-derivatives are evaluated in the scaled form obtained by
//! multiplying through by `2e^{−x}`, which is free of overflow for any `x`
//! and free of cancellation near the on-axis pole.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::PhysicalParams;
use crate::specfun::neumaier;

/// Ratio `r/R` below which the on-axis singularity is considered reached.
pub const MIN_RADIUS_RATIO: f64 = 1e-12;

/// Default brute-force half-width.
pub const DEFAULT_TRUNCATION: u64 = 10_000;

/// Parameters of a truncated image sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageSumSpec {
    pub r: f64,
    pub w: f64,
    pub radius: f64,
    pub truncation_n: u64,
    pub eta: f64,
}

impl ImageSumSpec {
    pub fn new(r: f64, w: f64, radius: f64, truncation_n: u64) -> Result<Self> {
        Self { r, w, radius, truncation_n, eta: 0.0 }.validated()
    }

    pub fn with_eta(self, eta: f64) -> Result<Self> {
        Self { eta, ..self }.validated()
    }

    pub fn validated(self) -> Result<Self> {
        check_geometry(self.r, self.radius)?;
        if !(self.w.is_finite() && self.w.abs() <= PI * self.radius * (1.0 + 1e-15)) {
            return Err(Error::invalid("w", self.w, "compact coordinate must lie in [-πR, πR]"));
        }
        if self.truncation_n < 1 {
            return Err(Error::invalid("truncation_n", 0.0, "need at least one image pair"));
        }
        if !(self.eta.is_finite() && self.eta >= 0.0) {
            return Err(Error::invalid("eta", self.eta, "screening must be finite and >= 0"));
        }
        Ok(self)
    }
}

fn check_geometry(r: f64, radius: f64) -> Result<()> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::invalid("R", radius, "radius must be finite and > 0"));
    }
    if !(r.is_finite() && r >= MIN_RADIUS_RATIO * radius) {
        return Err(Error::invalid("r", r, "r must be finite and at least 1e-12 R"));
    }
    Ok(())
}

/// A truncated sum `Σ_{|n|≤N}` with its tail estimate and convergence trace.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceSum {
    /// Partial sum over `|n| ≤ N`.
    pub partial: f64,
    /// Estimate of `Σ_{|n|>N}`.
    pub tail: f64,
    pub truncation_n: u64,
    /// Partial sums at `N/4`, `N/2` and `N`.
    pub checkpoints: [(u64, f64); 3],
}

impl BruteForceSum {
    /// Partial sum plus tail estimate.
    pub fn corrected(&self) -> f64 {
        self.partial + self.tail
    }

    /// `true` when the partial sums never decrease between checkpoints (all
    /// summands here are positive).
    pub fn monotone(&self) -> bool {
        self.checkpoints.windows(2).all(|p| p[1].1 >= p[0].1)
    }

    /// Empirical convergence order `p` in `|S − S_N| ~ N^{−p}`, from the three
    /// checkpoints. NaN when the increments are lost to rounding.
    pub fn observed_order(&self) -> f64 {
        let [(_, a), (_, b), (_, c)] = self.checkpoints;
        let d1 = b - a;
        let d2 = c - b;
        if d1 > 0.0 && d2 > 0.0 {
            (d1 / d2).log2()
        } else {
            f64::NAN
        }
    }
}

/// `Σ_{n>N} n^{−k}` by Euler–Maclaurin.
fn zeta_tail(k: f64, n: f64) -> f64 {
    n.powf(1.0 - k) / (k - 1.0) - 0.5 * n.powf(-k) + k / (12.0 * n.powf(k + 1.0))
        - k * (k + 1.0) * (k + 2.0) / (720.0 * n.powf(k + 3.0))
}

/// Tail of `Σ_{|n|>N} 1/ρ_n^{2p}` from the large-`n` pair expansion
/// `2u^{−2p}[1 + p((2p+1)w² − r²)/u²]`, `u = 2πRn`.
fn power_tail(p: f64, spec: &ImageSumSpec) -> f64 {
    let two_pi_r = 2.0 * PI * spec.radius;
    let n = spec.truncation_n as f64;
    let leading = zeta_tail(2.0 * p, n);
    let next = zeta_tail(2.0 * p + 2.0, n);
    let corr = p * ((2.0 * p + 1.0) * spec.w * spec.w - spec.r * spec.r) / (two_pi_r * two_pi_r);
    2.0 * two_pi_r.powf(-2.0 * p) * (leading + corr * next)
}

/// Neumaier-compensated sum of `term(ρ²)` over `|n| ≤ N`, added from the
/// outermost images inward.
fn image_sum<F: Fn(f64) -> f64>(spec: &ImageSumSpec, upto: u64, term: &F) -> f64 {
    let two_pi_r = 2.0 * PI * spec.radius;
    let r2 = spec.r * spec.r;
    let (mut s, mut c) = (0.0, 0.0);
    for n in (1..=upto).rev() {
        let u = two_pi_r * n as f64;
        let dm = spec.w - u;
        let dp = spec.w + u;
        neumaier(&mut s, &mut c, term(r2 + dm * dm) + term(r2 + dp * dp));
    }
    neumaier(&mut s, &mut c, term(r2 + spec.w * spec.w));
    s + c
}

fn traced_sum<F: Fn(f64) -> f64>(spec: &ImageSumSpec, term: F, tail: f64) -> BruteForceSum {
    let n = spec.truncation_n;
    let quarter = (n / 4).max(1);
    let half = (n / 2).max(1);
    let partial = image_sum(spec, n, &term);
    BruteForceSum {
        partial,
        tail,
        truncation_n: n,
        checkpoints: [
            (quarter, image_sum(spec, quarter, &term)),
            (half, image_sum(spec, half, &term)),
            (n, partial),
        ],
    }
}

/// The two four-dimensional sums `s1 = Σ 1/ρ²` and `s2 = Σ 2r/ρ⁴`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoulombSums {
    pub s1: BruteForceSum,
    pub s2: BruteForceSum,
}

pub fn coulomb_sum_bruteforce(spec: &ImageSumSpec) -> Result<CoulombSums> {
    let spec = spec.validated()?;
    let r = spec.r;
    let s1 = traced_sum(&spec, |q| 1.0 / q, power_tail(1.0, &spec));
    let s2 = traced_sum(&spec, |q| 2.0 * r / (q * q), 2.0 * r * power_tail(2.0, &spec));
    Ok(CoulombSums { s1, s2 })
}

/// `Σ e^{−ηρ}/ρ²`. At `η = 0` the partial sum is bit-identical to `s1`.
pub fn yukawa_sum_bruteforce(spec: &ImageSumSpec) -> Result<BruteForceSum> {
    let spec = spec.validated()?;
    let eta = spec.eta;
    let tail = if eta == 0.0 {
        power_tail(1.0, &spec)
    } else {
        // geometric bound on the screened images beyond N
        let step = 2.0 * PI * spec.radius;
        let u = step * (spec.truncation_n + 1) as f64 - spec.w.abs();
        2.0 * (-eta * u).exp() / (u * u) / (-(-eta * step).exp_m1())
    };
    Ok(traced_sum(&spec, |q| (-eta * q.sqrt()).exp() / q, tail))
}

/// The six-dimensional sums `Σ 1/ρ⁴` and `Σ 4r/ρ⁶`.
#[derive(Debug, Clone, PartialEq)]
pub struct D6Sums {
    pub quartic: BruteForceSum,
    pub theta: BruteForceSum,
}

pub fn d6_sum_bruteforce(spec: &ImageSumSpec) -> Result<D6Sums> {
    let spec = spec.validated()?;
    let r = spec.r;
    let quartic = traced_sum(&spec, |q| 1.0 / (q * q), power_tail(2.0, &spec));
    let theta = traced_sum(&spec, |q| 4.0 * r / (q * q * q), 4.0 * r * power_tail(3.0, &spec));
    Ok(D6Sums { quartic, theta })
}

/// Scaled pieces of the kernel: `e = e^{−x}`, `s = sin(y/2)` and
/// `D = 2e^{−x}(cosh x − cos y) = (1 − e)² + 4es²`.
struct Kernel {
    e: f64,
    om: f64,
    s2: f64,
    d: f64,
}

impl Kernel {
    fn new(x: f64, y: f64) -> Self {
        let e = (-x).exp();
        let om = -(-x).exp_m1();
        let s = (0.5 * y).sin();
        let s2 = s * s;
        Self { e, om, s2, d: om * om + 4.0 * e * s2 }
    }

    /// `1 − e^{−2x}`.
    fn sh(&self) -> f64 {
        self.om * (1.0 + self.e)
    }

    /// `S = sinh x / (cosh x − cos y)`.
    fn s(&self) -> f64 {
        self.sh() / self.d
    }

    /// `2e^{−x}(1 − cosh x cos y)`.
    fn p(&self) -> f64 {
        -self.om * self.om + 2.0 * (1.0 + self.e * self.e) * self.s2
    }

    /// `∂S/∂x = (1 − cosh x cos y)/(cosh x − cos y)²`.
    fn ds(&self) -> f64 {
        2.0 * self.e * self.p() / (self.d * self.d)
    }

    /// `∂²S/∂x²`.
    fn d2s(&self) -> f64 {
        let s2 = self.s2;
        let q = -self.om * self.om * (1.0 + 2.0 * s2) + 4.0 * s2 * (1.0 + self.e + self.e * self.e)
            - 8.0 * self.e * s2 * s2;
        -2.0 * self.e * self.sh() * q / (self.d * self.d * self.d)
    }
}

/// `sinh x / (cosh x − cos y)`.
pub fn kernel(x: f64, y: f64) -> f64 {
    Kernel::new(x, y).s()
}

/// `∂/∂x [sinh x / (cosh x − cos y)]`.
pub fn kernel_dx(x: f64, y: f64) -> f64 {
    Kernel::new(x, y).ds()
}

/// `∂²/∂x² [sinh x / (cosh x − cos y)]`.
pub fn kernel_dxx(x: f64, y: f64) -> f64 {
    Kernel::new(x, y).d2s()
}

/// `s1` in closed form: `sinh(r/R) / (2Rr (cosh(r/R) − cos(w/R)))`.
pub fn coulomb_closed(r: f64, w: f64, radius: f64) -> Result<f64> {
    check_geometry(r, radius)?;
    Ok(kernel(r / radius, w / radius) / (2.0 * radius * r))
}

/// `(G, F)` with `G + F = s2 = −∂_r s1`:
/// `G = S/(2Rr²)`, `F = (cosh x cos y − 1)/(2R²r (cosh x − cos y)²)`.
///
/// These are the negatives of the terms as usually displayed (see
/// [`coulomb_gradient_printed`]), whose sum is `−s2`.
pub fn coulomb_gradient_closed(r: f64, w: f64, radius: f64) -> Result<(f64, f64)> {
    check_geometry(r, radius)?;
    let k = Kernel::new(r / radius, w / radius);
    let g = k.s() / (2.0 * radius * r * r);
    let f = -k.ds() / (2.0 * radius * radius * r);
    Ok((g, f))
}

/// `G(r) = −S/(2Rr²)` and `F(r) = (1 − cosh x cos y)/(2R²r (cosh x − cos y)²)`
/// exactly as displayed in the literature; `G + F = −s2`.
pub fn coulomb_gradient_printed(r: f64, w: f64, radius: f64) -> Result<(f64, f64)> {
    let (g, f) = coulomb_gradient_closed(r, w, radius)?;
    Ok((-g, -f))
}

/// The claimed closed form of the screened sum. It carries no `η`
/// dependence and coincides with [`coulomb_closed`].
pub fn yukawa_closed_paper(r: f64, w: f64, radius: f64) -> Result<f64> {
    coulomb_closed(r, w, radius)
}

/// Both brackets of the compactified six-dimensional potential with `q_e²`
/// factored out, so that `V = −q_e²·coulomb_part + iθ∂₀·q_e²·theta_part`.
///
/// `coulomb_part = Σ 1/ρ⁴` and `theta_part = ∂_r coulomb_part = −Σ 4r/ρ⁶`.
pub fn d6_closed(r: f64, w: f64, radius: f64) -> Result<(f64, f64)> {
    check_geometry(r, radius)?;
    let x = r / radius;
    let y = w / radius;
    let k = Kernel::new(x, y);
    let pref = 1.0 / (4.0 * radius * radius * r * r);
    let coulomb = pref * (k.s() / x - k.ds());
    let gap = x.cosh() - y.cos();
    let theta = if x <= 200.0 && gap.abs() >= 1e-2 {
        d6_theta_printed(r, w, radius)
    } else {
        // ∂_r of coulomb_part written through S, S', S''
        let r5 = radius.powi(5);
        (-3.0 * k.s() / x.powi(4) + 3.0 * k.ds() / x.powi(3) - k.d2s() / (x * x)) / (4.0 * r5)
    };
    Ok((coulomb, theta))
}

/// The `iθ∂₀` bracket of the six-dimensional potential as printed, divided
/// by `q_e²`. Loses relative precision like `(r/R)⁻⁴` on axis and overflows
/// beyond `r/R ≈ 230`; [`d6_closed`] switches to an equivalent stable form
/// in those regimes.
pub fn d6_theta_printed(r: f64, w: f64, radius: f64) -> f64 {
    let x = r / radius;
    let y = w / radius;
    let (rr, rad2) = (r * r, radius * radius);
    let (sh, ch) = (x.sinh(), x.cosh());
    let (sh2, ch2) = ((2.0 * x).sinh(), (2.0 * x).cosh());
    let (cw, c2w) = (y.cos(), (2.0 * y).cos());
    let bracket = (rr + 3.0 * rad2) * sh * c2w
        + cw * ((rr - 6.0 * rad2) * sh2 + 3.0 * r * radius * (ch2 + 3.0))
        + 3.0 * sh * (rad2 * ch2 + 2.0 * rad2 - rr)
        - 3.0 * r * radius * ch * (c2w + 3.0);
    bracket / (8.0 * rr * rr * radius.powi(3) * (cw - ch).powi(3))
}

/// Which compactified potential a Fourier table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialKind {
    Coulomb4d,
    Yukawa4d,
    Coulomb6d,
}

impl PotentialKind {
    pub const ALL: [PotentialKind; 3] = [Self::Coulomb4d, Self::Yukawa4d, Self::Coulomb6d];

    pub fn name(self) -> &'static str {
        match self {
            Self::Coulomb4d => "coulomb-4d",
            Self::Yukawa4d => "yukawa-4d",
            Self::Coulomb6d => "coulomb-6d",
        }
    }

    /// Overall coupling: `q_e²` or `V_0`.
    pub fn coupling(self, params: &PhysicalParams) -> f64 {
        match self {
            Self::Yukawa4d => params.v0,
            _ => params.qe2,
        }
    }
}

impl fmt::Display for PotentialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PotentialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "coulomb-4d" | "coulomb4d" | "coulomb" => Ok(Self::Coulomb4d),
            "yukawa-4d" | "yukawa4d" | "yukawa" => Ok(Self::Yukawa4d),
            "coulomb-6d" | "coulomb6d" | "d6" => Ok(Self::Coulomb6d),
            other => Err(Error::domain(format!(
                "unknown potential kind `{other}` (expected coulomb-4d, yukawa-4d or coulomb-6d)"
            ))),
        }
    }
}

/// Fourier coefficients `(a_n, b_n)` of `V(r, w) = Σ (a_n + iθ b_n ∂₀) e^{inw/R}`.
///
/// * 4d: `a_n = −g/(2rR) e^{−|n|r/R}`, `b_n = a_n (1/r + |n|/R)`, with
///   `g = q_e²` (Coulomb) or `V_0` (Yukawa);
/// * 6d: `a_n = −q_e²/(2Rr)² (R/r + |n|) e^{−|n|r/R}`,
///   `b_n = −q_e²/(2Rr)² (3R/r² + 3|n|/r + n²/R) e^{−|n|r/R}`.
pub fn fourier_coefficients(
    kind: PotentialKind,
    r: f64,
    radius: f64,
    n: i64,
    params: &PhysicalParams,
) -> Result<(f64, f64)> {
    check_geometry(r, radius)?;
    let g = kind.coupling(params);
    let m = n.unsigned_abs() as f64;
    let decay = (-m * r / radius).exp();
    Ok(match kind {
        PotentialKind::Coulomb4d | PotentialKind::Yukawa4d => {
            let a = -g / (2.0 * r * radius) * decay;
            (a, a * (1.0 / r + m / radius))
        }
        PotentialKind::Coulomb6d => {
            let pref = -g / (4.0 * radius * radius * r * r) * decay;
            (
                pref * (radius / r + m),
                pref * (3.0 * radius / (r * r) + 3.0 * m / r + m * m / radius),
            )
        }
    })
}

/// The alternative four-dimensional Coulomb coefficient
/// `b_n = −q_e²/(2Rr²) (1 + |n|) e^{−|n|r/R}`. It agrees with the bracket
/// form only at `r = R` or `n = 0`.
pub fn coulomb_b_printed(r: f64, radius: f64, n: i64, qe2: f64) -> Result<f64> {
    check_geometry(r, radius)?;
    let m = n.unsigned_abs() as f64;
    Ok(-qe2 / (2.0 * radius * r * r) * (1.0 + m) * (-m * r / radius).exp())
}

/// The static and `θ` parts of a compactified potential evaluated from the
/// closed forms (coefficient of `1` and of `iθ∂₀`).
pub fn closed_potential_parts(
    kind: PotentialKind,
    r: f64,
    w: f64,
    radius: f64,
    params: &PhysicalParams,
) -> Result<(f64, f64)> {
    let g = kind.coupling(params);
    Ok(match kind {
        PotentialKind::Coulomb4d | PotentialKind::Yukawa4d => {
            let s1 = coulomb_closed(r, w, radius)?;
            let (gg, ff) = coulomb_gradient_closed(r, w, radius)?;
            (-g * s1, -g * (gg + ff))
        }
        PotentialKind::Coulomb6d => {
            let (c, t) = d6_closed(r, w, radius)?;
            (-g * c, g * t)
        }
    })
}

/// A truncated table of Fourier modes `0..=K` (coefficients are even in `n`).
#[derive(Debug, Clone, PartialEq)]
pub struct FourierPotential {
    pub kind: PotentialKind,
    pub r: f64,
    pub radius: f64,
    pub params: PhysicalParams,
    /// `(a_n, b_n)` for `n = 0..=K`.
    pub modes: Vec<(f64, f64)>,
}

impl FourierPotential {
    pub fn new(kind: PotentialKind, r: f64, radius: f64, max_mode: u32, params: &PhysicalParams) -> Result<Self> {
        let modes = (0..=max_mode as i64)
            .map(|n| fourier_coefficients(kind, r, radius, n, params))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { kind, r, radius, params: *params, modes })
    }

    pub fn max_mode(&self) -> u32 {
        (self.modes.len() - 1) as u32
    }

    /// `(a_n, b_n)`; `None` beyond the table.
    pub fn mode(&self, n: i64) -> Option<(f64, f64)> {
        self.modes.get(n.unsigned_abs() as usize).copied()
    }

    /// `Σ_{|n|≤K} a_n e^{inw/R}` and the same for `b_n`.
    pub fn partial_sums(&self, w: f64) -> (f64, f64) {
        let (mut sa, mut ca, mut sb, mut cb) = (0.0, 0.0, 0.0, 0.0);
        for (n, &(a, b)) in self.modes.iter().enumerate().rev() {
            let weight = if n == 0 { 1.0 } else { 2.0 * (n as f64 * w / self.radius).cos() };
            neumaier(&mut sa, &mut ca, weight * a);
            neumaier(&mut sb, &mut cb, weight * b);
        }
        (sa + ca, sb + cb)
    }

    /// Upper bounds `2Σ_{n>K}|a_n|` and `2Σ_{n>K}|b_n|` on the truncation error
    /// of [`partial_sums`](Self::partial_sums).
    pub fn tail_bounds(&self) -> Result<(f64, f64)> {
        let k = self.max_mode() as i64;
        let (mut ta, mut tb) = (0.0, 0.0);
        let mut prev: Option<(f64, f64)> = None;
        let mut n = k + 1;
        loop {
            let (a, b) = fourier_coefficients(self.kind, self.r, self.radius, n, &self.params)?;
            let (a, b) = (a.abs(), b.abs());
            ta += a;
            tb += b;
            if let Some((pa, pb)) = prev {
                // past the maximum of poly·geometric the ratio decreases to
                // e^{−r/R}, so the remainder is bounded by a geometric series
                let qa = if pa > 0.0 { a / pa } else { 0.0 };
                let qb = if pb > 0.0 { b / pb } else { 0.0 };
                if qa < 1.0 && qb < 1.0 && (a <= 1e-17 * ta && b <= 1e-17 * tb || n - k > 100_000) {
                    ta += a * qa / (1.0 - qa);
                    tb += b * qb / (1.0 - qb);
                    break;
                }
                if a == 0.0 && b == 0.0 {
                    break;
                }
            }
            prev = Some((a, b));
            n += 1;
        }
        Ok((2.0 * ta, 2.0 * tb))
    }
}
