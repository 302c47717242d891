//! Identity suites comparing every closed form against an independent
//! numerical evaluation.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{
    closed_potential_parts, coulomb_b_printed, coulomb_closed, coulomb_gradient_closed, coulomb_gradient_printed,
    coulomb_sum_bruteforce, d6_closed, d6_sum_bruteforce, fourier_coefficients, yukawa_closed_paper,
    yukawa_sum_bruteforce, ImageSumSpec, PotentialKind,
};
use crate::model::{PhysicalParams, QuantumNumbers};
use crate::radial::{shoot_eigenvalue, RadialProblem};
use crate::specfun::{integrate, neumaier, Domain, QuadratureSpec};
use crate::spectrum::{energy_level, Coupling, Wavefunction};

pub const LATTICE_TOL: f64 = 1e-8;
pub const FOURIER_TOL: f64 = 1e-8;
pub const SPECTRUM_TOL: f64 = 1e-6;
pub const NORM_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lattice,
    Fourier,
    Spectrum,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lattice" => Ok(Self::Lattice),
            "fourier" => Ok(Self::Fourier),
            "spectrum" => Ok(Self::Spectrum),
            "all" => Ok(Self::All),
            other => Err(Error::domain(format!("unknown suite `{other}` (expected lattice, fourier, spectrum or all)"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Lattice => "lattice",
            Self::Fourier => "fourier",
            Self::Spectrum => "spectrum",
            Self::All => "all",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Reported, not judged.
    Info,
    /// A known discrepancy of a printed formula, reproduced as predicted.
    ExpectedDeviation,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::Info => "INFO",
            Self::ExpectedDeviation => "EXPECTED-DEVIATION",
        })
    }
}

/// One compared value. Inapplicable coordinates are NaN.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckRow {
    pub identity: String,
    pub r: f64,
    pub w: f64,
    pub radius: f64,
    pub eta: f64,
    pub closed: f64,
    /// Independent evaluation: brute-force sum, quadrature or shooting.
    pub brute: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    /// Truncation, node count or grid size of the independent evaluation.
    pub n: u64,
    pub status: Status,
}

impl CheckRow {
    pub const COLUMNS: [&'static str; 11] =
        ["identity", "r", "w", "R", "eta", "closed", "brute", "abs_err", "rel_err", "N", "status"];

    #[allow(clippy::too_many_arguments)]
    fn judged(identity: String, r: f64, w: f64, radius: f64, eta: f64, closed: f64, brute: f64, n: u64, tol: f64) -> Self {
        let abs_err = (closed - brute).abs();
        let rel_err = if closed != 0.0 { abs_err / closed.abs() } else { abs_err };
        let status = if rel_err <= tol { Status::Pass } else { Status::Fail };
        Self { identity, r, w, radius, eta, closed, brute, abs_err, rel_err, n, status }
    }

    fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyReport {
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }
}

/// The 27-point grid `r/R ∈ {0.3, 1, 3}`, `w/(πR) ∈ {0, ½, 1}`, `R ∈ {½, 1, 2}`.
pub fn lattice_grid() -> Vec<(f64, f64, f64)> {
    let mut g = Vec::with_capacity(27);
    for radius in [0.5, 1.0, 2.0] {
        for x in [0.3, 1.0, 3.0] {
            for y in [0.0, 0.5, 1.0] {
                g.push((x * radius, y * PI * radius, radius));
            }
        }
    }
    g
}

pub fn run(suite: Suite, quick: bool, params: &PhysicalParams) -> Result<VerifyReport> {
    params.validate()?;
    let mut rows = Vec::new();
    if matches!(suite, Suite::Lattice | Suite::All) {
        rows.extend(lattice_suite(quick, params)?);
    }
    if matches!(suite, Suite::Fourier | Suite::All) {
        rows.extend(fourier_suite(quick, params)?);
    }
    if matches!(suite, Suite::Spectrum | Suite::All) {
        rows.extend(spectrum_suite(quick, params)?);
    }
    Ok(VerifyReport { rows })
}

pub fn lattice_suite(quick: bool, params: &PhysicalParams) -> Result<Vec<CheckRow>> {
    let n = if quick { 1_000 } else { 10_000 };
    let nan = f64::NAN;
    let mut rows = Vec::new();
    for (r, w, radius) in lattice_grid() {
        let spec = ImageSumSpec::new(r, w, radius, n)?;
        let sums = coulomb_sum_bruteforce(&spec)?;
        let row = |id: &str, closed: f64, brute: f64| CheckRow::judged(id.into(), r, w, radius, nan, closed, brute, n, LATTICE_TOL);

        rows.push(row("coulomb-s1", coulomb_closed(r, w, radius)?, sums.s1.corrected()));
        let (g, f) = coulomb_gradient_closed(r, w, radius)?;
        rows.push(row("gradient-G+F", g + f, sums.s2.corrected()));
        let (gp, fp) = coulomb_gradient_printed(r, w, radius)?;
        let printed = row("gradient-G+F-printed-signs", gp + fp, sums.s2.corrected());
        let flipped = ((gp + fp) + sums.s2.corrected()).abs() <= LATTICE_TOL * sums.s2.corrected().abs();
        rows.push(if flipped { printed.with_status(Status::ExpectedDeviation) } else { printed });

        let d6 = d6_sum_bruteforce(&spec)?;
        let (c6, t6) = d6_closed(r, w, radius)?;
        rows.push(row("d6-coulomb-part", c6, d6.quartic.corrected()));
        rows.push(row("d6-theta-part", t6, -d6.theta.corrected()));

        let y0 = yukawa_sum_bruteforce(&spec)?;
        let closed_y = yukawa_closed_paper(r, w, radius)?;
        rows.push(CheckRow::judged("yukawa-eta0".into(), r, w, radius, 0.0, closed_y, y0.corrected(), n, LATTICE_TOL));
        if params.eta > 0.0 {
            let ye = yukawa_sum_bruteforce(&spec.with_eta(params.eta)?)?;
            rows.push(
                CheckRow::judged("yukawa-eta".into(), r, w, radius, params.eta, closed_y, ye.corrected(), n, LATTICE_TOL)
                    .with_status(Status::Info),
            );
        }
    }
    Ok(rows)
}

/// `(1/M) Σ f(w_j) cos(n w_j/R)` on `M` equispaced nodes of the period; for
/// analytic periodic integrands this converges geometrically.
pub fn periodic_fourier_quadrature<F: Fn(f64) -> f64>(f: F, radius: f64, n: i64, nodes: usize) -> f64 {
    let (mut s, mut c) = (0.0, 0.0);
    for j in 0..nodes {
        let w = -PI * radius + 2.0 * PI * radius * j as f64 / nodes as f64;
        neumaier(&mut s, &mut c, f(w) * (n as f64 * w / radius).cos());
    }
    (s + c) / nodes as f64
}

pub fn fourier_suite(quick: bool, params: &PhysicalParams) -> Result<Vec<CheckRow>> {
    let nodes = if quick { 1024 } else { 4096 };
    let radius = params.radius;
    let nan = f64::NAN;
    let mut rows = Vec::new();
    for kind in PotentialKind::ALL {
        for x in [0.5, 1.0, 2.0] {
            let r = x * radius;
            let parts = |w: f64| closed_potential_parts(kind, r, w, radius, params);
            parts(0.0)?;
            for n in 0..=8i64 {
                let (a, b) = fourier_coefficients(kind, r, radius, n, params)?;
                let qa = periodic_fourier_quadrature(|w| parts(w).map(|p| p.0).unwrap_or(f64::NAN), radius, n, nodes);
                let qb = periodic_fourier_quadrature(|w| parts(w).map(|p| p.1).unwrap_or(f64::NAN), radius, n, nodes);
                let id = |c: &str| format!("fourier-{}-{c}{n}", kind.name());
                rows.push(CheckRow::judged(id("a"), r, nan, radius, nan, a, qa, nodes as u64, FOURIER_TOL));
                rows.push(CheckRow::judged(id("b"), r, nan, radius, nan, b, qb, nodes as u64, FOURIER_TOL));
                if kind == PotentialKind::Coulomb4d {
                    rows.extend(printed_b_rows(r, radius, n, qb, nodes as u64, params.qe2)?);
                }
            }
        }
    }
    Ok(rows)
}

/// The alternative `b_n = −q²/(2Rr²)(1+|n|)e^{−|n|r/R}` against quadrature,
/// and the factor multiplying `|n|` that the quadrature actually implies
/// (`r/R`, where the alternative has 1).
fn printed_b_rows(r: f64, radius: f64, n: i64, quad_b: f64, nodes: u64, qe2: f64) -> Result<Vec<CheckRow>> {
    let nan = f64::NAN;
    let printed = coulomb_b_printed(r, radius, n, qe2)?;
    let row = CheckRow::judged(format!("fourier-coulomb-4d-b{n}-printed"), r, nan, radius, nan, printed, quad_b, nodes, FOURIER_TOL);
    let m = n.unsigned_abs() as f64;
    let deviates = m > 0.0 && (r - radius).abs() > 1e-12 * radius;
    if !deviates {
        return Ok(vec![row.with_status(Status::Info)]);
    }
    let expected_dev = row.status == Status::Fail;
    let mut out = vec![row.with_status(if expected_dev { Status::ExpectedDeviation } else { Status::Fail })];
    let inferred = (quad_b * (-2.0 * radius * r * r / qe2) * (m * r / radius).exp() - 1.0) / m;
    out.push(CheckRow::judged(
        format!("fourier-coulomb-4d-b{n}-|n|-factor"),
        r,
        nan,
        radius,
        nan,
        r / radius,
        inferred,
        nodes,
        FOURIER_TOL,
    ));
    Ok(out)
}

fn count_nodes(wf: &Wavefunction, r_max: f64) -> Result<u64> {
    let mut nodes = 0;
    let mut prev = wf.value(1e-6 * r_max)?;
    for i in 1..=20_000 {
        let v = wf.value(r_max * i as f64 / 20_000.0)?;
        if prev != 0.0 && v.signum() != prev.signum() {
            nodes += 1;
        }
        prev = v;
    }
    Ok(nodes)
}

pub fn spectrum_suite(quick: bool, params: &PhysicalParams) -> Result<Vec<CheckRow>> {
    let nan = f64::NAN;
    let commutative = PhysicalParams { theta: 0.0, ..*params };
    let grid_size = if quick { 500 } else { 1000 };
    let mut rows = Vec::new();
    let mut shoot = |p: &PhysicalParams, qn: QuantumNumbers, status: Option<Status>| -> Result<()> {
        let exact = energy_level(&qn, p)?.energy;
        let prob = RadialProblem::compact(Coupling::Coulomb, &qn, p)?.with_grid_size(grid_size);
        let br = RadialProblem::compact_bracket(Coupling::Coulomb, &qn, p);
        let res = shoot_eigenvalue(&prob, qn.l, br)?;
        let id = format!("shooting-n{}-l{}-ell{}-theta{}", qn.n, qn.l, qn.ell, p.theta);
        let mut row = CheckRow::judged(id, nan, nan, p.radius, nan, exact, res.energy, grid_size as u64, SPECTRUM_TOL);
        if !res.converged {
            row.status = Status::Fail;
        }
        rows.push(match status {
            Some(s) => row.with_status(s),
            None => row,
        });
        Ok(())
    };
    for n in 0..=1 {
        for l in 0..=2 {
            for ell in 0..=1 {
                shoot(&commutative, QuantumNumbers::new(n, l, ell), None)?;
                if params.theta > 0.0 {
                    shoot(params, QuantumNumbers::new(n, l, ell), Some(Status::Info))?;
                }
            }
        }
    }
    let l_max = if quick { 2 } else { 5 };
    for l in 0..=l_max {
        for ell in 0..=2 {
            let qn = QuantumNumbers::new(0, l, ell);
            let wf = Wavefunction::new(Coupling::Coulomb, &qn, &commutative)?;
            let spec = QuadratureSpec::adaptive(1e-14, 1e-12);
            let norm = integrate(
                |r| {
                    let v = wf.value(r).unwrap_or(f64::NAN);
                    v * v * r * r
                },
                Domain::SemiInfinite(0.0),
                &spec,
            )?;
            let id = format!("norm-l{l}-ell{ell}");
            rows.push(CheckRow::judged(id, nan, nan, params.radius, nan, 1.0, norm.value, norm.evaluations as u64, NORM_TOL));
            let r_max = 60.0 / wf.kappa;
            let nodes = count_nodes(&wf, r_max)?;
            let id = format!("nodes-l{l}-ell{ell}");
            rows.push(CheckRow::judged(id, nan, nan, params.radius, nan, l as f64, nodes as f64, 20_000, 0.0));
        }
    }
    Ok(rows)
}
