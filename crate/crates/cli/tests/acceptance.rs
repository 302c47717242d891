//! Acceptance gate. Prints one `PASS`/`FAIL` line per criterion and exits
//! nonzero when a criterion outside `KNOWN_FAILURES` fails, or when a known
//! failure starts passing.

use std::process::{Command, ExitCode};
use std::time::Instant;

use ncspectra::lattice::{yukawa_closed_paper, yukawa_sum_bruteforce, ImageSumSpec, DEFAULT_TRUNCATION};
use ncspectra::potentials::{kg_coefficients, kg_effective_potential};
use ncspectra::radial::{kg_integrate_u, residual, RadialProblem};
use ncspectra::specfun::{
    bessel_j, bessel_j_prime, bessel_y, bessel_y_prime, gamma, integrate, laguerre, Domain, QuadratureSpec,
};
use ncspectra::spectrum::{energy_level, rejected_branch, WronskianSolution};
use ncspectra::verify::{self, CheckRow, Status, Suite, VerifyReport};
use ncspectra::{PhysicalParams, QuantumNumbers};

const LATTICE_TOL: f64 = 1e-8;
const LATTICE_BUDGET_S: f64 = 30.0;
const FOURIER_TOL: f64 = 1e-8;
const SPECTRUM_TOL: f64 = 1e-6;
const SPECTRUM_BUDGET_S: f64 = 60.0;
const EXPONENT_TOL: f64 = 0.01;
const NORM_TOL: f64 = 1e-8;
const CHI_RESIDUAL_TOL: f64 = 1e-5;
const WRONSKIAN_TOL: f64 = 1e-9;
const LAGUERRE_TOL: f64 = 1e-10;
const NORMALIZATION_TOL: f64 = 1e-8;
const B4_TOL: f64 = 1e-12;
const DECAY_RATIO: f64 = 1e-6;
const KG_RESIDUAL_TOL: f64 = 1e-5;
const YUKAWA_ETA0_TOL: f64 = 1e-8;
const YUKAWA_SPLIT: f64 = 0.10;
const FIGURE_TOL: f64 = 1e-12;

/// Criteria that fail by construction; see the decisions ledger.
const KNOWN_FAILURES: [&str; 2] = ["2b", "8b"];

type Criterion<'a> = (&'static str, &'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn unit() -> PhysicalParams {
    PhysicalParams { theta: 0.0, ..PhysicalParams::default() }
}

fn max_rel(rows: &[&CheckRow]) -> f64 {
    rows.iter().map(|r| r.rel_err).fold(0.0, f64::max)
}

fn select(report: &VerifyReport, pred: impl Fn(&CheckRow) -> bool) -> Vec<&CheckRow> {
    report.rows.iter().filter(|r| pred(r)).collect()
}

fn lattice() -> Outcome {
    let t = Instant::now();
    let report = verify::run(Suite::Lattice, false, &unit()).expect("lattice suite");
    let secs = t.elapsed().as_secs_f64();
    let ids = ["coulomb-s1", "gradient-G+F", "d6-coulomb-part"];
    let mut worst = 0.0f64;
    let mut count = 0;
    for id in ids {
        let rows = select(&report, |r| r.identity == id);
        count += rows.len();
        worst = worst.max(max_rel(&rows));
    }
    outcome(
        count == 81 && worst <= LATTICE_TOL && secs <= LATTICE_BUDGET_S,
        format!("{count} rows, max rel err {worst:.2e} (tol {LATTICE_TOL:e}), {secs:.2} s (budget {LATTICE_BUDGET_S} s)"),
    )
}

fn fourier(report: &VerifyReport) -> Outcome {
    let rows = select(report, |r| r.identity.starts_with("fourier-") && !r.identity.contains("printed") && !r.identity.contains("factor"));
    let worst = max_rel(&rows);
    outcome(
        rows.len() == 3 * 2 * 27 && rows.iter().all(|r| r.abs_err.is_finite()) && worst <= FOURIER_TOL,
        format!("{} coefficients, max rel err {worst:.2e} (tol {FOURIER_TOL:e})", rows.len()),
    )
}

/// The printed `b_n` is judged against quadrature like every other
/// coefficient; it fails, and the `r/R` factor rows show where.
fn fourier_printed(report: &VerifyReport) -> Outcome {
    let printed = select(report, |r| r.identity.ends_with("-printed") && r.status != Status::Info);
    let worst = max_rel(&printed);
    let factors = select(report, |r| r.identity.ends_with("|n|-factor"));
    let factor_ok = !factors.is_empty() && factors.iter().all(|r| r.status == Status::Pass);
    outcome(
        worst <= FOURIER_TOL,
        format!(
            "printed b_n vs quadrature: max rel err {worst:.2e} over {} rows; |n|-term factor equals r/R in {}/{} rows",
            printed.len(),
            factors.iter().filter(|r| r.status == Status::Pass).count(),
            factors.len(),
        ) + if factor_ok { "" } else { " (factor pattern NOT confirmed)" },
    )
}

fn spectrum() -> Outcome {
    let t = Instant::now();
    let report = verify::run(Suite::Spectrum, false, &unit()).expect("spectrum suite");
    let secs = t.elapsed().as_secs_f64();
    let rows = select(&report, |r| r.identity.starts_with("shooting-"));
    let worst = max_rel(&rows);
    let failed = rows.iter().filter(|r| r.status != Status::Pass).count();
    outcome(
        rows.len() == 12 && failed == 0 && worst <= SPECTRUM_TOL && secs <= SPECTRUM_BUDGET_S,
        format!("{} levels, max rel err {worst:.2e} (tol {SPECTRUM_TOL:e}), {secs:.2} s (budget {SPECTRUM_BUDGET_S} s)", rows.len()),
    )
}

fn theta_bitwise() -> Outcome {
    let mut mismatches = 0;
    let mut total = 0;
    for n in 0..=2 {
        for l in 0..=5 {
            for ell in 0..=3 {
                let qn = QuantumNumbers::new(n, l, ell);
                let e = |theta: f64| energy_level(&qn, &PhysicalParams { theta, ..unit() }).unwrap().energy.to_bits();
                let e0 = e(0.0);
                total += 1;
                if e(1e-3) != e0 || e(0.1) != e0 {
                    mismatches += 1;
                }
            }
        }
    }
    outcome(mismatches == 0, format!("{total} levels, {mismatches} differ across theta in {{0, 1e-3, 0.1}}"))
}

fn rejected_exponent() -> Outcome {
    let mut worst = 0.0f64;
    for ell in 0..=2 {
        for l in 0..=2 {
            let qn = QuantumNumbers::new(0, l, ell);
            let pts: Vec<(f64, f64)> = (0..=8)
                .map(|i| {
                    let theta = 10f64.powf(-4.0 + 0.25 * i as f64);
                    let e = rejected_branch(&qn, &PhysicalParams { theta, ..unit() }).unwrap().energy;
                    (theta.ln(), e.abs().ln())
                })
                .collect();
            let m = pts.len() as f64;
            let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), p| (a + p.0, b + p.1));
            let (mx, my) = (sx / m, sy / m);
            let num: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
            let den: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
            worst = worst.max((num / den + 1.0).abs());
        }
    }
    outcome(worst <= EXPONENT_TOL, format!("fitted exponent within {worst:.2e} of -1 (tol {EXPONENT_TOL})"))
}

fn wavefunctions(report: &VerifyReport) -> Outcome {
    let norms = select(report, |r| r.identity.starts_with("norm-"));
    let nodes = select(report, |r| r.identity.starts_with("nodes-"));
    let worst = norms.iter().map(|r| r.abs_err).fold(0.0, f64::max);
    let bad_nodes = nodes.iter().filter(|r| r.status != Status::Pass).count();
    outcome(
        norms.len() == 18 && nodes.len() == 18 && worst <= NORM_TOL && bad_nodes == 0,
        format!("{} norms, max |norm - 1| {worst:.2e} (tol {NORM_TOL:e}); {bad_nodes} node-count mismatches", norms.len()),
    )
}

fn chi_residual() -> Outcome {
    // α = 1, ν² = 1, λ₄ = 3, E = ħ = 1
    let p = PhysicalParams { mass: 0.5, qe2: 1.0, ..unit() };
    let s = WronskianSolution::new(1, &p, 1.0, 1.0, 0.0).unwrap();
    let eps2 = s.epsilon * s.epsilon;
    let h = 1e-2;
    let mut worst = 0.0f64;
    for i in 0..=36 {
        let r = 1.0 + 0.25 * i as f64;
        let f = |k: f64| s.chi(r + k * h).unwrap();
        let (m2, m1, z, p1, p2) = (f(-2.0), f(-1.0), f(0.0), f(1.0), f(2.0));
        let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
        let d2 = (-m2 + 16.0 * m1 - 30.0 * z + 16.0 * p1 - p2) / (12.0 * h * h);
        let lhs = d2 + 3.0 / r * d1 + (s.alpha * s.alpha - (eps2 - 1.0) / (r * r)) * z;
        worst = worst.max((lhs - s.source(r).unwrap()).abs());
    }
    outcome(worst <= CHI_RESIDUAL_TOL, format!("max residual {worst:.2e} on r in [1, 10] (tol {CHI_RESIDUAL_TOL:e})"))
}

fn special_functions() -> Outcome {
    let mut wr = 0.0f64;
    for i in 0..=20 {
        let nu = 0.5 * i as f64;
        for k in 0..=60 {
            let x = 0.1 * (500.0f64).powf(k as f64 / 60.0);
            let w = bessel_j(nu, x).unwrap() * bessel_y_prime(nu, x).unwrap()
                - bessel_j_prime(nu, x).unwrap() * bessel_y(nu, x).unwrap();
            wr = wr.max((w - 2.0 / (std::f64::consts::PI * x)).abs());
        }
    }
    let mut rec = 0.0f64;
    for l in 1..30u32 {
        for &a in &[-0.85, -0.5, 0.0, 0.5, 1.0, 2.3, 5.0] {
            for k in 0..=50 {
                let z = k as f64;
                let (lm, l0, lp) = (laguerre(l - 1, a, z).unwrap(), laguerre(l, a, z).unwrap(), laguerre(l + 1, a, z).unwrap());
                let lf = l as f64;
                let terms = [(lf + 1.0) * lp, -(2.0 * lf + 1.0 + a - z) * l0, (lf + a) * lm];
                let scale: f64 = terms.iter().map(|t| t.abs()).sum();
                if scale > 0.0 {
                    rec = rec.max(terms.iter().sum::<f64>().abs() / scale);
                }
            }
        }
    }
    let mut norm = 0.0f64;
    let spec = QuadratureSpec::adaptive(1e-300, 1e-12);
    for l in 0..=10u32 {
        for &a in &[0.5, 1.0, 2.3] {
            let v = integrate(
                |z| (-z).exp() * z.powf(a + 1.0) * laguerre(l, a, z).unwrap().powi(2),
                Domain::SemiInfinite(0.0),
                &spec,
            )
            .unwrap()
            .value;
            let lfact: f64 = (1..=l).map(f64::from).product();
            let exact = (2.0 * l as f64 + 1.0 + a) * gamma(l as f64 + 1.0 + a).unwrap() / lfact;
            norm = norm.max((v - exact).abs() / exact);
        }
    }
    outcome(
        wr <= WRONSKIAN_TOL && rec <= LAGUERRE_TOL && norm <= NORMALIZATION_TOL,
        format!(
            "Bessel Wronskian {wr:.2e} (tol {WRONSKIAN_TOL:e}); Laguerre recurrence {rec:.2e} (tol {LAGUERRE_TOL:e}); normalization {norm:.2e} (tol {NORMALIZATION_TOL:e})"
        ),
    )
}

fn kg_b4() -> Outcome {
    let p = PhysicalParams::kg_figure();
    let b = kg_coefficients(&QuantumNumbers::new(0, 0, 1), &p, 1.0).unwrap();
    let expected = (1.0f64 / 137.0).powi(2) / 2.0;
    let rel = (b.b4 - expected).abs() / expected;
    outcome(rel <= B4_TOL, format!("b4 = {:.6e}, (1/137)^2/2 = {expected:.6e}, rel err {rel:.1e}", b.b4))
}

fn kg_decay() -> Outcome {
    let p = PhysicalParams::kg_figure();
    let qn = QuantumNumbers::new(0, 0, 1);
    let at_r = kg_effective_potential(p.radius, &qn, &p, 1.0).unwrap();
    let far = kg_effective_potential(100.0 * p.radius, &qn, &p, 1.0).unwrap();
    let ratio = (far / at_r).abs();
    outcome(
        ratio <= DECAY_RATIO,
        format!("|V_eff(100R)| / |V_eff(R)| = {:.3e} / {:.3e} = {ratio:.3e} (needs <= {DECAY_RATIO:e})", far.abs(), at_r.abs()),
    )
}

fn kg_residual() -> Outcome {
    let p = PhysicalParams::kg_figure();
    let qn = QuantumNumbers::new(1, 0, 1);
    let prof = kg_integrate_u(&p, &qn, 1.0, (1.0, 0.005), 1.0, 0.0, 3000).unwrap();
    let problem = RadialProblem::kg(&qn, &p, 1.0, 0.005, 1.0).unwrap();
    let rep = residual(&problem, 1.0, &prof.psi_samples()).unwrap();
    outcome(
        rep.max_scaled <= KG_RESIDUAL_TOL && !rep.coarse,
        format!("scaled residual {:.2e} over {} points (tol {KG_RESIDUAL_TOL:e})", rep.max_scaled, rep.points),
    )
}

fn yukawa_probe(report: &VerifyReport) -> Outcome {
    let rows = select(report, |r| r.identity == "yukawa-eta0");
    let worst = max_rel(&rows);
    let spec = ImageSumSpec::new(1.0, 0.0, 1.0, DEFAULT_TRUNCATION).unwrap().with_eta(1.0).unwrap();
    let brute = yukawa_sum_bruteforce(&spec).unwrap().corrected();
    let closed = yukawa_closed_paper(1.0, 0.0, 1.0).unwrap();
    let split = (brute - closed).abs() / closed.abs();
    outcome(
        rows.len() == 27 && worst <= YUKAWA_ETA0_TOL && split > YUKAWA_SPLIT,
        format!("eta = 0: max rel err {worst:.2e} (tol {YUKAWA_ETA0_TOL:e}); eta = 1, r = R, w = 0: rel diff {split:.3} (needs > {YUKAWA_SPLIT})"),
    )
}

/// Each V_eff value the binary writes against a direct evaluation of
/// `−λ₄/r² + 3θ℘E²/(2r²Rħ²c) + ℘E/(rRħc) + ℘²coth(r/R)/(2Rr)²
///  + θ℘²E/((2Rr)²ħ)(2coth(r/R)/r + r/sinh²(r/R))`.
fn figure() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_ncspectra")).arg("kg-profile").output().expect("run ncspectra");
    if !out.status.success() {
        return outcome(false, format!("kg-profile exited with {}", out.status));
    }
    let text = String::from_utf8(out.stdout).unwrap();
    let header = |key: &str| -> f64 {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("# {key} = ")))
            .and_then(|v| v.parse().ok())
            .unwrap_or(f64::NAN)
    };
    let (rad, theta, hbar, c, wp, e, ell) =
        (header("R"), header("theta"), header("hbar"), header("c"), header("wp"), header("energy"), header("ell"));
    let defaults = rad == 0.01 && theta == 0.01 && hbar == 1.0 && c == 1.0 && wp == 1.0 / 137.0 && e == 1.0 && ell == 1.0;
    let lam = ell * (ell + 2.0);
    let mut worst = 0.0f64;
    let mut rows = 0;
    let mut r_range = (f64::INFINITY, 0.0f64);
    for line in text.lines().filter(|l| !l.starts_with('#')).skip(1) {
        let (r, v) = line.split_once(',').unwrap();
        let (r, v): (f64, f64) = (r.parse().unwrap(), v.parse().unwrap());
        let x = r / rad;
        let coth = x.cosh() / x.sinh();
        let s = x.sinh();
        let two_rr = 2.0 * rad * r;
        let direct = -lam / (r * r)
            + 3.0 * theta * wp * e * e / (2.0 * r * r * rad * hbar * hbar * c)
            + wp * e / (r * rad * hbar * c)
            + wp * wp * coth / (two_rr * two_rr)
            + theta * wp * wp * e / (two_rr * two_rr * hbar) * (2.0 * coth / r + r / (s * s));
        worst = worst.max((v - direct).abs() / direct.abs());
        rows += 1;
        r_range = (r_range.0.min(r), r_range.1.max(r));
    }
    outcome(
        defaults && rows == 500 && r_range == (0.005, 1.0) && worst <= FIGURE_TOL,
        format!(
            "{rows} rows on [{}, {}], default parameters {}; max rel diff {worst:.2e} (tol {FIGURE_TOL:e})",
            r_range.0,
            r_range.1,
            if defaults { "confirmed" } else { "MISSING" }
        ),
    )
}

fn main() -> ExitCode {
    let fourier_report = verify::run(Suite::Fourier, false, &unit()).expect("fourier suite");
    let spectrum_report = verify::run(Suite::Spectrum, false, &unit()).expect("spectrum suite");
    let lattice_report = verify::run(Suite::Lattice, false, &unit()).expect("lattice suite");
    let criteria: Vec<Criterion> = vec![
        ("1", "lattice identities", Box::new(lattice)),
        ("2a", "Fourier coefficients vs quadrature", Box::new(|| fourier(&fourier_report))),
        ("2b", "printed Coulomb b_n vs quadrature", Box::new(|| fourier_printed(&fourier_report))),
        ("3", "shooting vs closed-form spectrum", Box::new(spectrum)),
        ("4a", "principal level independent of theta", Box::new(theta_bitwise)),
        ("4b", "rejected branch ~ 1/theta", Box::new(rejected_exponent)),
        ("5", "wavefunction norm and nodes", Box::new(|| wavefunctions(&spectrum_report))),
        ("6", "Green's-function correction residual", Box::new(chi_residual)),
        ("7", "special functions", Box::new(special_functions)),
        ("8a", "KG b4 under kg-profile defaults", Box::new(kg_b4)),
        ("8b", "KG V_eff decay at 100R", Box::new(kg_decay)),
        ("8c", "KG reconstructed Psi residual", Box::new(kg_residual)),
        ("9", "Yukawa identity probe", Box::new(|| yukawa_probe(&lattice_report))),
        ("10", "kg-profile curve vs direct evaluation", Box::new(figure)),
    ];
    let mut unexpected = Vec::new();
    for (id, name, check) in &criteria {
        let o = check();
        let known = KNOWN_FAILURES.contains(id);
        let tag = match (o.pass, known) {
            (true, false) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
            (true, true) => "PASS (known failure now passes)",
        };
        println!("{tag} {id} {name}: {}", o.detail);
        if o.pass == known {
            unexpected.push(*id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as expected ({} known failures: {})", KNOWN_FAILURES.len(), KNOWN_FAILURES.join(", "));
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results in {}", unexpected.join(", "));
        ExitCode::FAILURE
    }
}
