use std::fs;

use ncspectra::lattice::PotentialKind;
use ncspectra::potentials::{compactified_term, kg_coefficients, kg_effective_potential, nc_coulomb_term, nc_yukawa_term};
use ncspectra::radial::{
    integrate_d6, kg_integrate_u, log_grid, residual, shoot_eigenvalue, EigenResult, InitialData, RadialProblem,
};
use ncspectra::spectrum::{energy_level_with, spectrum_row, Coupling, Wavefunction};
use ncspectra::verify::{self, CheckRow, Suite};
use ncspectra::{PhysicalParams, QuantumNumbers};

use crate::args::{Cli, Command, CouplingArg, EquationArg, GlobalOpts, PotentialArg, Sampling, SuiteArg};
use crate::error::{CliError, CliResult};
use crate::output::{emit, Header, Table};

/// Base parameters, then the config file, then flag overrides.
pub fn resolve_params(base: PhysicalParams, global: &GlobalOpts) -> CliResult<PhysicalParams> {
    let mut p = base;
    if let Some(path) = &global.config {
        p.apply_config_file(path).map_err(CliError::core("config"))?;
    }
    for (k, v) in global.params.entries() {
        p.set(k, v).map_err(CliError::core("parameters"))?;
    }
    p.validate().map_err(CliError::core("parameters"))?;
    Ok(p)
}

fn header(command: &str, params: &PhysicalParams) -> Header {
    let mut h = Header::new(command);
    for (k, v) in params.entries() {
        h.push_float(k, v);
    }
    h
}

fn coupling(c: CouplingArg) -> Coupling {
    match c {
        CouplingArg::Coulomb => Coupling::Coulomb,
        CouplingArg::Yukawa => Coupling::Yukawa,
    }
}

fn non_negative(name: &str, v: i64) -> CliResult<u32> {
    u32::try_from(v).map_err(|_| CliError::Usage(format!("{name} must be a non-negative integer, got {v}")))
}

/// Sample points from `--r-min/--r-max/--points/--linear` with defaults.
fn sample_points(s: &Sampling, r_min: f64, r_max: f64, points: usize, h: &mut Header) -> CliResult<Vec<f64>> {
    let a = s.r_min.unwrap_or(r_min);
    let b = s.r_max.unwrap_or(r_max);
    let n = s.points.unwrap_or(points);
    if !(a > 0.0 && b > a && a.is_finite() && b.is_finite()) {
        return Err(CliError::Usage(format!("need 0 < r-min < r-max, got {a}..{b}")));
    }
    if n < 2 {
        return Err(CliError::Usage(format!("need at least 2 points, got {n}")));
    }
    h.push_float("r_min", a);
    h.push_float("r_max", b);
    h.push("points", n);
    h.push("spacing", if s.linear { "linear" } else { "log" });
    Ok(if s.linear {
        (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
    } else {
        log_grid(a, b, n)
    })
}

pub fn run(cli: &Cli) -> CliResult<()> {
    let g = &cli.global;
    let out = g.out.as_deref();
    match &cli.command {
        Command::Spectrum { n, l, ell, coupling: c } => {
            let p = resolve_params(PhysicalParams::default(), g)?;
            let mut h = header("spectrum", &p);
            h.push("n", format!("{}..{}", n.start, n.end));
            h.push("l", format!("{}..{}", l.start, l.end));
            h.push("ell", format!("{}..{}", ell.start, ell.end));
            h.push("coupling", format!("{c:?}").to_lowercase());
            let mut t = Table::new(&["n", "l", "ell", "E_principal", "E_rejected_or_NaN", "a", "zeta"]);
            for nn in n.iter() {
                for ll in l.iter() {
                    for ee in ell.iter() {
                        let qn = QuantumNumbers::new(nn, non_negative("l", ll)?, non_negative("ell", ee)?);
                        let (e, rej, a, zeta) = spectrum_row(coupling(*c), &qn, &p).map_err(CliError::core("spectrum"))?;
                        t.push(vec![nn.into(), qn.l.into(), qn.ell.into(), e.into(), rej.into(), a.into(), zeta.into()]);
                    }
                }
            }
            emit(out, g.format, &h, &t)?;
        }
        Command::Potential { kind, w, energy, sampling } => {
            let p = resolve_params(PhysicalParams::default(), g)?;
            let mut h = header("potential", &p);
            h.push("kind", format!("{kind:?}"));
            h.push_float("w", *w);
            h.push_float("energy", *energy);
            let rs = sample_points(sampling, 0.1, 10.0, 200, &mut h)?;
            let mut t = Table::new(&["r", "V_static", "V_theta_part", "V_total"]);
            for r in rs {
                let term = match kind {
                    PotentialArg::Coulomb4d => compactified_term(PotentialKind::Coulomb4d, r, *w, &p),
                    PotentialArg::Yukawa4d => compactified_term(PotentialKind::Yukawa4d, r, *w, &p),
                    PotentialArg::Coulomb6d => compactified_term(PotentialKind::Coulomb6d, r, *w, &p),
                    PotentialArg::NcCoulomb => nc_coulomb_term(r, p.dim, &p),
                    PotentialArg::NcYukawa => nc_yukawa_term(r, p.dim, &p),
                }
                .map_err(CliError::core("potential"))?;
                t.push(vec![
                    r.into(),
                    term.static_part.into(),
                    term.time_derivative_part.into(),
                    term.contract_with(&p, *energy).into(),
                ]);
            }
            emit(out, g.format, &h, &t)?;
        }
        Command::Wavefunction { n, l, ell, coupling: c, sampling } => {
            let p = resolve_params(PhysicalParams::default(), g)?;
            let qn = QuantumNumbers::new(*n, *l, *ell);
            let wf = Wavefunction::new(coupling(*c), &qn, &p).map_err(CliError::core("wavefunction"))?;
            let mut h = header("wavefunction", &p);
            h.push("n", n);
            h.push("l", l);
            h.push("ell", ell);
            h.push_float("energy", wf.level.energy);
            h.push_float("kappa", wf.kappa);
            let rs = sample_points(sampling, 1e-3 / wf.kappa, 30.0 / wf.kappa, 400, &mut h)?;
            let mut t = Table::new(&["r", "psi", "dpsi"]);
            for r in rs {
                let v = wf.value(r).map_err(CliError::core("wavefunction"))?;
                let d = wf.derivative(r).map_err(CliError::core("wavefunction"))?;
                t.push(vec![r.into(), v.into(), d.into()]);
            }
            emit(out, g.format, &h, &t)?;
        }
        Command::Verify { suite, quick } => {
            let p = resolve_params(PhysicalParams::default(), g)?;
            let s = match suite {
                SuiteArg::Lattice => Suite::Lattice,
                SuiteArg::Fourier => Suite::Fourier,
                SuiteArg::Spectrum => Suite::Spectrum,
                SuiteArg::All => Suite::All,
            };
            let mut h = header("verify", &p);
            h.push("suite", s);
            h.push("mode", if *quick { "quick" } else { "full" });
            let report = verify::run(s, *quick, &p).map_err(CliError::core("verify"))?;
            for st in [verify::Status::Pass, verify::Status::Fail, verify::Status::Info, verify::Status::ExpectedDeviation] {
                h.push(&format!("count_{st}"), report.count(st));
            }
            let mut t = Table::new(&CheckRow::COLUMNS);
            for r in &report.rows {
                t.push(vec![
                    r.identity.clone().into(),
                    r.r.into(),
                    r.w.into(),
                    r.radius.into(),
                    r.eta.into(),
                    r.closed.into(),
                    r.brute.into(),
                    r.abs_err.into(),
                    r.rel_err.into(),
                    r.n.into(),
                    r.status.to_string().into(),
                ]);
            }
            emit(out, g.format, &h, &t)?;
            let failed: Vec<String> = report.failures().map(|r| r.identity.clone()).collect();
            if !failed.is_empty() {
                return Err(CliError::ChecksFailed(failed));
            }
        }
        Command::KgProfile { energy, ell, n, sampling } => {
            let p = resolve_params(PhysicalParams::kg_figure(), g)?;
            let qn = QuantumNumbers::new(*n, 0, *ell);
            let mut h = header("kg-profile", &p);
            h.push_float("energy", *energy);
            h.push("ell", ell);
            h.push("n", n);
            let b = kg_coefficients(&qn, &p, *energy).map_err(CliError::core("kg-coefficients"))?;
            for (i, v) in b.as_array().iter().enumerate() {
                h.push_float(&format!("b{i}"), *v);
            }
            let rs = sample_points(sampling, 0.005, 1.0, 500, &mut h)?;
            let mut t = Table::new(&["r", "V_eff"]);
            for r in rs {
                let v = kg_effective_potential(r, &qn, &p, *energy).map_err(CliError::core("kg-profile"))?;
                t.push(vec![r.into(), v.into()]);
            }
            emit(out, g.format, &h, &t)?;
        }
        Command::Solve { equation, n, l, ell, coupling: c, energy, e_lo, e_hi, y0, dy0, r_start, log, sampling } => {
            let qn = QuantumNumbers::new(*n, *l, *ell);
            match equation {
                EquationArg::Compact | EquationArg::DDim => {
                    let p = resolve_params(PhysicalParams::default(), g)?;
                    let (prob, bracket) = if *equation == EquationArg::Compact {
                        let mut prob = RadialProblem::compact(coupling(*c), &qn, &p).map_err(CliError::core("solve"))?;
                        let (a, b) = (sampling.r_min.unwrap_or(prob.r_min), sampling.r_max.unwrap_or(prob.r_max));
                        prob = prob.with_domain(a, b);
                        let def = RadialProblem::compact_bracket(coupling(*c), &qn, &p);
                        (prob, (e_lo.unwrap_or(def.0), e_hi.unwrap_or(def.1)))
                    } else {
                        let (Some(lo), Some(hi)) = (e_lo, e_hi) else {
                            return Err(CliError::Usage("d-dim needs --e-lo and --e-hi".into()));
                        };
                        let prob = RadialProblem::d_dimensional(
                            *ell,
                            &p,
                            sampling.r_min.unwrap_or(1e-4),
                            sampling.r_max.unwrap_or(100.0),
                        )
                        .map_err(CliError::core("solve"))?;
                        (prob, (*lo, *hi))
                    };
                    let prob = match sampling.points {
                        Some(k) => prob.with_grid_size(k),
                        None => prob,
                    };
                    let res = shoot_eigenvalue(&prob, *l, bracket).map_err(CliError::core("shooting"))?;
                    if let Some(path) = log {
                        fs::write(path, res.log())?;
                    }
                    let closed = if *equation == EquationArg::Compact {
                        energy_level_with(coupling(*c), &qn, &p).map(|s| s.energy).unwrap_or(f64::NAN)
                    } else {
                        f64::NAN
                    };
                    let mut h = header("solve", &p);
                    h.push("equation", format!("{equation:?}"));
                    h.push_float("r_min", prob.r_min);
                    h.push_float("r_max", prob.r_max);
                    h.push("grid_size", prob.grid_size);
                    h.push_float("e_lo", bracket.0);
                    h.push_float("e_hi", bracket.1);
                    emit(out, g.format, &h, &eigen_table(&qn, &res, closed))?;
                    if !res.converged {
                        return Err(CliError::ChecksFailed(vec!["shooting-convergence".into()]));
                    }
                }
                EquationArg::D6 => {
                    let p = resolve_params(PhysicalParams::default(), g)?;
                    let mut prob = RadialProblem::d6(
                        *n,
                        *ell,
                        &p,
                        sampling.r_min.unwrap_or(0.1),
                        sampling.r_max.unwrap_or(10.0),
                    )
                    .map_err(CliError::core("solve"))?
                    .with_grid_size(sampling.points.unwrap_or(2000));
                    prob.rtol = 1e-12;
                    let sol = integrate_d6(&prob, *energy, InitialData { psi: *y0, dpsi: *dy0 })
                        .map_err(CliError::core("d6-integration"))?;
                    let mut h = header("solve", &p);
                    h.push("equation", "D6");
                    h.push_float("energy", *energy);
                    h.push_float("r_min", prob.r_min);
                    h.push_float("r_max", prob.r_max);
                    h.push_float("residual_max_abs", sol.residual.max_abs);
                    h.push_float("residual_max_scaled", sol.residual.max_scaled);
                    h.push("residual_coarse_grid", sol.residual.coarse);
                    h.push_float("sensitivity_probe_r", sol.sensitivity.probe_r);
                    h.push_float("sensitivity_psi", sol.sensitivity.psi);
                    h.push_float("sensitivity_psi_half_r_min", sol.sensitivity.psi_half_rmin);
                    h.push_float("sensitivity_delta", sol.sensitivity.delta);
                    let mut t = Table::new(&["r", "psi", "dpsi"]);
                    for (r, v, d) in sol.samples {
                        t.push(vec![r.into(), v.into(), d.into()]);
                    }
                    emit(out, g.format, &h, &t)?;
                }
                EquationArg::KgU => {
                    let p = resolve_params(PhysicalParams::kg_figure(), g)?;
                    let a = sampling.r_min.unwrap_or(0.005);
                    let b = sampling.r_max.unwrap_or(1.0);
                    let start = r_start.unwrap_or(b);
                    let end = if start == b {
                        a
                    } else if start == a {
                        b
                    } else {
                        return Err(CliError::Usage("--r-start must equal --r-min or --r-max".into()));
                    };
                    let points = sampling.points.unwrap_or(2000);
                    let prof = kg_integrate_u(&p, &qn, *energy, (start, end), *y0, *dy0, points)
                        .map_err(CliError::core("kg-u-integration"))?;
                    let kg = RadialProblem::kg(&qn, &p, *energy, a.min(b), a.max(b)).map_err(CliError::core("solve"))?;
                    let rep = residual(&kg, *energy, &prof.psi_samples()).map_err(CliError::core("kg-residual"))?;
                    let mut h = header("solve", &p);
                    h.push("equation", "KgU");
                    h.push_float("energy", *energy);
                    h.push_float("r_start", start);
                    h.push_float("r_end", end);
                    h.push_float("decay_rate", prof.decay_rate);
                    h.push_float("psi_residual_max_abs", rep.max_abs);
                    h.push_float("psi_residual_max_scaled", rep.max_scaled);
                    let mut t = Table::new(&["r", "U", "dU", "Psi"]);
                    for &(r, u, du) in &prof.samples {
                        t.push(vec![r.into(), u.into(), du.into(), (u * (-prof.decay_rate * r).exp() / r).into()]);
                    }
                    emit(out, g.format, &h, &t)?;
                }
            }
        }
    }
    Ok(())
}

fn eigen_table(qn: &QuantumNumbers, res: &EigenResult, closed: f64) -> Table {
    let mut t = Table::new(&[
        "n",
        "l",
        "ell",
        "E_shooting",
        "E_closed",
        "rel_err",
        "node_count",
        "residual_norm",
        "converged",
        "matching_radius",
    ]);
    t.push(vec![
        qn.n.into(),
        qn.l.into(),
        qn.ell.into(),
        res.energy.into(),
        closed.into(),
        ((res.energy - closed) / closed).abs().into(),
        res.node_count.into(),
        res.residual_norm.into(),
        res.converged.into(),
        res.matching_radius.into(),
    ]);
    t
}
