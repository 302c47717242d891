use ncspectra::radial::{shoot_eigenvalue, RadialProblem};
use ncspectra::spectrum::{energy_level, energy_level_with, Coupling};
use ncspectra::{PhysicalParams, QuantumNumbers};

fn unit() -> PhysicalParams {
    PhysicalParams { hbar: 1.0, mass: 1.0, radius: 1.0, qe2: 1.0, theta: 0.0, ..PhysicalParams::default() }
}

#[test]
fn shooting_reproduces_closed_form_spectrum() {
    let p = unit();
    for n in 0..=1 {
        for l in 0..=2 {
            for ell in 0..=1 {
                let qn = QuantumNumbers::new(n, l, ell);
                let exact = energy_level(&qn, &p).unwrap().energy;
                let prob = RadialProblem::compact(Coupling::Coulomb, &qn, &p).unwrap();
                let br = RadialProblem::compact_bracket(Coupling::Coulomb, &qn, &p);
                let res = shoot_eigenvalue(&prob, l, br).unwrap();
                assert!(res.converged, "{qn:?}\n{}", res.log());
                let rel = ((res.energy - exact) / exact).abs();
                assert!(rel <= 1e-6, "{qn:?}: {} vs {exact} ({rel:e})", res.energy);
            }
        }
    }
}

#[test]
fn yukawa_reduction_shoots_like_coulomb() {
    let p = PhysicalParams { v0: 0.7, ..unit() };
    let qn = QuantumNumbers::new(0, 1, 1);
    let exact = energy_level_with(Coupling::Yukawa, &qn, &p).unwrap().energy;
    let prob = RadialProblem::compact(Coupling::Yukawa, &qn, &p).unwrap();
    let br = RadialProblem::compact_bracket(Coupling::Yukawa, &qn, &p);
    let res = shoot_eigenvalue(&prob, 1, br).unwrap();
    assert!(((res.energy - exact) / exact).abs() <= 1e-6);
}

#[test]
fn small_theta_keeps_shot_ground_state_near_principal_level() {
    let qn = QuantumNumbers::new(0, 0, 1);
    let base = unit();
    let shifted = PhysicalParams { theta: 1e-3, ..base };
    let e0 = energy_level(&qn, &base).unwrap().energy;
    assert_eq!(e0.to_bits(), energy_level(&qn, &shifted).unwrap().energy.to_bits());
    let prob = RadialProblem::compact(Coupling::Coulomb, &qn, &shifted).unwrap();
    let br = RadialProblem::compact_bracket(Coupling::Coulomb, &qn, &shifted);
    let res = shoot_eigenvalue(&prob, 0, br).unwrap();
    assert!(res.converged);
    assert!(((res.energy - e0) / e0).abs() < 1e-2);
}
