mod common;

use std::f64::consts::PI;

use krylov_sampling::analysis::{
    count_distinct_eigenvalues, effective_dimension, effective_dimension_sweep, phase_invariance_check, reconstruct,
    reconstruction_error_experiment, EffectiveDimensionOptions, ReconstructionConfig, ThetaGrid,
};
use krylov_sampling::evolution::{apply_global_phase, random_state, Propagator};
use krylov_sampling::hamiltonian::{build_hamiltonian, Builtin};
use krylov_sampling::krylov::{sampled_basis, TimeGrid, DEFAULT_DT};
use krylov_sampling::numerics::eigendecompose_hermitian;
use krylov_sampling::{DEFAULT_EIG_TOL, DEFAULT_LAMBDA, DEFAULT_RANK_TOL};
use proptest::prelude::*;

fn propagator(b: Builtin) -> Propagator {
    Propagator::new(&build_hamiltonian(&b.spec()).unwrap()).unwrap()
}

#[test]
fn reconstruction_vanishes_at_the_grade() {
    for (b, m) in [(Builtin::H1, 2), (Builtin::HI3, 15)] {
        let report =
            reconstruction_error_experiment(b.name(), &propagator(b), &ReconstructionConfig::default()).unwrap();
        assert_eq!(report.m, m);
        assert_eq!(report.r_curve.len(), m + 1);
        assert!((report.r_mean(0).unwrap() - 1.0).abs() <= 1e-12);
        assert!(report.r_mean(m).unwrap() <= 1e-8);
        assert!(report.r_curve.iter().all(|p| p.r_mean >= 0.0));
    }
}

#[test]
fn full_basis_reconstructs_any_evolved_state() {
    let prop = propagator(Builtin::HI1);
    let psi0 = random_state(16, 6).unwrap();
    let g = sampled_basis(
        &prop,
        &psi0,
        TimeGrid::default_for(16, DEFAULT_DT).times(),
        DEFAULT_RANK_TOL,
    )
    .unwrap();
    for tau in [0.13, 2.7, 9.9, 123.4] {
        let target = prop.evolve(&psi0, tau).unwrap();
        let u = reconstruct(&g, &target, g.grade()).unwrap();
        assert!(u.distance(&target) <= 1e-8);
    }
}

#[test]
fn h1_sweep_dips_at_four_pi() {
    let prop = propagator(Builtin::H1);
    let psi0 = random_state(16, 12).unwrap();
    let grid: Vec<f64> = (1..=60).map(|k| k as f64 * 0.1 * PI).collect();
    let curve = effective_dimension_sweep(&prop, &psi0, &grid, &EffectiveDimensionOptions::default()).unwrap();
    let at = |t: f64| {
        let i = curve.t_values.iter().position(|&x| (x - t).abs() < 1e-9).unwrap();
        curve.m_eff_values[i]
    };
    assert!((at(4.0 * PI) - 1.0).abs() <= 1e-9);
    assert!((at(2.3 * PI) - 2.0).abs() <= 1e-9);
}

#[test]
fn h2_drops_at_six_pi() {
    let prop = propagator(Builtin::H2);
    let psi0 = random_state(16, 12).unwrap();
    let v = |t| effective_dimension(&prop, &psi0, t, 3, DEFAULT_LAMBDA, ThetaGrid::Endpoint).unwrap();
    assert!(v(6.0 * PI) < v(5.0 * PI));
}

#[test]
fn shifted_grid_is_available() {
    let prop = propagator(Builtin::H1);
    let psi0 = random_state(16, 12).unwrap();
    let v = effective_dimension(&prop, &psi0, 2.0 * PI, 2, DEFAULT_LAMBDA, ThetaGrid::Shifted).unwrap();
    assert!((1.0..=2.0).contains(&v));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn distinct_count_survives_shifts(i in 0usize..7, shift in -50.0f64..50.0) {
        let b = Builtin::ALL[i];
        let h = build_hamiltonian(&b.spec()).unwrap();
        let base = count_distinct_eigenvalues(&eigendecompose_hermitian(&h).unwrap(), DEFAULT_EIG_TOL);
        let moved = count_distinct_eigenvalues(&eigendecompose_hermitian(&h.shifted(shift)).unwrap(), DEFAULT_EIG_TOL);
        prop_assert_eq!(base, moved);
    }

    #[test]
    fn effective_dimension_ignores_global_phase(i in 0usize..7, seed in 0u64..1000, alpha in 0.0f64..6.3, t in 0.1f64..30.0) {
        let b = Builtin::ALL[i];
        let prop = propagator(b);
        let psi0 = random_state(16, seed).unwrap();
        let m = b.expected_grade();
        let a = effective_dimension(&prop, &psi0, t, m, DEFAULT_LAMBDA, ThetaGrid::Endpoint).unwrap();
        let c = effective_dimension(&prop, &apply_global_phase(&psi0, alpha), t, m, DEFAULT_LAMBDA, ThetaGrid::Endpoint).unwrap();
        prop_assert!((a - c).abs() <= 1e-10);
        prop_assert!(a >= 1.0 && a <= m as f64 + 1e-12);
    }

    #[test]
    fn reconstruction_error_never_grows(i in 0usize..7, seed in 0u64..1000) {
        let cfg = ReconstructionConfig { n_states: 3, n_times: 8, seed, ..ReconstructionConfig::default() };
        let b = Builtin::ALL[i];
        let report = reconstruction_error_experiment(b.name(), &propagator(b), &cfg).unwrap();
        prop_assert!(report.r_curve.windows(2).all(|w| w[1].r_mean <= w[0].r_mean + 1e-12));
        prop_assert_eq!(report.m, report.d);
    }

    #[test]
    fn random_phases_keep_the_span(i in 0usize..7, seed in 0u64..1000) {
        let prop = propagator(Builtin::ALL[i]);
        let psi0 = random_state(16, seed).unwrap();
        let grid = TimeGrid::default_for(16, DEFAULT_DT);
        prop_assert!(phase_invariance_check(&prop, &psi0, grid.times(), seed, DEFAULT_RANK_TOL).unwrap() <= 1e-10);
    }
}
