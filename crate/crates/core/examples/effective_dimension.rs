//! Effective Krylov dimension m_eff(T) for every builtin Hamiltonian.
//!
//! Prints the curve's landmarks: the dip of H_1 at T = 4π, H_2 around
//! 5π and 6π, and the maximum over (0, 8π] against the saturation level d.
//!
//! Run with `cargo run --release --example effective_dimension`.

use std::f64::consts::PI;

use krylov_sampling::analysis::{effective_dimension, effective_dimension_sweep, EffectiveDimensionOptions};
use krylov_sampling::cli::effdim_grid;
use krylov_sampling::evolution::{random_state, Propagator};
use krylov_sampling::hamiltonian::{build_hamiltonian, Builtin};

fn main() -> krylov_sampling::Result<()> {
    let opts = EffectiveDimensionOptions::default();
    let grid = effdim_grid(200, 8.0 * PI);

    println!(
        "{:<6} {:>3} {:>3} {:>10} {:>10}",
        "H", "m", "d", "min m_eff", "max m_eff"
    );
    for b in Builtin::ALL {
        let prop = Propagator::new(&build_hamiltonian(&b.spec())?)?;
        let psi0 = random_state(prop.dim(), 42)?;
        let curve = effective_dimension_sweep(&prop, &psi0, &grid, &opts)?;
        let min = curve.m_eff_values.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = curve.m_eff_values.iter().cloned().fold(0.0, f64::max);
        println!(
            "{:<6} {:>3} {:>3} {:>10.4} {:>10.4}",
            b.name(),
            curve.m,
            curve.d,
            min,
            max
        );
    }

    let h1 = Propagator::new(&build_hamiltonian(&Builtin::H1.spec())?)?;
    let psi = random_state(16, 7)?;
    let dip = effective_dimension(&h1, &psi, 4.0 * PI, 2, opts.lambda, opts.theta_grid)?;
    println!("\nH_1: m_eff(4π) = {dip:.6}");

    let h2 = Propagator::new(&build_hamiltonian(&Builtin::H2.spec())?)?;
    for k in [5.0, 6.0] {
        let v = effective_dimension(&h2, &psi, k * PI, 3, opts.lambda, opts.theta_grid)?;
        println!("H_2: m_eff({k}π) = {v:.6}");
    }
    Ok(())
}
