//! Averaged reconstruction error r(l) of evolved states from the first `l`
//! orthonormalized samples. The curve reaches zero at l = m.
//!
//! `cargo run --release --example reconstruction -- H_I3`

use krylov_sampling::analysis::{reconstruction_error_experiment, ReconstructionConfig};
use krylov_sampling::evolution::Propagator;
use krylov_sampling::hamiltonian::{build_hamiltonian, builtin};

fn main() -> krylov_sampling::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "H_I1".into());
    let prop = Propagator::new(&build_hamiltonian(&builtin(&name)?)?)?;
    let report = reconstruction_error_experiment(&name, &prop, &ReconstructionConfig::default())?;

    println!(
        "{name}: m = {}, d = {}, {} states x {} times",
        report.m, report.d, report.n_states, report.n_times
    );
    for p in &report.r_curve {
        let bar = "#".repeat((p.r_mean * 50.0).round() as usize);
        println!("l = {:>2}  r = {:.3e} ± {:.1e}  {bar}", p.l, p.r_mean, p.r_std);
    }
    Ok(())
}
