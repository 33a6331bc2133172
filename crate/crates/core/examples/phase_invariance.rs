//! Multiplying each sampled state by its own phase leaves the sampled span
//! unchanged, so the basis can be built from measured states.
//!
//! `cargo run --release --example phase_invariance`

use krylov_sampling::analysis::phase_invariance_check;
use krylov_sampling::evolution::{random_state, Propagator};
use krylov_sampling::hamiltonian::{build_hamiltonian, Builtin};
use krylov_sampling::krylov::{TimeGrid, DEFAULT_DT};
use krylov_sampling::DEFAULT_RANK_TOL;

fn main() -> krylov_sampling::Result<()> {
    for b in Builtin::ALL {
        let prop = Propagator::new(&build_hamiltonian(&b.spec())?)?;
        let psi0 = random_state(prop.dim(), 5)?;
        let grid = TimeGrid::default_for(prop.dim(), DEFAULT_DT);
        let worst = (0..100)
            .map(|seed| phase_invariance_check(&prop, &psi0, grid.times(), seed, DEFAULT_RANK_TOL))
            .collect::<krylov_sampling::Result<Vec<_>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        println!("{:<5} max angle over 100 phase draws: {worst:.2e}", b.name());
    }
    Ok(())
}
