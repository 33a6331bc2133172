//! Loads a Hamiltonian from a text file of `<coefficient> <pauli-string>`
//! lines and compares its power, sampled and eigen-cluster bases.
//!
//! `cargo run --release --example custom_hamiltonian -- crates/core/examples/data/ising_ring.txt`

use std::path::PathBuf;

use krylov_sampling::analysis::count_distinct_eigenvalues;
use krylov_sampling::evolution::{random_state, Propagator};
use krylov_sampling::hamiltonian::{build_hamiltonian, HamiltonianSpec};
use krylov_sampling::krylov::{eigen_cluster_basis, power_basis, sampled_basis, TimeGrid, DEFAULT_DT};
use krylov_sampling::numerics::principal_angles;
use krylov_sampling::{DEFAULT_EIG_TOL, DEFAULT_RANK_TOL};

fn main() -> krylov_sampling::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/ising_ring.txt")));
    let spec = HamiltonianSpec::from_file(&path)?;
    let h = build_hamiltonian(&spec)?;
    let prop = Propagator::new(&h)?;
    let psi0 = random_state(spec.dim(), 1)?;

    let power = power_basis(&h, &psi0, DEFAULT_RANK_TOL)?;
    let grid = TimeGrid::default_for(spec.dim(), DEFAULT_DT);
    let sampled = sampled_basis(&prop, &psi0, grid.times(), DEFAULT_RANK_TOL)?;
    let clusters = eigen_cluster_basis(prop.spectral(), &psi0, DEFAULT_EIG_TOL, DEFAULT_RANK_TOL)?;
    let d = count_distinct_eigenvalues(prop.spectral(), DEFAULT_EIG_TOL);

    println!("{} terms on {} qubits, d = {d}", spec.terms().len(), spec.n_qubits());
    println!(
        "grades: power {}, sampled {}, clusters {}",
        power.grade(),
        sampled.grade(),
        clusters.grade()
    );
    let max = |a, b| -> krylov_sampling::Result<f64> { Ok(principal_angles(a, b)?.into_iter().fold(0.0, f64::max)) };
    println!(
        "max angle power/sampled   {:.2e}",
        max(power.vectors(), sampled.vectors())?
    );
    println!(
        "max angle sampled/cluster {:.2e}",
        max(sampled.vectors(), clusters.vectors())?
    );
    Ok(())
}
