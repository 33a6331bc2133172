//! Truncated Taylor vectors at distinct times span the same space as the
//! first `n` powers, because the Vandermonde-type matrix Θ is invertible.
//!
//! `cargo run --release --example vandermonde_partial_sums`

use krylov_sampling::evolution::random_state;
use krylov_sampling::hamiltonian::{build_hamiltonian, Builtin};
use krylov_sampling::krylov::{partial_sum_basis, raw_powers, vandermonde_matrix};
use krylov_sampling::numerics::{principal_angles, singular_values};
use krylov_sampling::DEFAULT_RANK_TOL;

fn main() -> krylov_sampling::Result<()> {
    let h = build_hamiltonian(&Builtin::HI1.spec())?;
    let psi0 = random_state(16, 11)?;
    let times = [0.0, 0.35, 0.8, 1.3, 1.9];

    for n in 2..=times.len() {
        let t = &times[..n];
        let theta = vandermonde_matrix(t)?;
        let sv = singular_values(&theta);
        let h_basis = partial_sum_basis(&h, &psi0, t, DEFAULT_RANK_TOL)?;
        let powers = raw_powers(&h, &psi0, n)?;
        let max_angle = principal_angles(h_basis.vectors(), &powers)?
            .into_iter()
            .fold(0.0, f64::max);
        println!(
            "n = {n}: cond(Θ) = {:9.2e}, rank = {}, max principal angle = {max_angle:.2e}",
            sv[0] / sv[n - 1],
            h_basis.grade()
        );
    }
    Ok(())
}
