//! Lanczos coefficients and spread complexity C_S(t).
//!
//! For H_1 and |0000> the Krylov chain has two sites and C_S(t) = sin²(t/2).
//! For a Haar state under H_I1 the chain has nine.
//!
//! `cargo run --release --example spread_complexity`

use std::f64::consts::PI;

use krylov_sampling::evolution::{random_state, Propagator};
use krylov_sampling::hamiltonian::{build_hamiltonian, Builtin};
use krylov_sampling::krylov::{lanczos, spread_complexity};
use krylov_sampling::{StateVector, DEFAULT_RANK_TOL};

fn main() -> krylov_sampling::Result<()> {
    let h = build_hamiltonian(&Builtin::H1.spec())?;
    let prop = Propagator::new(&h)?;
    let psi0 = StateVector::basis(16, 0);
    let ld = lanczos(&h, &psi0, DEFAULT_RANK_TOL)?;
    println!("H_1, |0000>: a = {:?}, b = {:?}", ld.a, ld.b);
    for k in 0..=8 {
        let t = k as f64 * PI / 4.0;
        let c = spread_complexity(&ld, &prop, &psi0, t)?;
        println!(
            "  t = {:5.3}  C_S = {c:.12}  sin²(t/2) = {:.12}",
            t,
            (t / 2.0).sin().powi(2)
        );
    }

    let h = build_hamiltonian(&Builtin::HI1.spec())?;
    let prop = Propagator::new(&h)?;
    let psi0 = random_state(16, 3)?;
    let ld = lanczos(&h, &psi0, DEFAULT_RANK_TOL)?;
    println!(
        "\nH_I1, Haar state: {} Lanczos vectors, residual {:.1e}",
        ld.len(),
        ld.tridiagonal_residual(&h)?
    );
    for k in 0..=10 {
        let t = k as f64 * 1.2;
        println!("  t = {t:5.2}  C_S = {:.6}", spread_complexity(&ld, &prop, &psi0, t)?);
    }
    Ok(())
}
