#![allow(dead_code)]

use krylov_sampling::evolution::seeded_rng;
use krylov_sampling::{ComplexMatrix, StateVector, C64};
use rand::Rng;

/// Plain row-by-column product, independent of the library's kernels.
pub fn matvec(m: &ComplexMatrix, v: &StateVector) -> StateVector {
    let out = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)] * v[j]).sum())
        .collect();
    StateVector::new(out)
}

/// Spectrum of `Σ_k c_k X_k` on disjoint qubits: every sign pattern of the
/// single-site eigenvalues ±c_k, padded by the remaining free qubits.
pub fn commuting_x_spectrum(coeffs: &[f64], n_qubits: usize) -> Vec<f64> {
    let free = 1usize << (n_qubits - coeffs.len());
    let mut out = Vec::new();
    for signs in 0..1usize << coeffs.len() {
        let e: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if signs >> k & 1 == 1 { -c } else { *c })
            .sum();
        out.extend(std::iter::repeat_n(e, free));
    }
    out.sort_by(f64::total_cmp);
    out
}

/// `(f^0 … f^{n-1})` with `f^{j+1} = -i H f^j`, via [`matvec`].
pub fn powers(h: &ComplexMatrix, psi0: &StateVector, n: usize) -> Vec<StateVector> {
    let mut out = vec![psi0.clone()];
    while out.len() < n {
        let next = matvec(h, out.last().unwrap()).scaled(C64::new(0.0, -1.0));
        out.push(next);
    }
    out
}

/// `h_i = Σ_j f^j t_i^j / j!` computed term by term.
pub fn taylor_partial_sums(f: &[StateVector], times: &[f64]) -> Vec<StateVector> {
    times
        .iter()
        .map(|&t| {
            let mut acc = StateVector::zeros(f[0].dim());
            let mut w = 1.0;
            for (j, fj) in f.iter().enumerate() {
                if j > 0 {
                    w *= t / j as f64;
                }
                acc.axpy(C64::new(w, 0.0), fj);
            }
            acc
        })
        .collect()
}

/// `t_0 = 0` followed by `n - 1` sorted uniform draws in `(0, 2]`, redrawn
/// until all consecutive gaps are at least 0.1.
pub fn random_time_set(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = seeded_rng(seed, 1000);
    loop {
        let mut t: Vec<f64> = (1..n).map(|_| 2.0 - rng.random_range(0.0..2.0)).collect();
        t.push(0.0);
        t.sort_by(f64::total_cmp);
        if t.windows(2).all(|w| w[1] - w[0] >= 0.1) {
            return t;
        }
    }
}

pub fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, f64::max)
}
