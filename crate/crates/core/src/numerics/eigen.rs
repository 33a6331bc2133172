use std::ops::Range;

use super::{ComplexMatrix, HermitianOperator, StateVector, C64};
use crate::error::Result;

const MAX_SWEEPS: usize = 64;

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a
/// Hermitian operator.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
}

impl SpectralDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    pub fn eigenvector(&self, j: usize) -> StateVector {
        self.eigenvectors.column(j)
    }

    /// `max ε − min ε`
    pub fn spectral_range(&self) -> f64 {
        match (self.eigenvalues.first(), self.eigenvalues.last()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0.0,
        }
    }

    /// `V · diag(ε) · V†`
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.dim();
        let v = &self.eigenvectors;
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n).map(|k| v[(i, k)] * self.eigenvalues[k] * v[(j, k)].conj()).sum()
        })
    }

    /// Coefficients `⟨φ_j|ψ⟩` of `ψ` in the eigenbasis.
    pub fn coefficients(&self, psi: &StateVector) -> Result<Vec<C64>> {
        psi.check_dim(self.dim())?;
        let v = &self.eigenvectors;
        let n = self.dim();
        Ok((0..n)
            .map(|j| (0..n).map(|i| v[(i, j)].conj() * psi[i]).sum())
            .collect())
    }

    /// `Σ_j coeffs[j] |φ_j⟩`
    pub fn synthesize(&self, coeffs: &[C64]) -> StateVector {
        let n = self.dim();
        let v = &self.eigenvectors;
        StateVector::new((0..n).map(|i| (0..n).map(|j| v[(i, j)] * coeffs[j]).sum()).collect())
    }

    /// Index ranges of eigenvalue clusters. Walking the sorted spectrum, a new
    /// cluster opens whenever the gap to the previous eigenvalue exceeds
    /// `eig_tol · max(1, spectral range)`.
    pub fn clusters(&self, eig_tol: f64) -> Vec<Range<usize>> {
        let tol = eig_tol * self.spectral_range().max(1.0);
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..self.eigenvalues.len() {
            if self.eigenvalues[i] - self.eigenvalues[i - 1] > tol {
                out.push(start..i);
                start = i;
            }
        }
        if !self.eigenvalues.is_empty() {
            out.push(start..self.eigenvalues.len());
        }
        out
    }
}

/// Eigendecomposition of a Hermitian operator by cyclic complex Jacobi
/// rotations.
///
/// Each rotation first removes the phase of the pivot `H[p][q]` and then
/// applies a real Givens rotation, so the working matrix stays Hermitian with a
/// real diagonal throughout. Sweeps run until the off-diagonal Frobenius mass
/// drops to round-off level.
pub fn eigendecompose_hermitian(h: &HermitianOperator) -> Result<SpectralDecomposition> {
    let n = h.dim();
    let mut a = h.matrix().clone();
    for i in 0..n {
        a[(i, i)] = C64::new(a[(i, i)].re, 0.0);
    }
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm_sqr())
            .sum();
        if off.sqrt() <= f64::EPSILON * 1e-2 * scale || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * g);
    let t = if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + tau.hypot(1.0))
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    let phase = (apq / g).conj();

    // G = diag(1, e^{-iφ}) · [[c, s], [-s, c]]
    let g00 = C64::new(c, 0.0);
    let g01 = C64::new(s, 0.0);
    let g10 = phase * -s;
    let g11 = phase * c;

    let n = a.rows();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * g00 + akq * g10;
        a[(k, q)] = akp * g01 + akq * g11;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = g00.conj() * apk + g10.conj() * aqk;
        a[(q, k)] = g01.conj() * apk + g11.conj() * aqk;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * g00 + vkq * g10;
        v[(k, q)] = vkp * g01 + vkq * g11;
    }
}
