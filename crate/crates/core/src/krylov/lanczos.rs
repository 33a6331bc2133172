use super::{BasisKind, BasisSet, Label};
use crate::error::{Error, Result};
use crate::evolution::Propagator;
use crate::numerics::{ComplexMatrix, HermitianOperator, StateVector, C64};

/// Lanczos coefficients and orthonormal Krylov vectors `k_0 … k_{m-1}`.
#[derive(Clone, Debug)]
pub struct LanczosData {
    /// Diagonal `a_n = ⟨k_n|H|k_n⟩`.
    pub a: Vec<f64>,
    /// Off-diagonal `b_n = ⟨k_{n+1}|H|k_n⟩ > 0`, one shorter than `a`.
    pub b: Vec<f64>,
    pub basis: BasisSet,
}

impl LanczosData {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// The tridiagonal matrix built from `a` and `b`.
    pub fn tridiagonal(&self) -> ComplexMatrix {
        let m = self.len();
        ComplexMatrix::from_fn(m, m, |i, j| {
            let v = if i == j {
                self.a[i]
            } else if i + 1 == j {
                self.b[i]
            } else if j + 1 == i {
                self.b[j]
            } else {
                0.0
            };
            C64::new(v, 0.0)
        })
    }

    /// `max |W†HW − T|` entrywise, with `W` the Lanczos vectors as columns.
    pub fn tridiagonal_residual(&self, h: &HermitianOperator) -> Result<f64> {
        let w = ComplexMatrix::from_columns(self.basis.vectors())?;
        let projected = w.adjoint().matmul(&h.matrix().matmul(&w)?)?;
        Ok(projected.sub(&self.tridiagonal())?.max_abs())
    }
}

/// Three-term Lanczos recursion on `H` from `Ψ₀` with full
/// re-orthogonalization (two passes against every previous vector).
///
/// Stops when the new residual norm `b` is at most `tol · ‖H k_n‖`, the same
/// relative criterion [`super::power_basis`] uses, so the number of Lanczos
/// vectors equals the power-basis grade.
pub fn lanczos(h: &HermitianOperator, psi0: &StateVector, tol: f64) -> Result<LanczosData> {
    psi0.check_dim(h.dim())?;
    if psi0.is_zero() {
        return Err(Error::ZeroState);
    }
    let mut ks = vec![psi0.normalized()?];
    let mut a = Vec::new();
    let mut b: Vec<f64> = Vec::new();

    loop {
        let n = ks.len() - 1;
        let mut w = h.apply(&ks[n])?;
        let hk_norm = w.norm();
        let an = ks[n].inner(&w).re;
        a.push(an);
        w.axpy(C64::new(-an, 0.0), &ks[n]);
        if n > 0 {
            w.axpy(C64::new(-b[n - 1], 0.0), &ks[n - 1]);
        }
        for _ in 0..2 {
            for k in &ks {
                let c = k.inner(&w);
                w.axpy(-c, k);
            }
        }
        let bn = w.norm();
        if ks.len() == h.dim() || bn <= tol * hk_norm || bn == 0.0 {
            break;
        }
        b.push(bn);
        ks.push(w.scaled(C64::new(1.0 / bn, 0.0)));
    }

    let labels = (0..ks.len()).map(Label::Power).collect();
    let basis = BasisSet::new(BasisKind::LanczosOrthonormal, ks.clone(), labels, ks, tol);
    Ok(LanczosData { a, b, basis })
}

/// `|α_n|² = |⟨k_n|ψ⟩|²` over the Lanczos vectors.
pub fn krylov_probabilities(ld: &LanczosData, psi: &StateVector) -> Result<Vec<f64>> {
    let dim = ld.basis.vectors().first().map_or(0, StateVector::dim);
    psi.check_dim(dim)?;
    Ok(ld.basis.vectors().iter().map(|k| k.inner(psi).norm_sqr()).collect())
}

/// Spread complexity `C_S(t) = Σ_n n |⟨k_n|Ψ(t)⟩|²` with zero-based `n`, so
/// `C_S(0) = 0` and `0 ≤ C_S ≤ m − 1`.
pub fn spread_complexity(ld: &LanczosData, prop: &Propagator, psi0: &StateVector, t: f64) -> Result<f64> {
    let psi_t = prop.evolve(psi0, t)?;
    let probs = krylov_probabilities(ld, &psi_t)?;
    Ok(probs.iter().enumerate().map(|(n, p)| n as f64 * p).sum())
}
