use super::{BasisKind, BasisSet, Label};
use crate::error::{Error, Result};
use crate::numerics::orth::OrthonormalBuilder;
use crate::numerics::{ComplexMatrix, HermitianOperator, StateVector, C64};

/// `f^j(Ψ₀) = (-iH)^j Ψ₀` for `j < n`, unnormalized.
pub fn raw_powers(h: &HermitianOperator, psi0: &StateVector, n: usize) -> Result<Vec<StateVector>> {
    psi0.check_dim(h.dim())?;
    let mut out = Vec::with_capacity(n);
    let mut v = psi0.clone();
    for j in 0..n {
        if j > 0 {
            v = h.apply(&v)?.scaled(C64::new(0.0, -1.0));
        }
        out.push(v.clone());
    }
    Ok(out)
}

/// `Θ[j][i] = t_i^j / j!` for `j, i < n`.
///
/// Column `i` holds the Taylor weights of time `t_i`, so that
/// `(h_0 … h_{n-1}) = (f^0 … f^{n-1}) · Θ`.
pub fn vandermonde_matrix(times: &[f64]) -> Result<ComplexMatrix> {
    check_distinct(times)?;
    let n = times.len();
    let mut theta = ComplexMatrix::zeros(n, n);
    for (i, &t) in times.iter().enumerate() {
        let mut w = 1.0;
        for j in 0..n {
            if j > 0 {
                w *= t / j as f64;
            }
            theta[(j, i)] = C64::new(w, 0.0);
        }
    }
    Ok(theta)
}

fn check_distinct(times: &[f64]) -> Result<()> {
    if let Some(t) = times.iter().find(|t| !t.is_finite()) {
        return Err(Error::invalid(format!("non-finite time {t}")));
    }
    for (i, a) in times.iter().enumerate() {
        if times[i + 1..].contains(a) {
            return Err(Error::invalid(format!("time {a} is repeated; Θ would be singular")));
        }
    }
    Ok(())
}

/// Truncated Taylor vectors `h_i = Σ_{j<n} f^j(Ψ₀) t_i^j / j!` with
/// `n = times.len()`. All `n` vectors are returned; the grade is their
/// numerical rank at `tol`.
pub fn partial_sum_basis(h: &HermitianOperator, psi0: &StateVector, times: &[f64], tol: f64) -> Result<BasisSet> {
    check_distinct(times)?;
    if times.is_empty() {
        return Err(Error::invalid("partial-sum basis needs at least one time"));
    }
    let n = times.len();
    let powers = raw_powers(h, psi0, n)?;
    let theta = vandermonde_matrix(times)?;
    let vectors: Vec<StateVector> = (0..n)
        .map(|i| {
            let mut acc = StateVector::zeros(psi0.dim());
            for (j, f) in powers.iter().enumerate() {
                acc.axpy(theta[(j, i)], f);
            }
            acc
        })
        .collect();
    let mut builder = OrthonormalBuilder::new(tol);
    for v in &vectors {
        builder.offer(v);
    }
    let labels = (0..n).map(Label::Power).collect();
    Ok(BasisSet::new(
        BasisKind::PartialSum,
        vectors,
        labels,
        builder.into_vectors(),
        tol,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::{build_hamiltonian, Builtin};

    fn real(m: &ComplexMatrix) -> Vec<f64> {
        m.as_slice().iter().map(|c| c.re).collect()
    }

    #[test]
    fn two_times() {
        assert_eq!(
            real(&vandermonde_matrix(&[0.0, 1.0]).unwrap()),
            vec![1.0, 1.0, 0.0, 1.0]
        );
    }

    #[test]
    fn three_times() {
        let theta = vandermonde_matrix(&[0.0, 1.0, 2.0]).unwrap();
        assert_eq!(real(&theta), vec![1.0, 1.0, 1.0, 0.0, 1.0, 2.0, 0.0, 0.5, 2.0]);
    }

    #[test]
    fn repeated_times_are_rejected() {
        assert!(vandermonde_matrix(&[0.0, 1.0, 0.0]).is_err());
    }

    #[test]
    fn single_time_gives_initial_state() {
        let h = build_hamiltonian(&Builtin::H2.spec()).unwrap();
        let psi = StateVector::basis(16, 3);
        let basis = partial_sum_basis(&h, &psi, &[0.0], 1e-10).unwrap();
        assert_eq!(basis.vectors(), &[psi]);
    }

    #[test]
    fn two_times_expand_to_first_order() {
        let h = build_hamiltonian(&Builtin::H2.spec()).unwrap();
        let psi = StateVector::basis(16, 0);
        let t1 = 0.7;
        let basis = partial_sum_basis(&h, &psi, &[0.0, t1], 1e-10).unwrap();
        let f1 = h.apply(&psi).unwrap().scaled(C64::new(0.0, -1.0));
        let mut expected = psi.clone();
        expected.axpy(C64::new(t1, 0.0), &f1);
        assert!(basis.vectors()[0].distance(&psi) < 1e-15);
        assert!(basis.vectors()[1].distance(&expected) < 1e-15);
    }
}
