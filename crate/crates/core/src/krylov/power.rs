use super::{BasisKind, BasisSet, Label};
use crate::error::{Error, Result};
use crate::numerics::orth::{Offer, OrthonormalBuilder};
use crate::numerics::{HermitianOperator, StateVector, C64};

/// Power basis of `K_m(-iH, Ψ₀)` and its grade `m`.
///
/// Step `j` extends the span by `(-iH)` applied to the newest orthonormal
/// direction, which spans the same `K_{j+1}` as the raw power `(-iH)^j Ψ₀`
/// but stays well conditioned. A dependent step is confirmed by also testing
/// the renormalized raw power; only when both are dependent does the
/// construction stop. If the raw power still adds a direction, it is kept and
/// the iteration continues.
///
/// The returned vectors are the orthonormal directions (`Label::Power(j)`),
/// and [`BasisSet::raw_powers`] holds the unnormalized `(-iH)^j Ψ₀`.
pub fn power_basis(h: &HermitianOperator, psi0: &StateVector, tol: f64) -> Result<BasisSet> {
    psi0.check_dim(h.dim())?;
    if psi0.is_zero() {
        return Err(Error::ZeroState);
    }
    let minus_i = C64::new(0.0, -1.0);
    let apply = |v: &StateVector| -> Result<StateVector> { Ok(h.apply(v)?.scaled(minus_i)) };

    let mut builder = OrthonormalBuilder::new(tol);
    builder.offer(psi0);
    let mut raw = vec![psi0.clone()];

    while builder.len() < h.dim() {
        let next_raw = apply(raw.last().expect("nonempty"))?;
        let candidate = apply(builder.last().expect("nonempty"))?;
        if builder.offer(&candidate).is_independent() {
            raw.push(next_raw);
            continue;
        }
        let confirm = match next_raw.normalized() {
            Ok(unit) => builder.offer(&unit),
            Err(_) => Offer::Dependent { ratio: 0.0 },
        };
        if !confirm.is_independent() {
            break;
        }
        raw.push(next_raw);
    }

    let vectors = builder.vectors().to_vec();
    let labels = (0..vectors.len()).map(Label::Power).collect();
    raw.truncate(vectors.len());
    Ok(BasisSet::new(BasisKind::Power, vectors, labels, builder.into_vectors(), tol).with_raw_powers(raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::random_state;
    use crate::hamiltonian::{build_hamiltonian, Builtin};
    use crate::numerics::eigendecompose_hermitian;

    #[test]
    fn eigenvector_has_grade_one() {
        let h = build_hamiltonian(&Builtin::HI1.spec()).unwrap();
        let phi = eigendecompose_hermitian(&h).unwrap().eigenvector(5);
        assert_eq!(power_basis(&h, &phi, 1e-10).unwrap().grade(), 1);
    }

    #[test]
    fn builtin_grades() {
        for (b, seed) in [(Builtin::H3, 1), (Builtin::HI1, 2)] {
            let h = build_hamiltonian(&b.spec()).unwrap();
            let psi = random_state(16, seed).unwrap();
            let basis = power_basis(&h, &psi, 1e-10).unwrap();
            assert_eq!(basis.grade(), b.expected_grade(), "{b}");
            assert_eq!(basis.raw_powers().len(), basis.grade());
        }
    }

    #[test]
    fn raw_powers_are_repeated_applications() {
        let h = build_hamiltonian(&Builtin::H2.spec()).unwrap();
        let psi = random_state(16, 9).unwrap();
        let basis = power_basis(&h, &psi, 1e-10).unwrap();
        let f1 = h.apply(&psi).unwrap().scaled(C64::new(0.0, -1.0));
        assert!(basis.raw_powers()[1].distance(&f1) < 1e-14);
    }

    #[test]
    fn zero_state_is_rejected() {
        let h = build_hamiltonian(&Builtin::H1.spec()).unwrap();
        assert!(matches!(
            power_basis(&h, &StateVector::zeros(16), 1e-10),
            Err(Error::ZeroState)
        ));
    }
}
