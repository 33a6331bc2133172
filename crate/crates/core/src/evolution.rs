//! Exact Schrödinger evolution `|Ψ(t)⟩ = e^{-iHt}|Ψ₀⟩` and random initial states.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::numerics::{eigendecompose_hermitian, HermitianOperator, SpectralDecomposition, StateVector, C64};

/// `e^{-iHt}` through a cached spectral decomposition of `H`.
///
/// Immutable once built; `evolve` may be called concurrently.
#[derive(Clone, Debug)]
pub struct Propagator {
    spectral: SpectralDecomposition,
}

impl Propagator {
    pub fn new(h: &HermitianOperator) -> Result<Self> {
        Ok(Self {
            spectral: eigendecompose_hermitian(h)?,
        })
    }

    pub fn from_spectral(spectral: SpectralDecomposition) -> Self {
        Self { spectral }
    }

    pub fn dim(&self) -> usize {
        self.spectral.dim()
    }

    pub fn spectral(&self) -> &SpectralDecomposition {
        &self.spectral
    }

    /// `Σ_j e^{-iε_j t} |φ_j⟩⟨φ_j|Ψ₀⟩`
    pub fn evolve(&self, psi0: &StateVector, t: f64) -> Result<StateVector> {
        if !t.is_finite() {
            return Err(Error::invalid(format!("evolution time {t} is not finite")));
        }
        let coeffs = self.spectral.coefficients(psi0)?;
        Ok(self.evolve_coefficients(&coeffs, t))
    }

    /// Evolves a state already expanded in the eigenbasis (`⟨φ_j|Ψ₀⟩`), which
    /// saves one change of basis per time when sampling many times.
    pub fn evolve_coefficients(&self, coeffs: &[C64], t: f64) -> StateVector {
        let phased: Vec<C64> = coeffs
            .iter()
            .zip(self.spectral.eigenvalues())
            .map(|(c, &e)| c * C64::from_polar(1.0, -e * t))
            .collect();
        self.spectral.synthesize(&phased)
    }
}

/// Multiplies every amplitude by `e^{iα}`.
pub fn apply_global_phase(psi: &StateVector, alpha: f64) -> StateVector {
    psi.scaled(C64::from_polar(1.0, alpha))
}

/// Haar-random unit vector from `rng`: `2·dim` standard normals as real and
/// imaginary parts, normalized.
pub fn random_state_from<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<StateVector> {
    if dim == 0 {
        return Err(Error::invalid("random state needs dim ≥ 1"));
    }
    loop {
        let amps: Vec<C64> = (0..dim)
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let v = StateVector::new(amps);
        if v.norm() > 0.0 {
            return v.normalized();
        }
    }
}

/// Deterministic Haar-random unit vector for `seed`.
pub fn random_state(dim: usize, seed: u64) -> Result<StateVector> {
    random_state_from(dim, &mut seeded_rng(seed, 0))
}

/// ChaCha20 stream `stream` of `seed`. Independent workers draw from distinct
/// streams so results do not depend on scheduling.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::{build_hamiltonian, Builtin};
    use std::f64::consts::PI;

    fn h1() -> Propagator {
        Propagator::new(&build_hamiltonian(&Builtin::H1.spec()).unwrap()).unwrap()
    }

    #[test]
    fn zero_time_is_identity() {
        let p = h1();
        let psi = random_state(16, 3).unwrap();
        assert!(p.evolve(&psi, 0.0).unwrap().distance(&psi) <= 1e-12);
    }

    #[test]
    fn h1_half_period_flips_sign() {
        let p = h1();
        let psi = random_state(16, 11).unwrap();
        let out = p.evolve(&psi, 2.0 * PI).unwrap();
        assert!(out.distance(&psi.scaled(C64::new(-1.0, 0.0))) <= 1e-12);
        let out = p.evolve(&psi, 4.0 * PI).unwrap();
        assert!(out.distance(&psi) <= 1e-12);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        assert!(matches!(
            h1().evolve(&StateVector::basis(4, 0), 1.0),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn global_phase_examples() {
        let e1 = StateVector::basis(2, 0);
        assert_eq!(apply_global_phase(&e1, 0.0), e1);
        let flipped = apply_global_phase(&e1, PI);
        assert!(flipped.distance(&e1.scaled(C64::new(-1.0, 0.0))) < 1e-15);
    }

    #[test]
    fn random_state_contract() {
        let a = random_state(16, 42).unwrap();
        let b = random_state(16, 42).unwrap();
        assert_eq!(a, b);
        assert!((a.norm() - 1.0).abs() <= 1e-12);
        assert_ne!(a, random_state(16, 43).unwrap());
        assert!(random_state(0, 1).is_err());
    }

    #[test]
    fn haar_weights_are_uniform_in_two_dimensions() {
        // for Haar states in ℂ², |⟨e₁|ψ⟩|² is uniform on [0, 1]
        let mut rng = seeded_rng(2024, 0);
        let n = 10_000;
        let mean = (0..n)
            .map(|_| random_state_from(2, &mut rng).unwrap()[0].norm_sqr())
            .sum::<f64>()
            / n as f64;
        assert!((mean - 0.5).abs() <= 0.02, "{mean}");
    }
}
