use super::{BasisKind, BasisSet, Label};
use crate::error::{Error, Result};
use crate::evolution::Propagator;
use crate::numerics::orth::OrthonormalBuilder;
use crate::numerics::StateVector;

/// Default spacing of the equidistant sampling grid.
pub const DEFAULT_DT: f64 = 1.0;

/// Sample times `0 = t_0 < t_1 < …` for [`sampled_basis`].
#[derive(Clone, Debug, PartialEq)]
pub struct TimeGrid(Vec<f64>);

impl TimeGrid {
    pub fn new(times: Vec<f64>) -> Result<Self> {
        validate_grid(&times)?;
        Ok(Self(times))
    }

    /// `t_i = i·dt` for `i < len`.
    pub fn equidistant(dt: f64, len: usize) -> Self {
        Self((0..len).map(|i| i as f64 * dt).collect())
    }

    /// Equidistant grid capped at four samples per Hilbert-space dimension.
    pub fn default_for(dim: usize, dt: f64) -> Self {
        Self::equidistant(dt, 4 * dim)
    }

    pub fn times(&self) -> &[f64] {
        &self.0
    }
}

fn validate_grid(times: &[f64]) -> Result<()> {
    match times.first() {
        None => return Err(Error::invalid("time grid is empty")),
        Some(&t0) if t0 != 0.0 => return Err(Error::invalid(format!("time grid must start at 0, starts at {t0}"))),
        _ => {}
    }
    if let Some(t) = times.iter().find(|t| !t.is_finite()) {
        return Err(Error::invalid(format!("time grid contains non-finite value {t}")));
    }
    if let Some(w) = times.windows(2).find(|w| w[1] <= w[0]) {
        return Err(Error::invalid(format!(
            "time grid is not strictly increasing at {} → {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// Sampled basis `G_m`: time-evolved states `g_i = e^{-iHt_i}Ψ₀` on `times`.
///
/// Samples are orthonormalized incrementally; dependent samples are skipped
/// and two consecutive dependent samples end the construction. The returned
/// vectors are the independent `g_i` themselves (unit norm) labelled by their
/// times. If the grid runs out first, the result is flagged
/// [`BasisSet::truncated`].
pub fn sampled_basis(prop: &Propagator, psi0: &StateVector, times: &[f64], tol: f64) -> Result<BasisSet> {
    sampled_basis_with(prop, psi0, times, tol, |_, g| g)
}

/// [`sampled_basis`] with `transform(i, g_i)` applied to each sample before
/// the dependence test, e.g. a per-sample global phase.
pub fn sampled_basis_with(
    prop: &Propagator,
    psi0: &StateVector,
    times: &[f64],
    tol: f64,
    mut transform: impl FnMut(usize, StateVector) -> StateVector,
) -> Result<BasisSet> {
    validate_grid(times)?;
    psi0.check_dim(prop.dim())?;
    let norm = psi0.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::invalid(format!(
            "initial state must be unit-norm, has norm {norm}"
        )));
    }

    let coeffs = prop.spectral().coefficients(psi0)?;
    let mut builder = OrthonormalBuilder::new(tol);
    let mut vectors = Vec::new();
    let mut labels = Vec::new();
    let mut dependent_run = 0;
    let mut plateau = false;

    for (i, &t) in times.iter().enumerate() {
        let g = transform(i, prop.evolve_coefficients(&coeffs, t));
        if builder.offer(&g).is_independent() {
            dependent_run = 0;
            vectors.push(g);
            labels.push(Label::Time(t));
        } else {
            dependent_run += 1;
            if dependent_run == 2 {
                plateau = true;
                break;
            }
        }
    }

    Ok(BasisSet::new(BasisKind::Sampled, vectors, labels, builder.into_vectors(), tol).with_truncated(!plateau))
}
