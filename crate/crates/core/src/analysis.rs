//! Verification measures on top of the Krylov bases: reconstruction errors of
//! evolved states, distinct-eigenvalue counts, the effective dimension
//! `m_eff`, and phase-invariance of the sampled span.

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::evolution::{apply_global_phase, random_state_from, seeded_rng, Propagator};
use crate::krylov::{sampled_basis, sampled_basis_with, BasisSet, TimeGrid, DEFAULT_DT};
use crate::numerics::{principal_angles, SpectralDecomposition, StateVector};
use crate::{DEFAULT_EIG_TOL, DEFAULT_LAMBDA, DEFAULT_RANK_TOL};

/// `l`-th approximation `u_l = Σ_{j<l} ⟨w_j|target⟩ w_j` over the orthonormal
/// vectors of `basis`.
pub fn reconstruct(basis: &BasisSet, target: &StateVector, l: usize) -> Result<StateVector> {
    project(basis.orthonormal(), target, l)
}

fn project(w: &[StateVector], target: &StateVector, l: usize) -> Result<StateVector> {
    if l > w.len() {
        return Err(Error::invalid(format!(
            "approximation order {l} exceeds basis size {}",
            w.len()
        )));
    }
    let mut u = StateVector::zeros(target.dim());
    for wj in &w[..l] {
        wj.check_dim(target.dim())?;
        u.axpy(wj.inner(target), wj);
    }
    Ok(u)
}

/// Number of pairwise distinct eigenvalues, clustering gaps up to
/// `eig_tol · max(1, spectral range)`.
pub fn count_distinct_eigenvalues(spectral: &SpectralDecomposition, eig_tol: f64) -> usize {
    spectral.clusters(eig_tol).len()
}

/// Settings of [`reconstruction_error_experiment`].
#[derive(Clone, Debug, PartialEq)]
pub struct ReconstructionConfig {
    pub n_states: usize,
    pub n_times: usize,
    /// Reconstruction times are drawn uniformly from `(0, t_max]`.
    pub t_max: f64,
    /// Spacing of the sampling grid used to build each basis.
    pub dt: f64,
    pub rank_tol: f64,
    pub eig_tol: f64,
    pub seed: u64,
}

impl Default for ReconstructionConfig {
    fn default() -> Self {
        Self {
            n_states: 10,
            n_times: 25,
            t_max: 10.0,
            dt: DEFAULT_DT,
            rank_tol: DEFAULT_RANK_TOL,
            eig_tol: DEFAULT_EIG_TOL,
            seed: 42,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorPoint {
    pub l: usize,
    pub r_mean: f64,
    /// Spread over all `(state, time)` pairs; not part of the averaged
    /// quantity itself.
    pub r_std: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReconstructionReport {
    pub hamiltonian_name: String,
    /// Largest grade over the initial states.
    pub m: usize,
    pub d: usize,
    /// One point per `l = 0..=m`.
    pub r_curve: Vec<ErrorPoint>,
    pub n_states: usize,
    pub n_times: usize,
    pub seed: u64,
}

impl ReconstructionReport {
    pub fn r_mean(&self, l: usize) -> Option<f64> {
        self.r_curve.get(l).map(|p| p.r_mean)
    }
}

/// Reconstruction error `r(l)` averaged over random initial states and times.
///
/// For each Haar-random `Ψ_x` (RNG stream `x` of `seed`): build the sampled
/// basis, orthonormalize it to `w_j`, draw `n_times` times `τ_k` in
/// `(0, t_max]` and record `r(τ_k, l, Ψ_x) = ‖u_l(τ_k) − Ψ(τ_k)‖` for every
/// `l`. Errors are averaged over `k`, then over `x`. States whose grade is
/// below the maximum reuse their full-basis error for larger `l`.
pub fn reconstruction_error_experiment(
    name: &str,
    prop: &Propagator,
    cfg: &ReconstructionConfig,
) -> Result<ReconstructionReport> {
    if cfg.n_states == 0 || cfg.n_times == 0 {
        return Err(Error::invalid("n_states and n_times must be at least 1"));
    }
    if !(cfg.t_max > 0.0) {
        return Err(Error::invalid(format!("t_max must be positive, got {}", cfg.t_max)));
    }
    let dim = prop.dim();
    let grid = TimeGrid::default_for(dim, cfg.dt);

    // errors[x][k][l]
    let per_state: Vec<Vec<Vec<f64>>> = (0..cfg.n_states)
        .into_par_iter()
        .map(|x| -> Result<Vec<Vec<f64>>> {
            let mut rng = seeded_rng(cfg.seed, x as u64);
            let psi = random_state_from(dim, &mut rng)?;
            let basis = sampled_basis(prop, &psi, grid.times(), cfg.rank_tol)?;
            if basis.truncated() {
                return Err(Error::invalid(format!(
                    "sampling grid exhausted before the grade plateau (dt = {}); use a larger dt",
                    cfg.dt
                )));
            }
            let coeffs = prop.spectral().coefficients(&psi)?;
            (0..cfg.n_times)
                .map(|_| {
                    let tau = cfg.t_max * (1.0 - rng.random::<f64>());
                    let target = prop.evolve_coefficients(&coeffs, tau);
                    (0..=basis.grade())
                        .map(|l| Ok(reconstruct(&basis, &target, l)?.distance(&target)))
                        .collect()
                })
                .collect()
        })
        .collect::<Result<_>>()?;

    let m = per_state.iter().map(|s| s[0].len() - 1).max().unwrap_or(0);
    let at = |curve: &Vec<f64>, l: usize| curve[l.min(curve.len() - 1)];

    let r_curve = (0..=m)
        .map(|l| {
            let state_means: Vec<f64> = per_state
                .iter()
                .map(|s| s.iter().map(|c| at(c, l)).sum::<f64>() / s.len() as f64)
                .collect();
            let r_mean = state_means.iter().sum::<f64>() / state_means.len() as f64;
            let all: Vec<f64> = per_state.iter().flat_map(|s| s.iter().map(|c| at(c, l))).collect();
            let mean_all = all.iter().sum::<f64>() / all.len() as f64;
            let var = all.iter().map(|e| (e - mean_all).powi(2)).sum::<f64>() / all.len() as f64;
            ErrorPoint {
                l,
                r_mean,
                r_std: var.sqrt(),
            }
        })
        .collect();

    Ok(ReconstructionReport {
        hamiltonian_name: name.to_string(),
        m,
        d: count_distinct_eigenvalues(prop.spectral(), cfg.eig_tol),
        r_curve,
        n_states: cfg.n_states,
        n_times: cfg.n_times,
        seed: cfg.seed,
    })
}

/// Placement of the `m` evaluation times of `m_eff` inside `(0, T]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ThetaGrid {
    /// `θ_i = i·T/m`, `i = 1..m`; the last sample sits at `T`.
    #[default]
    Endpoint,
    /// `θ_i = (i+1)·T/m`, `i = 1..m`; runs one step past `T`.
    Shifted,
}

impl ThetaGrid {
    fn theta(self, i: usize, t: f64, m: usize) -> f64 {
        match self {
            ThetaGrid::Endpoint => i as f64 * t / m as f64,
            ThetaGrid::Shifted => (i + 1) as f64 * t / m as f64,
        }
    }
}

impl std::str::FromStr for ThetaGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "endpoint" => Ok(ThetaGrid::Endpoint),
            "shifted" => Ok(ThetaGrid::Shifted),
            other => Err(Error::invalid(format!(
                "unknown theta grid `{other}` (expected endpoint or shifted)"
            ))),
        }
    }
}

/// Per-pair contribution: 1 below the overlap threshold, linearly down to 0 at
/// overlap 1.
pub fn effective_increment(overlap: f64, lambda: f64) -> f64 {
    if overlap < lambda {
        1.0
    } else {
        1.0 - (overlap - lambda) / (1.0 - lambda)
    }
}

/// `m_eff = 1 + Σ_{i=1}^{m-1} inc(λ_i)` from already computed consecutive
/// overlaps `λ_i`.
pub fn effective_dimension_from_overlaps(overlaps: &[f64], lambda: f64) -> f64 {
    1.0 + overlaps.iter().map(|&o| effective_increment(o, lambda)).sum::<f64>()
}

/// Effective dimension of the evolution over `(0, T]`: samples
/// `g_i = e^{-iHθ_i}Ψ₀` at `m` times, overlaps `λ_i = |⟨g_i|g_{i+1}⟩|²`, and
/// [`effective_dimension_from_overlaps`]. Equals 1 for `m = 1`.
pub fn effective_dimension(
    prop: &Propagator,
    psi0: &StateVector,
    t: f64,
    m: usize,
    lambda: f64,
    grid: ThetaGrid,
) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::invalid(format!("T must be positive and finite, got {t}")));
    }
    if m == 0 {
        return Err(Error::invalid("grade m must be at least 1"));
    }
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::invalid(format!("λ must lie in (0, 1), got {lambda}")));
    }
    let coeffs = prop.spectral().coefficients(psi0)?;
    let samples: Vec<StateVector> = (1..=m)
        .map(|i| prop.evolve_coefficients(&coeffs, grid.theta(i, t, m)))
        .collect();
    let overlaps: Vec<f64> = samples.windows(2).map(|w| w[0].inner(&w[1]).norm_sqr()).collect();
    Ok(effective_dimension_from_overlaps(&overlaps, lambda))
}

/// Options shared by effective-dimension sweeps.
#[derive(Clone, Debug, PartialEq)]
pub struct EffectiveDimensionOptions {
    pub lambda: f64,
    pub theta_grid: ThetaGrid,
    pub dt: f64,
    pub rank_tol: f64,
    pub eig_tol: f64,
}

impl Default for EffectiveDimensionOptions {
    fn default() -> Self {
        Self {
            lambda: DEFAULT_LAMBDA,
            theta_grid: ThetaGrid::Endpoint,
            dt: DEFAULT_DT,
            rank_tol: DEFAULT_RANK_TOL,
            eig_tol: DEFAULT_EIG_TOL,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EffectiveDimensionCurve {
    pub t_values: Vec<f64>,
    pub m_eff_values: Vec<f64>,
    pub lambda: f64,
    /// Grade of `Ψ₀` (number of samples per point).
    pub m: usize,
    /// Distinct eigenvalues of `H`, the saturation level.
    pub d: usize,
}

/// `m_eff(T)` for each `T` in `t_grid`, with `m` taken from the sampled basis
/// of `Ψ₀` and `d` from the spectrum.
pub fn effective_dimension_sweep(
    prop: &Propagator,
    psi0: &StateVector,
    t_grid: &[f64],
    opts: &EffectiveDimensionOptions,
) -> Result<EffectiveDimensionCurve> {
    if t_grid.is_empty() {
        return Err(Error::invalid("effective-dimension grid is empty"));
    }
    let grid = TimeGrid::default_for(prop.dim(), opts.dt);
    let m = sampled_basis(prop, psi0, grid.times(), opts.rank_tol)?.grade();
    let m_eff_values = t_grid
        .iter()
        .map(|&t| effective_dimension(prop, psi0, t, m, opts.lambda, opts.theta_grid))
        .collect::<Result<_>>()?;
    Ok(EffectiveDimensionCurve {
        t_values: t_grid.to_vec(),
        m_eff_values,
        lambda: opts.lambda,
        m,
        d: count_distinct_eigenvalues(prop.spectral(), opts.eig_tol),
    })
}

/// Builds the sampled basis twice, once plain and once with an independent
/// uniform phase `e^{iα_i}` on every sample, and returns the largest principal
/// angle between the two spans. A grade mismatch returns `π/2`.
pub fn phase_invariance_check(
    prop: &Propagator,
    psi0: &StateVector,
    times: &[f64],
    seed: u64,
    rank_tol: f64,
) -> Result<f64> {
    let mut rng = seeded_rng(seed, 0);
    let phases: Vec<f64> = (0..times.len())
        .map(|_| rng.random_range(0.0..std::f64::consts::TAU))
        .collect();
    phase_invariance_with(prop, psi0, times, &phases, rank_tol)
}

/// [`phase_invariance_check`] with explicit phases (one per grid time).
pub fn phase_invariance_with(
    prop: &Propagator,
    psi0: &StateVector,
    times: &[f64],
    phases: &[f64],
    rank_tol: f64,
) -> Result<f64> {
    if phases.len() < times.len() {
        return Err(Error::invalid("need one phase per sample time"));
    }
    let plain = sampled_basis(prop, psi0, times, rank_tol)?;
    let phased = sampled_basis_with(prop, psi0, times, rank_tol, |i, g| apply_global_phase(&g, phases[i]))?;
    if plain.grade() != phased.grade() {
        return Ok(std::f64::consts::FRAC_PI_2);
    }
    let angles = principal_angles(plain.orthonormal(), phased.vectors())?;
    Ok(angles.into_iter().fold(0.0, f64::max))
}
