//! Bases of the Krylov space `K_m(-iH, Ψ₀)`.
//!
//! | constructor | vectors | needs |
//! |---|---|---|
//! | [`power_basis`] | `(-iH)^j Ψ₀` | `H` |
//! | [`sampled_basis`] | `e^{-iHt_i} Ψ₀` | time evolution only |
//! | [`partial_sum_basis`] | truncated Taylor sums `h_i` | `H` |
//! | [`lanczos`] | orthonormal `k_n`, `H` tridiagonal | `H` |
//! | [`eigen_cluster_basis`] | spectral-projector images `ξ_p` | eigendecomposition |
//!
//! Every [`BasisSet`] also carries an orthonormal basis of its span, built
//! while the set was assembled, so spans can be compared without redoing the
//! dependence decisions.

mod cluster;
mod lanczos;
mod power;
mod sampled;
mod vandermonde;

pub use cluster::eigen_cluster_basis;
pub use lanczos::{krylov_probabilities, lanczos, spread_complexity, LanczosData};
pub use power::power_basis;
pub use sampled::{sampled_basis, sampled_basis_with, TimeGrid, DEFAULT_DT};
pub use vandermonde::{partial_sum_basis, raw_powers, vandermonde_matrix};

use crate::numerics::StateVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Power,
    Sampled,
    PartialSum,
    LanczosOrthonormal,
    EigenCluster,
}

/// Provenance of one basis vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Label {
    /// Power `j` of `(-iH)`, or Lanczos index `n`.
    Power(usize),
    /// Sample time `t_i`.
    Time(f64),
    /// Eigenvalue cluster `index` (over all clusters of `H`) with its energy.
    Cluster { index: usize, energy: f64 },
}

#[derive(Clone, Debug)]
pub struct BasisSet {
    kind: BasisKind,
    vectors: Vec<StateVector>,
    labels: Vec<Label>,
    orthonormal: Vec<StateVector>,
    grade: usize,
    tolerance_used: f64,
    truncated: bool,
    raw_powers: Vec<StateVector>,
}

impl BasisSet {
    pub(crate) fn new(
        kind: BasisKind,
        vectors: Vec<StateVector>,
        labels: Vec<Label>,
        orthonormal: Vec<StateVector>,
        tolerance_used: f64,
    ) -> Self {
        debug_assert_eq!(vectors.len(), labels.len());
        let grade = orthonormal.len();
        Self {
            kind,
            vectors,
            labels,
            orthonormal,
            grade,
            tolerance_used,
            truncated: false,
            raw_powers: Vec::new(),
        }
    }

    pub(crate) fn with_truncated(mut self, truncated: bool) -> Self {
        self.truncated = truncated;
        self
    }

    pub(crate) fn with_raw_powers(mut self, raw: Vec<StateVector>) -> Self {
        self.raw_powers = raw;
        self
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    /// The basis vectors as constructed. Only sampled and Lanczos vectors are
    /// unit-norm; power directions are unit-norm too (see [`power_basis`]),
    /// partial sums and cluster vectors are not.
    pub fn vectors(&self) -> &[StateVector] {
        &self.vectors
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Orthonormal basis of the same span, in construction order.
    pub fn orthonormal(&self) -> &[StateVector] {
        &self.orthonormal
    }

    /// Dimension of the span at `tolerance_used`.
    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn tolerance_used(&self) -> f64 {
        self.tolerance_used
    }

    /// Set when a sampled basis ran out of grid points before two consecutive
    /// dependent samples confirmed the plateau; extend the grid and retry.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Unnormalized `(-iH)^j Ψ₀` for `j < grade` (power bases only).
    pub fn raw_powers(&self) -> &[StateVector] {
        &self.raw_powers
    }

    /// Sample times of a sampled basis.
    pub fn times(&self) -> Vec<f64> {
        self.labels
            .iter()
            .filter_map(|l| match l {
                Label::Time(t) => Some(*t),
                _ => None,
            })
            .collect()
    }
}
