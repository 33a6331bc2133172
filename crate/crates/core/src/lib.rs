//! Measurable Krylov spaces for quantum time evolution.
//!
//! The time evolution `|Ψ(t)⟩ = exp(-iHt)|Ψ₀⟩` of a finite quantum system never
//! leaves the Krylov space `K_m = span{Ψ₀, (-iH)Ψ₀, …, (-iH)^{m-1}Ψ₀}`. This crate
//! builds that space three ways and checks that they agree:
//!
//! * the classical power basis (`krylov::power_basis`) and the Lanczos basis
//!   (`krylov::lanczos`), which need `H` explicitly;
//! * the sampled basis (`krylov::sampled_basis`) made of time-evolved states
//!   `e^{-iHt_i}Ψ₀`, which can be obtained from measurements because its span is
//!   insensitive to per-vector global phases;
//! * the eigen-cluster basis (`krylov::eigen_cluster_basis`), whose size is the
//!   number of pairwise distinct eigenvalues of `H`.
//!
//! On top of those, [`analysis`] provides reconstruction errors, the effective
//! dimension `m_eff` and phase-invariance checks, and [`cli`] drives the
//! reproducible CSV experiments exposed by the `krylov-sampling` binary.
//!
//! ```
//! use krylov_sampling::{evolution, hamiltonian, krylov};
//!
//! let spec = hamiltonian::builtin("H2").unwrap();
//! let h = hamiltonian::build_hamiltonian(&spec).unwrap();
//! let prop = evolution::Propagator::new(&h).unwrap();
//! let psi0 = evolution::random_state(h.dim(), 7).unwrap();
//!
//! let grid = krylov::TimeGrid::equidistant(1.0, 4 * h.dim());
//! let sampled = krylov::sampled_basis(&prop, &psi0, grid.times(), 1e-10).unwrap();
//! assert_eq!(sampled.grade(), 3);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod error;
pub mod evolution;
pub mod hamiltonian;
pub mod krylov;
pub mod numerics;

pub use error::{Error, Result};
pub use numerics::{ComplexMatrix, HermitianOperator, SpectralDecomposition, StateVector, C64};

/// Relative residual below which a vector counts as linearly dependent.
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

/// Relative gap (w.r.t. the spectral range) below which eigenvalues are merged.
pub const DEFAULT_EIG_TOL: f64 = 1e-8;

/// Overlap threshold `λ = 1/√2` of the effective dimension.
pub const DEFAULT_LAMBDA: f64 = std::f64::consts::FRAC_1_SQRT_2;
