use super::{BasisKind, BasisSet, Label};
use crate::error::Result;
use crate::numerics::orth::OrthonormalBuilder;
use crate::numerics::{SpectralDecomposition, StateVector, C64};

/// Eigen-cluster basis `X_d`: for each cluster `J_p` of (numerically) equal
/// eigenvalues, `ξ_p = Σ_{j∈J_p} ⟨φ_j|Ψ₀⟩ |φ_j⟩`, the spectral projection of
/// `Ψ₀` onto that eigenspace.
///
/// Clusters whose projection has norm at most `rank_tol · ‖Ψ₀‖` are dropped.
/// The `ξ_p` are returned unnormalized and are mutually orthogonal.
pub fn eigen_cluster_basis(
    spectral: &SpectralDecomposition,
    psi0: &StateVector,
    eig_tol: f64,
    rank_tol: f64,
) -> Result<BasisSet> {
    let coeffs = spectral.coefficients(psi0)?;
    let threshold = rank_tol * psi0.norm();
    let mut vectors = Vec::new();
    let mut labels = Vec::new();
    let mut builder = OrthonormalBuilder::new(rank_tol);

    for (index, range) in spectral.clusters(eig_tol).into_iter().enumerate() {
        let masked: Vec<C64> = coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| if range.contains(&j) { c } else { C64::new(0.0, 0.0) })
            .collect();
        let xi = spectral.synthesize(&masked);
        if xi.norm() <= threshold {
            continue;
        }
        let energy = spectral.eigenvalues()[range.clone()].iter().sum::<f64>() / range.len() as f64;
        builder.offer(&xi);
        vectors.push(xi);
        labels.push(Label::Cluster { index, energy });
    }

    Ok(BasisSet::new(
        BasisKind::EigenCluster,
        vectors,
        labels,
        builder.into_vectors(),
        rank_tol,
    ))
}
