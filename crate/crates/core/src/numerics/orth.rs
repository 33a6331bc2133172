use super::StateVector;

/// Growing orthonormal basis built by modified Gram–Schmidt with one full
/// re-orthogonalization pass.
#[derive(Clone, Debug, Default)]
pub(crate) struct OrthonormalBuilder {
    basis: Vec<StateVector>,
    tol: f64,
}

/// Outcome of offering a vector to [`OrthonormalBuilder::offer`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Offer {
    /// Accepted; `ratio` is ‖residual‖ / ‖input‖.
    Independent {
        ratio: f64,
    },
    Dependent {
        ratio: f64,
    },
}

impl Offer {
    pub(crate) fn is_independent(self) -> bool {
        matches!(self, Offer::Independent { .. })
    }
}

impl OrthonormalBuilder {
    pub(crate) fn new(tol: f64) -> Self {
        Self { basis: Vec::new(), tol }
    }

    pub(crate) fn len(&self) -> usize {
        self.basis.len()
    }

    pub(crate) fn vectors(&self) -> &[StateVector] {
        &self.basis
    }

    pub(crate) fn into_vectors(self) -> Vec<StateVector> {
        self.basis
    }

    pub(crate) fn last(&self) -> Option<&StateVector> {
        self.basis.last()
    }

    /// Removes the components of `v` along the current basis (two MGS passes).
    pub(crate) fn residual(&self, v: &StateVector) -> StateVector {
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &self.basis {
                let c = q.inner(&w);
                w.axpy(-c, q);
            }
        }
        w
    }

    /// Adds the normalized residual of `v` unless it is at most `tol · ‖v‖`.
    pub(crate) fn offer(&mut self, v: &StateVector) -> Offer {
        let n0 = v.norm();
        if n0 == 0.0 || !n0.is_finite() {
            return Offer::Dependent { ratio: 0.0 };
        }
        let w = self.residual(v);
        let nw = w.norm();
        let ratio = nw / n0;
        if ratio <= self.tol {
            return Offer::Dependent { ratio };
        }
        self.basis.push(w.scaled((1.0 / nw).into()));
        Offer::Independent { ratio }
    }
}

/// Orthonormalizes `vectors` in order, dropping every vector whose residual
/// after projection is at most `tol` times its own norm (zero vectors always
/// drop). The survivors span the same subspace as the input.
pub fn gram_schmidt(vectors: &[StateVector], tol: f64) -> Vec<StateVector> {
    let mut builder = OrthonormalBuilder::new(tol);
    for v in vectors {
        builder.offer(v);
    }
    builder.into_vectors()
}

/// Number of vectors surviving [`gram_schmidt`] at the same tolerance.
pub fn numerical_rank(vectors: &[StateVector], tol: f64) -> usize {
    gram_schmidt(vectors, tol).len()
}
