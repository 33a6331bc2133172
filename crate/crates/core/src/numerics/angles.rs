use super::{gram_schmidt, singular_values, ComplexMatrix, StateVector};
use crate::error::{Error, Result};
use crate::DEFAULT_RANK_TOL;

/// Largest principal angle (radians) at which two spans of equal dimension
/// are declared equal.
pub const SPAN_EQUALITY_TOL: f64 = 1e-8;

/// Principal angles between `span(a)` and `span(b)`, ascending, in radians.
///
/// Both lists are orthonormalized first (at [`DEFAULT_RANK_TOL`]); the number
/// of angles is the smaller of the two resulting dimensions. Cosines come from
/// the singular values of the cross-Gram matrix `Qa†Qb` (clamped to `[0, 1]`),
/// sines from the singular values of the residual `Qb − Qa(Qa†Qb)`; angles below
/// π/4 are taken from the sines, where `arccos` has no resolution left.
pub fn principal_angles(a: &[StateVector], b: &[StateVector]) -> Result<Vec<f64>> {
    let dim_a = a.first().map(StateVector::dim);
    let dim_b = b.first().map(StateVector::dim);
    let ambient = dim_a.or(dim_b).unwrap_or(0);
    for v in a.iter().chain(b) {
        if v.dim() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                actual: v.dim(),
            });
        }
    }

    let mut qa = gram_schmidt(a, DEFAULT_RANK_TOL);
    let mut qb = gram_schmidt(b, DEFAULT_RANK_TOL);
    if qa.len() < qb.len() {
        std::mem::swap(&mut qa, &mut qb);
    }
    let k = qb.len();
    if k == 0 {
        return Ok(Vec::new());
    }

    let ma = ComplexMatrix::from_columns(&qa)?;
    let mb = ComplexMatrix::from_columns(&qb)?;
    let cross = ma.adjoint().matmul(&mb)?;
    let mut cosines = singular_values(&cross);
    cosines.iter_mut().for_each(|c| *c = c.clamp(0.0, 1.0));

    let residual: Vec<StateVector> = qb
        .iter()
        .map(|v| {
            let mut w = v.clone();
            for _ in 0..2 {
                for q in &qa {
                    let c = q.inner(&w);
                    w.axpy(-c, q);
                }
            }
            w
        })
        .collect();
    let mut sines = singular_values(&ComplexMatrix::from_columns(&residual)?);
    sines.reverse();

    // cosines descending and sines ascending both enumerate angles ascending
    let mut angles: Vec<f64> = cosines
        .iter()
        .zip(&sines)
        .map(|(&c, &s)| {
            let s = s.clamp(0.0, 1.0);
            if s < std::f64::consts::FRAC_1_SQRT_2 {
                s.asin()
            } else {
                c.acos()
            }
        })
        .collect();
    angles.sort_by(f64::total_cmp);
    Ok(angles)
}

/// True when both spans have the same dimension and every principal angle is
/// at most [`SPAN_EQUALITY_TOL`].
pub fn spans_equal(a: &[StateVector], b: &[StateVector]) -> Result<bool> {
    let ra = gram_schmidt(a, DEFAULT_RANK_TOL).len();
    let rb = gram_schmidt(b, DEFAULT_RANK_TOL).len();
    if ra != rb {
        return Ok(false);
    }
    let angles = principal_angles(a, b)?;
    Ok(angles.iter().all(|&t| t <= SPAN_EQUALITY_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::C64;
    use std::f64::consts::FRAC_PI_2;

    fn e(dim: usize, k: usize) -> StateVector {
        StateVector::basis(dim, k)
    }

    #[test]
    fn identical_spans_have_zero_angle() {
        let angles = principal_angles(&[e(3, 0)], &[e(3, 0)]).unwrap();
        assert_eq!(angles.len(), 1);
        assert!(angles[0].abs() < 1e-15);
    }

    #[test]
    fn orthogonal_spans_are_at_right_angle() {
        let angles = principal_angles(&[e(3, 0)], &[e(3, 1)]).unwrap();
        assert!((angles[0] - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn phase_multiples_share_a_span() {
        let v1 = StateVector::new(vec![C64::new(0.3, 0.1), C64::new(-0.5, 0.2), C64::new(0.1, 0.7)]);
        let v2 = StateVector::new(vec![C64::new(0.0, 1.0), C64::new(0.4, 0.4), C64::new(-0.2, 0.0)]);
        let phased = [
            v1.scaled(C64::from_polar(1.0, 0.7)),
            v2.scaled(C64::from_polar(1.0, -2.9)),
        ];
        let angles = principal_angles(&[v1, v2], &phased).unwrap();
        assert!(angles.iter().all(|&t| t <= 1e-10), "{angles:?}");
    }

    #[test]
    fn known_angle_in_the_plane() {
        let theta = 0.3f64;
        let v = StateVector::from_real(&[theta.cos(), theta.sin()]);
        let angles = principal_angles(&[e(2, 0)], &[v]).unwrap();
        assert!((angles[0] - theta).abs() < 1e-15);
    }

    #[test]
    fn tiny_angle_is_resolved() {
        let theta = 1e-12f64;
        let v = StateVector::from_real(&[theta.cos(), theta.sin(), 0.0]);
        let angles = principal_angles(&[e(3, 0)], &[v]).unwrap();
        assert!((angles[0] - theta).abs() < 1e-20);
    }

    #[test]
    fn mismatched_ambient_dimension_is_rejected() {
        assert!(matches!(
            principal_angles(&[e(3, 0)], &[e(2, 0)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn equality_requires_matching_dimension() {
        assert!(!spans_equal(&[e(3, 0)], &[e(3, 0), e(3, 1)]).unwrap());
        assert!(spans_equal(&[e(3, 0), e(3, 1)], &[e(3, 1), e(3, 0)]).unwrap());
    }
}
