use super::{ComplexMatrix, C64};

const MAX_SWEEPS: usize = 64;

/// Singular values of a dense complex matrix, descending.
///
/// One-sided (Hestenes) Jacobi: columns are rotated pairwise until mutually
/// orthogonal, after which their norms are the singular values. Small singular
/// values come out with high relative accuracy, which matters for principal
/// angles near zero.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let work = if m.cols() > m.rows() { m.adjoint() } else { m.clone() };
    let mut cols = work.columns();
    let k = cols.len();

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..k {
            for j in i + 1..k {
                let alpha = cols[i].norm_sqr();
                let beta = cols[j].norm_sqr();
                let gamma = cols[i].inner(&cols[j]);
                let g = gamma.norm();
                if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // rephase column j so that ⟨a_i|b_j⟩ is real and positive
                let phase = (gamma / g).conj();
                cols[j].scale_mut(phase);
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta == 0.0 {
                    1.0
                } else {
                    zeta.signum() / (zeta.abs() + zeta.hypot(1.0))
                };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                let (ai, bj) = (cols[i].clone(), cols[j].clone());
                let mut new_i = ai.scaled(C64::new(c, 0.0));
                new_i.axpy(C64::new(-s, 0.0), &bj);
                let mut new_j = ai.scaled(C64::new(s, 0.0));
                new_j.axpy(C64::new(c, 0.0), &bj);
                cols[i] = new_i;
                cols[j] = new_j;
            }
        }
        if !rotated {
            break;
        }
    }

    let mut sv: Vec<f64> = cols.iter().map(|c| c.norm()).collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}
