//! Dense complex linear algebra used throughout the crate.
//!
//! Everything here works on small dense systems (a few thousand amplitudes at
//! most). All routines are pure functions over immutable inputs.

mod angles;
mod eigen;
mod matrix;
pub(crate) mod orth;
mod state;
mod svd;

pub use angles::{principal_angles, spans_equal, SPAN_EQUALITY_TOL};
pub use eigen::{eigendecompose_hermitian, SpectralDecomposition};
pub use matrix::{ComplexMatrix, HermitianOperator};
pub use orth::{gram_schmidt, numerical_rank};
pub use state::StateVector;
pub use svd::singular_values;

pub use num_complex::Complex64 as C64;
