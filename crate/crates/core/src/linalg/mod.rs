//! Exact linear algebra over 𝔽_p and ℚ.

pub mod field;
pub mod matrix;
pub mod subspace;

pub use field::{Field, FieldConfig, Fp, Rationals};
pub use matrix::{Echelon, Matrix};
pub use subspace::{image_of_map, subspace_ops, Subspace, SubspaceOps};

pub fn rank<F: Field>(a: &Matrix<F>) -> usize {
    a.rank()
}

pub fn kernel<F: Field>(a: &Matrix<F>) -> Subspace<F> {
    a.kernel()
}
