//! Small dense complex linear algebra, sized for three-qubit work (n ≤ 8).

mod eigen;
mod matrix;
mod qr;

pub use eigen::{eigenvalues, hessenberg};
pub use matrix::{determinant, matmul, CMatrix};
pub use qr::qr_decompose;

pub use num_complex::Complex64 as Complex;

/// Largest matrix dimension accepted by the eigenvalue and determinant routines.
pub const MAX_DIM: usize = 8;

/// Pauli Y.
pub fn sigma_y() -> CMatrix {
    CMatrix::from_rows(&[
        [Complex::new(0.0, 0.0), Complex::new(0.0, -1.0)],
        [Complex::new(0.0, 1.0), Complex::new(0.0, 0.0)],
    ])
}
