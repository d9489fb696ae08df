//! Blow-up graphs `G^(t)` and the closed-form spectra of their adjacency,
//! Laplacian and signless Laplacian matrices (and of their complements),
//! checked against an independent cyclic Jacobi eigensolver.
//!
//! ```
//! use blowup_core::{verify_blowup, Graph};
//!
//! let report = verify_blowup(&Graph::path(3).unwrap(), "P_3", 2, 1e-8).unwrap();
//! assert!(report.overall_pass);
//! ```

pub mod eigen;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod spectra;
pub mod verify;

pub use eigen::{
    compare_spectra, eig_symmetric, eigenpair_residual, spectrum_of, verify_eigenpair, ComparisonResult,
    EigenBasis, EigenError, EigenPair, Spectrum, DEFAULT_SOLVER_TOL, DEFAULT_VERIFY_TOL,
};
pub use graph::{BlowUpParams, Graph, GraphError};
pub use io::{FamilyRecord, FormatError, VerificationReport};
pub use matrix::{adjacency, degree_matrix, kronecker, laplacian, signless_laplacian, MatrixError, SymMatrix};
pub use spectra::{FormulaSpectrum, SpectraError};
pub use verify::{closed_form_spectrum, oracle_spectrum, random_suite, verify_blowup, MatrixFamily};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Format(#[from] FormatError),
}
