//! Exact determinants, minors and Pfaffians over the rationals, together with
//! residual checks for the Plücker relations, the Desnanot–Jacobi identity and
//! the Pfaffian perfect-square recurrence.
//!
//! Every public index is 1-based. Minors follow one convention throughout:
//! `complementary_minor(A, R, C)` is the unsigned determinant of `A` with the
//! rows `R` and columns `C` deleted; signs appear only in [`signed_cofactor`].

pub mod det;
pub mod error;
pub mod jacobi;
pub mod matrix;
pub mod matrix_file;
pub mod pfaffian;
pub mod pluecker;
pub mod sample;
pub mod scalar;

pub use det::{
    complementary_minor, det_bareiss, det_dodgson, det_laplace, first_minor, signed_cofactor,
    DodgsonResult,
};
pub use error::{Error, Result};
pub use jacobi::{IdentityKind, IdentityReport, Selection, Witness};
pub use matrix::{augment_columns, submatrix_delete, IndexSet, Matrix};
pub use pfaffian::{AntisymmetricMatrix, Label};
pub use pluecker::SplitTerm;
pub use scalar::{parse_scalar, Scalar};
