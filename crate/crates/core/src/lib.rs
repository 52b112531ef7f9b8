//! Exact computer algebra for `U_q(A_N)` and `U_q(G_2)`: scalars in `Q(v)` (optionally
//! with one square root), noncommutative expressions with their Hopf maps, matrix
//! representations, the Drinfeld pairing, truncated universal R-matrices and the
//! `L^±` operators, together with checks of the identities relating them.

pub mod lops;
pub mod matrix;
pub mod report;
pub mod ncalg;
pub mod pairing;
pub mod reps;
pub mod rmatrix;
pub mod scalar;

use thiserror::Error;

pub use matrix::SparseMatrix;
pub use ncalg::{Algebra, CartanType, Letter, Monomial, NcExpr, TensorExpr};
pub use scalar::{PointValue, Rational, Scalar, ScalarError, ScalarSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("not representable: {0}")]
    NotRepresentable(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("operands belong to different algebras or representations")]
    ContextMismatch,
    #[error("word mixes e and f letters")]
    MixedWord,
    #[error("truncation height too low: missing weight {0:?}")]
    MissingBeta(Vec<i64>),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Parse(String),
}
