//! Fox calculus, Alexander matrices, elementary-ideal gcds, and twisted
//! Alexander polynomials via Wada's minors method.

mod elementary;
mod fox;
mod rep;
mod wada;

pub use elementary::{alexander_poly_gcds, one_variable_eps, AlexanderGcds};
pub use fox::{fox_derivative, fox_matrix, FoxMatrix};
pub use rep::{
    resolve_representation, ConventionChoice, ConventionReport, RepTemplate, Representation,
    SymEntry, SymTerm, VerifyReport,
};
pub use wada::{twisted_alexander_wada, DeleteChoice, WadaResult};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("word references generator {found} but the presentation has {rank}")]
    UnknownGenerator { found: usize, rank: usize },
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("generator image is not invertible")]
    NotInvertible,
    #[error("representation does not verify: relator `{relator}` fails the matrix check")]
    RepresentationNotVerified { relator: String },
    #[error("relator `{relator}` has nonzero grading sum {sum:?}")]
    InconsistentGrading { relator: String, sum: (i64, i64) },
    #[error("no generator with det(Phi(x_j) - I) != 0")]
    NoDeletableGenerator,
    #[error("no convention assignment makes the representation verify")]
    NoConsistentConvention,
}
