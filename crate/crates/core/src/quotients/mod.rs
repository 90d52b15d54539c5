//! Homomorphisms into small symmetric groups: verification, exact counting,
//! and separating-homomorphism search.

mod count;
mod hom;
mod perm;
mod separate;

pub use count::{count_homs, count_homs_partitioned, HomCountReport, DEFAULT_DEGREE_CAP};
pub use hom::{eval_word, verify_finite_hom, FiniteHom};
pub use perm::Perm;
pub use separate::find_separating_hom;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("word references generator {found} but the presentation has {rank}")]
    UnknownGenerator { found: usize, rank: usize },
}
