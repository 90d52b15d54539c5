//! Finitely presented groups: constructors, Tietze simplification,
//! abelianization, quotients, and a bounded relator-consequence checker.

mod consequence;
mod orbifold;
mod presentation;
mod tietze;

pub use consequence::{
    consequence_check_bounded, verify_certificate, ConsequenceCertificate, ConsequenceFactor,
    ConsequenceOutcome,
};
pub use orbifold::{orbifold_presentation, OrbifoldSignature};
pub use presentation::Presentation;
pub use tietze::{tietze_simplify, Freeness, SimplifyOutcome, TietzeLimits, TietzeMove, TietzeTrace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("word references generator {found} but the presentation has {rank}")]
    UnknownGenerator { found: usize, rank: usize },
    #[error("cone order {0} is smaller than 2")]
    BadConeOrder(u32),
}
