//! Free-group words, substitution endomorphisms, group-ring elements, and
//! braid words with the Artin action.

mod braid;
mod endo;
mod groupring;
mod word;

pub use braid::{artin_automorphism, BraidWord};
pub use endo::FreeEndomorphism;
pub use groupring::GroupRingElem;
pub use word::Word;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter references generator {found} but only {rank} generators exist")]
    UnknownGenerator { found: usize, rank: usize },
    #[error("endomorphism has rank {endo_rank}, word uses generator {gen}")]
    RankMismatch { endo_rank: usize, gen: usize },
    #[error("braid generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i32, strands: usize },
}
