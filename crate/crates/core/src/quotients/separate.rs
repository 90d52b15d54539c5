//! Search for a homomorphism separating two words.

use crate::presentations::Presentation;
use crate::words::Word;

use super::count::DEFAULT_DEGREE_CAP;
use super::{eval_word, FiniteHom, Perm, QuotientError};

/// First verified homomorphism to `S_degree` (in the canonical backtracking
/// order) with different images for `a` and `b`; `None` when none exists at
/// this degree.
pub fn find_separating_hom(
    p: &Presentation,
    a: &Word,
    b: &Word,
    degree: usize,
) -> Result<Option<FiniteHom>, QuotientError> {
    find_separating_hom_capped(p, a, b, degree, DEFAULT_DEGREE_CAP)
}

pub fn find_separating_hom_capped(
    p: &Presentation,
    a: &Word,
    b: &Word,
    degree: usize,
    cap: usize,
) -> Result<Option<FiniteHom>, QuotientError> {
    if degree > cap {
        return Err(QuotientError::DegreeTooLarge { degree, cap });
    }
    for w in [a, b] {
        if let Some(g) = w.max_gen() {
            if g >= p.rank() {
                return Err(QuotientError::UnknownGenerator {
                    found: g + 1,
                    rank: p.rank(),
                });
            }
        }
    }
    let perms = Perm::all(degree);
    let mut by_gen: Vec<Vec<&Word>> = vec![Vec::new(); p.rank()];
    for r in p.relators() {
        if let Some(g) = r.max_gen() {
            by_gen[g].push(r);
        }
    }
    let mut images: Vec<Perm> = Vec::with_capacity(p.rank());
    let found = search(&by_gen, &perms, degree, a, b, &mut images);
    Ok(found.map(|images| FiniteHom { degree, images }))
}

fn search(
    by_gen: &[Vec<&Word>],
    perms: &[Perm],
    degree: usize,
    a: &Word,
    b: &Word,
    images: &mut Vec<Perm>,
) -> Option<Vec<Perm>> {
    let i = images.len();
    if i == by_gen.len() {
        if eval_word(images, degree, a) != eval_word(images, degree, b) {
            return Some(images.clone());
        }
        return None;
    }
    for p in perms {
        images.push(p.clone());
        if by_gen[i]
            .iter()
            .all(|r| eval_word(images, degree, r).is_identity())
        {
            if let Some(hit) = search(by_gen, perms, degree, a, b, images) {
                return Some(hit);
            }
        }
        images.pop();
    }
    None
}
