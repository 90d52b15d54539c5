//! Homomorphisms to symmetric groups given by generator images.

use crate::presentations::Presentation;
use crate::words::Word;

use super::{Perm, QuotientError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteHom {
    pub degree: usize,
    pub images: Vec<Perm>,
}

impl FiniteHom {
    pub fn new(degree: usize, images: Vec<Perm>) -> Result<Self, QuotientError> {
        for p in &images {
            if p.degree() != degree {
                return Err(QuotientError::DegreeMismatch(format!(
                    "image has degree {}, expected {degree}",
                    p.degree()
                )));
            }
        }
        Ok(FiniteHom { degree, images })
    }
}

/// Evaluate a word under generator images.
pub fn eval_word(images: &[Perm], degree: usize, w: &Word) -> Perm {
    let mut acc = Perm::identity(degree);
    for &l in w.letters() {
        let img = &images[l.unsigned_abs() as usize - 1];
        if l > 0 {
            acc = acc.compose(img);
        } else {
            acc = acc.compose(&img.inverse());
        }
    }
    acc
}

/// True iff every relator maps to the identity permutation.
pub fn verify_finite_hom(p: &Presentation, h: &FiniteHom) -> Result<bool, QuotientError> {
    if h.images.len() != p.rank() {
        return Err(QuotientError::DegreeMismatch(format!(
            "{} images for {} generators",
            h.images.len(),
            p.rank()
        )));
    }
    Ok(p.relators()
        .iter()
        .all(|r| eval_word(&h.images, h.degree, r).is_identity()))
}
