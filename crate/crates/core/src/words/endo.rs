//! Endomorphisms of a free group given by generator images.

use super::{Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeEndomorphism {
    rank: usize,
    images: Vec<Word>,
}

impl FreeEndomorphism {
    pub fn new(rank: usize, images: Vec<Word>) -> Result<Self, WordError> {
        assert_eq!(images.len(), rank, "one image word per generator");
        for w in &images {
            w.check_rank(rank)?;
        }
        Ok(FreeEndomorphism { rank, images })
    }

    pub fn identity(rank: usize) -> Self {
        FreeEndomorphism {
            rank,
            images: (0..rank).map(Word::gen).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image_of_gen(&self, idx: usize) -> &Word {
        &self.images[idx]
    }

    /// Substitute generator images into `w` and reduce.
    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        if let Some(g) = w.max_gen() {
            if g >= self.rank {
                return Err(WordError::RankMismatch {
                    endo_rank: self.rank,
                    gen: g + 1,
                });
            }
        }
        let mut letters: Vec<i32> = Vec::with_capacity(w.len() * 2);
        for &l in w.letters() {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                letters.extend_from_slice(img.letters());
            } else {
                letters.extend(img.letters().iter().rev().map(|x| -x));
            }
        }
        Ok(Word::from_letters(letters))
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self, WordError> {
        assert_eq!(self.rank, other.rank, "composing endomorphisms of different rank");
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>, _>>()?;
        FreeEndomorphism::new(self.rank, images)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| *w == Word::gen(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_fixes_words() {
        let e = FreeEndomorphism::identity(3);
        let w = Word::from_letters([1, -2, 3, 3]);
        assert_eq!(e.apply(&w).unwrap(), w);
    }

    #[test]
    fn substitution() {
        // x -> xy, y -> y applied to x^2 gives xyxy
        let e = FreeEndomorphism::new(2, vec![Word::from_letters([1, 2]), Word::gen(1)]).unwrap();
        assert_eq!(
            e.apply(&Word::from_letters([1, 1])).unwrap(),
            Word::from_letters([1, 2, 1, 2])
        );
    }

    #[test]
    fn composition_convention() {
        // (e ∘ f)(x) = e(f(x))
        let e = FreeEndomorphism::new(2, vec![Word::from_letters([1, 2]), Word::gen(1)]).unwrap();
        let f = FreeEndomorphism::new(2, vec![Word::gen_inv(1), Word::gen(0)]).unwrap();
        let ef = e.compose(&f).unwrap();
        let w = Word::gen(0);
        assert_eq!(
            ef.apply(&w).unwrap(),
            e.apply(&f.apply(&w).unwrap()).unwrap()
        );
    }

    #[test]
    fn rank_mismatch_reported() {
        let e = FreeEndomorphism::identity(2);
        assert_eq!(
            e.apply(&Word::gen(5)),
            Err(WordError::RankMismatch { endo_rank: 2, gen: 6 })
        );
    }
}
