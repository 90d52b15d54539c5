//! Braid words and the Artin action on a free group.
//!
//! Convention: `sigma_i` maps `x_i -> x_i x_{i+1} x_i^-1`, `x_{i+1} -> x_i`,
//! fixing the other generators. A braid word acts left to right: the first
//! letter's automorphism is applied first.

use super::{FreeEndomorphism, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    /// `+k` for `sigma_k`, `-k` for its inverse; 1-based, `k < strands`.
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, WordError> {
        assert!(strands >= 1, "a braid needs at least one strand");
        for &l in &letters {
            let k = l.unsigned_abs() as usize;
            if l == 0 || k >= strands {
                return Err(WordError::IndexOutOfRange { index: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }
}

fn sigma(strands: usize, i: usize) -> FreeEndomorphism {
    let images = (0..strands)
        .map(|j| {
            if j == i - 1 {
                Word::gen(i - 1)
                    .concat(&Word::gen(i))
                    .concat(&Word::gen_inv(i - 1))
            } else if j == i {
                Word::gen(i - 1)
            } else {
                Word::gen(j)
            }
        })
        .collect();
    FreeEndomorphism::new(strands, images).unwrap()
}

fn sigma_inv(strands: usize, i: usize) -> FreeEndomorphism {
    let images = (0..strands)
        .map(|j| {
            if j == i - 1 {
                Word::gen(i)
            } else if j == i {
                Word::gen_inv(i)
                    .concat(&Word::gen(i - 1))
                    .concat(&Word::gen(i))
            } else {
                Word::gen(j)
            }
        })
        .collect();
    FreeEndomorphism::new(strands, images).unwrap()
}

/// The automorphism of `F_strands` induced by the braid word.
pub fn artin_automorphism(b: &BraidWord) -> FreeEndomorphism {
    let n = b.strands;
    let mut total = FreeEndomorphism::identity(n);
    for &l in &b.letters {
        let atom = if l > 0 {
            sigma(n, l as usize)
        } else {
            sigma_inv(n, (-l) as usize)
        };
        // left-to-right: the earlier letter acts first
        total = atom.compose(&total).unwrap();
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_braid_is_identity() {
        let b = BraidWord::new(3, vec![]).unwrap();
        assert!(artin_automorphism(&b).is_identity());
    }

    #[test]
    fn sigma1_definition() {
        let b = BraidWord::new(2, vec![1]).unwrap();
        let e = artin_automorphism(&b);
        assert_eq!(*e.image_of_gen(0), Word::from_letters([1, 2, -1]));
        assert_eq!(*e.image_of_gen(1), Word::gen(0));
    }

    #[test]
    fn sigma_inverse_pair() {
        let b = BraidWord::new(2, vec![1, -1]).unwrap();
        assert!(artin_automorphism(&b).is_identity());
        let b = BraidWord::new(4, vec![-2, 2]).unwrap();
        assert!(artin_automorphism(&b).is_identity());
    }

    #[test]
    fn sigma1_applied_twice() {
        let b = BraidWord::new(2, vec![1, 1]).unwrap();
        let e = artin_automorphism(&b);
        // x1 -> x1x2 x1 x2^-1 x1^-1
        assert_eq!(*e.image_of_gen(0), Word::from_letters([1, 2, 1, -2, -1]));
    }

    #[test]
    fn braid_relations_hold() {
        for n in 2..=6 {
            for i in 1..n - 1 {
                let lhs = BraidWord::new(n, vec![i as i32, i as i32 + 1, i as i32]).unwrap();
                let rhs = BraidWord::new(n, vec![i as i32 + 1, i as i32, i as i32 + 1]).unwrap();
                assert_eq!(artin_automorphism(&lhs), artin_automorphism(&rhs));
            }
            for i in 1..n {
                for j in i + 2..n {
                    let lhs = BraidWord::new(n, vec![i as i32, j as i32]).unwrap();
                    let rhs = BraidWord::new(n, vec![j as i32, i as i32]).unwrap();
                    assert_eq!(artin_automorphism(&lhs), artin_automorphism(&rhs));
                }
            }
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
    }
}
