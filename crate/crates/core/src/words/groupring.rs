//! Elements of the integral group ring of a free group.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Word;

/// Finite formal `Z`-linear combination of reduced words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElem {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        GroupRingElem::default()
    }

    pub fn one() -> Self {
        GroupRingElem::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::from(1));
        GroupRingElem { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, BigInt)>) -> Self {
        let mut out = GroupRingElem::zero();
        for (w, c) in terms {
            out.add_term(w, &c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, w: Word, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            None => {
                self.terms.insert(w, c.clone());
            }
            Some(prev) => {
                let s = prev + c;
                if !s.is_zero() {
                    self.terms.insert(w, s);
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElem {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Convolution product with free reduction of the words.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = GroupRingElem::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }

    /// Left-multiply by a single word.
    pub fn word_mul(w: &Word, e: &Self) -> Self {
        let mut out = GroupRingElem::zero();
        for (u, c) in &e.terms {
            out.add_term(w.concat(u), c);
        }
        out
    }
}
