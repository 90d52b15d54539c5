//! Freely reduced words.
//!
//! Letters are nonzero `i32`s: `k > 0` is the (k-1)-th generator, `-k` its
//! inverse. Generator names live with presentations, not here.

use super::WordError;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Free reduction of a raw letter sequence. Idempotent; zero letters are
    /// rejected by debug assertion.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            debug_assert!(l != 0, "letter 0 is not a generator");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// The single-letter word for generator index `idx` (0-based).
    pub fn gen(idx: usize) -> Self {
        Word(vec![idx as i32 + 1])
    }

    pub fn gen_inv(idx: usize) -> Self {
        Word(vec![-(idx as i32 + 1)])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn concat(&self, rhs: &Self) -> Self {
        Word::from_letters(self.0.iter().chain(rhs.0.iter()).copied())
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `[a, b] = a b a^-1 b^-1` (the toolkit-wide convention).
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// `u w u^-1`
    pub fn conjugate(&self, by: &Self) -> Self {
        by.concat(self).concat(&by.inverse())
    }

    /// Remove cancelling prefix/suffix pairs: the cyclic word representative.
    pub fn cyclically_reduce(&self) -> Self {
        let mut v = self.0.clone();
        while v.len() >= 2 && *v.first().unwrap() == -*v.last().unwrap() {
            v.pop();
            v.remove(0);
        }
        Word(v)
    }

    /// Largest 0-based generator index used, if any.
    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.unsigned_abs() as usize - 1).max()
    }

    pub fn check_rank(&self, rank: usize) -> Result<(), WordError> {
        match self.max_gen() {
            Some(g) if g >= rank => Err(WordError::UnknownGenerator {
                found: g + 1,
                rank,
            }),
            _ => Ok(()),
        }
    }

    /// Net exponent of generator `idx` (0-based).
    pub fn exponent_sum(&self, idx: usize) -> i64 {
        let g = idx as i32 + 1;
        self.0
            .iter()
            .map(|&l| {
                if l == g {
                    1
                } else if l == -g {
                    -1
                } else {
                    0
                }
            })
            .sum()
    }

    /// Replace every occurrence of generator `idx` by `image` (and inverses by
    /// the inverse image), reducing the result.
    pub fn substitute(&self, idx: usize, image: &Word) -> Self {
        let g = idx as i32 + 1;
        let inv = image.inverse();
        let mut letters = Vec::with_capacity(self.len());
        for &l in &self.0 {
            if l == g {
                letters.extend_from_slice(image.letters());
            } else if l == -g {
                letters.extend_from_slice(inv.letters());
            } else {
                letters.push(l);
            }
        }
        Word::from_letters(letters)
    }

    /// Number of letters (either sign) of generator `idx`.
    pub fn occurrences(&self, idx: usize) -> usize {
        let g = idx as i32 + 1;
        self.0.iter().filter(|&&l| l == g || l == -g).count()
    }

    /// Lexicographically least rotation among all rotations of the word and
    /// of its inverse: a canonical form for relators up to cyclic rotation
    /// and inversion.
    pub fn canonical_cyclic(&self) -> Word {
        let w = self.cyclically_reduce();
        if w.is_empty() {
            return w;
        }
        let mut best: Option<Vec<i32>> = None;
        for cand in [w.clone(), w.inverse()] {
            let n = cand.0.len();
            for s in 0..n {
                let rot: Vec<i32> = (0..n).map(|i| cand.0[(s + i) % n]).collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        Word(best.unwrap())
    }

    /// Drop generator indices according to `map` (new 0-based index or None
    /// if the generator was removed; removed generators must not occur).
    pub fn renumber(&self, map: &[Option<usize>]) -> Word {
        Word(
            self.0
                .iter()
                .map(|&l| {
                    let idx = l.unsigned_abs() as usize - 1;
                    let new = map[idx].expect("renumbered generator still occurs") as i32 + 1;
                    if l > 0 {
                        new
                    } else {
                        -new
                    }
                })
                .collect(),
        )
    }
}

impl FromIterator<i32> for Word {
    fn from_iter<T: IntoIterator<Item = i32>>(iter: T) -> Self {
        Word::from_letters(iter)
    }
}
