//! Complete right-coset action of the generators, base coset 0.

use crate::presentations::Presentation;
use crate::words::Word;

use super::SubgroupError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    index: usize,
    /// `action[g][c]` is the coset `c * g`; each row is a permutation.
    action: Vec<Vec<usize>>,
    /// `inverse[g][c]` is the coset `c * g^-1`.
    inverse: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn new(action: Vec<Vec<usize>>) -> Result<Self, SubgroupError> {
        let index = action
            .first()
            .map(Vec::len)
            .ok_or_else(|| SubgroupError::InvalidTable("no generators".into()))?;
        if index == 0 {
            return Err(SubgroupError::InvalidTable("no cosets".into()));
        }
        let mut inverse = Vec::with_capacity(action.len());
        for (g, row) in action.iter().enumerate() {
            if row.len() != index {
                return Err(SubgroupError::InvalidTable(format!(
                    "generator {g} row has wrong length"
                )));
            }
            let mut inv = vec![usize::MAX; index];
            for (c, &d) in row.iter().enumerate() {
                if d >= index {
                    return Err(SubgroupError::InvalidTable(format!(
                        "coset {d} out of range"
                    )));
                }
                if inv[d] != usize::MAX {
                    return Err(SubgroupError::InvalidTable(format!(
                        "generator {g} row is not a permutation"
                    )));
                }
                inv[d] = c;
            }
            inverse.push(inv);
        }
        Ok(CosetTable {
            index,
            action,
            inverse,
        })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn ngens(&self) -> usize {
        self.action.len()
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    /// Apply one signed letter.
    pub fn step(&self, c: usize, letter: i32) -> usize {
        let g = letter.unsigned_abs() as usize - 1;
        if letter > 0 {
            self.action[g][c]
        } else {
            self.inverse[g][c]
        }
    }

    pub fn trace(&self, from: usize, w: &Word) -> usize {
        w.letters().iter().fold(from, |c, &l| self.step(c, l))
    }

    /// Full validation: generator count matches, every relator traces to the
    /// identity from every coset, subgroup generators fix the base coset.
    pub fn validate(
        &self,
        p: &Presentation,
        subgroup_gens: &[Word],
    ) -> Result<(), SubgroupError> {
        if self.ngens() != p.rank() {
            return Err(SubgroupError::InvalidTable(format!(
                "table has {} generators, presentation has {}",
                self.ngens(),
                p.rank()
            )));
        }
        for r in p.relators() {
            for c in 0..self.index {
                if self.trace(c, r) != c {
                    return Err(SubgroupError::InvalidTable(format!(
                        "relator `{}` does not stabilize coset {c}",
                        p.word_string(r)
                    )));
                }
            }
        }
        for w in subgroup_gens {
            if self.trace(0, w) != 0 {
                return Err(SubgroupError::InvalidTable(format!(
                    "subgroup generator `{}` moves the base coset",
                    p.word_string(w)
                )));
            }
        }
        Ok(())
    }
}
