//! Presentations: named generators plus cyclically reduced relators.

use num_bigint::BigInt;

use crate::algebra::matrix::Mat;
use crate::algebra::smith::smith_normal_form;
use crate::algebra::AbelianInvariants;
use crate::words::Word;

use super::PresentationError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    gens: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Relators are freely and cyclically reduced; trivial ones are dropped.
    pub fn new(
        gens: Vec<String>,
        relators: Vec<Word>,
    ) -> Result<Self, PresentationError> {
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].contains(g) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        let rank = gens.len();
        let mut reduced = Vec::with_capacity(relators.len());
        for r in relators {
            if let Some(g) = r.max_gen() {
                if g >= rank {
                    return Err(PresentationError::UnknownGenerator {
                        found: g + 1,
                        rank,
                    });
                }
            }
            let r = r.cyclically_reduce();
            if !r.is_empty() {
                reduced.push(r);
            }
        }
        Ok(Presentation {
            gens,
            relators: reduced,
        })
    }

    /// Free group on `x1..xn`.
    pub fn free(rank: usize) -> Self {
        Presentation {
            gens: (1..=rank).map(|i| format!("x{i}")).collect(),
            relators: Vec::new(),
        }
    }

    /// Cyclic group `<a | a^d>`.
    pub fn cyclic(d: u32) -> Self {
        Presentation {
            gens: vec!["a".to_string()],
            relators: if d == 0 {
                vec![]
            } else {
                vec![Word::gen(0).pow(d as i32)]
            },
        }
    }

    pub fn gens(&self) -> &[String] {
        &self.gens
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    /// Total relator length, the size measure used by simplification limits.
    pub fn total_relator_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    /// Relator-by-generator matrix of exponent sums (the boundary map of the
    /// presentation 2-complex). `None` when there are no relators.
    pub fn exponent_matrix(&self) -> Option<Mat<BigInt>> {
        if self.relators.is_empty() || self.gens.is_empty() {
            return None;
        }
        Some(Mat::from_rows(
            self.relators
                .iter()
                .map(|r| {
                    (0..self.rank())
                        .map(|j| BigInt::from(r.exponent_sum(j)))
                        .collect()
                })
                .collect(),
        ))
    }

    /// Smith normal form of the exponent-sum matrix.
    pub fn abelianization(&self) -> AbelianInvariants {
        match self.exponent_matrix() {
            None => AbelianInvariants::free(self.rank()),
            Some(m) => smith_normal_form(&m).cokernel_invariants(self.rank()),
        }
    }

    /// Append extra relators (the normal closure quotient) and re-reduce.
    pub fn quotient_by_normal_closure(
        &self,
        extra: &[Word],
    ) -> Result<Presentation, PresentationError> {
        let mut relators = self.relators.clone();
        relators.extend(extra.iter().cloned());
        Presentation::new(self.gens.clone(), relators)
    }

    /// Disjoint union of generators and relators; clashing names from `other`
    /// get a numeric suffix.
    pub fn free_product(&self, other: &Presentation) -> Presentation {
        let mut gens = self.gens.clone();
        for g in &other.gens {
            let mut name = g.clone();
            let mut k = 1;
            while gens.contains(&name) {
                k += 1;
                name = format!("{g}_{k}");
            }
            gens.push(name);
        }
        let shift = self.rank();
        let mut relators = self.relators.clone();
        for r in &other.relators {
            relators.push(Word::from_letters(r.letters().iter().map(|&l| {
                if l > 0 {
                    l + shift as i32
                } else {
                    l - shift as i32
                }
            })));
        }
        Presentation { gens, relators }
    }

    /// Parse-friendly display: `<gens | relators>` with 1-letter rendering.
    pub fn describe(&self) -> String {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| self.word_string(r))
            .collect();
        format!("< {} | {} >", self.gens.join(" "), rels.join(", "))
    }

    /// Render a word over this presentation's generator names.
    pub fn word_string(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let letters = w.letters();
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == l {
                run += 1;
            }
            let name = &self.gens[l.unsigned_abs() as usize - 1];
            let exp = if l > 0 { run as i64 } else { -(run as i64) };
            if exp == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{exp}"));
            }
            i += run;
        }
        parts.join(" ")
    }
}
