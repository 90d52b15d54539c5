//! Bounded search for expressing a word as a product of conjugated relators.
//!
//! A returned certificate is verifiable by free reduction alone; the search
//! never reports a false positive because every candidate is an explicit
//! product compared against the target word.

use std::collections::BTreeMap;

use crate::words::Word;

use super::{Presentation, PresentationError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequenceFactor {
    pub conjugator: Word,
    pub relator_index: usize,
    pub inverted: bool,
}

impl ConsequenceFactor {
    pub fn value(&self, p: &Presentation) -> Word {
        let r = &p.relators()[self.relator_index];
        let base = if self.inverted { r.inverse() } else { r.clone() };
        base.conjugate(&self.conjugator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequenceCertificate {
    pub factors: Vec<ConsequenceFactor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConsequenceOutcome {
    Witness(ConsequenceCertificate),
    Inconclusive,
}

/// Re-verify a certificate with nothing but free reduction.
pub fn verify_certificate(
    p: &Presentation,
    w: &Word,
    cert: &ConsequenceCertificate,
) -> bool {
    let mut prod = Word::identity();
    for f in &cert.factors {
        if f.relator_index >= p.relators().len() {
            return false;
        }
        prod = prod.concat(&f.value(p));
    }
    prod == *w
}

/// Breadth-first search over products of at most `depth` conjugated relators
/// with conjugating words of length at most `width`.
pub fn consequence_check_bounded(
    p: &Presentation,
    w: &Word,
    depth: usize,
    width: usize,
) -> Result<ConsequenceOutcome, PresentationError> {
    if let Some(g) = w.max_gen() {
        if g >= p.rank() {
            return Err(PresentationError::UnknownGenerator {
                found: g + 1,
                rank: p.rank(),
            });
        }
    }
    if w.is_identity() {
        return Ok(ConsequenceOutcome::Witness(ConsequenceCertificate {
            factors: vec![],
        }));
    }
    if p.relators().is_empty() {
        return Ok(ConsequenceOutcome::Inconclusive);
    }

    const STATE_CAP: usize = 200_000;

    // atoms in canonical order, deduplicated by value
    let mut atoms: Vec<(Word, ConsequenceFactor)> = Vec::new();
    let mut seen = BTreeMap::new();
    for u in reduced_words_up_to(p.rank(), width) {
        for ri in 0..p.relators().len() {
            for inverted in [false, true] {
                let f = ConsequenceFactor {
                    conjugator: u.clone(),
                    relator_index: ri,
                    inverted,
                };
                let v = f.value(p);
                if v.is_empty() || seen.contains_key(&v) {
                    continue;
                }
                seen.insert(v.clone(), ());
                atoms.push((v, f));
            }
        }
    }
    let max_atom_len = atoms.iter().map(|(v, _)| v.len()).max().unwrap_or(0);

    let mut frontier: BTreeMap<Word, Vec<ConsequenceFactor>> = BTreeMap::new();
    frontier.insert(Word::identity(), vec![]);
    for level in 1..=depth {
        let remaining = depth - level;
        let mut next: BTreeMap<Word, Vec<ConsequenceFactor>> = BTreeMap::new();
        for (state, factors) in &frontier {
            for (v, f) in &atoms {
                let prod = state.concat(v);
                // cannot shrink to the target length in the remaining steps
                if prod.len() > w.len() + remaining * max_atom_len {
                    continue;
                }
                if prod == *w {
                    let mut fs = factors.clone();
                    fs.push(f.clone());
                    let cert = ConsequenceCertificate { factors: fs };
                    debug_assert!(verify_certificate(p, w, &cert));
                    return Ok(ConsequenceOutcome::Witness(cert));
                }
                if !next.contains_key(&prod) && next.len() < STATE_CAP {
                    let mut fs = factors.clone();
                    fs.push(f.clone());
                    next.insert(prod, fs);
                }
            }
        }
        frontier = next;
    }
    Ok(ConsequenceOutcome::Inconclusive)
}

/// All freely reduced words of length <= maxlen, shortest first, letters
/// ordered `x1 < x1^-1 < x2 < x2^-1 < ...`.
fn reduced_words_up_to(rank: usize, maxlen: usize) -> Vec<Word> {
    let letters: Vec<i32> = (1..=rank as i32).flat_map(|g| [g, -g]).collect();
    let mut out = vec![Word::identity()];
    let mut level: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..maxlen {
        let mut next_level = Vec::new();
        for base in &level {
            for &l in &letters {
                if base.last() == Some(&-l) {
                    continue;
                }
                let mut v = base.clone();
                v.push(l);
                out.push(Word::from_letters(v.iter().copied()));
                next_level.push(v);
            }
        }
        level = next_level;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(gens: &[&str], rels: Vec<Vec<i32>>) -> Presentation {
        Presentation::new(
            gens.iter().map(|s| s.to_string()).collect(),
            rels.into_iter().map(Word::from_letters).collect(),
        )
        .unwrap()
    }

    #[test]
    fn empty_word_has_empty_witness() {
        let p = pres(&["x"], vec![vec![1, 1]]);
        match consequence_check_bounded(&p, &Word::identity(), 3, 2).unwrap() {
            ConsequenceOutcome::Witness(c) => {
                assert!(c.factors.is_empty());
                assert!(verify_certificate(&p, &Word::identity(), &c));
            }
            _ => panic!("expected witness"),
        }
    }

    #[test]
    fn free_group_has_no_consequences() {
        let p = Presentation::free(2);
        let w = Word::commutator(&Word::gen(0), &Word::gen(1));
        assert_eq!(
            consequence_check_bounded(&p, &w, 4, 3).unwrap(),
            ConsequenceOutcome::Inconclusive
        );
    }

    #[test]
    fn relator_itself_found_at_depth_one() {
        let p = pres(&["x", "y"], vec![vec![1, 2, -1, -2]]);
        let w = Word::from_letters([1, 2, -1, -2]);
        match consequence_check_bounded(&p, &w, 2, 1).unwrap() {
            ConsequenceOutcome::Witness(c) => {
                assert_eq!(c.factors.len(), 1);
                assert!(c.factors[0].conjugator.is_empty());
                assert!(verify_certificate(&p, &w, &c));
            }
            _ => panic!("expected witness"),
        }
    }

    #[test]
    fn conjugated_relator_found() {
        let p = pres(&["x", "y"], vec![vec![1, 1, 1]]);
        let w = Word::from_letters([2, 1, 1, 1, -2]);
        match consequence_check_bounded(&p, &w, 2, 1).unwrap() {
            ConsequenceOutcome::Witness(c) => {
                assert!(verify_certificate(&p, &w, &c));
            }
            _ => panic!("expected witness"),
        }
    }

    #[test]
    fn product_of_two_relators() {
        let p = pres(&["x", "y"], vec![vec![1, 1], vec![2, 2]]);
        let w = Word::from_letters([1, 1, 2, 2]);
        match consequence_check_bounded(&p, &w, 2, 0).unwrap() {
            ConsequenceOutcome::Witness(c) => {
                assert_eq!(c.factors.len(), 2);
                assert!(verify_certificate(&p, &w, &c));
            }
            _ => panic!("expected witness"),
        }
    }

    #[test]
    fn certificate_tampering_fails_verification() {
        let p = pres(&["x"], vec![vec![1, 1]]);
        let w = Word::from_letters([1, 1]);
        let bogus = ConsequenceCertificate {
            factors: vec![ConsequenceFactor {
                conjugator: Word::gen(0),
                relator_index: 0,
                inverted: true,
            }],
        };
        assert!(!verify_certificate(&p, &w, &bogus));
    }
}
