//! Reidemeister–Schreier rewriting of a presentation to a finite-index
//! subgroup presentation.
//!
//! The Schreier transversal comes from a breadth-first search from the base
//! coset, walking positive generators in order and then their inverses, so
//! representatives are prefix-closed and canonical. Schreier generators for
//! tree edges are trivial and removed; the rest are named
//! `<parent-name>_<coset>` (cosets displayed 1-based) and tracked back to
//! parent-group words.

use crate::presentations::{tietze_simplify, Presentation, SimplifyOutcome, TietzeLimits};
use crate::words::Word;

use super::{CosetTable, SubgroupError};

/// Rewrites words of the subgroup into Schreier generators.
#[derive(Debug, Clone)]
pub struct SchreierRewriter {
    table: CosetTable,
    /// coset representatives, prefix-closed
    transversal: Vec<Word>,
    /// (coset, gen) -> Some(subgroup generator index) or None for tree edges
    edge_gen: Vec<Vec<Option<usize>>>,
    ngens_sub: usize,
}

impl SchreierRewriter {
    /// Trace `w` from the base coset, emitting one subgroup letter per
    /// non-tree edge. Errors if `w` is not in the subgroup.
    pub fn rewrite(&self, w: &Word) -> Result<Word, SubgroupError> {
        let mut letters: Vec<i32> = Vec::new();
        let mut c = 0usize;
        for &l in w.letters() {
            let g = l.unsigned_abs() as usize - 1;
            if l > 0 {
                if let Some(k) = self.edge_gen[c][g] {
                    letters.push(k as i32 + 1);
                }
                c = self.table.step(c, l);
            } else {
                let d = self.table.step(c, l);
                if let Some(k) = self.edge_gen[d][g] {
                    letters.push(-(k as i32 + 1));
                }
                c = d;
            }
        }
        if c != 0 {
            return Err(SubgroupError::NotInSubgroup);
        }
        Ok(Word::from_letters(letters))
    }

    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }
}

#[derive(Debug, Clone)]
pub struct RsOutput {
    /// Raw subgroup presentation: all rewritten relators from all cosets,
    /// trivial ones dropped (their count is still reflected in
    /// `raw_relator_count`).
    pub raw: Presentation,
    /// Parent-group word for each Schreier generator.
    pub generator_words: Vec<(String, Word)>,
    /// `index * relators(parent)`: includes relators that rewrote to the
    /// trivial word, for Euler-characteristic bookkeeping.
    pub raw_relator_count: usize,
    pub rewriter: SchreierRewriter,
    /// Tietze-simplified subgroup presentation with trace and verdict.
    pub simplified: SimplifyOutcome,
}

pub fn reidemeister_schreier(
    p: &Presentation,
    table: &CosetTable,
    limits: &TietzeLimits,
) -> Result<RsOutput, SubgroupError> {
    if table.ngens() != p.rank() {
        return Err(SubgroupError::InvalidTable(
            "table generator count differs from presentation".into(),
        ));
    }
    let n = table.index();

    // breadth-first Schreier transversal
    let mut transversal: Vec<Option<Word>> = vec![None; n];
    transversal[0] = Some(Word::identity());
    let mut tree: Vec<Vec<bool>> = vec![vec![false; p.rank()]; n]; // tree[c][g]: edge c --g--> c*g
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        let rep = transversal[c].clone().unwrap();
        let letters: Vec<i32> = (1..=p.rank() as i32).chain((1..=p.rank() as i32).map(|g| -g)).collect();
        for l in letters {
            let d = table.step(c, l);
            if transversal[d].is_none() {
                transversal[d] = Some(rep.concat(&Word::from_letters([l])));
                if l > 0 {
                    tree[c][l as usize - 1] = true;
                } else {
                    tree[d][(-l) as usize - 1] = true;
                }
                queue.push_back(d);
            }
        }
    }
    let transversal: Vec<Word> = transversal.into_iter().map(Option::unwrap).collect();

    // number the non-tree edges: generator-major, coset-minor
    let mut edge_gen: Vec<Vec<Option<usize>>> = vec![vec![None; p.rank()]; n];
    let mut generator_words: Vec<(String, Word)> = Vec::new();
    for g in 0..p.rank() {
        for c in 0..n {
            if tree[c][g] {
                continue;
            }
            let idx = generator_words.len();
            edge_gen[c][g] = Some(idx);
            let d = table.step(c, g as i32 + 1);
            let word = transversal[c]
                .concat(&Word::gen(g))
                .concat(&transversal[d].inverse());
            let name = format!("{}_{}", p.gens()[g], c + 1);
            generator_words.push((name, word));
        }
    }

    let rewriter = SchreierRewriter {
        table: table.clone(),
        transversal,
        edge_gen,
        ngens_sub: generator_words.len(),
    };

    // rewrite every relator from every coset
    let mut relators = Vec::new();
    for c in 0..n {
        for r in p.relators() {
            let conj = rewriter
                .rewrite_from(c, r)
                .expect("relators trace to the start coset");
            if !conj.is_empty() {
                relators.push(conj);
            }
        }
    }
    let raw_relator_count = n * p.relators().len();

    let names: Vec<String> = generator_words.iter().map(|(n, _)| n.clone()).collect();
    let raw = Presentation::new(names, relators)
        .map_err(|e| SubgroupError::InvalidTable(format!("bad subgroup presentation: {e}")))?;
    let simplified = tietze_simplify(&raw, limits);
    Ok(RsOutput {
        raw,
        generator_words,
        raw_relator_count,
        rewriter,
        simplified,
    })
}

impl SchreierRewriter {
    /// Rewrite a relator traced from coset `c` (used for building the
    /// subgroup presentation).
    fn rewrite_from(&self, start: usize, w: &Word) -> Result<Word, SubgroupError> {
        let mut letters: Vec<i32> = Vec::new();
        let mut c = start;
        for &l in w.letters() {
            let g = l.unsigned_abs() as usize - 1;
            if l > 0 {
                if let Some(k) = self.edge_gen[c][g] {
                    letters.push(k as i32 + 1);
                }
                c = self.table.step(c, l);
            } else {
                let d = self.table.step(c, l);
                if let Some(k) = self.edge_gen[d][g] {
                    letters.push(-(k as i32 + 1));
                }
                c = d;
            }
        }
        if c != start {
            return Err(SubgroupError::NotInSubgroup);
        }
        Ok(Word::from_letters(letters))
    }

    pub fn subgroup_rank(&self) -> usize {
        self.ngens_sub
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::Freeness;
    use crate::subgroups::{coset_table_from_cyclic_hom, kernel_rank_expected};

    fn pres(gens: &[&str], rels: Vec<Vec<i32>>) -> Presentation {
        Presentation::new(
            gens.iter().map(|s| s.to_string()).collect(),
            rels.into_iter().map(Word::from_letters).collect(),
        )
        .unwrap()
    }

    #[test]
    fn index_two_in_f2_is_free_of_rank_3() {
        // Nielsen-Schreier: n(r-1)+1 = 2*1+1
        let p = Presentation::free(2);
        let t = coset_table_from_cyclic_hom(&p, &[1, 0], 2).unwrap();
        let out = reidemeister_schreier(&p, &t, &TietzeLimits::default()).unwrap();
        assert_eq!(out.raw.rank(), 3);
        assert_eq!(out.simplified.verdict, Freeness::FreeOfRank(3));
    }

    #[test]
    fn nielsen_schreier_rank_for_free_groups() {
        for r in 1..=3usize {
            let p = Presentation::free(r);
            for n in 2..=12u64 {
                // map one generator to 1 mod n, the rest to 0: index n
                let mut images = vec![0u64; r];
                images[0] = 1;
                let t = coset_table_from_cyclic_hom(&p, &images, n).unwrap();
                let out = reidemeister_schreier(&p, &t, &TietzeLimits::default()).unwrap();
                let expect = n as usize * (r - 1) + 1;
                assert_eq!(out.raw.rank(), expect);
                assert_eq!(out.simplified.verdict, Freeness::FreeOfRank(expect));
            }
        }
    }

    #[test]
    fn z2_star_z3_kernel_rank_two() {
        let p = pres(&["a", "b"], vec![vec![1, 1], vec![2, 2, 2]]);
        let t = coset_table_from_cyclic_hom(&p, &[3, 2], 6).unwrap();
        let out = reidemeister_schreier(&p, &t, &TietzeLimits::default()).unwrap();
        assert_eq!(
            out.simplified.verdict,
            Freeness::FreeOfRank(kernel_rank_expected(0, 2, 3).unwrap() as usize)
        );
    }

    #[test]
    fn euler_characteristic_scales_with_index() {
        let p = pres(&["a", "b"], vec![vec![1, 1], vec![2, 2, 2]]);
        let t = coset_table_from_cyclic_hom(&p, &[3, 2], 6).unwrap();
        let out = reidemeister_schreier(&p, &t, &TietzeLimits::default()).unwrap();
        let chi_parent = 1 - p.rank() as i64 + p.relators().len() as i64;
        let chi_sub = 1 - out.generator_words.len() as i64 + out.raw_relator_count as i64;
        assert_eq!(chi_sub, t.index() as i64 * chi_parent);
    }

    #[test]
    fn rewriter_handles_subgroup_words() {
        let p = Presentation::free(2);
        let t = coset_table_from_cyclic_hom(&p, &[1, 0], 2).unwrap();
        let out = reidemeister_schreier(&p, &t, &TietzeLimits::default()).unwrap();
        // x^2 is in the kernel; y is too
        assert!(out.rewriter.rewrite(&Word::from_letters([1, 1])).is_ok());
        assert!(out.rewriter.rewrite(&Word::gen(1)).is_ok());
        // x is not
        assert!(matches!(
            out.rewriter.rewrite(&Word::gen(0)),
            Err(SubgroupError::NotInSubgroup)
        ));
    }

    #[test]
    fn generator_words_lie_in_subgroup_and_rewrite_to_themselves() {
        let p = pres(&["a", "b"], vec![vec![1, 1], vec![2, 2, 2]]);
        let t = coset_table_from_cyclic_hom(&p, &[3, 2], 6).unwrap();
        let out = reidemeister_schreier(&p, &t, &TietzeLimits::default()).unwrap();
        for (k, (_, w)) in out.generator_words.iter().enumerate() {
            assert_eq!(t.trace(0, w), 0);
            assert_eq!(
                out.rewriter.rewrite(w).unwrap(),
                Word::gen(k),
                "generator {k} should rewrite to itself"
            );
        }
    }
}
