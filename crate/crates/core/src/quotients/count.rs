//! Exact counting of homomorphisms to `S_n` by backtracking with relator
//! pruning. Counts include non-surjective homomorphisms: the invariant is
//! `|Hom(G, S_n)|`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::presentations::Presentation;
use crate::words::Word;

use super::{eval_word, Perm, QuotientError};

pub const DEFAULT_DEGREE_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCountReport {
    /// Display form of the presentation the count belongs to.
    pub presentation: String,
    pub degree: usize,
    pub total: u64,
    /// Optional breakdown by the tuple of image cycle types.
    pub by_class: Option<BTreeMap<String, u64>>,
}

/// Relators indexed by the largest generator they mention, so each can be
/// checked as soon as its generators are assigned.
fn relators_by_max_gen(p: &Presentation) -> Vec<Vec<&Word>> {
    let mut by_gen: Vec<Vec<&Word>> = vec![Vec::new(); p.rank()];
    for r in p.relators() {
        if let Some(g) = r.max_gen() {
            by_gen[g].push(r);
        }
    }
    by_gen
}

fn count_rec(
    by_gen: &[Vec<&Word>],
    perms: &[Perm],
    degree: usize,
    images: &mut Vec<Perm>,
    classes: Option<&mut BTreeMap<String, u64>>,
) -> u64 {
    let i = images.len();
    if i == by_gen.len() {
        if let Some(classes) = classes {
            let key = images
                .iter()
                .map(|p| {
                    format!(
                        "({})",
                        p.cycle_type()
                            .iter()
                            .map(|l| l.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
                .collect::<Vec<_>>()
                .join("");
            *classes.entry(key).or_insert(0) += 1;
        }
        return 1;
    }
    let mut total = 0;
    let mut classes = classes;
    for p in perms {
        images.push(p.clone());
        if by_gen[i]
            .iter()
            .all(|r| eval_word(images, degree, r).is_identity())
        {
            total += count_rec(by_gen, perms, degree, images, classes.as_deref_mut());
        }
        images.pop();
    }
    total
}

/// `|Hom(P, S_n)|`, deterministic backtracking in lexicographic image order.
pub fn count_homs(
    p: &Presentation,
    degree: usize,
    with_classes: bool,
) -> Result<HomCountReport, QuotientError> {
    count_homs_capped(p, degree, DEFAULT_DEGREE_CAP, with_classes)
}

pub fn count_homs_capped(
    p: &Presentation,
    degree: usize,
    cap: usize,
    with_classes: bool,
) -> Result<HomCountReport, QuotientError> {
    if degree > cap {
        return Err(QuotientError::DegreeTooLarge { degree, cap });
    }
    assert!(degree >= 1, "degree must be at least 1");
    let perms = Perm::all(degree);
    let by_gen = relators_by_max_gen(p);
    let mut classes = if with_classes {
        Some(BTreeMap::new())
    } else {
        None
    };
    let mut images = Vec::with_capacity(p.rank());
    let total = count_rec(&by_gen, &perms, degree, &mut images, classes.as_mut());
    Ok(HomCountReport {
        presentation: p.describe(),
        degree,
        total,
        by_class: classes,
    })
}

/// Same count, partitioned over the first generator's image and summed.
/// Aggregation is an integer sum, so the result is schedule-independent.
pub fn count_homs_partitioned(
    p: &Presentation,
    degree: usize,
) -> Result<u64, QuotientError> {
    if degree > DEFAULT_DEGREE_CAP {
        return Err(QuotientError::DegreeTooLarge {
            degree,
            cap: DEFAULT_DEGREE_CAP,
        });
    }
    let perms = Perm::all(degree);
    let by_gen = relators_by_max_gen(p);
    if by_gen.is_empty() {
        return Ok(1);
    }
    let total = perms
        .par_iter()
        .map(|first| {
            let mut images = vec![first.clone()];
            if by_gen[0]
                .iter()
                .all(|r| eval_word(&images, degree, r).is_identity())
            {
                count_rec(&by_gen, &perms, degree, &mut images, None)
            } else {
                0
            }
        })
        .sum();
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_group_counts_are_powers() {
        let f2 = Presentation::free(2);
        assert_eq!(count_homs(&f2, 3, false).unwrap().total, 36);
        let f1 = Presentation::free(1);
        assert_eq!(count_homs(&f1, 4, false).unwrap().total, 24);
    }

    #[test]
    fn involution_count_in_s3() {
        // identity plus three transpositions
        let p = Presentation::cyclic(2);
        assert_eq!(count_homs(&p, 3, false).unwrap().total, 4);
    }

    #[test]
    fn z2_star_z3_in_s3() {
        let p = Presentation::cyclic(2).free_product(&Presentation::cyclic(3));
        assert_eq!(count_homs(&p, 3, false).unwrap().total, 12);
    }

    #[test]
    fn partitioned_count_matches() {
        let p = Presentation::cyclic(2).free_product(&Presentation::cyclic(3));
        for n in 1..=4 {
            assert_eq!(
                count_homs(&p, n, false).unwrap().total,
                count_homs_partitioned(&p, n).unwrap()
            );
        }
    }

    #[test]
    fn class_breakdown_sums_to_total() {
        let p = Presentation::cyclic(2);
        let report = count_homs(&p, 3, true).unwrap();
        let sum: u64 = report.by_class.as_ref().unwrap().values().sum();
        assert_eq!(sum, report.total);
        assert_eq!(report.by_class.unwrap().len(), 2); // (1,1,1) and (2,1)
    }

    #[test]
    fn degree_cap_enforced() {
        let p = Presentation::free(1);
        assert!(matches!(
            count_homs(&p, 7, false),
            Err(QuotientError::DegreeTooLarge { .. })
        ));
    }
}
