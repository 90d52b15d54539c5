//! Coset tables from explicit homomorphisms onto finite groups.
//!
//! Cosets are the elements of the image subgroup, numbered in breadth-first
//! order from the identity; the table is the right-translation action and the
//! kernel is the stabilizer of the identity coset.

use std::collections::BTreeMap;

use crate::presentations::Presentation;
use crate::quotients::{eval_word, Perm};

use super::{CosetTable, SubgroupError};

/// Table for the kernel of the map sending generator `i` to `images[i]` in a
/// symmetric group. Images are verified against the relators first.
pub fn coset_table_from_perm_hom(
    p: &Presentation,
    images: &[Perm],
) -> Result<CosetTable, SubgroupError> {
    if images.len() != p.rank() {
        return Err(SubgroupError::DegreeMismatch(format!(
            "{} images for {} generators",
            images.len(),
            p.rank()
        )));
    }
    let degree = images.first().map(Perm::degree).unwrap_or(1);
    if images.iter().any(|q| q.degree() != degree) {
        return Err(SubgroupError::DegreeMismatch(
            "images act on different degrees".into(),
        ));
    }
    for r in p.relators() {
        if !eval_word(images, degree, r).is_identity() {
            return Err(SubgroupError::NotAHomomorphism {
                relator: p.word_string(r),
            });
        }
    }

    // breadth-first closure of the image subgroup
    let identity = Perm::identity(degree);
    let mut number: BTreeMap<Perm, usize> = BTreeMap::new();
    let mut elements: Vec<Perm> = vec![identity.clone()];
    number.insert(identity, 0);
    let mut head = 0;
    while head < elements.len() {
        let e = elements[head].clone();
        head += 1;
        for img in images {
            let f = e.compose(img);
            if !number.contains_key(&f) {
                number.insert(f.clone(), elements.len());
                elements.push(f);
            }
        }
    }

    let n = elements.len();
    let mut action = vec![vec![0usize; n]; p.rank()];
    for (c, e) in elements.iter().enumerate() {
        for (g, img) in images.iter().enumerate() {
            action[g][c] = number[&e.compose(img)];
        }
    }
    let table = CosetTable::new(action)?;
    table.validate(p, &[])?;
    Ok(table)
}

/// Table for the kernel of the map to `Z_modulus` sending generator `i` to
/// `images[i]`. Reduces to the permutation case via translations.
pub fn coset_table_from_cyclic_hom(
    p: &Presentation,
    images: &[u64],
    modulus: u64,
) -> Result<CosetTable, SubgroupError> {
    assert!(modulus >= 1, "modulus must be positive");
    let m = modulus as usize;
    let perms: Vec<Perm> = images
        .iter()
        .map(|&k| {
            Perm::from_images((0..m).map(|c| (c + k as usize) % m).collect())
                .expect("translation is a permutation")
        })
        .collect();
    coset_table_from_perm_hom(p, &perms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Word;

    fn pres(gens: &[&str], rels: Vec<Vec<i32>>) -> Presentation {
        Presentation::new(
            gens.iter().map(|s| s.to_string()).collect(),
            rels.into_iter().map(Word::from_letters).collect(),
        )
        .unwrap()
    }

    #[test]
    fn all_identity_gives_index_one() {
        let p = pres(&["x", "y"], vec![vec![1, 2, -1, -2]]);
        let t = coset_table_from_perm_hom(&p, &[Perm::identity(3), Perm::identity(3)]).unwrap();
        assert_eq!(t.index(), 1);
    }

    #[test]
    fn z2_star_z3_onto_z6() {
        // a -> 3, b -> 2 generates all of Z6: index 6
        let p = pres(&["a", "b"], vec![vec![1, 1], vec![2, 2, 2]]);
        let t = coset_table_from_cyclic_hom(&p, &[3, 2], 6).unwrap();
        assert_eq!(t.index(), 6);
    }

    #[test]
    fn image_subgroup_can_be_proper() {
        // F1 -> Z6 by x -> 2 lands in the order-3 subgroup: index 3
        let p = Presentation::free(1);
        let t = coset_table_from_cyclic_hom(&p, &[2], 6).unwrap();
        assert_eq!(t.index(), 3);
    }

    #[test]
    fn non_homomorphism_rejected_with_relator() {
        let p = Presentation::cyclic(2);
        let err =
            coset_table_from_cyclic_hom(&p, &[1], 3).expect_err("x^2 does not map to 0 mod 3");
        assert!(matches!(err, SubgroupError::NotAHomomorphism { .. }));
    }

    #[test]
    fn parity_kernel_of_free_group() {
        let p = Presentation::free(2);
        let t = coset_table_from_cyclic_hom(&p, &[1, 0], 2).unwrap();
        assert_eq!(t.index(), 2);
        assert_eq!(t.trace(0, &Word::gen(0)), 1);
        assert_eq!(t.trace(0, &Word::gen(1)), 0);
    }
}
