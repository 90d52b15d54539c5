//! Cellular homology of the presentation 2-complex.
//!
//! One 0-cell, one 1-cell per generator, one 2-cell per relator. The
//! boundary of a 2-cell is the abelianized relator (the Fox row evaluated at
//! the trivial character, which is the exponent-sum vector), and `d_1 = 0`.

use crate::algebra::smith::smith_normal_form;
use crate::algebra::AbelianInvariants;
use crate::presentations::Presentation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub h1: AbelianInvariants,
    /// Always free: a 2-complex has no 3-cells.
    pub h2: AbelianInvariants,
    /// `1 - #gens + #relators`
    pub chi: i64,
    pub rank_d2: usize,
}

pub fn presentation_homology(p: &Presentation) -> HomologyReport {
    let (h1, h2, rank_d2) = match p.exponent_matrix() {
        None => (
            AbelianInvariants::free(p.rank()),
            AbelianInvariants::free(0),
            0,
        ),
        Some(m) => {
            let snf = smith_normal_form(&m);
            let rank = snf.rank();
            (
                snf.cokernel_invariants(p.rank()),
                AbelianInvariants::free(p.relators().len() - rank),
                rank,
            )
        }
    };
    let chi = 1 - p.rank() as i64 + p.relators().len() as i64;
    // Euler characteristic identity: chi = 1 - rank H1 + rank H2 (torsion
    // contributes to neither rank)
    debug_assert_eq!(
        chi,
        1 - h1.free_rank as i64 + h2.free_rank as i64
    );
    HomologyReport {
        h1,
        h2,
        chi,
        rank_d2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Word;
    use num_bigint::BigInt;

    #[test]
    fn cyclic_group_complex() {
        for d in 1..=4u32 {
            let p = Presentation::cyclic(d);
            let h = presentation_homology(&p);
            if d == 1 {
                // relator x reduces to a 2-cell killing the 1-cell
                assert_eq!(h.h1, AbelianInvariants::free(0));
            } else {
                assert_eq!(h.h1.torsion, vec![BigInt::from(d)]);
            }
            assert_eq!(h.h2, AbelianInvariants::free(0));
        }
    }

    #[test]
    fn torus_complex() {
        let p = Presentation::new(
            vec!["x".into(), "y".into()],
            vec![Word::commutator(&Word::gen(0), &Word::gen(1))],
        )
        .unwrap();
        let h = presentation_homology(&p);
        assert_eq!(h.h1, AbelianInvariants::free(2));
        assert_eq!(h.h2, AbelianInvariants::free(1));
        assert_eq!(h.chi, 0);
    }

    #[test]
    fn wedge_of_circles() {
        let p = Presentation::free(3);
        let h = presentation_homology(&p);
        assert_eq!(h.h1, AbelianInvariants::free(3));
        assert_eq!(h.h2, AbelianInvariants::free(0));
        assert_eq!(h.chi, -2);
    }

    #[test]
    fn rank_identity() {
        // rank H2 = #relators - rank d2 always
        let p = Presentation::new(
            vec!["x".into(), "y".into()],
            vec![
                Word::commutator(&Word::gen(0), &Word::gen(1)),
                Word::gen(0).pow(2),
                Word::gen(0).pow(4),
            ],
        )
        .unwrap();
        let h = presentation_homology(&p);
        assert_eq!(
            h.h2.free_rank,
            p.relators().len() - h.rank_d2
        );
    }
}
