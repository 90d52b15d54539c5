//! Mapping-torus CW presentations for fibered complements.

use crate::presentations::Presentation;
use crate::words::{FreeEndomorphism, Word};

use super::TopologyError;

/// Monodromy data: `loops` meridian loops acting on a fiber free group of
/// rank `fiber_rank` by substitution endomorphisms.
#[derive(Debug, Clone)]
pub struct MonodromyData {
    fiber_rank: usize,
    monodromies: Vec<FreeEndomorphism>,
    /// Set when supplied inverses were checked; false flags a failed check.
    inverse_check: Option<bool>,
}

impl MonodromyData {
    pub fn new(
        fiber_rank: usize,
        monodromies: Vec<FreeEndomorphism>,
    ) -> Result<Self, TopologyError> {
        for m in &monodromies {
            if m.rank() != fiber_rank {
                return Err(TopologyError::RankMismatch(format!(
                    "monodromy has rank {}, fiber has rank {fiber_rank}",
                    m.rank()
                )));
            }
        }
        Ok(MonodromyData {
            fiber_rank,
            monodromies,
            inverse_check: None,
        })
    }

    /// Check claimed inverses; a failure is flagged, not fatal (the
    /// presentation is still formally defined).
    pub fn with_inverses(mut self, inverses: &[FreeEndomorphism]) -> Self {
        let ok = inverses.len() == self.monodromies.len()
            && self
                .monodromies
                .iter()
                .zip(inverses)
                .all(|(m, inv)| match m.compose(inv) {
                    Ok(c) => c.is_identity(),
                    Err(_) => false,
                });
        self.inverse_check = Some(ok);
        self
    }

    pub fn loops(&self) -> usize {
        self.monodromies.len()
    }

    pub fn fiber_rank(&self) -> usize {
        self.fiber_rank
    }

    pub fn monodromies(&self) -> &[FreeEndomorphism] {
        &self.monodromies
    }

    pub fn inverse_check(&self) -> Option<bool> {
        self.inverse_check
    }
}

/// Generators `g1..gr` (meridians) and `x1..xm` (fiber), with the `r*m`
/// relators `g_k^-1 x_i g_k (M_k(x_i))^-1`, ordered loop-major.
///
/// The presentation-complex Euler characteristic is `1 - (r+m) + r*m`.
pub fn cw_fibration_presentation(data: &MonodromyData) -> Presentation {
    let r = data.loops();
    let m = data.fiber_rank();
    let mut gens: Vec<String> = (1..=r).map(|k| format!("g{k}")).collect();
    gens.extend((1..=m).map(|i| format!("x{i}")));

    // loop generators come first; fiber generator i is index r + i
    let shift = |w: &Word| -> Word {
        Word::from_letters(w.letters().iter().map(|&l| {
            if l > 0 {
                l + r as i32
            } else {
                l - r as i32
            }
        }))
    };

    let mut relators = Vec::with_capacity(r * m);
    for (k, mono) in data.monodromies().iter().enumerate() {
        for i in 0..m {
            let gk = Word::gen(k);
            let xi = Word::gen(r + i);
            let image = shift(mono.image_of_gen(i));
            let rel = gk
                .inverse()
                .concat(&xi)
                .concat(&gk)
                .concat(&image.inverse());
            relators.push(rel);
        }
    }
    Presentation::new(gens, relators).expect("valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AbelianInvariants;

    #[test]
    fn single_identity_monodromy_gives_z_squared() {
        let data = MonodromyData::new(1, vec![FreeEndomorphism::identity(1)]).unwrap();
        let p = cw_fibration_presentation(&data);
        assert_eq!(p.rank(), 2);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.abelianization(), AbelianInvariants::free(2));
    }

    #[test]
    fn identity_monodromies_give_product_relators() {
        let data = MonodromyData::new(
            3,
            vec![
                FreeEndomorphism::identity(3),
                FreeEndomorphism::identity(3),
            ],
        )
        .unwrap();
        let p = cw_fibration_presentation(&data);
        assert_eq!(p.rank(), 5);
        assert_eq!(p.relators().len(), 6);
        // chi = 1 - 5 + 6 = 2
        let chi = 1 - p.rank() as i64 + p.relators().len() as i64;
        assert_eq!(chi, 2);
    }

    #[test]
    fn nontrivial_monodromy_abelianization() {
        // M: x1 -> x1 x2, x2 -> x2 kills x2 in homology: H1 = Z^2
        let m = FreeEndomorphism::new(
            2,
            vec![Word::from_letters([1, 2]), Word::gen(1)],
        )
        .unwrap();
        let data = MonodromyData::new(2, vec![m]).unwrap();
        let p = cw_fibration_presentation(&data);
        assert_eq!(p.abelianization(), AbelianInvariants::free(2));
    }

    #[test]
    fn relator_count_is_loops_times_rank() {
        for (r, m) in [(1usize, 1usize), (2, 3), (3, 2)] {
            let data =
                MonodromyData::new(m, vec![FreeEndomorphism::identity(m); r]).unwrap();
            let p = cw_fibration_presentation(&data);
            assert_eq!(p.relators().len(), r * m);
        }
    }

    #[test]
    fn inverse_check_flags_wrong_inverse() {
        let mono = FreeEndomorphism::new(
            2,
            vec![Word::from_letters([1, 2]), Word::gen(1)],
        )
        .unwrap();
        let good_inv = FreeEndomorphism::new(
            2,
            vec![Word::from_letters([1, -2]), Word::gen(1)],
        )
        .unwrap();
        let data = MonodromyData::new(2, vec![mono.clone()])
            .unwrap()
            .with_inverses(&[good_inv]);
        assert_eq!(data.inverse_check(), Some(true));
        let bad = MonodromyData::new(2, vec![mono])
            .unwrap()
            .with_inverses(&[FreeEndomorphism::identity(2)]);
        assert_eq!(bad.inverse_check(), Some(false));
    }

    #[test]
    fn rank_mismatch_rejected() {
        assert!(MonodromyData::new(2, vec![FreeEndomorphism::identity(3)]).is_err());
    }
}
