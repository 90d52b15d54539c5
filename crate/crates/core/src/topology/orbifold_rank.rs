//! Kernel rank of the maximal cyclic quotient of an open curve orbifold
//! group.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::algebra::Rational;
use crate::presentations::OrbifoldSignature;

use super::TopologyError;

/// Rank `1 - m * chi_orb` of the free kernel of
/// `F_r * Z_{m_1} * ... * Z_{m_s} -> Z_m`, where `m = lcm(m_i)` and the
/// signature is a genus-0 orbifold with `r+1` punctures.
pub fn orbifold_kernel_rank(sig: &OrbifoldSignature, m: u64) -> Result<u64, TopologyError> {
    assert_eq!(sig.genus, 0, "the cyclic-quotient formula is for genus 0");
    assert!(sig.punctures >= 1, "need at least one puncture");
    let expected = sig
        .cone_orders
        .iter()
        .fold(1u64, |acc, &k| acc.lcm(&(k as u64)));
    if m != expected {
        return Err(TopologyError::BadLcm { m, expected });
    }
    let rank = Rational::from_integer(BigInt::one())
        - Rational::from_integer(BigInt::from(m)) * sig.chi_orb();
    if !rank.denom().is_one() || rank.numer().is_negative() {
        return Err(TopologyError::NotInteger);
    }
    rank.numer().to_u64().ok_or(TopologyError::NotInteger)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_kernel_rank_formula() {
        // (2,3) cone orders, 2 punctures (r=1): 1 - 6*(-7/6) = 8 = pqr+(p-1)(q-1)
        let sig = OrbifoldSignature::new(0, 2, vec![2, 3]);
        assert_eq!(orbifold_kernel_rank(&sig, 6).unwrap(), 8);
    }

    #[test]
    fn trivial_cover_of_free_group() {
        // no cone points, 4 punctures (r=3), m = 1: 1 - (2 - 4) = 3
        let sig = OrbifoldSignature::new(0, 4, vec![]);
        assert_eq!(orbifold_kernel_rank(&sig, 1).unwrap(), 3);
    }

    #[test]
    fn one_puncture_two_cones() {
        // r=0: matches (p-1)(q-1) = 2
        let sig = OrbifoldSignature::new(0, 1, vec![2, 3]);
        assert_eq!(orbifold_kernel_rank(&sig, 6).unwrap(), 2);
    }

    #[test]
    fn wrong_lcm_rejected() {
        let sig = OrbifoldSignature::new(0, 1, vec![2, 3]);
        assert!(matches!(
            orbifold_kernel_rank(&sig, 12),
            Err(TopologyError::BadLcm { m: 12, expected: 6 })
        ));
    }

    #[test]
    fn non_coprime_cone_orders_still_integral() {
        // lcm(2,4) = 4: 1 - 4*(2 - 1 - 1/2 - 3/4) = 1 - 4*(-1/4) = 2
        let sig = OrbifoldSignature::new(0, 1, vec![2, 4]);
        assert_eq!(orbifold_kernel_rank(&sig, 4).unwrap(), 2);
    }
}
