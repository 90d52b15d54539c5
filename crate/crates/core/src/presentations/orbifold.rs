//! Orbifold fundamental groups of Riemann surfaces with punctures and cone
//! points.

use num_bigint::BigInt;

use crate::algebra::Rational;
use crate::words::Word;

use super::{Presentation, PresentationError};

/// Genus, puncture count and cone orders of an orbifold surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbifoldSignature {
    pub genus: u32,
    /// `#Sigma_0`, the number of punctures.
    pub punctures: u32,
    /// Cone orders, each at least 2.
    pub cone_orders: Vec<u32>,
}

impl OrbifoldSignature {
    pub fn new(genus: u32, punctures: u32, cone_orders: Vec<u32>) -> Self {
        OrbifoldSignature {
            genus,
            punctures,
            cone_orders,
        }
    }

    /// `chi^orb = 2 - 2g - #punctures - sum(1 - 1/m_i)`, exact.
    pub fn chi_orb(&self) -> Rational {
        let mut chi = Rational::from_integer(BigInt::from(
            2 - 2 * self.genus as i64 - self.punctures as i64,
        ));
        for &m in &self.cone_orders {
            chi -= Rational::from_integer(BigInt::from(1))
                - Rational::new(BigInt::from(1), BigInt::from(m));
        }
        chi
    }
}

/// The orbifold group presentation.
///
/// Generators: handles `a_i, b_i`, surviving punctures `p_i`, cone meridians
/// `m_i`. With at least one puncture the product relation eliminates one
/// puncture meridian, leaving the free product
/// `F_{2g + punctures - 1} * Z_{m_1} * ... * Z_{m_s}` with only the cone
/// power relators. The closed case keeps the product relation.
pub fn orbifold_presentation(
    sig: &OrbifoldSignature,
) -> Result<Presentation, PresentationError> {
    for &m in &sig.cone_orders {
        if m < 2 {
            return Err(PresentationError::BadConeOrder(m));
        }
    }
    let g = sig.genus as usize;
    let s = sig.cone_orders.len();
    let mut gens: Vec<String> = Vec::new();
    for i in 1..=g {
        gens.push(format!("a{i}"));
        gens.push(format!("b{i}"));
    }
    let open = sig.punctures >= 1;
    let surviving_punctures = if open { sig.punctures as usize - 1 } else { 0 };
    for i in 1..=surviving_punctures {
        gens.push(format!("p{i}"));
    }
    let cone_base = gens.len();
    for i in 1..=s {
        gens.push(format!("m{i}"));
    }
    let mut relators: Vec<Word> = Vec::new();
    for (i, &m) in sig.cone_orders.iter().enumerate() {
        relators.push(Word::gen(cone_base + i).pow(m as i32));
    }
    if !open {
        // product of meridians equals product of handle commutators
        let mut lhs = Word::identity();
        for i in 0..s {
            lhs = lhs.concat(&Word::gen(cone_base + i));
        }
        let mut rhs = Word::identity();
        for i in 0..g {
            rhs = rhs.concat(&Word::commutator(&Word::gen(2 * i), &Word::gen(2 * i + 1)));
        }
        relators.push(lhs.concat(&rhs.inverse()));
    }
    Presentation::new(gens, relators)
}
