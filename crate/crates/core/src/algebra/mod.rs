//! Exact arithmetic: rationals, number fields, Laurent polynomials, matrices,
//! determinants and Smith normal form.

pub mod bilaurent;
pub mod laurent;
pub mod matrix;
pub mod numberfield;
pub mod smith;

use num_bigint::BigInt;
use thiserror::Error;

/// Arbitrary-precision rational, the coefficient ring for number fields.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("element is not invertible: defining polynomial is not coprime to its lift")]
    NotInvertible,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("minor size {k} out of range for {rows}x{cols} matrix")]
    BadMinorSize { k: usize, rows: usize, cols: usize },
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
}

/// Ring operations shared by every exact coefficient type in the crate.
///
/// `zero_like`/`one_like` derive constants from an existing element so that
/// context-carrying types (number field elements, Laurent polynomials) can be
/// used in generic matrix code.
pub trait RingOps: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_sub(&self, rhs: &Self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Exact division in the ring; `None` when `rhs` does not divide exactly.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

impl RingOps for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::from(0)
    }
    fn one_like(&self) -> Self {
        BigInt::from(1)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        use num_integer::Integer;
        if RingOps::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        if num_traits::Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
}

impl RingOps for Rational {
    fn zero_like(&self) -> Self {
        num_traits::Zero::zero()
    }
    fn one_like(&self) -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

/// Abelian group invariants: `Z^free_rank + Z/t_1 + ... + Z/t_k` with each
/// torsion entry dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn free(rank: usize) -> Self {
        AbelianInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}
