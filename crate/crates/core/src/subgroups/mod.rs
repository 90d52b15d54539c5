//! Finite-index subgroup machinery: coset tables, Todd–Coxeter enumeration,
//! tables from explicit finite quotients, and Reidemeister–Schreier
//! rewriting.

mod coset_table;
mod from_hom;
mod rs;
mod todd_coxeter;

pub use coset_table::CosetTable;
pub use from_hom::{coset_table_from_cyclic_hom, coset_table_from_perm_hom};
pub use rs::{reidemeister_schreier, RsOutput, SchreierRewriter};
pub use todd_coxeter::{todd_coxeter, DEFAULT_COSET_CAP};

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgroupError {
    #[error("coset enumeration did not close within {cap} cosets")]
    CosetLimitExceeded { cap: usize },
    #[error("images do not define a homomorphism: relator `{relator}` does not map to the identity")]
    NotAHomomorphism { relator: String },
    #[error("invalid coset table: {0}")]
    InvalidTable(String),
    #[error("{p} and {q} are not coprime")]
    NotCoprime { p: u64, q: u64 },
    #[error("word does not lie in the subgroup (it moves the base coset)")]
    NotInSubgroup,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
}

/// Expected rank of the kernel of `F_r * Z_p * Z_q -> Z_pq`.
pub fn kernel_rank_expected(r: u64, p: u64, q: u64) -> Result<u64, SubgroupError> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return Err(SubgroupError::NotCoprime { p, q });
    }
    Ok(p * q * r + (p - 1) * (q - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_rank_formula() {
        assert_eq!(kernel_rank_expected(0, 2, 3).unwrap(), 2);
        assert_eq!(kernel_rank_expected(1, 2, 3).unwrap(), 8);
        assert_eq!(kernel_rank_expected(0, 1, 1).unwrap(), 0);
        assert_eq!(kernel_rank_expected(0, 2, 5).unwrap(), 4);
        assert!(kernel_rank_expected(1, 2, 4).is_err());
    }
}
