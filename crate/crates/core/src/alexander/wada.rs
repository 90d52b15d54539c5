//! Twisted Alexander polynomials by Wada's minors method.

use crate::algebra::laurent::{minor_gcd, LaurentPoly};
use crate::algebra::matrix::Mat;
use crate::presentations::Presentation;
use crate::words::Word;

use super::fox::fox_matrix;
use super::rep::Representation;
use super::AlexanderError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeleteChoice {
    /// Try generators in order; use the first with `det(Phi(x_j) - I) != 0`.
    Auto,
    Generator(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WadaResult {
    /// Gcd of the maximal minors of the column-deleted matrix,
    /// unit-normalized.
    pub delta1: LaurentPoly,
    /// `det(Phi(x_j) - I)` for the deleted generator, unit-normalized.
    pub delta0: LaurentPoly,
    /// The exact quotient `delta1 / delta0` when it exists.
    pub delta: Option<LaurentPoly>,
    /// 0-based index of the deleted generator; `None` for a relator-free
    /// presentation.
    pub deleted: Option<usize>,
    /// A presentation with no relators has the trivial invariant by
    /// definition.
    pub no_relators: bool,
    /// The unit normalization applied to every reported polynomial.
    pub normalization: &'static str,
}

pub const UNIT_NORMALIZATION: &str =
    "exponents shifted to a nonzero constant term, then scaled monic";

impl WadaResult {
    /// `delta` when divisible, otherwise the normalized `(delta1, delta0)`
    /// fraction pair.
    pub fn delta_or_fraction(&self) -> Result<&LaurentPoly, (&LaurentPoly, &LaurentPoly)> {
        match &self.delta {
            Some(d) => Ok(d),
            None => Err((&self.delta1, &self.delta0)),
        }
    }
}

/// Wada's invariant `Delta = Delta1 / Delta0` for the representation `rho`
/// and its grading, in the Laurent variable `var`.
///
/// `Delta1` is the gcd of all `min(m, n-1)*k`-sized minors of the Fox matrix
/// image under `Phi = t^eps * rho` with the deleted generator's column block
/// removed; `Delta0 = det(Phi(x_j) - I)`.
pub fn twisted_alexander_wada(
    p: &Presentation,
    rep: &Representation,
    delete: DeleteChoice,
    var: &str,
) -> Result<WadaResult, AlexanderError> {
    if rep.rank() != p.rank() {
        return Err(AlexanderError::DimensionMismatch(format!(
            "representation has {} generator images, presentation has {}",
            rep.rank(),
            p.rank()
        )));
    }
    let report = rep.verify(p);
    if !report.matrices_ok {
        return Err(AlexanderError::RepresentationNotVerified {
            relator: report.failing_matrix_relator.unwrap_or_default(),
        });
    }

    let field = rep.field().clone();
    let k = rep.degree();
    let one = LaurentPoly::one(&field, var);
    let m = p.relators().len();
    let n = p.rank();

    if m == 0 {
        return Ok(WadaResult {
            delta1: one.clone(),
            delta0: one.clone(),
            delta: Some(one),
            deleted: None,
            no_relators: true,
            normalization: UNIT_NORMALIZATION,
        });
    }

    let ident = Mat::identity(k, &LaurentPoly::zero(&field, var));
    let delta0_of = |j: usize| -> LaurentPoly {
        rep.phi_word(&Word::gen(j), var)
            .sub(&ident)
            .bareiss_determinant()
            .expect("square block")
    };
    let (deleted, delta0_raw) = match delete {
        DeleteChoice::Generator(j) => {
            if j >= n {
                return Err(AlexanderError::UnknownGenerator {
                    found: j + 1,
                    rank: n,
                });
            }
            let d0 = delta0_of(j);
            if d0.is_zero() {
                return Err(AlexanderError::NoDeletableGenerator);
            }
            (j, d0)
        }
        DeleteChoice::Auto => {
            let mut found = None;
            for j in 0..n {
                let d0 = delta0_of(j);
                if !d0.is_zero() {
                    found = Some((j, d0));
                    break;
                }
            }
            found.ok_or(AlexanderError::NoDeletableGenerator)?
        }
    };

    // block matrix of the Fox derivatives under Phi, deleted column removed
    let fox = fox_matrix(p);
    let zero = LaurentPoly::zero(&field, var);
    let kept: Vec<usize> = (0..n).filter(|&j| j != deleted).collect();
    let delta1 = if kept.is_empty() {
        // single generator: the deleted matrix is empty and the gcd of the
        // empty (0x0) minor is 1
        one.clone()
    } else {
        let mut big = Mat::filled(m * k, kept.len() * k, zero.clone());
        for (bi, row) in fox.entries.iter().enumerate() {
            for (bj, &j) in kept.iter().enumerate() {
                let block = rep.phi_grel(&row[j], var);
                for a in 0..k {
                    for b in 0..k {
                        big[(bi * k + a, bj * k + b)] = block[(a, b)].clone();
                    }
                }
            }
        }
        let s = m.min(n - 1) * k;
        minor_gcd(&big, s).expect("minor size within range")
    };

    let delta0 = delta0_raw.unit_normalize();
    let delta = delta1.exact_div(&delta0).map(|q| q.unit_normalize());
    Ok(WadaResult {
        delta1,
        delta0,
        delta,
        deleted: Some(deleted),
        no_relators: false,
        normalization: UNIT_NORMALIZATION,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numberfield::NumberField;
    use std::sync::Arc;

    #[test]
    fn free_group_invariant_is_one() {
        let f = NumberField::cyclotomic8();
        let p = Presentation::free(2);
        let mats = vec![
            Mat::from_rows(vec![
                vec![f.gen(), f.zero()],
                vec![f.zero(), f.gen().pow(3).neg()],
            ]),
            Mat::from_rows(vec![
                vec![f.one(), f.one()],
                vec![f.zero(), f.one()],
            ]),
        ];
        let rep = Representation::new(Arc::clone(&f), mats, vec![1, 1]).unwrap();
        let out = twisted_alexander_wada(&p, &rep, DeleteChoice::Auto, "t").unwrap();
        assert!(out.no_relators);
        assert_eq!(out.delta.unwrap(), LaurentPoly::one(&f, "t"));
    }

    #[test]
    fn z2_with_minus_identity() {
        // <x | x^2>, rho(x) = -I2, eps(x) = 1 (formal computation: the
        // grading does not descend to the group, and the result records a
        // non-divisible fraction)
        let f = NumberField::cyclotomic8();
        let p = Presentation::new(vec!["x".into()], vec![Word::gen(0).pow(2)]).unwrap();
        let minus_i = Mat::from_rows(vec![
            vec![f.from_int(-1), f.zero()],
            vec![f.zero(), f.from_int(-1)],
        ]);
        let rep = Representation::new(Arc::clone(&f), vec![minus_i], vec![1]).unwrap();
        let out = twisted_alexander_wada(&p, &rep, DeleteChoice::Auto, "t").unwrap();
        // Delta0 = det(-tI - I) = (t+1)^2
        let expect_d0 = LaurentPoly::from_terms(
            &f,
            "t",
            [(0, f.one()), (1, f.from_int(2)), (2, f.one())],
        );
        assert_eq!(out.delta0, expect_d0);
        // with one generator the deleted matrix is empty: Delta1 = 1
        assert_eq!(out.delta1, LaurentPoly::one(&f, "t"));
        assert!(out.delta.is_none());
        assert_eq!(out.deleted, Some(0));
    }

    #[test]
    fn explicit_deletion_with_vanishing_delta0_errors() {
        let f = NumberField::cyclotomic8();
        let p = Presentation::new(
            vec!["x".into(), "y".into()],
            vec![Word::commutator(&Word::gen(0), &Word::gen(1))],
        )
        .unwrap();
        // rho(y) = I makes det(Phi(y) - I) = (t^0 - 1)^2 = 0 under eps(y)=0
        let mats = vec![
            Mat::from_rows(vec![
                vec![f.from_int(-1), f.zero()],
                vec![f.zero(), f.from_int(-1)],
            ]),
            Mat::identity(2, &f.zero()),
        ];
        let rep = Representation::new(Arc::clone(&f), mats, vec![1, 0]).unwrap();
        assert!(matches!(
            twisted_alexander_wada(&p, &rep, DeleteChoice::Generator(1), "t"),
            Err(AlexanderError::NoDeletableGenerator)
        ));
        // auto falls back to x
        let out = twisted_alexander_wada(&p, &rep, DeleteChoice::Auto, "t").unwrap();
        assert_eq!(out.deleted, Some(0));
    }
}
