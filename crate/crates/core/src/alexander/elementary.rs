//! Elementary-ideal gcds of the abelianized Fox matrix, in one or two
//! Laurent variables over the integers.

use crate::algebra::bilaurent::{bilaurent_gcd, BiLaurentPoly};
use crate::algebra::matrix::Mat;
use crate::presentations::Presentation;
use crate::words::Word;

use super::fox::fox_matrix;
use super::AlexanderError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderGcds {
    /// `dk[k-1]` is the normalized gcd of all `k x k` minors (zero when all
    /// minors vanish).
    pub dk: Vec<BiLaurentPoly>,
    /// True for a presentation with no relators (no matrix to take minors
    /// of).
    pub no_relators: bool,
}

fn multi_degree(w: &Word, eps: &[(i64, i64)]) -> (i64, i64) {
    let mut e = (0i64, 0i64);
    for &l in w.letters() {
        let (a, b) = eps[l.unsigned_abs() as usize - 1];
        if l > 0 {
            e.0 += a;
            e.1 += b;
        } else {
            e.0 -= a;
            e.1 -= b;
        }
    }
    e
}

/// Gcds `d_k` of the `k x k` minors of the abelianized Fox matrix, for
/// `k = 1 .. min(rows, cols)`. The grading `eps` sends each generator to an
/// exponent pair; use a zero second component for the one-variable case.
pub fn alexander_poly_gcds(
    p: &Presentation,
    eps: &[(i64, i64)],
) -> Result<AlexanderGcds, AlexanderError> {
    assert_eq!(eps.len(), p.rank(), "one exponent pair per generator");
    for r in p.relators() {
        let s = multi_degree(r, eps);
        if s != (0, 0) {
            return Err(AlexanderError::InconsistentGrading {
                relator: p.word_string(r),
                sum: s,
            });
        }
    }
    if p.relators().is_empty() {
        return Ok(AlexanderGcds {
            dk: Vec::new(),
            no_relators: true,
        });
    }

    let fox = fox_matrix(p);
    let zero = BiLaurentPoly::zero("t1", "t2");
    let mut big = Mat::filled(fox.rows, fox.cols, zero.clone());
    for (i, row) in fox.entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let mut entry = zero.clone();
            for (w, c) in e.terms() {
                entry = entry.add(&BiLaurentPoly::monomial(
                    "t1",
                    "t2",
                    multi_degree(w, eps),
                    c.clone(),
                ));
            }
            big[(i, j)] = entry;
        }
    }

    let kmax = fox.rows.min(fox.cols);
    let mut dk = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        let g = big
            .fold_minors(
                k,
                zero.clone(),
                |acc, det| {
                    if det.is_zero() {
                        acc
                    } else if acc.is_zero() {
                        det.normalize()
                    } else {
                        bilaurent_gcd(&acc, &det)
                    }
                },
                |acc| acc.is_unit(),
            )
            .expect("minor size within range");
        dk.push(g.normalize());
    }
    Ok(AlexanderGcds {
        dk,
        no_relators: false,
    })
}

/// Convenience: one-variable grading, exponents in the first slot.
pub fn one_variable_eps(exps: &[i64]) -> Vec<(i64, i64)> {
    exps.iter().map(|&e| (e, 0)).collect()
}
