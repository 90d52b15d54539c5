//! Matrix representations over a number field, with the grading used by
//! twisted Alexander polynomials.
//!
//! The shipped fixtures write matrix entries in terms of the formal tokens
//! `sqrt2` and `i`; the concrete field elements behind those tokens are only
//! fixed up to Galois conjugacy. [`resolve_representation`] tries the four
//! assignments, keeps those under which the relators map to the identity,
//! and tie-breaks by requiring `det(Phi(g) - I) = t^2 - sqrt2 t + 1` for some
//! generator, recording the choice.

use std::sync::Arc;

use crate::algebra::laurent::LaurentPoly;
use crate::algebra::matrix::Mat;
use crate::algebra::numberfield::{NFElem, NumberField};
use crate::algebra::Rational;
use crate::presentations::Presentation;
use crate::words::{GroupRingElem, Word};

use super::AlexanderError;

#[derive(Debug, Clone)]
pub struct Representation {
    field: Arc<NumberField>,
    degree: usize,
    mats: Vec<Mat<NFElem>>,
    inv_mats: Vec<Mat<NFElem>>,
    eps: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub matrices_ok: bool,
    pub grading_ok: bool,
    pub failing_matrix_relator: Option<String>,
    pub failing_grading_relator: Option<String>,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.matrices_ok && self.grading_ok
    }
}

impl Representation {
    pub fn new(
        field: Arc<NumberField>,
        mats: Vec<Mat<NFElem>>,
        eps: Vec<i64>,
    ) -> Result<Self, AlexanderError> {
        assert_eq!(mats.len(), eps.len(), "one matrix and one grading per generator");
        let degree = mats
            .first()
            .map(Mat::nrows)
            .ok_or_else(|| AlexanderError::DimensionMismatch("no generators".into()))?;
        let mut inv_mats = Vec::with_capacity(mats.len());
        for m in &mats {
            if m.nrows() != degree || m.ncols() != degree {
                return Err(AlexanderError::DimensionMismatch(format!(
                    "expected {degree}x{degree} matrices"
                )));
            }
            inv_mats.push(invert_field_matrix(m).ok_or(AlexanderError::NotInvertible)?);
        }
        Ok(Representation {
            field,
            degree,
            mats,
            inv_mats,
            eps,
        })
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.mats.len()
    }

    pub fn matrix(&self, g: usize) -> &Mat<NFElem> {
        &self.mats[g]
    }

    pub fn eps(&self) -> &[i64] {
        &self.eps
    }

    pub fn evaluate(&self, w: &Word) -> Mat<NFElem> {
        let mut acc = Mat::identity(self.degree, &self.field.zero());
        for &l in w.letters() {
            let g = l.unsigned_abs() as usize - 1;
            let m = if l > 0 { &self.mats[g] } else { &self.inv_mats[g] };
            acc = acc.mul(m);
        }
        acc
    }

    pub fn eps_of(&self, w: &Word) -> i64 {
        w.letters()
            .iter()
            .map(|&l| {
                let e = self.eps[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    e
                } else {
                    -e
                }
            })
            .sum()
    }

    /// Matrix check: every relator maps to the identity. Grading check:
    /// every relator has zero grading sum. The two are reported separately;
    /// Wada's formal computation only needs the matrix check.
    pub fn verify(&self, p: &Presentation) -> VerifyReport {
        let mut report = VerifyReport {
            matrices_ok: true,
            grading_ok: true,
            failing_matrix_relator: None,
            failing_grading_relator: None,
        };
        for r in p.relators() {
            if report.matrices_ok && !self.evaluate(r).is_identity() {
                report.matrices_ok = false;
                report.failing_matrix_relator = Some(p.word_string(r));
            }
            if report.grading_ok && self.eps_of(r) != 0 {
                report.grading_ok = false;
                report.failing_grading_relator = Some(p.word_string(r));
            }
        }
        report
    }

    /// `Phi(w) = t^eps(w) * rho(w)` as a matrix of Laurent polynomials.
    pub fn phi_word(&self, w: &Word, var: &str) -> Mat<LaurentPoly> {
        let rho = self.evaluate(w);
        let e = self.eps_of(w);
        let zero = LaurentPoly::zero(&self.field, var);
        let mut out = Mat::filled(self.degree, self.degree, zero);
        for i in 0..self.degree {
            for j in 0..self.degree {
                out[(i, j)] = LaurentPoly::monomial(&self.field, var, e, rho[(i, j)].clone());
            }
        }
        out
    }

    /// Linear extension of `phi_word` to group-ring elements.
    pub fn phi_grel(&self, e: &GroupRingElem, var: &str) -> Mat<LaurentPoly> {
        let zero = LaurentPoly::zero(&self.field, var);
        let mut out = Mat::filled(self.degree, self.degree, zero);
        for (w, c) in e.terms() {
            let coeff = self
                .field
                .from_rational(Rational::from_integer(c.clone()));
            let m = self.phi_word(w, var);
            for i in 0..self.degree {
                for j in 0..self.degree {
                    out[(i, j)] = out[(i, j)].add(&m[(i, j)].scale(&coeff));
                }
            }
        }
        out
    }
}

/// Gauss-Jordan inverse over the field; `None` for singular input.
fn invert_field_matrix(m: &Mat<NFElem>) -> Option<Mat<NFElem>> {
    let n = m.nrows();
    let zero = m[(0, 0)].zero_like();
    let mut a = m.clone();
    let mut inv = Mat::identity(n, &zero);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
        if pivot != col {
            for j in 0..n {
                let x = a[(col, j)].clone();
                a[(col, j)] = a[(pivot, j)].clone();
                a[(pivot, j)] = x;
                let y = inv[(col, j)].clone();
                inv[(col, j)] = inv[(pivot, j)].clone();
                inv[(pivot, j)] = y;
            }
        }
        let pinv = a[(col, col)].inverse().ok()?;
        for j in 0..n {
            a[(col, j)] = a[(col, j)].mul(&pinv);
            inv[(col, j)] = inv[(col, j)].mul(&pinv);
        }
        for r in 0..n {
            if r == col || a[(r, col)].is_zero() {
                continue;
            }
            let f = a[(r, col)].clone();
            for j in 0..n {
                let d = f.mul(&a[(col, j)]);
                a[(r, j)] = a[(r, j)].sub(&d);
                let d = f.mul(&inv[(col, j)]);
                inv[(r, j)] = inv[(r, j)].sub(&d);
            }
        }
    }
    Some(inv)
}

use crate::algebra::RingOps;

// ---- symbolic entries and convention resolution ----

/// Formal symbol appearing in fixture matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymTerm {
    One,
    Sqrt2,
    I,
}

/// A sum of `coeff * xi^pow * sym` terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymEntry {
    pub terms: Vec<(Rational, u32, SymTerm)>,
}

impl SymEntry {
    pub fn instantiate(&self, field: &Arc<NumberField>, choice: &ConventionChoice) -> NFElem {
        let mut acc = field.zero();
        for (c, pow, sym) in &self.terms {
            let base = match sym {
                SymTerm::One => field.one(),
                SymTerm::Sqrt2 => choice.sqrt2(field),
                SymTerm::I => choice.i(field),
            };
            acc = acc.add(&field.monomial(*pow as usize).mul(&base).scale(c));
        }
        acc
    }
}

/// Sign assignment for the `sqrt2` and `i` tokens, corresponding to the
/// Galois embedding of the quartic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConventionChoice {
    /// `sqrt2 = xi^3 - xi` when true, else `xi - xi^3`.
    pub sqrt2_standard: bool,
    /// `i = xi^2` when true, else `-xi^2`.
    pub i_standard: bool,
}

impl ConventionChoice {
    pub fn sqrt2(&self, field: &Arc<NumberField>) -> NFElem {
        let s = field.sqrt2_default();
        if self.sqrt2_standard {
            s
        } else {
            s.neg()
        }
    }

    pub fn i(&self, field: &Arc<NumberField>) -> NFElem {
        let i = field.i_default();
        if self.i_standard {
            i
        } else {
            i.neg()
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "sqrt2={}, i={}",
            if self.sqrt2_standard { "xi^3-xi" } else { "xi-xi^3" },
            if self.i_standard { "xi^2" } else { "-xi^2" }
        )
    }

    pub const ALL: [ConventionChoice; 4] = [
        ConventionChoice { sqrt2_standard: true, i_standard: true },
        ConventionChoice { sqrt2_standard: true, i_standard: false },
        ConventionChoice { sqrt2_standard: false, i_standard: true },
        ConventionChoice { sqrt2_standard: false, i_standard: false },
    ];
}

/// A representation whose entries still mention the formal tokens.
#[derive(Debug, Clone)]
pub struct RepTemplate {
    pub field: Arc<NumberField>,
    pub eps: Vec<i64>,
    /// Per generator, row-major `degree x degree` symbolic entries.
    pub mats: Vec<Vec<Vec<SymEntry>>>,
}

impl RepTemplate {
    pub fn instantiate(
        &self,
        choice: &ConventionChoice,
    ) -> Result<Representation, AlexanderError> {
        let mats = self
            .mats
            .iter()
            .map(|rows| {
                Mat::from_rows(
                    rows.iter()
                        .map(|row| {
                            row.iter()
                                .map(|e| e.instantiate(&self.field, choice))
                                .collect()
                        })
                        .collect(),
                )
            })
            .collect();
        Representation::new(Arc::clone(&self.field), mats, self.eps.clone())
    }

    fn uses_tokens(&self) -> bool {
        self.mats.iter().flatten().flatten().any(|e| {
            e.terms
                .iter()
                .any(|(_, _, s)| !matches!(s, SymTerm::One))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionReport {
    pub chosen: ConventionChoice,
    /// Every assignment under which the matrices verified.
    pub passing: Vec<ConventionChoice>,
    /// Whether the delta0-form test singled out the chosen assignment.
    pub delta0_pinned: bool,
}

/// Try the four token assignments in a fixed order, keep those whose
/// matrices verify against `p`, and tie-break by the delta0-form test.
pub fn resolve_representation(
    p: &Presentation,
    template: &RepTemplate,
) -> Result<(Representation, ConventionReport), AlexanderError> {
    if !template.uses_tokens() || template.field.degree() != 4 {
        let choice = ConventionChoice {
            sqrt2_standard: true,
            i_standard: true,
        };
        let rep = template.instantiate(&choice)?;
        let report = rep.verify(p);
        if !report.matrices_ok {
            return Err(AlexanderError::RepresentationNotVerified {
                relator: report.failing_matrix_relator.unwrap_or_default(),
            });
        }
        return Ok((
            rep,
            ConventionReport {
                chosen: choice,
                passing: vec![choice],
                delta0_pinned: false,
            },
        ));
    }

    let mut passing = Vec::new();
    let mut candidates = Vec::new();
    for choice in ConventionChoice::ALL {
        if let Ok(rep) = template.instantiate(&choice) {
            if rep.verify(p).matrices_ok {
                passing.push(choice);
                candidates.push((choice, rep));
            }
        }
    }
    if candidates.is_empty() {
        return Err(AlexanderError::NoConsistentConvention);
    }
    // delta0-form test: det(Phi(g) - I) = t^2 - sqrt2*t + 1 for some generator
    let pinned = candidates.iter().position(|(choice, rep)| {
        let field = rep.field().clone();
        let target = LaurentPoly::from_terms(
            &field,
            "t",
            [
                (2, field.one()),
                (1, choice.sqrt2(&field).neg()),
                (0, field.one()),
            ],
        );
        (0..rep.rank()).any(|g| {
            let phi = rep.phi_word(&Word::gen(g), "t");
            let ident = Mat::identity(rep.degree(), &LaurentPoly::zero(&field, "t"));
            let d0 = phi.sub(&ident).bareiss_determinant().unwrap();
            !d0.is_zero() && d0.unit_normalize() == target
        })
    });
    let idx = pinned.unwrap_or(0);
    let (choice, rep) = candidates.swap_remove(idx);
    Ok((
        rep,
        ConventionReport {
            chosen: choice,
            passing,
            delta0_pinned: pinned.is_some(),
        },
    ))
}
