//! Human-readable rendering of field elements and Laurent polynomials.
//!
//! Coefficients that equal a named constant (`sqrt2`, `i`, rationals) print
//! as that constant under the convention in force, so outputs read against
//! the sources they reproduce.

use num_traits::One;

use pi1_core::algebra::bilaurent::BiLaurentPoly;
use pi1_core::algebra::laurent::LaurentPoly;
use pi1_core::algebra::numberfield::{NFElem, NumberField};
use pi1_core::algebra::Rational;
use pi1_core::alexander::ConventionChoice;
use std::sync::Arc;

fn rational_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Render a number field element, using `sqrt2`/`i` names when the element
/// is exactly `c * sqrt2` or `c * i` under the convention.
pub fn nf_string(e: &NFElem, conv: Option<&ConventionChoice>) -> String {
    if let Some(q) = e.is_rational() {
        return rational_string(&q);
    }
    if let Some(conv) = conv {
        let field = e.field();
        if field.degree() == 4 {
            for (name, val) in [("sqrt2", conv.sqrt2(field)), ("i", conv.i(field))] {
                let inv = val.inverse().expect("named constants are units");
                if let Some(q) = e.mul(&inv).is_rational() {
                    if q.is_one() {
                        return name.to_string();
                    }
                    if q == -Rational::one() {
                        return format!("-{name}");
                    }
                    return format!("{}*{name}", rational_string(&q));
                }
            }
        }
    }
    // fall back to a polynomial in xi
    let var = e.field().var().to_string();
    let mut parts: Vec<String> = Vec::new();
    for (pow, c) in e.coeffs().iter().enumerate().rev() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let mono = match pow {
            0 => String::new(),
            1 => var.clone(),
            _ => format!("{var}^{pow}"),
        };
        let piece = if mono.is_empty() {
            rational_string(c)
        } else if c.is_one() {
            mono
        } else if *c == -Rational::one() {
            format!("-{mono}")
        } else {
            format!("{}*{}", rational_string(c), mono)
        };
        parts.push(piece);
    }
    let joined = join_signed(parts);
    if e.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() > 1 {
        format!("({joined})")
    } else {
        joined
    }
}

fn join_signed(parts: Vec<String>) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(p);
        } else if let Some(stripped) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Render a Laurent polynomial, highest exponent first.
pub fn laurent_string(p: &LaurentPoly, conv: Option<&ConventionChoice>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let var = p.var();
    let mut parts = Vec::new();
    let terms: Vec<_> = p.terms().collect();
    for (e, c) in terms.into_iter().rev() {
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        let cs = nf_string(c, conv);
        let piece = if mono.is_empty() {
            cs
        } else if cs == "1" {
            mono
        } else if cs == "-1" {
            format!("-{mono}")
        } else {
            format!("{cs}*{mono}")
        };
        parts.push(piece);
    }
    join_signed(parts)
}

/// Render a bivariate Laurent polynomial, lex-largest monomial first.
pub fn bilaurent_string(p: &BiLaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let (v1, v2) = p.vars();
    let mono_str = |(e1, e2): (i64, i64)| -> String {
        let mut s = String::new();
        for (v, e) in [(v1, e1), (v2, e2)] {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            if e == 1 {
                s.push_str(v);
            } else {
                s.push_str(&format!("{v}^{e}"));
            }
        }
        s
    };
    let terms: Vec<_> = p.terms().collect();
    let mut parts = Vec::new();
    for (&e, c) in terms.into_iter().rev() {
        let mono = mono_str(e);
        let piece = if mono.is_empty() {
            c.to_string()
        } else if c.is_one() {
            mono
        } else if *c == (-1).into() {
            format!("-{mono}")
        } else {
            format!("{c}*{mono}")
        };
        parts.push(piece);
    }
    join_signed(parts)
}

/// The `p(t) = t^2 - sqrt2 t + 1` rendering check lives where the fixture
/// is exercised; this helper builds that polynomial for comparisons.
pub fn sqrt2_quadratic(field: &Arc<NumberField>, conv: &ConventionChoice) -> LaurentPoly {
    LaurentPoly::from_terms(
        field,
        "t",
        [
            (2, field.one()),
            (1, conv.sqrt2(field).neg()),
            (0, field.one()),
        ],
    )
}
