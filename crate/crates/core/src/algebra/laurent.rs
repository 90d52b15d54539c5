//! Univariate Laurent polynomials over a number field.
//!
//! Canonical ("unit-normalized") form: exponents shifted so the constant term
//! is nonzero, then scaled so the leading coefficient is 1. Equality up to
//! units of `K[t,t^-1]` is then plain equality.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::numberfield::{NFElem, NumberField};

#[derive(Debug, Clone)]
pub struct LaurentPoly {
    field: Arc<NumberField>,
    var: String,
    /// exponent -> nonzero coefficient
    coeffs: BTreeMap<i64, NFElem>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.var == other.var && self.coeffs == other.coeffs
    }
}
impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(field: &Arc<NumberField>, var: &str) -> Self {
        LaurentPoly {
            field: Arc::clone(field),
            var: var.to_string(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Arc<NumberField>, var: &str, c: NFElem) -> Self {
        let mut p = LaurentPoly::zero(field, var);
        if !c.is_zero() {
            p.coeffs.insert(0, c);
        }
        p
    }

    pub fn one(field: &Arc<NumberField>, var: &str) -> Self {
        LaurentPoly::constant(field, var, field.one())
    }

    /// `c * t^e`
    pub fn monomial(field: &Arc<NumberField>, var: &str, e: i64, c: NFElem) -> Self {
        let mut p = LaurentPoly::zero(field, var);
        if !c.is_zero() {
            p.coeffs.insert(e, c);
        }
        p
    }

    pub fn var_t(field: &Arc<NumberField>, var: &str) -> Self {
        LaurentPoly::monomial(field, var, 1, field.one())
    }

    pub fn from_terms(
        field: &Arc<NumberField>,
        var: &str,
        terms: impl IntoIterator<Item = (i64, NFElem)>,
    ) -> Self {
        let mut p = LaurentPoly::zero(field, var);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &NFElem)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, e: i64) -> NFElem {
        self.coeffs.get(&e).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&mut self, e: i64, c: &NFElem) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&e) {
            None => {
                self.coeffs.insert(e, c.clone());
            }
            Some(prev) => {
                let s = prev.add(c);
                if !s.is_zero() {
                    self.coeffs.insert(e, s);
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            field: Arc::clone(&self.field),
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly::zero(&self.field, &self.var);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &NFElem) -> Self {
        let mut out = LaurentPoly::zero(&self.field, &self.var);
        for (e, a) in &self.coeffs {
            out.add_term(*e, &a.mul(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Units of `K[t,t^-1]` are the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Shift so the constant term is nonzero, then make monic.
    pub fn unit_normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let lead_inv = self.coeffs[&hi].inverse().expect("leading coefficient invertible");
        LaurentPoly {
            field: Arc::clone(&self.field),
            var: self.var.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e - lo, c.mul(&lead_inv)))
                .collect(),
        }
    }

    /// Exact division in the Laurent ring; `None` when not divisible.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let (a, alo) = self.to_poly();
        let (b, blo) = rhs.to_poly();
        let (q, r) = poly_divmod(&self.field, &a, &b);
        if !r.is_empty() {
            return None;
        }
        let mut out = LaurentPoly::zero(&self.field, &self.var);
        for (i, c) in q.into_iter().enumerate() {
            out.add_term(i as i64 + alo - blo, &c);
        }
        Some(out)
    }

    /// Coefficients with exponents shifted to start at 0, plus the shift.
    fn to_poly(&self) -> (Vec<NFElem>, i64) {
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let mut v = vec![self.field.zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.coeffs {
            v[(e - lo) as usize] = c.clone();
        }
        (v, lo)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one(&self.field, &self.var);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

fn trim(mut v: Vec<NFElem>) -> Vec<NFElem> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_divmod(
    field: &Arc<NumberField>,
    a: &[NFElem],
    b: &[NFElem],
) -> (Vec<NFElem>, Vec<NFElem>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![], rem);
    }
    let lead_inv = b[db].inverse().expect("field coefficient");
    let mut quot = vec![field.zero(); rem.len() - db];
    while rem.len() > db {
        let d = rem.len() - 1 - db;
        let c = rem.last().unwrap().mul(&lead_inv);
        quot[d] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let delta = c.mul(bc);
            rem[d + i] = rem[d + i].sub(&delta);
        }
        rem = trim(rem);
    }
    (quot, rem)
}

/// Unit-normalized gcd of all `k x k` minors of a matrix of Laurent
/// polynomials (0 when all minors vanish). Minors are enumerated in
/// lexicographic row/column-subset order, stopping early once the running
/// gcd becomes a unit.
pub fn minor_gcd(
    m: &super::matrix::Mat<LaurentPoly>,
    k: usize,
) -> Result<LaurentPoly, super::AlgebraError> {
    let zero = LaurentPoly::zero(m[(0, 0)].field(), m[(0, 0)].var());
    let g = m.fold_minors(
        k,
        zero,
        |acc, det| {
            if det.is_zero() {
                acc
            } else if acc.is_zero() {
                det.unit_normalize()
            } else {
                laurent_gcd(&acc, &det)
            }
        },
        |acc| acc.is_unit(),
    )?;
    Ok(g.unit_normalize())
}

/// Unit-normalized gcd by the Euclidean algorithm; `gcd(0,0) = 0`.
pub fn laurent_gcd(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    if f.is_zero() {
        return g.unit_normalize();
    }
    if g.is_zero() {
        return f.unit_normalize();
    }
    let field = f.field().clone();
    let (mut a, _) = f.to_poly();
    let (mut b, _) = g.to_poly();
    loop {
        b = trim(b);
        if b.is_empty() {
            break;
        }
        let (_, r) = poly_divmod(&field, &a, &b);
        a = b;
        b = r;
    }
    let mut out = LaurentPoly::zero(&field, f.var());
    for (i, c) in a.into_iter().enumerate() {
        out.add_term(i as i64, &c);
    }
    out.unit_normalize()
}

impl super::RingOps for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(&self.field, &self.var)
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(&self.field, &self.var)
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ring_sub(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        LaurentPoly::exact_div(self, rhs)
    }
}
