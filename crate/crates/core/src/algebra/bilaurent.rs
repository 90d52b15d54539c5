//! Bivariate Laurent polynomials over the integers, with gcd by
//! primitive-part recursion (contents in one variable, pseudo-remainders in
//! the other). Units are `±t1^a t2^b`; normalization shifts exponents so both
//! minima are 0 and makes the lex-leading coefficient positive.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiLaurentPoly {
    var1: String,
    var2: String,
    /// (exp1, exp2) -> nonzero coefficient
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurentPoly {
    pub fn zero(var1: &str, var2: &str) -> Self {
        BiLaurentPoly {
            var1: var1.to_string(),
            var2: var2.to_string(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(var1: &str, var2: &str, c: i64) -> Self {
        BiLaurentPoly::monomial(var1, var2, (0, 0), BigInt::from(c))
    }

    pub fn one(var1: &str, var2: &str) -> Self {
        BiLaurentPoly::constant(var1, var2, 1)
    }

    pub fn monomial(var1: &str, var2: &str, e: (i64, i64), c: BigInt) -> Self {
        let mut p = BiLaurentPoly::zero(var1, var2);
        if !c.is_zero() {
            p.coeffs.insert(e, c);
        }
        p
    }

    pub fn from_terms(
        var1: &str,
        var2: &str,
        terms: impl IntoIterator<Item = ((i64, i64), BigInt)>,
    ) -> Self {
        let mut p = BiLaurentPoly::zero(var1, var2);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn vars(&self) -> (&str, &str) {
        (&self.var1, &self.var2)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, e: (i64, i64), c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&e) {
            None => {
                self.coeffs.insert(e, c.clone());
            }
            Some(prev) => {
                let s = prev + c;
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
        BiLaurentPoly {
            var1: self.var1.clone(),
            var2: self.var2.clone(),
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = BiLaurentPoly::zero(&self.var1, &self.var2);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term((e1.0 + e2.0, e1.1 + e2.1), &(c1 * c2));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.values().next().unwrap().abs() == BigInt::from(1)
    }

    fn min_exps(&self) -> (i64, i64) {
        let e1 = self.coeffs.keys().map(|e| e.0).min().unwrap();
        let e2 = self.coeffs.keys().map(|e| e.1).min().unwrap();
        (e1, e2)
    }

    /// Shift so both minimum exponents are 0 and the lex-leading coefficient
    /// is positive.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (l1, l2) = self.min_exps();
        let mut coeffs: BTreeMap<(i64, i64), BigInt> = self
            .coeffs
            .iter()
            .map(|(e, c)| ((e.0 - l1, e.1 - l2), c.clone()))
            .collect();
        if coeffs.iter().next_back().unwrap().1.is_negative() {
            for c in coeffs.values_mut() {
                *c = -c.clone();
            }
        }
        BiLaurentPoly {
            var1: self.var1.clone(),
            var2: self.var2.clone(),
            coeffs,
        }
    }

    /// Exact division in `Z[t1^±, t2^±]`; `None` when not divisible.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let (a1, a2) = self.min_exps();
        let (b1, b2) = rhs.min_exps();
        let mut rem: BTreeMap<(i64, i64), BigInt> = self
            .coeffs
            .iter()
            .map(|(e, c)| ((e.0 - a1, e.1 - a2), c.clone()))
            .collect();
        let g: BTreeMap<(i64, i64), BigInt> = rhs
            .coeffs
            .iter()
            .map(|(e, c)| ((e.0 - b1, e.1 - b2), c.clone()))
            .collect();
        let (&glead, glc) = g.iter().next_back().unwrap();
        let mut quot = BiLaurentPoly::zero(&self.var1, &self.var2);
        while !rem.is_empty() {
            let (&rlead, rlc) = rem.iter().next_back().unwrap();
            let de = (rlead.0 - glead.0, rlead.1 - glead.1);
            if de.0 < 0 || de.1 < 0 {
                return None;
            }
            let (q, r) = rlc.div_rem(glc);
            if !r.is_zero() {
                return None;
            }
            quot.add_term((de.0 + a1 - b1, de.1 + a2 - b2), &q);
            for (e, c) in &g {
                let target = (e.0 + de.0, e.1 + de.1);
                let delta = &q * c;
                match rem.remove(&target) {
                    None => {
                        if !delta.is_zero() {
                            rem.insert(target, -delta);
                        }
                    }
                    Some(prev) => {
                        let s = prev - delta;
                        if !s.is_zero() {
                            rem.insert(target, s);
                        }
                    }
                }
            }
        }
        Some(quot)
    }

    /// View as a polynomial in var1 with coefficients in `Z[t2]` after
    /// shifting both exponents to be nonnegative.
    fn to_recursive(&self) -> Vec<Vec<BigInt>> {
        let (l1, l2) = self.min_exps();
        let d1 = self.coeffs.keys().map(|e| e.0).max().unwrap() - l1;
        let d2 = self.coeffs.keys().map(|e| e.1).max().unwrap() - l2;
        let mut out = vec![vec![BigInt::zero(); (d2 + 1) as usize]; (d1 + 1) as usize];
        for (e, c) in &self.coeffs {
            out[(e.0 - l1) as usize][(e.1 - l2) as usize] = c.clone();
        }
        out
    }

    fn from_recursive(var1: &str, var2: &str, rec: &[Vec<BigInt>]) -> Self {
        let mut p = BiLaurentPoly::zero(var1, var2);
        for (i, row) in rec.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                p.add_term((i as i64, j as i64), c);
            }
        }
        p
    }
}

// ---- univariate Z[t] helpers (low-degree-first coefficient vectors) ----

fn uni_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn uni_is_zero(v: &[BigInt]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn uni_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn uni_scale_div(v: &[BigInt], d: &BigInt) -> Vec<BigInt> {
    v.iter().map(|c| c / d).collect()
}

fn uni_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if uni_is_zero(a) || uni_is_zero(b) {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn uni_scale(a: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    a.iter().map(|x| x * c).collect()
}

fn uni_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    uni_trim(out)
}

/// Primitive-PRS gcd in `Z[t]`, sign-normalized to positive leading coeff.
fn uni_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let a = uni_trim(a.to_vec());
    let b = uni_trim(b.to_vec());
    if a.is_empty() {
        return uni_pos(b);
    }
    if b.is_empty() {
        return uni_pos(a);
    }
    let cont = uni_content(&a).gcd(&uni_content(&b));
    let mut f = uni_primitive(&a);
    let mut g = uni_primitive(&b);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = uni_prem(&f, &g);
        f = g;
        g = uni_primitive(&uni_trim(r));
    }
    uni_pos(uni_scale(&uni_primitive(&f), &cont))
}

fn uni_primitive(v: &[BigInt]) -> Vec<BigInt> {
    let v = uni_trim(v.to_vec());
    if v.is_empty() {
        return v;
    }
    let c = uni_content(&v);
    uni_scale_div(&v, &c)
}

fn uni_pos(v: Vec<BigInt>) -> Vec<BigInt> {
    match v.last() {
        Some(l) if l.is_negative() => v.iter().map(|c| -c.clone()).collect(),
        _ => v,
    }
}

/// Pseudo-remainder of f by g in `Z[t]`.
fn uni_prem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let mut r = uni_trim(f.to_vec());
    let g = uni_trim(g.to_vec());
    let dg = g.len() - 1;
    let lc = g.last().unwrap().clone();
    while r.len() > dg {
        let dr = r.len() - 1;
        let coef = r.last().unwrap().clone();
        // r = lc*r - coef * t^(dr-dg) * g
        let mut shifted = vec![BigInt::zero(); dr - dg];
        shifted.extend(uni_scale(&g, &coef));
        r = uni_sub(&uni_scale(&r, &lc), &shifted);
    }
    r
}

// ---- bivariate gcd over Z[t1, t2] ----

fn biv_content(rec: &[Vec<BigInt>]) -> Vec<BigInt> {
    rec.iter()
        .fold(Vec::new(), |acc, row| uni_gcd(&acc, row))
}

fn biv_divide_content(rec: &[Vec<BigInt>], cont: &[BigInt]) -> Vec<Vec<BigInt>> {
    rec.iter()
        .map(|row| {
            if uni_is_zero(row) {
                vec![]
            } else {
                uni_exact_div(row, cont)
            }
        })
        .collect()
}

/// Exact division in Z[t]; panics when not divisible (internal invariant).
fn uni_exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = uni_trim(a.to_vec());
    let b = uni_trim(b.to_vec());
    let db = b.len() - 1;
    let lc = b.last().unwrap();
    let mut q = vec![BigInt::zero(); rem.len().saturating_sub(db)];
    while !rem.is_empty() && rem.len() > db {
        let d = rem.len() - 1 - db;
        let (c, r) = rem.last().unwrap().div_rem(lc);
        assert!(r.is_zero(), "content division must be exact");
        q[d] = c.clone();
        let mut shifted = vec![BigInt::zero(); d];
        shifted.extend(uni_scale(&b, &c));
        rem = uni_sub(&rem, &shifted);
    }
    assert!(uni_is_zero(&rem), "content division must be exact");
    q
}

fn biv_trim(mut rec: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    for row in rec.iter_mut() {
        let t = uni_trim(std::mem::take(row));
        *row = t;
    }
    while rec.last().is_some_and(|r| r.is_empty()) {
        rec.pop();
    }
    rec
}

/// Pseudo-remainder in var1 of f by g, coefficients in `Z[t2]`.
fn biv_prem(f: &[Vec<BigInt>], g: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut r = biv_trim(f.to_vec());
    let g = biv_trim(g.to_vec());
    let dg = g.len() - 1;
    let lc = g.last().unwrap().clone();
    while r.len() > dg {
        let dr = r.len() - 1;
        let coef = r.last().unwrap().clone();
        // r = lc*r - coef * t1^(dr-dg) * g, coefficientwise in Z[t2]
        let mut out: Vec<Vec<BigInt>> = r.iter().map(|row| uni_mul(row, &lc)).collect();
        for (i, grow) in g.iter().enumerate() {
            let idx = dr - dg + i;
            let sub = uni_mul(grow, &coef);
            out[idx] = uni_sub(&out[idx], &sub);
        }
        r = biv_trim(out);
    }
    r
}

/// Gcd in `Z[t1^±, t2^±]`, normalized; `gcd(0,0) = 0`.
pub fn bilaurent_gcd(f: &BiLaurentPoly, g: &BiLaurentPoly) -> BiLaurentPoly {
    if f.is_zero() {
        return g.normalize();
    }
    if g.is_zero() {
        return f.normalize();
    }
    let (v1, v2) = f.vars();
    let fr = f.to_recursive();
    let gr = g.to_recursive();
    let cf = biv_content(&fr);
    let cg = biv_content(&gr);
    let cont = uni_gcd(&cf, &cg);
    let mut a = biv_trim(biv_divide_content(&fr, &cf));
    let mut b = biv_trim(biv_divide_content(&gr, &cg));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = biv_prem(&a, &b);
        a = b;
        let rc = biv_content(&r);
        b = if r.is_empty() {
            r
        } else {
            biv_trim(biv_divide_content(&r, &rc))
        };
    }
    // strip var1-content of the primitive-part gcd, then restore the content gcd
    let ca = biv_content(&a);
    let pp = biv_trim(biv_divide_content(&a, &ca));
    let pp_poly = BiLaurentPoly::from_recursive(v1, v2, &pp);
    let cont_poly =
        BiLaurentPoly::from_recursive(v1, v2, &[cont]);
    pp_poly.mul(&cont_poly).normalize()
}

impl super::RingOps for BiLaurentPoly {
    fn zero_like(&self) -> Self {
        BiLaurentPoly::zero(&self.var1, &self.var2)
    }
    fn one_like(&self) -> Self {
        BiLaurentPoly::one(&self.var1, &self.var2)
    }
    fn is_zero(&self) -> bool {
        BiLaurentPoly::is_zero(self)
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
        BiLaurentPoly::exact_div(self, rhs)
    }
}
