//! Number fields `Q[xi]/(m(xi))` for a monic integer defining polynomial.
//!
//! The field is fixed per computation; elements hold a shared handle to it.
//! The shipped instance is the 8th cyclotomic field `Q[xi]/(xi^4+1)`, which
//! carries distinguished square roots of 2 and -1.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{AlgebraError, Rational};

/// A number field defined by a monic integer polynomial in the symbol `var`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberField {
    var: String,
    /// Coefficients of m, low degree first; leading coefficient is 1.
    min_poly: Vec<BigInt>,
}

impl NumberField {
    /// `min_poly` low-degree-first, must be monic of degree >= 1.
    ///
    /// Irreducibility is the caller's responsibility (the shipped `xi^4+1`
    /// is irreducible); a reducible polynomial surfaces later as a
    /// `NotInvertible` error from [`NFElem::inverse`].
    pub fn new(var: &str, min_poly: Vec<BigInt>) -> Arc<Self> {
        assert!(min_poly.len() >= 2, "defining polynomial must have degree >= 1");
        assert!(
            min_poly.last().unwrap().is_one(),
            "defining polynomial must be monic"
        );
        Arc::new(NumberField {
            var: var.to_string(),
            min_poly,
        })
    }

    /// `Q` itself, presented as `Q[xi]/(xi)`.
    pub fn rationals() -> Arc<Self> {
        NumberField::new("xi", vec![BigInt::zero(), BigInt::one()])
    }

    /// The 8th cyclotomic field `Q[xi]/(xi^4+1)`.
    pub fn cyclotomic8() -> Arc<Self> {
        NumberField::new(
            "xi",
            vec![
                BigInt::one(),
                BigInt::zero(),
                BigInt::zero(),
                BigInt::zero(),
                BigInt::one(),
            ],
        )
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    pub fn zero(self: &Arc<Self>) -> NFElem {
        NFElem {
            field: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> NFElem {
        self.from_int(1)
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> NFElem {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(self: &Arc<Self>, q: Rational) -> NFElem {
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[0] = q;
        NFElem {
            field: Arc::clone(self),
            coeffs,
        }
    }

    /// The generator `xi` (reduced if the degree is 1).
    pub fn gen(self: &Arc<Self>) -> NFElem {
        self.monomial(1)
    }

    /// `xi^k` reduced into the field.
    pub fn monomial(self: &Arc<Self>, k: usize) -> NFElem {
        let mut raw = vec![Rational::zero(); k + 1];
        raw[k] = Rational::one();
        NFElem {
            field: Arc::clone(self),
            coeffs: reduce_mod(self, raw),
        }
    }

    /// Element from coefficients (low degree first, length <= degree allowed).
    pub fn element(self: &Arc<Self>, coeffs: Vec<Rational>) -> NFElem {
        NFElem {
            field: Arc::clone(self),
            coeffs: reduce_mod(self, coeffs),
        }
    }

    /// For the quartic `xi^4+1`: the element `xi^3 - xi`, which squares to 2.
    /// The sign convention is pinned downstream by representation
    /// verification; see `alexander::rep`.
    pub fn sqrt2_default(self: &Arc<Self>) -> NFElem {
        assert_eq!(self.degree(), 4, "sqrt2 constant lives in the quartic field");
        self.element(vec![
            Rational::zero(),
            -Rational::one(),
            Rational::zero(),
            Rational::one(),
        ])
    }

    /// For the quartic `xi^4+1`: the element `xi^2`, which squares to -1.
    pub fn i_default(self: &Arc<Self>) -> NFElem {
        assert_eq!(self.degree(), 4, "i constant lives in the quartic field");
        self.monomial(2)
    }
}

fn reduce_mod(field: &NumberField, mut raw: Vec<Rational>) -> Vec<Rational> {
    let deg = field.degree();
    while raw.len() > deg {
        let top = raw.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        // xi^(k+deg) = -xi^k * (m_0 + m_1 xi + ... + m_{deg-1} xi^{deg-1})
        let k = raw.len() - deg;
        for (i, m) in field.min_poly.iter().take(deg).enumerate() {
            let delta = &top * Rational::from_integer(m.clone());
            raw[k + i] -= delta;
        }
    }
    raw.resize(deg, Rational::zero());
    raw
}

/// An element of a [`NumberField`], stored as a residue of degree < deg(m).
#[derive(Debug, Clone)]
pub struct NFElem {
    field: Arc<NumberField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for NFElem {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.coeffs == other.coeffs
    }
}
impl Eq for NFElem {}

impl NFElem {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(self.same_field(other), "mixing elements of different number fields");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        NFElem {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        NFElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_field(rhs);
        let deg = self.field.degree();
        let mut raw = vec![Rational::zero(); 2 * deg];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        NFElem {
            field: Arc::clone(&self.field),
            coeffs: reduce_mod(&self.field, raw),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        NFElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|a| a.is_zero())
    }

    pub fn is_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|a| a.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = self.field.one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm in `Q[x]`.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        // extended euclid: r0 = m, r1 = lift(self); track s in r = s*lift + t*m
        let m: Vec<Rational> = self
            .field
            .min_poly
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let a = trim(self.coeffs.clone());
        let (mut r0, mut r1) = (trim(m), a);
        let (mut s0, mut s1) = (vec![], vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd; invertible iff gcd is a nonzero constant
        if r0.len() != 1 {
            return Err(AlgebraError::NotInvertible);
        }
        let c = r0[0].recip();
        let inv: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
        Ok(NFElem {
            field: Arc::clone(&self.field),
            coeffs: reduce_mod(&self.field, inv),
        })
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if a.len() <= db {
        return (vec![], trim(rem));
    }
    let lead = b[db].recip();
    let mut quot = vec![Rational::zero(); a.len() - db];
    while rem.len() > db {
        let d = rem.len() - 1 - db;
        let c = rem.last().unwrap() * &lead;
        quot[d] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let delta = &c * bc;
            rem[d + i] -= delta;
        }
        rem = trim(rem);
        if rem.len() <= db {
            break;
        }
    }
    (trim(quot), trim(rem))
}

impl super::RingOps for NFElem {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        NFElem::is_zero(self)
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
        rhs.inverse().ok().map(|inv| self.mul(&inv))
    }
}
