//! Exact univariate and multivariate polynomials over a [`Field`].
//!
//! [`UniPoly`] is dense with ascending coefficients and no trailing zeros
//! (the zero polynomial has an empty coefficient list). Arithmetic operators
//! panic when the operands live in different fields; the named operations
//! (`eval_at`, `gcd`, `extended_gcd`, ...) report [`Error::SpecMismatch`].

mod factor_fq;
mod factor_q;
mod format;
mod multi;
mod profile;
mod sturm;
mod zpoly;

pub use factor_fq::{
    factor_finite, factor_finite_with_seed, is_irreducible, squarefree_decomposition,
};
pub use factor_q::{factor_rationals, rational_roots, COEFF_BITS_CAP, DEGREE_CAP};
pub use format::TermOrder;
pub use multi::{multi_eval, Monomial, MultiPoly};
pub use profile::{factor_profile, factor_profile_with_seed, FactorProfile};
pub use sturm::{is_strictly_monotone_r, sturm_real_roots, sturm_sequence, Interval};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::fields::{Elem, Field, FieldElement};

/// Default seed for the randomized equal-degree splitting step.
pub const DEFAULT_SEED: u64 = 0x5eed_e7a1;

/// Dense univariate polynomial, ascending coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Elem>,
}

/// A factorization `unit * prod(factor^mult)` with monic irreducible factors,
/// sorted by degree and then by coefficient sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn reconstruct(&self) -> UniPoly {
        let field = self.unit.field();
        let mut acc = UniPoly::constant(field, self.unit.elem().clone());
        for (q, e) in &self.factors {
            acc = &acc * &q.pow(*e);
        }
        acc
    }
}

impl UniPoly {
    /// Validated constructor: every coefficient must be canonical in `field`.
    pub fn new(field: Field, coeffs: Vec<Elem>) -> Result<Self> {
        field.ensure_computable()?;
        for c in &coeffs {
            field.validate(c)?;
        }
        Ok(Self::from_raw(field, coeffs))
    }

    pub(crate) fn from_raw(field: Field, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: &Field) -> Self {
        UniPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, field.one())
    }

    /// The indeterminate `x`.
    pub fn x(field: &Field) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    pub fn constant(field: &Field, c: Elem) -> Self {
        Self::from_raw(field.clone(), vec![c])
    }

    pub fn monomial(field: &Field, c: Elem, deg: usize) -> Self {
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_raw(field.clone(), coeffs)
    }

    /// Integer coefficients, ascending, mapped into `field`.
    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> Result<Self> {
        field.ensure_computable()?;
        Ok(Self::from_raw(
            field.clone(),
            coeffs.iter().map(|c| field.from_i64(*c)).collect(),
        ))
    }

    /// Rational coefficients `(num, den)`, ascending.
    pub fn from_ratios(field: &Field, coeffs: &[(i64, i64)]) -> Result<Self> {
        let cs = coeffs
            .iter()
            .map(|(n, d)| field.from_ratio(&(*n).into(), &(*d).into()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(field.clone(), cs))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&Elem> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    fn assert_same(&self, other: &UniPoly) {
        assert!(
            self.field == other.field,
            "polynomial field mismatch: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn scale(&self, c: &Elem) -> UniPoly {
        let f = &self.field;
        Self::from_raw(f.clone(), self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.field.ensure_same(&d.field)?;
        let f = &self.field;
        let lc = d.leading().ok_or(Error::DivisionByZero)?;
        let lc_inv = f.inv(lc)?;
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(f), self.clone()));
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = f.mul(&r[i + dd], &lc_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = f.sub(&r[i + j], &f.mul(&c, dc));
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::from_raw(f.clone(), q), Self::from_raw(f.clone(), r)))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Quotient of an exact division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        other.exact_div(self).is_some()
    }

    /// Horner evaluation on raw field values.
    pub fn eval(&self, a: &Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, a), c))
    }

    /// Checked Horner evaluation.
    pub fn eval_at(&self, a: &FieldElement) -> Result<FieldElement> {
        self.field.ensure_same(a.field())?;
        Ok(FieldElement::from_parts(
            self.field.clone(),
            self.eval(a.elem()),
        ))
    }

    /// Formal derivative; `i * a_i` is computed in the field, so terms whose
    /// exponent is a multiple of the characteristic vanish.
    pub fn derivative(&self) -> UniPoly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.scale_int(c, i as u64))
            .collect();
        Self::from_raw(f.clone(), coeffs)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        self.field.ensure_same(&other.field)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        Ok(a.monic())
    }

    /// `(g, u, v)` with `u*self + v*other = g = gcd(self, other)`, `g` monic,
    /// and `deg u < deg other - deg g` whenever `other` does not divide `self`.
    pub fn extended_gcd(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
        self.field.ensure_same(&other.field)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(f), UniPoly::zero(f));
        let (mut t0, mut t1) = (UniPoly::zero(f), UniPoly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = f.inv(r0.leading().expect("nonzero gcd"))?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// `(m, h)` with `self = x^m * h` and `h(0) != 0`.
    pub fn zero_multiplicity(&self) -> Result<(usize, UniPoly)> {
        let m = self
            .coeffs
            .iter()
            .position(|c| !self.field.is_zero(c))
            .ok_or(Error::ZeroPolynomial)?;
        Ok((
            m,
            Self::from_raw(self.field.clone(), self.coeffs[m..].to_vec()),
        ))
    }

    /// `self^e mod modulus` for a big exponent.
    pub fn pow_mod(&self, e: &BigUint, modulus: &UniPoly) -> Result<UniPoly> {
        let mut acc = UniPoly::one(&self.field).rem(modulus)?;
        let base = self.rem(modulus)?;
        for i in (0..e.bits()).rev() {
            acc = (&acc * &acc).rem(modulus)?;
            if e.bit(i) {
                acc = (&acc * &base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Substitute `x -> x^k`.
    pub fn inflate(&self, k: usize) -> UniPoly {
        let f = &self.field;
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![f.zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_raw(f.clone(), coeffs)
    }

    /// Ordering used to pick among factors: degree first, then coefficients
    /// from the constant term upwards in the field's element order.
    pub fn cmp_canonical(&self, other: &UniPoly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
                match self.field.cmp_elem(a, b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }

    pub fn to_string_ordered(&self, order: TermOrder) -> String {
        format::format_uni(self, order, "x")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::format_uni(self, TermOrder::Descending, "x"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.assert_same(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        UniPoly::from_raw(f.clone(), coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        let f = &self.field;
        UniPoly::from_raw(f.clone(), self.coeffs.iter().map(|c| f.neg(c)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.assert_same(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        UniPoly::from_raw(f.clone(), out)
    }
}

/// Checked Horner evaluation `f(a)`.
pub fn poly_eval(f: &UniPoly, a: &FieldElement) -> Result<FieldElement> {
    f.eval_at(a)
}

pub fn derivative(f: &UniPoly) -> UniPoly {
    f.derivative()
}

pub fn gcd_poly(a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    a.gcd(b)
}

pub fn extended_gcd(a: &UniPoly, b: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
    a.extended_gcd(b)
}

pub fn zero_multiplicity(f: &UniPoly) -> Result<(usize, UniPoly)> {
    f.zero_multiplicity()
}
