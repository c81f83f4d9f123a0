//! Exact arithmetic in F_p, F_{p^k} and Q.
//!
//! A [`Field`] is a cheap, shareable handle on a [`FieldSpec`]. Elements are
//! stored as bare [`Elem`] values and all arithmetic goes through the field
//! handle, so polynomials and matrices keep one handle and a vector of values.
//! [`FieldElement`] pairs a value with its field and is the checked, public
//! face of the arithmetic: mixing fields is reported as
//! [`Error::SpecMismatch`] instead of producing garbage.
//!
//! Canonical forms:
//! - `F_p`: an integer in `[0, p)`.
//! - `F_{p^k} = F_p[a]/(modulus)`: `k` coefficients in `[0, p)`, ascending in
//!   the generator `a`.
//! - `Q`: a reduced fraction with positive denominator.
//!
//! `ACF` and `RCF` are verdict-only tags: they have no elements.

mod conway;
mod gfp;
mod valuation;

pub use conway::conway_modulus;
pub use valuation::{two_adic_valuation, v2_integer, v2_rational, Valuation};

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Largest admissible characteristic (exclusive).
pub const PRIME_CAP: u64 = 1 << 31;

/// Which field computations happen in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime {
        p: u64,
    },
    /// `F_p[a]/(modulus)`; `modulus` is monic, ascending, of degree `k >= 2`.
    Extension {
        p: u64,
        modulus: Vec<u64>,
    },
    Rationals,
    AlgClosed,
    RealClosed,
}

/// A single field element in canonical form. Only meaningful together with
/// the [`Field`] that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Elem {
    Fp(u64),
    Fq(Vec<u64>),
    Q(BigRational),
}

/// Shared handle on a [`FieldSpec`].
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldSpec::Prime { p } => write!(f, "F{p}"),
            FieldSpec::Extension { p, modulus } => {
                let q = p.pow((modulus.len() - 1) as u32);
                write!(f, "F{q}:modulus={}", gfp::format(modulus, "x"))
            }
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::AlgClosed => write!(f, "ACF"),
            FieldSpec::RealClosed => write!(f, "RCF"),
        }
    }
}

/// Trial division, adequate for `p < 2^31`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits `q` into `(p, k)` with `q = p^k`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= PRIME_CAP || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldSpec::Prime { p })))
    }

    /// `F_p[a]/(modulus)` with a user supplied modulus (ascending coefficients).
    /// The modulus must be monic and irreducible over `F_p`.
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Field> {
        let base = Field::prime(p)?;
        let reduced: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        let modulus = gfp::trim(reduced);
        let shown = gfp::format(&modulus, "x");
        if modulus.len() < 3 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidModulus(shown));
        }
        let poly = crate::poly::UniPoly::new(
            base.clone(),
            modulus.iter().map(|&c| Elem::Fp(c)).collect(),
        )?;
        if !crate::poly::is_irreducible(&poly)? {
            return Err(Error::InvalidModulus(shown));
        }
        Ok(Field(Arc::new(FieldSpec::Extension { p, modulus })))
    }

    /// `F_q` from the built-in table of irreducibles for `q = p^k <= 64`,
    /// or the prime field when `q` is prime.
    pub fn finite(q: u64) -> Result<Field> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrime(q))?;
        if k == 1 {
            return Field::prime(p);
        }
        let modulus = conway_modulus(p, k)
            .ok_or_else(|| Error::Unsupported(format!("no built-in modulus for F{q}")))?;
        Field::extension(p, modulus)
    }

    pub fn rationals() -> Field {
        Field(Arc::new(FieldSpec::Rationals))
    }

    pub fn alg_closed() -> Field {
        Field(Arc::new(FieldSpec::AlgClosed))
    }

    pub fn real_closed() -> Field {
        Field(Arc::new(FieldSpec::RealClosed))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0
    }

    /// False for the `ACF` / `RCF` tags.
    pub fn is_computable(&self) -> bool {
        !matches!(&*self.0, FieldSpec::AlgClosed | FieldSpec::RealClosed)
    }

    pub fn is_finite(&self) -> bool {
        matches!(
            &*self.0,
            FieldSpec::Prime { .. } | FieldSpec::Extension { .. }
        )
    }

    pub fn is_rationals(&self) -> bool {
        matches!(&*self.0, FieldSpec::Rationals)
    }

    pub fn is_tag(&self) -> bool {
        !self.is_computable()
    }

    pub fn ensure_computable(&self) -> Result<()> {
        if self.is_computable() {
            Ok(())
        } else {
            Err(Error::SymbolicField(self.to_string()))
        }
    }

    pub fn ensure_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpecMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }

    /// Characteristic; 0 for Q.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldSpec::Prime { p } | FieldSpec::Extension { p, .. } => *p,
            _ => 0,
        }
    }

    /// Extension degree over the prime field (1 for `F_p` and Q).
    pub fn degree(&self) -> u32 {
        match &*self.0 {
            FieldSpec::Extension { modulus, .. } => (modulus.len() - 1) as u32,
            _ => 1,
        }
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u64> {
        match &*self.0 {
            FieldSpec::Prime { p } => Some(*p),
            FieldSpec::Extension { p, modulus } => p.checked_pow((modulus.len() - 1) as u32),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            FieldSpec::Prime { .. } => Elem::Fp(0),
            FieldSpec::Extension { modulus, .. } => Elem::Fq(vec![0; modulus.len() - 1]),
            FieldSpec::Rationals => Elem::Q(BigRational::zero()),
            _ => panic!("no elements in symbolic field {self}"),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Elem {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Elem {
        match &*self.0 {
            FieldSpec::Prime { p } => Elem::Fp(reduce_bigint(v, *p)),
            FieldSpec::Extension { p, modulus } => {
                let mut c = vec![0; modulus.len() - 1];
                c[0] = reduce_bigint(v, *p);
                Elem::Fq(c)
            }
            FieldSpec::Rationals => Elem::Q(BigRational::from_integer(v.clone())),
            _ => panic!("no elements in symbolic field {self}"),
        }
    }

    /// The image of `num / den`.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Elem> {
        self.ensure_computable()?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rationals() {
            return Ok(Elem::Q(BigRational::new(num.clone(), den.clone())));
        }
        let d = self.from_bigint(den);
        let inv = self.inv(&d)?;
        Ok(self.mul(&self.from_bigint(num), &inv))
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<Elem> {
        self.from_ratio(r.numer(), r.denom())
    }

    /// The class of the generator `a` in an extension field.
    pub fn generator(&self) -> Result<Elem> {
        match &*self.0 {
            FieldSpec::Extension { modulus, .. } => {
                let mut c = vec![0; modulus.len() - 1];
                c[1] = 1;
                Ok(Elem::Fq(c))
            }
            _ => Err(Error::Unsupported(format!("generator of {self}"))),
        }
    }

    /// Element built from ascending coefficients in the generator, reduced.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Elem> {
        match &*self.0 {
            FieldSpec::Prime { p } if coeffs.len() <= 1 => {
                Ok(Elem::Fp(coeffs.first().copied().unwrap_or(0) % p))
            }
            FieldSpec::Extension { p, modulus } => {
                let c: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
                let r = gfp::rem(&c, modulus, *p);
                Ok(Elem::Fq(gfp::pad(r, modulus.len() - 1)))
            }
            _ => Err(Error::Unsupported(format!("coefficient vectors in {self}"))),
        }
    }

    /// Checks that `e` is a canonical value of this field.
    pub fn validate(&self, e: &Elem) -> Result<()> {
        self.ensure_computable()?;
        let ok = match (&*self.0, e) {
            (FieldSpec::Prime { p }, Elem::Fp(v)) => v < p,
            (FieldSpec::Extension { p, modulus }, Elem::Fq(v)) => {
                v.len() == modulus.len() - 1 && v.iter().all(|c| c < p)
            }
            (FieldSpec::Rationals, Elem::Q(r)) => {
                r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NonCanonical(format!("{e:?} in {self}")))
        }
    }

    pub fn is_zero(&self, e: &Elem) -> bool {
        match e {
            Elem::Fp(v) => *v == 0,
            Elem::Fq(v) => v.iter().all(|c| *c == 0),
            Elem::Q(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, e: &Elem) -> bool {
        match e {
            Elem::Fp(v) => *v == 1,
            Elem::Fq(v) => v[0] == 1 && v[1..].iter().all(|c| *c == 0),
            Elem::Q(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (FieldSpec::Prime { p }, Elem::Fp(x), Elem::Fp(y)) => Elem::Fp((x + y) % p),
            (FieldSpec::Extension { p, .. }, Elem::Fq(x), Elem::Fq(y)) => {
                Elem::Fq(x.iter().zip(y).map(|(u, v)| (u + v) % p).collect())
            }
            (FieldSpec::Rationals, Elem::Q(x), Elem::Q(y)) => Elem::Q(x + y),
            _ => panic!("element/field mismatch in {self}: {a:?}, {b:?}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&*self.0, a) {
            (FieldSpec::Prime { p }, Elem::Fp(x)) => Elem::Fp((p - x) % p),
            (FieldSpec::Extension { p, .. }, Elem::Fq(x)) => {
                Elem::Fq(x.iter().map(|u| (p - u) % p).collect())
            }
            (FieldSpec::Rationals, Elem::Q(x)) => Elem::Q(-x),
            _ => panic!("element/field mismatch in {self}: {a:?}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (FieldSpec::Prime { p }, Elem::Fp(x), Elem::Fp(y)) => Elem::Fp(x * y % p),
            (FieldSpec::Extension { p, modulus }, Elem::Fq(x), Elem::Fq(y)) => {
                let prod = gfp::mul(x, y, *p);
                Elem::Fq(gfp::pad(gfp::rem(&prod, modulus, *p), modulus.len() - 1))
            }
            (FieldSpec::Rationals, Elem::Q(x), Elem::Q(y)) => Elem::Q(x * y),
            _ => panic!("element/field mismatch in {self}: {a:?}, {b:?}"),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&*self.0, a) {
            (FieldSpec::Prime { p }, Elem::Fp(x)) => Elem::Fp(inv_mod(*x, *p)),
            (FieldSpec::Extension { p, modulus }, Elem::Fq(x)) => {
                let inv = gfp::inv_mod_poly(&gfp::trim(x.clone()), modulus, *p);
                Elem::Fq(gfp::pad(inv, modulus.len() - 1))
            }
            (FieldSpec::Rationals, Elem::Q(x)) => Elem::Q(x.recip()),
            _ => panic!("element/field mismatch in {self}: {a:?}"),
        })
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// The unique `p`-th root in a finite field (`a^(p^(k-1))`).
    pub fn pth_root(&self, a: &Elem) -> Elem {
        let p = self.characteristic();
        let mut r = a.clone();
        for _ in 1..self.degree() {
            r = self.pow(&r, p);
        }
        r
    }

    /// `n * a` for an integer multiplier.
    pub fn scale_int(&self, a: &Elem, n: u64) -> Elem {
        self.mul(a, &self.from_bigint(&BigInt::from(n)))
    }

    /// Position of `e` in [`Field::enumerate`] order.
    pub fn index_of(&self, e: &Elem) -> Option<u64> {
        match (&*self.0, e) {
            (FieldSpec::Prime { .. }, Elem::Fp(v)) => Some(*v),
            (FieldSpec::Extension { p, .. }, Elem::Fq(v)) => {
                Some(v.iter().rev().fold(0, |acc, c| acc * p + c))
            }
            _ => None,
        }
    }

    /// The element at position `i` of [`Field::enumerate`] order.
    pub fn elem_at(&self, mut i: u64) -> Elem {
        match &*self.0 {
            FieldSpec::Prime { .. } => Elem::Fp(i),
            FieldSpec::Extension { p, modulus } => {
                let mut c = vec![0; modulus.len() - 1];
                for slot in c.iter_mut() {
                    *slot = i % p;
                    i /= p;
                }
                Elem::Fq(c)
            }
            _ => panic!("{self} is not finite"),
        }
    }

    /// All elements of a finite field, lexicographic on the canonical
    /// representation (for extensions the top coefficient is most significant,
    /// so `F_4 = [0, 1, a, a+1]`).
    pub fn enumerate(&self) -> Result<impl Iterator<Item = Elem> + '_> {
        let q = self
            .order()
            .ok_or_else(|| Error::InfiniteField(self.to_string()))?;
        Ok((0..q).map(move |i| self.elem_at(i)))
    }

    /// Total order used for deterministic tie-breaking: enumeration order for
    /// finite fields, numeric order for Q.
    pub fn cmp_elem(&self, a: &Elem, b: &Elem) -> Ordering {
        match (a, b) {
            (Elem::Q(x), Elem::Q(y)) => x.cmp(y),
            _ => self.index_of(a).cmp(&self.index_of(b)),
        }
    }

    pub fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        match &*self.0 {
            FieldSpec::Prime { p } => Elem::Fp(rng.gen_range(0..*p)),
            FieldSpec::Extension { p, modulus } => {
                Elem::Fq((1..modulus.len()).map(|_| rng.gen_range(0..*p)).collect())
            }
            FieldSpec::Rationals => {
                let num: i64 = rng.gen_range(-30..=30);
                let den: i64 = rng.gen_range(1..=12);
                Elem::Q(BigRational::new(num.into(), den.into()))
            }
            _ => panic!("no elements in symbolic field {self}"),
        }
    }

    /// Rational value of an element of Q.
    pub fn as_rational<'a>(&self, e: &'a Elem) -> Option<&'a BigRational> {
        match e {
            Elem::Q(r) => Some(r),
            _ => None,
        }
    }

    /// Canonical text: integers for `F_p`, a polynomial in `a` for extensions,
    /// `n` or `n/d` for Q.
    pub fn format_elem(&self, e: &Elem) -> String {
        match e {
            Elem::Fp(v) => v.to_string(),
            Elem::Fq(v) => gfp::format(&gfp::trim(v.clone()), "a"),
            Elem::Q(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// Whether the formatted element needs parentheses when used as a factor.
    pub(crate) fn is_compound(&self, e: &Elem) -> bool {
        match e {
            Elem::Fq(v) => v.iter().filter(|c| **c != 0).count() > 1,
            _ => false,
        }
    }

    /// Sign of an element for rendering: only Q has negative values.
    pub(crate) fn is_negative(&self, e: &Elem) -> bool {
        matches!(e, Elem::Q(r) if r.is_negative())
    }
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i64) as u64
}

/// An element together with its field; the checked arithmetic surface.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    elem: Elem,
}

impl FieldElement {
    pub fn new(field: Field, elem: Elem) -> Result<Self> {
        field.validate(&elem)?;
        Ok(FieldElement { field, elem })
    }

    pub(crate) fn from_parts(field: Field, elem: Elem) -> Self {
        FieldElement { field, elem }
    }

    pub fn from_i64(field: &Field, v: i64) -> Result<Self> {
        field.ensure_computable()?;
        Ok(FieldElement::from_parts(field.clone(), field.from_i64(v)))
    }

    pub fn from_ratio(field: &Field, num: i64, den: i64) -> Result<Self> {
        let e = field.from_ratio(&num.into(), &den.into())?;
        Ok(FieldElement::from_parts(field.clone(), e))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn elem(&self) -> &Elem {
        &self.elem
    }

    pub fn into_elem(self) -> Elem {
        self.elem
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.elem)
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        self.field.ensure_computable()?;
        self.field.ensure_same(&other.field)
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.field.add(&self.elem, &other.elem)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.field.sub(&self.elem, &other.elem)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.field.mul(&self.elem, &other.elem)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with(self.field.div(&self.elem, &other.elem)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(&self.elem))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.field.ensure_computable()?;
        Ok(self.with(self.field.inv(&self.elem)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(&self.elem, e))
    }

    fn with(&self, elem: Elem) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            elem,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_elem(&self.elem))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::from_ratio(&Field::rationals(), n, d).unwrap()
    }

    fn f9() -> Field {
        Field::extension(3, &[1, 0, 1]).unwrap()
    }

    #[test]
    fn prime_field_examples() {
        let f5 = Field::prime(5).unwrap();
        let a = FieldElement::from_i64(&f5, 3).unwrap();
        let b = FieldElement::from_i64(&f5, 4).unwrap();
        assert_eq!(a.add(&b).unwrap().to_string(), "2");
        assert_eq!(a.mul(&b).unwrap().to_string(), "2");
        let f7 = Field::prime(7).unwrap();
        let three = FieldElement::from_i64(&f7, 3).unwrap();
        assert_eq!(three.inv().unwrap().to_string(), "5");
    }

    #[test]
    fn rational_examples() {
        assert_eq!(q(1, 2).add(&q(1, 3)).unwrap(), q(5, 6));
        assert_eq!(q(2, 3).mul(&q(3, 4)).unwrap(), q(1, 2));
        assert_eq!(q(-2, 3).inv().unwrap(), q(-3, 2));
        assert_eq!(q(6, -4).to_string(), "-3/2");
    }

    #[test]
    fn extension_examples() {
        let f = f9();
        let x = FieldElement::new(f.clone(), f.generator().unwrap()).unwrap();
        let two_x_plus_1 = FieldElement::new(f.clone(), Elem::Fq(vec![1, 2])).unwrap();
        assert_eq!(x.add(&two_x_plus_1).unwrap().to_string(), "1");
        assert_eq!(x.mul(&x).unwrap().to_string(), "2");
        assert_eq!(x.inv().unwrap().to_string(), "2*a");
    }

    #[test]
    fn enumerate_order() {
        let f2: Vec<String> = {
            let f = Field::prime(2).unwrap();
            f.enumerate().unwrap().map(|e| f.format_elem(&e)).collect()
        };
        assert_eq!(f2, ["0", "1"]);
        let f4 = Field::extension(2, &[1, 1, 1]).unwrap();
        let names: Vec<String> = f4
            .enumerate()
            .unwrap()
            .map(|e| f4.format_elem(&e))
            .collect();
        assert_eq!(names, ["0", "1", "a", "a+1"]);
        assert_eq!(f9().enumerate().unwrap().count(), 9);
        assert!(Field::rationals().enumerate().is_err());
    }

    #[test]
    fn errors() {
        let f5 = Field::prime(5).unwrap();
        let f7 = Field::prime(7).unwrap();
        let a = FieldElement::from_i64(&f5, 1).unwrap();
        let b = FieldElement::from_i64(&f7, 1).unwrap();
        assert!(matches!(a.add(&b), Err(Error::SpecMismatch { .. })));
        assert_eq!(
            FieldElement::from_i64(&f5, 0).unwrap().inv(),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            FieldElement::from_i64(&Field::alg_closed(), 1),
            Err(Error::SymbolicField(_))
        ));
        assert_eq!(Field::prime(9), Err(Error::NotPrime(9)));
        assert!(matches!(
            Field::extension(3, &[2, 0, 1]),
            Err(Error::InvalidModulus(_))
        ));
        assert!(FieldElement::new(f5, Elem::Fp(5)).is_err());
    }

    #[test]
    fn builtin_table_is_irreducible() {
        for q in [4, 8, 16, 32, 64, 9, 27, 25, 49] {
            let f = Field::finite(q).unwrap();
            assert_eq!(f.order(), Some(q));
        }
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(7), Some((7, 1)));
    }

    #[test]
    fn pth_root_inverts_frobenius() {
        let f = Field::finite(27).unwrap();
        for e in f.enumerate().unwrap() {
            let r = f.pth_root(&e);
            assert_eq!(f.pow(&r, 3), e);
        }
    }
}
