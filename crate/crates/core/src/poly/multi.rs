use std::collections::BTreeMap;
use std::fmt;

use super::format::join_terms;
use super::UniPoly;
use crate::error::{Error, Result};
use crate::fields::{Elem, Field, FieldElement};

/// Exponent tuple, one entry per variable.
pub type Monomial = Vec<u32>;

/// Sparse polynomial in `nvars` commuting variables. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, Elem>,
}

impl MultiPoly {
    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// monomials are summed.
    pub fn new(
        field: Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Elem)>,
    ) -> Result<Self> {
        field.ensure_computable()?;
        if nvars == 0 {
            return Err(Error::Precondition(
                "a multivariate polynomial needs at least one variable".into(),
            ));
        }
        let mut out = MultiPoly::zero(&field, nvars);
        for (mono, c) in terms {
            if mono.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    got: mono.len(),
                });
            }
            field.validate(&c)?;
            out.add_term(mono, c);
        }
        Ok(out)
    }

    pub fn zero(field: &Field, nvars: usize) -> Self {
        MultiPoly {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, nvars: usize, c: Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable with index `i` (0-based).
    pub fn var(field: &Field, nvars: usize, i: usize) -> Self {
        let mut mono = vec![0; nvars];
        mono[i] = 1;
        let mut p = Self::zero(field, nvars);
        p.add_term(mono, field.one());
        p
    }

    /// Embeds a univariate polynomial as a polynomial in the first variable.
    pub fn from_uni(f: &UniPoly, nvars: usize) -> Self {
        let mut p = Self::zero(f.field(), nvars);
        for (i, c) in f.coeffs().iter().enumerate() {
            let mut mono = vec![0; nvars];
            mono[0] = i as u32;
            p.add_term(mono, c.clone());
        }
        p
    }

    /// The univariate polynomial when `nvars == 1`.
    pub fn to_uni(&self) -> Option<UniPoly> {
        if self.nvars != 1 {
            return None;
        }
        let deg = self.total_degree() as usize;
        let mut coeffs = vec![self.field.zero(); deg + 1];
        for (mono, c) in &self.terms {
            coeffs[mono[0] as usize] = c.clone();
        }
        Some(UniPoly::from_raw(self.field.clone(), coeffs))
    }

    fn add_term(&mut self, mono: Monomial, c: Elem) {
        let f = &self.field;
        let sum = match self.terms.remove(&mono) {
            Some(old) => f.add(&old, &c),
            None => c,
        };
        if !f.is_zero(&sum) {
            self.terms.insert(mono, sum);
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Elem)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|e| *e == 0))
    }

    /// Maximum total degree of a term, 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    fn assert_same(&self, other: &MultiPoly) {
        assert!(
            self.field == other.field && self.nvars == other.nvars,
            "multivariate polynomial mismatch"
        );
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        let f = &self.field;
        MultiPoly {
            field: f.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same(other);
        let f = &self.field;
        let mut out = MultiPoly::zero(f, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mono = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(mono, f.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(&self.field, self.nvars, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluation at raw elements of the coefficient field.
    pub fn eval(&self, point: &[Elem]) -> Result<Elem> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let f = &self.field;
        let mut acc = f.zero();
        for (mono, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in point.iter().zip(mono) {
                if *e > 0 {
                    t = f.mul(&t, &f.pow(x, u64::from(*e)));
                }
            }
            acc = f.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Exact evaluation at a tuple of field elements.
    pub fn multi_eval(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        for p in point {
            self.field.ensure_same(p.field())?;
        }
        let raw: Vec<Elem> = point.iter().map(|p| p.elem().clone()).collect();
        Ok(FieldElement::from_parts(
            self.field.clone(),
            self.eval(&raw)?,
        ))
    }

    /// Variable names: `x` for one variable, `x1..xm` otherwise.
    pub fn var_name(nvars: usize, i: usize) -> String {
        if nvars == 1 {
            "x".to_string()
        } else {
            format!("x{}", i + 1)
        }
    }
}

/// `multi_eval` as a free function.
pub fn multi_eval(f: &MultiPoly, point: &[FieldElement]) -> Result<FieldElement> {
    f.multi_eval(point)
}

impl fmt::Display for MultiPoly {
    /// Terms in descending lexicographic order of exponent tuples.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(&Elem, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(mono, c)| {
                let text: Vec<String> = mono
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| {
                        let v = Self::var_name(self.nvars, i);
                        if *e == 1 {
                            v
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
                (c, text.join("*"))
            })
            .collect();
        out.write_str(&join_terms(&self.field, &terms))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "MultiPoly[{}; {}]({})", self.field, self.nvars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elems(field: &Field, vs: &[i64]) -> Vec<FieldElement> {
        vs.iter()
            .map(|v| FieldElement::from_i64(field, *v).unwrap())
            .collect()
    }

    #[test]
    fn evaluation_examples() {
        let f3 = Field::prime(3).unwrap();
        let x = MultiPoly::var(&f3, 2, 0);
        let y = MultiPoly::var(&f3, 2, 1);
        let sum = x.add(&y);
        assert_eq!(
            sum.multi_eval(&elems(&f3, &[1, 2])).unwrap().to_string(),
            "0"
        );
        let prod = x.mul(&y);
        for v in 0..3 {
            assert!(prod.multi_eval(&elems(&f3, &[0, v])).unwrap().is_zero());
        }
        assert_eq!(
            prod.multi_eval(&elems(&f3, &[1])),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 1
            })
        );
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(
            prod.multi_eval(&elems(&f5, &[1, 1])),
            Err(Error::SpecMismatch { .. })
        ));
    }

    #[test]
    fn display_and_cancellation() {
        let q = Field::rationals();
        let x = MultiPoly::var(&q, 2, 0);
        let y = MultiPoly::var(&q, 2, 1);
        let f = x
            .pow(2)
            .add(&x.mul(&y).neg())
            .add(&MultiPoly::constant(&q, 2, q.from_i64(3)));
        assert_eq!(f.to_string(), "x1^2-x1*x2+3");
        assert_eq!(f.total_degree(), 2);
        assert!(f.sub(&f).is_zero());
        let g = MultiPoly::new(
            q.clone(),
            1,
            [(vec![2], q.from_i64(1)), (vec![0], q.from_i64(-1))],
        )
        .unwrap();
        assert_eq!(g.to_string(), "x^2-1");
        assert_eq!(g.to_uni().unwrap().to_string(), "x^2-1");
        assert_eq!(
            MultiPoly::new(q.clone(), 2, [(vec![1], q.one())]),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn agrees_with_univariate_evaluation() {
        let q = Field::rationals();
        let u = UniPoly::from_i64s(&q, &[7, 2, 0, 0, 1]).unwrap();
        let m = MultiPoly::from_uni(&u, 1);
        for v in -5..5 {
            let p = q.from_i64(v);
            assert_eq!(m.eval(std::slice::from_ref(&p)).unwrap(), u.eval(&p));
        }
    }
}
