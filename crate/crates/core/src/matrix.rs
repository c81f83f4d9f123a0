//! Dense square matrices over a computable field.
//!
//! The companion matrix of a monic `q = x^d + c_{d-1} x^{d-1} + ... + c_0`
//! carries ones on the subdiagonal and `-c_0, ..., -c_{d-1}` down the last
//! column, so that `q(C) = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::fields::{Elem, Field, FieldElement};
use crate::poly::UniPoly;

/// `n x n` matrix with row-major entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    n: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn zero(field: &Field, n: usize) -> Self {
        Matrix {
            field: field.clone(),
            n,
            entries: vec![field.zero(); n * n],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Self::scalar(field, n, field.one())
    }

    /// `c * I_n`.
    pub fn scalar(field: &Field, n: usize, c: Elem) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    /// Validated constructor from rows of raw elements.
    pub fn from_rows(field: &Field, rows: Vec<Vec<Elem>>) -> Result<Self> {
        field.ensure_computable()?;
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionTooSmall(0));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch(n, row.len()));
            }
            for e in row {
                field.validate(&e)?;
                entries.push(e);
            }
        }
        Ok(Matrix {
            field: field.clone(),
            n,
            entries,
        })
    }

    /// Rows of `(numerator, denominator)` pairs.
    pub fn from_ratios(field: &Field, rows: &[Vec<(i64, i64)>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(a, b)| field.from_ratio(&(*a).into(), &(*b).into()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, rows)
    }

    pub fn from_i64s(field: &Field, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|v| field.from_i64(*v)).collect())
            .collect();
        Self::from_rows(field, rows)
    }

    pub(crate) fn from_raw(field: Field, n: usize, entries: Vec<Elem>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        Matrix { field, n, entries }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.entries[i * self.n + j]
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        FieldElement::from_parts(self.field.clone(), self.get(i, j).clone())
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.entries.chunks(self.n).map(<[Elem]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    /// `Some(c)` when the matrix is `c * I_n`.
    pub fn as_scalar(&self) -> Option<Elem> {
        let c = self.get(0, 0).clone();
        (*self == Self::scalar(&self.field, self.n, c.clone())).then_some(c)
    }

    pub fn ensure_compatible(&self, other: &Matrix) -> Result<()> {
        self.field.ensure_same(&other.field)?;
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    fn assert_compatible(&self, other: &Matrix) {
        assert!(
            self.field == other.field && self.n == other.n,
            "matrix mismatch: {}x{} over {} vs {}x{} over {}",
            self.n,
            self.n,
            self.field,
            other.n,
            other.n,
            other.field
        );
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        let f = &self.field;
        Matrix::from_raw(
            f.clone(),
            self.n,
            self.entries.iter().map(|e| f.mul(e, c)).collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        self.field.ensure_same(&other.field)?;
        let n = self.n + other.n;
        let mut out = Matrix::zero(&self.field, n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.entries[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                out.entries[(i + self.n) * n + j + self.n] = other.get(i, j).clone();
            }
        }
        Ok(out)
    }

    /// Row-major entries as text, e.g. `[["0","1/2"],["1","-1"]]`.
    pub fn to_json_rows(&self) -> Vec<Vec<String>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|e| self.field.format_elem(e)).collect())
            .collect()
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.assert_compatible(rhs);
        let f = &self.field;
        Matrix::from_raw(
            f.clone(),
            self.n,
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f.add(a, b))
                .collect(),
        )
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self + &(-rhs)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        let f = &self.field;
        Matrix::from_raw(
            f.clone(),
            self.n,
            self.entries.iter().map(|a| f.neg(a)).collect(),
        )
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.assert_compatible(rhs);
        let (f, n) = (&self.field, self.n);
        let mut out = vec![f.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let t = f.mul(a, &rhs.entries[k * n + j]);
                    out[i * n + j] = f.add(&out[i * n + j], &t);
                }
            }
        }
        Matrix::from_raw(f.clone(), n, out)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_json_rows()
            .into_iter()
            .map(|r| format!("[{}]", r.join(",")))
            .collect();
        write!(out, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "Matrix[{}]{}", self.field, self)
    }
}

/// `f(A)` by Horner's rule; the constant term becomes `c * I_n`.
pub fn mat_poly_eval(f: &UniPoly, a: &Matrix) -> Result<Matrix> {
    f.field().ensure_same(a.field())?;
    let field = a.field();
    let mut acc = Matrix::zero(field, a.n);
    for c in f.coeffs().iter().rev() {
        acc = &(&acc * a) + &Matrix::scalar(field, a.n, c.clone());
    }
    Ok(acc)
}

/// Companion matrix of a monic polynomial of degree at least 1.
pub fn companion(q: &UniPoly) -> Result<Matrix> {
    if q.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !q.is_monic() {
        return Err(Error::NotMonic);
    }
    let field = q.field();
    let d = q.deg();
    let mut c = Matrix::zero(field, d);
    for i in 1..d {
        c.entries[i * d + i - 1] = field.one();
    }
    for i in 0..d {
        c.entries[i * d + d - 1] = field.neg(&q.coeff(i));
    }
    debug_assert!(mat_poly_eval(q, &c).map(|m| m.is_zero()).unwrap_or(false));
    Ok(c)
}

/// `n x n` matrix with a single 1 at position (1, 2), so `N^2 = 0`.
pub fn jordan_nilpotent_embed(field: &Field, n: usize) -> Result<Matrix> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut m = Matrix::zero(field, n);
    m.entries[1] = field.one();
    Ok(m)
}

/// `C` in the upper-left corner of an `n x n` zero matrix.
pub fn block_embed(c: &Matrix, n: usize) -> Result<Matrix> {
    if n < c.n {
        return Err(Error::TargetTooSmall { from: c.n, to: n });
    }
    c.direct_sum(&Matrix::zero(&c.field, n - c.n))
}

/// Least-degree monic `m_A` with `m_A(A) = 0`, from the first linear
/// dependence among `I, A, A^2, ...` in the `n^2`-dimensional matrix space.
pub fn minimal_polynomial(a: &Matrix) -> UniPoly {
    let field = a.field();
    // reduced vectors with their pivot and the combination of powers they represent
    let mut basis: Vec<(usize, Vec<Elem>, Vec<Elem>)> = Vec::new();
    let mut power = Matrix::identity(field, a.n);
    for k in 0..=a.n * a.n {
        let mut v = power.entries.clone();
        let mut comb = vec![field.zero(); k + 1];
        comb[k] = field.one();
        for (pivot, bv, bc) in &basis {
            let factor = v[*pivot].clone();
            if field.is_zero(&factor) {
                continue;
            }
            for (x, y) in v.iter_mut().zip(bv) {
                *x = field.sub(x, &field.mul(&factor, y));
            }
            for (x, y) in comb.iter_mut().zip(bc) {
                *x = field.sub(x, &field.mul(&factor, y));
            }
        }
        match v.iter().position(|x| !field.is_zero(x)) {
            None => return UniPoly::from_raw(field.clone(), comb),
            Some(pivot) => {
                let inv = field.inv(&v[pivot]).expect("pivot is nonzero");
                let v = v.iter().map(|x| field.mul(x, &inv)).collect();
                let comb = comb.iter().map(|x| field.mul(x, &inv)).collect();
                basis.push((pivot, v, comb));
            }
        }
        power = &power * a;
    }
    unreachable!("the powers of A span at most n^2 dimensions")
}

/// Row-major entries.
pub fn flatten(a: &Matrix) -> Vec<FieldElement> {
    a.entries
        .iter()
        .map(|e| FieldElement::from_parts(a.field.clone(), e.clone()))
        .collect()
}

/// Inverse of [`flatten`]; the dimension is recovered from the length.
pub fn unflatten(v: &[FieldElement]) -> Result<Matrix> {
    let n = v.len().isqrt();
    if n == 0 || n * n != v.len() {
        return Err(Error::LengthMismatch(v.len()));
    }
    let field = v[0].field().clone();
    for x in v {
        field.ensure_same(x.field())?;
    }
    Ok(Matrix::from_raw(
        field,
        n,
        v.iter().map(|x| x.elem().clone()).collect(),
    ))
}
