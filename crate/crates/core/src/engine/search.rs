//! Exhaustive oracles over finite fields and bounded searches over Q. The
//! witness reported is always the first repeated image in enumeration
//! order, paired with the earlier point that produced it.

use std::collections::HashMap;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::verify::{verify_witness, Point, PolyRef, Witness};
use super::{Reason, Verdict};
use crate::error::{Error, Result};
use crate::fields::{Elem, Field, FieldElement};
use crate::matrix::{mat_poly_eval, Matrix};
use crate::poly::{MultiPoly, UniPoly};

/// All rationals of height `max(|num|, den)` at most `height`, by height,
/// then denominator, then absolute numerator, positive before negative.
pub fn rationals_up_to_height(height: u64) -> Vec<BigRational> {
    let mut out = vec![BigRational::from_integer(BigInt::from(0))];
    let h = height as i64;
    for k in 1..=h {
        for den in 1..=k {
            let nums: Vec<i64> = if den == k { (1..=k).collect() } else { vec![k] };
            for num in nums {
                if num.gcd(&den) != 1 {
                    continue;
                }
                for sign in [1, -1] {
                    out.push(BigRational::new(
                        BigInt::from(sign * num),
                        BigInt::from(den),
                    ));
                }
            }
        }
    }
    out
}

/// First pair of points with equal keys.
fn first_collision<P, K: std::hash::Hash + Eq>(
    points: impl Iterator<Item = Result<(P, K)>>,
) -> Result<Option<(P, P)>> {
    let mut seen: HashMap<K, P> = HashMap::new();
    for item in points {
        let (p, key) = item?;
        if let Some(earlier) = seen.remove(&key) {
            return Ok(Some((earlier, p)));
        }
        seen.insert(key, p);
    }
    Ok(None)
}

fn ensure_finite(field: &Field) -> Result<u64> {
    field
        .order()
        .ok_or_else(|| Error::InfiniteField(field.to_string()))
}

fn ensure_rationals(field: &Field) -> Result<()> {
    if field.is_rationals() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("rational search over {field}")))
    }
}

fn cap_check(size: u128, cap: u64) -> Result<()> {
    if size > u128::from(cap) {
        return Err(Error::EnumerationCapExceeded {
            size,
            cap: u128::from(cap),
        });
    }
    Ok(())
}

/// Number of `n x n` matrices over a set of `values` elements, saturating.
fn matrix_count(values: usize, n: usize) -> u128 {
    (values as u128)
        .checked_pow((n * n) as u32)
        .unwrap_or(u128::MAX)
}

/// Visits every `n x n` matrix with entries from `values`, row-major
/// odometer order with the last entry varying fastest.
fn for_each_matrix(
    field: &Field,
    values: &[Elem],
    n: usize,
    mut visit: impl FnMut(Matrix) -> Result<ControlFlow<()>>,
) -> Result<()> {
    let cells = n * n;
    let mut idx = vec![0usize; cells];
    loop {
        let entries = idx.iter().map(|i| values[*i].clone()).collect();
        if visit(Matrix::from_raw(field.clone(), n, entries))?.is_break() {
            return Ok(());
        }
        let mut pos = cells;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn matrix_collision(
    f: &UniPoly,
    field: &Field,
    values: &[Elem],
    n: usize,
) -> Result<Option<(Matrix, Matrix)>> {
    let mut seen: HashMap<Vec<Elem>, Matrix> = HashMap::new();
    let mut found = None;
    for_each_matrix(field, values, n, |a| {
        let key = mat_poly_eval(f, &a)?.entries().to_vec();
        if let Some(earlier) = seen.remove(&key) {
            found = Some((earlier, a));
            return Ok(ControlFlow::Break(()));
        }
        seen.insert(key, a);
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(found)
}

/// Exhaustive scalar oracle over a finite field of order at most `cap`.
pub fn brute_force_scalar(f: &UniPoly, cap: u64) -> Result<Verdict> {
    let field = f.field().clone();
    let q = ensure_finite(&field)?;
    cap_check(u128::from(q), cap)?;
    let points = field.enumerate()?.map(|x| Ok((x.clone(), f.eval(&x))));
    match first_collision(points)? {
        Some((a, b)) => {
            let w = verify_witness(
                f,
                Point::Scalar(FieldElement::from_parts(field.clone(), a)),
                Point::Scalar(FieldElement::from_parts(field.clone(), b)),
            )?;
            Ok(Verdict::not_injective(
                Reason::ExhaustiveCollision,
                w,
                format!("exhaustive evaluation over {field} found a collision"),
            ))
        }
        None => Ok(Verdict::injective(
            Reason::ExhaustiveInjective,
            format!("all {q} values of f over {field} are distinct"),
        )),
    }
}

/// Exhaustive oracle on `M_n(F)`, at most `cap` matrices.
pub fn brute_force_matrix(f: &UniPoly, n: usize, cap: u64) -> Result<Verdict> {
    let field = f.field().clone();
    let q = ensure_finite(&field)?;
    if n == 0 {
        return Err(Error::DimensionTooSmall(0));
    }
    let size = matrix_count(q as usize, n);
    cap_check(size, cap)?;
    let values: Vec<Elem> = field.enumerate()?.collect();
    match matrix_collision(f, &field, &values, n)? {
        Some((a, b)) => {
            let w = verify_witness(f, Point::Matrix(a), Point::Matrix(b))?;
            Ok(Verdict::not_injective(
                Reason::ExhaustiveCollision,
                w,
                format!("exhaustive evaluation over M_{n}({field}) found a collision"),
            ))
        }
        None => Ok(Verdict::injective(
            Reason::ExhaustiveInjective,
            format!("all {size} values of f over M_{n}({field}) are distinct"),
        )),
    }
}

/// First nonzero `A` in enumeration order with `f(A) = f(0) I`, if any.
pub fn brute_force_zero_fiber(f: &UniPoly, n: usize, cap: u64) -> Result<Option<Matrix>> {
    let field = f.field().clone();
    let q = ensure_finite(&field)?;
    if n == 0 {
        return Err(Error::DimensionTooSmall(0));
    }
    cap_check(matrix_count(q as usize, n), cap)?;
    let values: Vec<Elem> = field.enumerate()?.collect();
    let target = Matrix::scalar(&field, n, f.coeff(0));
    let mut found = None;
    for_each_matrix(&field, &values, n, |a| {
        if !a.is_zero() && mat_poly_eval(f, &a)? == target {
            found = Some(a);
            return Ok(ControlFlow::Break(()));
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(found)
}

/// Distinct rationals of height at most `height` with the same image.
pub fn search_rational_collisions(f: &UniPoly, height: u64) -> Result<Option<Witness>> {
    let field = f.field().clone();
    ensure_rationals(&field)?;
    let points = rationals_up_to_height(height).into_iter().map(|r| {
        let x = Elem::Q(r);
        let y = f.eval(&x);
        Ok((x, y))
    });
    first_collision(points)?
        .map(|(a, b)| {
            verify_witness(
                f,
                Point::Scalar(FieldElement::from_parts(field.clone(), a)),
                Point::Scalar(FieldElement::from_parts(field.clone(), b)),
            )
        })
        .transpose()
}

/// Distinct rational `n x n` matrices with entries of height at most
/// `height` and the same image; at most `cap` matrices are enumerated.
pub fn search_matrix_collisions(
    f: &UniPoly,
    n: usize,
    height: u64,
    cap: u64,
) -> Result<Option<Witness>> {
    let field = f.field().clone();
    ensure_rationals(&field)?;
    if n == 0 {
        return Err(Error::DimensionTooSmall(0));
    }
    let values: Vec<Elem> = rationals_up_to_height(height)
        .into_iter()
        .map(Elem::Q)
        .collect();
    cap_check(matrix_count(values.len(), n), cap)?;
    matrix_collision(f, &field, &values, n)?
        .map(|(a, b)| verify_witness(f, Point::Matrix(a), Point::Matrix(b)))
        .transpose()
}

/// Collision search on `Q^m`, raising the height one step at a time up to
/// `height` while the number of tuples stays within `cap`. Returns the
/// witness, if any, and the largest height fully searched.
pub fn search_tuple_collisions(
    f: &MultiPoly,
    height: u64,
    cap: u64,
) -> Result<(Option<Witness>, u64)> {
    let field = f.field().clone();
    ensure_rationals(&field)?;
    let m = f.nvars();
    let all: Vec<Elem> = rationals_up_to_height(height)
        .into_iter()
        .map(Elem::Q)
        .collect();
    let mut seen: HashMap<Elem, Vec<usize>> = HashMap::new();
    let mut prev_len = 0;
    let mut reached = 0;
    for h in 1..=height {
        let len = rationals_up_to_height(h).len();
        if (len as u128)
            .checked_pow(m as u32)
            .is_none_or(|c| c > u128::from(cap))
        {
            break;
        }
        let mut idx = vec![0usize; m];
        'tuples: loop {
            // tuples with every index below prev_len were visited at a lower height
            if idx.iter().any(|i| *i >= prev_len) {
                let point: Vec<Elem> = idx.iter().map(|i| all[*i].clone()).collect();
                let image = f.eval(&point)?;
                match seen.get(&image) {
                    Some(earlier) => {
                        let to_point = |ix: &[usize]| {
                            Point::Tuple(
                                ix.iter()
                                    .map(|i| {
                                        FieldElement::from_parts(field.clone(), all[*i].clone())
                                    })
                                    .collect(),
                            )
                        };
                        let w = verify_witness(f, to_point(earlier), to_point(&idx))?;
                        return Ok((Some(w), h));
                    }
                    None => {
                        seen.insert(image, idx.clone());
                    }
                }
            }
            let mut pos = m;
            loop {
                if pos == 0 {
                    break 'tuples;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < len {
                    break;
                }
                idx[pos] = 0;
            }
        }
        prev_len = len;
        reached = h;
    }
    Ok((None, reached))
}

/// Finite-field tuple enumeration shared with the multivariate procedure.
pub(crate) fn finite_tuple_collision(f: &MultiPoly, cap: u64) -> Result<Option<Witness>> {
    let field = f.field().clone();
    let q = ensure_finite(&field)?;
    let m = f.nvars();
    let size = (q as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    cap_check(size, cap)?;
    let values: Vec<Elem> = field.enumerate()?.collect();
    let mut seen: HashMap<Elem, Vec<usize>> = HashMap::new();
    let mut idx = vec![0usize; m];
    loop {
        let point: Vec<Elem> = idx.iter().map(|i| values[*i].clone()).collect();
        let image = f.eval(&point)?;
        if let Some(earlier) = seen.get(&image) {
            let to_point = |ix: &[usize]| {
                Point::Tuple(
                    ix.iter()
                        .map(|i| FieldElement::from_parts(field.clone(), values[*i].clone()))
                        .collect(),
                )
            };
            return verify_witness(PolyRef::Multi(f), to_point(earlier), to_point(&idx)).map(Some);
        }
        seen.insert(image, idx.clone());
        let mut pos = m;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Status;

    fn fp(p: u64, c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(&Field::prime(p).unwrap(), c).unwrap()
    }

    fn qp(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(&Field::rationals(), c).unwrap()
    }

    #[test]
    fn height_order() {
        let text: Vec<String> = rationals_up_to_height(2)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(text, ["0", "1", "-1", "2", "-2", "1/2", "-1/2"]);
        // 1 + 2 * sum_{k <= h} phi(k) rationals of height at most h
        assert_eq!(
            rationals_up_to_height(5).len(),
            1 + 2 * (1 + 2 + 2 * 2 + 2 * 2 + 2 * 4)
        );
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_scalar(&fp(2, &[0, 0, 0, 1]), 49)
                .unwrap()
                .status(),
            Status::Injective
        );
        let v = brute_force_scalar(&fp(7, &[0, 0, 0, 1]), 49).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(
            (w.lhs().to_string(), w.rhs().to_string()),
            ("1".into(), "2".into())
        );
        assert!(matches!(
            brute_force_scalar(&fp(53, &[0, 1]), 49),
            Err(Error::EnumerationCapExceeded { size: 53, cap: 49 })
        ));
        let v = brute_force_matrix(&fp(3, &[0, 0, 1]), 2, 1_000_000).unwrap();
        assert_eq!(v.status(), Status::NotInjective);
        let v = brute_force_matrix(&fp(5, &[1, 1]), 2, 1_000_000).unwrap();
        assert_eq!(v.status(), Status::Injective);
        assert!(brute_force_matrix(&fp(7, &[1, 1]), 2, 1000).is_err());
    }

    #[test]
    fn zero_fiber() {
        // x^2 + x over F_2: the idempotent diag(1, 0) satisfies E^2 + E = 0
        let a = brute_force_zero_fiber(&fp(2, &[0, 1, 1]), 2, 16)
            .unwrap()
            .unwrap();
        assert!(!a.is_zero());
        // x^3 + x = x (x + 1)^2 over F_2, so diag(1, 0) lies in the fiber of x^3 + x + 1
        assert!(brute_force_zero_fiber(&fp(2, &[1, 1, 0, 1]), 2, 16)
            .unwrap()
            .is_some());
        assert!(brute_force_zero_fiber(&fp(2, &[1, 1]), 2, 16)
            .unwrap()
            .is_none());
    }

    #[test]
    fn rational_search_examples() {
        let w = search_rational_collisions(&qp(&[0, 0, 1]), 1)
            .unwrap()
            .unwrap();
        assert_eq!(
            (w.lhs().to_string(), w.rhs().to_string()),
            ("1".into(), "-1".into())
        );
        assert!(search_rational_collisions(&qp(&[0, 2, 0, 0, 1]), 20)
            .unwrap()
            .is_none());
        assert!(search_rational_collisions(&qp(&[0, 1, 0, 1]), 10)
            .unwrap()
            .is_none());
        let w = search_rational_collisions(&qp(&[0, -1, 0, 1]), 1)
            .unwrap()
            .unwrap();
        assert_eq!(w.image().to_string(), "0");
    }

    #[test]
    fn tuple_search_examples() {
        let q = Field::rationals();
        let xy = MultiPoly::var(&q, 2, 0).mul(&MultiPoly::var(&q, 2, 1));
        let (w, _) = search_tuple_collisions(&xy, 5, 1_000_000).unwrap();
        assert!(w.is_some());
        let f2 = Field::prime(2).unwrap();
        let g = MultiPoly::var(&f2, 2, 0)
            .pow(2)
            .add(&MultiPoly::var(&f2, 2, 1).pow(3));
        assert!(finite_tuple_collision(&g, 100).unwrap().is_some());
    }
}
