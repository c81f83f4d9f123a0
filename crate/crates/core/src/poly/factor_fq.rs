//! Factorization over finite fields: squarefree decomposition, distinct-degree
//! factorization, then Cantor–Zassenhaus equal-degree splitting driven by a
//! seeded generator so that results are reproducible.

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Factorization, UniPoly, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement};

/// Squarefree decomposition `f = lc * prod(s_i^i)` of a nonzero polynomial,
/// returned as monic `(s_i, i)` with `s_i != 1`. Works in characteristic 0
/// (Yun) and characteristic p (with the p-th root step when `f' = 0`).
pub fn squarefree_decomposition(f: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.monic();
    if f.is_constant() {
        return Ok(Vec::new());
    }
    if f.field().characteristic() == 0 {
        return Ok(yun(&f));
    }
    Ok(squarefree_char_p(&f))
}

fn yun(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    let df = f.derivative();
    let a0 = f.gcd(&df).expect("f nonzero");
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = df.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d).expect("b nonzero");
        if !a.is_one() {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

fn squarefree_char_p(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    let field = f.field().clone();
    let p = field.characteristic() as u32;
    let mut out = Vec::new();
    let df = f.derivative();
    let mut c = f.gcd(&df).expect("f nonzero");
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c).expect("w nonzero");
        let fac = w.exact_div(&y).expect("gcd divides");
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w).expect("gcd divides");
        i += 1;
    }
    if !c.is_one() {
        // every exponent of c is a multiple of p
        let root = pth_root_poly(&c);
        for (g, m) in squarefree_char_p(&root) {
            out.push((g, m * p));
        }
    }
    merge(out)
}

fn pth_root_poly(c: &UniPoly) -> UniPoly {
    let field = c.field();
    let p = field.characteristic() as usize;
    let coeffs = c
        .coeffs()
        .iter()
        .step_by(p)
        .map(|a| field.pth_root(a))
        .collect();
    UniPoly::from_raw(field.clone(), coeffs)
}

fn merge(mut parts: Vec<(UniPoly, u32)>) -> Vec<(UniPoly, u32)> {
    parts.sort_by_key(|a| a.1);
    let mut out: Vec<(UniPoly, u32)> = Vec::new();
    for (g, m) in parts {
        match out.last_mut() {
            Some((h, k)) if *k == m => *h = &*h * &g,
            _ => out.push((g, m)),
        }
    }
    out
}

fn field_order(field: &Field) -> Result<BigUint> {
    let q = field
        .order()
        .ok_or_else(|| Error::InfiniteField(field.to_string()))?;
    Ok(BigUint::from(q))
}

/// Splits a monic squarefree polynomial into `(product of all irreducible
/// factors of degree d, d)`.
fn distinct_degree(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let field = f.field().clone();
    let q = field_order(&field)?;
    let x = UniPoly::x(&field);
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut out = Vec::new();
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&q, &rest)?;
        let g = rest.gcd(&(&h - &x))?;
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = h.rem(&rest)?;
            out.push((g, d));
        }
    }
    if !rest.is_constant() {
        let k = rest.deg();
        out.push((rest, k));
    }
    Ok(out)
}

/// Cantor–Zassenhaus splitting of a monic product of distinct irreducibles of
/// degree `d`.
fn equal_degree(f: &UniPoly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<UniPoly>> {
    if f.deg() == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field().clone();
    let q = field_order(&field)?;
    let n = f.deg();
    loop {
        let a = UniPoly::from_raw(
            field.clone(),
            (0..n).map(|_| field.random_elem(rng)).collect(),
        );
        if a.is_constant() {
            continue;
        }
        let g = f.gcd(&a)?;
        let candidate = if !g.is_one() {
            g
        } else if field.characteristic() == 2 {
            // absolute trace map a + a^2 + ... + a^(2^(k d - 1))
            let steps = field.degree() as usize * d;
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..steps {
                t = (&t * &t).rem(f)?;
                acc = &acc + &t;
            }
            f.gcd(&acc.rem(f)?)?
        } else {
            let e = (q.pow(d as u32) - BigUint::one()) >> 1;
            let b = a.pow_mod(&e, f)?;
            f.gcd(&(&b - &UniPoly::one(&field)))?
        };
        if candidate.deg() > 0 && candidate.deg() < n {
            let other = f.exact_div(&candidate).expect("gcd divides");
            let mut out = equal_degree(&candidate, d, rng)?;
            out.extend(equal_degree(&other, d, rng)?);
            return Ok(out);
        }
    }
}

/// Complete factorization over a finite field with the default seed.
pub fn factor_finite(f: &UniPoly) -> Result<Factorization> {
    factor_finite_with_seed(f, DEFAULT_SEED)
}

pub fn factor_finite_with_seed(f: &UniPoly, seed: u64) -> Result<Factorization> {
    let field = f.field().clone();
    if !field.is_finite() {
        return Err(Error::Unsupported(format!(
            "finite-field factorization over {field}"
        )));
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let unit = FieldElement::from_parts(field.clone(), f.leading().unwrap().clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(f)? {
        for (block, d) in distinct_degree(&part)? {
            for q in equal_degree(&block, d, &mut rng)? {
                factors.push((q.monic(), mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp_canonical(&b.0).then(a.1.cmp(&b.1)));
    Ok(Factorization { unit, factors })
}

/// Irreducibility over a finite field or Q.
pub fn is_irreducible(f: &UniPoly) -> Result<bool> {
    if f.is_constant() {
        return Ok(false);
    }
    let fact = if f.field().is_finite() {
        factor_finite(f)?
    } else {
        super::factor_rationals(f)?
    };
    Ok(fact.factors.len() == 1 && fact.factors[0].1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(&Field::prime(p).unwrap(), c).unwrap()
    }

    fn shape(f: &Factorization) -> Vec<(String, u32)> {
        f.factors.iter().map(|(q, e)| (q.to_string(), *e)).collect()
    }

    #[test]
    fn examples() {
        let f = factor_finite(&fp(2, &[1, 0, 1])).unwrap();
        assert_eq!(shape(&f), [("x+1".to_string(), 2)]);
        let f = factor_finite(&fp(3, &[0, -1, 0, 1])).unwrap();
        assert_eq!(
            shape(&f),
            [
                ("x".to_string(), 1),
                ("x+1".to_string(), 1),
                ("x+2".to_string(), 1)
            ]
        );
        let f = factor_finite(&fp(5, &[1, 0, 1])).unwrap();
        assert_eq!(shape(&f), [("x+2".to_string(), 1), ("x+3".to_string(), 1)]);
        assert_eq!(factor_finite(&fp(5, &[3])), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn inseparable_input() {
        // x^6 + 1 = (x^2 + 1)^3 over F_3
        let f = factor_finite(&fp(3, &[1, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(shape(&f), [("x^2+1".to_string(), 3)]);
        assert_eq!(f.reconstruct(), fp(3, &[1, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn extension_field_factorization() {
        // x^2 + 1 splits over F_9
        let f9 = Field::finite(9).unwrap();
        let f = UniPoly::from_i64s(&f9, &[1, 0, 1]).unwrap();
        let fact = factor_finite(&f).unwrap();
        assert_eq!(fact.factors.len(), 2);
        assert_eq!(fact.reconstruct(), f);
        // x^4 + x + 1 is irreducible over F_2 and splits over F_16
        let f16 = Field::finite(16).unwrap();
        let g = UniPoly::from_i64s(&f16, &[1, 1, 0, 0, 1]).unwrap();
        let fact = factor_finite(&g).unwrap();
        assert_eq!(fact.factors.len(), 4);
        assert_eq!(fact.reconstruct(), g);
    }

    #[test]
    fn seed_does_not_change_result() {
        let f = fp(7, &[6, 0, 0, 0, 0, 0, 1]);
        let a = factor_finite_with_seed(&f, 1).unwrap();
        let b = factor_finite_with_seed(&f, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.factors.len(), 6);
    }
}
