//! Factorization over Q by the Zassenhaus method: squarefree decomposition,
//! reduction to a primitive integer polynomial, factorization modulo a good
//! prime, quadratic Hensel lifting past a Mignotte-style bound, and
//! recombination of lifted factors by subset search.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::zpoly::{self, ZPoly};
use super::{factor_finite, squarefree_decomposition, Factorization, UniPoly};
use crate::error::{Error, Result};
use crate::fields::{is_prime, Elem, Field, FieldElement};

/// Largest degree accepted by [`factor_rationals`].
pub const DEGREE_CAP: usize = 16;
/// Largest coefficient size, in bits, of the primitive integer form.
pub const COEFF_BITS_CAP: u64 = 256;

fn rational_coeffs(f: &UniPoly) -> Vec<BigRational> {
    f.coeffs()
        .iter()
        .map(|c| match c {
            Elem::Q(r) => r.clone(),
            other => panic!("expected a rational coefficient, got {other:?}"),
        })
        .collect()
}

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of `f`.
fn to_primitive_integer(f: &UniPoly) -> ZPoly {
    let coeffs = rational_coeffs(f);
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: ZPoly = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    zpoly::primitive(&ints)
}

fn from_integer(field: &Field, z: &[BigInt]) -> UniPoly {
    UniPoly::from_raw(
        field.clone(),
        z.iter()
            .map(|c| Elem::Q(BigRational::from_integer(c.clone())))
            .collect(),
    )
}

fn check_caps(f: &UniPoly) -> Result<()> {
    let degree = f.deg();
    if degree > DEGREE_CAP {
        return Err(Error::DegreeCapExceeded {
            degree,
            cap: DEGREE_CAP,
        });
    }
    let bits = zpoly::max_abs(&to_primitive_integer(f)).bits();
    if bits > COEFF_BITS_CAP {
        return Err(Error::CoefficientCapExceeded {
            bits,
            cap: COEFF_BITS_CAP,
        });
    }
    Ok(())
}

/// Complete factorization over Q into monic irreducibles and a leading unit.
pub fn factor_rationals(f: &UniPoly) -> Result<Factorization> {
    let field = f.field().clone();
    if !field.is_rationals() {
        return Err(Error::Unsupported(format!(
            "rational factorization over {field}"
        )));
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    check_caps(f)?;
    let unit = FieldElement::from_parts(field.clone(), f.leading().unwrap().clone());
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(f)? {
        let prim = to_primitive_integer(&part);
        for z in factor_squarefree_integer(&prim)? {
            factors.push((from_integer(&field, &z).monic(), mult));
        }
    }
    factors.sort_by(|a, b| a.0.cmp_canonical(&b.0).then(a.1.cmp(&b.1)));
    Ok(Factorization { unit, factors })
}

fn reduce_mod_p(z: &[BigInt], field: &Field) -> UniPoly {
    UniPoly::from_raw(
        field.clone(),
        z.iter().map(|c| field.from_bigint(c)).collect(),
    )
}

fn lift_from_fp(f: &UniPoly) -> ZPoly {
    zpoly::trim(
        f.coeffs()
            .iter()
            .map(|c| match c {
                Elem::Fp(v) => BigInt::from(*v),
                other => panic!("expected a prime field coefficient, got {other:?}"),
            })
            .collect(),
    )
}

/// Monic modular factors of `p_z` modulo the best of the first few primes
/// that keep it squarefree and do not divide its leading coefficient.
fn modular_factorization(p_z: &[BigInt]) -> Result<(u64, Vec<UniPoly>)> {
    let lead = zpoly::lc(p_z);
    let mut best: Option<(u64, Vec<UniPoly>)> = None;
    let mut good = 0;
    let mut p = 2u64;
    while good < 4 {
        p += 1;
        if !is_prime(p) || (&lead % p).is_zero() {
            continue;
        }
        let fp = Field::prime(p)?;
        let red = reduce_mod_p(p_z, &fp);
        if !red.gcd(&red.derivative())?.is_one() {
            continue;
        }
        good += 1;
        let facs: Vec<UniPoly> = factor_finite(&red)?
            .factors
            .into_iter()
            .map(|(q, _)| q)
            .collect();
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
    }
    Ok(best.expect("at least one good prime"))
}

/// Lifts monic factors `facs` (mod p) of `f` to monic factors modulo
/// `p^(2^steps)` with `f = lc(f) * prod(facs)`.
fn multifactor_lift(f: &[BigInt], facs: &[UniPoly], p: u64, steps: u32) -> Result<Vec<ZPoly>> {
    let pz = BigInt::from(p);
    let modulus = (0..steps).fold(pz.clone(), |m, _| &m * &m);
    if facs.len() == 1 {
        let inv = zpoly::inv_mod(&zpoly::lc(f), &modulus);
        return Ok(vec![zpoly::modp(&zpoly::scale(f, &inv), &modulus)]);
    }
    let fp = Field::prime(p)?;
    let mid = facs.len() / 2;
    let product = |fs: &[UniPoly]| fs.iter().fold(UniPoly::one(&fp), |acc, q| &acc * q);
    let lead = fp.from_bigint(&zpoly::lc(f));
    let g0 = product(&facs[..mid]).scale(&lead);
    let h0 = product(&facs[mid..]);
    let (one, s0, t0) = g0.extended_gcd(&h0)?;
    debug_assert!(one.is_one());
    let (mut g, mut h) = (lift_from_fp(&g0), lift_from_fp(&h0));
    let (mut s, mut t) = (lift_from_fp(&s0), lift_from_fp(&t0));
    let mut m = pz;
    for _ in 0..steps {
        (g, h, s, t) = zpoly::hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let mut out = multifactor_lift(&g, &facs[..mid], p, steps)?;
    out.extend(multifactor_lift(&h, &facs[mid..], p, steps)?);
    Ok(out)
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = idx.clone();
        // advance to the next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    })
}

/// Irreducible factors over Z of a squarefree primitive polynomial with
/// positive leading coefficient.
fn factor_squarefree_integer(p_z: &[BigInt]) -> Result<Vec<ZPoly>> {
    let n = p_z.len() - 1;
    if n <= 1 {
        return Ok(vec![p_z.to_vec()]);
    }
    if p_z[0].is_zero() {
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree_integer(&p_z[1..])?);
        return Ok(out);
    }
    let (p, facs) = modular_factorization(p_z)?;
    if facs.len() == 1 {
        return Ok(vec![p_z.to_vec()]);
    }
    // coefficients of lc * (any factor) are bounded by
    // 2^n * sqrt(n + 1) * |f|_inf * |lc|
    let lead = zpoly::lc(p_z);
    let bound =
        (BigInt::one() << n) * BigInt::from((n + 1).sqrt() + 1) * zpoly::max_abs(p_z) * lead.abs();
    let target = bound * 2;
    let (mut steps, mut modulus) = (0u32, BigInt::from(p));
    while modulus <= target {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let mut remaining = multifactor_lift(p_z, &facs, p, steps)?;
    let mut rest = p_z.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        for subset in combinations(remaining.len(), size) {
            let lc_rest = zpoly::lc(&rest);
            let prod = subset.iter().fold(vec![lc_rest], |acc, &i| {
                zpoly::modp(&zpoly::mul(&acc, &remaining[i]), &modulus)
            });
            let candidate = zpoly::primitive(&zpoly::symmetric(&prod, &modulus));
            if let Some(quotient) = zpoly::div_exact(&rest, &candidate) {
                found.push(candidate);
                rest = quotient;
                for i in subset.into_iter().rev() {
                    remaining.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    found.push(zpoly::primitive(&rest));
    Ok(found)
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64().filter(|v| *v <= 1_000_000_000_000)?;
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

/// Distinct rational roots of a nonzero polynomial over Q, ascending.
/// Uses the rational root test, falling back to the linear factors of the
/// full factorization when the extreme coefficients are too large to divisor
/// enumerate.
pub fn rational_roots(f: &UniPoly) -> Result<Vec<BigRational>> {
    let field = f.field().clone();
    if !field.is_rationals() {
        return Err(Error::Unsupported(format!("rational roots over {field}")));
    }
    let (m, h) = f.zero_multiplicity()?;
    let mut roots = Vec::new();
    if m > 0 {
        roots.push(BigRational::zero());
    }
    if !h.is_constant() {
        let z = to_primitive_integer(&h);
        match (small_divisors(&z[0]), small_divisors(&zpoly::lc(&z))) {
            (Some(nums), Some(dens)) => {
                for a in &nums {
                    for b in &dens {
                        for sign in [1i64, -1] {
                            let r = BigRational::new(BigInt::from(*a) * sign, BigInt::from(*b));
                            if !roots.contains(&r) && field.is_zero(&h.eval(&Elem::Q(r.clone()))) {
                                roots.push(r);
                            }
                        }
                    }
                }
            }
            _ => {
                for (q, _) in factor_rationals(&h)?.factors {
                    if q.deg() == 1 {
                        if let Elem::Q(c) = field.neg(&q.coeff(0)) {
                            roots.push(c);
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}
