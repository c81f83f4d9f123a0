//! Scalar evaluation maps `F -> F` and the simple-roots condition.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::search::{brute_force_scalar, search_rational_collisions};
use super::verify::{verify_witness, Point, Witness};
use super::{check_model, Bounds, Reason, Status, Verdict};
use crate::error::{Error, Result};
use crate::fields::{Elem, Field, FieldElement, FieldSpec};
use crate::matrix::{jordan_nilpotent_embed, Matrix};
use crate::poly::{is_strictly_monotone_r, rational_roots, sturm_real_roots, Interval, UniPoly};

/// Outcome of the permutation-polynomial test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermutationCheck {
    pub is_permutation: bool,
    /// Hermite's criterion.
    pub hermite: bool,
    /// Image cardinality, computed when the field is within the cap.
    pub exhaustive: Option<bool>,
}

/// Whether `f - lambda` has only simple roots in the field, for every
/// `lambda`, with the first violation found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleRootsReport {
    pub holds: bool,
    /// A root of `f'` in the (computable model of the) field.
    pub violating_b: Option<FieldElement>,
    /// `f(b)`.
    pub lambda: Option<FieldElement>,
    /// Multiplicity of `b` as a root of `f - lambda`, at least 2.
    pub multiplicity_k: Option<u32>,
    /// `f' = 0` in characteristic `p`: every root of every `f - lambda` is
    /// multiple.
    pub char_p_degenerate: bool,
}

/// Coefficients of `v` reduced modulo `x^q - x`.
fn reduce_mod_xq(field: &Field, mut v: Vec<Elem>, q: usize) -> Vec<Elem> {
    while v.len() > q {
        let top = v.pop().expect("nonempty");
        let i = v.len() - (q - 1);
        v[i] = field.add(&v[i], &top);
    }
    while v.last().is_some_and(|c| field.is_zero(c)) {
        v.pop();
    }
    v
}

fn mul_raw(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    out
}

/// Hermite's criterion: exactly one root in `F_q`, and for every
/// `1 <= t <= q - 2` prime to `p` the reduction of `f^t` modulo `x^q - x`
/// has degree at most `q - 2`.
fn hermite(f: &UniPoly, q: u64) -> Result<bool> {
    let field = f.field().clone();
    let q_us = q as usize;
    let p = field.characteristic();
    let reduced = reduce_mod_xq(&field, f.coeffs().to_vec(), q_us);
    let fr = UniPoly::new(field.clone(), reduced.clone())?;
    if fr.is_constant() {
        return Ok(q == 1);
    }
    let x = UniPoly::x(&field);
    let xq = x.pow_mod(&q.into(), &fr)?;
    let roots = fr.gcd(&(&xq - &x))?.deg();
    if roots != 1 {
        return Ok(false);
    }
    let mut power = vec![field.one()];
    for t in 1..=q.saturating_sub(2) {
        power = reduce_mod_xq(&field, mul_raw(&field, &power, &reduced), q_us);
        if t % p != 0 && power.len() == q_us {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Permutation test over a finite field. Both Hermite's criterion and the
/// image count run when `q <= cap`; only Hermite's criterion above it.
pub fn permutation_check(f: &UniPoly, cap: u64) -> Result<PermutationCheck> {
    let field = f.field();
    let q = field
        .order()
        .ok_or_else(|| Error::InfiniteField(field.to_string()))?;
    let by_hermite = hermite(f, q)?;
    let exhaustive = if q <= cap {
        let v = brute_force_scalar(f, cap)?;
        Some(v.status() == Status::Injective)
    } else {
        None
    };
    if let Some(e) = exhaustive {
        if e != by_hermite {
            return Err(Error::InconsistentMethods {
                hermite: by_hermite,
                exhaustive: e,
            });
        }
    }
    Ok(PermutationCheck {
        is_permutation: by_hermite,
        hermite: by_hermite,
        exhaustive,
    })
}

fn scalar_point(field: &Field, e: Elem) -> Point {
    Point::Scalar(FieldElement::from_parts(field.clone(), e))
}

/// Order used to pick among several rational candidates: height, then
/// denominator, then absolute numerator, positive first.
fn height_key(
    r: &BigRational,
) -> (
    num_bigint::BigInt,
    num_bigint::BigInt,
    num_bigint::BigInt,
    bool,
) {
    let h = r.numer().abs().max(r.denom().clone());
    (h, r.denom().clone(), r.numer().abs(), r.is_negative())
}

/// Injectivity of `x -> f(x)` on the field `spec`. For the closed-field tags
/// the coefficients of `f` live in Q.
pub fn scalar_injectivity(f: &UniPoly, spec: &Field, bounds: &Bounds) -> Result<Verdict> {
    check_model(f.field(), spec)?;
    let field = f.field().clone();
    if f.is_constant() {
        let w = verify_witness(
            f,
            scalar_point(&field, field.zero()),
            scalar_point(&field, field.one()),
        )?;
        return Ok(Verdict::not_injective(
            Reason::ConstantMap,
            w,
            "a constant map identifies 0 and 1",
        ));
    }
    if f.deg() == 1 {
        return Ok(Verdict::injective(
            Reason::DegreeOne,
            "f = a*x + b with a != 0 is a bijection of any field",
        ));
    }
    match spec.spec() {
        FieldSpec::AlgClosed => closed_field_scalar(f, bounds),
        FieldSpec::RealClosed => real_scalar(f, bounds),
        FieldSpec::Rationals => rational_scalar(f, bounds),
        FieldSpec::Prime { .. } | FieldSpec::Extension { .. } => finite_scalar(f, bounds),
    }
}

fn closed_field_scalar(f: &UniPoly, bounds: &Bounds) -> Result<Verdict> {
    let field = f.field().clone();
    let k = f.deg();
    // a nonzero rational root r of f - f(0) gives f(r) = f(0)
    let g = f - &UniPoly::constant(&field, f.coeff(0));
    let mut nonzero: Vec<BigRational> = rational_roots(&g)?
        .into_iter()
        .filter(|r| !r.is_zero())
        .collect();
    nonzero.sort_by_key(height_key);
    let witness = match nonzero.first() {
        Some(r) => Some(verify_witness(
            f,
            scalar_point(&field, field.zero()),
            scalar_point(&field, Elem::Q(r.clone())),
        )?),
        None => search_rational_collisions(f, bounds.height)?,
    };
    Ok(match witness {
        Some(w) => Verdict::not_injective(
            Reason::DistinctRootsWitness,
            w,
            format!("over an algebraically closed field only degree-one maps are injective (deg f = {k}); rational witness"),
        ),
        None => Verdict::necessary_condition_fails(
            Reason::RootsOutsideComputableField,
            format!(
                "over an algebraically closed field only degree-one maps are injective (deg f = {k}), \
                 but no collision with rational coordinates of height <= {} was found",
                bounds.height
            ),
        ),
    })
}

fn real_scalar(f: &UniPoly, bounds: &Bounds) -> Result<Verdict> {
    if is_strictly_monotone_r(f)? {
        return Ok(Verdict::injective(
            Reason::StrictlyMonotone,
            "f' has no real root of odd multiplicity and deg f is odd, so f is strictly monotone on R",
        ));
    }
    Ok(match search_rational_collisions(f, bounds.height)? {
        Some(w) => Verdict::not_injective(
            Reason::NotMonotone,
            w,
            "f is not strictly monotone on R; rational collision found",
        ),
        None => Verdict::necessary_condition_fails(
            Reason::NotMonotone,
            format!(
                "f is not strictly monotone on R, hence not injective, but no rational collision \
                 of height <= {} was found",
                bounds.height
            ),
        ),
    })
}

fn rational_scalar(f: &UniPoly, bounds: &Bounds) -> Result<Verdict> {
    let simple = simple_roots_condition(f, f.field())?;
    let note = if simple.holds {
        "f - lambda has only simple rational roots for every lambda".to_string()
    } else {
        format!(
            "f - lambda has a multiple root at b = {}",
            simple
                .violating_b
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default()
        )
    };
    Ok(match search_rational_collisions(f, bounds.height)? {
        Some(w) => Verdict::not_injective(
            Reason::BoundedSearchCollision,
            w,
            format!("rational collision found; {note}"),
        ),
        None => Verdict::undecided(
            Reason::SearchExhausted(bounds.height),
            format!(
                "no sufficient criterion for injectivity on Q in degree >= 2; no collision of \
                 height <= {}; {note}",
                bounds.height
            ),
        ),
    })
}

fn finite_scalar(f: &UniPoly, bounds: &Bounds) -> Result<Verdict> {
    let field = f.field().clone();
    let q = field.order().expect("finite field");
    if q <= bounds.scalar_cap {
        let check = permutation_check(f, bounds.scalar_cap)?;
        if check.is_permutation {
            return Ok(Verdict::injective(
                Reason::PermutationPolynomial,
                format!("f permutes {field}: Hermite's criterion and the image count agree"),
            ));
        }
    }
    let v = brute_force_scalar(f, bounds.matrix_cap.max(bounds.scalar_cap))?;
    Ok(match v.witness() {
        Some(w) => Verdict::not_injective(
            Reason::FiniteCollision,
            w.clone(),
            format!("f is not a permutation of {field}; first collision in enumeration order"),
        ),
        None => Verdict::injective(
            Reason::PermutationPolynomial,
            format!("f permutes {field}: all {q} values are distinct"),
        ),
    })
}

/// Multiplicity of `b` as a root of `p`.
fn root_multiplicity(p: &UniPoly, b: &Elem) -> u32 {
    let field = p.field();
    let lin = UniPoly::from_raw(field.clone(), vec![field.neg(b), field.one()]);
    let mut rest = p.clone();
    let mut k = 0;
    while !rest.is_zero() {
        match rest.div_rem(&lin) {
            Ok((quot, r)) if r.is_zero() => {
                rest = quot;
                k += 1;
            }
            _ => break,
        }
    }
    k
}

fn violation(f: &UniPoly, b: Elem, char_p_degenerate: bool) -> SimpleRootsReport {
    let field = f.field().clone();
    let lambda = f.eval(&b);
    let shifted = f - &UniPoly::constant(&field, lambda.clone());
    SimpleRootsReport {
        holds: false,
        multiplicity_k: Some(root_multiplicity(&shifted, &b)),
        violating_b: Some(FieldElement::from_parts(field.clone(), b)),
        lambda: Some(FieldElement::from_parts(field, lambda)),
        char_p_degenerate,
    }
}

fn holds() -> SimpleRootsReport {
    SimpleRootsReport {
        holds: true,
        violating_b: None,
        lambda: None,
        multiplicity_k: None,
        char_p_degenerate: false,
    }
}

/// The simple-roots condition: `f - lambda` has only simple roots in the
/// field for every `lambda`, which fails exactly when `f'` has a root there.
pub fn simple_roots_condition(f: &UniPoly, spec: &Field) -> Result<SimpleRootsReport> {
    check_model(f.field(), spec)?;
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let field = f.field().clone();
    let df = f.derivative();
    if field.is_finite() {
        if df.is_zero() {
            return Ok(violation(f, field.zero(), true));
        }
        for b in field.enumerate()? {
            if field.is_zero(&df.eval(&b)) {
                return Ok(violation(f, b, false));
            }
        }
        return Ok(holds());
    }
    if df.is_constant() {
        return Ok(holds());
    }
    let mut roots = rational_roots(&df)?;
    roots.sort_by_key(height_key);
    if let Some(b) = roots.into_iter().next() {
        return Ok(violation(f, Elem::Q(b), false));
    }
    let fails = match spec.spec() {
        // f' has a root in the algebraic closure whenever deg f >= 2
        FieldSpec::AlgClosed => true,
        FieldSpec::RealClosed => sturm_real_roots(&df, &Interval::WholeLine)? > 0,
        _ => false,
    };
    Ok(SimpleRootsReport {
        holds: !fails,
        ..holds()
    })
}

/// For `f'(b) = 0`: `f(b I + N) = f(b) I + f'(b) N = f(b) I` with `N` the
/// nilpotent Jordan block, so `b I + N` and `b I` collide in `M_n(F)`.
pub fn repeated_root_witness(f: &UniPoly, b: &FieldElement, n: usize) -> Result<Witness> {
    let field = f.field().clone();
    field.ensure_same(b.field())?;
    let bi = Matrix::scalar(&field, n, b.elem().clone());
    let lhs = &bi + &jordan_nilpotent_embed(&field, n)?;
    verify_witness(f, Point::Matrix(lhs), Point::Matrix(bi))
}
