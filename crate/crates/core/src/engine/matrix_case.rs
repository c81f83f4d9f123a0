//! Evaluation maps on `M_n(F)`. With `f = c + x^m h`, `h(0) != 0` and `d`
//! the least degree of an irreducible factor of `h`:
//!
//! * `m >= 2`: `f(N) = c I = f(0)` for the nilpotent Jordan block `N`;
//! * `m = 1, n >= d`: `f(C') = c I` for `C'` the companion matrix of a
//!   factor of degree `d` padded with zeros;
//! * `m = 1, n < d`: no nonzero `A` has `f(A) = c I`, which a Bézout
//!   identity certifies for any given `A`. Whether the map is injective is
//!   left undecided.

use super::scalar::scalar_injectivity;
use super::verify::{verify_witness, Point};
use super::{check_model, Bounds, Reason, Verdict};
use crate::error::{Error, Result};
use crate::fields::{Field, FieldSpec};
use crate::matrix::{
    block_embed, companion, jordan_nilpotent_embed, mat_poly_eval, minimal_polynomial, Matrix,
};
use crate::poly::{factor_profile_with_seed, FactorProfile, UniPoly, DEFAULT_SEED};

/// Injectivity of `A -> f(A)` on `M_n(spec)`.
pub fn matrix_injectivity(f: &UniPoly, n: usize, spec: &Field, bounds: &Bounds) -> Result<Verdict> {
    check_model(f.field(), spec)?;
    if n == 0 {
        return Err(Error::DimensionTooSmall(0));
    }
    if n == 1 {
        return scalar_injectivity(f, spec, bounds);
    }
    let field = f.field().clone();
    if f.is_constant() {
        let w = verify_witness(
            f,
            Point::Matrix(Matrix::zero(&field, n)),
            Point::Matrix(Matrix::identity(&field, n)),
        )?;
        return Ok(Verdict::not_injective(
            Reason::ConstantMap,
            w,
            "a constant map identifies 0 and I",
        ));
    }
    if f.deg() == 1 {
        return Ok(Verdict::injective(
            Reason::DegreeOne,
            format!("f = a*x + b with a != 0 is a bijection of M_{n}(F)"),
        ));
    }
    let profile = factor_profile_with_seed(f, bounds.seed)?;
    let zero = Point::Matrix(Matrix::zero(&field, n));
    if profile.m_mult >= 2 {
        let nil = jordan_nilpotent_embed(&field, n)?;
        let w = verify_witness(f, Point::Matrix(nil), zero)?;
        return Ok(Verdict::not_injective(
            Reason::NilpotentWitness,
            w,
            format!(
                "f - f(0) = x^{} * h with multiplicity {} >= 2 at 0, so f(N) = f(0) I for N^2 = 0",
                profile.m_mult, profile.m_mult
            ),
        ));
    }
    let d = profile.d.expect("m = 1 and deg f >= 2 leave h nonconstant");
    if d <= n {
        let q = profile.chosen_q.clone().expect("d is set");
        let c = block_embed(&companion(&q)?, n)?;
        let w = verify_witness(f, Point::Matrix(c), zero)?;
        return Ok(Verdict::not_injective(
            Reason::CompanionWitness,
            w,
            format!("h has the irreducible factor {q} of degree d = {d} <= n = {n}; its companion matrix, padded with zeros, is killed by f - f(0)"),
        ));
    }
    Ok(match spec.spec() {
        FieldSpec::AlgClosed => Verdict::necessary_condition_fails(
            Reason::RootsOutsideComputableField,
            format!(
                "over an algebraically closed field h splits into linear factors, so d = 1 <= n and \
                 the companion construction applies; over Q the least factor degree is {d} > n = {n}"
            ),
        ),
        FieldSpec::RealClosed => Verdict::necessary_condition_fails(
            Reason::RootsOutsideComputableField,
            format!(
                "over a real closed field every irreducible factor has degree at most 2 <= n, so the \
                 companion construction applies; over Q the least factor degree is {d} > n = {n}"
            ),
        ),
        _ => Verdict::undecided(
            Reason::OpenCaseBelowD,
            format!(
                "f - f(0) = x * h with least factor degree d = {d} > n = {n}: no nonzero A satisfies \
                 f(A) = f(0) I, so the fiber of 0 is a singleton; collisions elsewhere are not \
                 excluded (x^4+2*x+c has one in M_2(Q))"
            ),
        ),
    })
}

/// Which cofactor the Bézout identity pairs with `m_A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cofactor {
    /// `U m_A + V g = 1` with `g = f - f(0)`.
    G,
    /// `U m_A + V h = 1`, used when `A` is singular so that `x` divides both
    /// `m_A` and `g = x h`; then `g(A) = A h(A)` with `h(A)` invertible.
    H,
}

/// Certificate that `f(A) != f(0) I` for a nonzero `A` in the `n < d` case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub m_a: UniPoly,
    pub g: UniPoly,
    pub cofactor: Cofactor,
    /// The polynomial paired with `m_A`: `g` or `h`.
    pub paired: UniPoly,
    pub u: UniPoly,
    pub v: UniPoly,
    /// `U(A) m_A(A) + V(A) paired(A)`, equal to `I_n`.
    pub identity_at_a: Matrix,
    /// `g(A) = f(A) - f(0) I`, nonzero.
    pub g_at_a: Matrix,
}

fn below_d_profile(f: &UniPoly, n: usize) -> Result<FactorProfile> {
    let profile = factor_profile_with_seed(f, DEFAULT_SEED)?;
    match profile.d {
        Some(d) if profile.m_mult == 1 && n < d => Ok(profile),
        _ => Err(Error::Precondition(format!(
            "the certificate needs m = 1 and n < d; got m = {}, d = {:?}, n = {n}",
            profile.m_mult, profile.d
        ))),
    }
}

/// Bézout certificate that a nonzero `A` does not collide with 0.
pub fn bezout_noncollision_certificate(f: &UniPoly, a: &Matrix) -> Result<BezoutCertificate> {
    f.field().ensure_same(a.field())?;
    if a.is_zero() {
        return Err(Error::Precondition("A must be nonzero".into()));
    }
    let n = a.n();
    let profile = below_d_profile(f, n)?;
    let field = a.field().clone();
    let m_a = minimal_polynomial(a);
    let g = profile.g();
    let (gcd_g, u, v) = m_a.extended_gcd(&g)?;
    let (cofactor, paired, u, v) = if gcd_g.is_one() {
        (Cofactor::G, g.clone(), u, v)
    } else {
        let (gcd_h, u, v) = m_a.extended_gcd(&profile.h)?;
        if !gcd_h.is_one() {
            return Err(Error::GcdNotOne(format!(
                "gcd({m_a}, {}) = {gcd_h}",
                profile.h
            )));
        }
        (Cofactor::H, profile.h.clone(), u, v)
    };
    let identity_at_a = &(&mat_poly_eval(&u, a)? * &mat_poly_eval(&m_a, a)?)
        + &(&mat_poly_eval(&v, a)? * &mat_poly_eval(&paired, a)?);
    if identity_at_a != Matrix::identity(&field, n) {
        return Err(Error::GcdNotOne(format!(
            "U(A) m_A(A) + V(A) p(A) = {identity_at_a}"
        )));
    }
    let g_at_a = mat_poly_eval(&g, a)?;
    if g_at_a.is_zero() {
        return Err(Error::GcdNotOne(format!("g(A) = 0 for A = {a}")));
    }
    Ok(BezoutCertificate {
        m_a,
        g,
        cofactor,
        paired,
        u,
        v,
        identity_at_a,
        g_at_a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Status;

    fn q() -> Field {
        Field::rationals()
    }

    fn qp(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(&q(), c).unwrap()
    }

    #[test]
    fn clause_examples() {
        let b = Bounds::default();
        let v = matrix_injectivity(&qp(&[1, 0, 1]), 2, &q(), &b).unwrap();
        assert_eq!(
            (v.status(), v.reason()),
            (Status::NotInjective, Reason::NilpotentWitness)
        );
        assert_eq!(v.witness().unwrap().image().to_string(), "[[1,0],[0,1]]");
        let v = matrix_injectivity(&qp(&[0, 1, 0, 1]), 2, &q(), &b).unwrap();
        assert_eq!(
            (v.status(), v.reason()),
            (Status::NotInjective, Reason::CompanionWitness)
        );
        assert_eq!(v.witness().unwrap().lhs().to_string(), "[[0,-1],[1,0]]");
        assert_eq!(v.witness().unwrap().image().to_string(), "[[0,0],[0,0]]");
        let golden = qp(&[0, 2, 0, 0, 1]);
        let v = matrix_injectivity(&golden, 2, &q(), &b).unwrap();
        assert_eq!(
            (v.status(), v.reason()),
            (Status::Undecided, Reason::OpenCaseBelowD)
        );
        let v = matrix_injectivity(&golden, 3, &q(), &b).unwrap();
        assert_eq!(
            (v.status(), v.reason()),
            (Status::NotInjective, Reason::CompanionWitness)
        );
        let v = matrix_injectivity(&qp(&[3, 1]), 4, &q(), &b).unwrap();
        assert_eq!(v.status(), Status::Injective);
        let v = matrix_injectivity(&golden, 2, &Field::alg_closed(), &b).unwrap();
        assert_eq!(v.status(), Status::NecessaryConditionFails);
        let v = matrix_injectivity(&qp(&[0, 0, 0, 1]), 3, &Field::real_closed(), &b).unwrap();
        assert_eq!(v.reason(), Reason::NilpotentWitness);
        assert_eq!(
            matrix_injectivity(&golden, 0, &q(), &b),
            Err(Error::DimensionTooSmall(0))
        );
    }

    #[test]
    fn certificate_examples() {
        let f = qp(&[0, 2, 0, 0, 1]);
        let swap = Matrix::from_i64s(&q(), &[vec![0, 1], vec![1, 0]]).unwrap();
        let cert = bezout_noncollision_certificate(&f, &swap).unwrap();
        assert_eq!(cert.m_a.to_string(), "x^2-1");
        assert_eq!(cert.cofactor, Cofactor::G);
        assert_eq!(cert.identity_at_a, Matrix::identity(&q(), 2));
        let cert = bezout_noncollision_certificate(&f, &Matrix::identity(&q(), 2)).unwrap();
        assert_eq!(cert.m_a.to_string(), "x-1");
        // a nonzero singular A shares the factor x with g
        let nil = jordan_nilpotent_embed(&q(), 2).unwrap();
        let cert = bezout_noncollision_certificate(&f, &nil).unwrap();
        assert_eq!(cert.cofactor, Cofactor::H);
        assert!(!cert.g_at_a.is_zero());
        assert!(matches!(
            bezout_noncollision_certificate(&f, &Matrix::zero(&q(), 2)),
            Err(Error::Precondition(_))
        ));
        let big = Matrix::identity(&q(), 3);
        assert!(matches!(
            bezout_noncollision_certificate(&f, &big),
            Err(Error::Precondition(_))
        ));
    }
}
