use eva_inject::fields::{Elem, Field, FieldElement};
use eva_inject::matrix::{
    companion, flatten, mat_poly_eval, minimal_polynomial, unflatten, Matrix,
};
use eva_inject::poly::{factor_finite, factor_rationals, is_irreducible, UniPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CASES: u32 = 500;

fn fields() -> Vec<Field> {
    let mut out: Vec<Field> = [2u64, 3, 4, 5, 7, 8, 9, 25, 27, 49]
        .into_iter()
        .map(|q| Field::finite(q).unwrap())
        .collect();
    out.push(Field::extension(3, &[1, 0, 1]).unwrap());
    out.push(Field::rationals());
    out
}

fn any_field() -> impl Strategy<Value = Field> {
    prop::sample::select(fields())
}

fn random_poly(field: &Field, rng: &mut ChaCha8Rng, max_deg: usize) -> UniPoly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg).map(|_| field.random_elem(rng)).collect();
    UniPoly::new(field.clone(), coeffs).unwrap()
}

fn random_monic(field: &Field, rng: &mut ChaCha8Rng, deg: usize) -> UniPoly {
    let mut coeffs: Vec<Elem> = (0..deg).map(|_| field.random_elem(rng)).collect();
    coeffs.push(field.one());
    UniPoly::new(field.clone(), coeffs).unwrap()
}

fn random_matrix(field: &Field, rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| field.random_elem(rng)).collect())
        .collect();
    Matrix::from_rows(field, rows).unwrap()
}

/// `det(x I - A)` by cofactor expansion over `F[x]`, independent of the
/// Krylov-based minimal polynomial.
fn char_poly(a: &Matrix) -> UniPoly {
    let field = a.field().clone();
    let n = a.n();
    let entries: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UniPoly::constant(&field, field.neg(a.get(i, j)));
                    if i == j {
                        &UniPoly::x(&field) + &c
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    det(&entries, &field)
}

fn det(m: &[Vec<UniPoly>], field: &Field) -> UniPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = UniPoly::zero(field);
    for (j, top) in m[0].iter().enumerate() {
        let minor: Vec<Vec<UniPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = top * &det(&minor, field);
        total = if j % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn field_axioms(field in any_field(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (field.random_elem(&mut rng), field.random_elem(&mut rng), field.random_elem(&mut rng));
        let f = &field;
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.add(&a, &f.zero()), a.clone());
        prop_assert_eq!(f.mul(&a, &f.one()), a.clone());
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        prop_assert_eq!(f.sub(&a, &b), f.add(&a, &f.neg(&b)));
        if f.is_zero(&a) {
            prop_assert!(f.inv(&a).is_err());
        } else {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
            prop_assert_eq!(f.div(&f.mul(&b, &a), &a).unwrap(), b.clone());
        }
        prop_assert!(f.validate(&a).is_ok());
        if let Some(q) = f.order() {
            prop_assert!(f.is_zero(&f.scale_int(&f.one(), f.characteristic())));
            prop_assert_eq!(f.pow(&a, q), a.clone());
        }
    }

    #[test]
    fn finite_factorizations_reconstruct(field in any_field().prop_filter("finite", Field::is_finite), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&field, &mut rng, 9);
        prop_assume!(!f.is_constant());
        let fact = factor_finite(&f).unwrap();
        prop_assert_eq!(fact.reconstruct(), f.clone());
        for (q, e) in &fact.factors {
            prop_assert!(*e >= 1);
            prop_assert!(q.is_monic() && !q.is_constant());
            prop_assert!(is_irreducible(q).unwrap(), "{} is reducible", q);
        }
    }

    #[test]
    fn rational_factorizations_reconstruct(seed in any::<u64>(), roots in prop::collection::vec((-6i64..=6, 1i64..=4), 0..3)) {
        let q = Field::rationals();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut f = random_poly(&q, &mut rng, 4);
        prop_assume!(!f.is_zero());
        for (num, den) in &roots {
            f = &f * &UniPoly::from_ratios(&q, &[(-num, *den), (1, 1)]).unwrap();
        }
        prop_assume!(!f.is_constant());
        let fact = factor_rationals(&f).unwrap();
        prop_assert_eq!(fact.reconstruct(), f.clone());
        let linear: u32 = fact.factors.iter().filter(|(p, _)| p.deg() == 1).map(|(_, e)| e).sum();
        prop_assert!(linear as usize >= roots.len());
        for (p, _) in &fact.factors {
            prop_assert!(p.is_monic() && !p.is_constant());
        }
    }

    #[test]
    fn flatten_round_trips(field in any_field(), n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(&field, &mut rng, n);
        let flat = flatten(&a);
        prop_assert_eq!(flat.len(), n * n);
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(&flat[i * n + j], &a.entry(i, j));
            }
        }
        prop_assert_eq!(unflatten(&flat).unwrap(), a);
    }

    #[test]
    fn companion_is_a_root(which in 0usize..3, deg in 1usize..=6, seed in any::<u64>()) {
        let field = [Field::prime(2).unwrap(), Field::prime(3).unwrap(), Field::rationals()][which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_monic(&field, &mut rng, deg);
        let c = companion(&q).unwrap();
        prop_assert_eq!(c.n(), deg);
        prop_assert!(mat_poly_eval(&q, &c).unwrap().is_zero());
        prop_assert_eq!(minimal_polynomial(&c), q.clone());
        prop_assert_eq!(char_poly(&c), q);
    }

    #[test]
    fn minimal_polynomial_divides_characteristic(field in any_field(), n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(&field, &mut rng, n);
        let m = minimal_polynomial(&a);
        let chi = char_poly(&a);
        prop_assert!(m.is_monic() && m.deg() >= 1 && m.deg() <= n);
        prop_assert!(m.divides(&chi), "m_A = {} does not divide chi_A = {}", m, chi);
        prop_assert!(mat_poly_eval(&m, &a).unwrap().is_zero());
        prop_assert!(mat_poly_eval(&chi, &a).unwrap().is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(field in any_field(), n in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(&field, &mut rng, n);
        let f = random_poly(&field, &mut rng, 4);
        let g = random_poly(&field, &mut rng, 4);
        let ev = |p: &UniPoly| mat_poly_eval(p, &a).unwrap();
        prop_assert_eq!(ev(&(&f + &g)), &ev(&f) + &ev(&g));
        prop_assert_eq!(ev(&(&f * &g)), &ev(&f) * &ev(&g));
        prop_assert_eq!(ev(&UniPoly::one(&field)), Matrix::identity(&field, n));
        prop_assert_eq!(ev(&UniPoly::x(&field)), a.clone());
        let c = field.random_elem(&mut rng);
        prop_assert_eq!(ev(&f.scale(&c)), ev(&f).scale(&c));
    }

    #[test]
    fn scalar_evaluation_agrees_with_one_by_one_matrices(field in any_field(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&field, &mut rng, 6);
        let x = field.random_elem(&mut rng);
        let m = Matrix::scalar(&field, 1, x.clone());
        let fx = f.eval_at(&FieldElement::new(field.clone(), x).unwrap()).unwrap();
        prop_assert_eq!(mat_poly_eval(&f, &m).unwrap().entry(0, 0), fx);
    }
}
