use eva_inject::engine::{
    brute_force_matrix, brute_force_scalar, brute_force_zero_fiber, matrix_injectivity,
    multivariate_injectivity, permutation_check, scalar_injectivity, search_rational_collisions,
    Bounds, Point, Reason, Status,
};
use eva_inject::fields::{Elem, Field};
use eva_inject::matrix::mat_poly_eval;
use eva_inject::poly::{MultiPoly, UniPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_fields() -> Vec<Field> {
    [2u64, 3, 4, 5, 7, 8, 9]
        .into_iter()
        .map(|q| Field::finite(q).unwrap())
        .collect()
}

fn random_poly(field: &Field, rng: &mut ChaCha8Rng, max_deg: usize) -> UniPoly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg).map(|_| field.random_elem(rng)).collect();
    UniPoly::new(field.clone(), coeffs).unwrap()
}

fn images_agree(f: &UniPoly, lhs: &Point, rhs: &Point) -> bool {
    match (lhs, rhs) {
        (Point::Scalar(a), Point::Scalar(b)) => {
            a != b && f.eval_at(a).unwrap() == f.eval_at(b).unwrap()
        }
        (Point::Matrix(a), Point::Matrix(b)) => {
            a != b && mat_poly_eval(f, a).unwrap() == mat_poly_eval(f, b).unwrap()
        }
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn scalar_verdicts_match_enumeration(field in prop::sample::select(small_fields()), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&field, &mut rng, 8);
        prop_assume!(!f.is_zero());
        let v = scalar_injectivity(&f, &field, &Bounds::default()).unwrap();
        let oracle = brute_force_scalar(&f, 49).unwrap();
        prop_assert_eq!(v.status(), oracle.status());
        if let Some(w) = v.witness() {
            prop_assert!(images_agree(&f, w.lhs(), w.rhs()));
        }
        if !f.is_constant() {
            let check = permutation_check(&f, 49).unwrap();
            prop_assert_eq!(Some(check.hermite), check.exhaustive);
        }
    }

    #[test]
    fn matrix_verdicts_are_sound(which in 0usize..3, seed in any::<u64>()) {
        let field = small_fields()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&field, &mut rng, 5);
        prop_assume!(!f.is_zero());
        let n = 2;
        let v = matrix_injectivity(&f, n, &field, &Bounds::default()).unwrap();
        match v.status() {
            Status::NotInjective => {
                let w = v.witness().unwrap();
                prop_assert!(images_agree(&f, w.lhs(), w.rhs()));
            }
            Status::Undecided => {
                prop_assert_eq!(v.reason(), Reason::OpenCaseBelowD);
                prop_assert_eq!(brute_force_zero_fiber(&f, n, 1 << 20).unwrap(), None);
            }
            Status::Injective => {
                prop_assert_eq!(f.deg(), 1);
                prop_assert_eq!(brute_force_matrix(&f, n, 1 << 20).unwrap().status(), Status::Injective);
            }
            Status::NecessaryConditionFails => prop_assert!(false, "not produced over finite fields"),
        }
    }

    #[test]
    fn degree_one_maps_are_injective(field_ix in 0usize..10, n in 1usize..=3, a in 1i64..50, b in -50i64..50) {
        let mut all = small_fields();
        all.extend([Field::rationals(), Field::alg_closed(), Field::real_closed()]);
        let spec = all[field_ix % all.len()].clone();
        let coeffs = if spec.is_tag() { Field::rationals() } else { spec.clone() };
        let f = UniPoly::new(coeffs.clone(), vec![coeffs.from_i64(b), coeffs.from_i64(a)]).unwrap();
        prop_assume!(f.deg() == 1);
        let v = matrix_injectivity(&f, n, &spec, &Bounds::default()).unwrap();
        prop_assert_eq!((v.status(), v.reason()), (Status::Injective, Reason::DegreeOne));
        let small = spec.order().is_some_and(|q| q.checked_pow((n * n) as u32).is_some_and(|c| c <= 1 << 16));
        if small {
            prop_assert_eq!(brute_force_matrix(&f, n, 1 << 16).unwrap().status(), Status::Injective);
        }
    }

    #[test]
    fn multivariate_maps_on_finite_fields_collide(which in 0usize..3, seed in any::<u64>()) {
        let field = small_fields()[which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(2..=3);
        let mut f = MultiPoly::zero(&field, m);
        for _ in 0..rng.gen_range(0..5) {
            let mut term = MultiPoly::constant(&field, m, field.random_elem(&mut rng));
            for i in 0..m {
                term = term.mul(&MultiPoly::var(&field, m, i).pow(rng.gen_range(0..3)));
            }
            f = f.add(&term);
        }
        let v = multivariate_injectivity(&f, &field, &Bounds::default()).unwrap();
        prop_assert_eq!(v.status(), Status::NotInjective);
        let w = v.witness().unwrap();
        prop_assert_ne!(w.lhs(), w.rhs());
        match (w.lhs(), w.rhs()) {
            (Point::Tuple(x), Point::Tuple(y)) => prop_assert_eq!(f.multi_eval(x).unwrap(), f.multi_eval(y).unwrap()),
            other => prop_assert!(false, "unexpected witness {:?}", other),
        }
    }

    #[test]
    fn rational_collisions_are_genuine(seed in any::<u64>()) {
        let q = Field::rationals();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&q, &mut rng, 4);
        prop_assume!(!f.is_constant());
        if let Some(w) = search_rational_collisions(&f, 6).unwrap() {
            prop_assert!(images_agree(&f, w.lhs(), w.rhs()));
        }
    }
}

#[test]
fn even_degree_real_maps_are_never_injective() {
    let q = Field::rationals();
    for c in [vec![0, 0, 1], vec![1, -3, 0, 0, 2], vec![0, 2, 0, 0, 1]] {
        let f = UniPoly::from_i64s(&q, &c).unwrap();
        let v = scalar_injectivity(&f, &Field::real_closed(), &Bounds::default()).unwrap();
        assert_ne!(v.status(), Status::Injective, "{f}");
    }
}

#[test]
fn witnesses_are_deterministic() {
    let f = UniPoly::from_i64s(&Field::prime(5).unwrap(), &[0, 0, 1]).unwrap();
    let first = matrix_injectivity(&f, 3, f.field(), &Bounds::default()).unwrap();
    for seed in [1u64, 2, 99] {
        let b = Bounds {
            seed,
            ..Bounds::default()
        };
        assert_eq!(matrix_injectivity(&f, 3, f.field(), &b).unwrap(), first);
    }
    assert_eq!(
        first.witness().unwrap().rhs(),
        &Point::Matrix(eva_inject::Matrix::zero(f.field(), 3))
    );
    let zero = Elem::Fp(0);
    assert_eq!(
        first.witness().unwrap().image(),
        &Point::Matrix(eva_inject::Matrix::scalar(f.field(), 3, zero))
    );
}
