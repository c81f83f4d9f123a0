//! Real root counting over Q with Sturm chains.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{squarefree_decomposition, UniPoly};
use crate::error::{Error, Result};
use crate::fields::Elem;

/// Where to count roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Interval {
    WholeLine,
    /// Closed interval `[lo, hi]`.
    Closed(BigRational, BigRational),
}

fn ensure_rational(f: &UniPoly) -> Result<()> {
    if f.field().is_rationals() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "real root counting over {}",
            f.field()
        )))
    }
}

fn sign(e: &Elem) -> i8 {
    match e {
        Elem::Q(r) if r.is_positive() => 1,
        Elem::Q(r) if r.is_negative() => -1,
        _ => 0,
    }
}

/// `p0 = f`, `p1 = f'`, `p_{i+1} = -rem(p_{i-1}, p_i)`, stopping before zero.
pub fn sturm_sequence(f: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![f.clone()];
    let mut next = f.derivative();
    while !next.is_zero() {
        let r = chain.last().unwrap().rem(&next).expect("nonzero divisor");
        chain.push(next);
        next = -&r;
    }
    chain
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|s| *s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[UniPoly], x: &BigRational) -> usize {
    let point = Elem::Q(x.clone());
    variations(chain.iter().map(|p| sign(&p.eval(&point))))
}

fn variations_at_infinity(chain: &[UniPoly], positive: bool) -> usize {
    variations(chain.iter().map(|p| {
        let s = sign(p.leading().expect("chain has no zero entries"));
        if positive || p.deg() % 2 == 0 {
            s
        } else {
            -s
        }
    }))
}

/// Number of distinct real roots of `f` in the interval.
pub fn sturm_real_roots(f: &UniPoly, interval: &Interval) -> Result<usize> {
    ensure_rational(f)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = f.gcd(&f.derivative())?;
    let sf = f.exact_div(&g).expect("gcd divides");
    if sf.is_constant() {
        return Ok(0);
    }
    let chain = sturm_sequence(&sf);
    Ok(match interval {
        Interval::WholeLine => {
            variations_at_infinity(&chain, false) - variations_at_infinity(&chain, true)
        }
        Interval::Closed(lo, hi) => {
            if lo > hi {
                return Ok(0);
            }
            // V(lo) - V(hi) counts roots in (lo, hi]
            let open = variations_at(&chain, lo) - variations_at(&chain, hi);
            let at_lo = sf.eval(&Elem::Q(lo.clone()));
            open + usize::from(at_lo == Elem::Q(BigRational::zero()))
        }
    })
}

/// Whether `x -> f(x)` is strictly monotone on R: `f'` has no real root of
/// odd multiplicity and `deg f` is odd.
pub fn is_strictly_monotone_r(f: &UniPoly) -> Result<bool> {
    ensure_rational(f)?;
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if f.deg() == 1 {
        return Ok(true);
    }
    if f.deg().is_multiple_of(2) {
        return Ok(false);
    }
    let df = f.derivative();
    let odd_part = squarefree_decomposition(&df)?
        .into_iter()
        .filter(|(_, m)| m % 2 == 1)
        .fold(UniPoly::one(f.field()), |acc, (s, _)| &acc * &s);
    Ok(sturm_real_roots(&odd_part, &Interval::WholeLine)? == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Field;
    use proptest::prelude::*;

    fn qp(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(&Field::rationals(), c).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn whole_line_examples() {
        assert_eq!(
            sturm_real_roots(&qp(&[1, 0, 3]), &Interval::WholeLine).unwrap(),
            0
        );
        assert_eq!(
            sturm_real_roots(&qp(&[0, -1, 0, 1]), &Interval::WholeLine).unwrap(),
            3
        );
        assert_eq!(
            sturm_real_roots(&qp(&[-2, 0, 1]), &Interval::WholeLine).unwrap(),
            2
        );
        assert_eq!(
            sturm_real_roots(&qp(&[]), &Interval::WholeLine),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn closed_interval_counts_endpoints() {
        let f = qp(&[0, -1, 0, 1]);
        let count = |lo, hi| sturm_real_roots(&f, &Interval::Closed(r(lo, 1), r(hi, 1))).unwrap();
        assert_eq!(count(-1, 1), 3);
        assert_eq!(count(0, 1), 2);
        assert_eq!(count(2, 5), 0);
        assert_eq!(count(-5, -1), 1);
        // sqrt(2) is in [1, 2]
        let g = qp(&[-2, 0, 1]);
        assert_eq!(
            sturm_real_roots(&g, &Interval::Closed(r(1, 1), r(2, 1))).unwrap(),
            1
        );
    }

    #[test]
    fn monotonicity_examples() {
        assert!(is_strictly_monotone_r(&qp(&[0, 1, 0, 1])).unwrap());
        assert!(!is_strictly_monotone_r(&qp(&[0, -1, 0, 1])).unwrap());
        assert!(is_strictly_monotone_r(&qp(&[0, 1])).unwrap());
        // x^3: derivative 3x^2 has only an even-multiplicity root
        assert!(is_strictly_monotone_r(&qp(&[0, 0, 0, 1])).unwrap());
        assert!(!is_strictly_monotone_r(&qp(&[0, 0, 1])).unwrap());
        assert_eq!(
            is_strictly_monotone_r(&qp(&[4])),
            Err(Error::ConstantPolynomial)
        );
    }

    proptest! {
        // Oracle: a product of linear factors with known rational roots.
        #[test]
        fn agrees_with_constructed_roots(roots in prop::collection::vec((-20i64..20, 1i64..5), 1..7)) {
            let field = Field::rationals();
            let mut f = UniPoly::one(&field);
            let mut distinct: Vec<BigRational> = Vec::new();
            for (n, d) in &roots {
                let root = r(*n, *d);
                let lin = UniPoly::from_raw(field.clone(), vec![Elem::Q(-root.clone()), field.one()]);
                f = &f * &lin;
                if !distinct.contains(&root) {
                    distinct.push(root);
                }
            }
            prop_assert_eq!(sturm_real_roots(&f, &Interval::WholeLine).unwrap(), distinct.len());
            let (lo, hi) = (r(-3, 1), r(7, 2));
            let inside = distinct.iter().filter(|x| **x >= lo && **x <= hi).count();
            prop_assert_eq!(sturm_real_roots(&f, &Interval::Closed(lo, hi)).unwrap(), inside);
        }
    }
}
