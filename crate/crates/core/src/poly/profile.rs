use super::{factor_finite_with_seed, factor_rationals, UniPoly, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::fields::FieldElement;

/// `f = c + x^m * h` with `h(0) != 0` and `h = unit * prod(q_i^e_i)`.
///
/// `d` is the least degree among the `q_i` (`None` when `h` is constant) and
/// `chosen_q` is the first factor of that degree in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorProfile {
    pub c: FieldElement,
    pub m_mult: usize,
    pub h: UniPoly,
    pub unit: FieldElement,
    pub factors: Vec<(UniPoly, u32)>,
    pub d: Option<usize>,
    pub chosen_q: Option<UniPoly>,
}

impl FactorProfile {
    /// `c + x^m * h`.
    pub fn reconstruct(&self) -> UniPoly {
        let field = self.h.field();
        &UniPoly::constant(field, self.c.elem().clone()) + &self.h.shift(self.m_mult)
    }

    /// `g = f - f(0) = x^m * h`.
    pub fn g(&self) -> UniPoly {
        self.h.shift(self.m_mult)
    }
}

pub fn factor_profile(f: &UniPoly) -> Result<FactorProfile> {
    factor_profile_with_seed(f, DEFAULT_SEED)
}

pub fn factor_profile_with_seed(f: &UniPoly, seed: u64) -> Result<FactorProfile> {
    let field = f.field().clone();
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !(field.is_finite() || field.is_rationals()) {
        return Err(Error::Unsupported(format!("factor profile over {field}")));
    }
    let c = FieldElement::from_parts(field.clone(), f.coeff(0));
    let g = f - &UniPoly::constant(&field, c.elem().clone());
    let (m_mult, h) = g.zero_multiplicity()?;
    if h.is_constant() {
        return Ok(FactorProfile {
            c,
            m_mult,
            unit: FieldElement::from_parts(field.clone(), h.coeff(0)),
            h,
            factors: Vec::new(),
            d: None,
            chosen_q: None,
        });
    }
    let fact = if field.is_finite() {
        factor_finite_with_seed(&h, seed)?
    } else {
        factor_rationals(&h)?
    };
    // factors are sorted by degree, then canonically
    let chosen_q = fact.factors.first().map(|(q, _)| q.clone());
    Ok(FactorProfile {
        c,
        m_mult,
        h,
        unit: fact.unit,
        d: chosen_q.as_ref().map(UniPoly::deg),
        chosen_q,
        factors: fact.factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Field;

    fn qp(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(&Field::rationals(), c).unwrap()
    }

    #[test]
    fn quartic_profile() {
        let f = qp(&[7, 2, 0, 0, 1]);
        let p = factor_profile(&f).unwrap();
        assert_eq!(p.c.to_string(), "7");
        assert_eq!(p.m_mult, 1);
        assert_eq!(p.h, qp(&[2, 0, 0, 1]));
        assert_eq!(p.d, Some(3));
        assert_eq!(p.chosen_q, Some(qp(&[2, 0, 0, 1])));
        assert_eq!(p.reconstruct(), f);
    }

    #[test]
    fn constant_h() {
        let p = factor_profile(&qp(&[1, 0, 1])).unwrap();
        assert_eq!(p.c.to_string(), "1");
        assert_eq!(p.m_mult, 2);
        assert_eq!(p.h, qp(&[1]));
        assert_eq!(p.d, None);
        assert_eq!(p.chosen_q, None);
    }

    #[test]
    fn irreducible_quadratic_cofactor() {
        let p = factor_profile(&qp(&[0, 1, 0, 1])).unwrap();
        assert_eq!(p.c.to_string(), "0");
        assert_eq!((p.m_mult, p.d), (1, Some(2)));
        assert_eq!(p.chosen_q, Some(qp(&[1, 0, 1])));
    }

    #[test]
    fn tie_break_is_lexicographic() {
        // x (x + 2)(x + 1) over F_5: both linear, pick x + 1
        let f5 = Field::prime(5).unwrap();
        let f = UniPoly::from_i64s(&f5, &[0, 2, 3, 1]).unwrap();
        let p = factor_profile(&f).unwrap();
        assert_eq!(p.d, Some(1));
        assert_eq!(p.chosen_q.unwrap().to_string(), "x+1");
        assert_eq!(
            factor_profile(&UniPoly::from_i64s(&f5, &[3]).unwrap()),
            Err(Error::ConstantPolynomial)
        );
    }
}
