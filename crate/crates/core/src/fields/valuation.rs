//! 2-adic valuation on Q.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Elem, FieldElement};
use crate::error::{Error, Result};

/// `v_2` of a rational; zero has infinite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// Exponent of 2 in a nonzero integer.
pub fn v2_integer(n: &BigInt) -> Option<i64> {
    n.trailing_zeros().map(|z| z as i64)
}

pub fn v2_rational(r: &BigRational) -> Valuation {
    if r.is_zero() {
        return Valuation::Infinity;
    }
    let num = v2_integer(r.numer()).expect("nonzero numerator");
    let den = v2_integer(r.denom()).expect("nonzero denominator");
    Valuation::Finite(num - den)
}

/// `v_2(num) - v_2(den)` for an element of Q.
pub fn two_adic_valuation(r: &FieldElement) -> Result<Valuation> {
    match r.elem() {
        Elem::Q(q) => Ok(v2_rational(q)),
        _ => Err(Error::Unsupported(format!(
            "2-adic valuation on {}",
            r.field()
        ))),
    }
}
