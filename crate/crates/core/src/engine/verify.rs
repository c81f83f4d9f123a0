use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement};
use crate::matrix::{mat_poly_eval, Matrix};
use crate::poly::{MultiPoly, UniPoly};

/// A polynomial that can be evaluated at a [`Point`].
#[derive(Debug, Clone, Copy)]
pub enum PolyRef<'a> {
    Uni(&'a UniPoly),
    Multi(&'a MultiPoly),
}

impl<'a> From<&'a UniPoly> for PolyRef<'a> {
    fn from(f: &'a UniPoly) -> Self {
        PolyRef::Uni(f)
    }
}

impl<'a> From<&'a MultiPoly> for PolyRef<'a> {
    fn from(f: &'a MultiPoly) -> Self {
        PolyRef::Multi(f)
    }
}

impl PolyRef<'_> {
    pub fn field(&self) -> &Field {
        match self {
            PolyRef::Uni(f) => f.field(),
            PolyRef::Multi(f) => f.field(),
        }
    }

    /// Exact value of the polynomial at `p`.
    pub fn evaluate(&self, p: &Point) -> Result<Point> {
        match (self, p) {
            (PolyRef::Uni(f), Point::Scalar(x)) => Ok(Point::Scalar(f.eval_at(x)?)),
            (PolyRef::Uni(f), Point::Matrix(a)) => Ok(Point::Matrix(mat_poly_eval(f, a)?)),
            (PolyRef::Uni(f), Point::Tuple(xs)) if xs.len() == 1 => {
                Ok(Point::Scalar(f.eval_at(&xs[0])?))
            }
            (PolyRef::Uni(_), Point::Tuple(xs)) => Err(Error::ArityMismatch {
                expected: 1,
                got: xs.len(),
            }),
            (PolyRef::Multi(f), Point::Tuple(xs)) => Ok(Point::Scalar(f.multi_eval(xs)?)),
            (PolyRef::Multi(f), Point::Scalar(x)) => {
                Ok(Point::Scalar(f.multi_eval(std::slice::from_ref(x))?))
            }
            (PolyRef::Multi(_), Point::Matrix(_)) => Err(Error::Unsupported(
                "multivariate evaluation at matrices".into(),
            )),
        }
    }
}

/// An input to an evaluation map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Point {
    Scalar(FieldElement),
    Tuple(Vec<FieldElement>),
    Matrix(Matrix),
}

impl Point {
    pub fn field(&self) -> Option<&Field> {
        match self {
            Point::Scalar(x) => Some(x.field()),
            Point::Tuple(xs) => xs.first().map(FieldElement::field),
            Point::Matrix(a) => Some(a.field()),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Point::Scalar(_) => "scalar",
            Point::Tuple(_) => "tuple",
            Point::Matrix(_) => "matrix",
        }
    }

    fn ensure_same_shape(&self, other: &Point) -> Result<()> {
        let same = match (self, other) {
            (Point::Scalar(_), Point::Scalar(_)) => true,
            (Point::Tuple(a), Point::Tuple(b)) => a.len() == b.len(),
            (Point::Matrix(a), Point::Matrix(b)) => a.n() == b.n(),
            _ => false,
        };
        if !same {
            return Err(Error::Precondition(format!(
                "witness sides have different shapes ({} vs {})",
                self.kind(),
                other.kind()
            )));
        }
        if let (Some(a), Some(b)) = (self.field(), other.field()) {
            a.ensure_same(b)?;
        }
        Ok(())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Scalar(x) => write!(f, "{x}"),
            Point::Tuple(xs) => {
                let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
            Point::Matrix(a) => write!(f, "{a}"),
        }
    }
}

/// Two distinct inputs with the same image; only built by [`verify_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    lhs: Point,
    rhs: Point,
    image: Point,
}

impl Witness {
    pub fn lhs(&self) -> &Point {
        &self.lhs
    }

    pub fn rhs(&self) -> &Point {
        &self.rhs
    }

    pub fn image(&self) -> &Point {
        &self.image
    }
}

/// Checks `lhs != rhs` and `f(lhs) = f(rhs)` exactly.
pub fn verify_witness<'a>(f: impl Into<PolyRef<'a>>, lhs: Point, rhs: Point) -> Result<Witness> {
    let f = f.into();
    lhs.ensure_same_shape(&rhs)?;
    if let Some(field) = lhs.field() {
        f.field().ensure_same(field)?;
    }
    if lhs == rhs {
        return Err(Error::NotAWitness(format!("both sides equal {lhs}")));
    }
    let left = f.evaluate(&lhs)?;
    let right = f.evaluate(&rhs)?;
    if left != right {
        return Err(Error::NotAWitness(format!(
            "images differ: f({lhs}) = {left} but f({rhs}) = {right}"
        )));
    }
    Ok(Witness {
        lhs,
        rhs,
        image: left,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn s(v: i64) -> Point {
        Point::Scalar(FieldElement::from_i64(&q(), v).unwrap())
    }

    #[test]
    fn scalar_examples() {
        let sq = UniPoly::from_i64s(&q(), &[0, 0, 1]).unwrap();
        let w = verify_witness(&sq, s(1), s(-1)).unwrap();
        assert_eq!(w.image(), &s(1));
        let x = UniPoly::x(&q());
        assert!(matches!(
            verify_witness(&x, s(0), s(1)),
            Err(Error::NotAWitness(_))
        ));
        assert!(matches!(
            verify_witness(&sq, s(2), s(2)),
            Err(Error::NotAWitness(_))
        ));
    }

    #[test]
    fn golden_matrices() {
        let f = UniPoly::from_i64s(&q(), &[0, 2, 0, 0, 1]).unwrap();
        let a = Matrix::from_ratios(&q(), &[vec![(0, 1), (1, 2)], vec![(1, 1), (-1, 1)]]).unwrap();
        let b = Matrix::from_ratios(&q(), &[vec![(0, 1), (-3, 2)], vec![(1, 1), (1, 1)]]).unwrap();
        let w = verify_witness(&f, Point::Matrix(a), Point::Matrix(b)).unwrap();
        assert_eq!(w.image().to_string(), "[[3/4,0],[0,3/4]]");
    }

    #[test]
    fn shape_and_field_checks() {
        let sq = UniPoly::from_i64s(&q(), &[0, 0, 1]).unwrap();
        let zero = Point::Matrix(Matrix::zero(&q(), 2));
        assert!(matches!(
            verify_witness(&sq, s(0), zero),
            Err(Error::Precondition(_))
        ));
        let f3 = Field::prime(3).unwrap();
        let other = Point::Scalar(FieldElement::from_i64(&f3, 1).unwrap());
        assert!(matches!(
            verify_witness(&sq, s(1), other),
            Err(Error::SpecMismatch { .. })
        ));
        let xy = MultiPoly::var(&f3, 2, 0).add(&MultiPoly::var(&f3, 2, 1));
        let t = |a, b| {
            Point::Tuple(vec![
                FieldElement::from_i64(&f3, a).unwrap(),
                FieldElement::from_i64(&f3, b).unwrap(),
            ])
        };
        let w = verify_witness(&xy, t(0, 1), t(1, 0)).unwrap();
        assert_eq!(w.image().to_string(), "1");
    }
}
