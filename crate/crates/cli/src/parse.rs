//! Text formats for fields, polynomials, field elements and matrices.
//!
//! Polynomials: `x^4+2*x+7`, `3/4*x^2-(a+1)*x`, `x1*x2+x1` (or `x*y+x`).
//! Whitespace is ignored. `a` is the generator of an extension field. With
//! `m >= 2` variables, `x`, `y`, `z` are aliases for `x1`, `x2`, `x3`.
//!
//! Fields: `Q`, `F7`, `F9`, `F9:modulus=x^2+1`, `ACF`, `RCF` (alias `R`).
//!
//! Matrices: JSON row-major arrays of element strings, e.g.
//! `[["0","1/2"],["1","-1"]]`.

use std::fmt;

use eva_inject::engine::Point;
use eva_inject::fields::{prime_power, Elem, Field, FieldElement};
use eva_inject::matrix::Matrix;
use eva_inject::poly::{MultiPoly, UniPoly};
use num_bigint::BigInt;
use serde_json::Value;

/// A parse failure with the byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: Option<usize>,
    pub input: String,
}

impl ParseError {
    fn at(input: &str, position: usize, message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
            position: Some(position),
            input: input.to_string(),
        }
    }

    fn whole(input: &str, message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
            position: None,
            input: input.to_string(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            Some(p) => write!(
                f,
                "{} at position {p}\n  {}\n  {}^",
                self.message,
                self.input,
                " ".repeat(p)
            ),
            None => write!(f, "{} in {:?}", self.message, self.input),
        }
    }
}

impl std::error::Error for ParseError {}

/// A parsed polynomial: univariate when it has one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedPoly {
    Uni(UniPoly),
    Multi(MultiPoly),
}

impl fmt::Display for ParsedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParsedPoly::Uni(p) => write!(f, "{p}"),
            ParsedPoly::Multi(p) => write!(f, "{p}"),
        }
    }
}

/// The field coefficients live in: Q for the closed-field tags.
pub fn coefficient_field(spec: &Field) -> Field {
    if spec.is_tag() {
        Field::rationals()
    } else {
        spec.clone()
    }
}

pub fn parse_field(s: &str) -> Result<Field, ParseError> {
    let t = s.trim();
    match t {
        "Q" | "QQ" => return Ok(Field::rationals()),
        "ACF" => return Ok(Field::alg_closed()),
        "RCF" | "R" => return Ok(Field::real_closed()),
        _ => {}
    }
    let (head, modulus) = match t.split_once(':') {
        Some((h, rest)) => {
            let m = rest
                .trim()
                .strip_prefix("modulus=")
                .ok_or_else(|| ParseError::at(s, h.len() + 1, "expected 'modulus=' after ':'"))?;
            (h.trim(), Some(m))
        }
        None => (t, None),
    };
    let digits = head.strip_prefix('F').ok_or_else(|| {
        ParseError::whole(
            s,
            "unknown field; expected Q, Fq, Fq:modulus=..., ACF or RCF",
        )
    })?;
    let q: u64 = digits
        .parse()
        .map_err(|_| ParseError::whole(s, format!("invalid field order {digits:?}")))?;
    let (p, k) =
        prime_power(q).ok_or_else(|| ParseError::whole(s, format!("{q} is not a prime power")))?;
    let core_err = |e: eva_inject::Error| ParseError::whole(s, e.to_string());
    match modulus {
        None if k == 1 => Field::prime(p).map_err(core_err),
        None => Field::finite(q).map_err(core_err),
        Some(m) => {
            let base = Field::prime(p).map_err(core_err)?;
            let poly = parse_uni(m, &base)
                .map_err(|e| ParseError::whole(s, format!("modulus: {}", e.message)))?;
            if poly.deg() as u32 != k {
                return Err(ParseError::whole(
                    s,
                    format!(
                        "modulus has degree {} but F{q} needs degree {k}",
                        poly.deg()
                    ),
                ));
            }
            let coeffs: Vec<u64> = poly
                .coeffs()
                .iter()
                .map(|c| match c {
                    Elem::Fp(v) => *v,
                    _ => unreachable!("prime field coefficients"),
                })
                .collect();
            Field::extension(p, &coeffs).map_err(core_err)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(s[start..i].parse().expect("digits")), start));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(s[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            let ch = s[i..].chars().next().expect("in bounds");
            return Err(ParseError::at(s, i, format!("unexpected character {ch:?}")));
        }
    }
    out.push((Tok::End, s.len()));
    Ok(out)
}

/// Index of a variable name, 1-based (`x` and `x1` are both 1).
fn var_index(name: &str) -> Option<usize> {
    match name {
        "x" => Some(1),
        "y" => Some(2),
        "z" => Some(3),
        _ => name.strip_prefix('x')?.parse().ok().filter(|k| *k >= 1),
    }
}

/// Number of variables implied by the names used.
fn infer_nvars(tokens: &[(Tok, usize)]) -> usize {
    tokens
        .iter()
        .filter_map(|(t, _)| match t {
            Tok::Ident(name) if name != "x" => var_index(name),
            _ => None,
        })
        .max()
        .unwrap_or(1)
}

struct Parser<'a> {
    input: &'a str,
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    field: Field,
    nvars: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::at(self.input, self.offset(), msg)
    }

    fn describe(&self) -> String {
        match self.peek() {
            Tok::Num(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Op(c) => format!("{c:?}"),
            Tok::End => "end of input".to_string(),
        }
    }

    fn constant(&self, c: Elem) -> MultiPoly {
        MultiPoly::constant(&self.field, self.nvars, c)
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = match self.peek() {
            Tok::Op('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Tok::Op('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Tok::Op('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Op('/') => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(ParseError::at(
                            self.input,
                            at,
                            "division is only allowed by a nonzero constant",
                        ));
                    }
                    let c = d
                        .terms()
                        .next()
                        .map(|(_, c)| c.clone())
                        .expect("nonzero constant");
                    let inv = self.field.inv(&c).expect("nonzero");
                    acc = acc.mul(&self.constant(inv));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        if *self.peek() == Tok::Op('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek().clone() {
            Tok::Num(n) => {
                let e: u32 = n
                    .try_into()
                    .ok()
                    .filter(|e| *e <= 10_000)
                    .ok_or_else(|| self.err("exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => Err(self.err(format!(
                "expected a nonnegative integer exponent, found {}",
                self.describe()
            ))),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(self.constant(self.field.from_bigint(&n)))
            }
            Tok::Ident(name) => {
                if name == "a" {
                    let g = self.field.generator().map_err(|_| {
                        self.err(format!(
                            "the generator 'a' does not exist in {}",
                            self.field
                        ))
                    })?;
                    self.pos += 1;
                    return Ok(self.constant(g));
                }
                match var_index(&name) {
                    Some(k) if k <= self.nvars => {
                        self.pos += 1;
                        Ok(MultiPoly::var(&self.field, self.nvars, k - 1))
                    }
                    Some(k) => Err(self.err(format!(
                        "variable {name:?} is number {k} but only {} variable(s) are in use",
                        self.nvars
                    ))),
                    None => Err(self.err(format!("unknown identifier {name:?}"))),
                }
            }
            Tok::Op('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if *self.peek() != Tok::Op(')') {
                    return Err(self.err(format!("expected ')', found {}", self.describe())));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.err(format!(
                "expected a number, variable or '(', found {}",
                self.describe()
            ))),
        }
    }
}

fn parse_multi(s: &str, field: &Field, nvars: Option<usize>) -> Result<MultiPoly, ParseError> {
    let tokens = tokenize(s)?;
    if tokens.len() == 1 {
        return Err(ParseError::at(s, 0, "empty polynomial"));
    }
    let inferred = infer_nvars(&tokens);
    let nvars = match nvars {
        Some(0) => return Err(ParseError::whole(s, "at least one variable is required")),
        Some(m) => m,
        None => inferred,
    };
    let mut p = Parser {
        input: s,
        tokens,
        pos: 0,
        field: field.clone(),
        nvars,
    };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.err(format!("unexpected {}", p.describe())));
    }
    Ok(out)
}

/// Parses a polynomial over the coefficient field of `spec`; `nvars`
/// overrides the number of variables implied by the names used.
pub fn parse_poly(s: &str, spec: &Field, nvars: Option<usize>) -> Result<ParsedPoly, ParseError> {
    let field = coefficient_field(spec);
    let m = parse_multi(s, &field, nvars)?;
    Ok(match m.to_uni() {
        Some(u) => ParsedPoly::Uni(u),
        None => ParsedPoly::Multi(m),
    })
}

/// Parses a univariate polynomial in `x`.
pub fn parse_uni(s: &str, spec: &Field) -> Result<UniPoly, ParseError> {
    let field = coefficient_field(spec);
    parse_multi(s, &field, Some(1)).map(|m| m.to_uni().expect("one variable"))
}

/// Parses a field element such as `-3/2` or `a+1`.
pub fn parse_element(s: &str, spec: &Field) -> Result<FieldElement, ParseError> {
    let field = coefficient_field(spec);
    let m = parse_multi(s, &field, Some(1))?;
    if !m.is_constant() {
        return Err(ParseError::whole(
            s,
            "expected a constant, found a polynomial",
        ));
    }
    let c = m
        .terms()
        .next()
        .map(|(_, c)| c.clone())
        .unwrap_or_else(|| field.zero());
    FieldElement::new(field, c).map_err(|e| ParseError::whole(s, e.to_string()))
}

fn json_element(v: &Value, spec: &Field, input: &str) -> Result<FieldElement, ParseError> {
    match v {
        Value::String(t) => parse_element(t, spec)
            .map_err(|e| ParseError::whole(input, format!("entry {t:?}: {}", e.message))),
        Value::Number(n) if n.is_i64() => parse_element(&n.to_string(), spec),
        other => Err(ParseError::whole(
            input,
            format!("entry {other} is not a string or integer"),
        )),
    }
}

fn json_value(s: &str) -> Result<Value, ParseError> {
    serde_json::from_str(s).map_err(|e| {
        ParseError::at(
            s,
            e.column().saturating_sub(1),
            format!("invalid JSON: {e}"),
        )
    })
}

fn matrix_from_json(v: &Value, spec: &Field, input: &str) -> Result<Matrix, ParseError> {
    let rows = v
        .as_array()
        .ok_or_else(|| ParseError::whole(input, "a matrix must be an array of rows"))?;
    let n = rows.len();
    let mut out = Vec::with_capacity(n);
    for row in rows {
        let row = row.as_array().filter(|r| r.len() == n).ok_or_else(|| {
            ParseError::whole(input, format!("a matrix must be {n} rows of {n} entries"))
        })?;
        out.push(
            row.iter()
                .map(|e| json_element(e, spec, input).map(FieldElement::into_elem))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Matrix::from_rows(&coefficient_field(spec), out)
        .map_err(|e| ParseError::whole(input, e.to_string()))
}

pub fn parse_matrix(s: &str, spec: &Field) -> Result<Matrix, ParseError> {
    matrix_from_json(&json_value(s)?, spec, s)
}

/// A scalar (`-3/2`), a tuple (`["1","2"]`) or a matrix (`[["0","1"],["1","0"]]`).
pub fn parse_point(s: &str, spec: &Field) -> Result<Point, ParseError> {
    if !s.trim_start().starts_with('[') {
        return parse_element(s, spec).map(Point::Scalar);
    }
    let v = json_value(s)?;
    let items = v
        .as_array()
        .ok_or_else(|| ParseError::whole(s, "expected an array"))?;
    if items.first().is_some_and(Value::is_array) {
        return matrix_from_json(&v, spec, s).map(Point::Matrix);
    }
    if items.is_empty() {
        return Err(ParseError::whole(s, "empty tuple"));
    }
    items
        .iter()
        .map(|e| json_element(e, spec, s))
        .collect::<Result<Vec<_>, _>>()
        .map(Point::Tuple)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_examples() {
        let q = Field::rationals();
        let p = parse_uni("x^4+2*x+7", &q).unwrap();
        assert_eq!(p, UniPoly::from_i64s(&q, &[7, 2, 0, 0, 1]).unwrap());
        assert_eq!(
            parse_uni(" 3/4 * x ^ 2 - x ", &q).unwrap().to_string(),
            "3/4*x^2-x"
        );
        assert_eq!(parse_uni("-(x+1)^2", &q).unwrap().to_string(), "-x^2-2*x-1");
        assert_eq!(parse_uni("x/2", &q).unwrap().to_string(), "1/2*x");
        match parse_poly("x1*x2+x1", &q, None).unwrap() {
            ParsedPoly::Multi(m) => {
                let terms: Vec<(Vec<u32>, String)> = m
                    .terms()
                    .map(|(e, c)| (e.clone(), q.format_elem(c)))
                    .collect();
                assert_eq!(
                    terms,
                    [(vec![1, 0], "1".to_string()), (vec![1, 1], "1".to_string())]
                );
            }
            other => panic!("expected multivariate, got {other:?}"),
        }
        match parse_poly("x*y+z", &q, None).unwrap() {
            ParsedPoly::Multi(m) => assert_eq!(m.to_string(), "x1*x2+x3"),
            other => panic!("expected multivariate, got {other:?}"),
        }
    }

    #[test]
    fn extension_elements() {
        let f9 = parse_field("F9:modulus=x^2+1").unwrap();
        let p = parse_uni("(a+1)*x^2+a", &f9).unwrap();
        assert_eq!(p.to_string(), "(a+1)*x^2+a");
        assert_eq!(parse_element("a*a", &f9).unwrap().to_string(), "2");
        let err = parse_uni("a*x", &Field::prime(7).unwrap()).unwrap_err();
        assert_eq!(err.position, Some(0));
    }

    #[test]
    fn field_examples() {
        assert_eq!(parse_field("Q").unwrap(), Field::rationals());
        assert_eq!(parse_field("F7").unwrap(), Field::prime(7).unwrap());
        assert_eq!(
            parse_field("F9:modulus=x^2+1").unwrap(),
            Field::extension(3, &[1, 0, 1]).unwrap()
        );
        assert_eq!(parse_field("F9").unwrap(), Field::finite(9).unwrap());
        assert_eq!(parse_field("R").unwrap(), Field::real_closed());
        assert!(parse_field("F6").is_err());
        assert!(parse_field("F9:modulus=x^2+2").is_err());
        assert!(parse_field("F9:modulus=x^3+2*x+1").is_err());
        assert!(parse_field("Z").is_err());
    }

    #[test]
    fn positioned_errors() {
        let q = Field::rationals();
        let e = parse_uni("x^2 + & 3", &q).unwrap_err();
        assert_eq!(e.position, Some(6));
        assert!(e.to_string().contains("unexpected character '&'"));
        let e = parse_uni("x^2+", &q).unwrap_err();
        assert_eq!(e.position, Some(4));
        let e = parse_uni("(x+1", &q).unwrap_err();
        assert!(e.message.contains("expected ')'"));
        let e = parse_uni("x/x", &q).unwrap_err();
        assert_eq!(e.position, Some(2));
        let e = parse_uni("1/0", &q).unwrap_err();
        assert_eq!(e.position, Some(2));
        let e = parse_uni("foo", &q).unwrap_err();
        assert!(e.message.contains("unknown identifier"));
        let e = parse_uni("x2", &q).unwrap_err();
        assert!(e.message.contains("only 1 variable"));
    }

    #[test]
    fn matrices_and_points() {
        let q = Field::rationals();
        let m = parse_matrix(r#"[["0","1/2"],["1","-1"]]"#, &q).unwrap();
        assert_eq!(m.to_string(), "[[0,1/2],[1,-1]]");
        assert!(parse_matrix(r#"[["0","1"],["1"]]"#, &q).is_err());
        assert!(parse_matrix(r#"[["0","x"],["1","2"]]"#, &q).is_err());
        assert!(parse_matrix("[[", &q).is_err());
        assert!(matches!(parse_point("-3/2", &q).unwrap(), Point::Scalar(_)));
        assert!(
            matches!(parse_point(r#"["1","2"]"#, &q).unwrap(), Point::Tuple(v) if v.len() == 2)
        );
        assert!(matches!(
            parse_point("[[1,2],[3,4]]", &q).unwrap(),
            Point::Matrix(_)
        ));
    }
}
