//! Canonical text form shared by univariate and multivariate polynomials.
//!
//! Terms are joined with `+`/`-` and no whitespace; a coefficient other than
//! 1 is written before the monomial with `*`, extension-field coefficients
//! with more than one term are parenthesised, e.g. `(a+1)*x^2+3/4*x-1`.

use super::UniPoly;
use crate::fields::{Elem, Field};

/// Printing order of terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TermOrder {
    #[default]
    Descending,
    Ascending,
}

pub(crate) fn format_uni(p: &UniPoly, order: TermOrder, var: &str) -> String {
    let mut terms: Vec<(&Elem, String)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !p.field().is_zero(c))
        .map(|(i, c)| {
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            (c, mono)
        })
        .collect();
    if order == TermOrder::Descending {
        terms.reverse();
    }
    join_terms(p.field(), &terms)
}

/// Joins `(coefficient, monomial)` pairs; an empty monomial is a constant.
pub(crate) fn join_terms(field: &Field, terms: &[(&Elem, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let single = terms.len() == 1;
    let mut out = String::new();
    for (k, (c, mono)) in terms.iter().enumerate() {
        let text = term_text(field, c, mono, single);
        if k > 0 && !text.starts_with('-') {
            out.push('+');
        }
        out.push_str(&text);
    }
    out
}

fn term_text(field: &Field, c: &Elem, mono: &str, single: bool) -> String {
    let coeff = field.format_elem(c);
    let wrapped = if field.is_compound(c) && !(single && mono.is_empty()) {
        format!("({coeff})")
    } else {
        coeff
    };
    if mono.is_empty() {
        return wrapped;
    }
    if field.is_one(c) {
        mono.to_string()
    } else if field.is_negative(c) && field.is_one(&field.neg(c)) {
        format!("-{mono}")
    } else {
        format!("{wrapped}*{mono}")
    }
}
