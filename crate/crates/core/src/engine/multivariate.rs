use super::search::{finite_tuple_collision, search_tuple_collisions};
use super::{check_model, Bounds, Reason, Verdict};
use crate::error::{Error, Result};
use crate::fields::{Field, FieldSpec};
use crate::poly::MultiPoly;

/// Injectivity of `F^m -> F` for `m >= 2`. Over a finite field a collision
/// exists by counting and is found by enumeration; over R and closed fields
/// the map is never injective and a rational collision is searched for;
/// over Q only the search result is reported.
pub fn multivariate_injectivity(f: &MultiPoly, spec: &Field, bounds: &Bounds) -> Result<Verdict> {
    check_model(f.field(), spec)?;
    let m = f.nvars();
    if m < 2 {
        return Err(Error::Precondition(format!(
            "multivariate injectivity needs at least 2 variables, got {m}"
        )));
    }
    if spec.is_finite() {
        let q = spec.order().expect("finite field");
        let w = finite_tuple_collision(f, bounds.matrix_cap)?
            .expect("q^m > q points cannot have distinct images in F_q");
        return Ok(Verdict::not_injective(
            Reason::Pigeonhole,
            w,
            format!("{q}^{m} points map into {q} values; first collision in enumeration order"),
        ));
    }
    let (witness, reached) = search_tuple_collisions(f, bounds.height, bounds.matrix_cap)?;
    let (reason, claim) = match spec.spec() {
        FieldSpec::RealClosed => (
            Reason::TopologicalArgument,
            "no polynomial map R^m -> R with m >= 2 is injective",
        ),
        FieldSpec::AlgClosed => (
            Reason::ClosedFieldMultivariate,
            "no polynomial map F^m -> F with m >= 2 is injective over an algebraically closed field",
        ),
        _ => (Reason::BoundedSearchCollision, "rational collision found"),
    };
    Ok(match (witness, spec.is_rationals()) {
        (Some(w), _) => Verdict::not_injective(reason, w, format!("{claim}; rational witness")),
        (None, true) => Verdict::undecided(
            Reason::SearchExhausted(reached),
            format!("no collision on Q^{m} with coordinates of height <= {reached}"),
        ),
        (None, false) => Verdict::necessary_condition_fails(
            reason,
            format!("{claim}, but no rational collision of height <= {reached} was found"),
        ),
    })
}
