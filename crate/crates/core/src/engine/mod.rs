//! Decision procedures for injectivity of evaluation maps, together with the
//! brute-force and bounded-search oracles used to cross-check them.
//!
//! Every `NotInjective` verdict carries a [`Witness`], and witnesses can only
//! be built by [`verify_witness`], which re-evaluates both sides exactly.

mod matrix_case;
mod multivariate;
mod scalar;
mod search;
mod verify;

pub use matrix_case::{
    bezout_noncollision_certificate, matrix_injectivity, BezoutCertificate, Cofactor,
};
pub use multivariate::multivariate_injectivity;
pub use scalar::{
    permutation_check, repeated_root_witness, scalar_injectivity, simple_roots_condition,
    PermutationCheck, SimpleRootsReport,
};
pub use search::{
    brute_force_matrix, brute_force_scalar, brute_force_zero_fiber, rationals_up_to_height,
    search_matrix_collisions, search_rational_collisions, search_tuple_collisions,
};
pub use verify::{verify_witness, Point, PolyRef, Witness};

use std::fmt;

use crate::error::Result;
use crate::fields::Field;

/// Overall outcome of a decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Injective,
    NotInjective,
    NecessaryConditionFails,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Injective => "Injective",
            Status::NotInjective => "NotInjective",
            Status::NecessaryConditionFails => "NecessaryConditionFails",
            Status::Undecided => "Undecided",
        }
    }

    /// Process exit code: 0 injective, 1 not injective, 2 otherwise.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Injective => 0,
            Status::NotInjective => 1,
            Status::NecessaryConditionFails | Status::Undecided => 2,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which argument produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    /// `f = a x + b` with `a != 0`.
    DegreeOne,
    /// A constant polynomial identifies every pair of inputs.
    ConstantMap,
    /// `f - f(b)` has a double root, witnessed by `b I + N` against `b I`.
    RepeatedRootWitness,
    /// Two distinct inputs in a computable subfield with the same image.
    DistinctRootsWitness,
    /// Clause `m >= 2` of the matrix theorem.
    NilpotentWitness,
    /// Clause `m = 1, n >= d` of the matrix theorem.
    CompanionWitness,
    /// Clause `m = 1, n < d`: no nonzero matrix collides with 0.
    OpenCaseBelowD,
    /// Hermite's criterion over a finite field.
    PermutationPolynomial,
    /// Collision found by enumerating a finite field.
    FiniteCollision,
    /// `x -> f(x)` is strictly monotone on R.
    StrictlyMonotone,
    /// `f` is not monotone on R.
    NotMonotone,
    /// Multivariate map on a finite field, by counting.
    Pigeonhole,
    /// Multivariate map on R, by connectedness.
    TopologicalArgument,
    /// Multivariate map over an algebraically closed field.
    ClosedFieldMultivariate,
    /// Collision found by a bounded rational search.
    BoundedSearchCollision,
    /// The theorem applies but its witnesses are not in Q.
    RootsOutsideComputableField,
    /// Characteristic `p` with `f' = 0`.
    CharPDegenerate,
    /// Bounded search found nothing up to the given height.
    SearchExhausted(u64),
    /// Brute-force oracle: the image has full cardinality.
    ExhaustiveInjective,
    /// Brute-force oracle: first collision in enumeration order.
    ExhaustiveCollision,
    /// `f'` has no root in the field, so every `f - lambda` has simple roots.
    SimpleRootsHold,
    /// A caller-supplied pair passed verification.
    SuppliedWitness,
    /// A caller-supplied pair failed verification.
    WitnessRejected,
}

impl Reason {
    /// Stable tag used in reports, e.g. `SearchExhausted(20)`.
    pub fn tag(self) -> String {
        match self {
            Reason::SearchExhausted(h) => format!("SearchExhausted({h})"),
            other => format!("{other:?}"),
        }
    }

    /// The theorem or criterion the reason belongs to.
    pub fn clause(self) -> &'static str {
        match self {
            Reason::DegreeOne => "affine-criterion",
            Reason::ConstantMap => "constant-map",
            Reason::RepeatedRootWitness => "simple-roots-condition",
            Reason::CharPDegenerate => "simple-roots-condition/char-p",
            Reason::DistinctRootsWitness | Reason::RootsOutsideComputableField => {
                "closed-field-degree-criterion"
            }
            Reason::NilpotentWitness => "matrix-theorem/nilpotent",
            Reason::CompanionWitness => "matrix-theorem/companion",
            Reason::OpenCaseBelowD => "matrix-theorem/below-d",
            Reason::PermutationPolynomial | Reason::FiniteCollision => "hermite-criterion",
            Reason::StrictlyMonotone | Reason::NotMonotone => "real-monotonicity",
            Reason::Pigeonhole => "multivariate/pigeonhole",
            Reason::TopologicalArgument => "multivariate/real",
            Reason::ClosedFieldMultivariate => "multivariate/closed-field",
            Reason::BoundedSearchCollision | Reason::SearchExhausted(_) => "bounded-search",
            Reason::ExhaustiveInjective | Reason::ExhaustiveCollision => "exhaustive-oracle",
            Reason::SimpleRootsHold => "simple-roots-condition",
            Reason::SuppliedWitness | Reason::WitnessRejected => "witness-verification",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

/// Result of a decision procedure. A `NotInjective` verdict always holds a
/// verified witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    status: Status,
    reason: Reason,
    detail: String,
    witness: Option<Witness>,
}

impl Verdict {
    pub fn injective(reason: Reason, detail: impl Into<String>) -> Self {
        Self::without_witness(Status::Injective, reason, detail)
    }

    pub fn not_injective(reason: Reason, witness: Witness, detail: impl Into<String>) -> Self {
        Verdict {
            status: Status::NotInjective,
            reason,
            detail: detail.into(),
            witness: Some(witness),
        }
    }

    pub fn necessary_condition_fails(reason: Reason, detail: impl Into<String>) -> Self {
        Self::without_witness(Status::NecessaryConditionFails, reason, detail)
    }

    pub fn undecided(reason: Reason, detail: impl Into<String>) -> Self {
        Self::without_witness(Status::Undecided, reason, detail)
    }

    fn without_witness(status: Status, reason: Reason, detail: impl Into<String>) -> Self {
        Verdict {
            status,
            reason,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn reason(&self) -> Reason {
        self.reason
    }

    pub fn detail(&self) -> &str {
        &self.detail
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn clause(&self) -> &'static str {
        self.reason.clause()
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

/// Resource limits and the seed for randomized internals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Maximum height `max(|num|, den)` in rational searches.
    pub height: u64,
    /// Largest field order checked by exhaustive scalar enumeration.
    pub scalar_cap: u64,
    /// Largest number of points enumerated by matrix and tuple searches.
    pub matrix_cap: u64,
    pub seed: u64,
}

pub const DEFAULT_HEIGHT: u64 = 20;
pub const DEFAULT_SCALAR_CAP: u64 = 49;
pub const DEFAULT_MATRIX_CAP: u64 = 1_000_000;

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            height: DEFAULT_HEIGHT,
            scalar_cap: DEFAULT_SCALAR_CAP,
            matrix_cap: DEFAULT_MATRIX_CAP,
            seed: crate::poly::DEFAULT_SEED,
        }
    }
}

/// The coefficient field of `f` must be `spec`, or Q when `spec` is one of
/// the closed-field tags.
pub(crate) fn check_model(coeffs: &Field, spec: &Field) -> Result<()> {
    if spec.is_tag() {
        Field::rationals().ensure_same(coeffs)
    } else {
        spec.ensure_same(coeffs)
    }
}
