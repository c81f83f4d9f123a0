//! Exact algebra for deciding injectivity of polynomial evaluation maps over
//! fields and matrix algebras.

pub mod engine;
pub mod error;
pub mod fields;
pub mod matrix;
pub mod poly;

pub use engine::{Bounds, Reason, Status, Verdict, Witness};
pub use error::{Error, Result};
pub use fields::{Elem, Field, FieldElement, FieldSpec};
pub use matrix::Matrix;
pub use poly::{MultiPoly, UniPoly};
