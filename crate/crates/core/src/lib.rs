//! Exact computations with Lie algebras carrying cyclic (metric) bilinear
//! forms over the rationals.

pub mod algebra;
pub mod catalog;
pub mod constructions;
pub mod forms;
pub mod linalg;
pub mod rep;
pub mod subspace;

pub use algebra::{LieAlgebra, LieError, ValidationReport, Violation};
pub use constructions::{Cocycle2, ConstructionError, MetricAlgebra};
pub use forms::{BilinearForm, FormError};
pub use linalg::{Matrix, Rational, Signature};
pub use rep::{Quadruple, Representation};
pub use subspace::Subspace;
