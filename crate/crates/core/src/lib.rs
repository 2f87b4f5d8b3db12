//! Exact arithmetic for generalized quaternion and octonion algebras, real
//! matrix representations of complex octonions with a checker for their
//! stated identities, and certified invertible elements in split algebras.

pub mod complex;
pub mod error;
pub mod harness;
pub mod invertibles;
pub mod literal;
pub mod octonion;
pub mod matrix;
pub mod params;
pub mod quaternion;
pub mod recurrence;
pub mod reps;
pub mod scalar;
pub mod table;
pub mod zorn;

pub use complex::{ComplexOctonion, ComplexQuaternion, ProductKind};
pub use error::{AlgebraError, HarnessError, ParseError, RootError};
pub use octonion::Octonion;
pub use matrix::{RepMatrix, VecRep};
pub use params::{AlgebraKind, OctParams, QuatParams};
pub use quaternion::Quaternion;
pub use scalar::{Approx, Rational, Scalar};
pub use zorn::ZornElement;
