//! Joint invariants of rational vector-field families.
//!
//! The pipeline runs over canonical rational functions with integer
//! coefficients: row-reduce a family over the function field, close it under
//! Lie brackets until it commutes, then search for polynomial invariants by a
//! degree-bounded ansatz or verify a given Darboux-type closed form exactly.
//!
//! ```
//! use jointinv_core::{catalog, frobenius, invariants};
//!
//! let so3 = catalog::lookup("so3").unwrap().field_system().unwrap();
//! let echelon = frobenius::rref(&so3);
//! assert!(echelon.is_abelian());
//! let basis = invariants::polynomial_invariants(&so3, 2);
//! assert_eq!(basis.basis()[0].to_string(), "x^2+y^2+z^2");
//! ```

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod fields;
pub mod frobenius;
pub mod invariants;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod sample;

pub use algebra::{Ctx, Monomial, Polynomial, RationalFunction, VarContext};
pub use error::{Error, Result};
pub use fields::{FieldSystem, VectorField};
pub use frobenius::{Closure, ClosureStep, EchelonSystem};
pub use invariants::{DarbouxExpr, InvariantBasis};
pub use lie::StructureConstants;
