//! Exact computation of characteristic-polynomial coefficients σ^(i) in
//! cyclotomic field extensions, symbol and tensor algebras, generic matrices
//! and octonion algebras, together with finite fixed-point certificates.

pub mod algebras;
pub mod error;
pub mod expr;
pub mod groupfix;
pub mod octonion;
pub mod polymat;
pub mod report;
pub mod ring;
pub mod scalars;
pub mod symfun;

pub use error::{Error, Result};
pub use polymat::{Matrix, MultiPoly, PolyMatrix, RatFunc};
pub use report::{Format, Status, Step, VerificationReport};
pub use ring::{ExactDiv, Field, Ring};
pub use scalars::{CycloNum, Rational};
