//! Parametric orthogonal polynomial families (generalized Laguerre,
//! Gegenbauer and its modified and reduced forms, Charlier) as exact
//! bivariate polynomials, with certified tools for checking real-rootedness,
//! interlacing and root monotonicity in both the variable and the parameter.

pub mod error;
pub mod families;
pub mod identities;
pub mod polycore;
pub mod rootlab;
pub mod trajectory;
pub mod veritas;

pub use error::{Error, Result};
pub use polycore::{BiPoly, Rational, UniPoly, Var};
