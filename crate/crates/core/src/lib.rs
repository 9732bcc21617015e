//! Schur multiplicity series of rational symmetric functions in two
//! variables, and the pure and mixed trace algebras of two generic 4x4
//! matrices as the worked example.

pub mod error;
pub mod exactarith;
pub mod expr;
pub mod multsolver;
pub mod par;
pub mod symfunc;
pub mod trace44;

pub use error::{Error, Result};
