//! Exact arithmetic: rationals, polynomials, rational functions, gcd and
//! partial fractions.

pub mod linsolve;
pub(crate) mod modgcd;
pub mod mpoly;
pub mod pfd;
pub mod ratfun;
pub mod rational;
pub mod ring;
pub mod unirat;
pub mod upoly;
pub(crate) mod zpoly;

pub use mpoly::MPoly;
pub use pfd::{partial_fractions, residue_coefficient, FactorBasis, PartialFractionForm, PfTerm, TPoly};
pub use ratfun::RatFun;
pub use rational::BigRat;
pub use unirat::UniRat;
pub use upoly::Poly;
