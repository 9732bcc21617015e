use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::BigRat;

/// Commutative ring with exact (possibly failing) division, enough for
/// dense polynomial arithmetic over Z, Q and Q(v).
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + Zero + One {
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    /// `Some(q)` with `q * rhs == self`, or `None` if no such element exists.
    fn try_quo(&self, rhs: &Self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
}

pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;

    fn over(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|r| self.times(&r))
    }

    fn from_rat(r: &BigRat) -> Self;
}

impl Ring for BigInt {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn try_quo(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for BigRat {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn try_quo(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
    fn from_i64(n: i64) -> Self {
        BigRat::from_integer(BigInt::from(n))
    }
}

impl Field for BigRat {
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rat(r: &BigRat) -> Self {
        r.clone()
    }
}
