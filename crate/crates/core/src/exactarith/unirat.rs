//! The field Q(v) of univariate rational functions, used as the coefficient
//! field for partial fractions in a second variable.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::modgcd;
use super::mpoly::MPoly;
use super::ratfun::RatFun;
use super::rational::{lcm_denoms, BigRat};
use super::ring::{Field, Ring};
use super::upoly::Poly;
use crate::error::{Error, Result};

pub type QPoly = Poly<BigRat>;
pub type ZPoly1 = Poly<BigInt>;

/// Clears denominators: `p = z / den` with `den > 0`.
pub fn to_integer_poly(p: &QPoly) -> (ZPoly1, BigInt) {
    let den = lcm_denoms(p.coeffs());
    let z = p.map(|c| c.numer() * (&den / c.denom()));
    (z, den)
}

pub fn from_integer_poly(z: &ZPoly1) -> QPoly {
    z.map(|c| BigRat::from_integer(c.clone()))
}

/// Monic-free gcd over Q computed with modular arithmetic; primitive over Z
/// with positive leading coefficient.
pub fn qpoly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (za, _) = to_integer_poly(a);
    let (zb, _) = to_integer_poly(b);
    let g = modgcd::gcd_univariate(&za, &zb).unwrap_or_else(|| modgcd::prs_gcd_univariate(&za, &zb));
    from_integer_poly(&modgcd::primitive(&g))
}

/// Element of Q(v): `num/den`, coprime, with the lowest-degree nonzero
/// coefficient of `den` equal to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct UniRat {
    num: QPoly,
    den: QPoly,
}

impl UniRat {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero_value());
        }
        let g = qpoly_gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: QPoly, den: QPoly) -> Self {
        let (_, low) = den.trailing().expect("nonzero denominator");
        if low.is_one() {
            return UniRat { num, den };
        }
        let inv = low.recip();
        UniRat { num: num.scale(&inv), den: den.scale(&inv) }
    }

    fn zero_value() -> Self {
        UniRat { num: Poly::zero(), den: Poly::one() }
    }

    pub fn from_poly(p: QPoly) -> Self {
        UniRat { num: p, den: Poly::one() }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    /// Converts from a rational function whose only variable (if any) is `var`.
    pub fn from_ratfun(r: &RatFun, var: &str) -> Result<Self> {
        Ok(Self::normalized(
            mpoly_to_qpoly(r.num(), var)?,
            mpoly_to_qpoly(r.den(), var)?,
        ))
    }

    pub fn to_ratfun(&self, var: &str) -> RatFun {
        RatFun::new(qpoly_to_mpoly(&self.num, var), qpoly_to_mpoly(&self.den, var))
            .expect("nonzero denominator")
    }

    /// Power series coefficients at the origin up to `v^n` inclusive.
    pub fn series(&self, n: usize) -> Result<Vec<BigRat>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::NoSeriesExpansion);
        }
        let inv0 = d0.recip();
        let dc = self.den.coeffs();
        let mut out: Vec<BigRat> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut acc = self.num.coeff(m);
            for (k, dk) in dc.iter().enumerate().skip(1).take(m) {
                if !dk.is_zero() {
                    acc -= dk * &out[m - k];
                }
            }
            out.push(acc * &inv0);
        }
        Ok(out)
    }

}

pub fn mpoly_to_qpoly(p: &MPoly, var: &str) -> Result<QPoly> {
    if let Some(other) = p.vars().iter().find(|v| *v != var) {
        return Err(Error::UnexpectedVariable { expected: var.into(), found: other.clone() });
    }
    let deg = p.degree_in(var) as usize;
    let mut c = vec![BigRat::zero(); deg + 1];
    for (m, a) in p.terms() {
        let e = m.first().copied().unwrap_or(0) as usize;
        c[e] = a.clone();
    }
    Ok(Poly::new(c))
}

pub fn qpoly_to_mpoly(p: &QPoly, var: &str) -> MPoly {
    let vars = vec![var.to_string()];
    MPoly::from_terms(
        &vars,
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| (vec![i as u32], c.clone()))
            .collect::<Vec<_>>(),
    )
}

impl Zero for UniRat {
    fn zero() -> Self {
        Self::zero_value()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for UniRat {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl std::ops::Add for UniRat {
    type Output = UniRat;
    fn add(self, rhs: Self) -> Self {
        self.plus(&rhs)
    }
}

impl std::ops::Mul for UniRat {
    type Output = UniRat;
    fn mul(self, rhs: Self) -> Self {
        self.times(&rhs)
    }
}

impl Ring for UniRat {
    fn plus(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let g = qpoly_gcd(&self.den, &rhs.den);
        let b1 = self.den.exact_div(&g).unwrap();
        let d1 = rhs.den.exact_div(&g).unwrap();
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        Self::new(num, &self.den * &d1).unwrap()
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero_value();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        let g1 = qpoly_gcd(&self.num, &rhs.den);
        let g2 = qpoly_gcd(&rhs.num, &self.den);
        let a = self.num.exact_div(&g1).unwrap();
        let d = rhs.den.exact_div(&g1).unwrap();
        let c = rhs.num.exact_div(&g2).unwrap();
        let b = self.den.exact_div(&g2).unwrap();
        Self::normalized(&a * &c, &b * &d)
    }
    fn negate(&self) -> Self {
        UniRat { num: -&self.num, den: self.den.clone() }
    }
    fn try_quo(&self, rhs: &Self) -> Option<Self> {
        self.over(rhs)
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(BigRat::from_integer(n.into()))
    }
}

impl Field for UniRat {
    fn inverse(&self) -> Option<Self> {
        (!self.num.is_zero()).then(|| Self::normalized(self.den.clone(), self.num.clone()))
    }
    fn from_rat(r: &BigRat) -> Self {
        Self::constant(r.clone())
    }
}

impl fmt::Display for UniRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratfun("v"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::rational::{rat, ratio};

    fn q(c: &[i64]) -> QPoly {
        Poly::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn normalizes_and_reduces() {
        let r = UniRat::new(&q(&[1, -1]) * &q(&[2, 1]), (&q(&[1, -1]) * &q(&[3, 3])).scale(&rat(-1))).unwrap();
        assert_eq!(r.den(), &q(&[1, 1]));
        assert_eq!(r.num(), &q(&[2, 1]).scale(&ratio(-1, 3)));
    }

    #[test]
    fn field_axioms_on_samples() {
        let a = UniRat::new(q(&[1, 2]), q(&[1, 0, -1])).unwrap();
        let b = UniRat::new(q(&[0, 3]), q(&[1, 1, 1])).unwrap();
        assert_eq!(a.plus(&b).minus(&b), a);
        assert_eq!(a.times(&b).over(&b).unwrap(), a);
        assert!(a.times(&a.inverse().unwrap()).is_one());
    }

    #[test]
    fn geometric_series() {
        let r = UniRat::new(q(&[1]), q(&[1, -1]).pow(2)).unwrap();
        let s = r.series(5).unwrap();
        assert_eq!(s, (1..=6).map(rat).collect::<Vec<_>>());
    }
}
