//! Reduced rational functions over Q in named variables.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::mpoly::MPoly;
use super::rational::BigRat;
use super::zpoly::{self, ZPoly};
use crate::error::{Error, Result};

/// `num/den` with `gcd(num, den) = 1` and the coefficient of the lex-least
/// monomial of `den` equal to 1. Under this normalization equal functions
/// have identical representations, so `==` is structural.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

/// Splits a nonzero integer polynomial into pairwise coprime pieces by
/// repeatedly taking contents with respect to each variable.
fn content_atoms(p: &ZPoly) -> Vec<ZPoly> {
    let mut atoms = vec![p.primitive()];
    for var in 0..p.nvars {
        let mut next = Vec::new();
        for a in atoms {
            if a.degree_in(var) == 0 || a.var_mask().iter().filter(|&&b| b).count() < 2 {
                next.push(a);
                continue;
            }
            let mut c = ZPoly::zero(a.nvars);
            for coeff in a.coeffs_wrt(var).values() {
                c = zpoly::gcd(&c, coeff);
                if c.is_constant() {
                    break;
                }
            }
            if c.is_constant() {
                next.push(a);
            } else {
                let c = c.primitive();
                let pp = a.exact_div(&c).expect("content divides");
                next.push(c);
                next.push(pp);
            }
        }
        atoms = next;
    }
    atoms.retain(|a| !a.is_constant());
    atoms
}

impl RatFun {
    /// Reduces `num/den` to canonical form.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den, None))
    }

    /// Cancels common factors. With `hint`, only factors of the hint are
    /// tried; the caller guarantees every common factor of `num` and `den`
    /// divides it.
    fn reduce(num: MPoly, den: MPoly, hint: Option<&MPoly>) -> Self {
        if num.is_zero() {
            return RatFun { num, den: MPoly::one() };
        }
        if den.is_constant() {
            return RatFun { num: num.scale(&den.constant_term().recip()), den: MPoly::one() };
        }
        let mut vars: Vec<String> = num.vars().iter().chain(den.vars()).cloned().collect();
        vars.sort();
        vars.dedup();
        let (mut zn, dn) = num.to_zpoly(&vars);
        let (mut zd, dd) = den.to_zpoly(&vars);
        let source = match hint {
            Some(h) => h.to_zpoly(&vars).0,
            None => zd.clone(),
        };
        if !source.is_constant() {
            for atom in content_atoms(&source) {
                let g = zpoly::gcd(&zn, &atom).primitive();
                if !g.is_constant() {
                    zn = zn.exact_div(&g).expect("gcd divides numerator");
                    zd = zd.exact_div(&g).expect("gcd divides denominator");
                }
            }
        }
        // num/den = (zn/dn) / (zd/dd)
        let num = MPoly::from_zpoly(&vars, &zn, &BigInt::one());
        let den = MPoly::from_zpoly(&vars, &zd, &BigInt::one());
        let scale = BigRat::new(dd, dn);
        Self::normalized(num.scale(&scale), den)
    }

    /// Reduces `num/den` when every common factor is known to divide some
    /// product of the given pieces (with repetition).
    pub fn new_with_factors(num: MPoly, den: MPoly, pieces: &[MPoly]) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_constant() {
            return Ok(Self::from_poly(num.scale(&den.constant_term().recip())));
        }
        let mut vars: Vec<String> = num.vars().iter().chain(den.vars()).cloned().collect();
        vars.sort();
        vars.dedup();
        let (mut zn, dn) = num.to_zpoly(&vars);
        let (mut zd, dd) = den.to_zpoly(&vars);
        for piece in pieces {
            // The remaining part of each atom always divides `zd`.
            for mut atom in content_atoms(&piece.to_zpoly(&vars).0) {
                loop {
                    let g = zpoly::gcd(&zn, &atom).primitive();
                    if g.is_constant() {
                        break;
                    }
                    zn = zn.exact_div(&g).expect("gcd divides numerator");
                    zd = zd.exact_div(&g).expect("atom divides denominator");
                    atom = atom.exact_div(&g).expect("gcd divides atom");
                }
            }
        }
        let num = MPoly::from_zpoly(&vars, &zn, &BigInt::one());
        let den = MPoly::from_zpoly(&vars, &zd, &BigInt::one());
        Ok(Self::normalized(num.scale(&BigRat::new(dd, dn)), den))
    }

    fn normalized(num: MPoly, den: MPoly) -> Self {
        let lead = den.terms().values().next().cloned().expect("nonzero denominator");
        if lead.is_one() {
            return RatFun { num, den };
        }
        let inv = lead.recip();
        RatFun { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: MPoly) -> Self {
        RatFun { num: p, den: MPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(MPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MPoly::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(MPoly::constant(c))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(MPoly::var(name))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MPoly, MPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn vars(&self) -> Vec<String> {
        let mut v: Vec<String> = self.num.vars().iter().chain(self.den.vars()).cloned().collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            return Self::reduce(num, self.den.clone(), Some(&self.den));
        }
        let g = self.den.gcd(&rhs.den);
        let b1 = self.den.exact_div(&g).expect("gcd divides");
        let d1 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = self.num.mul(&d1).add(&rhs.num.mul(&b1));
        let den = self.den.mul(&d1);
        Self::reduce(num, den, Some(&g))
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.exact_div(&g1).expect("gcd divides");
        let d = rhs.den.exact_div(&g1).expect("gcd divides");
        let c = rhs.num.exact_div(&g2).expect("gcd divides");
        let b = self.den.exact_div(&g2).expect("gcd divides");
        Self::normalized(a.mul(&c), b.mul(&d))
    }

    pub fn mul_poly(&self, p: &MPoly) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, n: u32) -> Self {
        Self::normalized(self.num.pow(n), self.den.pow(n))
    }

    /// Substitutes polynomials for variables (simultaneously).
    pub fn substitute_poly(&self, subs: &[(&str, &MPoly)]) -> Result<Self> {
        Self::new(self.num.substitute_all(subs), self.den.substitute_all(subs))
    }

    /// Substitutes a rational function for one variable.
    pub fn substitute(&self, name: &str, by: &RatFun) -> Result<Self> {
        let n1 = self.num.degree_in(name);
        let n2 = self.den.degree_in(name);
        let n = n1.max(n2);
        // p(a/b) * b^n as a polynomial
        let homogenize = |p: &MPoly| -> MPoly {
            let mut acc = MPoly::zero();
            let mut a_pow = MPoly::one();
            let coeffs = p.coeffs_in(name);
            for k in 0..=n {
                if let Some(c) = coeffs.get(&k) {
                    acc = acc.add(&c.mul(&a_pow).mul(&by.den.pow(n - k)));
                }
                a_pow = a_pow.mul(&by.num);
            }
            acc
        };
        Self::new(homogenize(&self.num), homogenize(&self.den))
    }

    pub fn rename(&self, from: &str, to: &str) -> Self {
        let v = MPoly::var(to);
        Self::normalized(self.num.substitute(from, &v), self.den.substitute(from, &v))
    }

    /// Cross-multiplication test; agrees with `==` on canonical values and
    /// is independent of normalization.
    pub fn equals_by_cross_product(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl From<MPoly> for RatFun {
    fn from(p: MPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}
