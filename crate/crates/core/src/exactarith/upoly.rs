//! Dense univariate polynomials over any [`Ring`].

use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{Field, Ring};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `X^i`.
/// Trailing zeros are never stored, so the zero polynomial is an empty vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^d`
    pub fn monomial(c: R, d: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `a + b X`
    pub fn linear(a: R, b: R) -> Self {
        Self::new(vec![a, b])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Lowest-degree nonzero coefficient and its degree.
    pub fn trailing(&self) -> Option<(usize, &R)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.times(x).plus(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times(&R::from_i64(i as i64)))
                .collect(),
        )
    }

    /// Coefficients reversed relative to degree `n`: `X^n p(1/X)`; requires `n >= deg`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut c = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[n - i] = a.clone();
        }
        Self::new(c)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Exact quotient when `d` divides `self`; works over integral domains
    /// as long as every leading-coefficient division is exact.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let dl = d.lead()?;
        let dd = d.coeffs.len() - 1;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut q = vec![R::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let c = top.try_quo(dl)?;
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    rem[k + j] = rem[k + j].minus(&c.times(dj));
                }
            }
            q[k] = c;
        }
        rem.iter().all(|c| c.is_zero()).then(|| Self::new(q))
    }

    pub fn fmt_with(&self, var: &str, coeff: impl Fn(&R) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = coeff(c);
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            parts.push(match (i, cs.as_str()) {
                (0, _) => cs,
                (_, "1") => mono,
                _ => format!("{cs}*{mono}"),
            });
        }
        parts.join(" + ")
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dl = d.lead().expect("division by the zero polynomial");
        let inv = dl.inverse().expect("nonzero field element is invertible");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dd;
        let mut q = vec![F::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let c = top.times(&inv);
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    rem[k + j] = rem[k + j].minus(&c.times(dj));
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Self::new(q), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inverse().expect("nonzero lead")),
        }
    }

    /// Monic gcd by the Euclidean algorithm. Only suitable where coefficient
    /// growth is harmless (small inputs, or fields with cheap arithmetic).
    pub fn euclid_gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.plus(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => R::zero(),
                })
                .collect(),
        )
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a.minus(b),
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.negate(),
                    (None, None) => R::zero(),
                })
                .collect(),
        )
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::new(self.coeffs.iter().map(|c| c.negate()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::rational::{rat, BigRat};
    use num_bigint::BigInt;

    fn q(c: &[i64]) -> Poly<BigRat> {
        Poly::new(c.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn difference_of_squares() {
        let a = q(&[1, -1]);
        let b = q(&[1, 1]);
        assert_eq!(&a * &b, q(&[1, 0, -1]));
    }

    #[test]
    fn divrem_reconstructs() {
        let a = q(&[3, 0, 5, 1, -2]);
        let d = q(&[1, 2, 1]);
        let (qq, r) = a.divrem(&d);
        assert!(r.deg() < d.deg());
        assert_eq!(&(&qq * &d) + &r, a);
    }

    #[test]
    fn exact_div_over_integers() {
        let a: Poly<BigInt> = Poly::new(vec![1.into(), 0.into(), (-1).into()]);
        let d: Poly<BigInt> = Poly::new(vec![1.into(), 1.into()]);
        assert_eq!(a.exact_div(&d), Some(Poly::new(vec![1.into(), (-1).into()])));
        let e: Poly<BigInt> = Poly::new(vec![1.into(), 2.into()]);
        assert_eq!(a.exact_div(&e), None);
    }

    #[test]
    fn euclid_gcd_of_shared_factors() {
        let a = &q(&[1, -1]).pow(2) * &q(&[1, 1]);
        let b = &q(&[1, -1]) * &q(&[1, 1]).pow(2);
        assert_eq!(a.euclid_gcd(&b), q(&[-1, 0, 1]));
        assert!(q(&[1, 1, 1]).euclid_gcd(&q(&[1, 1])).is_one());
    }

    #[test]
    fn reversal_and_derivative() {
        let a = q(&[1, 2, 3]);
        assert_eq!(a.reversed(3), q(&[0, 3, 2, 1]));
        assert_eq!(a.derivative(), q(&[2, 6]));
        assert_eq!(a.eval(&rat(2)), rat(17));
    }
}
