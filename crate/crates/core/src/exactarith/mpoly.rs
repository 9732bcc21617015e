//! Sparse multivariate polynomials over Q in named variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{lcm_denoms, parse_rat, rat_to_string, BigRat};
use super::zpoly::{self, ZPoly};
use crate::error::{Error, Result};

/// Polynomial over Q. Variables are kept sorted by name and every listed
/// variable occurs in some term, so equal polynomials compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigRat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { vars: Vec::new(), terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(BigRat::from_integer(n.into()))
    }

    pub fn var(name: &str) -> Self {
        MPoly {
            vars: vec![name.to_string()],
            terms: BTreeMap::from([(vec![1], BigRat::one())]),
        }
    }

    /// `c * prod vars[i]^exps[i]`.
    pub fn monomial(c: BigRat, powers: &[(&str, u32)]) -> Self {
        let mut p = Self::constant(c);
        for &(v, e) in powers {
            p = p.mul(&Self::var(v).pow(e));
        }
        p
    }

    /// Builds from explicit terms; zero coefficients are dropped and the
    /// variable list is canonicalized.
    pub fn from_terms(
        vars: &[String],
        terms: impl IntoIterator<Item = (Vec<u32>, BigRat)>,
    ) -> Self {
        let mut acc: BTreeMap<Vec<u32>, BigRat> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "exponent vector length");
            *acc.entry(m).or_insert_with(BigRat::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Self::canonical(vars.to_vec(), acc)
    }

    fn canonical(vars: Vec<String>, terms: BTreeMap<Vec<u32>, BigRat>) -> Self {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&a, &b| vars[a].cmp(&vars[b]));
        let used: Vec<usize> = order
            .into_iter()
            .filter(|&i| terms.keys().any(|m| m[i] > 0))
            .collect();
        let sorted_and_trimmed = used.len() == vars.len() && used.iter().enumerate().all(|(k, &i)| k == i);
        if sorted_and_trimmed {
            return MPoly { vars, terms };
        }
        let new_vars = used.iter().map(|&i| vars[i].clone()).collect();
        let mut new_terms = BTreeMap::new();
        for (m, c) in terms {
            let nm: Vec<u32> = used.iter().map(|&i| m[i]).collect();
            *new_terms.entry(nm).or_insert_with(BigRat::zero) += c;
        }
        MPoly { vars: new_vars, terms: new_terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRat> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    pub fn constant_term(&self) -> BigRat {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(BigRat::zero)
    }

    pub fn has_var(&self, name: &str) -> bool {
        self.vars.iter().any(|v| v == name)
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.var_index(name) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m[i]).max().unwrap_or(0),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    /// Exponent of `name` in monomial `m` of this polynomial.
    pub fn exponent(&self, m: &[u32], name: &str) -> u32 {
        self.var_index(name).map_or(0, |i| m[i])
    }

    /// Coefficient of the monomial given by `(variable, exponent)` pairs.
    pub fn coeff(&self, powers: &[(&str, u32)]) -> BigRat {
        let mut m = vec![0; self.vars.len()];
        for &(v, e) in powers {
            match self.var_index(v) {
                Some(i) => m[i] = e,
                None if e == 0 => {}
                None => return BigRat::zero(),
            }
        }
        self.terms.get(&m).cloned().unwrap_or_else(BigRat::zero)
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut v: Vec<String> = self.vars.iter().chain(&other.vars).cloned().collect();
        v.sort();
        v.dedup();
        v
    }

    /// Exponent vectors re-expressed over a superset `vars` of this polynomial's variables.
    fn embed(&self, vars: &[String]) -> BTreeMap<Vec<u32>, BigRat> {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut nm = vec![0; vars.len()];
                for (k, &i) in idx.iter().enumerate() {
                    nm[i] = m[k];
                }
                (nm, c.clone())
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let vars = self.union_vars(rhs);
        let mut acc = self.embed(&vars);
        for (m, c) in rhs.embed(&vars) {
            let e = acc.entry(m).or_insert_with(BigRat::zero);
            *e += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Self::canonical(vars, acc)
    }

    pub fn neg(&self) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_constant() {
            return rhs.scale(&self.constant_term());
        }
        if rhs.is_constant() {
            return self.scale(&rhs.constant_term());
        }
        let vars = self.union_vars(rhs);
        let (za, da) = self.to_zpoly(&vars);
        let (zb, db) = rhs.to_zpoly(&vars);
        Self::from_zpoly(&vars, &za.mul(&zb), &(da * db))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient; errors if `d` leaves a nonzero remainder.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d.is_constant() {
            return Ok(self.scale(&d.constant_term().recip()));
        }
        let vars = self.union_vars(d);
        let (za, da) = self.to_zpoly(&vars);
        let (zd, dd) = d.to_zpoly(&vars);
        // self/d = (za/da)/(zd/dd) = (za * dd)/(zd * da); dividing by the
        // primitive part keeps the integer division exact.
        let cd = zd.content();
        let zd_prim = zd.div_int(&cd);
        let q = za.exact_div(&zd_prim).ok_or(Error::NotDivisible)?;
        Ok(Self::from_zpoly(&vars, &q.scale(&dd), &(da * cd)))
    }

    /// Substitutes each listed variable by a polynomial.
    pub fn substitute_all(&self, subs: &[(&str, &MPoly)]) -> Self {
        let mut cache: Vec<Vec<MPoly>> = vec![Vec::new(); self.vars.len()];
        let map: Vec<Option<&MPoly>> = self
            .vars
            .iter()
            .map(|v| subs.iter().find(|(n, _)| n == v).map(|(_, p)| *p))
            .collect();
        let mut acc: BTreeMap<Vec<u32>, BigRat> = BTreeMap::new();
        let mut out_vars: Vec<String> = Vec::new();
        for (i, v) in self.vars.iter().enumerate() {
            match map[i] {
                Some(p) => out_vars.extend(p.vars.iter().cloned()),
                None => out_vars.push(v.clone()),
            }
        }
        out_vars.sort();
        out_vars.dedup();
        let mut pending: Vec<MPoly> = Vec::new();
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = match map[i] {
                    Some(p) => {
                        let cache_i = &mut cache[i];
                        while cache_i.len() <= e as usize {
                            let next = match cache_i.last() {
                                None => MPoly::one(),
                                Some(last) => last.mul(p),
                            };
                            cache_i.push(next);
                        }
                        cache_i[e as usize].clone()
                    }
                    None => MPoly::var(&self.vars[i]).pow(e),
                };
                term = term.mul(&factor);
            }
            pending.push(term);
        }
        for t in pending {
            for (m, c) in t.embed(&out_vars) {
                *acc.entry(m).or_insert_with(BigRat::zero) += c;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self::canonical(out_vars, acc)
    }

    pub fn substitute(&self, name: &str, by: &MPoly) -> Self {
        self.substitute_all(&[(name, by)])
    }

    pub fn rename(&self, from: &str, to: &str) -> Self {
        self.substitute(from, &MPoly::var(to))
    }

    pub fn eval(&self, name: &str, value: &BigRat) -> Self {
        self.substitute(name, &MPoly::constant(value.clone()))
    }

    /// Coefficients with respect to `name`, as polynomials in the other variables.
    pub fn coeffs_in(&self, name: &str) -> BTreeMap<u32, MPoly> {
        let Some(i) = self.var_index(name) else {
            return BTreeMap::from([(0, self.clone())]);
        };
        let mut groups: BTreeMap<u32, Vec<(Vec<u32>, BigRat)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            nm[i] = 0;
            groups.entry(m[i]).or_default().push((nm, c.clone()));
        }
        groups
            .into_iter()
            .map(|(e, ts)| (e, Self::from_terms(&self.vars, ts)))
            .collect()
    }

    /// Partial derivative with respect to `name`.
    pub fn derivative(&self, name: &str) -> Self {
        let Some(i) = self.var_index(name) else {
            return Self::zero();
        };
        let terms = self.terms.iter().filter(|(m, _)| m[i] > 0).map(|(m, c)| {
            let mut nm = m.clone();
            nm[i] -= 1;
            (nm, c * BigRat::from_integer(m[i].into()))
        });
        Self::from_terms(&self.vars, terms.collect::<Vec<_>>())
    }

    /// `(integer polynomial, positive denominator)` with `self = z / den`,
    /// over the given variable list (a superset of `self.vars`).
    pub(crate) fn to_zpoly(&self, vars: &[String]) -> (ZPoly, BigInt) {
        let den = lcm_denoms(self.terms.values());
        let mut z = ZPoly::zero(vars.len());
        for (m, c) in self.embed(vars) {
            z.terms.insert(m, c.numer() * (&den / c.denom()));
        }
        (z, den)
    }

    pub(crate) fn from_zpoly(vars: &[String], z: &ZPoly, den: &BigInt) -> Self {
        let terms = z
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), BigRat::new(c.clone(), den.clone())))
            .collect();
        Self::canonical(vars.to_vec(), terms)
    }

    /// Gcd over Q, normalized to a primitive integer polynomial with positive
    /// lex-leading coefficient (1 if the inputs are coprime).
    pub fn gcd(&self, other: &Self) -> Self {
        let vars = self.union_vars(other);
        let (za, _) = self.to_zpoly(&vars);
        let (zb, _) = other.to_zpoly(&vars);
        let g = zpoly::gcd(&za, &zb).primitive();
        if g.is_zero() {
            return Self::zero();
        }
        Self::from_zpoly(&vars, &g, &BigInt::one())
    }

    /// Squarefree chain `s_1, s_2, ...` with `self = c * s_1 * s_2 * ...`,
    /// where each `s_i` is squarefree and `s_{i+1}` divides `s_i`.
    pub fn squarefree_chain(&self) -> Vec<MPoly> {
        let mut out = Vec::new();
        let mut a = self.clone();
        while !a.is_constant() {
            let mut g = a.clone();
            for v in a.vars.clone() {
                g = g.gcd(&a.derivative(&v));
                if g.is_constant() {
                    break;
                }
            }
            let s = a.exact_div(&g).expect("gcd divides");
            out.push(s);
            a = g;
        }
        out
    }

    /// Terms in display order: ascending total degree, then by exponents.
    fn display_terms(&self) -> Vec<(&Vec<u32>, &BigRat)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| b.0.cmp(a.0))
        });
        ts
    }
}

impl fmt::Display for MPoly {
    /// Output is accepted by the expression parser; a negative leading
    /// coefficient in front of a power is written `-1*x^2` because unary
    /// minus binds tighter than `^`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.display_terms().into_iter().enumerate() {
            let factors: Vec<(String, u32)> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let s = if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    };
                    (s, e)
                })
                .collect();
            let mono = factors.iter().map(|(s, _)| s.as_str()).collect::<Vec<_>>().join("*");
            let neg = c.is_negative();
            let a = c.abs();
            let body = if mono.is_empty() {
                rat_to_string(&a)
            } else if a.is_one() {
                mono.clone()
            } else {
                format!("{}*{}", rat_to_string(&a), mono)
            };
            if k == 0 {
                if neg {
                    let first_exp = factors.first().map_or(1, |(_, e)| *e);
                    if a.is_one() && !mono.is_empty() && first_exp > 1 {
                        write!(f, "-1*{mono}")?;
                    } else {
                        write!(f, "-{body}")?;
                    }
                } else {
                    write!(f, "{body}")?;
                }
            } else {
                write!(f, " {} {body}", if neg { "-" } else { "+" })?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct MPolyJson {
    variables: Vec<String>,
    terms: Vec<TermJson>,
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MPolyJson {
            variables: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { exponents: m.clone(), coeff: rat_to_string(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = MPolyJson::deserialize(d)?;
        let mut terms = Vec::new();
        for t in j.terms {
            if t.exponents.len() != j.variables.len() {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            terms.push((t.exponents, parse_rat(&t.coeff).map_err(D::Error::custom)?));
        }
        Ok(MPoly::from_terms(&j.variables, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::rational::{rat, ratio};

    fn x() -> MPoly {
        MPoly::var("x")
    }
    fn y() -> MPoly {
        MPoly::var("y")
    }

    #[test]
    fn difference_of_squares() {
        let v = MPoly::var("v");
        let a = MPoly::one().sub(&v);
        let b = MPoly::one().add(&v);
        assert_eq!(a.mul(&b), MPoly::one().sub(&v.pow(2)));
    }

    #[test]
    fn substitution_of_product() {
        // x*y with y <- z/x is represented by clearing x: (x*y)(x, z/x) = z.
        let xy = x().mul(&y());
        let sub = xy.substitute_all(&[("x", &MPoly::var("a")), ("y", &MPoly::var("b"))]);
        assert_eq!(sub, MPoly::var("a").mul(&MPoly::var("b")));
    }

    #[test]
    fn canonical_trims_cancelled_variables() {
        let p = x().add(&y()).sub(&y());
        assert_eq!(p.vars(), &["x".to_string()]);
        assert_eq!(p, x());
    }

    #[test]
    fn exact_div_and_failure() {
        let a = x().pow(2).sub(&y().pow(2)).scale(&ratio(3, 2));
        let d = x().sub(&y()).scale(&rat(4));
        assert_eq!(a.exact_div(&d).unwrap(), x().add(&y()).scale(&ratio(3, 8)));
        assert_eq!(a.exact_div(&x().add(&MPoly::one())), Err(Error::NotDivisible));
    }

    #[test]
    fn gcd_over_q() {
        let c = MPoly::one().sub(&x().mul(&y()));
        let a = c.mul(&x().add(&MPoly::int(2))).scale(&ratio(1, 3));
        let b = c.mul(&y().sub(&MPoly::int(5)));
        assert_eq!(a.gcd(&b), c.neg());
    }

    #[test]
    fn display_is_parser_friendly() {
        let p = MPoly::one().sub(&x().pow(2)).neg();
        assert_eq!(p.to_string(), "-1 + x^2");
        let q = x().pow(2).neg().add(&y().scale(&ratio(3, 4)));
        assert_eq!(q.to_string(), "3/4*y - x^2");
        assert_eq!(x().pow(2).neg().to_string(), "-1*x^2");
    }

    #[test]
    fn json_round_trip() {
        let p = x().pow(3).scale(&ratio(-5, 7)).add(&y());
        let s = serde_json::to_string(&p).unwrap();
        let back: MPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, back);
    }
}
