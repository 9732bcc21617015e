//! Sparse multivariate polynomials over Z, used internally for gcd and
//! for the heavy products behind `MPoly` and `RatFun`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modgcd;
use super::upoly::Poly;

pub(crate) type Mono = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Mono, BigInt>,
}

impl ZPoly {
    pub fn zero(nvars: usize) -> Self {
        ZPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> BigInt {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_default()
    }

    fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        ZPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut acc: std::collections::HashMap<Mono, BigInt> = std::collections::HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m: Mono = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                *acc.entry(m).or_default() += ca * cb;
            }
        }
        ZPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        ZPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn div_int(&self, c: &BigInt) -> Self {
        ZPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a / c)).collect(),
        }
    }

    /// Leading coefficient in lex order (variable 0 most significant).
    pub fn lc(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides by the integer content and fixes the sign so the lex-leading
    /// coefficient is positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().unwrap().is_negative() {
            c = -c;
        }
        self.div_int(&c)
    }

    pub fn normalized_sign(&self) -> Self {
        match self.lc() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn max_norm(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    pub fn var_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    mask[i] = true;
                }
            }
        }
        mask
    }

    /// Substitutes the integer `x` for variable `var`.
    pub fn eval_var(&self, var: usize, x: &BigInt) -> Self {
        let deg = self.degree_in(var) as usize;
        let mut pows = Vec::with_capacity(deg + 1);
        pows.push(BigInt::one());
        for i in 0..deg {
            let next = &pows[i] * x;
            pows.push(next);
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2[var] as usize;
            m2[var] = 0;
            out.add_term(m2, c * &pows[e]);
        }
        out
    }

    /// Coefficients with respect to `var` (as polynomials with that variable zeroed).
    pub fn coeffs_wrt(&self, var: usize) -> BTreeMap<u32, ZPoly> {
        let mut out: BTreeMap<u32, ZPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2[var];
            m2[var] = 0;
            out.entry(e)
                .or_insert_with(|| ZPoly::zero(self.nvars))
                .terms
                .insert(m2, c.clone());
        }
        out
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, var: usize, k: u32) -> Self {
        ZPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m2 = m.clone();
                    m2[var] += k;
                    (m2, c.clone())
                })
                .collect(),
        }
    }

    pub fn to_univariate(&self, var: usize) -> Poly<BigInt> {
        let deg = self.degree_in(var) as usize;
        let mut c = vec![BigInt::zero(); deg + 1];
        for (m, a) in &self.terms {
            c[m[var] as usize] = a.clone();
        }
        Poly::new(c)
    }

    pub fn from_univariate(nvars: usize, var: usize, p: &Poly<BigInt>) -> Self {
        let mut out = Self::zero(nvars);
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut m = vec![0; nvars];
                m[var] = i as u32;
                out.terms.insert(m, c.clone());
            }
        }
        out
    }

    /// Exact quotient, or `None` if `d` does not divide `self` over Z.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if d.is_constant() {
            let c = d.constant_value();
            let mut out = Self::zero(self.nvars);
            for (m, a) in &self.terms {
                let (q, r) = a.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                out.terms.insert(m.clone(), q);
            }
            return Some(out);
        }
        let (dm, dc) = d.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.terms.iter().next_back() {
            if rm.iter().zip(dm).any(|(a, b)| a < b) {
                return None;
            }
            let (qc, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            let qm: Mono = rm.iter().zip(dm).map(|(a, b)| a - b).collect();
            for (m, c) in &d.terms {
                let mm: Mono = m.iter().zip(&qm).map(|(a, b)| a + b).collect();
                rem.add_term(mm, -(c * &qc));
            }
            q.terms.insert(qm, qc);
        }
        Some(q)
    }
}

/// Gcd over Z[x_1..x_n] with positive lex-leading coefficient, including the
/// gcd of the integer contents.
pub(crate) fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.nvars;
    if a.is_zero() {
        return b.normalized_sign();
    }
    if b.is_zero() {
        return a.normalized_sign();
    }
    if a.is_constant() || b.is_constant() {
        return ZPoly::constant(n, a.content().gcd(&b.content()));
    }
    let ma = a.var_mask();
    let mb = b.var_mask();
    // A variable present in only one argument: the gcd divides every
    // coefficient with respect to it.
    for (big, small, mbig, msmall) in [(a, b, &ma, &mb), (b, a, &mb, &ma)] {
        if let Some(var) = (0..n).find(|&i| mbig[i] && !msmall[i]) {
            let mut g = small.clone();
            for c in big.coeffs_wrt(var).values() {
                g = gcd(&g, c);
                if g.is_constant() {
                    break;
                }
            }
            return g.normalized_sign();
        }
    }
    let present: Vec<usize> = (0..n).filter(|&i| ma[i]).collect();
    if present.len() == 1 {
        let v = present[0];
        let (ua, ub) = (a.to_univariate(v), b.to_univariate(v));
        let g = modgcd::gcd_univariate(&ua, &ub)
            .unwrap_or_else(|| modgcd::prs_gcd_univariate(&ua, &ub));
        return ZPoly::from_univariate(n, v, &g);
    }
    heuristic_gcd(a, b, present[0]).unwrap_or_else(|| prs_gcd(a, b, present[0]))
}

/// Symmetric xi-adic reconstruction of the evaluated gcd in variable `var`.
fn interpolate(h: &ZPoly, var: usize, xi: &BigInt) -> ZPoly {
    let half = xi >> 1;
    let mut out = ZPoly::zero(h.nvars);
    for (m, c) in &h.terms {
        let mut c = c.clone();
        let mut i = 0u32;
        while !c.is_zero() {
            let mut d = c.mod_floor(xi);
            if d > half {
                d -= xi;
            }
            if !d.is_zero() {
                let mut m2 = m.clone();
                m2[var] = i;
                out.add_term(m2, d.clone());
            }
            c = (c - d) / xi;
            i += 1;
        }
    }
    out
}

fn heuristic_gcd(f: &ZPoly, g: &ZPoly, var: usize) -> Option<ZPoly> {
    let cf = f.content();
    let cg = g.content();
    let c = cf.gcd(&cg);
    let f = f.div_int(&cf);
    let g = g.div_int(&cg);
    let fnorm = f.max_norm();
    let gnorm = g.max_norm();
    let b: BigInt = BigInt::from(2) * fnorm.clone().min(gnorm.clone()) + 29;
    let lf = f.lc().unwrap().abs();
    let lg = g.lc().unwrap().abs();
    let bound = BigInt::from(2) * (&fnorm / lf).min(&gnorm / lg) + 2;
    let mut xi = b.clone().min(BigInt::from(99) * b.sqrt()).max(bound);
    for _ in 0..6 {
        let ff = f.eval_var(var, &xi);
        let gg = g.eval_var(var, &xi);
        if !ff.is_zero() && !gg.is_zero() {
            let h = gcd(&ff, &gg);
            let h = interpolate(&h, var, &xi).primitive();
            if !h.is_zero() && f.exact_div(&h).is_some() && g.exact_div(&h).is_some() {
                return Some(h.scale(&c));
            }
        }
        xi = &xi * 73794 * xi.sqrt().sqrt() / 27011;
    }
    None
}

/// Recursive primitive PRS in variable `var`; assumption-free fallback.
fn prs_gcd(a: &ZPoly, b: &ZPoly, var: usize) -> ZPoly {
    let content = |p: &ZPoly| {
        p.coeffs_wrt(var)
            .values()
            .fold(ZPoly::zero(p.nvars), |acc, c| gcd(&acc, c))
    };
    let ca = content(a);
    let cb = content(b);
    let c = gcd(&ca, &cb);
    let mut f = a.exact_div(&ca).expect("content divides");
    let mut g = b.exact_div(&cb).expect("content divides");
    if f.degree_in(var) < g.degree_in(var) {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() && g.degree_in(var) > 0 {
        let r = pseudo_rem(&f, &g, var);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            let cr = content(&r);
            r.exact_div(&cr).expect("content divides")
        };
    }
    let res = if g.is_zero() {
        let cf = content(&f);
        f.exact_div(&cf).expect("content divides")
    } else {
        ZPoly::constant(a.nvars, BigInt::one())
    };
    res.mul(&c).normalized_sign()
}

fn pseudo_rem(a: &ZPoly, b: &ZPoly, var: usize) -> ZPoly {
    let db = b.degree_in(var);
    let bc = b.coeffs_wrt(var);
    let lb = bc.get(&db).unwrap().clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = r.coeffs_wrt(var).remove(&dr).unwrap();
        r = r.mul(&lb).sub(&b.mul(&lr).shift(var, dr - db));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Builds a polynomial in two variables from `(i, j, c)` triples.
    fn p2(terms: &[(u32, u32, i64)]) -> ZPoly {
        let mut p = ZPoly::zero(2);
        for &(i, j, c) in terms {
            p.add_term(vec![i, j], BigInt::from(c));
        }
        p
    }

    #[test]
    fn bivariate_gcd_recovers_common_factor() {
        let common = p2(&[(0, 0, 1), (1, 1, -1)]); // 1 - xy
        let a = common.mul(&p2(&[(0, 0, 1), (2, 0, 3), (0, 1, -2)]));
        let b = common.mul(&common).mul(&p2(&[(1, 0, 1), (0, 0, 5)]));
        let g = gcd(&a, &b);
        assert_eq!(g, common.normalized_sign());
        assert_eq!(prs_gcd(&a, &b, 0), common.normalized_sign());
    }

    #[test]
    fn gcd_with_univariate_argument() {
        let a = p2(&[(0, 0, 1), (0, 1, -1)]).mul(&p2(&[(1, 0, 1), (0, 1, 1)]));
        let b = p2(&[(0, 0, 1), (0, 1, -1)]).mul(&p2(&[(0, 0, 1), (0, 1, 1)]));
        assert_eq!(gcd(&a, &b), p2(&[(0, 0, -1), (0, 1, 1)]));
    }

    #[test]
    fn exact_division() {
        let a = p2(&[(2, 0, 1), (0, 2, -1)]);
        let d = p2(&[(1, 0, 1), (0, 1, -1)]);
        assert_eq!(a.exact_div(&d), Some(p2(&[(1, 0, 1), (0, 1, 1)])));
        assert_eq!(a.exact_div(&p2(&[(1, 0, 1), (0, 0, 1)])), None);
    }
}
