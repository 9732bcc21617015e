//! Exact rational multiplicity series of symmetric functions of the form
//!
//! ```text
//! f(x, y) = c(xy) * (p(x, xy) + p(y, xy)) / (q(x, xy) * q(y, xy))
//! ```
//!
//! by the method of unknown coefficients. With `y = z/x` the inversion
//! formula becomes the polynomial identity (in `x`, over `Q(z)`)
//!
//! ```text
//! (x - z/x)(p(x) + p(z/x)) = x h(x) q(z/x) - (z/x) h(z/x) q(x)
//! ```
//!
//! for the numerator `h(t, v)` of `M'(f) = c(v) h(t, v) / q(t, v)`, with
//! `deg_t h <= max(deg_x p, deg_x q - 2)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactarith::linsolve::solve_fraction_free;
use crate::exactarith::rational::{lcm_denoms, rat_to_string};
use crate::exactarith::ring::{Field, Ring};
use crate::exactarith::unirat::{from_integer_poly, mpoly_to_qpoly, qpoly_to_mpoly, QPoly};
use crate::exactarith::{residue_coefficient, BigRat, MPoly, Poly, RatFun, UniRat};
use crate::symfunc::{mult_series_expand, schur_decompose, series_expand};

/// Variable names used inside a [`RationalShape`].
pub const X: &str = "x";
pub const Z: &str = "z";

/// Witness `(p, q, c)` for a symmetric function of the solvable shape.
/// `p` and `q` are polynomials in `x` with coefficients in `Q(z)`; `c` is a
/// rational function of `z` alone.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalShape {
    p: RatFun,
    q: RatFun,
    z_factor: RatFun,
}

fn only_vars(r: &RatFun, allowed: &[&str]) -> Result<()> {
    for v in r.vars() {
        if !allowed.contains(&v.as_str()) {
            return Err(Error::UnexpectedVariable { expected: allowed.join(" or "), found: v });
        }
    }
    Ok(())
}

fn x_poly_over_z(r: &RatFun, what: &str) -> Result<()> {
    only_vars(r, &[X, Z])?;
    if r.den().has_var(X) {
        return Err(Error::InvalidInput(format!("{what} must be polynomial in x")));
    }
    Ok(())
}

impl RationalShape {
    pub fn new(p: RatFun, q: RatFun, z_factor: RatFun) -> Result<Self> {
        x_poly_over_z(&p, "p")?;
        x_poly_over_z(&q, "q")?;
        only_vars(&z_factor, &[Z])?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalShape { p, q, z_factor })
    }

    /// Builds `p` from a symmetric numerator `P(x, y)` so that
    /// `p(x, xy) + p(y, xy) = P` exactly: `x^a y^b + x^b y^a` (a > b) comes
    /// from `z^b x^(a-b)`, and `x^a y^a` from `z^a / 2`.
    pub fn from_symmetric_numerator(num: &MPoly, q: RatFun, z_factor: RatFun) -> Result<Self> {
        only_vars(&RatFun::from_poly(num.clone()), &["x", "y"])?;
        let swapped = num.substitute_all(&[("x", &MPoly::var("y")), ("y", &MPoly::var("x"))]);
        if &swapped != num {
            let diff = num.sub(&swapped);
            let (a, b) = diff
                .terms()
                .keys()
                .map(|m| (diff.exponent(m, "x"), diff.exponent(m, "y")))
                .max()
                .expect("nonzero difference");
            return Err(Error::NotSymmetric(a, b));
        }
        let vars = vec![X.to_string(), Z.to_string()];
        let mut terms = Vec::new();
        for (m, c) in num.terms() {
            let a = num.exponent(m, "x");
            let b = num.exponent(m, "y");
            if a > b {
                terms.push((vec![a - b, b], c.clone()));
            } else if a == b {
                terms.push((vec![0, a], c / BigRat::from_integer(2.into())));
            }
        }
        let p = MPoly::from_terms(&vars, terms);
        let shape = Self::new(RatFun::from_poly(p), q, z_factor)?;
        if shape.symmetrized_numerator()? != *num {
            return Err(Error::InvariantViolation("p(x,xy) + p(y,xy) does not reproduce the numerator".into()));
        }
        Ok(shape)
    }

    pub fn p(&self) -> &RatFun {
        &self.p
    }

    pub fn q(&self) -> &RatFun {
        &self.q
    }

    pub fn z_factor(&self) -> &RatFun {
        &self.z_factor
    }

    fn at(r: &RatFun, first: &str) -> Result<RatFun> {
        let x = MPoly::var("x");
        let y = MPoly::var("y");
        let e = x.mul(&y);
        let var = if first == "x" { &x } else { &y };
        // Simultaneous substitution through a temporary name.
        r.substitute_poly(&[(X, &MPoly::var("tmp_")), (Z, &e)])?
            .substitute_poly(&[("tmp_", var)])
    }

    /// `p(x, xy) + p(y, xy)`; a polynomial when `p` has polynomial coefficients.
    pub fn symmetrized_numerator(&self) -> Result<MPoly> {
        let s = Self::at(&self.p, "x")?.add(&Self::at(&self.p, "y")?);
        if !s.is_polynomial() {
            return Err(Error::NotPolynomial);
        }
        Ok(s.into_parts().0)
    }

    /// The symmetric function this witness describes.
    pub fn target(&self) -> Result<RatFun> {
        let num = Self::at(&self.p, "x")?.add(&Self::at(&self.p, "y")?);
        let den = Self::at(&self.q, "x")?.mul(&Self::at(&self.q, "y")?);
        let c = self.z_factor.substitute_poly(&[(Z, &MPoly::var("x").mul(&MPoly::var("y")))])?;
        Ok(num.div(&den)?.mul(&c))
    }

    /// Integer-friendly parts: `p = pn / pd`, `q = qn / qd`.
    fn parts(&self) -> (MPoly, MPoly, MPoly, MPoly) {
        let (pn, pd) = self.p.clone().into_parts();
        let (qn, qd) = self.q.clone().into_parts();
        (pn, pd, qn, qd)
    }
}

/// Coefficients of `p` in powers of `x`, each a polynomial in `z`.
fn x_coeffs(p: &MPoly) -> Result<Vec<QPoly>> {
    let map = p.coeffs_in(X);
    let deg = map.keys().next_back().copied().unwrap_or(0) as usize;
    let mut out = vec![QPoly::zero(); deg + 1];
    for (e, c) in map {
        out[e as usize] = mpoly_to_qpoly(&c, Z)?;
    }
    Ok(out)
}

fn z_pow(k: usize) -> QPoly {
    Poly::monomial(BigRat::one(), k)
}

type Laurent = BTreeMap<i64, QPoly>;

fn add_to(acc: &mut Laurent, e: i64, c: QPoly) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(e).or_insert_with(QPoly::zero);
    *slot = &*slot + &c;
}

/// Result of a solve, with the pieces needed to audit it.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    /// `M'(f)(t, v)` in canonical form.
    pub series: RatFun,
    /// `h(t, v)` before cancellation against `q(t, v)`.
    pub numerator: RatFun,
    /// `q(t, v)` (with `z` renamed to `v`).
    pub q: RatFun,
    pub numerator_degree: i64,
    pub degree_bound: i64,
}

pub fn solve_multiplicity_series(inp: &RationalShape) -> Result<RatFun> {
    Ok(solve_detailed(inp)?.series)
}

pub fn solve_detailed(inp: &RationalShape) -> Result<Solution> {
    let (pn, pd, qn, qd) = inp.parts();
    let to_tv = |p: &MPoly| p.substitute_all(&[(X, &MPoly::var("t")), (Z, &MPoly::var("v"))]);
    let q_tv = RatFun::new(to_tv(&qn), to_tv(&qd))?;
    let pc = x_coeffs(&pn)?;
    let qc = x_coeffs(&qn)?;
    let dp = if pn.is_zero() { -1 } else { pc.len() as i64 - 1 };
    let dq = qc.len() as i64 - 1;
    let bound = dp.max(dq - 2);
    if pn.is_zero() {
        return Ok(Solution {
            series: RatFun::zero(),
            numerator: RatFun::zero(),
            q: q_tv,
            numerator_degree: -1,
            degree_bound: bound,
        });
    }
    let nh = (bound.max(0) + 1) as usize;

    // Left-hand side (x - z/x)(p(x) + p(z/x)).
    let mut lhs = Laurent::new();
    for (i, c) in pc.iter().enumerate() {
        let i = i as i64;
        let zi = &z_pow(i as usize) * c;
        add_to(&mut lhs, i + 1, c.clone());
        add_to(&mut lhs, 1 - i, zi.clone());
        add_to(&mut lhs, i - 1, -&(&z_pow(1) * c));
        add_to(&mut lhs, -i - 1, -&(&z_pow(1) * &zi));
    }
    // Column j: x^(j+1) q(z/x) - z^(j+1) x^(-j-1) q(x).
    let mut cols: Vec<Laurent> = Vec::with_capacity(nh);
    for j in 0..nh as i64 {
        let mut col = Laurent::new();
        for (k, c) in qc.iter().enumerate() {
            let k = k as i64;
            add_to(&mut col, j + 1 - k, &z_pow(k as usize) * c);
            add_to(&mut col, k - j - 1, -&(&z_pow(j as usize + 1) * c));
        }
        cols.push(col);
    }
    let mut exps: Vec<i64> = lhs.keys().copied().collect();
    for c in &cols {
        exps.extend(c.keys().copied());
    }
    exps.sort_unstable();
    exps.dedup();

    let mut mat = Vec::with_capacity(exps.len());
    let mut rhs = Vec::with_capacity(exps.len());
    for e in &exps {
        let mut row: Vec<QPoly> = cols.iter().map(|c| c.get(e).cloned().unwrap_or_else(QPoly::zero)).collect();
        row.push(lhs.get(e).cloned().unwrap_or_else(QPoly::zero));
        let l = row.iter().fold(BigInt::one(), |acc, p| num_integer::Integer::lcm(&acc, &lcm_denoms(p.coeffs())));
        let mut z: Vec<Poly<BigInt>> = row.iter().map(|p| p.map(|c| c.numer() * (&l / c.denom()))).collect();
        rhs.push(z.pop().expect("row has a target"));
        mat.push(z);
    }
    let sol = solve_fraction_free(&mat, &rhs, nh)?;

    let t = MPoly::var("t");
    let mut h = MPoly::zero();
    for (j, nj) in sol.numerators.iter().enumerate() {
        h = h.add(&qpoly_to_mpoly(&from_integer_poly(nj), "v").mul(&t.pow(j as u32)));
    }
    let det = qpoly_to_mpoly(&from_integer_poly(&sol.det), "v");
    // h = h' qd / pd with h' = H / det, and M' = c h / q = c (H / det) qd^2 / (pd qn).
    let zf = inp.z_factor.rename(Z, "v");
    let (qd_v, pd_v) = (to_tv(&qd), to_tv(&pd));
    let numerator_degree = h.degree_in("t") as i64;
    let numerator = RatFun::new(h.mul(&qd_v), det.mul(&pd_v))?;
    let series_num = zf.num().mul(&h).mul(&qd_v.pow(2));
    let series_den = zf.den().mul(&det).mul(&pd_v).mul(&to_tv(&qn));
    let series = RatFun::new(series_num, series_den)?;
    Ok(Solution { series, numerator, q: q_tv, numerator_degree, degree_bound: bound })
}

/// Top-order coefficient of the fraction `1/(1 - xi t)^k` in `M'(f)`, read
/// off from the shape alone by the residue formula: near `x = 1/xi` the
/// function `f(x, z/x)(x - z/x)` has the same top-order part as
/// `x M'(f)(x, z)`.
pub fn top_coefficient(inp: &RationalShape, xi: &UniRat, k: u32) -> Result<UniRat> {
    let (pn, pd, qn, qd) = inp.parts();
    let uq = |p: &QPoly| UniRat::from_poly(p.clone());
    let pc: Vec<UniRat> = x_coeffs(&pn)?.iter().map(uq).collect();
    let qc: Vec<UniRat> = x_coeffs(&qn)?.iter().map(uq).collect();
    let z = UniRat::from_poly(z_pow(1));
    let dp = pc.len() - 1;
    let dq = qc.len() - 1;
    // A(x) = x^dp (p(x) + p(z/x)), B(x) = x^dq q(z/x).
    let mut a = vec![UniRat::zero(); 2 * dp + 1];
    for (i, c) in pc.iter().enumerate() {
        a[dp + i] = a[dp + i].plus(c);
        a[dp - i] = a[dp - i].plus(&c.times(&z_pow_u(&z, i)));
    }
    let mut b = vec![UniRat::zero(); dq + 1];
    for (k2, c) in qc.iter().enumerate() {
        b[dq - k2] = c.times(&z_pow_u(&z, k2));
    }
    let (a, b) = (Poly::new(a), Poly::new(b));
    let qx: Poly<UniRat> = Poly::new(qc.clone());
    let x2_minus_z = Poly::new(vec![z.negate(), UniRat::zero(), UniRat::one()]);
    let s = dq as i64 - 1 - dp as i64;
    let mut num = &x2_minus_z * &a;
    let mut den = &qx * &b;
    if s >= 0 {
        num = num.shift(s as usize);
    } else {
        den = den.shift((-s) as usize);
    }
    let to_u = |r: &RatFun| UniRat::from_ratfun(r, Z);
    let qd_u = to_u(&RatFun::from_poly(qd))?;
    let pd_u = to_u(&RatFun::from_poly(pd))?;
    let c = to_u(&inp.z_factor)?.times(&qd_u).times(&qd_u).over(&pd_u).ok_or(Error::DivisionByZero)?;
    num = num.scale(&c);

    let lin = Poly::new(vec![UniRat::one(), xi.negate()]);
    let (g, r) = den.divrem(&lin.pow(k));
    if !r.is_zero() {
        return Err(Error::ResidueHypothesis(format!("(1 - xi x)^{k} does not divide the denominator")));
    }
    let res = residue_coefficient(&num, &g, xi, k)?;
    Ok(res.times(xi))
}

fn z_pow_u(z: &UniRat, k: usize) -> UniRat {
    (0..k).fold(UniRat::one(), |acc, _| acc.times(z))
}

/// First multiplicity where `inverse_M(m)` and `f` disagree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    pub t_exponent: u32,
    pub v_exponent: u32,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoundtripReport {
    pub ok: bool,
    pub first_difference: Option<Discrepancy>,
    pub message: String,
}

/// Checks `inverse_M(m) = f` exactly. On failure, locates the first
/// multiplicity (by total degree) where the Schur expansion of `f` and the
/// series of `m` differ.
pub fn verify_roundtrip(f: &RatFun, m: &RatFun) -> RoundtripReport {
    match crate::symfunc::inverse_M(m) {
        Ok(g) if &g == f => {
            return RoundtripReport { ok: true, first_difference: None, message: "inverse_M(M) = f".into() };
        }
        Ok(_) => {}
        Err(e) => {
            return RoundtripReport { ok: false, first_difference: None, message: e.to_string() };
        }
    }
    for n in [8u32, 16, 32, 64] {
        let oracle = series_expand(f, n).and_then(|s| schur_decompose(&s));
        let ms = mult_series_expand(m, n - 1, crate::par::ExecMode::default());
        let (Ok(oracle), Ok(ms)) = (oracle, ms) else {
            return RoundtripReport {
                ok: false,
                first_difference: None,
                message: "series expansion failed".into(),
            };
        };
        for (l, want) in oracle.entries() {
            let got = ms.coeff(l.p(), l.l2());
            if &got != want {
                return RoundtripReport {
                    ok: false,
                    first_difference: Some(Discrepancy {
                        t_exponent: l.p(),
                        v_exponent: l.l2(),
                        expected: rat_to_string(want),
                        found: rat_to_string(&got),
                    }),
                    message: format!("multiplicity of {l} differs"),
                };
            }
        }
    }
    RoundtripReport {
        ok: false,
        first_difference: None,
        message: "functions differ beyond total degree 63".into(),
    }
}
