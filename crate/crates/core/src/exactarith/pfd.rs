//! Partial fractions of rational functions in one variable over Q or Q(v),
//! by the method of unknown numerator coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::linsolve::solve_fraction_free;
use super::mpoly::MPoly;
use super::ratfun::RatFun;
use super::rational::{lcm_denoms, BigRat};
use super::ring::{Field, Ring};
use super::unirat::{from_integer_poly, mpoly_to_qpoly, qpoly_gcd, qpoly_to_mpoly, QPoly, UniRat};
use super::upoly::Poly;
use crate::error::{Error, Result};

/// Polynomial in the main variable with coefficients in Q(param).
pub type TPoly = Poly<UniRat>;

/// Pairwise coprime factors in the main variable, each with a multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorBasis {
    var: String,
    factors: Vec<(MPoly, u32)>,
}

impl FactorBasis {
    pub fn new(var: &str, factors: Vec<(MPoly, u32)>) -> Result<Self> {
        for (f, m) in &factors {
            if *m == 0 || f.degree_in(var) == 0 {
                return Err(Error::InvalidInput(format!(
                    "basis factor {f} must have positive degree in {var} and positive multiplicity"
                )));
            }
        }
        Ok(FactorBasis { var: var.to_string(), factors })
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn factors(&self) -> &[(MPoly, u32)] {
        &self.factors
    }

    /// Product of all factors raised to their multiplicities.
    pub fn product(&self) -> MPoly {
        self.factors
            .iter()
            .fold(MPoly::one(), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }
}

/// One elementary fraction `numerator / factor^power`.
#[derive(Clone, Debug, PartialEq)]
pub struct PfTerm {
    pub numerator: TPoly,
    pub factor: MPoly,
    pub power: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartialFractionForm {
    pub var: String,
    pub param: Option<String>,
    pub terms: Vec<PfTerm>,
    pub polynomial_part: TPoly,
}

impl PartialFractionForm {
    /// Numerator over `factor^power`; zero if the decomposition has no such term.
    pub fn numerator(&self, factor: &MPoly, power: u32) -> TPoly {
        self.terms
            .iter()
            .find(|t| &t.factor == factor && t.power == power)
            .map(|t| t.numerator.clone())
            .unwrap_or_else(Poly::zero)
    }

    /// Coefficient of `var^index` in the numerator over `factor^power`.
    pub fn slot(&self, factor: &MPoly, power: u32, index: usize) -> UniRat {
        self.numerator(factor, power).coeff(index)
    }

    fn param_name(&self) -> &str {
        self.param.as_deref().unwrap_or("v")
    }

    /// Sums all fractions back into a single reduced rational function.
    pub fn recombine(&self) -> RatFun {
        let param = self.param_name();
        let mut den_lcm = QPoly::one();
        let mut note = |c: &UniRat| {
            let g = qpoly_gcd(&den_lcm, c.den());
            den_lcm = (&den_lcm * c.den()).exact_div(&g).expect("gcd divides");
        };
        for t in &self.terms {
            t.numerator.coeffs().iter().for_each(&mut note);
        }
        self.polynomial_part.coeffs().iter().for_each(&mut note);
        let l = qpoly_to_mpoly(&den_lcm, param);

        // Fractions sharing a factor: use the highest power only once.
        let mut common = MPoly::one();
        let mut seen: Vec<(&MPoly, u32)> = Vec::new();
        for t in &self.terms {
            match seen.iter_mut().find(|(f, _)| *f == &t.factor) {
                Some(e) => e.1 = e.1.max(t.power),
                None => seen.push((&t.factor, t.power)),
            }
        }
        for (f, p) in &seen {
            common = common.mul(&f.pow(*p));
        }
        let scaled = |p: &TPoly| -> MPoly {
            let lv = UniRat::from_poly(den_lcm.clone());
            tpoly_to_mpoly(&p.map(|c| c.times(&lv)), &self.var, param)
        };
        let mut num = scaled(&self.polynomial_part).mul(&common);
        for t in &self.terms {
            let cof = common
                .exact_div(&t.factor.pow(t.power))
                .expect("factor power divides the common denominator");
            num = num.add(&scaled(&t.numerator).mul(&cof));
        }
        RatFun::new(num, l.mul(&common)).expect("nonzero denominator")
    }
}

/// Converts a polynomial in `var` whose coefficients involve only `param`.
pub fn mpoly_to_tpoly(p: &MPoly, var: &str, param: Option<&str>) -> Result<TPoly> {
    let coeffs = p.coeffs_in(var);
    let deg = coeffs.keys().next_back().copied().unwrap_or(0) as usize;
    let mut out = vec![UniRat::zero(); deg + 1];
    for (e, c) in coeffs {
        let q = match param {
            Some(v) => mpoly_to_qpoly(&c, v)?,
            None => {
                if let Some(other) = c.vars().first() {
                    return Err(Error::UnexpectedVariable {
                        expected: var.into(),
                        found: other.clone(),
                    });
                }
                Poly::constant(c.constant_term())
            }
        };
        out[e as usize] = UniRat::from_poly(q);
    }
    Ok(Poly::new(out))
}

/// Inverse of [`mpoly_to_tpoly`]; every coefficient must be a polynomial.
fn tpoly_to_mpoly(p: &TPoly, var: &str, param: &str) -> MPoly {
    let mut acc = MPoly::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        assert!(c.is_polynomial(), "coefficient denominators must be cleared");
        let term = qpoly_to_mpoly(c.num(), param).mul(&MPoly::var(var).pow(i as u32));
        acc = acc.add(&term);
    }
    acc
}

/// `p` as a rational function in `var` and `param`.
pub fn tpoly_to_ratfun(p: &TPoly, var: &str, param: &str) -> RatFun {
    p.coeffs()
        .iter()
        .enumerate()
        .fold(RatFun::zero(), |acc, (i, c)| {
            acc.add(&c.to_ratfun(param).mul_poly(&MPoly::var(var).pow(i as u32)))
        })
}

fn other_variable(vars: impl IntoIterator<Item = String>, var: &str) -> Result<Option<String>> {
    let mut others: Vec<String> = vars.into_iter().filter(|v| v != var).collect();
    others.sort();
    others.dedup();
    match others.len() {
        0 => Ok(None),
        1 => Ok(others.pop()),
        _ => Err(Error::InvalidInput(format!(
            "partial fractions need at most one coefficient variable besides {var}, found {}",
            others.join(", ")
        ))),
    }
}

fn lcm_qpoly(a: &QPoly, b: &QPoly) -> QPoly {
    let g = qpoly_gcd(a, b);
    (a * b).exact_div(&g).expect("gcd divides")
}

/// Decomposes `f` (a rational function in `basis.var()` over Q or Q(param))
/// into elementary fractions over the given basis.
pub fn partial_fractions(f: &RatFun, basis: &FactorBasis) -> Result<PartialFractionForm> {
    let var = basis.var();
    let mut all_vars = f.vars();
    for (p, _) in basis.factors() {
        all_vars.extend(p.vars().iter().cloned());
    }
    let param = other_variable(all_vars, var)?;
    let pv = param.as_deref();

    let a = mpoly_to_tpoly(f.num(), var, pv)?;
    let b = mpoly_to_tpoly(f.den(), var, pv)?;
    let rhos: Vec<TPoly> = basis
        .factors()
        .iter()
        .map(|(p, _)| mpoly_to_tpoly(p, var, pv))
        .collect::<Result<_>>()?;

    for i in 0..rhos.len() {
        for j in i + 1..rhos.len() {
            if !rhos[i].euclid_gcd(&rhos[j]).is_constant() {
                return Err(Error::BasisNotCoprime(i, j));
            }
        }
    }

    let mut d: TPoly = Poly::one();
    for (rho, (_, m)) in rhos.iter().zip(basis.factors()) {
        d = &d * &rho.pow(*m);
    }
    let (cofactor, rem) = d.divrem(&b);
    if !rem.is_zero() {
        return Err(Error::BasisNotCovering);
    }
    let full = &a * &cofactor;
    let (poly_part, r) = full.divrem(&d);

    // Columns: var^c * D / rho_i^j for c < deg rho_i.
    let mut columns: Vec<(usize, u32, usize, TPoly)> = Vec::new();
    for (i, (rho, (_, m))) in rhos.iter().zip(basis.factors()).enumerate() {
        let deg = rho.degree().unwrap_or(0);
        for j in 1..=*m {
            let base = d.divrem(&rho.pow(j)).0;
            for c in 0..deg {
                columns.push((i, j, c, base.shift(c)));
            }
        }
    }
    let n = columns.len();
    let nrows = d.degree().unwrap_or(0);
    debug_assert_eq!(n, nrows);

    let mut mat = Vec::with_capacity(nrows);
    let mut rhs = Vec::with_capacity(nrows);
    for row in 0..nrows {
        let entries: Vec<UniRat> = columns.iter().map(|c| c.3.coeff(row)).collect();
        let target = r.coeff(row);
        let mut l = QPoly::one();
        for e in entries.iter().chain(std::iter::once(&target)) {
            l = lcm_qpoly(&l, e.den());
        }
        let scaled: Vec<QPoly> = entries
            .iter()
            .chain(std::iter::once(&target))
            .map(|e| {
                (e.num() * &l)
                    .exact_div(e.den())
                    .expect("lcm is a multiple of every denominator")
            })
            .collect();
        let int_den = scaled
            .iter()
            .fold(BigInt::one(), |acc, p| {
                num_integer::Integer::lcm(&acc, &lcm_denoms(p.coeffs()))
            });
        let mut z: Vec<Poly<BigInt>> = scaled
            .iter()
            .map(|p| p.map(|c| c.numer() * (&int_den / c.denom())))
            .collect();
        rhs.push(z.pop().unwrap());
        mat.push(z);
    }
    let sol = solve_fraction_free(&mat, &rhs, n)?;
    let det = from_integer_poly(&sol.det);

    let mut terms: Vec<PfTerm> = Vec::new();
    for (k, (i, j, c, _)) in columns.iter().enumerate() {
        let x = UniRat::new(from_integer_poly(&sol.numerators[k]), det.clone())?;
        let factor = &basis.factors()[*i].0;
        let idx = match terms.iter().position(|t| &t.factor == factor && t.power == *j) {
            Some(p) => p,
            None => {
                terms.push(PfTerm { numerator: Poly::zero(), factor: factor.clone(), power: *j });
                terms.len() - 1
            }
        };
        let mut coeffs: Vec<UniRat> = terms[idx].numerator.coeffs().to_vec();
        if coeffs.len() <= *c {
            coeffs.resize(*c + 1, UniRat::zero());
        }
        coeffs[*c] = x;
        terms[idx].numerator = Poly::new(coeffs);
    }
    terms.retain(|t| !t.numerator.is_zero());

    Ok(PartialFractionForm {
        var: var.to_string(),
        param,
        terms,
        polynomial_part: poly_part,
    })
}

/// Top-order coefficient `alpha_k` of `f(w) / ((1 - xi w)^k g(w))`, which
/// equals `f(1/xi) / g(1/xi)`.
pub fn residue_coefficient<F: Field>(f: &Poly<F>, g: &Poly<F>, xi: &F, k: u32) -> Result<F> {
    if k == 0 {
        return Err(Error::ResidueHypothesis("the power k must be positive".into()));
    }
    let w = xi
        .inverse()
        .ok_or_else(|| Error::ResidueHypothesis("xi = 0 gives no pole".into()))?;
    let gv = g.eval(&w);
    if gv.is_zero() {
        return Err(Error::ResidueHypothesis("g(1/xi) = 0".into()));
    }
    Ok(f.eval(&w).over(&gv).expect("nonzero"))
}

/// Rational constant as an element of Q(v).
pub fn uconst(c: BigRat) -> UniRat {
    UniRat::constant(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::rational::{rat, ratio};

    fn t() -> MPoly {
        MPoly::var("t")
    }
    fn one_minus(p: &MPoly) -> MPoly {
        MPoly::one().sub(p)
    }

    #[test]
    fn two_simple_poles() {
        let f = RatFun::new(MPoly::one(), one_minus(&t()).mul(&MPoly::one().add(&t()))).unwrap();
        let basis = FactorBasis::new("t", vec![(one_minus(&t()), 1), (MPoly::one().add(&t()), 1)]).unwrap();
        let pf = partial_fractions(&f, &basis).unwrap();
        assert_eq!(pf.slot(&one_minus(&t()), 1, 0), uconst(ratio(1, 2)));
        assert_eq!(pf.slot(&MPoly::one().add(&t()), 1, 0), uconst(ratio(1, 2)));
        assert!(pf.polynomial_part.is_zero());
        assert_eq!(pf.recombine(), f);
    }

    #[test]
    fn identity_case() {
        let f = RatFun::new(MPoly::one(), one_minus(&t()).pow(2)).unwrap();
        let basis = FactorBasis::new("t", vec![(one_minus(&t()), 2)]).unwrap();
        let pf = partial_fractions(&f, &basis).unwrap();
        assert_eq!(pf.terms.len(), 1);
        assert_eq!(pf.slot(&one_minus(&t()), 2, 0), uconst(rat(1)));
        assert_eq!(pf.recombine(), f);
    }

    #[test]
    fn parametric_coefficients() {
        let v = MPoly::var("v");
        let vt = v.mul(&t());
        let f = RatFun::new(t().add(&v), one_minus(&t()).pow(2).mul(&one_minus(&vt))).unwrap();
        let basis = FactorBasis::new("t", vec![(one_minus(&t()), 2), (one_minus(&vt), 1)]).unwrap();
        let pf = partial_fractions(&f, &basis).unwrap();
        assert_eq!(pf.recombine(), f);
        // top coefficient at (1-t)^2 is (1+v)/(1-v)
        let top = pf.slot(&one_minus(&t()), 2, 0);
        let expect = UniRat::new(Poly::new(vec![rat(1), rat(1)]), Poly::new(vec![rat(1), rat(-1)])).unwrap();
        assert_eq!(top, expect);
    }

    #[test]
    fn basis_errors() {
        let f = RatFun::new(MPoly::one(), one_minus(&t()).pow(3)).unwrap();
        let basis = FactorBasis::new("t", vec![(one_minus(&t()), 2)]).unwrap();
        assert_eq!(partial_fractions(&f, &basis), Err(Error::BasisNotCovering));
        let bad = FactorBasis::new("t", vec![(one_minus(&t()), 3), (one_minus(&t().pow(2)), 1)]).unwrap();
        assert_eq!(partial_fractions(&f, &bad), Err(Error::BasisNotCoprime(0, 1)));
    }

    #[test]
    fn residue_matches_decomposition() {
        let q = |c: &[i64]| Poly::new(c.iter().map(|&x| rat(x)).collect::<Vec<BigRat>>());
        assert_eq!(residue_coefficient(&q(&[1]), &q(&[1]), &rat(1), 1).unwrap(), rat(1));
        let a2 = residue_coefficient(&q(&[1]), &q(&[1, 1]), &rat(1), 2).unwrap();
        assert_eq!(a2, ratio(1, 2));
        let f = RatFun::new(MPoly::one(), one_minus(&t()).pow(2).mul(&MPoly::one().add(&t()))).unwrap();
        let basis = FactorBasis::new("t", vec![(one_minus(&t()), 2), (MPoly::one().add(&t()), 1)]).unwrap();
        let pf = partial_fractions(&f, &basis).unwrap();
        assert_eq!(pf.slot(&one_minus(&t()), 2, 0), uconst(a2));
        assert!(residue_coefficient(&q(&[1]), &q(&[1, -1]), &rat(1), 1).is_err());
    }
}
