//! Decomposition of the multiplicity series into fractions
//! `v^a t^b / (pi(v)^k rho(t, v)^l)` and its top-degree part.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::{coefficient_table, AlgebraKind, CoefficientTable, Rho};
use crate::error::{Error, Result};
use crate::exactarith::rational::{rat_to_string, ratio};
use crate::exactarith::unirat::{mpoly_to_qpoly, QPoly};
use crate::exactarith::{partial_fractions, BigRat, FactorBasis, MPoly, RatFun, UniRat};
use crate::expr::parse_mpoly;
use crate::par::{self, ExecMode};

/// Denominator factors in `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Pi {
    OneMinusV,
    OnePlusV,
    Cyclo6,
    Cyclo3,
    Cyclo4,
    Cyclo5,
}

impl Pi {
    pub const ALL: [Pi; 6] = [Pi::OneMinusV, Pi::OnePlusV, Pi::Cyclo6, Pi::Cyclo3, Pi::Cyclo4, Pi::Cyclo5];

    pub fn text(self) -> &'static str {
        match self {
            Pi::OneMinusV => "1-v",
            Pi::OnePlusV => "1+v",
            Pi::Cyclo6 => "1-v+v^2",
            Pi::Cyclo3 => "1+v+v^2",
            Pi::Cyclo4 => "1+v^2",
            Pi::Cyclo5 => "1+v+v^2+v^3+v^4",
        }
    }

    pub fn poly(self) -> MPoly {
        parse_mpoly(self.text()).expect("valid factor")
    }

    fn qpoly(self) -> QPoly {
        mpoly_to_qpoly(&self.poly(), "v").expect("univariate in v")
    }

    fn from_poly(p: &MPoly) -> Option<Pi> {
        Pi::ALL.into_iter().find(|f| &f.poly() == p)
    }
}

/// `coeff * v^a t^b / (pi^k rho^l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub pi: Pi,
    pub k: u32,
    pub a: u32,
    pub rho: Rho,
    pub l: u32,
    pub b: u32,
    #[serde(serialize_with = "ser_rat")]
    pub coeff: BigRat,
}

fn ser_rat<S: serde::Serializer>(r: &BigRat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rat_to_string(r))
}

impl Fraction {
    pub fn degree(&self) -> u32 {
        self.k + self.l
    }

    fn key(&self) -> (Pi, u32, u32, Rho, u32, u32) {
        (self.pi, self.k, self.a, self.rho, self.l, self.b)
    }

    pub fn to_ratfun(&self) -> RatFun {
        let v = MPoly::var("v");
        let t = MPoly::var("t");
        let num = v.pow(self.a).mul(&t.pow(self.b)).scale(&self.coeff);
        let den = self.pi.poly().pow(self.k).mul(&self.rho.poly().pow(self.l));
        RatFun::new(num, den).expect("nonzero denominator")
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} * v^{} t^{} / (({})^{} ({})^{})",
            rat_to_string(&self.coeff),
            self.a,
            self.b,
            self.pi.text(),
            self.k,
            self.rho.text(),
            self.l
        )
    }
}

/// Full decomposition of a multiplicity series and its top-degree part.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LeadingPart {
    pub kind: AlgebraKind,
    pub max_degree: u32,
    pub fractions: Vec<Fraction>,
    pub leading: Vec<Fraction>,
}

impl LeadingPart {
    pub fn leading_ratfun(&self) -> RatFun {
        self.leading.iter().fold(RatFun::zero(), |acc, f| acc.add(&f.to_ratfun()))
    }

    /// Sum of all fractions; equals the multiplicity series.
    pub fn recombine(&self) -> RatFun {
        self.fractions.iter().fold(RatFun::zero(), |acc, f| acc.add(&f.to_ratfun()))
    }
}

/// `den = c * prod pi^k` by trial division.
fn factor_over_pi(den: &QPoly) -> Result<Vec<(Pi, u32)>> {
    let mut rest = den.clone();
    let mut out = Vec::new();
    for pi in Pi::ALL {
        let f = pi.qpoly();
        let mut k = 0;
        while let Some(q) = rest.exact_div(&f) {
            rest = q;
            k += 1;
        }
        if k > 0 {
            out.push((pi, k));
        }
    }
    if !rest.is_constant() {
        return Err(Error::OutsideBasis(format!(
            "denominator factor {} is not a product of the allowed factors in v",
            rest.fmt_with("v", rat_to_string)
        )));
    }
    Ok(out)
}

fn decompose_coefficient(c: &UniRat) -> Result<Vec<(Pi, u32, u32, BigRat)>> {
    let factors = factor_over_pi(c.den())?;
    if factors.is_empty() {
        return Err(Error::OutsideBasis(format!("polynomial coefficient {c}")));
    }
    let basis = FactorBasis::new("v", factors.iter().map(|(p, k)| (p.poly(), *k)).collect())?;
    let pf = partial_fractions(&c.to_ratfun("v"), &basis)?;
    if !pf.polynomial_part.is_zero() {
        return Err(Error::OutsideBasis(format!("polynomial part in v of {c}")));
    }
    let mut out = Vec::new();
    for term in &pf.terms {
        let pi = Pi::from_poly(&term.factor).expect("basis factor");
        for (a, n) in term.numerator.coeffs().iter().enumerate() {
            let n = n.as_constant().expect("coefficients over Q");
            if !n.is_zero() {
                out.push((pi, term.power, a as u32, n));
            }
        }
    }
    Ok(out)
}

/// Decomposes every slot of a table in `v`.
pub fn decompose(table: &CoefficientTable, mode: ExecMode) -> Result<Vec<Fraction>> {
    let slots = table.slots();
    let parts = par::try_map(mode, slots, |s| {
        if s.value.is_zero() {
            return Ok(Vec::new());
        }
        decompose_coefficient(&s.value)
    })?;
    let mut out: Vec<Fraction> = Vec::new();
    for (s, part) in slots.iter().zip(parts) {
        for (pi, k, a, coeff) in part {
            out.push(Fraction { pi, k, a, rho: s.rho, l: s.power, b: s.index, coeff });
        }
    }
    out.sort_by_key(Fraction::key);
    Ok(out)
}

/// Fractions of the multiplicity series with maximal `k + l`, which must
/// be 16.
pub fn leading_part(kind: AlgebraKind) -> Result<LeadingPart> {
    let fractions = decompose(&coefficient_table(kind), ExecMode::default())?;
    let max_degree = fractions.iter().map(Fraction::degree).max().unwrap_or(0);
    if max_degree != 16 {
        return Err(Error::InvariantViolation(format!("maximal denominator degree is {max_degree}, not 16")));
    }
    let leading = fractions.iter().filter(|f| f.degree() == max_degree).cloned().collect();
    Ok(LeadingPart { kind, max_degree, fractions, leading })
}

/// The pure leading part written out term by term.
pub fn displayed_pure_leading() -> Vec<Fraction> {
    let f = |k: u32, rho: Rho, l: u32, b: u32, coeff: BigRat| Fraction { pi: Pi::OneMinusV, k, a: 0, rho, l, b, coeff };
    let mut out = vec![
        f(12, Rho::OneMinusT, 4, 0, ratio(1, 256 * 9)),
        f(13, Rho::OneMinusT, 3, 0, ratio(-1, 256 * 27)),
        f(14, Rho::OneMinusT, 2, 0, ratio(127, 1024 * 81)),
        f(15, Rho::OneMinusT, 1, 0, ratio(-305, 512 * 243)),
        f(14, Rho::OneMinusVT, 2, 0, ratio(-1, 1024 * 9 * 5)),
        f(15, Rho::OneMinusVT, 1, 0, ratio(-7, 512 * 3 * 25)),
        f(15, Rho::OneMinusVT2, 1, 0, ratio(16, 243 * 25)),
        f(15, Rho::OneMinusVT2, 1, 1, ratio(16, 243 * 25)),
    ];
    out.sort_by_key(Fraction::key);
    out
}

/// `factor * fs`, for comparing the mixed leading part with the pure one.
pub fn scaled(fs: &[Fraction], factor: &BigRat) -> Vec<Fraction> {
    fs.iter().map(|f| Fraction { coeff: &f.coeff * factor, ..f.clone() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_ratfun;

    #[test]
    fn trial_division() {
        let d = mpoly_to_qpoly(&parse_mpoly("3*(1-v)^2*(1+v+v^2)").unwrap(), "v").unwrap();
        assert_eq!(factor_over_pi(&d).unwrap(), vec![(Pi::OneMinusV, 2), (Pi::Cyclo3, 1)]);
        let d = mpoly_to_qpoly(&parse_mpoly("(1-v)*(2+v)").unwrap(), "v").unwrap();
        assert!(matches!(factor_over_pi(&d), Err(Error::OutsideBasis(_))));
    }

    #[test]
    fn coefficient_pieces_recombine() {
        let c = UniRat::from_ratfun(&parse_ratfun("(1+2*v)/((1-v)^2*(1+v^2))").unwrap(), "v").unwrap();
        let parts = decompose_coefficient(&c).unwrap();
        let back = parts.iter().fold(RatFun::zero(), |acc, (pi, k, a, n)| {
            acc.add(&RatFun::new(MPoly::var("v").pow(*a).scale(n), pi.poly().pow(*k)).unwrap())
        });
        assert_eq!(back, c.to_ratfun("v"));
        assert!(parts.iter().all(|(pi, _, a, _)| (*a as usize) < pi.qpoly().degree().unwrap()));
    }

    #[test]
    fn displayed_terms_match_display_expression() {
        let m: RatFun = displayed_pure_leading().iter().fold(RatFun::zero(), |acc, f| acc.add(&f.to_ratfun()));
        let text = "1/(1-v)^12*(1/(2^8*3^2*(1-t)^4)-1/(2^8*3^3*(1-v)*(1-t)^3)\
                    +127/(2^10*3^4*(1-v)^2*(1-t)^2)-305/(2^9*3^5*(1-v)^3*(1-t))\
                    -1/(2^10*3^2*5*(1-v)^2*(1-v*t)^2)-7/(2^9*3*5^2*(1-v)^3*(1-v*t))\
                    +2^4*(1+t)/(3^5*5^2*(1-v)^3*(1-v*t^2)))";
        assert_eq!(m, parse_ratfun(text).unwrap());
    }
}
