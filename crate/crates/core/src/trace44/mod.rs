//! The pure (`C`) and mixed (`T`) trace algebras of two generic 4x4
//! matrices: stored Hilbert series and multiplicity series, exact
//! multiplicities at any partition, leading parts and degree-14 asymptotics.

mod asympt;
pub mod checks;
mod data;
mod extract;
mod leading;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactarith::rational::is_integer;
use crate::exactarith::{BigRat, MPoly, PartialFractionForm, PfTerm, Poly, RatFun, UniRat};
use crate::expr::{parse_mpoly, parse_ratfun};
use crate::multsolver::{solve_detailed, RationalShape, Solution, Z};
use crate::symfunc::Partition2;

pub use asympt::{
    asymptotic, asymptotic_convergence_report, AsymptoticRegion, AsymptoticValue, ConvergenceReport, ConvergenceRow,
};
pub use extract::{multiplicities, CoefficientEngine};
pub use leading::{decompose, displayed_pure_leading, leading_part, scaled, Fraction, LeadingPart, Pi};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Pure,
    Mixed,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 2] = [AlgebraKind::Pure, AlgebraKind::Mixed];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Pure => "pure",
            AlgebraKind::Mixed => "mixed",
        })
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pure" | "C" => Ok(AlgebraKind::Pure),
            "mixed" | "T" => Ok(AlgebraKind::Mixed),
            _ => Err(Error::InvalidInput(format!("unknown algebra kind {s:?} (pure or mixed)"))),
        }
    }
}

/// Denominator factors in `t` of the multiplicity series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rho {
    OneMinusT,
    OnePlusT,
    Cyclo3,
    Cyclo4,
    OneMinusVT,
    OneMinusVT2,
}

impl Rho {
    pub const ALL: [Rho; 6] = [
        Rho::OneMinusT,
        Rho::OnePlusT,
        Rho::Cyclo3,
        Rho::Cyclo4,
        Rho::OneMinusVT,
        Rho::OneMinusVT2,
    ];

    pub fn text(self) -> &'static str {
        match self {
            Rho::OneMinusT => "1-t",
            Rho::OnePlusT => "1+t",
            Rho::Cyclo3 => "1+t+t^2",
            Rho::Cyclo4 => "1+t^2",
            Rho::OneMinusVT => "1-v*t",
            Rho::OneMinusVT2 => "1-v*t^2",
        }
    }

    pub fn poly(self) -> MPoly {
        parse_mpoly(self.text()).expect("valid factor")
    }

    pub fn t_degree(self) -> u32 {
        match self {
            Rho::OneMinusT | Rho::OnePlusT | Rho::OneMinusVT => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Rho {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text())
    }
}

/// Coefficient of `t^index / rho^power` in the multiplicity series.
#[derive(Clone, Debug, PartialEq)]
pub struct Slot {
    pub name: &'static str,
    pub rho: Rho,
    pub power: u32,
    pub index: u32,
    pub value: UniRat,
}

/// The multiplicity series as a sum of elementary fractions in `t` with
/// coefficients in `Q(v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    kind: AlgebraKind,
    slots: Vec<Slot>,
}

impl CoefficientTable {
    pub fn from_slots(kind: AlgebraKind, slots: Vec<Slot>) -> Self {
        CoefficientTable { kind, slots }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn get(&self, name: &str) -> Option<&UniRat> {
        self.slots.iter().find(|s| s.name == name).map(|s| &s.value)
    }

    /// Slot value by position; zero if the table has no such slot.
    pub fn slot(&self, rho: Rho, power: u32, index: u32) -> UniRat {
        self.slots
            .iter()
            .find(|s| s.rho == rho && s.power == power && s.index == index)
            .map(|s| s.value.clone())
            .unwrap_or_else(UniRat::zero)
    }

    pub fn has_factor(&self, rho: Rho) -> bool {
        self.slots.iter().any(|s| s.rho == rho)
    }

    /// The table as a partial fraction form in `t` over `Q(v)`.
    pub fn to_partial_fractions(&self) -> PartialFractionForm {
        let mut terms: Vec<PfTerm> = Vec::new();
        for s in &self.slots {
            let factor = s.rho.poly();
            let pos = match terms.iter().position(|t| t.factor == factor && t.power == s.power) {
                Some(p) => p,
                None => {
                    terms.push(PfTerm { numerator: Poly::zero(), factor, power: s.power });
                    terms.len() - 1
                }
            };
            let mut c = terms[pos].numerator.coeffs().to_vec();
            if c.len() <= s.index as usize {
                c.resize(s.index as usize + 1, UniRat::zero());
            }
            c[s.index as usize] = s.value.clone();
            terms[pos].numerator = Poly::new(c);
        }
        terms.retain(|t| !t.numerator.is_zero());
        PartialFractionForm { var: "t".into(), param: Some("v".into()), terms, polynomial_part: Poly::zero() }
    }

    /// Sums the fractions into one reduced rational function in `t, v`.
    pub fn assemble(&self) -> RatFun {
        self.to_partial_fractions().recombine()
    }

    /// Table from a decomposition over the same slot positions as `self`.
    /// Fails if the decomposition has a fraction the table has no slot for.
    fn relabel(&self, pf: &PartialFractionForm) -> Result<CoefficientTable> {
        if !pf.polynomial_part.is_zero() {
            return Err(Error::OutsideBasis("nonzero polynomial part in t".into()));
        }
        for t in &pf.terms {
            for (i, c) in t.numerator.coeffs().iter().enumerate() {
                let known = self
                    .slots
                    .iter()
                    .any(|s| s.rho.poly() == t.factor && s.power == t.power && s.index as usize == i);
                if !c.is_zero() && !known {
                    return Err(Error::OutsideBasis(format!("t^{i}/({})^{}", t.factor, t.power)));
                }
            }
        }
        let slots = self
            .slots
            .iter()
            .map(|s| Slot { value: pf.slot(&s.rho.poly(), s.power, s.index as usize), ..s.clone() })
            .collect();
        Ok(CoefficientTable { kind: self.kind, slots })
    }
}

fn cache<T: Clone>(cells: &'static [OnceLock<T>; 2], kind: AlgebraKind, f: impl FnOnce() -> T) -> T {
    cells[kind.index()].get_or_init(f).clone()
}

/// Parses every stored form and checks that they agree.
fn load_hilbert(kind: AlgebraKind) -> Result<RatFun> {
    let text = data::hilbert_text(kind);
    let parse_all = |forms: &[&str]| -> Result<MPoly> {
        let mut parsed = forms.iter().map(|s| parse_mpoly(s));
        let first = parsed.next().expect("at least one form")?;
        for (i, p) in parsed.enumerate() {
            if p? != first {
                return Err(Error::InvariantViolation(format!(
                    "stored {kind} Hilbert series: form {} does not expand to form 1",
                    i + 2
                )));
            }
        }
        Ok(first)
    };
    let num = parse_all(text.numerator)?;
    let den = parse_all(text.denominator)?;
    let pieces: Vec<MPoly> = ["1-x", "1+x", "1+x+x^2", "1+x^2", "1-y", "1+y", "1+y+y^2", "1+y^2", "1-x*y", "1+x*y"]
        .iter()
        .map(|s| parse_mpoly(s).expect("valid factor"))
        .collect();
    RatFun::new_with_factors(num, den, &pieces)
}

/// Hilbert series `H(x, y)` of the algebra, from the stored data.
pub fn hilbert_series(kind: AlgebraKind) -> RatFun {
    static CELLS: [OnceLock<RatFun>; 2] = [OnceLock::new(), OnceLock::new()];
    cache(&CELLS, kind, || load_hilbert(kind).expect("stored Hilbert series forms are consistent"))
}

/// Stored numerator and denominator texts; the last of each is the most
/// factored form.
pub fn hilbert_forms(kind: AlgebraKind) -> (&'static [&'static str], &'static [&'static str]) {
    let t = data::hilbert_text(kind);
    (t.numerator, t.denominator)
}

/// The Hilbert numerator as stored, before any cancellation.
pub fn hilbert_numerator(kind: AlgebraKind) -> MPoly {
    parse_mpoly(data::hilbert_text(kind).numerator[0]).expect("valid stored numerator")
}

/// Stored coefficient table.
pub fn coefficient_table(kind: AlgebraKind) -> CoefficientTable {
    static CELLS: [OnceLock<CoefficientTable>; 2] = [OnceLock::new(), OnceLock::new()];
    cache(&CELLS, kind, || {
        let slots = data::slot_texts(kind)
            .iter()
            .map(|s| Slot {
                name: s.name,
                rho: s.rho,
                power: s.power,
                index: s.index,
                value: UniRat::from_ratfun(&parse_ratfun(s.text).expect("valid stored slot"), "v")
                    .expect("stored slot is a function of v"),
            })
            .collect();
        CoefficientTable { kind, slots }
    })
}

/// The `(p, q, c)` witness of the stored Hilbert series for the solver.
pub fn rational_shape(kind: AlgebraKind) -> Result<RationalShape> {
    let q = parse_ratfun(data::q_text(kind))?.rename("v", Z);
    let c = parse_ratfun(data::Z_FACTOR)?.rename("v", Z);
    let shape = RationalShape::from_symmetric_numerator(&hilbert_numerator(kind), q, c)?;
    if shape.target()? != hilbert_series(kind) {
        return Err(Error::InvariantViolation(format!("{kind}: (p, q, c) does not reproduce the Hilbert series")));
    }
    Ok(shape)
}

/// Runs the solver on the stored Hilbert series.
pub fn solve(kind: AlgebraKind) -> Result<Solution> {
    static CELLS: [OnceLock<Solution>; 2] = [OnceLock::new(), OnceLock::new()];
    if let Some(s) = CELLS[kind.index()].get() {
        return Ok(s.clone());
    }
    let sol = solve_detailed(&rational_shape(kind)?)?;
    Ok(CELLS[kind.index()].get_or_init(|| sol).clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Stored,
    Solved,
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stored" => Ok(Source::Stored),
            "solved" => Ok(Source::Solved),
            _ => Err(Error::InvalidInput(format!("unknown source {s:?} (stored or solved)"))),
        }
    }
}

fn stored_series(kind: AlgebraKind) -> RatFun {
    static CELLS: [OnceLock<RatFun>; 2] = [OnceLock::new(), OnceLock::new()];
    cache(&CELLS, kind, || coefficient_table(kind).assemble())
}

/// `M'(H)(t, v)`. The solved form is checked against the stored one.
pub fn multiplicity_series(kind: AlgebraKind, source: Source) -> Result<RatFun> {
    let stored = stored_series(kind);
    match source {
        Source::Stored => Ok(stored),
        Source::Solved => {
            let solved = solve(kind)?.series;
            if solved != stored {
                return Err(Error::StoredSolvedMismatch(format!("{kind}: solver output differs from the stored table")));
            }
            Ok(solved)
        }
    }
}

/// The table recomputed by decomposing the solver output in `t`.
pub fn solved_table(kind: AlgebraKind) -> Result<CoefficientTable> {
    let m = solve(kind)?.series;
    let basis = crate::exactarith::FactorBasis::new(
        "t",
        denominator_basis(kind).into_iter().map(|(r, k)| (r.poly(), k)).collect(),
    )?;
    let pf = crate::exactarith::partial_fractions(&m, &basis)?;
    coefficient_table(kind).relabel(&pf)
}

/// `q(t, v)` as factors in `t` with multiplicities.
pub fn denominator_basis(kind: AlgebraKind) -> Vec<(Rho, u32)> {
    let mut out: Vec<(Rho, u32)> = Vec::new();
    for s in coefficient_table(kind).slots() {
        match out.iter_mut().find(|(r, _)| *r == s.rho) {
            Some(e) => e.1 = e.1.max(s.power),
            None => out.push((s.rho, s.power)),
        }
    }
    out
}

/// `m_lambda`: checked to be a nonnegative integer.
pub fn multiplicity(kind: AlgebraKind, l: Partition2) -> Result<BigRat> {
    Ok(multiplicities(kind, &[l])?.remove(0))
}

fn check_natural(kind: AlgebraKind, l: Partition2, m: &BigRat) -> Result<()> {
    if !is_integer(m) || m < &BigRat::from_integer(0.into()) {
        return Err(Error::InvariantViolation(format!("{kind} multiplicity at {l} is {m}, not a nonnegative integer")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::rational::rat;
    use crate::symfunc::{schur_decompose, series_expand};

    #[test]
    fn kinds_parse_and_print() {
        for k in AlgebraKind::ALL {
            assert_eq!(k.to_string().parse::<AlgebraKind>().unwrap(), k);
        }
        assert!("both".parse::<AlgebraKind>().is_err());
    }

    #[test]
    fn hilbert_constant_and_degree_one() {
        let s = series_expand(&hilbert_series(AlgebraKind::Pure), 2).unwrap();
        assert_eq!(s.coeff(0, 0), rat(1));
        assert_eq!(s.coeff(1, 0), rat(1));
        let s = series_expand(&hilbert_series(AlgebraKind::Mixed), 2).unwrap();
        assert_eq!(s.coeff(0, 0), rat(1));
        // X and tr(X).
        assert_eq!(s.coeff(1, 0), rat(2));
    }

    #[test]
    fn small_multiplicities_match_oracle() {
        for kind in AlgebraKind::ALL {
            let oracle = schur_decompose(&series_expand(&hilbert_series(kind), 8).unwrap()).unwrap();
            let ls: Vec<Partition2> = oracle.entries().keys().copied().collect();
            let got = multiplicities(kind, &ls).unwrap();
            for (l, m) in ls.iter().zip(&got) {
                assert_eq!(Some(m), oracle.get(*l), "{kind} {l}");
            }
        }
        let m = |k, a, b| multiplicity(k, Partition2::new(a, b).unwrap()).unwrap();
        assert_eq!(m(AlgebraKind::Pure, 0, 0), rat(1));
        assert_eq!(m(AlgebraKind::Pure, 1, 1), rat(0));
        assert_eq!(m(AlgebraKind::Mixed, 1, 0), rat(2));
    }

    #[test]
    fn table_shapes() {
        let pure = coefficient_table(AlgebraKind::Pure);
        assert!(pure.get("delta_1").unwrap().is_zero());
        let mixed = coefficient_table(AlgebraKind::Mixed);
        assert!(!mixed.has_factor(Rho::Cyclo4));
        assert_eq!(denominator_basis(AlgebraKind::Mixed).iter().find(|(r, _)| *r == Rho::OnePlusT), Some(&(Rho::OnePlusT, 1)));
        assert_eq!(pure.get("gamma_1"), mixed.get("gamma_1"));
    }
}
