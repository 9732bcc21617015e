//! Symmetric functions in two variables and their multiplicity series.
//!
//! A symmetric series `f(x, y) = sum m(l1, l2) S_(l1,l2)(x, y)` has
//! multiplicity series `M'(f)(t, v) = sum m(l1, l2) t^(l1-l2) v^l2`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactarith::{rational::rat_to_string, BigRat, MPoly, RatFun};
use crate::par::{self, ExecMode};

/// Default total-degree truncation for oracle comparisons.
pub const DEFAULT_TRUNCATION: u32 = 30;

/// `(l1, l2)` with `l1 >= l2 >= 0`. Ordered by total degree, then `l2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Partition2 {
    l1: u32,
    l2: u32,
}

impl Partition2 {
    pub fn new(l1: i64, l2: i64) -> Result<Self> {
        if l2 < 0 || l1 < l2 || l1 > u32::MAX as i64 {
            return Err(Error::InvalidPartition(l1, l2));
        }
        Ok(Partition2 { l1: l1 as u32, l2: l2 as u32 })
    }

    pub fn l1(&self) -> u32 {
        self.l1
    }

    pub fn l2(&self) -> u32 {
        self.l2
    }

    /// `l1 - l2`, the exponent of `t` in the multiplicity series.
    pub fn p(&self) -> u32 {
        self.l1 - self.l2
    }

    pub fn size(&self) -> u32 {
        self.l1 + self.l2
    }

    /// All partitions with `l1 + l2 <= n`, in table order.
    pub fn up_to(n: u32) -> Vec<Partition2> {
        (0..=n)
            .flat_map(|d| (0..=d / 2).map(move |l2| Partition2 { l1: d - l2, l2 }))
            .collect()
    }
}

impl Ord for Partition2 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.size(), self.l2).cmp(&(other.size(), other.l2))
    }
}

impl PartialOrd for Partition2 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l1, self.l2)
    }
}

/// `S_l(x, y) = (xy)^l2 (x^p + x^(p-1) y + ... + y^p)`.
pub fn schur(l: Partition2) -> MPoly {
    let vars = vec!["x".to_string(), "y".to_string()];
    let p = l.p();
    MPoly::from_terms(
        &vars,
        (0..=p).map(|i| (vec![l.l2 + p - i, l.l2 + i], BigRat::one())),
    )
}

/// Truncated power series in two named variables. Only terms of weighted
/// degree `w0*a + w1*b <= max_degree` are represented; zero coefficients
/// are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    vars: [String; 2],
    weights: [u32; 2],
    max_degree: u32,
    coeffs: BTreeMap<(u32, u32), BigRat>,
}

impl TruncSeries {
    pub fn new(vars: [&str; 2], weights: [u32; 2], max_degree: u32) -> Self {
        assert!(weights[0] > 0 && weights[1] > 0, "weights must be positive");
        TruncSeries {
            vars: [vars[0].to_string(), vars[1].to_string()],
            weights,
            max_degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> [&str; 2] {
        [&self.vars[0], &self.vars[1]]
    }

    pub fn weights(&self) -> [u32; 2] {
        self.weights
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn degree_of(&self, a: u32, b: u32) -> u64 {
        self.weights[0] as u64 * a as u64 + self.weights[1] as u64 * b as u64
    }

    pub fn in_range(&self, a: u32, b: u32) -> bool {
        self.degree_of(a, b) <= self.max_degree as u64
    }

    /// Coefficient of `vars[0]^a vars[1]^b`; zero when absent.
    pub fn coeff(&self, a: u32, b: u32) -> BigRat {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn set(&mut self, a: u32, b: u32, c: BigRat) {
        assert!(self.in_range(a, b), "term outside the truncation");
        if c.is_zero() {
            self.coeffs.remove(&(a, b));
        } else {
            self.coeffs.insert((a, b), c);
        }
    }

    /// Nonzero terms.
    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &BigRat)> {
        self.coeffs.iter()
    }

    /// Exponent pairs within the truncation, by weighted degree.
    pub fn support(&self) -> Vec<(u32, u32)> {
        let n = self.max_degree;
        let mut out = Vec::new();
        for d in 0..=n {
            out.extend(slice(self.weights, d));
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    fn first_asymmetry(&self) -> Option<(u32, u32)> {
        if self.weights[0] != self.weights[1] {
            return self.coeffs.keys().find(|(a, b)| a != b).copied();
        }
        self.coeffs
            .iter()
            .find(|((a, b), c)| self.coeff(*b, *a) != **c)
            .map(|(k, _)| *k)
    }

    /// Restriction to a smaller weighted degree.
    pub fn truncate(&self, max_degree: u32) -> Self {
        let mut out = TruncSeries { max_degree, coeffs: BTreeMap::new(), ..self.clone() };
        for (&(a, b), c) in &self.coeffs {
            if out.in_range(a, b) {
                out.coeffs.insert((a, b), c.clone());
            }
        }
        out
    }

    pub fn to_mpoly(&self) -> MPoly {
        let vars = vec![self.vars[0].clone(), self.vars[1].clone()];
        MPoly::from_terms(&vars, self.coeffs.iter().map(|(&(a, b), c)| (vec![a, b], c.clone())))
    }
}

/// Exponent pairs of weighted degree exactly `d`.
fn slice(weights: [u32; 2], d: u32) -> Vec<(u32, u32)> {
    (0..=d / weights[1])
        .filter_map(|b| {
            let rest = d - b * weights[1];
            rest.is_multiple_of(weights[0]).then_some((rest / weights[0], b))
        })
        .collect()
}

/// Dense coefficient table of a polynomial in two variables, truncated.
fn dense_terms(p: &MPoly, vars: &[String; 2], weights: [u32; 2], n: u32) -> Result<Vec<((u32, u32), BigRat)>> {
    let idx: Vec<usize> = p
        .vars()
        .iter()
        .map(|v| {
            vars.iter().position(|w| w == v).ok_or_else(|| Error::UnexpectedVariable {
                expected: format!("{} or {}", vars[0], vars[1]),
                found: v.clone(),
            })
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (m, c) in p.terms() {
        let mut e = [0u32; 2];
        for (k, &i) in idx.iter().enumerate() {
            e[i] = m[k];
        }
        if weights[0] as u64 * e[0] as u64 + weights[1] as u64 * e[1] as u64 <= n as u64 {
            out.push(((e[0], e[1]), c.clone()));
        }
    }
    Ok(out)
}

/// Taylor coefficients of `f` in `x, y` up to total degree `n`.
pub fn series_expand(f: &RatFun, n: u32) -> Result<TruncSeries> {
    series_expand_in(f, ["x", "y"], [1, 1], n, ExecMode::default())
}

/// Taylor coefficients of `f` in two named variables up to weighted degree
/// `n`, via the recurrence `d0 c_m = num_m - sum_{k != 0} d_k c_(m-k)`.
/// Each weighted-degree slice depends only on lower slices and is computed
/// in parallel in `Parallel` mode.
pub fn series_expand_in(f: &RatFun, vars: [&str; 2], weights: [u32; 2], n: u32, mode: ExecMode) -> Result<TruncSeries> {
    let mut out = TruncSeries::new(vars, weights, n);
    let num = dense_terms(f.num(), &out.vars, weights, n)?;
    let den = dense_terms(f.den(), &out.vars, weights, n)?;
    let d0 = den
        .iter()
        .find(|(e, _)| *e == (0, 0))
        .map(|(_, c)| c.clone())
        .ok_or(Error::NoSeriesExpansion)?;

    // Clear denominators so the recurrence runs over Z when d0 = +-1.
    let l = crate::exactarith::rational::lcm_denoms(num.iter().chain(den.iter()).map(|(_, c)| c));
    let lr = BigRat::from_integer(l);
    let zi = |c: &BigRat| -> BigInt { (c * &lr).to_integer() };
    let dz: Vec<((u32, u32), BigInt)> = den.iter().filter(|(e, _)| *e != (0, 0)).map(|(e, c)| (*e, zi(c))).collect();
    let nz: BTreeMap<(u32, u32), BigInt> = num.iter().map(|(e, c)| (*e, zi(c))).collect();
    let d0z = zi(&d0);

    let amax = (n / weights[0]) as usize;
    let bmax = (n / weights[1]) as usize;
    let mut table: Vec<Vec<BigRat>> = vec![vec![BigRat::zero(); bmax + 1]; amax + 1];
    let unit = d0z.is_one() || (-&d0z).is_one();
    let d0r = BigRat::from_integer(d0z.clone());

    for d in 0..=n {
        let cells = slice(weights, d);
        let t = &table;
        let values: Vec<BigRat> = par::map(mode, &cells, |&(a, b)| {
            let mut acc = nz.get(&(a, b)).cloned().unwrap_or_default();
            if unit {
                let mut acc_z = acc;
                for ((i, j), dk) in &dz {
                    if *i <= a && *j <= b {
                        let prev = &t[(a - i) as usize][(b - j) as usize];
                        if !prev.is_zero() {
                            acc_z -= dk * prev.numer();
                        }
                    }
                }
                if d0z.is_one() {
                    BigRat::from_integer(acc_z)
                } else {
                    BigRat::from_integer(-acc_z)
                }
            } else {
                let mut accr = BigRat::from_integer(std::mem::take(&mut acc));
                for ((i, j), dk) in &dz {
                    if *i <= a && *j <= b {
                        let prev = &t[(a - i) as usize][(b - j) as usize];
                        if !prev.is_zero() {
                            accr -= prev * BigRat::from_integer(dk.clone());
                        }
                    }
                }
                accr / &d0r
            }
        });
        for ((a, b), c) in cells.into_iter().zip(values) {
            if !c.is_zero() {
                out.coeffs.insert((a, b), c.clone());
            }
            table[a as usize][b as usize] = c;
        }
    }
    Ok(out)
}

/// Schur multiplicities `m(l1, l2) = c(l1, l2) - c(l1 + 1, l2 - 1)` of a
/// symmetric series in x, y. The top diagonal `l1 + l2 = N` is dropped
/// because its correction term lies outside the truncation.
pub fn schur_decompose(s: &TruncSeries) -> Result<MultTable> {
    if s.weights != [1, 1] {
        return Err(Error::InvalidInput("Schur decomposition needs a series in x, y with unit weights".into()));
    }
    if let Some((a, b)) = s.first_asymmetry() {
        return Err(Error::NotSymmetric(a, b));
    }
    let Some(top) = s.max_degree.checked_sub(1) else {
        return Ok(MultTable { max_total_degree: None, entries: BTreeMap::new() });
    };
    let entries = Partition2::up_to(top)
        .into_iter()
        .map(|l| {
            let c = s.coeff(l.l1, l.l2);
            let m = if l.l2 == 0 { c } else { c - s.coeff(l.l1 + 1, l.l2 - 1) };
            (l, m)
        })
        .collect();
    Ok(MultTable { max_total_degree: Some(top), entries })
}

/// Multiplicities `m(l)` for all `l1 + l2 <= max_total_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    max_total_degree: Option<u32>,
    entries: BTreeMap<Partition2, BigRat>,
}

impl MultTable {
    pub fn from_entries(max_total_degree: u32, entries: BTreeMap<Partition2, BigRat>) -> Self {
        MultTable { max_total_degree: Some(max_total_degree), entries }
    }

    /// Largest `l1 + l2` covered; `None` for an empty table.
    pub fn max_total_degree(&self) -> Option<u32> {
        self.max_total_degree
    }

    pub fn get(&self, l: Partition2) -> Option<&BigRat> {
        self.entries.get(&l)
    }

    pub fn entries(&self) -> &BTreeMap<Partition2, BigRat> {
        &self.entries
    }

    /// First entry that is negative or not an integer.
    pub fn first_non_natural(&self) -> Option<(Partition2, BigRat)> {
        self.entries
            .iter()
            .find(|(_, m)| !m.is_integer() || *m < &BigRat::zero())
            .map(|(l, m)| (*l, m.clone()))
    }

    /// Nonzero entries only.
    pub fn nonzero(&self) -> BTreeMap<Partition2, BigRat> {
        self.entries.iter().filter(|(_, m)| !m.is_zero()).map(|(l, m)| (*l, m.clone())).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let json: MultTableJson = self.into();
        serde_json::to_value(json).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let json: MultTableJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let mut entries = BTreeMap::new();
        for e in json.entries {
            let l = Partition2::new(e.lambda[0] as i64, e.lambda[1] as i64)?;
            entries.insert(l, crate::exactarith::rational::parse_rat(&e.m)?);
        }
        Ok(MultTable { max_total_degree: Some(json.max_total_degree), entries })
    }

    /// CSV with header `lambda1,lambda2,m`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("lambda1,lambda2,m\n");
        for (l, m) in &self.entries {
            s.push_str(&format!("{},{},{}\n", l.l1, l.l2, rat_to_string(m)));
        }
        s
    }
}

#[derive(Serialize, Deserialize)]
struct MultEntryJson {
    lambda: [u32; 2],
    m: String,
}

#[derive(Serialize, Deserialize)]
struct MultTableJson {
    #[serde(rename = "maxTotalDegree")]
    max_total_degree: u32,
    entries: Vec<MultEntryJson>,
}

impl From<&MultTable> for MultTableJson {
    fn from(t: &MultTable) -> Self {
        MultTableJson {
            max_total_degree: t.max_total_degree.unwrap_or(0),
            entries: t
                .entries
                .iter()
                .map(|(l, m)| MultEntryJson { lambda: [l.l1, l.l2], m: rat_to_string(m) })
                .collect(),
        }
    }
}

/// `M'(f)` truncated to `l1 + l2 <= n - 1`, as a series in `t, v` with
/// weights `(1, 2)` (so the weighted degree of `t^p v^q` is `l1 + l2`).
pub fn mult_series_truncated(f: &RatFun, n: u32) -> Result<TruncSeries> {
    let table = schur_decompose(&series_expand(f, n)?)?;
    Ok(table_to_series(&table))
}

pub fn table_to_series(table: &MultTable) -> TruncSeries {
    let mut out = TruncSeries::new(["t", "v"], [1, 2], table.max_total_degree.unwrap_or(0));
    for (l, m) in &table.entries {
        out.set(l.p(), l.l2, m.clone());
    }
    out
}

/// Multiplicity series of a rational function in `t, v` expanded to
/// `l1 + l2 <= n`.
pub fn mult_series_expand(m: &RatFun, n: u32, mode: ExecMode) -> Result<TruncSeries> {
    series_expand_in(m, ["t", "v"], [1, 2], n, mode)
}

/// `M(f)(t, u)` from `M'(f)(t, v)` by `v <- t u`.
pub fn to_tu_form(m: &RatFun) -> Result<RatFun> {
    let tu = MPoly::var("t").mul(&MPoly::var("u"));
    m.substitute_poly(&[("v", &tu)])
}

/// `f(x, y) = (x M(x, xy) - y M(y, xy)) / (x - y)`, the symmetric function
/// whose multiplicity series is `m`. The quotient by `x - y` is checked to
/// be exact.
#[allow(non_snake_case)]
pub fn inverse_M(m: &RatFun) -> Result<RatFun> {
    for v in m.vars() {
        if v != "t" && v != "v" {
            return Err(Error::UnexpectedVariable { expected: "t or v".into(), found: v });
        }
    }
    let x = MPoly::var("x");
    let y = MPoly::var("y");
    let e = x.mul(&y);
    let at_x = |p: &MPoly| p.substitute_all(&[("t", &x), ("v", &e)]);
    let at_y = |p: &MPoly| p.substitute_all(&[("t", &y), ("v", &e)]);
    let (n, d) = (m.num(), m.den());
    let (nx, ny, dx, dy) = (at_x(n), at_y(n), at_x(d), at_y(d));
    let (num, den, pieces) = if dx == dy {
        let num = x.mul(&nx).sub(&y.mul(&ny));
        (num, dx, d.squarefree_chain().iter().map(at_x).collect::<Vec<_>>())
    } else {
        let num = x.mul(&nx).mul(&dy).sub(&y.mul(&ny).mul(&dx));
        let chain = d.squarefree_chain();
        let pieces = chain.iter().map(at_x).chain(chain.iter().map(at_y)).collect();
        (num, dx.mul(&dy), pieces)
    };
    let q = num.exact_div(&x.sub(&y)).map_err(|_| Error::InvalidMultiplicitySeries)?;
    RatFun::new_with_factors(q, den, &pieces)
}
