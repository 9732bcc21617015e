//! Coefficients of the multiplicity series far from the origin, in two
//! univariate steps: `[t^p]` of each fraction `c(v) t^b / rho^k` is
//! `c(v) e_(p-b)(v)` with `e_n = [t^n] rho^(-k)` a sparse polynomial in
//! `v`, and `[v^q]` of that needs the Taylor series of `c(v)` only up to
//! `v^q`.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{check_natural, coefficient_table, AlgebraKind, CoefficientTable, Rho};
use crate::error::Result;
use crate::exactarith::{BigRat, UniRat};
use crate::par::{self, ExecMode};
use crate::symfunc::Partition2;

type Sparse = Vec<(u32, BigInt)>;

#[derive(Clone, Debug)]
struct Term {
    rho: Rho,
    power: u32,
    index: u32,
    value: UniRat,
}

#[derive(Clone, Debug)]
pub struct CoefficientEngine {
    terms: Vec<Term>,
}

/// `[t^n] rho^(-k)` for `n <= nmax`, each as sparse `v`-polynomial.
fn inverse_power_series(rho: Rho, k: u32, nmax: usize) -> Vec<Sparse> {
    let r = rho.poly().pow(k);
    let by_t = r.coeffs_in("t");
    let deg = by_t.keys().next_back().copied().unwrap_or(0) as usize;
    let mut rows: Vec<Sparse> = vec![Vec::new(); deg + 1];
    for (i, c) in by_t {
        rows[i as usize] = c
            .coeffs_in("v")
            .into_iter()
            .map(|(j, cj)| (j, cj.constant_term().to_integer()))
            .collect();
    }
    debug_assert_eq!(rows[0], vec![(0, BigInt::one())]);
    let mut e: Vec<Sparse> = Vec::with_capacity(nmax + 1);
    e.push(vec![(0, BigInt::one())]);
    for n in 1..=nmax {
        let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
        for i in 1..=deg.min(n) {
            for (a, ca) in &rows[i] {
                for (b, cb) in &e[n - i] {
                    *acc.entry(a + b).or_insert_with(BigInt::zero) -= ca * cb;
                }
            }
        }
        e.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    }
    e
}

impl CoefficientEngine {
    pub fn new(table: &CoefficientTable) -> Self {
        let terms = table
            .slots()
            .iter()
            .filter(|s| !s.value.is_zero())
            .map(|s| Term { rho: s.rho, power: s.power, index: s.index, value: s.value.clone() })
            .collect();
        CoefficientEngine { terms }
    }

    /// Coefficients of `t^p v^q` for each query `(p, q)`.
    pub fn coefficients(&self, queries: &[(u32, u32)], mode: ExecMode) -> Result<Vec<BigRat>> {
        let Some(pmax) = queries.iter().map(|q| q.0).max() else {
            return Ok(Vec::new());
        };
        let qmax = queries.iter().map(|q| q.1).max().unwrap_or(0) as usize;
        let series = par::try_map(mode, &self.terms, |t| t.value.series(qmax))?;

        let mut keys: Vec<(Rho, u32)> = self.terms.iter().map(|t| (t.rho, t.power)).collect();
        keys.sort();
        keys.dedup();
        let tables = par::map(mode, &keys, |&(rho, k)| inverse_power_series(rho, k, pmax as usize));
        let expansions: HashMap<(Rho, u32), Vec<Sparse>> = keys.into_iter().zip(tables).collect();

        Ok(par::map(mode, queries, |&(p, q)| {
            let mut acc = BigRat::zero();
            for (t, s) in self.terms.iter().zip(&series) {
                let Some(n) = p.checked_sub(t.index) else { continue };
                for (j, c) in &expansions[&(t.rho, t.power)][n as usize] {
                    if let Some(i) = q.checked_sub(*j) {
                        acc += &s[i as usize] * BigRat::from_integer(c.clone());
                    }
                }
            }
            acc
        }))
    }
}

fn engine(kind: AlgebraKind) -> &'static CoefficientEngine {
    static CELLS: [OnceLock<CoefficientEngine>; 2] = [OnceLock::new(), OnceLock::new()];
    CELLS[kind.index()].get_or_init(|| CoefficientEngine::new(&coefficient_table(kind)))
}

/// Exact multiplicities of the algebra at each partition, each checked to
/// be a nonnegative integer.
pub fn multiplicities(kind: AlgebraKind, ls: &[Partition2]) -> Result<Vec<BigRat>> {
    let queries: Vec<(u32, u32)> = ls.iter().map(|l| (l.p(), l.l2())).collect();
    let out = engine(kind).coefficients(&queries, ExecMode::default())?;
    for (l, m) in ls.iter().zip(&out) {
        check_natural(kind, *l, m)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::rational::binomial;

    #[test]
    fn inverse_powers_of_linear_factors() {
        let e = inverse_power_series(Rho::OneMinusT, 3, 10);
        assert_eq!(e[10], vec![(0, binomial(12, 2))]);
        let e = inverse_power_series(Rho::OneMinusVT2, 2, 9);
        assert_eq!(e[8], vec![(4, binomial(5, 1))]);
        assert!(e[9].is_empty());
        let e = inverse_power_series(Rho::Cyclo3, 1, 6);
        let c: Vec<i64> = e.iter().map(|s| s.first().map_or(0, |x| i64::try_from(&x.1).unwrap())).collect();
        assert_eq!(c, vec![1, -1, 0, 1, -1, 0, 1]);
    }

    #[test]
    fn modes_agree() {
        let table = coefficient_table(AlgebraKind::Mixed);
        let e = CoefficientEngine::new(&table);
        let qs = [(0, 0), (5, 3), (40, 17), (3, 60)];
        assert_eq!(
            e.coefficients(&qs, ExecMode::Sequential).unwrap(),
            e.coefficients(&qs, ExecMode::Parallel).unwrap()
        );
    }
}
