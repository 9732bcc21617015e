//! Degree-14 asymptotics of the multiplicities and a report comparing them
//! with exact values along a ray.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{multiplicities, AlgebraKind};
use crate::error::{Error, Result};
use crate::exactarith::rational::{factorial, rat_to_decimal, rat_to_f64, rat_to_string};
use crate::exactarith::BigRat;
use crate::symfunc::Partition2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AsymptoticRegion {
    /// `l1 > 3 l2`
    R1,
    /// `3 l2 >= l1 > 2 l2`
    R2,
    /// `2 l2 >= l1`
    R3,
}

impl AsymptoticRegion {
    pub fn of(l: Partition2) -> Self {
        let (l1, l2) = (l.l1() as u64, l.l2() as u64);
        if l1 > 3 * l2 {
            AsymptoticRegion::R1
        } else if l1 > 2 * l2 {
            AsymptoticRegion::R2
        } else {
            AsymptoticRegion::R3
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticValue {
    pub region: AsymptoticRegion,
    #[serde(serialize_with = "ser_rat")]
    pub m1: BigRat,
    #[serde(serialize_with = "ser_opt_rat")]
    pub m2: Option<BigRat>,
    #[serde(serialize_with = "ser_opt_rat")]
    pub m3: Option<BigRat>,
    #[serde(serialize_with = "ser_rat")]
    pub total: BigRat,
}

fn ser_rat<S: serde::Serializer>(r: &BigRat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rat_to_string(r))
}

fn ser_opt_rat<S: serde::Serializer>(r: &Option<BigRat>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&rat_to_string(r)),
        None => s.serialize_none(),
    }
}

fn term(c: i64, den: BigInt, parts: &[(&BigInt, u32)]) -> BigRat {
    let num = parts.iter().fold(BigInt::from(c), |acc, (b, e)| acc * num_traits::pow((*b).clone(), *e as usize));
    BigRat::new(num, den)
}

fn pow2_3_5(a: u32, b: u32, c: u32) -> BigInt {
    num_traits::pow(BigInt::from(2), a as usize)
        * num_traits::pow(BigInt::from(3), b as usize)
        * num_traits::pow(BigInt::from(5), c as usize)
}

/// Leading-order value of `m_lambda` for the pure algebra.
fn pure_asymptotic(l: Partition2) -> AsymptoticValue {
    let l1 = BigInt::from(l.l1());
    let l2 = BigInt::from(l.l2());
    let p = &l1 - &l2;
    let f = |n: u64| factorial(n);

    let m1 = term(1, pow2_3_5(8, 2, 0) * f(11) * f(3), &[(&p, 3), (&l2, 11)])
        + term(-1, pow2_3_5(8, 3, 0) * f(12) * f(2), &[(&p, 2), (&l2, 12)])
        + term(127, pow2_3_5(10, 4, 0) * f(13), &[(&p, 1), (&l2, 13)])
        + term(-305, pow2_3_5(9, 5, 0) * f(14), &[(&l2, 14)]);
    let region = AsymptoticRegion::of(l);
    let m2 = (region != AsymptoticRegion::R1).then(|| {
        let d = BigInt::from(3) * &l2 - &l1;
        term(1, pow2_3_5(10, 5, 2) * f(14), &[(&d, 14)])
    });
    let m3 = (region == AsymptoticRegion::R3).then(|| {
        let d = BigInt::from(2) * &l2 - &l1;
        term(-1, pow2_3_5(10, 2, 1) * f(13), &[(&p, 1), (&d, 13)]) + term(-7, pow2_3_5(9, 1, 2) * f(14), &[(&d, 14)])
    });
    let total = [Some(&m1), m2.as_ref(), m3.as_ref()].into_iter().flatten().fold(BigRat::zero(), |a, b| a + b);
    AsymptoticValue { region, m1, m2, m3, total }
}

/// The degree-14 approximation of `m_lambda`; the mixed value is 16 times
/// the pure one, component by component.
pub fn asymptotic(kind: AlgebraKind, l: Partition2) -> AsymptoticValue {
    let v = pure_asymptotic(l);
    match kind {
        AlgebraKind::Pure => v,
        AlgebraKind::Mixed => {
            let k = BigRat::from_integer(16.into());
            AsymptoticValue {
                region: v.region,
                m1: &v.m1 * &k,
                m2: v.m2.map(|x| x * &k),
                m3: v.m3.map(|x| x * &k),
                total: v.total * k,
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub scale: u32,
    pub lambda: (u32, u32),
    pub region: AsymptoticRegion,
    #[serde(serialize_with = "ser_rat")]
    pub exact: BigRat,
    #[serde(serialize_with = "ser_rat")]
    pub asymptotic: BigRat,
    /// `exact / asymptotic`; `None` when the asymptotic value is zero.
    #[serde(serialize_with = "ser_opt_rat")]
    pub ratio: Option<BigRat>,
}

impl ConvergenceRow {
    /// `|ratio - 1|` as a float, for display and monotonicity checks.
    pub fn error(&self) -> Option<f64> {
        self.ratio.as_ref().map(|r| rat_to_f64(&(r - BigRat::one()).abs()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub kind: AlgebraKind,
    pub direction: (u32, u32),
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    /// `scale,exact,asymptotic,ratio`; the ratio is a rounded decimal.
    pub fn to_csv(&self, digits: usize) -> String {
        let mut out = String::from("scale,exact,asymptotic,ratio\n");
        for r in &self.rows {
            let ratio = r.ratio.as_ref().map(|x| rat_to_decimal(x, digits)).unwrap_or_else(|| "inf".into());
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.scale,
                rat_to_string(&r.exact),
                rat_to_decimal(&r.asymptotic, digits),
                ratio
            ));
        }
        out
    }

    /// Whether `|ratio - 1|` decreases strictly from row to row (compared
    /// exactly).
    pub fn strictly_converging(&self) -> bool {
        let errs: Vec<Option<BigRat>> =
            self.rows.iter().map(|r| r.ratio.as_ref().map(|x| (x - BigRat::one()).abs())).collect();
        errs.windows(2).all(|w| matches!((&w[0], &w[1]), (Some(a), Some(b)) if b < a))
    }
}

/// Exact multiplicities against the asymptotic formula at `s * (a, b)`.
pub fn asymptotic_convergence_report(
    kind: AlgebraKind,
    direction: (u32, u32),
    scales: &[u32],
) -> Result<ConvergenceReport> {
    let (a, b) = direction;
    if a < b || a.gcd(&b) != 1 {
        return Err(Error::InvalidInput(format!(
            "direction ({a}, {b}) must satisfy a >= b >= 0 with gcd(a, b) = 1"
        )));
    }
    let ls: Vec<Partition2> = scales
        .iter()
        .map(|&s| Partition2::new(s as i64 * a as i64, s as i64 * b as i64))
        .collect::<Result<_>>()?;
    let exact = multiplicities(kind, &ls)?;
    let rows = scales
        .iter()
        .zip(ls)
        .zip(exact)
        .map(|((&scale, l), exact)| {
            let asym = asymptotic(kind, l);
            let ratio = (!asym.total.is_zero()).then(|| &exact / &asym.total);
            ConvergenceRow { scale, lambda: (l.l1(), l.l2()), region: asym.region, exact, asymptotic: asym.total, ratio }
        })
        .collect();
    Ok(ConvergenceReport { kind, direction, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: i64, b: i64) -> Partition2 {
        Partition2::new(a, b).unwrap()
    }

    #[test]
    fn regions_partition_the_chamber() {
        for l1 in 0..40 {
            for l2 in 0..=l1 {
                let r = AsymptoticRegion::of(p(l1, l2));
                let hits = [l1 > 3 * l2, 3 * l2 >= l1 && l1 > 2 * l2, 2 * l2 >= l1];
                assert_eq!(hits.iter().filter(|h| **h).count(), 1);
                let want = [AsymptoticRegion::R1, AsymptoticRegion::R2, AsymptoticRegion::R3][hits.iter().position(|h| *h).unwrap()];
                assert_eq!(r, want);
            }
        }
    }

    #[test]
    fn boundary_and_axis_values() {
        for l1 in [0, 1, 7, 100] {
            assert!(asymptotic(AlgebraKind::Pure, p(l1, 0)).m1.is_zero());
        }
        let v = asymptotic(AlgebraKind::Pure, p(30, 10));
        assert_eq!(v.region, AsymptoticRegion::R2);
        assert_eq!(v.m2, Some(BigRat::zero()));
        let v = asymptotic(AlgebraKind::Pure, p(20, 10));
        assert_eq!(v.region, AsymptoticRegion::R3);
        assert_eq!(v.total, v.m1.clone() + v.m2.clone().unwrap() + v.m3.clone().unwrap());
        let mixed = asymptotic(AlgebraKind::Mixed, p(20, 10));
        assert_eq!(mixed.total, v.total * BigRat::from_integer(16.into()));
    }

    #[test]
    fn m2_constant() {
        // (3 l2 - l1) = 1 at (2, 1).
        let v = asymptotic(AlgebraKind::Pure, p(2, 1));
        let den = BigInt::from(1024) * 243 * 25 * factorial(14);
        assert_eq!(v.m2, Some(BigRat::new(1.into(), den)));
    }

    #[test]
    fn direction_validation() {
        assert!(asymptotic_convergence_report(AlgebraKind::Pure, (1, 2), &[1]).is_err());
        assert!(asymptotic_convergence_report(AlgebraKind::Pure, (4, 2), &[1]).is_err());
    }
}
