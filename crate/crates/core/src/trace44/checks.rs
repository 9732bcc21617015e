//! Named end-to-end checks with JSON diagnostics.

use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use super::{
    asymptotic_convergence_report, displayed_pure_leading, hilbert_series, leading_part, multiplicity_series, scaled,
    solve, AlgebraKind, Source,
};
use crate::error::{Error, Result};
use crate::exactarith::rational::{is_integer, rat_to_f64, rat_to_string};
use crate::exactarith::BigRat;
use crate::multsolver::verify_roundtrip;
use crate::par::ExecMode;
use crate::symfunc::{mult_series_expand, mult_series_truncated, series_expand};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Roundtrip,
    Oracle,
    Prop5,
    StoredVsSolved,
    Asympt,
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "roundtrip" => Check::Roundtrip,
            "oracle" => Check::Oracle,
            "prop5" => Check::Prop5,
            "stored-vs-solved" => Check::StoredVsSolved,
            "asympt" => Check::Asympt,
            _ => return Err(Error::InvalidInput(format!("unknown check {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub pass: bool,
    pub details: Value,
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Truncation degree for the oracle and symmetry checks.
    pub degree: u32,
    pub scales: Vec<u32>,
    pub directions: Vec<(u32, u32)>,
    /// Bound on `|exact / asymptotic - 1|` at the largest scale.
    pub tolerance: f64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            degree: 30,
            scales: vec![64, 128, 256, 512],
            directions: vec![(4, 1), (5, 2), (3, 2)],
            tolerance: 0.15,
        }
    }
}

fn report(check: &str, results: Vec<(AlgebraKind, bool, Value)>) -> CheckReport {
    let pass = results.iter().all(|r| r.1);
    let details = results
        .into_iter()
        .map(|(k, ok, v)| (k.to_string(), json!({ "pass": ok, "info": v })))
        .collect::<serde_json::Map<_, _>>();
    CheckReport { check: check.into(), pass, details: Value::Object(details) }
}

fn err_value(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

pub fn roundtrip() -> CheckReport {
    let rows = AlgebraKind::ALL
        .into_iter()
        .map(|k| {
            let m = match multiplicity_series(k, Source::Stored) {
                Ok(m) => m,
                Err(e) => return (k, false, err_value(&e)),
            };
            let r = verify_roundtrip(&hilbert_series(k), &m);
            (k, r.ok, serde_json::to_value(&r).expect("serializable"))
        })
        .collect();
    report("roundtrip", rows)
}

/// Multiplicity series against the Schur decomposition of the Hilbert
/// series, plus symmetry and integrality, below total degree `degree`.
pub fn oracle(degree: u32) -> CheckReport {
    let rows = AlgebraKind::ALL
        .into_iter()
        .map(|k| match oracle_one(k, degree) {
            Ok(v) => (k, v.0, v.1),
            Err(e) => (k, false, err_value(&e)),
        })
        .collect();
    report("oracle", rows)
}

fn oracle_one(kind: AlgebraKind, degree: u32) -> Result<(bool, Value)> {
    let h = hilbert_series(kind);
    let hs = series_expand(&h, degree)?;
    if !hs.is_symmetric() {
        return Ok((false, json!({ "symmetric": false })));
    }
    let want = mult_series_truncated(&h, degree)?;
    let m = multiplicity_series(kind, Source::Stored)?;
    let got = mult_series_expand(&m, degree.saturating_sub(1), ExecMode::default())?;
    for (&(p, q), c) in want.iter() {
        if &got.coeff(p, q) != c {
            return Ok((
                false,
                json!({ "t_exponent": p, "v_exponent": q, "expected": rat_to_string(c), "found": rat_to_string(&got.coeff(p, q)) }),
            ));
        }
    }
    for (&(p, q), c) in got.iter() {
        if want.coeff(p, q) != *c {
            return Ok((false, json!({ "t_exponent": p, "v_exponent": q, "unexpected": rat_to_string(c) })));
        }
        if !is_integer(c) || c < &BigRat::from_integer(0.into()) {
            return Ok((false, json!({ "t_exponent": p, "v_exponent": q, "not_natural": rat_to_string(c) })));
        }
    }
    Ok((true, json!({ "max_total_degree": degree - 1, "nonzero": want.iter().count(), "symmetric": true })))
}

pub fn prop5() -> CheckReport {
    let pure = match leading_part(AlgebraKind::Pure) {
        Ok(p) => p,
        Err(e) => return report("prop5", vec![(AlgebraKind::Pure, false, err_value(&e))]),
    };
    let shown = displayed_pure_leading();
    let pure_ok = pure.leading == shown;
    let mut rows = vec![(
        AlgebraKind::Pure,
        pure_ok,
        json!({ "max_degree": pure.max_degree, "leading": pure.leading.iter().map(|f| f.to_string()).collect::<Vec<_>>() }),
    )];
    let mixed = match leading_part(AlgebraKind::Mixed) {
        Ok(m) => {
            let ok = m.leading == scaled(&pure.leading, &BigRat::from_integer(16.into()));
            (AlgebraKind::Mixed, ok, json!({ "max_degree": m.max_degree, "sixteen_times_pure": ok }))
        }
        Err(e) => (AlgebraKind::Mixed, false, err_value(&e)),
    };
    rows.push(mixed);
    report("prop5", rows)
}

pub fn stored_vs_solved() -> CheckReport {
    let rows = AlgebraKind::ALL
        .into_iter()
        .map(|k| {
            let sol = match solve(k) {
                Ok(s) => s,
                Err(e) => return (k, false, err_value(&e)),
            };
            let equal = multiplicity_series(k, Source::Solved).is_ok();
            let ok = equal && sol.numerator_degree <= sol.degree_bound;
            (k, ok, json!({ "equal": equal, "numerator_t_degree": sol.numerator_degree, "degree_bound": sol.degree_bound }))
        })
        .collect();
    report("stored-vs-solved", rows)
}

pub fn asympt(opts: &CheckOptions) -> CheckReport {
    let rows = AlgebraKind::ALL
        .into_iter()
        .map(|k| {
            let mut ok = true;
            let mut per_dir = Vec::new();
            for &d in &opts.directions {
                match asymptotic_convergence_report(k, d, &opts.scales) {
                    Ok(r) => {
                        let last = r.rows.last().and_then(|row| row.error());
                        let finite_positive = r.rows.iter().all(|row| row.ratio.as_ref().is_some_and(|x| rat_to_f64(x) > 0.0));
                        let within = last.is_some_and(|e| e <= opts.tolerance);
                        let dir_ok = finite_positive && r.strictly_converging() && within;
                        ok &= dir_ok;
                        per_dir.push(json!({
                            "direction": [d.0, d.1],
                            "pass": dir_ok,
                            "errors": r.rows.iter().map(|row| row.error()).collect::<Vec<_>>(),
                        }));
                    }
                    Err(e) => {
                        ok = false;
                        per_dir.push(err_value(&e));
                    }
                }
            }
            (k, ok, Value::Array(per_dir))
        })
        .collect();
    report("asympt", rows)
}

pub fn run(check: Check, opts: &CheckOptions) -> CheckReport {
    match check {
        Check::Roundtrip => roundtrip(),
        Check::Oracle => oracle(opts.degree),
        Check::Prop5 => prop5(),
        Check::StoredVsSolved => stored_vs_solved(),
        Check::Asympt => asympt(opts),
    }
}
