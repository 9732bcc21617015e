use std::process::ExitCode;
use std::time::Instant;

use num_traits::{Signed, Zero};

use tracemult::exactarith::rational::{is_integer, rat_to_f64, ratio};
use tracemult::exactarith::UniRat;
use tracemult::expr::parse_ratfun;
use tracemult::symfunc::{series_expand, Partition2};
use tracemult::trace44::checks::{self, CheckOptions};
use tracemult::trace44::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn from_check(r: checks::CheckReport) -> Outcome {
    let text = r.details.to_string();
    if r.pass {
        Ok(text)
    } else {
        Err(text)
    }
}

fn ensure(ok: bool, msg: String) -> Outcome {
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn v(text: &str) -> UniRat {
    UniRat::from_ratfun(&parse_ratfun(text).expect("valid"), "v").expect("univariate")
}

fn round_trip() -> Outcome {
    from_check(checks::roundtrip())
}

fn solver_reproduction() -> Outcome {
    let r = checks::stored_vs_solved();
    let pure = solve(AlgebraKind::Pure).map_err(|e| e.to_string())?;
    if pure.numerator_degree > 12 {
        return Err(format!("pure numerator t-degree {}", pure.numerator_degree));
    }
    from_check(r)
}

fn oracle() -> Outcome {
    from_check(checks::oracle(30))
}

fn leading_part_check() -> Outcome {
    let pure = leading_part(AlgebraKind::Pure).map_err(|e| e.to_string())?;
    let coeffs: Vec<_> = pure.leading.iter().map(|f| f.coeff.clone()).collect();
    for want in [ratio(127, 1024 * 81), ratio(-305, 512 * 243), ratio(-7, 512 * 3 * 25)] {
        if !coeffs.contains(&want) {
            return Err(format!("coefficient {want} missing"));
        }
    }
    from_check(checks::prop5())
}

fn spot_checks() -> Outcome {
    let pure = coefficient_table(AlgebraKind::Pure);
    let mixed = coefficient_table(AlgebraKind::Mixed);
    let gamma_1 = v("1/(9*(1-v)^3*(1+v+v^2)^5*(1-v+v^2))");
    let delta_1 = pure.get("delta_1").is_some_and(|x| x.is_zero());
    let gamma = pure.get("gamma_1") == Some(&gamma_1) && mixed.get("gamma_1") == Some(&gamma_1);
    let eps = mixed.get("epsilon_2").is_some_and(|x| x.num() == v("-1*v^8").num());
    ensure(delta_1 && gamma && eps, format!("delta_1 = 0: {delta_1}, gamma_1 shared: {gamma}, mixed epsilon_2 numerator -v^8: {eps}"))
}

fn natural() -> Outcome {
    let ls = Partition2::up_to(29);
    for kind in AlgebraKind::ALL {
        let ms = multiplicities(kind, &ls).map_err(|e| e.to_string())?;
        if let Some((l, m)) = ls.iter().zip(&ms).find(|(_, m)| !is_integer(m) || m.is_negative()) {
            return Err(format!("{kind} {l}: {m}"));
        }
    }
    Ok(format!("{} partitions per kind", ls.len()))
}

fn asymptotics() -> Outcome {
    from_check(checks::asympt(&CheckOptions::default()))
}

fn growth() -> Outcome {
    let s = 256;
    let mut msgs = Vec::new();
    let mut ok = true;
    for kind in AlgebraKind::ALL {
        let ls = [Partition2::new(3 * s, 2 * s).unwrap(), Partition2::new(6 * s, 4 * s).unwrap()];
        let ms = multiplicities(kind, &ls).map_err(|e| e.to_string())?;
        let slope = (rat_to_f64(&ms[1]) / rat_to_f64(&ms[0])).log2();
        ok &= (slope - 14.0).abs() <= 0.2;
        msgs.push(format!("{kind}: log2 ratio {slope:.4}"));
    }
    ensure(ok, msgs.join(", "))
}

fn symmetry() -> Outcome {
    for kind in AlgebraKind::ALL {
        let s = series_expand(&hilbert_series(kind), 30).map_err(|e| e.to_string())?;
        if !s.is_symmetric() {
            return Err(format!("{kind} Hilbert series not symmetric"));
        }
    }
    Ok("a + b <= 29".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 round trip", round_trip),
        ("2 solver reproduces stored series", solver_reproduction),
        ("3 oracle equivalence N=30", oracle),
        ("4 leading part", leading_part_check),
        ("5 coefficient spot checks", spot_checks),
        ("6 multiplicities are natural", natural),
        ("7 asymptotic convergence", asymptotics),
        ("8 degree-14 growth", growth),
        ("9 Hilbert series symmetry", symmetry),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS  {name} ({secs:.1}s): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name} ({secs:.1}s): {msg}");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
