use num_traits::Zero;

use tracemult::exactarith::rational::{rat, ratio};
use tracemult::exactarith::{BigRat, MPoly, RatFun, UniRat};
use tracemult::expr::{parse_mpoly, parse_ratfun};
use tracemult::par::ExecMode;
use tracemult::symfunc::{inverse_M, mult_series_expand, schur_decompose, series_expand, Partition2};
use tracemult::trace44::*;

fn l(a: i64, b: i64) -> Partition2 {
    Partition2::new(a, b).unwrap()
}

fn v(text: &str) -> UniRat {
    UniRat::from_ratfun(&parse_ratfun(text).unwrap(), "v").unwrap()
}

#[test]
fn stored_hilbert_forms_agree() {
    for kind in AlgebraKind::ALL {
        let (nums, dens) = hilbert_forms(kind);
        let first = parse_mpoly(dens[0]).unwrap();
        for d in dens {
            assert_eq!(parse_mpoly(d).unwrap(), first);
        }
        let first = parse_mpoly(nums[0]).unwrap();
        for n in nums {
            assert_eq!(parse_mpoly(n).unwrap(), first);
        }
    }
    // The two numerator displays of the pure algebra expand to the same polynomial.
    assert_eq!(hilbert_forms(AlgebraKind::Pure).0.len(), 2);
}

#[test]
fn hilbert_series_are_symmetric_with_unit_constant() {
    for kind in AlgebraKind::ALL {
        let s = series_expand(&hilbert_series(kind), 12).unwrap();
        assert!(s.is_symmetric());
        assert_eq!(s.coeff(0, 0), rat(1));
    }
}

#[test]
fn low_degree_multiplicities() {
    assert_eq!(multiplicity(AlgebraKind::Pure, l(0, 0)).unwrap(), rat(1));
    assert_eq!(multiplicity(AlgebraKind::Pure, l(1, 1)).unwrap(), rat(0));
    assert_eq!(multiplicity(AlgebraKind::Mixed, l(1, 0)).unwrap(), rat(2));
}

#[test]
fn engine_matches_bivariate_expansion() {
    for kind in AlgebraKind::ALL {
        let m = multiplicity_series(kind, Source::Stored).unwrap();
        let s = mult_series_expand(&m, 60, ExecMode::default()).unwrap();
        let ls: Vec<Partition2> = Partition2::up_to(60).into_iter().filter(|p| p.l1() % 7 == 0).collect();
        let got = multiplicities(kind, &ls).unwrap();
        for (p, m) in ls.iter().zip(got) {
            assert_eq!(s.coeff(p.p(), p.l2()), m, "{kind} {p}");
        }
    }
}

#[test]
fn grid_dimension_count_matches_diagonal_hilbert_coefficients() {
    // sum over l1 + l2 = k of m(l) * dim S_l equals the total degree-k coefficient.
    let n = 14;
    for kind in AlgebraKind::ALL {
        let h = series_expand(&hilbert_series(kind), n).unwrap();
        let ls = Partition2::up_to(n);
        let ms = multiplicities(kind, &ls).unwrap();
        for k in 0..=n {
            let dim: BigRat = (0..=k).map(|a| h.coeff(a, k - a)).sum();
            let from_m: BigRat = ls
                .iter()
                .zip(&ms)
                .filter(|(p, _)| p.size() == k)
                .map(|(p, m)| m * rat(p.p() as i64 + 1))
                .sum();
            assert_eq!(dim, from_m, "{kind} degree {k}");
        }
    }
}

#[test]
fn table_spot_checks() {
    let pure = coefficient_table(AlgebraKind::Pure);
    let mixed = coefficient_table(AlgebraKind::Mixed);
    assert!(pure.get("delta_1").unwrap().is_zero());
    let gamma_1 = v("1/(9*(1-v)^3*(1+v+v^2)^5*(1-v+v^2))");
    assert_eq!(pure.get("gamma_1"), Some(&gamma_1));
    assert_eq!(mixed.get("gamma_1"), Some(&gamma_1));
    let eps2 = mixed.get("epsilon_2").unwrap();
    assert_eq!(eps2.num(), &UniRat::from_ratfun(&parse_ratfun("-1*v^8").unwrap(), "v").unwrap().num().clone());
    assert!(!mixed.has_factor(Rho::Cyclo4));
    assert!(mixed.get("beta_2").is_none());
    assert!(mixed.get("beta").is_some());
}

#[test]
fn solver_reproduces_tables() {
    for kind in AlgebraKind::ALL {
        let stored = coefficient_table(kind);
        let solved = solved_table(kind).unwrap();
        for (a, b) in stored.slots().iter().zip(solved.slots()) {
            assert_eq!(a.value, b.value, "{kind} {}", a.name);
        }
    }
    let sol = solve(AlgebraKind::Pure).unwrap();
    assert!(sol.numerator_degree <= 12);
    assert_eq!(sol.degree_bound, 12);
}

#[test]
fn positive_pure_epsilon_2_breaks_roundtrip() {
    let table = coefficient_table(AlgebraKind::Pure);
    let eps2 = table.get("epsilon_2").unwrap().clone();
    // Flipping the slot's sign changes M by 2 * eps2 / (1 - vt)^2.
    let flipped = multiplicity_series(AlgebraKind::Pure, Source::Stored)
        .unwrap()
        .sub(&eps2.to_ratfun("v").scale(&rat(2)).div(&parse_ratfun("(1-v*t)^2").unwrap()).unwrap());
    assert_ne!(inverse_M(&flipped).unwrap(), hilbert_series(AlgebraKind::Pure));
    // The slot carries v^11, so the change first shows at lambda = (11, 11).
    let h = schur_decompose(&series_expand(&hilbert_series(AlgebraKind::Pure), 23).unwrap()).unwrap();
    let s = mult_series_expand(&flipped, 22, ExecMode::default()).unwrap();
    for (p, m) in h.entries() {
        if p.size() < 22 {
            assert_eq!(&s.coeff(p.p(), p.l2()), m);
        }
    }
    assert_ne!(&s.coeff(0, 11), h.get(l(11, 11)).unwrap());
}

#[test]
fn leading_parts() {
    let pure = leading_part(AlgebraKind::Pure).unwrap();
    assert_eq!(pure.max_degree, 16);
    assert_eq!(pure.leading, displayed_pure_leading());
    let top = pure.leading.iter().find(|f| f.k == 12).unwrap();
    assert_eq!((top.rho, top.l, top.coeff.clone()), (Rho::OneMinusT, 4, ratio(1, 256 * 9)));
    assert_eq!(pure.recombine(), multiplicity_series(AlgebraKind::Pure, Source::Stored).unwrap());
    for f in &pure.fractions {
        assert!(f.degree() <= 16);
        assert!(f.b < f.rho.t_degree());
    }
    let mixed = leading_part(AlgebraKind::Mixed).unwrap();
    assert_eq!(mixed.leading, scaled(&pure.leading, &rat(16)));
}

#[test]
fn leading_part_rejects_foreign_factors() {
    let mut slots = coefficient_table(AlgebraKind::Mixed).slots().to_vec();
    slots[0].value = v("1/(2-v)");
    let table = CoefficientTable::from_slots(AlgebraKind::Mixed, slots);
    assert!(matches!(decompose(&table, ExecMode::Sequential), Err(tracemult::Error::OutsideBasis(_))));
}

#[test]
fn asymptotic_examples() {
    for a in [0, 5, 40] {
        assert!(asymptotic(AlgebraKind::Pure, l(a, 0)).m1.is_zero());
    }
    let b = asymptotic(AlgebraKind::Pure, l(45, 15));
    assert_eq!(b.region, AsymptoticRegion::R2);
    assert_eq!(b.m2, Some(BigRat::zero()));
    let r1 = asymptotic(AlgebraKind::Pure, l(50, 10));
    assert_eq!((r1.region, r1.m2.is_none(), r1.m3.is_none()), (AsymptoticRegion::R1, true, true));
    assert_eq!(r1.total, r1.m1);
}

#[test]
fn convergence_report_regions_and_csv() {
    let r = asymptotic_convergence_report(AlgebraKind::Pure, (1, 1), &[8, 16]).unwrap();
    assert!(r.rows.iter().all(|row| row.region == AsymptoticRegion::R3));
    let r = asymptotic_convergence_report(AlgebraKind::Pure, (4, 1), &[8, 16]).unwrap();
    assert!(r.rows.iter().all(|row| row.region == AsymptoticRegion::R1));
    let csv = r.to_csv(6);
    assert!(csv.starts_with("scale,exact,asymptotic,ratio\n"));
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn direction_one_zero_converges() {
    // Along (1, 0) every m1 term vanishes; multiplicities stay bounded.
    let r = asymptotic_convergence_report(AlgebraKind::Pure, (1, 0), &[16, 32]).unwrap();
    assert!(r.rows.iter().all(|row| row.ratio.is_none()));
    let r = asymptotic_convergence_report(AlgebraKind::Pure, (5, 1), &[32, 64, 128]).unwrap();
    assert!(r.strictly_converging());
}

#[test]
fn assembled_series_has_expected_denominator() {
    let m = multiplicity_series(AlgebraKind::Pure, Source::Stored).unwrap();
    let q = parse_mpoly("(1-t)^4*(1+t)^2*(1+t+t^2)*(1+t^2)*(1-v*t)^2*(1-v*t^2)").unwrap();
    // The t-part of the denominator is exactly q(t, v).
    let t_part = m.den().coeffs_in("t");
    assert_eq!(t_part.keys().next_back(), Some(&14));
    let ratio = RatFun::new(m.den().clone(), q).unwrap();
    assert!(!ratio.vars().contains(&"t".to_string()));
    let _ = MPoly::one();
}
