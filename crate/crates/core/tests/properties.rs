use num_bigint::BigInt;
use proptest::prelude::*;

use tracemult::exactarith::rational::{rat, ratio};
use tracemult::exactarith::{partial_fractions, BigRat, FactorBasis, MPoly, RatFun};
use tracemult::expr::{parse_expr, parse_mpoly, Expr};
use tracemult::multsolver::{solve_multiplicity_series, RationalShape, Z};
use tracemult::symfunc::{
    inverse_M, mult_series_expand, mult_series_truncated, schur, schur_decompose, series_expand, Partition2,
};

fn poly_xy(coeffs: &[(u32, u32, i64)]) -> MPoly {
    let vars = ["x".to_string(), "y".to_string()];
    MPoly::from_terms(&vars, coeffs.iter().map(|&(a, b, c)| (vec![a, b], rat(c))))
}

fn small_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0u32..3, 0u32..3, -4i64..5), 1..5).prop_map(|t| poly_xy(&t))
}

fn nonzero_poly() -> impl Strategy<Value = MPoly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Denominators with nonzero constant term so series expansions exist.
fn unit_den() -> impl Strategy<Value = MPoly> {
    small_poly()
        .prop_map(|p| p.add(&MPoly::int(3)))
        .prop_filter("nonzero constant term", |p| p.constant_term() != rat(0))
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (small_poly(), unit_den()).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..20).prop_map(|n| Expr::Int(BigInt::from(n))),
        prop::sample::select(vec!["x", "y", "t", "u", "v"]).prop_map(|s| Expr::Var(s.to_string())),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(Box::new(a), Box::new(b))),
            (inner, 0u32..4).prop_map(|(a, k)| Expr::Pow(Box::new(a), k)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.div(&a).unwrap(), RatFun::one());
        }
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let (ac, bc) = (a.mul(&c), b.mul(&c));
        let g = ac.gcd(&bc);
        prop_assert!(ac.exact_div(&g).is_ok());
        prop_assert!(bc.exact_div(&g).is_ok());
        prop_assert!(g.exact_div(&c).is_ok(), "common factor {} missing from gcd {}", c, g);
    }

    #[test]
    fn printed_expressions_reparse(e in expr()) {
        let printed = e.to_string();
        let again = parse_expr(&printed).unwrap();
        prop_assert_eq!(again.to_string(), printed.clone());
        // Lowering agrees unless a division by zero occurs.
        if let (Ok(a), Ok(b)) = (e.to_ratfun(), again.to_ratfun()) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn partial_fractions_recombine(
        num in prop::collection::vec(-5i64..6, 1..7),
        a in 1u32..3, b in 0u32..3, c in 0u32..2,
    ) {
        let t = MPoly::var("t");
        let n = num.iter().enumerate().fold(MPoly::zero(), |acc, (i, &k)| acc.add(&t.pow(i as u32).scale(&rat(k))));
        let mut factors = vec![(parse_mpoly("1-t").unwrap(), a)];
        if b > 0 { factors.push((parse_mpoly("1+t").unwrap(), b)); }
        if c > 0 { factors.push((parse_mpoly("1+t^2").unwrap(), c)); }
        let basis = FactorBasis::new("t", factors).unwrap();
        let f = RatFun::new(n, basis.product()).unwrap();
        let pf = partial_fractions(&f, &basis).unwrap();
        prop_assert_eq!(pf.recombine(), f);
    }

    #[test]
    fn partial_fractions_over_function_field(k in 1u32..3, s in -3i64..4) {
        let f = RatFun::new(
            parse_mpoly("1+v*t").unwrap().scale(&rat(s)).add(&MPoly::one()),
            parse_mpoly("(1-t)^2*(1-v*t)").unwrap().mul(&parse_mpoly("1+t").unwrap().pow(k)),
        ).unwrap();
        let basis = FactorBasis::new("t", vec![
            (parse_mpoly("1-t").unwrap(), 2),
            (parse_mpoly("1-v*t").unwrap(), 1),
            (parse_mpoly("1+t").unwrap(), k),
        ]).unwrap();
        prop_assert_eq!(partial_fractions(&f, &basis).unwrap().recombine(), f);
    }

    #[test]
    fn schur_expansion_roundtrip(ms in prop::collection::vec(-3i64..4, 1..12)) {
        let ls = Partition2::up_to(4);
        let mut f = MPoly::zero();
        for (l, &m) in ls.iter().zip(&ms) {
            f = f.add(&schur(*l).scale(&rat(m)));
        }
        let table = schur_decompose(&series_expand(&RatFun::from_poly(f), 9).unwrap()).unwrap();
        for (l, &m) in ls.iter().zip(&ms) {
            prop_assert_eq!(table.get(*l).cloned(), Some(rat(m)));
        }
    }

    #[test]
    fn multiplicity_series_is_linear(f in ratfun(), g in ratfun(), a in -3i64..4, b in -3i64..4) {
        let sym = |h: &RatFun| {
            let swapped = h.rename("x", "w").rename("y", "x").rename("w", "y");
            h.mul(&swapped)
        };
        let (f, g) = (sym(&f), sym(&g));
        let n = 7;
        let lhs = mult_series_truncated(&f.scale(&rat(a)).add(&g.scale(&rat(b))), n).unwrap();
        let mf = mult_series_truncated(&f, n).unwrap();
        let mg = mult_series_truncated(&g, n).unwrap();
        for (p, q) in lhs.support() {
            prop_assert_eq!(lhs.coeff(p, q), mf.coeff(p, q) * rat(a) + mg.coeff(p, q) * rat(b));
        }
    }

    #[test]
    fn inverse_of_a_polynomial_series_is_a_schur_sum(terms in prop::collection::vec((0u32..4, 0u32..3, -4i64..5), 1..5)) {
        let vars = ["t".to_string(), "v".to_string()];
        let m = MPoly::from_terms(&vars, terms.iter().map(|&(p, q, c)| (vec![p, q], rat(c))));
        let mut want = MPoly::zero();
        for (mono, c) in m.terms() {
            let (p, q) = (m.exponent(mono, "t"), m.exponent(mono, "v"));
            want = want.add(&schur(Partition2::new((p + q) as i64, q as i64).unwrap()).scale(c));
        }
        prop_assert_eq!(inverse_M(&RatFun::from_poly(m)).unwrap(), RatFun::from_poly(want));
    }

    #[test]
    fn solver_agrees_with_oracle(
        p in prop::collection::vec((0u32..3, 0u32..2, -3i64..4), 1..4),
        k in 1u32..3,
        with_z in any::<bool>(),
    ) {
        let vars = ["x".to_string(), Z.to_string()];
        let p = MPoly::from_terms(&vars, p.iter().map(|&(a, b, c)| (vec![a, b], rat(c))));
        prop_assume!(!p.is_zero());
        let mut q = parse_mpoly("1-x").unwrap().pow(k);
        if with_z {
            q = q.mul(&MPoly::one().sub(&MPoly::var("x").mul(&MPoly::var(Z))));
        }
        let shape = RationalShape::new(RatFun::from_poly(p), RatFun::from_poly(q), RatFun::one()).unwrap();
        let m = solve_multiplicity_series(&shape).unwrap();
        let f = shape.target().unwrap();
        let n = 10;
        let want = mult_series_truncated(&f, n).unwrap();
        let got = mult_series_expand(&m, n - 1, Default::default()).unwrap();
        for (p, q) in want.support() {
            prop_assert_eq!(got.coeff(p, q), want.coeff(p, q));
        }
        prop_assert_eq!(inverse_M(&m).unwrap(), f);
    }
}

#[test]
fn half_integer_coefficients_are_exact() {
    let f = RatFun::constant(ratio(1, 2));
    assert_eq!(f.add(&f), RatFun::one());
    assert_eq!(BigRat::new(2.into(), 4.into()), ratio(1, 2));
}
