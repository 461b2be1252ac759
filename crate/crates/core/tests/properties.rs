use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use quiverdt_core::arith::{parse_rational_function, rf_arith, RfOp, Symbol};
use quiverdt_core::dt::reconstruct_series;
use quiverdt_core::series::{
    build_partition_series, motivic_coefficient, partition_coefficient, series_exp, series_log,
    series_mul,
};
use quiverdt_core::{
    extract_dt, DimVector, LaurentPoly, QuiverMatrix, RationalFunction, TruncatedSeries,
};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-3i64..=3, -4i64..=4), 0..4).prop_map(LaurentPoly::from_int_terms)
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (laurent(), laurent())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn symmetric2() -> impl Strategy<Value = QuiverMatrix> {
    (0i64..=2, 0i64..=2, 0i64..=2)
        .prop_map(|(a, b, c)| QuiverMatrix::new(&[vec![a, b], vec![b, c]]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_idempotent(f in ratfunc()) {
        let again = RationalFunction::new(f.numerator().clone(), f.denominator().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert_eq!(parse_rational_function(&f.to_y_string(), Symbol::Y).unwrap(), f.clone());
        prop_assert_eq!(parse_rational_function(&f.to_q_string(), Symbol::Q).unwrap(), f);
    }

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!(rf_arith(RfOp::Div, &a, &a).unwrap().is_one());
        }
    }

    #[test]
    fn substitution_is_a_ring_map(a in ratfunc(), b in ratfunc(), m in 1u32..4) {
        prop_assert_eq!((&a * &b).substitute_power(m), &a.substitute_power(m) * &b.substitute_power(m));
        prop_assert_eq!((&a + &b).substitute_power(m), &a.substitute_power(m) + &b.substitute_power(m));
        prop_assert_eq!(a.substitute_power(m).substitute_power(2), a.substitute_power(2 * m));
    }

    #[test]
    fn evaluation_is_multiplicative(a in ratfunc(), b in ratfunc()) {
        if let (Ok(x), Ok(y)) = (a.eval_at_q1(), b.eval_at_q1()) {
            prop_assert_eq!((&a * &b).eval_at_q1().unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).eval_at_q1().unwrap(), x + y);
        }
    }

    #[test]
    fn relabelling_vertices_permutes_invariants(a in symmetric2()) {
        let r = a.rows();
        let swapped = QuiverMatrix::new(&[
            vec![r[1][1].into(), r[1][0].into()],
            vec![r[0][1].into(), r[0][0].into()],
        ]).unwrap();
        let b = DimVector::from([3, 3]);
        let t = extract_dt(&a, &b).unwrap();
        let s = extract_dt(&swapped, &b).unwrap();
        for e in t.entries() {
            let c = e.d.components();
            prop_assert_eq!(&e.raw, &s.raw(&[c[1], c[0]].into()));
        }
    }

    #[test]
    fn round_trip_and_positivity(a in symmetric2()) {
        let b = DimVector::from([3, 3]);
        let t = extract_dt(&a, &b).unwrap();
        prop_assert_eq!(reconstruct_series(&a, &t, &b).unwrap(), build_partition_series(&a, &b));
        prop_assert!(t.entries().all(|e| e.is_nonnegative && e.is_polynomial));
    }
}

#[test]
fn motivic_formula_matches_the_partition_series() {
    for rows in [
        vec![vec![0, 1], vec![1, 0]],
        vec![vec![2, 1], vec![1, 0]],
        vec![vec![1, 0], vec![3, 1]],
    ] {
        let a = QuiverMatrix::new(&rows).unwrap();
        for d in DimVector::from([3, 3]).sub_box() {
            assert_eq!(
                motivic_coefficient(&a, &d),
                partition_coefficient(&a, &d),
                "A={a} d={d}"
            );
        }
    }
}

#[test]
fn block_sum_factorizes() {
    let a = QuiverMatrix::from_rows([[1]]);
    let b = QuiverMatrix::from_rows([[0, 2], [2, 1]]);
    let ab = a.block_sum(&b);
    let bound = DimVector::from([2, 2, 2]);
    let embed = |s: &TruncatedSeries, first: bool| {
        TruncatedSeries::from_coeffs(
            bound.clone(),
            s.iter().map(|(d, c)| {
                let c0 = d.components();
                let v = if first {
                    vec![c0[0], 0, 0]
                } else {
                    vec![0, c0[0], c0[1]]
                };
                (DimVector::from(v), c.clone())
            }),
        )
        .unwrap()
    };
    let pa = embed(&build_partition_series(&a, &[2].into()), true);
    let pb = embed(&build_partition_series(&b, &[2, 2].into()), false);
    assert_eq!(
        series_mul(&pa, &pb).unwrap(),
        build_partition_series(&ab, &bound)
    );
}

#[test]
fn exp_inverts_log() {
    let a = QuiverMatrix::from_rows([[0, 1], [1, 0]]);
    let p = build_partition_series(&a, &[3, 3].into());
    assert_eq!(series_exp(&series_log(&p).unwrap()).unwrap(), p);
}

#[test]
fn normalized_fixture_coefficients() {
    let a = QuiverMatrix::from_rows([[1, 1], [1, 1]]);
    let t = extract_dt(&a, &[2, 3].into()).unwrap();
    let e = t.get(&[2, 3].into()).unwrap();
    let coeffs = e.coeffs.as_ref().unwrap();
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    // raw = y^(-N-1) (y^26 + y^24 + 2 y^22) with N(d) = 12
    assert_eq!(coeffs, &vec![(9, int(2)), (11, int(1)), (13, int(1))]);
}
