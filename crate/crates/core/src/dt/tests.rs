use super::*;
use crate::arith::{parse_rational_function, Symbol};
use crate::series::{series_log, TruncatedSeries};
use crate::LaurentPoly;

fn m<const N: usize>(rows: [[u32; N]; N]) -> QuiverMatrix {
    QuiverMatrix::from_rows(rows)
}

fn yq(s: &str) -> RationalFunction {
    parse_rational_function(s, Symbol::Y).unwrap()
}

fn qq(s: &str) -> RationalFunction {
    parse_rational_function(s, Symbol::Q).unwrap()
}

/// Naive extraction in `Q(y)` through the generic series logarithm.
fn naive_extract(a: &QuiverMatrix, bound: &DimVector) -> BTreeMap<DimVector, RationalFunction> {
    let log = series_log(&build_partition_series(a, bound)).unwrap();
    let one_minus_q = RationalFunction::from(LaurentPoly::from_int_terms([(0, 1), (2, -1)]));
    let y = RationalFunction::y();
    let mut omega: BTreeMap<DimVector, RationalFunction> = BTreeMap::new();
    let mut out = BTreeMap::new();
    for d in bound.sub_box().into_iter().filter(|d| !d.is_zero()) {
        let mut acc = log.coeff(&d);
        for (k, e) in proper_divisor_pairs(&d) {
            acc = &acc - &omega[&e].adams(k).scale(&inv(k));
        }
        let dt = (-(&acc * &one_minus_q)).checked_div(&y).unwrap();
        omega.insert(d.clone(), acc);
        out.insert(d, dt);
    }
    out
}

#[test]
fn finite_tables() {
    let t = extract_dt(&m([[0]]), &DimVector::from([6])).unwrap();
    assert!(t.raw(&[1].into()).is_one());
    for d in 2..=6 {
        assert!(t.raw(&[d].into()).is_zero());
    }
    let t = extract_dt(&m([[1]]), &DimVector::from([6])).unwrap();
    assert_eq!(t.raw(&[1].into()), qq("-q^(1/2)"));
    for d in 2..=6 {
        assert!(t.raw(&[d].into()).is_zero());
    }
    let t = extract_dt(&m([[0, 1], [1, 0]]), &DimVector::from([3, 3])).unwrap();
    for e in t.entries() {
        assert_eq!(e.raw, finite_case_dt(FiniteCase::Edge, &e.d), "at {}", e.d);
    }
}

#[test]
fn nonsymmetric_control() {
    let a = m([[0, 1], [0, 0]]);
    let t = extract_dt(&a, &DimVector::from([1, 1])).unwrap();
    let e = t.get(&[1, 1].into()).unwrap();
    assert_eq!(e.raw, yq("(y)/(1 + y)"));
    assert_eq!(e.raw, qq("(-q - q^(1/2))/(1 - q)"));
    assert!(!e.is_polynomial && e.coeffs.is_none() && e.warning_nonsymmetric);
    assert_eq!(check_efimov(&t), Err(Error::NotSymmetric));
}

#[test]
fn normalization_examples() {
    assert_eq!(
        normalize_dt(&m([[1]]), &[1].into(), &RationalFunction::y()),
        yq("y^2")
    );
    assert!(normalize_dt(&m([[0]]), &[1].into(), &RationalFunction::one()).is_one());
    assert_eq!(
        normalize_dt(&m([[0, 1], [1, 0]]), &[1, 1].into(), &RationalFunction::y()),
        qq("q")
    );
}

#[test]
fn full_two_by_two_fixture() {
    let a = m([[1, 1], [1, 1]]);
    let t = extract_dt(&a, &DimVector::from([2, 3])).unwrap();
    let e = t.get(&[2, 3].into()).unwrap();
    assert_eq!(e.normalized, qq("q^13 + q^12 + 2*q^11"));
    assert!(check_efimov(&t).unwrap().values().all(|&v| v));
}

#[test]
fn kronecker_oracle() {
    for mm in 1..=3 {
        let a = m([[0, mm], [mm, 0]]);
        let t = extract_dt(&a, &DimVector::from([1, 4])).unwrap();
        for k in 1..=4 {
            assert_eq!(t.raw(&[1, k].into()), kronecker_dt(mm, k), "m={mm} k={k}");
        }
    }
}

#[test]
fn loop_oracle() {
    for mm in [2, 3] {
        let t = extract_dt(&m([[mm]]), &DimVector::from([4])).unwrap();
        for d in 1..=4 {
            let got = t.get(&[d].into()).unwrap().at_one().unwrap();
            assert_eq!(
                got,
                BigRational::from_integer(loop_dt_at_one(mm, d).unwrap())
            );
        }
    }
}

#[test]
fn agrees_with_naive_extraction() {
    let cases = [
        (m([[1, 2], [2, 0]]), DimVector::from([2, 2])),
        (m([[0, 1], [0, 1]]), DimVector::from([2, 2])),
        (m([[2]]), DimVector::from([5])),
    ];
    for (a, b) in cases {
        let t = extract_dt(&a, &b).unwrap();
        for (d, v) in naive_extract(&a, &b) {
            assert_eq!(t.raw(&d), v, "A={a} d={d}");
        }
    }
}

#[test]
fn reconstruction_examples() {
    let b = DimVector::from([4]);
    for a in [m([[0]]), m([[1]])] {
        let t = extract_dt(&a, &b).unwrap();
        assert_eq!(
            reconstruct_series(&a, &t, &b).unwrap(),
            build_partition_series(&a, &b)
        );
    }
    // q-binomial theorem: sum (q^(1/2) x)^d / ((1-q)...(1-q^d))
    let a = m([[0]]);
    let t = DtTable::from_raw(
        &a,
        &b,
        (1..=4).map(|d| {
            let v = if d == 1 {
                RationalFunction::one()
            } else {
                RationalFunction::zero()
            };
            (DimVector::from([d]), v)
        }),
    )
    .unwrap();
    let s = reconstruct_series(&a, &t, &b).unwrap();
    let mut den = RationalFunction::one();
    for d in 1..=4u32 {
        den = &den
            * &RationalFunction::from(LaurentPoly::from_int_terms([
                (0, 1),
                (2 * i64::from(d), -1),
            ]));
        let num = RationalFunction::monomial(if d % 2 == 0 { 1 } else { -1 }, i64::from(d));
        assert_eq!(s.coeff(&[d].into()), num.checked_div(&den).unwrap());
    }
    let z = DimVector::from([0]);
    let empty = DtTable::from_raw(&a, &z, []).unwrap();
    assert_eq!(
        reconstruct_series(&a, &empty, &z).unwrap(),
        TruncatedSeries::one(z)
    );
}

#[test]
fn reconstruction_detects_a_wrong_entry() {
    let a = m([[1, 1], [1, 1]]);
    let b = DimVector::from([2, 2]);
    let t = extract_dt(&a, &b).unwrap();
    let mut raw: Vec<_> = t.entries().map(|e| (e.d.clone(), e.raw.clone())).collect();
    let i = raw
        .iter()
        .position(|(d, _)| d == &DimVector::from([1, 1]))
        .unwrap();
    raw[i].1 = &raw[i].1 + &RationalFunction::one();
    let bad = DtTable::from_raw(&a, &b, raw).unwrap();
    assert_eq!(
        reconstruct_series(&a, &bad, &b),
        Err(Error::ReconstructionMismatch([1, 1].into()))
    );
}

#[test]
fn generic_and_fast_reconstruction_agree() {
    let a = m([[0, 1], [0, 0]]);
    let b = DimVector::from([2, 2]);
    let t = extract_dt(&a, &b).unwrap();
    let fast = reconstruct_series(&a, &t, &b).unwrap();
    assert_eq!(fast, reconstruct_series_generic(&a, &t, &b).unwrap());
    assert_eq!(fast, build_partition_series(&a, &b));
}

#[test]
fn incomplete_table_is_refused() {
    let a = m([[1]]);
    let b = DimVector::from([2]);
    let t = DtTable::from_raw(&a, &b, [(DimVector::from([1]), RationalFunction::y())]).unwrap();
    assert!(matches!(
        reconstruct_series(&a, &t, &b),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn block_locality() {
    let a = m([[1]]).block_sum(&m([[2]]));
    let b = DimVector::from([3, 3]);
    let t = extract_dt(&a, &b).unwrap();
    let t1 = extract_dt(&m([[1]]), &[3].into()).unwrap();
    let t2 = extract_dt(&m([[2]]), &[3].into()).unwrap();
    for e in t.entries() {
        let c = e.d.components();
        let want = match (c[0], c[1]) {
            (x, 0) => t1.raw(&[x].into()),
            (0, x) => t2.raw(&[x].into()),
            _ => RationalFunction::zero(),
        };
        assert_eq!(e.raw, want, "at {}", e.d);
    }
}

#[test]
fn entries_are_stable_under_enlarged_bounds() {
    let a = m([[1, 2], [2, 0]]);
    let small = extract_dt(&a, &[2, 2].into()).unwrap();
    for big in [DimVector::from([2, 4]), DimVector::from([4, 3])] {
        let t = extract_dt(&a, &big).unwrap();
        for e in small.entries() {
            assert_eq!(t.raw(&e.d), e.raw, "{} at bound {big}", e.d);
        }
    }
}
