//! The q-hypergeometric partition series of a quiver matrix.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{DimVector, QuiverMatrix, TruncatedSeries};
use crate::arith::{motive_gl, q_pochhammer, LaurentPoly, RationalFunction};

/// Coefficient of `x^d`: `y^N(d) / prod_i (1 - y^-2)...(1 - y^(-2 d_i))`.
pub fn partition_coefficient(a: &QuiverMatrix, d: &DimVector) -> RationalFunction {
    let mut den = LaurentPoly::one();
    for &di in d.components() {
        den = &den * &q_pochhammer(di);
    }
    let num = LaurentPoly::monomial(
        BigRational::from_integer(BigInt::from(1)),
        a.twist_exponent(d),
    );
    RationalFunction::new(num, den).expect("Pochhammer products are nonzero")
}

/// `P_A(x)` truncated to `d <= bound`. Symmetry of `a` is not required.
pub fn build_partition_series(a: &QuiverMatrix, bound: &DimVector) -> TruncatedSeries {
    assert_eq!(
        a.n(),
        bound.len(),
        "bound length must match the matrix size"
    );
    let coeffs = bound.sub_box().into_iter().map(|d| {
        let c = partition_coefficient(a, &d);
        (d, c)
    });
    TruncatedSeries::from_coeffs(bound.clone(), coeffs).expect("keys are inside the box")
}

/// `[R_d]_vir / [G_d]_vir` assembled from the motives of the representation
/// space (an affine space of dimension `sum a_ij d_i d_j`) and of the
/// gauge group `prod GL(d_i)`, with `[X]_vir = y^(-dim X) [X]`.
pub fn motivic_coefficient(a: &QuiverMatrix, d: &DimVector) -> RationalFunction {
    let c = d.components();
    let n = a.n();
    let mut dim_rep = 0i64;
    for i in 0..n {
        for j in 0..n {
            dim_rep += i64::from(a.entry(i, j)) * i64::from(c[i]) * i64::from(c[j]);
        }
    }
    // [A^m] = L^m = y^(2m)
    let rep_vir = RationalFunction::monomial(1, 2 * dim_rep).shift(-dim_rep);
    let mut group_vir = RationalFunction::one();
    for &di in c {
        let dim = i64::from(di) * i64::from(di);
        group_vir = &group_vir * &motive_gl(di).shift(-dim);
    }
    rep_vir
        .checked_div(&group_vir)
        .expect("motive of the gauge group is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[(i64, i64)], d: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::new(
            LaurentPoly::from_int_terms(n.iter().copied()),
            LaurentPoly::from_int_terms(d.iter().copied()),
        )
        .unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let a0 = QuiverMatrix::from_rows([[0]]);
        // -y / (1 - y^2)
        assert_eq!(
            partition_coefficient(&a0, &DimVector::from([1])),
            rf(&[(1, -1)], &[(0, 1), (2, -1)])
        );
        let k = QuiverMatrix::from_rows([[0, 1], [1, 0]]);
        assert!(partition_coefficient(&k, &DimVector::from([0, 0])).is_one());
        // y^4 / (y^2 - 1)^2
        assert_eq!(
            partition_coefficient(&k, &DimVector::from([1, 1])),
            rf(&[(4, 1)], &[(4, 1), (2, -2), (0, 1)])
        );
    }

    #[test]
    fn motivic_examples() {
        let a0 = QuiverMatrix::from_rows([[0]]);
        let a1 = QuiverMatrix::from_rows([[1]]);
        let one = DimVector::from([1]);
        assert_eq!(
            motivic_coefficient(&a0, &one),
            rf(&[(1, -1)], &[(0, 1), (2, -1)])
        );
        assert_eq!(
            motivic_coefficient(&a1, &one),
            rf(&[(2, -1)], &[(0, 1), (2, -1)])
        );
        assert!(motivic_coefficient(&a1, &DimVector::from([0])).is_one());
    }
}
