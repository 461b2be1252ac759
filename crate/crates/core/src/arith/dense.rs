//! Dense univariate polynomials over the rationals, used for gcd reduction.
//!
//! Index `k` holds the coefficient of `y^k`; vectors are kept trimmed so the
//! zero polynomial is empty.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type DensePoly = Vec<BigRational>;

pub(crate) fn trim(p: &mut DensePoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigRational]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Euclidean division; `b` must be nonzero.
pub(crate) fn divrem(a: &[BigRational], b: &[BigRational]) -> (DensePoly, DensePoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut rem: DensePoly = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                rem[k + i] -= &c * bi;
            }
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn make_monic(p: &mut DensePoly) {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            let inv = lead.recip();
            for c in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// Monic greatest common divisor. `gcd(0, 0)` is the zero polynomial.
pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> DensePoly {
    let mut x: DensePoly = a.to_vec();
    let mut y: DensePoly = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, mut r) = divrem(&x, &y);
        make_monic(&mut r);
        x = y;
        y = r;
    }
    make_monic(&mut x);
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: &[i64]) -> DensePoly {
        v.iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect()
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        // (1 - y^2) and (y - y^2) share (1 - y)
        let g = gcd(&q(&[1, 0, -1]), &q(&[0, 1, -1]));
        assert_eq!(g, q(&[-1, 1]));
    }

    #[test]
    fn divrem_exact() {
        let (qt, r) = divrem(&q(&[-1, 0, 0, 1]), &q(&[-1, 1]));
        assert!(r.is_empty());
        assert_eq!(qt, q(&[1, 1, 1]));
    }
}
