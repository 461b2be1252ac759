//! Gcd-free reduction of fractions whose denominator is a product of
//! `(1 - y^n)` factors.
//!
//! Such a denominator factors over the rationals into cyclotomic
//! polynomials, `1 - y^n = -prod_{j | n} Phi_j(y)`, so the gcd with any
//! numerator is found by trial division with each `Phi_j`.

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::intpoly::{IntPoly, ScaledPoly};
use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunction;

thread_local! {
    static CYCLOTOMIC: RefCell<Vec<IntPoly>> = RefCell::new(vec![IntPoly::zero()]);
}

fn divisors(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// The `j`-th cyclotomic polynomial.
pub fn cyclotomic(j: u32) -> IntPoly {
    assert!(j >= 1);
    CYCLOTOMIC.with(|cache| {
        let mut cache = cache.borrow_mut();
        while cache.len() <= j as usize {
            let n = cache.len() as u32;
            // y^n - 1 divided by Phi_d for every proper divisor d
            let mut p = -&IntPoly::one_minus_power(n);
            for d in divisors(n).filter(|&d| d < n) {
                p = p
                    .div_exact_unit(&cache[d as usize])
                    .expect("cyclotomic factorization of y^n - 1");
            }
            cache.push(p);
        }
        cache[j as usize].clone()
    })
}

/// Canonical form of `num / prod_{n in factors} (1 - y^n)`.
pub fn reduce_over_one_minus_powers(num: &ScaledPoly, factors: &[u32]) -> RationalFunction {
    if num.is_zero() {
        return RationalFunction::zero();
    }
    let mut exps: BTreeMap<u32, u32> = BTreeMap::new();
    for &n in factors {
        assert!(n >= 1);
        for j in divisors(n) {
            *exps.entry(j).or_default() += 1;
        }
    }
    let mut numer = num.numerator().clone();
    let mut den = IntPoly::one();
    let mut negative = factors.len() % 2 == 1;
    for (&j, &e) in &exps {
        let phi = cyclotomic(j);
        let mut left = e;
        while left > 0 {
            match numer.div_exact_unit(&phi) {
                Some(q) => {
                    numer = q;
                    left -= 1;
                }
                None => break,
            }
        }
        for _ in 0..left {
            den = &den * &phi;
        }
        if j == 1 && left % 2 == 1 {
            // Phi_1 = y - 1 has constant term -1
            negative = !negative;
        }
    }
    if negative {
        numer = -&numer;
    }
    let scalar = BigRational::new(BigInt::one(), num.denominator().clone());
    let numer = if scalar.is_one() {
        numer.to_laurent()
    } else {
        numer.to_laurent().scale(&scalar)
    };
    let den: LaurentPoly = den.to_laurent();
    // den has constant term +1 after the sign fix: every Phi_j with j > 1
    // has constant term 1 and Phi_1's sign was folded into `negative`.
    let den = if den.coeff(0).is_one() { den } else { -den };
    RationalFunction::from_canonical_parts(numer, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(low: i64, c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(low, c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), ip(0, &[-1, 1]));
        assert_eq!(cyclotomic(2), ip(0, &[1, 1]));
        assert_eq!(cyclotomic(4), ip(0, &[1, 0, 1]));
        assert_eq!(cyclotomic(6), ip(0, &[1, -1, 1]));
        assert_eq!(cyclotomic(12), ip(0, &[1, 0, -1, 0, 1]));
    }

    #[test]
    fn agrees_with_euclidean_canonicalization() {
        let cases: Vec<(IntPoly, Vec<u32>)> = vec![
            (ip(1, &[1, -1]), vec![2]),
            (ip(-3, &[2, 0, -2]), vec![2, 4]),
            (ip(0, &[1, 0, 0, 0, 0, 0, -1]), vec![2, 4, 6]),
            (ip(5, &[7]), vec![2, 2, 4]),
            (ip(0, &[-1, 1]), vec![1]),
        ];
        for (num, factors) in cases {
            let mut den = IntPoly::one();
            for &n in &factors {
                den = &den * &IntPoly::one_minus_power(n);
            }
            let want = RationalFunction::new(num.to_laurent(), den.to_laurent()).unwrap();
            let got = reduce_over_one_minus_powers(&ScaledPoly::from_int(num), &factors);
            assert_eq!(got, want);
        }
    }
}
