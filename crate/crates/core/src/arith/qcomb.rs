//! q-Pochhammer symbols, Gaussian binomials and motives of the varieties
//! that enter the partition series, all written in `y` with `q = y^2` and
//! the Lefschetz class `L` realized as `q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunction;

/// `prod_{k=1..d} (1 - y^(-2k))`.
pub fn q_pochhammer(d: u32) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for k in 1..=i64::from(d) {
        acc = &acc * &LaurentPoly::from_int_terms([(0, 1), (-2 * k, -1)]);
    }
    acc
}

/// Coefficients (in `q`) of the Gaussian binomial `[m choose k]_q` via the
/// q-Pascal rule `[m,k] = [m-1,k-1] + q^k [m-1,k]`.
pub fn gaussian_binomial_coeffs(m: u32, k: u32) -> Vec<BigInt> {
    if k > m {
        return Vec::new();
    }
    // rows[j] holds [i choose j]_q for the current i
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=m as usize {
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(i + 1);
        for j in 0..=i.min(k as usize) {
            let mut c: Vec<BigInt> = vec![BigInt::zero(); j * (i - j) + 1];
            if j > 0 {
                for (t, v) in rows[j - 1].iter().enumerate() {
                    c[t] += v;
                }
            }
            if j < i {
                for (t, v) in rows[j].iter().enumerate() {
                    c[t + j] += v;
                }
            }
            next.push(c);
        }
        rows = next;
    }
    rows.swap_remove(k as usize)
}

/// `[m choose k]_q` as a polynomial in `y = -q^(1/2)`; zero when `k > m`.
pub fn gaussian_binomial(m: u32, k: u32) -> RationalFunction {
    LaurentPoly::from_terms(
        gaussian_binomial_coeffs(m, k)
            .into_iter()
            .enumerate()
            .map(|(t, c)| (2 * t as i64, BigRational::from_integer(c))),
    )
    .into()
}

/// `[GL_n] = L^(n^2) (1 - L^-1) ... (1 - L^-n)`.
pub fn motive_gl(n: u32) -> RationalFunction {
    q_pochhammer(n)
        .shift(2 * i64::from(n) * i64::from(n))
        .into()
}

/// `[A^n] = L^n`.
pub fn motive_affine(n: u32) -> RationalFunction {
    RationalFunction::monomial(1, 2 * i64::from(n))
}

/// `[P^n] = (1 - L^(n+1)) / (1 - L)`.
pub fn motive_projective(n: u32) -> RationalFunction {
    let num = LaurentPoly::from_int_terms([(0, 1), (2 * (i64::from(n) + 1), -1)]);
    let den = LaurentPoly::from_int_terms([(0, 1), (2, -1)]);
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// Motive of the Grassmannian of `k`-planes in an `n`-space, assembled as
/// `[GL_n] / ([GL_k] [GL_(n-k)] L^(k(n-k)))`, the quotient by a parabolic
/// subgroup. Independent of the q-Pascal recursion in
/// [`gaussian_binomial`].
pub fn motive_grassmannian(k: u32, n: u32) -> RationalFunction {
    if k > n {
        return RationalFunction::zero();
    }
    let parabolic = &(&motive_gl(k) * &motive_gl(n - k)) * &motive_affine(k * (n - k));
    motive_gl(n)
        .checked_div(&parabolic)
        .expect("motive of GL is nonzero")
}
