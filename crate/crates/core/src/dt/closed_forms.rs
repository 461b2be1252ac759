use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{gaussian_binomial, RationalFunction};
use crate::series::{DimVector, QuiverMatrix};
use crate::Error;

/// The three matrices whose DT tables are finite and known in full.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiniteCase {
    /// `[0]`
    Point,
    /// `[1]`
    Loop,
    /// `[[0,1],[1,0]]`
    Edge,
}

impl FiniteCase {
    pub fn detect(a: &QuiverMatrix) -> Option<FiniteCase> {
        match a.rows().as_slice() {
            [r] if r == &[0] => Some(FiniteCase::Point),
            [r] if r == &[1] => Some(FiniteCase::Loop),
            [r, s] if r == &[0, 1] && s == &[1, 0] => Some(FiniteCase::Edge),
            _ => None,
        }
    }

    pub fn matrix(self) -> QuiverMatrix {
        match self {
            FiniteCase::Point => QuiverMatrix::from_rows([[0]]),
            FiniteCase::Loop => QuiverMatrix::from_rows([[1]]),
            FiniteCase::Edge => QuiverMatrix::from_rows([[0, 1], [1, 0]]),
        }
    }
}

/// The complete table of a finite case; `d` must have the case's length.
pub fn finite_case_dt(case: FiniteCase, d: &DimVector) -> RationalFunction {
    match (case, d.components()) {
        (FiniteCase::Point, [1]) => RationalFunction::one(),
        (FiniteCase::Loop, [1]) => RationalFunction::y(),
        (FiniteCase::Edge, [1, 0] | [0, 1]) => RationalFunction::one(),
        (FiniteCase::Edge, [1, 1]) => RationalFunction::y(),
        _ => RationalFunction::zero(),
    }
}

/// `DT_(1,k)` for `[[0,m],[m,0]]`: `y^(k^2) [m choose k]_q`.
pub fn kronecker_dt(m: u32, k: u32) -> RationalFunction {
    if k > m {
        return RationalFunction::zero();
    }
    gaussian_binomial(m, k).shift(i64::from(k) * i64::from(k))
}

pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn binomial(n: u64, k: u64) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Normalized `DT_d` of the `m`-loop quiver at `q = 1`, from the Möbius
/// sum over divisors of `d`.
pub fn loop_dt_at_one(m: u32, d: u32) -> Result<BigInt, Error> {
    if m < 2 || d < 1 {
        return Err(Error::Precondition(format!(
            "loop_dt_at_one needs m >= 2 and d >= 1, got m={m}, d={d}"
        )));
    }
    let (m, d) = (u64::from(m), u64::from(d));
    let mut sum = BigInt::zero();
    for e in (1..=d).filter(|e| d % e == 0) {
        let mu = moebius(d / e);
        if mu == 0 {
            continue;
        }
        let sign = if ((m - 1) * (d - e)) % 2 == 0 { 1 } else { -1 };
        sum += binomial(m * e - 1, e - 1) * BigInt::from(i64::from(mu) * sign);
    }
    let value = BigRational::new(sum, BigInt::from(d * d));
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Consistency(format!(
            "loop formula for m={m}, d={d} gives {value}, not a nonnegative integer"
        )));
    }
    Ok(value.to_integer())
}

/// Numerical criterion for `DT_d != 0`: `d_i <= sum_j a_ij d_j` for all `i`.
pub fn nonvanishing(a: &QuiverMatrix, d: &DimVector) -> Result<bool, Error> {
    if d.len() != a.n() {
        return Err(Error::InvalidInput(format!(
            "dimension vector {d} does not match a {0}x{0} matrix",
            a.n()
        )));
    }
    if !a.is_symmetric() {
        return Err(Error::Precondition("matrix is not symmetric".into()));
    }
    if !a.is_indecomposable() {
        return Err(Error::Precondition("matrix is not indecomposable".into()));
    }
    if d.components().contains(&0) {
        return Err(Error::Precondition(format!(
            "dimension vector {d} has a zero component"
        )));
    }
    if let Some(case) = FiniteCase::detect(a) {
        return Err(Error::Precondition(format!(
            "matrix is the excluded finite case {}",
            case.matrix()
        )));
    }
    let c = d.components();
    Ok((0..a.n()).all(|i| {
        let s: u64 = (0..a.n())
            .map(|j| u64::from(a.entry(i, j)) * u64::from(c[j]))
            .sum();
        u64::from(c[i]) <= s
    }))
}
