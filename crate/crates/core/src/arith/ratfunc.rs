//! Canonical rational functions in `y = -q^(1/2)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::dense::{self, DensePoly};
use super::laurent::LaurentPoly;
use crate::Error;

/// An exact quotient of Laurent polynomials in `y`.
///
/// Always stored in canonical form: numerator and denominator are coprime,
/// the denominator is an ordinary polynomial with constant term `1`, and
/// any power of `y` lives in the numerator. Two values are equal exactly
/// when their representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

fn to_dense(p: &LaurentPoly, offset: i64) -> DensePoly {
    let Some(top) = p.max_exp() else {
        return Vec::new();
    };
    let mut out = vec![BigRational::zero(); (top - offset + 1) as usize];
    for (e, c) in p.terms() {
        out[(e - offset) as usize] = c.clone();
    }
    out
}

fn from_dense(p: &[BigRational], offset: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        p.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64 + offset, c.clone())),
    )
}

impl RationalFunction {
    pub fn zero() -> Self {
        LaurentPoly::zero().into()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn y() -> Self {
        LaurentPoly::y().into()
    }

    pub fn from_integer(c: i64) -> Self {
        LaurentPoly::constant(BigRational::from_integer(BigInt::from(c))).into()
    }

    pub fn from_rational(c: BigRational) -> Self {
        LaurentPoly::constant(c).into()
    }

    pub fn monomial(c: i64, exp: i64) -> Self {
        LaurentPoly::monomial(BigRational::from_integer(BigInt::from(c)), exp).into()
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonicalize(num, den))
    }

    /// Caller guarantees `den != 0`.
    pub(crate) fn canonicalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let den_low = den.min_exp().unwrap();
        let num_low = num.min_exp().unwrap();
        let mut n = to_dense(&num, num_low);
        let mut d = to_dense(&den, den_low);
        if d.len() > 1 && n.len() > 1 {
            let g = dense::gcd(&n, &d);
            if g.len() > 1 {
                n = dense::divrem(&n, &g).0;
                d = dense::divrem(&d, &g).0;
            }
        }
        let c = d[0].clone();
        if !c.is_one() {
            let inv = c.recip();
            for x in n.iter_mut().chain(d.iter_mut()) {
                *x *= &inv;
            }
        }
        Self {
            num: from_dense(&n, num_low - den_low),
            den: from_dense(&d, 0),
        }
    }

    /// Assembles a value already known to be canonical.
    pub(crate) fn from_canonical_parts(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(den.lowest_coeff().is_some_and(One::is_one));
        debug_assert_eq!(den.min_exp(), Some(0));
        Self { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial, if it is one.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonicalize(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    pub fn recip(&self) -> Result<Self, Error> {
        Self::one().checked_div(self)
    }

    /// Multiplies by `y^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Substitutes `y -> y^m`.
    pub fn substitute_power(&self, m: u32) -> Self {
        assert!(m >= 1, "substitution power must be positive");
        // y -> y^m maps coprime polynomials to coprime polynomials and keeps
        // the constant term of the denominator, so the result is canonical.
        Self {
            num: self.num.substitute_power(m),
            den: self.den.substitute_power(m),
        }
    }

    /// Substitutes `y -> -y`.
    pub fn negate_variable(&self) -> Self {
        Self {
            num: self.num.negate_variable(),
            den: self.den.negate_variable(),
        }
    }

    /// The Adams operation `f(y) -> f(-(-y)^m)`, i.e. `q^(1/2) -> q^(m/2)`
    /// expressed in `y = -q^(1/2)`.
    pub fn adams(&self, m: u32) -> Self {
        if m % 2 == 1 {
            self.substitute_power(m)
        } else {
            self.negate_variable().substitute_power(m)
        }
    }

    /// Value at `q = 1`, taken on the branch `q^(1/2) = 1`, i.e. `y = -1`.
    pub fn eval_at_q1(&self) -> Result<BigRational, Error> {
        let d = self.den.eval_at_minus_one();
        if d.is_zero() {
            return Err(Error::PoleAtQOne);
        }
        Ok(self.num.eval_at_minus_one() / d)
    }

    pub fn to_y_string(&self) -> String {
        if self.den.is_one() {
            self.num.to_y_string()
        } else {
            format!("({})/({})", self.num.to_y_string(), self.den.to_y_string())
        }
    }

    pub fn to_q_string(&self) -> String {
        if self.den.is_one() {
            self.num.to_q_string()
        } else {
            format!("({})/({})", self.num.to_q_string(), self.den.to_q_string())
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_y_string())
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::canonicalize(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonicalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num * &rhs.num).into();
        }
        RationalFunction::canonicalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Binary operation selector for [`rf_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Mul,
    Div,
    /// Negates the first operand; the second is ignored.
    Neg,
}

pub fn rf_arith(
    op: RfOp,
    a: &RationalFunction,
    b: &RationalFunction,
) -> Result<RationalFunction, Error> {
    match op {
        RfOp::Add => Ok(a + b),
        RfOp::Mul => Ok(a * b),
        RfOp::Div => a.checked_div(b),
        RfOp::Neg => Ok(-a),
    }
}
