//! Dense integer Laurent polynomials and their rational scalings.
//!
//! These back the common-denominator series pipeline, where every series
//! coefficient is a numerator over a known product of `(1 - y^(2k))`
//! factors and all work reduces to integer polynomial multiplication.

use std::ops::{AddAssign, Mul, Neg, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;

/// `sum_k coeffs[k] * y^(low + k)`, trimmed at both ends.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, exp: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: exp,
            coeffs: vec![c],
        }
    }

    /// `sum_k coeffs[k] y^(low+k)`.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    /// `1 - y^n`.
    pub fn one_minus_power(n: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = BigInt::one();
        coeffs[n as usize] -= BigInt::one();
        Self::from_coeffs(0, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn shift(mut self, k: i64) -> Self {
        if !self.is_zero() {
            self.low += k;
        }
        self
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Self {
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// The Adams substitution `y -> -(-y)^m`: `y^k -> (-1)^(k(m+1)) y^(mk)`.
    pub fn adams(&self, m: u32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let m_i = i64::from(m);
        let len = (self.coeffs.len() - 1) * m as usize + 1;
        let mut coeffs = vec![BigInt::zero(); len];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = self.low + k as i64;
            let flip = m.is_multiple_of(2) && exp.is_odd();
            coeffs[k * m as usize] = if flip { -c } else { c.clone() };
        }
        Self {
            low: self.low * m_i,
            coeffs,
        }
    }

    /// Exact division by a polynomial whose lowest and highest coefficients
    /// are `±1`. Returns `None` when the division leaves a remainder.
    pub fn div_exact_unit(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dl = divisor.coeffs.len();
        let lead = divisor.coeffs.last().unwrap();
        debug_assert!(lead.abs().is_one());
        if self.coeffs.len() < dl {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dl + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dl - 1];
            if c.is_zero() {
                continue;
            }
            let c = if lead.is_positive() { c.clone() } else { -c };
            for (i, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.low - divisor.low, quot))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (self.low + k as i64, BigRational::from_integer(c.clone()))),
        )
    }

    /// Evaluates at `y = -1`.
    pub fn eval_at_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if (self.low + k as i64).is_odd() {
                acc -= c;
            } else {
                acc += c;
            }
        }
        acc
    }

    fn add_scaled(&mut self, rhs: &IntPoly, negate: bool) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if negate { -rhs } else { rhs.clone() };
            return;
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        if low < self.low {
            let pad = (self.low - low) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = low;
        }
        let need = (high - low + 1) as usize;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        let off = (rhs.low - self.low) as usize;
        for (k, c) in rhs.coeffs.iter().enumerate() {
            if negate {
                self.coeffs[off + k] -= c;
            } else {
                self.coeffs[off + k] += c;
            }
        }
        self.trim();
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        self.add_scaled(rhs, false);
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        self.add_scaled(rhs, true);
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        // keep the shorter operand in the inner loop
        let (a, b) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (j, bj) in b.coeffs.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            if bj.is_one() {
                for (i, ai) in a.coeffs.iter().enumerate() {
                    coeffs[i + j] += ai;
                }
            } else if (-bj).is_one() {
                for (i, ai) in a.coeffs.iter().enumerate() {
                    coeffs[i + j] -= ai;
                }
            } else {
                for (i, ai) in a.coeffs.iter().enumerate() {
                    if !ai.is_zero() {
                        coeffs[i + j] += ai * bj;
                    }
                }
            }
        }
        IntPoly::from_coeffs(a.low + b.low, coeffs)
    }
}

/// A Laurent polynomial with rational coefficients stored as an integer
/// polynomial over a positive common denominator, reduced so the content of
/// the numerator is coprime to the denominator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ScaledPoly {
    num: IntPoly,
    den: BigInt,
}

impl ScaledPoly {
    pub fn zero() -> Self {
        Self {
            num: IntPoly::zero(),
            den: BigInt::one(),
        }
    }

    pub fn new(num: IntPoly, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut out = Self { num, den };
        out.normalize();
        out
    }

    pub fn from_int(num: IntPoly) -> Self {
        Self {
            num,
            den: BigInt::one(),
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
        if self.den.is_one() {
            return;
        }
        let g = self.num.content().gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact_scalar(&g);
            self.den /= &g;
        }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        Self::new(&self.num * p, self.den.clone())
    }

    pub fn mul(&self, rhs: &ScaledPoly) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(self.num.scale(r.numer()), &self.den * r.denom())
    }

    pub fn shift(&self, k: i64) -> Self {
        Self {
            num: self.num.clone().shift(k),
            den: self.den.clone(),
        }
    }

    pub fn adams(&self, m: u32) -> Self {
        Self {
            num: self.num.adams(m),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, rhs: &ScaledPoly) -> Self {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &ScaledPoly) -> Self {
        self.combine(rhs, true)
    }

    fn combine(&self, rhs: &ScaledPoly, negate: bool) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let mut num = self.num.clone();
            if negate {
                num -= &rhs.num;
            } else {
                num += &rhs.num;
            }
            return Self::new(num, self.den.clone());
        }
        let l = self.den.lcm(&rhs.den);
        let mut num = self.num.scale(&(&l / &self.den));
        let other = rhs.num.scale(&(&l / &rhs.den));
        if negate {
            num -= &other;
        } else {
            num += &other;
        }
        Self::new(num, l)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        if self.den.is_one() {
            return self.num.to_laurent();
        }
        let inv = BigRational::new(BigInt::one(), self.den.clone());
        self.num.to_laurent().scale(&inv)
    }

    /// Converts a Laurent polynomial, clearing coefficient denominators.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
            return Self::zero();
        };
        let den = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in p.terms() {
            coeffs[(e - lo) as usize] = c.numer() * (&den / c.denom());
        }
        Self::new(IntPoly::from_coeffs(lo, coeffs), den)
    }
}
