//! Sparse Laurent polynomials in the formal variable `y` over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum_k c_k y^k` with exact rational coefficients.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty
/// map and structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `y` itself.
    pub fn y() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_terms(
            terms
                .into_iter()
                .map(|(k, c)| (k, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    pub(crate) fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the lowest-order term.
    pub fn lowest_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next()
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|k| k >= 0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when no odd power of `y` occurs, i.e. the value is a Laurent
    /// polynomial in `q = y^2`.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|k| k.is_even())
    }

    /// Multiplies by `y^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Substitutes `y -> y^m`.
    pub fn substitute_power(&self, m: u32) -> Self {
        assert!(m >= 1, "substitution power must be positive");
        let m = i64::from(m);
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e * m, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `y -> -y`.
    pub fn negate_variable(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, if e.is_odd() { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Evaluates at a rational point. Negative exponents require `at != 0`.
    pub fn eval(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(at.clone(), e as usize)
            } else {
                num_traits::pow(at.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    /// Value at `y = -1` as an exact rational.
    pub fn eval_at_minus_one(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            if e.is_odd() {
                acc -= c;
            } else {
                acc += c;
            }
        }
        acc
    }

    /// Renders the polynomial in `y`, highest power first.
    pub fn to_y_string(&self) -> String {
        render(self, "y", |e| {
            if e == 1 {
                String::new()
            } else {
                format!("^{e}")
            }
        })
    }

    /// Renders the polynomial after substituting `y = -q^(1/2)`.
    pub fn to_q_string(&self) -> String {
        // y^k = (-1)^k q^(k/2)
        let flipped = self.negate_variable();
        render(&flipped, "q", |e| {
            if e.is_even() {
                let h = e / 2;
                if h == 1 {
                    String::new()
                } else {
                    format!("^{h}")
                }
            } else {
                format!("^({e}/2)")
            }
        })
    }
}

fn render(p: &LaurentPoly, var: &str, exp_suffix: impl Fn(i64) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (&e, c)) in p.terms.iter().rev().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if e == 0 {
            out.push_str(&abs.to_string());
            continue;
        }
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        out.push_str(var);
        out.push_str(&exp_suffix(e));
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_y_string())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(t.iter().copied())
    }

    #[test]
    fn zero_is_empty_and_cancellation_drops_terms() {
        let a = p(&[(1, 2), (-3, 1)]);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).num_terms(), 0);
    }

    #[test]
    fn multiplication_with_negative_exponents() {
        let a = p(&[(1, 1), (-1, 1)]);
        let b = p(&[(1, 1), (-1, -1)]);
        assert_eq!(&a * &b, p(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn renders_y_and_q_forms() {
        let f = p(&[(26, 1), (24, 1), (22, 2)]);
        assert_eq!(f.to_y_string(), "y^26 + y^24 + 2*y^22");
        assert_eq!(f.to_q_string(), "q^13 + q^12 + 2*q^11");
        assert_eq!(p(&[(1, 1)]).to_q_string(), "-q^(1/2)");
        assert_eq!(p(&[(-2, 3), (0, -1)]).to_q_string(), "-1 + 3*q^-1");
        assert_eq!(LaurentPoly::zero().to_y_string(), "0");
    }

    #[test]
    fn eval_at_minus_one_matches_generic_eval() {
        let f = p(&[(3, 2), (-1, 5), (0, 7)]);
        let at = BigRational::from_integer(BigInt::from(-1));
        assert_eq!(f.eval(&at), f.eval_at_minus_one());
    }
}
