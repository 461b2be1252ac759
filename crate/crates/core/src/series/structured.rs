//! Series whose `x^d` coefficient is kept as an integer-polynomial numerator
//! over the fixed denominator
//!
//! ```text
//! D(d) = prod_i prod_{k=1..d_i} (1 - y^(2k)).
//! ```
//!
//! `D(e) D(d-e)` divides `D(d)` with quotient `prod_i [d_i choose e_i]_q`,
//! so Cauchy products, and with them log and exp via the Euler-operator
//! recurrences, never leave this representation and need no polynomial gcd.
//! The partition series has monomial numerators here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::dimvec::BoxShape;
use super::{DimVector, QuiverMatrix, TruncatedSeries};
use crate::arith::{
    gaussian_binomial_coeffs, reduce_over_one_minus_powers, IntPoly, RationalFunction, ScaledPoly,
};
use crate::Error;

/// Exponents `n` of the factors `(1 - y^n)` making up `D(d)`.
pub fn denominator_factors(d: &DimVector) -> Vec<u32> {
    d.components()
        .iter()
        .flat_map(|&di| (1..=di).map(|k| 2 * k))
        .collect()
}

/// `D(d)` expanded.
pub fn denominator_poly(d: &DimVector) -> IntPoly {
    denominator_factors(d)
        .into_iter()
        .fold(IntPoly::one(), |acc, n| &acc * &IntPoly::one_minus_power(n))
}

/// `D(m e) / adams_m(D(e))`: the factors `(1 - y^(2k))` of `D(m e)` with
/// `m` not dividing `k`.
pub fn adams_cofactor(m: u32, e: &DimVector) -> IntPoly {
    let mut acc = IntPoly::one();
    for &ei in e.components() {
        for k in (1..=m * ei).filter(|k| k % m != 0) {
            acc = &acc * &IntPoly::one_minus_power(2 * k);
        }
    }
    acc
}

/// Gaussian binomials `[n choose k]_q` in `y`, for `k <= n <= max`.
struct BinomialTable {
    rows: Vec<Vec<IntPoly>>,
}

impl BinomialTable {
    fn new(max: u32) -> Self {
        let rows = (0..=max)
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        let c = gaussian_binomial_coeffs(n, k);
                        // spread to even powers of y
                        let mut v = vec![BigInt::zero(); 2 * c.len().max(1) - 1];
                        for (t, x) in c.into_iter().enumerate() {
                            v[2 * t] = x;
                        }
                        IntPoly::from_coeffs(0, v)
                    })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    /// `D(d) / (D(e) D(d - e))`.
    fn quotient(&self, d: &DimVector, e: &DimVector) -> IntPoly {
        let mut acc = IntPoly::one();
        for (&di, &ei) in d.components().iter().zip(e.components()) {
            if ei != 0 && ei != di {
                acc = &acc * &self.rows[di as usize][ei as usize];
            }
        }
        acc
    }
}

/// Unnormalized running sum of scaled polynomials.
#[derive(Default)]
struct Accumulator {
    num: IntPoly,
    den: BigInt,
}

impl Accumulator {
    fn new() -> Self {
        Self {
            num: IntPoly::zero(),
            den: BigInt::one(),
        }
    }

    fn add(&mut self, p: &IntPoly, den: &BigInt, negate: bool) {
        if p.is_zero() {
            return;
        }
        let term;
        let p = if *den == self.den {
            p
        } else {
            let l = num_integer::Integer::lcm(&self.den, den);
            let up = &l / &self.den;
            if !up.is_one() {
                self.num = self.num.scale(&up);
            }
            let f = &l / den;
            self.den = l;
            if f.is_one() {
                p
            } else {
                term = p.scale(&f);
                &term
            }
        };
        if negate {
            self.num -= p;
        } else {
            self.num += p;
        }
    }

    fn finish(self) -> ScaledPoly {
        ScaledPoly::new(self.num, self.den)
    }
}

/// A truncated series stored as numerators over `D(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochhammerSeries {
    bound: DimVector,
    shape: BoxShape,
    order: Vec<DimVector>,
    nums: Vec<ScaledPoly>,
}

impl PochhammerSeries {
    pub fn zero(bound: &DimVector) -> Self {
        let shape = BoxShape::new(bound);
        Self {
            bound: bound.clone(),
            order: shape.vectors(),
            nums: vec![ScaledPoly::zero(); shape.size()],
            shape,
        }
    }

    /// The partition series `P_A`. Its numerators are the monomials
    /// `(-1)^|d| y^(N(d) + sum d_i (d_i + 1))`.
    pub fn partition(a: &QuiverMatrix, bound: &DimVector) -> Self {
        assert_eq!(
            a.n(),
            bound.len(),
            "bound length must match the matrix size"
        );
        let mut s = Self::zero(bound);
        for d in s.order.clone() {
            let shift: i64 = d
                .components()
                .iter()
                .map(|&c| i64::from(c) * (i64::from(c) + 1))
                .sum();
            let sign = if d.total() % 2 == 0 { 1 } else { -1 };
            let num = IntPoly::monomial(BigInt::from(sign), a.twist_exponent(&d) + shift);
            s.set(&d, ScaledPoly::from_int(num));
        }
        s
    }

    /// Converts a series whose coefficients become Laurent polynomials
    /// after multiplication by `D(d)`; `None` otherwise.
    pub fn from_truncated(t: &TruncatedSeries) -> Option<Self> {
        let mut s = Self::zero(t.bound());
        for (d, c) in t.iter() {
            let scaled = c * &RationalFunction::from(denominator_poly(d).to_laurent());
            let p = scaled.as_laurent()?;
            s.set(d, ScaledPoly::from_laurent(p));
        }
        Some(s)
    }

    pub fn bound(&self) -> &DimVector {
        &self.bound
    }

    /// Vectors of the box in graded-lexicographic order.
    pub fn vectors(&self) -> &[DimVector] {
        &self.order
    }

    /// Numerator of the `x^d` coefficient over `D(d)`.
    pub fn numerator(&self, d: &DimVector) -> &ScaledPoly {
        &self.nums[self.shape.index(d)]
    }

    pub fn set(&mut self, d: &DimVector, num: ScaledPoly) {
        let i = self.shape.index(d);
        self.nums[i] = num;
    }

    /// The `x^d` coefficient as a canonical rational function.
    pub fn coeff(&self, d: &DimVector) -> RationalFunction {
        reduce_over_one_minus_powers(self.numerator(d), &denominator_factors(d))
    }

    pub fn to_truncated(&self) -> TruncatedSeries {
        let coeffs = self
            .order
            .iter()
            .filter(|d| !self.numerator(d).is_zero())
            .map(|d| (d.clone(), self.coeff(d)));
        TruncatedSeries::from_coeffs(self.bound.clone(), coeffs).expect("keys inside the box")
    }

    /// First vector (graded-lexicographic) where the numerators differ.
    pub fn first_difference(&self, other: &PochhammerSeries) -> Option<DimVector> {
        self.order
            .iter()
            .find(|d| self.numerator(d) != other.numerator(d))
            .cloned()
    }

    fn binomials(&self) -> BinomialTable {
        BinomialTable::new(self.bound.components().iter().copied().max().unwrap_or(0))
    }

    /// Returns `sum_{0 < e <= d, e != d if skip_top} lhs_e * rhs_(d-e)` over
    /// `D(d)`.
    fn convolve_at(
        &self,
        binom: &BinomialTable,
        lhs: &[ScaledPoly],
        rhs: &[ScaledPoly],
        d: &DimVector,
        include_top: bool,
    ) -> ScaledPoly {
        let mut acc = Accumulator::new();
        for e in d.sub_box() {
            if e.is_zero() || (!include_top && e == *d) {
                continue;
            }
            let le = &lhs[self.shape.index(&e)];
            let rest = d.sub(&e);
            let rr = &rhs[self.shape.index(&rest)];
            if le.is_zero() || rr.is_zero() {
                continue;
            }
            let q = binom.quotient(d, &e);
            let small = &q * rr.numerator();
            let prod = &small * le.numerator();
            acc.add(&prod, &(le.denominator() * rr.denominator()), false);
        }
        acc.finish()
    }

    /// Formal logarithm; the constant coefficient must be `1`.
    pub fn log(&self) -> Result<PochhammerSeries, Error> {
        let zero = DimVector::zero(self.bound.len());
        if *self.numerator(&zero) != ScaledPoly::from_int(IntPoly::one()) {
            return Err(Error::Precondition(
                "log needs constant coefficient 1".into(),
            ));
        }
        let binom = self.binomials();
        // h_d = |d| (log f)_d = |d| f_d - sum_{0<e<d} h_e f_(d-e)
        let mut h = vec![ScaledPoly::zero(); self.shape.size()];
        for d in &self.order {
            if d.is_zero() {
                continue;
            }
            let deg = BigInt::from(d.total());
            let conv = self.convolve_at(&binom, &h, &self.nums, d, false);
            let own = self.numerator(d);
            let mut acc = Accumulator::new();
            acc.add(&own.numerator().scale(&deg), own.denominator(), false);
            acc.add(conv.numerator(), conv.denominator(), true);
            h[self.shape.index(d)] = acc.finish();
        }
        let mut out = Self::zero(&self.bound);
        for d in &self.order {
            if d.is_zero() {
                continue;
            }
            let i = self.shape.index(d);
            let deg = BigRational::from_integer(BigInt::from(d.total()));
            out.nums[i] = h[i].scale(&deg.recip());
        }
        Ok(out)
    }

    /// Formal exponential; the constant coefficient must be `0`.
    pub fn exp(&self) -> Result<PochhammerSeries, Error> {
        let zero = DimVector::zero(self.bound.len());
        if !self.numerator(&zero).is_zero() {
            return Err(Error::Precondition(
                "exp needs constant coefficient 0".into(),
            ));
        }
        let binom = self.binomials();
        let mut h = self.nums.clone();
        for d in &self.order {
            let i = self.shape.index(d);
            let deg = BigRational::from_integer(BigInt::from(d.total()));
            h[i] = h[i].scale(&deg);
        }
        // |d| f_d = sum_{0<e<=d} h_e f_(d-e)
        let mut out = Self::zero(&self.bound);
        out.nums[self.shape.index(&zero)] = ScaledPoly::from_int(IntPoly::one());
        for d in &self.order {
            if d.is_zero() {
                continue;
            }
            let conv = self.convolve_at(&binom, &h, &out.nums, d, true);
            let deg = BigRational::from_integer(BigInt::from(d.total()));
            out.nums[self.shape.index(d)] = conv.scale(&deg.recip());
        }
        Ok(out)
    }
}
