use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::DimVector;
use crate::arith::RationalFunction;
use crate::Error;

/// A multivariate power series in `x_1..x_n` with coefficients in `Q(y)`,
/// truncated to the box `d <= bound`. Absent keys are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    bound: DimVector,
    coeffs: BTreeMap<DimVector, RationalFunction>,
}

impl TruncatedSeries {
    pub fn zero(bound: DimVector) -> Self {
        Self {
            bound,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(bound: DimVector) -> Self {
        let mut s = Self::zero(bound);
        let z = DimVector::zero(s.bound.len());
        s.coeffs.insert(z, RationalFunction::one());
        s
    }

    /// Builds a series from explicit coefficients; keys outside the bound
    /// are rejected.
    pub fn from_coeffs<I>(bound: DimVector, coeffs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (DimVector, RationalFunction)>,
    {
        let mut s = Self::zero(bound);
        for (d, c) in coeffs {
            if !d.le(&s.bound) {
                return Err(Error::InvalidInput(format!(
                    "coefficient index {d} outside bound {}",
                    s.bound
                )));
            }
            s.add_to(d, &c);
        }
        Ok(s)
    }

    pub fn bound(&self) -> &DimVector {
        &self.bound
    }

    pub fn coeff(&self, d: &DimVector) -> RationalFunction {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, d: &DimVector) -> Option<&RationalFunction> {
        self.coeffs.get(d)
    }

    /// Nonzero coefficients in graded-lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&DimVector, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn set(&mut self, d: DimVector, c: RationalFunction) {
        debug_assert!(d.le(&self.bound));
        if c.is_zero() {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, c);
        }
    }

    fn add_to(&mut self, d: DimVector, c: &RationalFunction) {
        let sum = &self.coeff(&d) + c;
        self.set(d, sum);
    }

    pub fn constant_term(&self) -> RationalFunction {
        self.coeff(&DimVector::zero(self.bound.len()))
    }

    /// First index (graded-lexicographic) where the two series differ.
    pub fn first_difference(&self, other: &TruncatedSeries) -> Option<DimVector> {
        self.coeffs
            .keys()
            .chain(other.coeffs.keys())
            .filter(|d| self.coeffs.get(*d) != other.coeffs.get(*d))
            .min()
            .cloned()
    }

    fn check_bounds(&self, other: &TruncatedSeries) -> Result<(), Error> {
        if self.bound != other.bound {
            return Err(Error::BoundMismatch(
                self.bound.clone(),
                other.bound.clone(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        self.check_bounds(other)?;
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_to(d.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> TruncatedSeries {
        Self {
            bound: self.bound.clone(),
            coeffs: self.coeffs.iter().map(|(d, c)| (d.clone(), -c)).collect(),
        }
    }
}

/// Cauchy product truncated to the common bound.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    a.check_bounds(b)?;
    let mut out = TruncatedSeries::zero(a.bound.clone());
    for (da, ca) in &a.coeffs {
        for (db, cb) in &b.coeffs {
            let d = da.add(db);
            if d.le(&a.bound) {
                out.add_to(d, &(ca * cb));
            }
        }
    }
    Ok(out)
}

fn degree_scalar(d: &DimVector) -> BigRational {
    BigRational::from_integer(BigInt::from(d.total()))
}

/// Formal logarithm of a series with constant term `1`.
///
/// Uses the Euler-operator identity `E(f) = f * E(log f)`, where `E`
/// multiplies the `x^d` coefficient by `|d|`; this needs one pass over the
/// box instead of a power series in `f - 1`.
pub fn series_log(a: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    if !a.constant_term().is_one() {
        return Err(Error::Precondition(
            "log needs constant coefficient 1".into(),
        ));
    }
    let zero = DimVector::zero(a.bound.len());
    // h_d = |d| (log a)_d
    let mut h: BTreeMap<DimVector, RationalFunction> = BTreeMap::new();
    for d in a.bound.sub_box() {
        if d.is_zero() {
            continue;
        }
        let mut acc = a.coeff(&d).scale(&degree_scalar(&d));
        for (e, he) in &h {
            if e.le(&d) {
                if let Some(f) = a.coeff_ref(&d.sub(e)) {
                    acc = &acc - &(he * f);
                }
            }
        }
        if !acc.is_zero() {
            h.insert(d, acc);
        }
    }
    let coeffs = h.into_iter().filter(|(d, _)| *d != zero).map(|(d, hd)| {
        let g = hd.scale(&degree_scalar(&d).recip());
        (d, g)
    });
    TruncatedSeries::from_coeffs(a.bound.clone(), coeffs)
}

/// Formal exponential of a series with constant term `0`.
pub fn series_exp(a: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    if !a.constant_term().is_zero() {
        return Err(Error::Precondition(
            "exp needs constant coefficient 0".into(),
        ));
    }
    let mut out = TruncatedSeries::one(a.bound.clone());
    let h: Vec<(DimVector, RationalFunction)> = a
        .coeffs
        .iter()
        .map(|(d, c)| (d.clone(), c.scale(&degree_scalar(d))))
        .collect();
    for d in a.bound.sub_box() {
        if d.is_zero() {
            continue;
        }
        let mut acc = RationalFunction::zero();
        for (e, he) in &h {
            if e.le(&d) {
                if let Some(f) = out.coeff_ref(&d.sub(e)) {
                    acc = &acc + &(he * f);
                }
            }
        }
        out.set(d.clone(), acc.scale(&degree_scalar(&d).recip()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: u32) -> DimVector {
        DimVector::from([k])
    }

    fn rat(n: i64, d: i64) -> RationalFunction {
        RationalFunction::from_rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn unit_and_difference_of_squares() {
        let b = x(2);
        let a = TruncatedSeries::from_coeffs(b.clone(), [(x(0), rat(1, 1)), (x(1), rat(3, 1))])
            .unwrap();
        assert_eq!(series_mul(&a, &TruncatedSeries::one(b.clone())).unwrap(), a);
        let p = TruncatedSeries::from_coeffs(b.clone(), [(x(0), rat(1, 1)), (x(1), rat(1, 1))])
            .unwrap();
        let m = TruncatedSeries::from_coeffs(b.clone(), [(x(0), rat(1, 1)), (x(1), rat(-1, 1))])
            .unwrap();
        let want =
            TruncatedSeries::from_coeffs(b, [(x(0), rat(1, 1)), (x(2), rat(-1, 1))]).unwrap();
        assert_eq!(series_mul(&p, &m).unwrap(), want);
    }

    #[test]
    fn bound_mismatch_is_an_error() {
        let a = TruncatedSeries::one(x(2));
        let b = TruncatedSeries::one(x(3));
        assert!(matches!(series_mul(&a, &b), Err(Error::BoundMismatch(..))));
    }

    #[test]
    fn log_exp_identities() {
        let b = DimVector::from([2, 2]);
        assert_eq!(
            series_log(&TruncatedSeries::one(b.clone())).unwrap(),
            TruncatedSeries::zero(b.clone())
        );
        assert_eq!(
            series_exp(&TruncatedSeries::zero(b.clone())).unwrap(),
            TruncatedSeries::one(b)
        );
    }

    #[test]
    fn mercator_series() {
        let b = x(3);
        let one_plus_x =
            TruncatedSeries::from_coeffs(b.clone(), [(x(0), rat(1, 1)), (x(1), rat(1, 1))])
                .unwrap();
        let want = TruncatedSeries::from_coeffs(
            b,
            [(x(1), rat(1, 1)), (x(2), rat(-1, 2)), (x(3), rat(1, 3))],
        )
        .unwrap();
        assert_eq!(series_log(&one_plus_x).unwrap(), want);
    }

    #[test]
    fn preconditions() {
        let b = x(2);
        assert!(series_log(&TruncatedSeries::zero(b.clone())).is_err());
        assert!(series_exp(&TruncatedSeries::one(b)).is_err());
    }
}
