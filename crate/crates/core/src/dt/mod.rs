//! Donaldson–Thomas invariants from the product factorization of the
//! partition series.
//!
//! Writing `y = -q^(1/2)` and `psi_m(f)(y) = f(-(-y)^m)`, the logarithm of
//! the product form is
//!
//! ```text
//! log P_A = sum_{d != 0} sum_{m >= 1} (1/m) psi_m(Omega_d) x^(m d),
//! Omega_d = -y DT_d / (1 - y^2),
//! ```
//!
//! where the `1 / (1 - y^2)` collects the factors over `k >= 0` and the
//! signs `(-1)^(i+1)` together with the shift `(i+1)/2` collapse into the
//! single substitution `psi_m`. Extraction inverts this divisor sum in
//! graded order; reconstruction evaluates it forward and exponentiates.

mod closed_forms;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{reduce_over_one_minus_powers, IntPoly, RationalFunction, ScaledPoly};
use crate::series::{
    adams_cofactor, build_partition_series, denominator_factors, series_exp, DimVector,
    PochhammerSeries, QuiverMatrix, TruncatedSeries,
};
use crate::Error;

pub use closed_forms::{
    finite_case_dt, kronecker_dt, loop_dt_at_one, moebius, nonvanishing, FiniteCase,
};

/// One row of a [`DtTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtEntry {
    pub d: DimVector,
    /// `DT_d` as a rational function of `y`.
    pub raw: RationalFunction,
    /// `y^(N(d)+1) DT_d`.
    pub normalized: RationalFunction,
    /// `(k, c_{d,k})` with `DT_d = sum_k c_{d,k} y^k`, ascending in `k`;
    /// present only when `DT_d` is a Laurent polynomial.
    pub coeffs: Option<Vec<(i64, BigRational)>>,
    pub is_polynomial: bool,
    /// The normalized value is a polynomial in `y` with nonnegative integer
    /// coefficients.
    pub is_nonnegative: bool,
    pub warning_nonsymmetric: bool,
}

impl DtEntry {
    pub fn new(a: &QuiverMatrix, d: DimVector, raw: RationalFunction) -> Self {
        let normalized = normalize_dt(a, &d, &raw);
        let coeffs = raw
            .as_laurent()
            .map(|p| p.terms().map(|(k, c)| (k, c.clone())).collect());
        let is_nonnegative = in_natural_polynomials(&normalized);
        Self {
            is_polynomial: raw.is_laurent_polynomial(),
            is_nonnegative,
            warning_nonsymmetric: !a.is_symmetric(),
            coeffs,
            raw,
            normalized,
            d,
        }
    }

    /// The normalized invariant at `q = 1` (`y = -1`).
    pub fn at_one(&self) -> Result<BigRational, Error> {
        self.normalized.eval_at_q1()
    }
}

fn in_natural_polynomials(f: &RationalFunction) -> bool {
    f.as_laurent().is_some_and(|p| {
        p.is_polynomial() && p.terms().all(|(_, c)| c.is_integer() && !c.is_negative())
    })
}

/// DT invariants for every `d != 0` inside a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtTable {
    matrix: QuiverMatrix,
    bound: DimVector,
    entries: BTreeMap<DimVector, DtEntry>,
}

impl DtTable {
    /// Assembles a table from given raw values; used to feed externally
    /// computed or deliberately wrong tables to [`reconstruct_series`].
    pub fn from_raw<I>(a: &QuiverMatrix, bound: &DimVector, raw: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (DimVector, RationalFunction)>,
    {
        let mut entries = BTreeMap::new();
        for (d, v) in raw {
            if d.is_zero() || !d.le(bound) {
                return Err(Error::InvalidInput(format!(
                    "table index {d} outside 0 < d <= {bound}"
                )));
            }
            entries.insert(d.clone(), DtEntry::new(a, d, v));
        }
        Ok(Self {
            matrix: a.clone(),
            bound: bound.clone(),
            entries,
        })
    }

    pub fn matrix(&self) -> &QuiverMatrix {
        &self.matrix
    }

    pub fn bound(&self) -> &DimVector {
        &self.bound
    }

    pub fn get(&self, d: &DimVector) -> Option<&DtEntry> {
        self.entries.get(d)
    }

    /// The raw invariant, zero when absent.
    pub fn raw(&self, d: &DimVector) -> RationalFunction {
        self.entries
            .get(d)
            .map(|e| e.raw.clone())
            .unwrap_or_default()
    }

    /// Rows in graded-lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = &DtEntry> {
        self.entries.values()
    }

    pub fn warning_nonsymmetric(&self) -> bool {
        !self.matrix.is_symmetric()
    }

    fn is_complete(&self) -> bool {
        self.bound
            .sub_box()
            .iter()
            .all(|d| d.is_zero() || self.entries.contains_key(d))
    }
}

/// `y^(N(d)+1) * raw` with `N(d) = sum (a_ij - delta_ij) d_i d_j`.
pub fn normalize_dt(a: &QuiverMatrix, d: &DimVector, raw: &RationalFunction) -> RationalFunction {
    raw.shift(a.twist_exponent(d) + 1)
}

fn check_shape(a: &QuiverMatrix, bound: &DimVector) -> Result<(), Error> {
    if a.n() != bound.len() {
        return Err(Error::InvalidInput(format!(
            "bound {bound} has {} components but the matrix has {} rows",
            bound.len(),
            a.n()
        )));
    }
    Ok(())
}

fn inv(m: u32) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(m))
}

/// Proper divisors `m > 1` of the content of `d` with the quotient `d / m`.
fn proper_divisor_pairs(d: &DimVector) -> Vec<(u32, DimVector)> {
    let c = d.content();
    (2..=c)
        .filter(|m| c.is_multiple_of(*m))
        .map(|m| (m, d.div_exact(m).unwrap()))
        .collect()
}

/// DT invariants of `a` for all `0 < d <= bound`.
///
/// Works in the common-denominator representation throughout: each
/// `Omega_d` is a numerator over `D(d)`, since `psi_m(D(d/m))` divides
/// `D(d)`. Only the final `DT_d` is reduced to canonical form.
pub fn extract_dt(a: &QuiverMatrix, bound: &DimVector) -> Result<DtTable, Error> {
    check_shape(a, bound)?;
    let log = PochhammerSeries::partition(a, bound).log()?;
    let mut omega = PochhammerSeries::zero(bound);
    // -(1 - y^2) / y
    let to_dt = IntPoly::from_coeffs(-1, vec![BigInt::from(-1), BigInt::zero(), BigInt::from(1)]);
    let mut entries = BTreeMap::new();
    for d in log.vectors().to_vec() {
        if d.is_zero() {
            continue;
        }
        let mut acc = log.numerator(&d).clone();
        for (m, e) in proper_divisor_pairs(&d) {
            let term = omega
                .numerator(&e)
                .adams(m)
                .mul_poly(&adams_cofactor(m, &e))
                .scale(&inv(m));
            acc = acc.sub(&term);
        }
        let raw = reduce_over_one_minus_powers(&acc.mul_poly(&to_dt), &denominator_factors(&d));
        omega.set(&d, acc);
        entries.insert(d.clone(), DtEntry::new(a, d, raw));
    }
    Ok(DtTable {
        matrix: a.clone(),
        bound: bound.clone(),
        entries,
    })
}

/// Verdict per `d`: the normalized invariant lies in `N[y]`.
///
/// Positivity is a theorem only for symmetric matrices, so other input is
/// refused.
pub fn check_efimov(table: &DtTable) -> Result<BTreeMap<DimVector, bool>, Error> {
    if table.warning_nonsymmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(table
        .entries()
        .map(|e| (e.d.clone(), e.is_nonnegative))
        .collect())
}

/// `Omega_d = -y DT_d / (1 - y^2)` as a numerator over `D(d)`, if it has
/// that form.
fn omega_numerator(d: &DimVector, raw: &RationalFunction) -> Option<ScaledPoly> {
    if raw.is_zero() {
        return Some(ScaledPoly::zero());
    }
    // D(d) / (1 - y^2): drop one k = 1 factor
    let mut factors = denominator_factors(d);
    let pos = factors.iter().position(|&n| n == 2)?;
    factors.swap_remove(pos);
    let cofactor = factors
        .into_iter()
        .fold(IntPoly::one(), |acc, n| &acc * &IntPoly::one_minus_power(n))
        .shift(1);
    let cof = RationalFunction::from(cofactor.to_laurent());
    let value = -(raw * &cof);
    value.as_laurent().map(ScaledPoly::from_laurent)
}

/// Expands the product form of `table` and checks it against `P_A`.
///
/// Returns the expanded series, which then equals
/// `build_partition_series(a, bound)`; any difference is reported at the
/// first differing dimension vector.
pub fn reconstruct_series(
    a: &QuiverMatrix,
    table: &DtTable,
    bound: &DimVector,
) -> Result<TruncatedSeries, Error> {
    check_shape(a, bound)?;
    if !bound.le(table.bound()) || !table.is_complete() {
        return Err(Error::Precondition(format!(
            "table must cover every 0 < d <= {bound}"
        )));
    }
    let vectors = bound.sub_box();
    let mut omega = PochhammerSeries::zero(bound);
    let mut fast = true;
    for d in vectors.iter().filter(|d| !d.is_zero()) {
        match omega_numerator(d, &table.raw(d)) {
            Some(n) => omega.set(d, n),
            None => {
                fast = false;
                break;
            }
        }
    }
    if !fast {
        return reconstruct_generic(a, table, bound);
    }
    let mut log = PochhammerSeries::zero(bound);
    for d in vectors.iter().filter(|d| !d.is_zero()) {
        let mut acc = omega.numerator(d).clone();
        for (m, e) in proper_divisor_pairs(d) {
            let term = omega
                .numerator(&e)
                .adams(m)
                .mul_poly(&adams_cofactor(m, &e))
                .scale(&inv(m));
            acc = acc.add(&term);
        }
        log.set(d, acc);
    }
    let expanded = log.exp()?;
    if let Some(d) = expanded.first_difference(&PochhammerSeries::partition(a, bound)) {
        return Err(Error::ReconstructionMismatch(d));
    }
    Ok(expanded.to_truncated())
}

fn reconstruct_generic(
    a: &QuiverMatrix,
    table: &DtTable,
    bound: &DimVector,
) -> Result<TruncatedSeries, Error> {
    let y = RationalFunction::y();
    let one_minus_q = RationalFunction::from(crate::LaurentPoly::from_int_terms([(0, 1), (2, -1)]));
    let mut log = TruncatedSeries::zero(bound.clone());
    for d in bound.sub_box().iter().filter(|d| !d.is_zero()) {
        let raw = table.raw(d);
        if raw.is_zero() {
            continue;
        }
        let omega = -(&y * &raw).checked_div(&one_minus_q)?;
        let mut m = 1;
        loop {
            let md = d.scale(m);
            if !md.le(bound) {
                break;
            }
            let term = omega.adams(m).scale(&inv(m));
            let cur = log.coeff(&md);
            log.set(md, &cur + &term);
            m += 1;
        }
    }
    let expanded = series_exp(&log)?;
    if let Some(d) = expanded.first_difference(&build_partition_series(a, bound)) {
        return Err(Error::ReconstructionMismatch(d));
    }
    Ok(expanded)
}

/// The generic, gcd-based path is exposed for cross-checking the
/// common-denominator pipeline.
pub fn reconstruct_series_generic(
    a: &QuiverMatrix,
    table: &DtTable,
    bound: &DimVector,
) -> Result<TruncatedSeries, Error> {
    check_shape(a, bound)?;
    reconstruct_generic(a, table, bound)
}

#[cfg(test)]
mod tests;
