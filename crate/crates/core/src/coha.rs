//! The shuffle algebra on `W_d`-invariant polynomials and its
//! Poincaré–Hilbert series.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::RationalFunction;
use crate::series::{partition_coefficient, DimVector, QuiverMatrix};
use crate::Error;

/// Polynomial in `nvars` commuting variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: BigRational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            Some(first) => degs.all(|d| d == first),
            None => true,
        }
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Renames variable `v` to `map[v]` in a ring with `nvars` variables.
    pub fn rename(&self, map: &[usize], nvars: usize) -> MultiPoly {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; nvars];
            for (v, &k) in e.iter().enumerate() {
                f[map[v]] += k;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// `self / (x_q - x_p)` if the division is exact.
    pub fn div_linear(&self, q: usize, p: usize) -> Option<MultiPoly> {
        // P = sum_k P_k x_q^k;  Q_{k-1} = P_k + x_p Q_k, remainder P_0 + x_p Q_0
        let mut by_power: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = std::mem::take(&mut rest[q]);
            by_power
                .entry(k)
                .or_insert_with(|| Self::zero(self.nvars))
                .add_term(rest, c.clone());
        }
        let top = match by_power.keys().next_back() {
            Some(&t) => t,
            None => return Some(Self::zero(self.nvars)),
        };
        let xp = Self::var(self.nvars, p);
        let xq = Self::var(self.nvars, q);
        let mut quotient = Self::zero(self.nvars);
        let mut carry = Self::zero(self.nvars);
        for k in (0..=top).rev() {
            let pk = by_power
                .remove(&k)
                .unwrap_or_else(|| Self::zero(self.nvars));
            let next = pk.add(&xp.mul(&carry));
            if k == 0 {
                return next.is_zero().then_some(quotient);
            }
            quotient = quotient.add(&next.mul(&xq.pow(k - 1)));
            carry = next;
        }
        unreachable!()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (v, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{v}")?,
                    _ => write!(f, "*x{v}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

/// Offsets of the variable blocks `x_{i,1..d_i}` in the flat numbering.
fn offsets(d: &DimVector) -> Vec<usize> {
    let mut out = Vec::with_capacity(d.len());
    let mut acc = 0;
    for &c in d.components() {
        out.push(acc);
        acc += c as usize;
    }
    out
}

/// A `W_d`-invariant polynomial in the variables `x_{i,r}`, numbered
/// vertex by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantPolynomial {
    d: DimVector,
    poly: MultiPoly,
}

impl InvariantPolynomial {
    pub fn new(d: DimVector, poly: MultiPoly) -> Result<Self, Error> {
        if poly.nvars() != d.total() as usize {
            return Err(Error::InvalidInput(format!(
                "polynomial has {} variables but {d} needs {}",
                poly.nvars(),
                d.total()
            )));
        }
        if !is_w_invariant(&d, &poly) {
            return Err(Error::InvalidInput(format!(
                "polynomial is not W-invariant for {d}"
            )));
        }
        Ok(Self { d, poly })
    }

    pub fn one(d: DimVector) -> Self {
        let poly = MultiPoly::one(d.total() as usize);
        Self { d, poly }
    }

    /// Sum of `p` over all permutations within each vertex block.
    pub fn symmetrize(d: DimVector, p: &MultiPoly) -> Result<Self, Error> {
        let nv = d.total() as usize;
        if p.nvars() != nv {
            return Err(Error::InvalidInput("variable count does not match".into()));
        }
        let mut maps: Vec<Vec<usize>> = vec![(0..nv).collect()];
        for (off, &c) in offsets(&d).iter().zip(d.components()) {
            let mut perm: Vec<usize> = (0..c as usize).collect();
            let mut block = Vec::new();
            loop {
                block.push(perm.clone());
                if !crate::series::next_permutation(&mut perm) {
                    break;
                }
            }
            maps = maps
                .into_iter()
                .flat_map(|m| {
                    block.iter().map(move |perm| {
                        let mut m = m.clone();
                        for (r, &s) in perm.iter().enumerate() {
                            m[off + r] = off + s;
                        }
                        m
                    })
                })
                .collect();
        }
        let poly = maps
            .iter()
            .fold(MultiPoly::zero(nv), |acc, m| acc.add(&p.rename(m, nv)));
        Ok(Self { d, poly })
    }

    pub fn d(&self) -> &DimVector {
        &self.d
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn neg(&self) -> Self {
        Self {
            d: self.d.clone(),
            poly: self.poly.neg(),
        }
    }
}

/// Invariance under adjacent transpositions within each vertex block,
/// which generate `W_d`.
pub fn is_w_invariant(d: &DimVector, p: &MultiPoly) -> bool {
    let nv = d.total() as usize;
    offsets(d).iter().zip(d.components()).all(|(&off, &c)| {
        (1..c as usize).all(|r| {
            let mut m: Vec<usize> = (0..nv).collect();
            m.swap(off + r - 1, off + r);
            p.rename(&m, nv) == *p
        })
    })
}

/// `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The shuffle product with kernel
/// `prod_{i,j} prod_{r,s} (x_{j, e-slot s} - x_{i, d-slot r})^(a_ij - delta_ij)`.
///
/// Vertices without a loop give kernel exponent `-1`; those summands are
/// put over the common denominator `prod_{p<q} (x_q - x_p)` within each such
/// vertex and the sum is divided out exactly afterwards.
pub fn shuffle_product(
    f: &InvariantPolynomial,
    g: &InvariantPolynomial,
    a: &QuiverMatrix,
) -> Result<InvariantPolynomial, Error> {
    let n = a.n();
    if f.d.len() != n || g.d.len() != n {
        return Err(Error::InvalidInput(
            "dimension vectors do not match the matrix".into(),
        ));
    }
    for h in [f, g] {
        if !is_w_invariant(&h.d, &h.poly) {
            return Err(Error::InvalidInput(format!(
                "factor is not W-invariant for {}",
                h.d
            )));
        }
    }
    let total = f.d.add(&g.d);
    let nv = total.total() as usize;
    let off = offsets(&total);
    let (dc, ec) = (f.d.components(), g.d.components());
    let loopless: Vec<bool> = (0..n).map(|i| a.entry(i, i) == 0).collect();

    // per vertex: all (S, complement) splits
    let splits: Vec<Vec<(Vec<usize>, Vec<usize>)>> = (0..n)
        .map(|i| {
            let m = (dc[i] + ec[i]) as usize;
            subsets(m, dc[i] as usize)
                .into_iter()
                .map(|s| {
                    let c = (0..m).filter(|x| !s.contains(x)).collect();
                    (s, c)
                })
                .collect()
        })
        .collect();

    let mut sum = MultiPoly::zero(nv);
    let mut choice = vec![0usize; n];
    loop {
        let off = &off;
        let fmap: Vec<usize> = (0..n)
            .flat_map(|i| splits[i][choice[i]].0.iter().map(move |&r| off[i] + r))
            .collect();
        let gmap: Vec<usize> = (0..n)
            .flat_map(|i| splits[i][choice[i]].1.iter().map(move |&s| off[i] + s))
            .collect();
        let mut term = f.poly.rename(&fmap, nv).mul(&g.poly.rename(&gmap, nv));
        let mut sign = 1i32;
        for i in 0..n {
            let (si, _) = &splits[i][choice[i]];
            for j in 0..n {
                let (_, cj) = &splits[j][choice[j]];
                let exp = a.entry(i, j) as i64 - i64::from(i == j);
                if exp == 0 {
                    continue;
                }
                for &r in si {
                    for &s in cj {
                        let (xi, xj) = (off[i] + r, off[j] + s);
                        if exp > 0 {
                            let lin = MultiPoly::var(nv, xj).sub(&MultiPoly::var(nv, xi));
                            term = term.mul(&lin.pow(exp as u32));
                        } else if xj < xi {
                            // Delta / (x_xj - x_xi) = -(Delta without (x_xi - x_xj))
                            sign = -sign;
                        }
                    }
                }
            }
        }
        // complete the common denominator with same-side pairs
        for i in (0..n).filter(|&i| loopless[i]) {
            let (si, ci) = &splits[i][choice[i]];
            for side in [si, ci] {
                for (k, &p) in side.iter().enumerate() {
                    for &q in &side[k + 1..] {
                        let lin =
                            MultiPoly::var(nv, off[i] + q).sub(&MultiPoly::var(nv, off[i] + p));
                        term = term.mul(&lin);
                    }
                }
            }
        }
        sum = if sign > 0 {
            sum.add(&term)
        } else {
            sum.sub(&term)
        };

        let mut i = 0;
        loop {
            if i == n {
                return finish(sum, &total, off, &loopless);
            }
            choice[i] += 1;
            if choice[i] < splits[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn finish(
    mut sum: MultiPoly,
    total: &DimVector,
    off: &[usize],
    loopless: &[bool],
) -> Result<InvariantPolynomial, Error> {
    for (i, &c) in total.components().iter().enumerate() {
        if !loopless[i] {
            continue;
        }
        for p in 0..c as usize {
            for q in p + 1..c as usize {
                sum = sum.div_linear(off[i] + q, off[i] + p).ok_or_else(|| {
                    Error::Consistency("shuffle product did not cancel to a polynomial".into())
                })?;
            }
        }
    }
    if !is_w_invariant(total, &sum) {
        return Err(Error::Consistency(format!(
            "shuffle product is not W-invariant for {total}"
        )));
    }
    Ok(InvariantPolynomial {
        d: total.clone(),
        poly: sum,
    })
}

/// `Some(1)` if `f*g = g*f`, `Some(-1)` if `f*g = -g*f`, else `None`.
/// A zero product reports `Some(1)`.
pub fn commutation_sign(
    f: &InvariantPolynomial,
    g: &InvariantPolynomial,
    a: &QuiverMatrix,
) -> Result<Option<i8>, Error> {
    let fg = shuffle_product(f, g, a)?;
    let gf = shuffle_product(g, f, a)?;
    Ok(if fg == gf {
        Some(1)
    } else if fg == gf.neg() {
        Some(-1)
    } else {
        None
    })
}

/// Cohomological degree of a degree-`m` element in the `d`-component:
/// `2m - N(d)`.
pub fn cohomological_degree(a: &QuiverMatrix, d: &DimVector, m: u32) -> i64 {
    2 * i64::from(m) - a.twist_exponent(d)
}

/// `(d, 2m - N(d))` for a homogeneous invariant polynomial.
pub fn bidegree(a: &QuiverMatrix, f: &InvariantPolynomial) -> Option<(DimVector, i64)> {
    if !f.poly.is_homogeneous() {
        return None;
    }
    let m = f.poly.degree()?;
    Some((f.d.clone(), cohomological_degree(a, &f.d, m)))
}

/// `dim Q[x_{i,r}]^{W_d}` in each degree `0..=max`: partitions into parts
/// of size at most `d_i`, convolved over the vertices.
pub fn invariant_dimensions(d: &DimVector, max: usize) -> Vec<BigInt> {
    let mut dims = vec![BigInt::zero(); max + 1];
    dims[0] = BigInt::one();
    for &c in d.components() {
        for k in 1..=c as usize {
            for m in k..=max {
                let prev = dims[m - k].clone();
                dims[m] += prev;
            }
        }
    }
    dims
}

/// Terms `y^e` with `e >= lowest` of the expansion of `f` in descending
/// powers of `y`.
fn expand_descending(f: &RationalFunction, lowest: i64) -> BTreeMap<i64, BigRational> {
    let num = f.numerator();
    let den = f.denominator();
    let mut out = BTreeMap::new();
    let (Some(top_n), Some(top_d)) = (num.max_exp(), den.max_exp()) else {
        return out;
    };
    let lead = den.coeff(top_d);
    // f = y^(top_n - top_d) * sum_k c_k y^-k
    let shift = top_n - top_d;
    let count = shift - lowest;
    if count < 0 {
        return out;
    }
    let mut c: Vec<BigRational> = Vec::with_capacity(count as usize + 1);
    for k in 0..=count {
        let mut acc = num.coeff(top_n - k);
        for (j, cj) in c.iter().enumerate() {
            let dk = den.coeff(top_d - (k - j as i64));
            if !dk.is_zero() {
                acc -= cj * dk;
            }
        }
        c.push(acc / &lead);
    }
    for (k, ck) in c.into_iter().enumerate() {
        if !ck.is_zero() {
            out.insert(shift - k as i64, ck);
        }
    }
    out
}

/// Compares `sum_m dim_m y^-(2m - N(d))` with the descending expansion of
/// the `x^d` coefficient of `P_A`, for cohomological degrees `<= cutoff`.
pub fn hilbert_series_check(a: &QuiverMatrix, d: &DimVector, cutoff: i64) -> Result<bool, Error> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if d.len() != a.n() {
        return Err(Error::InvalidInput(format!(
            "{d} does not match the matrix"
        )));
    }
    let n_d = a.twist_exponent(d);
    let lowest = -cutoff;
    let mut algebra = BTreeMap::new();
    // cohomological degree 2m - N(d) <= cutoff
    if cutoff + n_d >= 0 {
        let max_m = ((cutoff + n_d) / 2) as usize;
        for (m, dim) in invariant_dimensions(d, max_m).into_iter().enumerate() {
            if !dim.is_zero() {
                algebra.insert(
                    -cohomological_degree(a, d, m as u32),
                    BigRational::from_integer(dim),
                );
            }
        }
    }
    let series = expand_descending(&partition_coefficient(a, d), lowest);
    Ok(algebra == series)
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    fn int(c: i64) -> BigRational {
        BigRational::from_integer(c.into())
    }

    fn mat<const N: usize>(rows: [[u32; N]; N]) -> QuiverMatrix {
        QuiverMatrix::from_rows(rows)
    }

    #[test]
    fn product_examples() {
        let one = InvariantPolynomial::one([1].into());
        let p = shuffle_product(&one, &one, &mat([[0]])).unwrap();
        assert!(p.is_zero());
        let p = shuffle_product(&one, &one, &mat([[1]])).unwrap();
        assert_eq!(p.poly, MultiPoly::constant(2, int(2)));
        let x = InvariantPolynomial::new([1].into(), MultiPoly::var(1, 0)).unwrap();
        let p = shuffle_product(&x, &one, &mat([[1]])).unwrap();
        assert_eq!(p.poly, MultiPoly::var(2, 0).add(&MultiPoly::var(2, 1)));
    }

    #[test]
    fn non_invariant_input_is_rejected() {
        let p = MultiPoly::var(2, 0);
        assert!(InvariantPolynomial::new([2].into(), p).is_err());
        assert!(InvariantPolynomial::new([1, 1].into(), MultiPoly::var(2, 0)).is_ok());
    }

    #[test]
    fn exact_linear_division() {
        let x0 = MultiPoly::var(2, 0);
        let x1 = MultiPoly::var(2, 1);
        let p = x1.pow(3).sub(&x0.pow(3));
        let q = p.div_linear(1, 0).unwrap();
        assert_eq!(q.mul(&x1.sub(&x0)), p);
        assert!(x1.add(&x0).div_linear(1, 0).is_none());
    }

    #[test]
    fn bidegree_fixtures() {
        for k in 0..5u32 {
            let xk = InvariantPolynomial::new([1].into(), MultiPoly::var(1, 0).pow(k)).unwrap();
            assert_eq!(
                bidegree(&mat([[0]]), &xk),
                Some(([1].into(), 2 * i64::from(k) + 1))
            );
            assert_eq!(
                bidegree(&mat([[1]]), &xk),
                Some(([1].into(), 2 * i64::from(k)))
            );
        }
    }

    #[test]
    fn invariant_dimension_counts() {
        let got = invariant_dimensions(&[3].into(), 6);
        let want: Vec<BigInt> = [1, 1, 2, 3, 4, 5, 7]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn hilbert_examples() {
        for a in [mat([[0]]), mat([[1]]), mat([[2]])] {
            for d in 0..=3 {
                assert!(
                    hilbert_series_check(&a, &[d].into(), 20).unwrap(),
                    "A={a} d={d}"
                );
            }
        }
        let k = mat([[0, 1], [1, 0]]);
        for d in DimVector::from([3, 3])
            .sub_box()
            .into_iter()
            .filter(|d| d.total() <= 3)
        {
            assert!(hilbert_series_check(&k, &d, 20).unwrap(), "d={d}");
        }
    }

    #[test]
    fn descending_expansion_of_geometric_series() {
        // -y/(1 - y^2) = y^-1 + y^-3 + ...
        let f = partition_coefficient(&mat([[0]]), &[1].into());
        let got = expand_descending(&f, -7);
        let want: BTreeMap<i64, BigRational> =
            [-1, -3, -5, -7].iter().map(|&e| (e, int(1))).collect();
        assert_eq!(got, want);
    }

    fn random_invariant(rng: &mut ChaCha8Rng, d: &DimVector) -> InvariantPolynomial {
        let nv = d.total() as usize;
        let mut p = MultiPoly::zero(nv);
        for _ in 0..rng.gen_range(1..=2) {
            let exps = (0..nv).map(|_| rng.gen_range(0..=2)).collect();
            p = p.add(&MultiPoly::monomial(exps, int(rng.gen_range(-3..=3))));
        }
        InvariantPolynomial::symmetrize(d.clone(), &p).unwrap()
    }

    fn random_dim(rng: &mut ChaCha8Rng, n: usize, max_total: u32) -> DimVector {
        loop {
            let d: DimVector = (0..n)
                .map(|_| rng.gen_range(0..=max_total))
                .collect::<Vec<_>>()
                .into();
            if d.total() >= 1 && d.total() <= max_total {
                return d;
            }
        }
    }

    #[test]
    fn associativity_and_grading() {
        let mats = [mat([[0]]), mat([[1]]), mat([[2]])];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        for round in 0..16 {
            let a = if round % 4 == 3 {
                mat([[0, 1], [1, 0]])
            } else {
                mats[round % 3].clone()
            };
            let d = random_dim(&mut rng, a.n(), 2);
            let e = random_dim(&mut rng, a.n(), 3 - d.total().min(2));
            let h = random_dim(&mut rng, a.n(), (4 - d.total() - e.total()).max(1));
            if d.total() + e.total() + h.total() > 4 {
                continue;
            }
            let (f, g, k) = (
                random_invariant(&mut rng, &d),
                random_invariant(&mut rng, &e),
                random_invariant(&mut rng, &h),
            );
            let left = shuffle_product(&shuffle_product(&f, &g, &a).unwrap(), &k, &a).unwrap();
            let right = shuffle_product(&f, &shuffle_product(&g, &k, &a).unwrap(), &a).unwrap();
            assert_eq!(left, right, "A={a} d={d} e={e} h={h}");
            let fg = shuffle_product(&f, &g, &a).unwrap();
            if !fg.is_zero() && f.poly.is_homogeneous() && g.poly.is_homogeneous() {
                let want = i64::from(f.poly.degree().unwrap() + g.poly.degree().unwrap())
                    + a.twisted_pairing(&d, &e);
                assert_eq!(i64::from(fg.poly.degree().unwrap()), want);
            }
            checked += 1;
        }
        assert!(checked >= 8);
    }

    #[test]
    fn commutation_sign_diagnostic() {
        let one = InvariantPolynomial::one([1].into());
        let x = InvariantPolynomial::new([1].into(), MultiPoly::var(1, 0)).unwrap();
        assert_eq!(commutation_sign(&x, &one, &mat([[1]])).unwrap(), Some(1));
        assert_eq!(commutation_sign(&x, &one, &mat([[0]])).unwrap(), Some(-1));
    }
}
