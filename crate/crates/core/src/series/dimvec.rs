use std::cmp::Ordering;
use std::fmt;

/// A dimension vector: one nonnegative integer per quiver vertex.
///
/// Ordered graded-lexicographically: first by total degree, then with the
/// larger leading component first, so `(1,0) < (0,1) < (2,0) < (1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DimVector(Vec<u32>);

impl DimVector {
    pub fn new(components: Vec<u32>) -> Self {
        Self(components)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The `i`-th unit vector in dimension `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; caller guarantees `other <= self`.
    pub fn sub(&self, other: &DimVector) -> DimVector {
        debug_assert!(other.le(self));
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, m: u32) -> DimVector {
        Self(self.0.iter().map(|a| a * m).collect())
    }

    /// Gcd of the components (zero for the zero vector).
    pub fn content(&self) -> u32 {
        self.0.iter().fold(0, |g, &c| num_integer::gcd(g, c))
    }

    /// `self / m`, if `m` divides every component.
    pub fn div_exact(&self, m: u32) -> Option<DimVector> {
        self.0
            .iter()
            .all(|c| c % m == 0)
            .then(|| Self(self.0.iter().map(|c| c / m).collect()))
    }

    /// Every vector componentwise `<= self`, in graded-lexicographic order.
    pub fn sub_box(&self) -> Vec<DimVector> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.0.len()];
        loop {
            out.push(Self(cur.clone()));
            let mut i = 0;
            loop {
                if i == cur.len() {
                    out.sort();
                    return out;
                }
                if cur[i] < self.0[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }
}

impl Ord for DimVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for DimVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for DimVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[u32; N]> for DimVector {
    fn from(v: [u32; N]) -> Self {
        Self(v.to_vec())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Mixed-radix indexing of the box `0 <= d <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BoxShape {
    bound: DimVector,
    strides: Vec<usize>,
    size: usize,
}

impl BoxShape {
    pub(crate) fn new(bound: &DimVector) -> Self {
        let mut strides = Vec::with_capacity(bound.len());
        let mut size = 1usize;
        for &b in bound.components() {
            strides.push(size);
            size *= b as usize + 1;
        }
        Self {
            bound: bound.clone(),
            strides,
            size,
        }
    }

    pub(crate) fn size(&self) -> usize {
        self.size
    }

    pub(crate) fn index(&self, d: &DimVector) -> usize {
        debug_assert!(d.le(&self.bound));
        d.components()
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    }

    /// All vectors in the box, graded-lexicographic.
    pub(crate) fn vectors(&self) -> Vec<DimVector> {
        self.bound.sub_box()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let b = DimVector::from([2, 1]);
        let order: Vec<String> = b.sub_box().iter().map(|d| d.to_string()).collect();
        assert_eq!(
            order,
            ["(0,0)", "(1,0)", "(0,1)", "(2,0)", "(1,1)", "(2,1)"]
        );
    }

    #[test]
    fn box_indexing_is_a_bijection() {
        let shape = BoxShape::new(&DimVector::from([2, 0, 3]));
        let mut seen = vec![false; shape.size()];
        for d in shape.vectors() {
            let i = shape.index(&d);
            assert!(!seen[i]);
            seen[i] = true;
        }
        assert!(seen.into_iter().all(|s| s));
    }

    #[test]
    fn content_and_division() {
        let d = DimVector::from([2, 4]);
        assert_eq!(d.content(), 2);
        assert_eq!(d.div_exact(2), Some(DimVector::from([1, 2])));
        assert_eq!(d.div_exact(4), None);
    }
}
