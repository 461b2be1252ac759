use std::fmt;

use super::DimVector;
use crate::Error;

/// A square matrix of arrow counts `a_ij`, i.e. a quiver on `n` vertices
/// with `a_ij` arrows from `i` to `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverMatrix {
    n: usize,
    entries: Vec<u32>,
    symmetric: bool,
}

impl QuiverMatrix {
    /// Validates a square matrix of nonnegative integers.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput("matrix has no rows".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                if a < 0 {
                    return Err(Error::InvalidInput(format!(
                        "negative entry a[{i}][{j}] = {a}"
                    )));
                }
                let a = u32::try_from(a)
                    .map_err(|_| Error::InvalidInput(format!("entry a[{i}][{j}] too large")))?;
                entries.push(a);
            }
        }
        Ok(Self::from_entries(n, entries))
    }

    /// Row-major constructor for known-good input.
    pub fn from_rows<const N: usize>(rows: [[u32; N]; N]) -> Self {
        Self::from_entries(N, rows.iter().flatten().copied().collect())
    }

    fn from_entries(n: usize, entries: Vec<u32>) -> Self {
        let symmetric = (0..n).all(|i| (0..n).all(|j| entries[i * n + j] == entries[j * n + i]));
        Self {
            n,
            entries,
            symmetric,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    /// Every vertex carries at least one loop.
    pub fn has_enough_loops(&self) -> bool {
        (0..self.n).all(|i| self.entry(i, i) >= 1)
    }

    /// `sum_{i,j} (a_ij - delta_ij) d_i e_j`.
    pub fn twisted_pairing(&self, d: &DimVector, e: &DimVector) -> i64 {
        let (d, e) = (d.components(), e.components());
        let mut acc = 0i64;
        for (i, &di) in d.iter().enumerate() {
            for (j, &ej) in e.iter().enumerate() {
                let a = i64::from(self.entry(i, j)) - i64::from(i == j);
                acc += a * i64::from(di) * i64::from(ej);
            }
        }
        acc
    }

    /// `N(d) = sum_{i,j} (a_ij - delta_ij) d_i d_j`, the exponent of `y` in
    /// the partition series and one less than the dimension of the simple
    /// locus of the moduli space.
    pub fn twist_exponent(&self, d: &DimVector) -> i64 {
        self.twisted_pairing(d, d)
    }

    /// Connected components of the undirected support graph, each sorted,
    /// listed by smallest vertex.
    pub fn decompose(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut blocks = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block = vec![start];
            comp[start] = id;
            let mut k = 0;
            while k < block.len() {
                let v = block[k];
                for (w, cw) in comp.iter_mut().enumerate() {
                    if *cw == usize::MAX && (self.entry(v, w) > 0 || self.entry(w, v) > 0) {
                        *cw = id;
                        block.push(w);
                    }
                }
                k += 1;
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    pub fn is_indecomposable(&self) -> bool {
        self.decompose().len() == 1
    }

    /// The principal submatrix on `indices`.
    pub fn restrict(&self, indices: &[usize]) -> QuiverMatrix {
        let m = indices.len();
        let entries = indices
            .iter()
            .flat_map(|&i| indices.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.entry(i, j))
            .collect();
        Self::from_entries(m, entries)
    }

    /// `A ⊕ B`.
    pub fn block_sum(&self, other: &QuiverMatrix) -> QuiverMatrix {
        let n = self.n + other.n;
        let mut entries = vec![0; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[i * n + j] = self.entry(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                entries[(self.n + i) * n + self.n + j] = other.entry(i, j);
            }
        }
        Self::from_entries(n, entries)
    }

    /// Equal to `A` after some simultaneous permutation of rows and
    /// columns.
    pub fn is_permutation_of(&self, other: &QuiverMatrix) -> bool {
        if self.n != other.n {
            return false;
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        loop {
            if (0..self.n)
                .all(|i| (0..self.n).all(|j| self.entry(perm[i], perm[j]) == other.entry(i, j)))
            {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

impl fmt::Display for QuiverMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{row:?}")?;
        }
        f.write_str("]")
    }
}

/// Validates a raw matrix and splits it into blocks of mutually connected
/// vertices (0-based indices). The matrix is indecomposable iff there is a
/// single block.
pub fn validate_and_decompose(rows: &[Vec<i64>]) -> Result<Vec<Vec<usize>>, Error> {
    Ok(QuiverMatrix::new(rows)?.decompose())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_examples() {
        assert_eq!(
            validate_and_decompose(&[vec![0, 1], vec![1, 0]]).unwrap(),
            vec![vec![0, 1]]
        );
        assert_eq!(
            validate_and_decompose(&[vec![1, 0], vec![0, 1]]).unwrap(),
            vec![vec![0], vec![1]]
        );
        assert_eq!(
            validate_and_decompose(&[vec![0, 2], vec![2, 0]])
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            validate_and_decompose(&[vec![0, -1], vec![1, 0]]),
            Err(Error::InvalidInput(_))
        ));
        assert!(QuiverMatrix::new(&[vec![0, 1]]).is_err());
        assert!(QuiverMatrix::new(&[]).is_err());
    }

    #[test]
    fn symmetry_flag() {
        assert!(QuiverMatrix::from_rows([[1, 2], [2, 0]]).is_symmetric());
        assert!(!QuiverMatrix::from_rows([[0, 1], [0, 0]]).is_symmetric());
    }

    #[test]
    fn twist_exponent_examples() {
        let a = QuiverMatrix::from_rows([[1, 1], [1, 1]]);
        // 2*2*3 off-diagonal + 0 on the diagonal
        assert_eq!(a.twist_exponent(&DimVector::from([2, 3])), 12);
        let loopless = QuiverMatrix::from_rows([[0]]);
        assert_eq!(loopless.twist_exponent(&DimVector::from([3])), -9);
    }

    #[test]
    fn permutation_equivalence() {
        let a = QuiverMatrix::from_rows([[2, 1, 0], [1, 0, 0], [0, 0, 1]]);
        let b = QuiverMatrix::from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 2]]);
        assert!(a.is_permutation_of(&b));
        assert!(!a.is_permutation_of(&QuiverMatrix::from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 1]])));
    }
}
