//! Exact sparse Gaussian elimination over ℚ(i): rank, span membership and
//! nullspace bases.
//!
//! Pivoting is deterministic: a row's pivot is its first nonzero column, and
//! rows are processed in input order, so certificates built on top of this
//! module are reproducible bit for bit.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::matrix::ScalarMatrix;
use super::scalar::GaussianRational;

pub type SparseVec = BTreeMap<usize, GaussianRational>;

/// `v += c·w`, dropping cancelled entries.
pub fn axpy(v: &mut SparseVec, c: &GaussianRational, w: &SparseVec) {
    for (&j, x) in w {
        let delta = c * x;
        let entry = v.entry(j).or_insert_with(GaussianRational::zero);
        *entry += &delta;
        if entry.is_zero() {
            v.remove(&j);
        }
    }
}

/// Row space of a growing set of vectors in semi-reduced echelon form: every
/// stored row has a unit pivot at its first nonzero column and pivots are
/// distinct.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon { ncols, rows: Vec::new(), pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Residue of `v` modulo the stored rows; zero iff `v` is in the span.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0;
        loop {
            let hit = v.range(cursor..).find(|(c, _)| self.pivots.contains_key(c)).map(|(&c, x)| (c, x.clone()));
            let Some((col, coeff)) = hit else { return v };
            let row = &self.rows[self.pivots[&col]];
            axpy(&mut v, &-coeff, row);
            cursor = col + 1;
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.keys().all(|&c| c < self.ncols));
        let mut r = self.reduce(v);
        let Some((&col, lead)) = r.iter().next() else { return false };
        if !lead.is_one() {
            let inv = lead.inv().expect("leading entry is nonzero");
            for x in r.values_mut() {
                *x = &*x * &inv;
            }
        }
        self.pivots.insert(col, self.rows.len());
        self.rows.push(r);
        true
    }

    /// Fully reduced row echelon form: each pivot column is zero in every
    /// other row. Returns `(pivot column, row)` sorted by pivot.
    pub fn rref(&self) -> Vec<(usize, SparseVec)> {
        let mut out: Vec<(usize, SparseVec)> = Vec::with_capacity(self.rows.len());
        // Back-substitute from the last pivot column upward.
        for (&col, &idx) in self.pivots.iter().rev() {
            let mut row = self.rows[idx].clone();
            for (pcol, prow) in &out {
                if let Some(c) = row.get(pcol).cloned() {
                    axpy(&mut row, &-c, prow);
                }
            }
            out.push((col, row));
        }
        out.reverse();
        out
    }
}

/// Rank of the span of `vectors` in `ncols`-dimensional space.
pub fn rank_of(ncols: usize, vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new(ncols);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// A matrix stored as sparse rows; the working format for large, very sparse
/// systems such as the relation certificates.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> SparseMatrix {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn push_row(&mut self, row: SparseVec) {
        debug_assert!(row.keys().all(|&c| c < self.ncols));
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn apply(&self, x: &SparseVec) -> Vec<GaussianRational> {
        self.rows
            .iter()
            .map(|row| {
                row.iter().fold(GaussianRational::zero(), |acc, (j, a)| match x.get(j) {
                    Some(b) => &acc + &(a * b),
                    None => acc,
                })
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank_of(self.ncols, self.rows.iter().cloned())
    }

    /// Nullspace basis, one vector per free column (value 1 there).
    ///
    /// Panics if the basis fails its own annihilation or rank–nullity check,
    /// which would indicate an arithmetic bug rather than bad input.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let mut e = Echelon::new(self.ncols);
        for row in &self.rows {
            e.insert(row.clone());
        }
        let rref = e.rref();
        let pivot_cols: std::collections::BTreeSet<usize> = rref.iter().map(|(c, _)| *c).collect();
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = SparseVec::new();
            v.insert(free, GaussianRational::one());
            for (pcol, row) in &rref {
                if let Some(x) = row.get(&free) {
                    v.insert(*pcol, -x);
                }
            }
            basis.push(v);
        }
        assert_eq!(basis.len() + e.rank(), self.ncols, "rank-nullity violated");
        for v in &basis {
            assert!(self.apply(v).iter().all(Zero::is_zero), "kernel vector not annihilated");
        }
        basis
    }
}

impl From<&ScalarMatrix> for SparseMatrix {
    fn from(m: &ScalarMatrix) -> Self {
        let mut s = SparseMatrix::new(m.cols());
        for i in 0..m.rows() {
            s.push_row(
                m.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect(),
            );
        }
        s
    }
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<GaussianRational> {
    let mut out = vec![GaussianRational::zero(); len];
    for (&j, x) in v {
        out[j] = x.clone();
    }
    out
}

/// Nullspace basis of a dense matrix as dense vectors.
pub fn kernel_basis(m: &ScalarMatrix) -> Vec<Vec<GaussianRational>> {
    SparseMatrix::from(m).kernel_basis().iter().map(|v| to_dense(v, m.cols())).collect()
}

pub fn rank(m: &ScalarMatrix) -> usize {
    SparseMatrix::from(m).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::{int_matrix, Matrix};

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn rank_one_kernel() {
        let k = kernel_basis(&int_matrix(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, vec![vec![g(-1), g(1)]]);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis(&Matrix::identity(5)).is_empty());
    }

    #[test]
    fn gaussian_kernel() {
        let i = GaussianRational::i();
        let m = Matrix::from_rows(vec![vec![g(1), i.clone()], vec![-&i, g(1)]]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        // (-i, 1) up to scaling: check proportionality via the 2x2 minor.
        let expected = [-&i, g(1)];
        assert!((&k[0][0] * &expected[1] - &k[0][1] * &expected[0]).is_zero());
    }

    #[test]
    fn rref_is_fully_reduced() {
        let m = int_matrix(&[&[1, 2, 3, 4], &[2, 4, 7, 9], &[0, 0, 1, 1]]);
        let s = SparseMatrix::from(&m);
        assert_eq!(s.rank(), 2);
        let mut e = Echelon::new(4);
        for r in s.rows() {
            e.insert(r.clone());
        }
        let rref = e.rref();
        for (c, _) in &rref {
            let hits = rref.iter().filter(|(_, r)| r.contains_key(c)).count();
            assert_eq!(hits, 1);
        }
        assert_eq!(s.kernel_basis().len(), 2);
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new(3);
        e.insert([(0, g(1)), (1, g(1))].into_iter().collect());
        e.insert([(1, g(2)), (2, g(1))].into_iter().collect());
        assert!(e.contains(&[(0, g(2)), (1, g(4)), (2, g(1))].into_iter().collect()));
        assert!(!e.contains(&[(2, g(1))].into_iter().collect()));
        assert!(!e.insert([(0, g(1)), (1, g(3)), (2, g(1))].into_iter().collect()));
    }
}
