//! Dense matrices over a commutative ring.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::poly::Polynomial;
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

/// Commutative ring containing ℚ(i), the entry type of [`Matrix`].
pub trait Ring: Clone + PartialEq + Zero + One + fmt::Display {
    fn radd(&self, other: &Self) -> Self;
    fn rsub(&self, other: &Self) -> Self;
    fn rmul(&self, other: &Self) -> Self;
    fn rneg(&self) -> Self;
    fn from_scalar(c: GaussianRational) -> Self;

    fn scaled(&self, c: &GaussianRational) -> Self {
        self.rmul(&Self::from_scalar(c.clone()))
    }
}

impl Ring for GaussianRational {
    fn radd(&self, other: &Self) -> Self {
        self + other
    }
    fn rsub(&self, other: &Self) -> Self {
        self - other
    }
    fn rmul(&self, other: &Self) -> Self {
        self * other
    }
    fn rneg(&self) -> Self {
        -self
    }
    fn from_scalar(c: GaussianRational) -> Self {
        c
    }
}

impl Ring for Polynomial {
    fn radd(&self, other: &Self) -> Self {
        self + other
    }
    fn rsub(&self, other: &Self) -> Self {
        self - other
    }
    fn rmul(&self, other: &Self) -> Self {
        self * other
    }
    fn rneg(&self) -> Self {
        -self
    }
    fn from_scalar(c: GaussianRational) -> Self {
        Polynomial::constant(c)
    }
    fn scaled(&self, c: &GaussianRational) -> Self {
        self.scale(c)
    }
}

/// Row-major dense matrix. Dimensions are fixed at construction.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type ScalarMatrix = Matrix<GaussianRational>;
pub type PolyMatrix = Matrix<Polynomial>;

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<U>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = &self[(i, k)];
                    let b = &other[(k, j)];
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.radd(&a.rmul(b));
                    }
                }
                data.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    fn zip(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, T::radd)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, T::rsub)
    }

    pub fn neg(&self) -> Self {
        self.map(T::rneg)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.map(|x| x.scaled(c))
    }

    pub fn scale_by(&self, c: &T) -> Self {
        self.map(|x| x.rmul(c))
    }

    pub fn trace(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("trace of a non-square matrix".into()));
        }
        Ok((0..self.rows).fold(T::zero(), |acc, i| acc.radd(&self[(i, i)])))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// `self - selfᵀ`
    pub fn skew_part(&self) -> Result<Self> {
        self.sub(&self.transpose())
    }

    /// Division-free determinant by expansion over column subsets
    /// (O(n·2ⁿ) ring operations), valid over any commutative ring.
    pub fn determinant(&self) -> Result<T> {
        const MAX: usize = 16;
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n > MAX {
            return Err(Error::TooLarge(n, MAX));
        }
        // minors[S] = det of rows 0..|S| restricted to the columns in S.
        let mut minors: Vec<T> = vec![T::zero(); 1 << n];
        minors[0] = T::one();
        for set in 1usize..(1 << n) {
            let r = set.count_ones() as usize - 1;
            let mut acc = T::zero();
            // Laplace expansion along row r; the sign is the parity of the
            // number of chosen columns to the right of j.
            for j in 0..n {
                if set & (1 << j) == 0 {
                    continue;
                }
                let sub = &minors[set & !(1 << j)];
                let a = &self[(r, j)];
                if !a.is_zero() && !sub.is_zero() {
                    let term = a.rmul(sub);
                    let columns_after = (set >> (j + 1)).count_ones() as usize;
                    acc = if columns_after.is_multiple_of(2) { acc.radd(&term) } else { acc.rsub(&term) };
                }
            }
            minors[set] = acc;
        }
        Ok(minors[(1 << n) - 1].clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// Integer matrix shorthand used throughout the tests and fixtures.
pub fn int_matrix(rows: &[&[i64]]) -> ScalarMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect()).collect())
        .expect("well-formed literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(int_matrix(&[&[7, 3], &[2, 1]]).determinant().unwrap(), g(1));
        assert_eq!(int_matrix(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]).determinant().unwrap(), g(0));
        let perm = int_matrix(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(perm.determinant().unwrap(), g(1));
        let swap = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.determinant().unwrap(), g(-1));
    }

    #[test]
    fn determinant_is_multiplicative() {
        let a = int_matrix(&[&[1, 2, 0, 1], &[3, -1, 2, 0], &[0, 1, 1, 4], &[2, 0, -3, 1]]);
        let b = int_matrix(&[&[2, 1, 1, 0], &[0, 1, -1, 2], &[1, 0, 3, 1], &[-2, 1, 0, 1]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.determinant().unwrap(), &a.determinant().unwrap() * &b.determinant().unwrap());
    }

    #[test]
    fn dimension_errors() {
        let a = int_matrix(&[&[1, 2, 3]]);
        assert!(a.mul(&a).is_err());
        assert!(a.trace().is_err());
        assert!(Matrix::<GaussianRational>::from_rows(vec![vec![g(1)], vec![]]).is_err());
    }
}
