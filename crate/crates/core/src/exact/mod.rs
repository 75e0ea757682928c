//! Exact arithmetic: ℚ(i) scalars, sparse Laurent polynomials, dense
//! matrices over either, and sparse linear algebra.

pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod var;

pub use linalg::{kernel_basis, rank, rank_of, Echelon, SparseMatrix, SparseVec};
pub use matrix::{int_matrix, Matrix, PolyMatrix, Ring, ScalarMatrix};
pub use poly::{Monomial, Polynomial, Weight};
pub use scalar::GaussianRational;
pub use var::Var;
