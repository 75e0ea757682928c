//! The spin covering SL(2)×SL(2) → SO(4) and the outer involution σ.
//!
//! `SL(2)×SL(2)` acts on `ℂ²⊗ℂ²` preserving the form
//! `det(u₁,v₁)·det(u₂,v₂)`. In the orthonormal basis
//!
//! ```text
//! w₁ = (e₁⊗e₁ + e₂⊗e₂)/√2     w₂ = i(e₁⊗e₁ − e₂⊗e₂)/√2
//! w₃ = i(e₁⊗e₂ + e₂⊗e₁)/√2    w₄ = (e₁⊗e₂ − e₂⊗e₁)/√2
//! ```
//!
//! the image of `(A, B)` is `½·Φ(A, B)`, where every entry of `Φ` is a sum of
//! four products `c·a_{pq}·b_{rs}` with `c ∈ {±1, ±i}`. [`PHI_TABLE`] holds
//! those coefficients; everything else is computed from it.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix, PolyMatrix, Polynomial, Ring, ScalarMatrix, Var};

/// One bilinear term `i^k · a_{p} · b_{q}`, with `p, q` in `{11, 12, 21, 22}`.
#[derive(Clone, Copy, Debug)]
pub struct PhiTerm {
    pub i_power: u8,
    pub a: u8,
    pub b: u8,
}

const fn t(i_power: u8, a: u8, b: u8) -> PhiTerm {
    PhiTerm { i_power, a, b }
}

/// Entries of `2·φ(A, B)` in row-major order.
#[rustfmt::skip]
pub const PHI_TABLE: [[PhiTerm; 4]; 16] = [
    // row 1
    [t(0, 11, 11), t(0, 12, 12), t(0, 21, 21), t(0, 22, 22)],
    [t(1, 11, 11), t(3, 12, 12), t(1, 21, 21), t(3, 22, 22)],
    [t(1, 12, 11), t(1, 11, 12), t(1, 22, 21), t(1, 21, 22)],
    [t(2, 12, 11), t(0, 11, 12), t(2, 22, 21), t(0, 21, 22)],
    // row 2
    [t(3, 11, 11), t(3, 12, 12), t(1, 21, 21), t(1, 22, 22)],
    [t(0, 11, 11), t(2, 12, 12), t(2, 21, 21), t(0, 22, 22)],
    [t(0, 12, 11), t(0, 11, 12), t(2, 22, 21), t(2, 21, 22)],
    [t(1, 12, 11), t(3, 11, 12), t(3, 22, 21), t(1, 21, 22)],
    // row 3
    [t(3, 21, 11), t(3, 22, 12), t(3, 11, 21), t(3, 12, 22)],
    [t(0, 21, 11), t(2, 22, 12), t(0, 11, 21), t(2, 12, 22)],
    [t(0, 22, 11), t(0, 21, 12), t(0, 12, 21), t(0, 11, 22)],
    [t(1, 22, 11), t(3, 21, 12), t(1, 12, 21), t(3, 11, 22)],
    // row 4
    [t(2, 21, 11), t(2, 22, 12), t(0, 11, 21), t(0, 12, 22)],
    [t(3, 21, 11), t(1, 22, 12), t(1, 11, 21), t(3, 12, 22)],
    [t(3, 22, 11), t(3, 21, 12), t(1, 12, 21), t(1, 11, 22)],
    [t(0, 22, 11), t(2, 21, 12), t(2, 12, 21), t(0, 11, 22)],
];

fn entry_index(code: u8) -> (usize, usize) {
    ((code / 10 - 1) as usize, (code % 10 - 1) as usize)
}

fn check_2x2<T: Ring>(m: &Matrix<T>) -> Result<()> {
    if m.rows() == 2 && m.cols() == 2 {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!("expected 2x2, got {}x{}", m.rows(), m.cols())))
    }
}

/// `φ(A, B)` for 2×2 matrices over any ring containing ℚ(i).
pub fn phi<T: Ring>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    check_2x2(a)?;
    check_2x2(b)?;
    let half = GaussianRational::from_ratio(1, 2);
    let data = PHI_TABLE
        .iter()
        .map(|terms| {
            terms
                .iter()
                .fold(T::zero(), |acc, term| {
                    let prod = a[entry_index(term.a)].rmul(&b[entry_index(term.b)]);
                    acc.radd(&prod.scaled(&GaussianRational::i_pow(term.i_power as i64)))
                })
                .scaled(&half)
        })
        .collect();
    Matrix::new(4, 4, data)
}

/// Generic 2×2 matrices `(a_{ij})`, `(b_{ij})` in the indeterminates
/// `a11..a22`, `b11..b22`.
pub fn symbolic_pair() -> (PolyMatrix, PolyMatrix) {
    let sym = |p: char| {
        Matrix::from_rows(
            [[11, 12], [21, 22]]
                .iter()
                .map(|row| row.iter().map(|ij| Polynomial::named(&format!("{p}{ij}"))).collect())
                .collect(),
        )
        .expect("2x2")
    };
    (sym('a'), sym('b'))
}

/// `φ` applied to the generic pair: a 4×4 matrix of bilinear forms.
pub fn symbolic_phi() -> PolyMatrix {
    let (a, b) = symbolic_pair();
    phi(&a, &b).expect("2x2 inputs")
}

/// Swaps `a_{ij} ↔ b_{ij}` in a polynomial.
pub fn swap_ab(p: &Polynomial) -> Polynomial {
    let names: HashMap<Var, Var> = [11, 12, 21, 22]
        .iter()
        .flat_map(|ij| {
            let a = Var::new(&format!("a{ij}"));
            let b = Var::new(&format!("b{ij}"));
            [(a, b), (b, a)]
        })
        .collect();
    p.rename(|v| names.get(&v).copied().unwrap_or(v))
}

/// `M = diag(1, 1, 1, −1)`.
pub fn sigma_matrix<T: Ring>() -> Matrix<T> {
    Matrix::diagonal(vec![T::one(), T::one(), T::one(), T::one().rneg()])
}

/// `σ(X) = M·X·M⁻¹`: negates the off-diagonal entries of row 4 and column 4.
pub fn sigma_conjugate<T: Ring>(x: &Matrix<T>) -> Result<Matrix<T>> {
    if x.rows() != 4 || x.cols() != 4 {
        return Err(Error::DimensionMismatch(format!("expected 4x4, got {}x{}", x.rows(), x.cols())));
    }
    let mut out = x.clone();
    for k in 0..3 {
        out[(3, k)] = x[(3, k)].rneg();
        out[(k, 3)] = x[(k, 3)].rneg();
    }
    Ok(out)
}

/// `C₁ = [[1, 1], [0, 1]]`; with `C₂` it generates SL(2, ℤ).
pub fn c1() -> ScalarMatrix {
    crate::exact::int_matrix(&[&[1, 1], &[0, 1]])
}

/// `C₂ = [[0, −1], [1, 0]]`.
pub fn c2() -> ScalarMatrix {
    crate::exact::int_matrix(&[&[0, -1], &[1, 0]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_matrix;

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_parts((re, 1), (im, 1))
    }

    fn half_of(rows: [[(i64, i64); 4]; 4]) -> ScalarMatrix {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&(a, b)| gi(a, b)).collect()).collect()).unwrap();
        m.scale(&GaussianRational::from_ratio(1, 2))
    }

    #[test]
    fn phi_c1_c1() {
        let expected = half_of([
            [(3, 0), (0, -1), (0, 2), (0, 0)],
            [(0, -1), (1, 0), (2, 0), (0, 0)],
            [(0, -2), (-2, 0), (2, 0), (0, 0)],
            [(0, 0), (0, 0), (0, 0), (2, 0)],
        ]);
        assert_eq!(phi(&c1(), &c1()).unwrap(), expected);
    }

    #[test]
    fn phi_c1_c2_and_c2_c1() {
        let c12 = half_of([
            [(-1, 0), (0, 1), (0, 0), (-2, 0)],
            [(0, 1), (1, 0), (-2, 0), (0, 0)],
            [(0, 0), (2, 0), (1, 0), (0, 1)],
            [(2, 0), (0, 0), (0, 1), (-1, 0)],
        ]);
        let c21 = half_of([
            [(-1, 0), (0, 1), (0, 0), (2, 0)],
            [(0, 1), (1, 0), (-2, 0), (0, 0)],
            [(0, 0), (2, 0), (1, 0), (0, -1)],
            [(-2, 0), (0, 0), (0, -1), (-1, 0)],
        ]);
        assert_eq!(phi(&c1(), &c2()).unwrap(), c12);
        assert_eq!(phi(&c2(), &c1()).unwrap(), c21);
        assert_eq!(sigma_conjugate(&c12).unwrap(), c21);
    }

    #[test]
    fn phi_c2_c2_and_identity() {
        assert_eq!(
            phi(&c2(), &c2()).unwrap(),
            int_matrix(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]])
        );
        let id: ScalarMatrix = Matrix::identity(2);
        assert_eq!(phi(&id, &id).unwrap(), Matrix::identity(4));
        assert_eq!(phi(&id.neg(), &id.neg()).unwrap(), Matrix::identity(4));
    }

    #[test]
    fn sigma_matches_conjugation() {
        let x = symbolic_phi();
        let m: PolyMatrix = sigma_matrix();
        let direct = m.mul(&x).unwrap().mul(&m).unwrap();
        assert_eq!(sigma_conjugate(&x).unwrap(), direct);
        assert_eq!(sigma_conjugate(&sigma_conjugate(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn symbolic_first_entry() {
        let x = symbolic_phi();
        let sum = Polynomial::parse("a11*b11 + a12*b12 + a21*b21 + a22*b22").unwrap();
        assert_eq!(x[(0, 0)], sum.scale(&GaussianRational::from_ratio(1, 2)));
    }

    #[test]
    fn sigma_swaps_factors_symbolically() {
        let x = symbolic_phi();
        let s = sigma_conjugate(&x).unwrap();
        let swapped = x.map(swap_ab);
        assert!(s.sub(&swapped).unwrap().is_zero());
    }

    #[test]
    fn symbolic_orthogonality() {
        let (a, b) = symbolic_pair();
        let x = symbolic_phi();
        let gram = x.mul(&x.transpose()).unwrap();
        let scale = &a.determinant().unwrap() * &b.determinant().unwrap();
        assert_eq!(gram, Matrix::identity(4).scale_by(&scale));
    }

    #[test]
    fn symbolic_trace() {
        let (a, b) = symbolic_pair();
        let x = symbolic_phi();
        assert_eq!(x.trace().unwrap(), &a.trace().unwrap() * &b.trace().unwrap());
    }

    #[test]
    fn dimension_errors() {
        let m: ScalarMatrix = Matrix::identity(3);
        assert!(phi(&m, &c1()).is_err());
        assert!(sigma_conjugate(&m).is_err());
    }
}
