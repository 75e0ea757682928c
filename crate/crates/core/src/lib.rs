//! Exact computations on SL(2), SO(4) and PSL(2) character varieties of
//! free groups.
//!
//! The crate is organized bottom-up:
//!
//! * [`exact`]: ℚ(i) scalars, sparse Laurent polynomials, matrices and exact
//!   linear algebra.
//! * [`words`]: free-group words, their reduction and ℤ/m weights.
//! * [`sl2trace`]: trace polynomials of SL(2) words in Fricke coordinates.
//! * [`spin4`]: the spin map SL(2)×SL(2) → SO(4) and the outer involution.
//! * [`qinv`]: Pfaffians and the polarized invariants `Q₂ₙ`.
//! * [`zerosum`]: minimal zero-sum multisets, Davenport constants and
//!   generator synthesis for quotient groups.
//! * [`presentation`]: the 17-generator presentation of the SO(4) coordinate
//!   ring and the certificates around it.
//! * [`verify`]: named verification suites and their reports.

pub mod cli;
pub mod error;
pub mod exact;
pub mod presentation;
pub mod qinv;
pub mod rng;
pub mod sl2trace;
pub mod spin4;
pub mod verify;
pub mod words;
pub mod zerosum;

pub use error::{Error, Result};
pub use exact::{GaussianRational, Matrix, Monomial, PolyMatrix, Polynomial, ScalarMatrix, Var};
pub use words::FreeWord;
