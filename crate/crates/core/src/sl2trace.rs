//! SL(2) trace calculus on the free group of rank two.
//!
//! The trace of any word in `F₂` under an SL(2) representation is a
//! polynomial with integer coefficients in the Fricke coordinates
//! `t1 = tr ρ(g1)`, `t2 = tr ρ(g2)`, `t12 = tr ρ(g1 g2)`. [`TraceReducer`]
//! computes it using only `tr(u⁻¹) = tr(u)` and
//! `tr(u)·tr(v) = tr(uv) + tr(uv⁻¹)`:
//!
//! 1. cyclically reduce (trace is a class function);
//! 2. a syllable `x^e` with `|e| ≥ 2` is peeled off as
//!    `tr(x^e R) = tr(x)·tr(x^{e∓1} R) − tr(x^{e∓2} R)`;
//! 3. otherwise all exponents are ±1; if a generator occurs with both signs,
//!    split `w = (x P)(x⁻¹ Q)` and use
//!    `tr(w) = tr(xP)·tr(x⁻¹Q) − tr(x² P Q⁻¹)`;
//! 4. otherwise `w = W^k` with `W` of length two, handled by the Chebyshev
//!    recursion on `W`.
//!
//! Each recursive call either shortens the word or keeps its length and
//! strictly lowers its syllable count, so the recursion terminates. Results
//! are memoized on a conjugation- and inversion-invariant key.

use std::collections::HashMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix, Polynomial, Ring, ScalarMatrix, Var};
use crate::words::FreeWord;

/// The three Fricke coordinates of one SL(2) copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TauVars {
    pub t1: Var,
    pub t2: Var,
    pub t12: Var,
}

impl TauVars {
    /// Unindexed coordinates `t1, t2, t12`.
    pub fn plain() -> TauVars {
        TauVars { t1: Var::new("t1"), t2: Var::new("t2"), t12: Var::new("t12") }
    }

    /// Coordinates `t1_j, t2_j, t12_j` of copy `j ∈ {1, 2}`.
    pub fn copy(j: usize) -> TauVars {
        assert!(j == 1 || j == 2, "copy index must be 1 or 2");
        TauVars {
            t1: Var::new(&format!("t1_{j}")),
            t2: Var::new(&format!("t2_{j}")),
            t12: Var::new(&format!("t12_{j}")),
        }
    }

    pub fn as_array(&self) -> [Var; 3] {
        [self.t1, self.t2, self.t12]
    }

    /// Renames a polynomial in the plain coordinates into these.
    pub fn relabel(&self, p: &Polynomial) -> Polynomial {
        let plain = TauVars::plain();
        p.rename(|v| {
            if v == plain.t1 {
                self.t1
            } else if v == plain.t2 {
                self.t2
            } else if v == plain.t12 {
                self.t12
            } else {
                v
            }
        })
    }

    /// Scalar assignment `t1 ↦ tr A, t2 ↦ tr B, t12 ↦ tr AB`.
    pub fn assignment(&self, a: &ScalarMatrix, b: &ScalarMatrix) -> HashMap<Var, GaussianRational> {
        let ab = a.mul(b).expect("2x2 product");
        HashMap::from([
            (self.t1, a.trace().expect("square")),
            (self.t2, b.trace().expect("square")),
            (self.t12, ab.trace().expect("square")),
        ])
    }
}

/// Memoizing trace reducer for words in `F₂`.
#[derive(Default)]
pub struct TraceReducer {
    memo: HashMap<Vec<i64>, Polynomial>,
}

impl TraceReducer {
    pub fn new() -> TraceReducer {
        TraceReducer::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `tr ρ(w)` as a polynomial in `t1, t2, t12`.
    pub fn reduce(&mut self, w: &FreeWord) -> Result<Polynomial> {
        w.check_rank(2)?;
        let vars = TauVars::plain();
        Ok(self.trace(&vars, w))
    }

    fn trace(&mut self, vars: &TauVars, w: &FreeWord) -> Polynomial {
        let w = w.cyclic_reduce();
        if w.is_identity() {
            return Polynomial::int(2);
        }
        let key = canonical_key(&w);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let p = self.expand(vars, &w);
        self.memo.insert(key, p.clone());
        p
    }

    fn gen_var(vars: &TauVars, g: usize) -> Polynomial {
        Polynomial::var(if g == 1 { vars.t1 } else { vars.t2 })
    }

    fn expand(&mut self, vars: &TauVars, w: &FreeWord) -> Polynomial {
        let syl = w.syllables();
        if syl.len() == 1 {
            let (g, e) = syl[0];
            let n = e.abs();
            if n == 1 {
                return Self::gen_var(vars, g);
            }
            let x = Self::gen_var(vars, g);
            let a = self.trace(vars, &FreeWord::from_syllables([(g, n - 1)]));
            let b = self.trace(vars, &FreeWord::from_syllables([(g, n - 2)]));
            return &(&x * &a) - &b;
        }

        if let Some(k) = syl.iter().position(|&(_, e)| e.abs() >= 2) {
            let r = w.rotate_syllables(k);
            let (g, e) = r.syllables()[0];
            let s = e.signum();
            let rest = &r.syllables()[1..];
            let shorter =
                |drop: i32| FreeWord::from_syllables(std::iter::once((g, e - drop * s)).chain(rest.iter().copied()));
            let x = Self::gen_var(vars, g);
            let a = self.trace(vars, &shorter(1));
            let b = self.trace(vars, &shorter(2));
            return &(&x * &a) - &b;
        }

        // All exponents are ±1 and, in rank two, syllables alternate.
        for g in [1usize, 2] {
            let pos = syl.iter().position(|&(h, e)| h == g && e == 1);
            let neg = syl.iter().any(|&(h, e)| h == g && e == -1);
            if let (Some(k), true) = (pos, neg) {
                let r = w.rotate_syllables(k);
                let rs = r.syllables();
                let j = rs.iter().position(|&(h, e)| h == g && e == -1).expect("rotation keeps the inverse letter");
                let u = FreeWord::from_syllables(rs[..j].iter().copied());
                let v = FreeWord::from_syllables(rs[j..].iter().copied());
                let uv_inv = u.concat(&v.inverse());
                let tu = self.trace(vars, &u);
                let tv = self.trace(vars, &v);
                let tw = self.trace(vars, &uv_inv);
                return &(&tu * &tv) - &tw;
            }
        }

        // w = (x^s y^t)^k.
        let k = syl.len() / 2;
        let (s, t) = (syl[0].1, syl[1].1);
        if k == 1 {
            let t12 = Polynomial::var(vars.t12);
            return if s == t { t12 } else { &(&Polynomial::var(vars.t1) * &Polynomial::var(vars.t2)) - &t12 };
        }
        let base = FreeWord::from_syllables(syl[..2].iter().copied());
        let tb = self.trace(vars, &base);
        let a = self.trace(vars, &base.pow(k as i32 - 1));
        let b = self.trace(vars, &base.pow(k as i32 - 2));
        &(&tb * &a) - &b
    }
}

/// Lexicographically least letter sequence among all cyclic rotations of
/// the word and of its inverse.
fn canonical_key(w: &FreeWord) -> Vec<i64> {
    let mut best: Option<Vec<i64>> = None;
    for seq in [w.letters(), w.inverse().letters()] {
        let n = seq.len();
        for k in 0..n {
            let rot: Vec<i64> = seq[k..].iter().chain(&seq[..k]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// `tr ρ(w)` in plain Fricke coordinates.
pub fn reduce_trace(w: &FreeWord) -> Result<Polynomial> {
    TraceReducer::new().reduce(w)
}

/// `tr ρ_j(w)` in the coordinates of copy `j`.
pub fn reduce_trace_copy(w: &FreeWord, copy: usize) -> Result<Polynomial> {
    Ok(TauVars::copy(copy).relabel(&reduce_trace(w)?))
}

/// Elementary SL(2) generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elementary {
    /// `[[1, k], [0, 1]]`
    Upper,
    /// `[[1, 0], [k, 1]]`
    Lower,
}

pub fn elementary(kind: Elementary, k: i64) -> ScalarMatrix {
    let g = GaussianRational::from_int;
    let (b, c) = match kind {
        Elementary::Upper => (k, 0),
        Elementary::Lower => (0, k),
    };
    Matrix::from_rows(vec![vec![g(1), g(b)], vec![g(c), g(1)]]).expect("2x2")
}

pub fn elementary_product(factors: &[(Elementary, i64)]) -> ScalarMatrix {
    factors.iter().fold(Matrix::identity(2), |acc, &(kind, k)| acc.mul(&elementary(kind, k)).expect("2x2"))
}

/// Random integer SL(2) matrix: a product of two to six alternating
/// elementary factors with `1 ≤ |k| ≤ size_bound`.
pub fn sample_sl2<R: Rng + ?Sized>(rng: &mut R, size_bound: i64) -> ScalarMatrix {
    assert!(size_bound >= 1, "size bound must be positive");
    let count = rng.gen_range(2..=6);
    let first = if rng.gen_bool(0.5) { Elementary::Upper } else { Elementary::Lower };
    let factors: Vec<(Elementary, i64)> = (0..count)
        .map(|i| {
            let kind = match (first, i % 2) {
                (Elementary::Upper, 0) | (Elementary::Lower, 1) => Elementary::Upper,
                _ => Elementary::Lower,
            };
            let mag = rng.gen_range(1..=size_bound);
            (kind, if rng.gen_bool(0.5) { mag } else { -mag })
        })
        .collect();
    elementary_product(&factors)
}

pub fn sample_sl2_seeded(seed: u64, size_bound: i64) -> ScalarMatrix {
    sample_sl2(&mut crate::rng::seeded(seed), size_bound)
}

/// Inverse of an invertible 2×2 matrix via the adjugate.
pub fn inverse_2x2(m: &ScalarMatrix) -> Result<ScalarMatrix> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DimensionMismatch("expected a 2x2 matrix".into()));
    }
    let det = m.determinant()?;
    let inv = det.inv().ok_or_else(|| Error::Input("singular matrix".into()))?;
    let adj = Matrix::from_rows(vec![vec![m[(1, 1)].clone(), -&m[(0, 1)]], vec![-&m[(1, 0)], m[(0, 0)].clone()]])?;
    Ok(adj.scale(&inv))
}

/// Exact product of the assigned matrices along the word.
pub fn evaluate_word(w: &FreeWord, assignment: &[ScalarMatrix]) -> Result<ScalarMatrix> {
    w.check_rank(assignment.len())?;
    let n = assignment.first().map_or(2, |m| m.rows());
    let mut inverses: Vec<Option<ScalarMatrix>> = vec![None; assignment.len()];
    let mut acc = Matrix::identity(n);
    for &(g, e) in w.syllables() {
        let base = if e > 0 {
            assignment[g - 1].clone()
        } else {
            if inverses[g - 1].is_none() {
                inverses[g - 1] = Some(inverse_2x2(&assignment[g - 1])?);
            }
            inverses[g - 1].clone().expect("just filled")
        };
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
    }
    Ok(acc)
}

/// Elementary symmetric function `e_k` of the eigenvalues from the power
/// sums `p_d = tr(M^d)` (`power_traces[d-1]`), via Newton's identities.
/// This is the trace of `M` acting on `∧^k`.
pub fn exterior_trace<T: Ring>(power_traces: &[T], k: usize) -> Result<T> {
    if power_traces.len() < k {
        return Err(Error::MissingPowerTraces { k, have: power_traces.len() });
    }
    let mut e: Vec<T> = vec![T::one()];
    for j in 1..=k {
        let mut acc = T::zero();
        for i in 1..=j {
            let term = e[j - i].rmul(&power_traces[i - 1]);
            acc = if i % 2 == 1 { acc.radd(&term) } else { acc.rsub(&term) };
        }
        e.push(acc.scaled(&GaussianRational::from_ratio(1, j as i64)));
    }
    Ok(e.pop().expect("e_k present"))
}

/// `[tr M, tr M², …, tr M^k]`.
pub fn power_traces<T: Ring>(m: &Matrix<T>, k: usize) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(k);
    let mut p = m.clone();
    for d in 1..=k {
        out.push(p.trace()?);
        if d < k {
            p = p.mul(m)?;
        }
    }
    Ok(out)
}
