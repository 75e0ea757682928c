//! Pfaffians and the polarized invariants `Q₂ₙ`.
//!
//! `Q₂ₙ(X₁,…,Xₙ)` is `κ` times the coefficient of `t₁⋯tₙ` in
//! `Pf(Σ tᵢ(Xᵢ − Xᵢᵀ))`, so `Q₂ₙ(X,…,X) = n!·κ·Pf(X − Xᵀ)`. Because `Pf` is a
//! form of degree `n`, that coefficient is the inclusion–exclusion sum
//! `Σ_{T ⊆ [n]} (−1)^{n−|T|} Pf(Σ_{i∈T} (Xᵢ − Xᵢᵀ))`.
//!
//! The normalization is `κ = 2ⁿ`. For `n = 2` this is forced by the trace
//! formula for `Q₄`; see [`calibrate_n2`].

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix, Polynomial, Ring, ScalarMatrix, Var};
use crate::sl2trace::TraceReducer;
use crate::spin4;
use crate::words::FreeWord;

/// Largest matrix dimension accepted by [`pfaffian`].
pub const MAX_PFAFFIAN_DIM: usize = 12;

/// `Pf(S)` by signed perfect-matching enumeration.
pub fn pfaffian<T: Ring>(s: &Matrix<T>) -> Result<T> {
    if !s.is_square() {
        return Err(Error::DimensionMismatch("pfaffian of a non-square matrix".into()));
    }
    let n = s.rows();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if n > MAX_PFAFFIAN_DIM {
        return Err(Error::TooLarge(n, MAX_PFAFFIAN_DIM));
    }
    for i in 0..n {
        for j in i..n {
            if !s[(i, j)].radd(&s[(j, i)]).is_zero() {
                return Err(Error::NotSkew);
            }
        }
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(matchings(s, &idx))
}

fn matchings<T: Ring>(s: &Matrix<T>, rem: &[usize]) -> T {
    if rem.is_empty() {
        return T::one();
    }
    let first = rem[0];
    let mut acc = T::zero();
    for k in 1..rem.len() {
        let a = &s[(first, rem[k])];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = rem[1..].iter().enumerate().filter(|&(j, _)| j + 1 != k).map(|(_, &x)| x).collect();
        let sub = matchings(s, &rest);
        if sub.is_zero() {
            continue;
        }
        let term = a.rmul(&sub);
        acc = if k % 2 == 1 { acc.radd(&term) } else { acc.rsub(&term) };
    }
    acc
}

/// Normalization constant of `Q₂ₙ`.
#[derive(Clone, Debug, PartialEq)]
pub struct QNormalization {
    pub n: usize,
    pub kappa: GaussianRational,
}

impl QNormalization {
    /// `κ = 2ⁿ`.
    pub fn standard(n: usize) -> QNormalization {
        QNormalization { n, kappa: GaussianRational::from_int(1i64 << n) }
    }
}

/// Record of the `n = 2` calibration: `Q₄(X, X)` is required to equal
/// `target` for `X = φ(C₁, C₂)`, which pins `κ = target / (2·Pf(X − Xᵀ))`.
#[derive(Clone, Debug, PartialEq)]
pub struct Calibration {
    pub pfaffian: GaussianRational,
    pub target: GaussianRational,
    pub kappa: GaussianRational,
}

/// Derives `κ` for `n = 2` from the trace formula
/// `Q₄(g, g) = 8(τ_{g,1}² − τ_{g,2}²)` at `ρ(g) = (C₁, C₂)`.
pub fn calibrate_n2() -> Calibration {
    let (a, b) = (spin4::c1(), spin4::c2());
    let x = spin4::phi(&a, &b).expect("2x2");
    let pf = pfaffian(&x.skew_part().expect("square")).expect("4x4 skew");
    let (ta, tb) = (a.trace().expect("square"), b.trace().expect("square"));
    let target = &GaussianRational::from_int(8) * &(&(&ta * &ta) - &(&tb * &tb));
    let denom = &GaussianRational::from_int(2) * &pf;
    let kappa = &target / &denom;
    Calibration { pfaffian: pf, target, kappa }
}

/// `Q₂ₙ(X₁, …, Xₙ)` with the given normalization.
pub fn q_form_with<T: Ring>(xs: &[Matrix<T>], norm: &QNormalization) -> Result<T> {
    let n = xs.len();
    if n == 0 || norm.n != n {
        return Err(Error::DimensionMismatch(format!("{n} arguments for Q with n = {}", norm.n)));
    }
    if let Some(bad) = xs.iter().find(|x| x.rows() != 2 * n || x.cols() != 2 * n) {
        return Err(Error::DimensionMismatch(format!(
            "Q_{} needs {}x{} arguments, got {}x{}",
            2 * n,
            2 * n,
            2 * n,
            bad.rows(),
            bad.cols()
        )));
    }
    let skews: Vec<Matrix<T>> = xs.iter().map(|x| x.skew_part()).collect::<Result<_>>()?;
    let mut acc = T::zero();
    for subset in 1usize..(1 << n) {
        let mut sum = Matrix::<T>::zeros(2 * n, 2 * n);
        for (i, s) in skews.iter().enumerate() {
            if subset & (1 << i) != 0 {
                sum = sum.add(s)?;
            }
        }
        let pf = pfaffian(&sum)?;
        let size = subset.count_ones() as usize;
        acc = if (n - size).is_multiple_of(2) { acc.radd(&pf) } else { acc.rsub(&pf) };
    }
    Ok(acc.scaled(&norm.kappa))
}

/// `Q₂ₙ(X₁, …, Xₙ)` with `κ = 2ⁿ`.
pub fn q_form<T: Ring>(xs: &[Matrix<T>]) -> Result<T> {
    q_form_with(xs, &QNormalization::standard(xs.len()))
}

/// `Q₄(g₁, g₂) = 4(τ_{g₁,2}τ_{g₂,2}τ_{g₁g₂,1} − τ_{g₁,1}τ_{g₂,1}τ_{g₁g₂,2})`,
/// each trace reduced in its copy's Fricke coordinates.
pub fn q4_tau(w1: &FreeWord, w2: &FreeWord) -> Result<Polynomial> {
    q4_tau_with(&mut TraceReducer::new(), w1, w2)
}

/// `Q₄` on the images of two words under the pair of SL(2) representations
/// `ρ₁ = (A₁, A₂)`, `ρ₂ = (B₁, B₂)`, computed through `φ` and Pfaffians.
pub fn q4_matrix_oracle(
    w1: &FreeWord,
    w2: &FreeWord,
    rho1: &[ScalarMatrix; 2],
    rho2: &[ScalarMatrix; 2],
) -> Result<GaussianRational> {
    let image = |w: &FreeWord| -> Result<ScalarMatrix> {
        let a = crate::sl2trace::evaluate_word(w, rho1)?;
        let b = crate::sl2trace::evaluate_word(w, rho2)?;
        spin4::phi(&a, &b)
    };
    q_form(&[image(w1)?, image(w2)?])
}

/// Scalar values of the copy-indexed Fricke coordinates for `ρ₁`, `ρ₂`.
pub fn copy_assignment(rho1: &[ScalarMatrix; 2], rho2: &[ScalarMatrix; 2]) -> HashMap<Var, GaussianRational> {
    let mut values = crate::sl2trace::TauVars::copy(1).assignment(&rho1[0], &rho1[1]);
    values.extend(crate::sl2trace::TauVars::copy(2).assignment(&rho2[0], &rho2[1]));
    values
}

/// Complex-orthogonal 2×2 block with eigenvalues `y^{±1}`, `y = x^k`.
pub fn torus_block(x: Var, k: i32) -> Matrix<Polynomial> {
    let y = Polynomial::monomial(crate::exact::Monomial::from_exponents([(x, k)]).expect("Laurent torus variable"));
    let y_inv =
        Polynomial::monomial(crate::exact::Monomial::from_exponents([(x, -k)]).expect("Laurent torus variable"));
    let half = GaussianRational::from_ratio(1, 2);
    let half_i = &half * &GaussianRational::i();
    let c = (&y + &y_inv).scale(&half);
    let s = (&y - &y_inv).scale(&half_i);
    Matrix::from_rows(vec![vec![c.clone(), s.clone()], vec![-&s, c]]).expect("2x2")
}

/// Block-diagonal `D(k) = diag(B(x₁, k), …, B(xₙ, k))`.
pub fn torus_element(n: usize, k: i32) -> Matrix<Polynomial> {
    let mut d = Matrix::zeros(2 * n, 2 * n);
    for j in 0..n {
        let b = torus_block(Var::torus(j + 1), k);
        for r in 0..2 {
            for c in 0..2 {
                d[(2 * j + r, 2 * j + c)] = b[(r, c)].clone();
            }
        }
    }
    d
}

/// `Q₂ₙ(D(k), …, D(k))` on the standard torus.
pub fn q_torus(n: usize, k: i32) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::Input("torus rank must be at least 1".into()));
    }
    let d = torus_element(n, k);
    q_form(&vec![d; n])
}

/// Closed form `n!·κ·iⁿ·∏ⱼ (x_j^k − x_j^{−k})`.
pub fn q_torus_closed_form(n: usize, k: i32) -> Polynomial {
    let factorial: i64 = (1..=n as i64).product();
    let coeff = &(&GaussianRational::from_int(factorial) * &QNormalization::standard(n).kappa)
        * &GaussianRational::i_pow(n as i64);
    (1..=n).fold(Polynomial::constant(coeff), |acc, j| &acc * &laurent_difference(Var::torus(j), k))
}

fn laurent_difference(x: Var, k: i32) -> Polynomial {
    let m = |e| Polynomial::monomial(crate::exact::Monomial::from_exponents([(x, e)]).expect("Laurent"));
    &m(k) - &m(-k)
}

/// `iⁿ Σ_{μ ∈ Sₙ} sign(μ) ∏ᵢ (x_{μ(i)}^{kᵢ} − x_{μ(i)}^{−kᵢ})`.
///
/// With all `kᵢ` equal the product does not depend on `μ`, so the sum
/// vanishes for `n ≥ 2`; with distinct exponents it is the alternant.
pub fn antisymmetrized_torus_sum(exponents: &[i32]) -> Polynomial {
    let n = exponents.len();
    let mut total = Polynomial::zero();
    for (perm, sign) in permutations(n) {
        let term = exponents
            .iter()
            .enumerate()
            .fold(Polynomial::one(), |acc, (i, &k)| &acc * &laurent_difference(Var::torus(perm[i] + 1), k));
        total = if sign > 0 { &total + &term } else { &total - &term };
    }
    total.scale(&GaussianRational::i_pow(n as i64))
}

/// All permutations of `0..n` with their signs, in lexicographic order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, out: &mut Vec<(Vec<usize>, i32)>) {
        if prefix.len() == n {
            let inversions =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| prefix[i] > prefix[j]).count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, n, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], n, &mut out);
    out
}

/// Image of a Laurent polynomial in `x₁..xₙ` under the signed permutation
/// `x_j ↦ x_{perm[j]}^{±1}` (inverted where `flips[j]`).
pub fn weyl_image(p: &Polynomial, perm: &[usize], flips: &[bool]) -> Result<Polynomial> {
    let bindings: HashMap<Var, Polynomial> = perm
        .iter()
        .zip(flips)
        .enumerate()
        .map(|(j, (&target, &flip))| {
            let e = if flip { -1 } else { 1 };
            let m = crate::exact::Monomial::from_exponents([(Var::torus(target + 1), e)]).expect("Laurent");
            (Var::torus(j + 1), Polynomial::monomial(m))
        })
        .collect();
    p.substitute_partial(&bindings)
}

/// Symmetry of a torus restriction of `Q₂ₙ`: invariant under permuting the
/// `x_j` and under even sign changes, negated by a single sign change.
pub fn weyl_symmetry_holds(p: &Polynomial, n: usize) -> Result<bool> {
    let id: Vec<usize> = (0..n).collect();
    let none = vec![false; n];
    for j in 0..n.saturating_sub(1) {
        let mut perm = id.clone();
        perm.swap(j, j + 1);
        if weyl_image(p, &perm, &none)? != *p {
            return Ok(false);
        }
    }
    let mut one = none.clone();
    one[0] = true;
    if weyl_image(p, &id, &one)? != -p {
        return Ok(false);
    }
    if n >= 2 {
        let mut two = one.clone();
        two[1] = true;
        if weyl_image(p, &id, &two)? != *p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Householder reflection `I − 2vvᵀ/(vᵀv)` for a random nonzero integer
/// vector with `vᵀv ≠ 0`: an exact orthogonal matrix of determinant −1.
pub fn sample_reflection<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ScalarMatrix {
    loop {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
        let norm: i64 = v.iter().map(|x| x * x).sum();
        if norm == 0 {
            continue;
        }
        let mut m = Matrix::identity(dim);
        for i in 0..dim {
            for j in 0..dim {
                let delta = GaussianRational::from_ratio(2 * v[i] * v[j], norm);
                m[(i, j)] = &m[(i, j)] - &delta;
            }
        }
        return m;
    }
}

/// [`q4_tau`] with a caller-owned reducer, so memo entries are shared
/// across many word pairs.
pub fn q4_tau_with(reducer: &mut TraceReducer, w1: &FreeWord, w2: &FreeWord) -> Result<Polynomial> {
    let w12 = w1.concat(w2);
    let mut tau = |w: &FreeWord, j: usize| -> Result<Polynomial> {
        Ok(crate::sl2trace::TauVars::copy(j).relabel(&reducer.reduce(w)?))
    };
    let first = &(&tau(w1, 2)? * &tau(w2, 2)?) * &tau(&w12, 1)?;
    let second = &(&tau(w1, 1)? * &tau(w2, 1)?) * &tau(&w12, 2)?;
    Ok((&first - &second).scale(&GaussianRational::from_int(4)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_matrix;
    use crate::sl2trace::{reduce_trace_copy, sample_sl2};

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn pfaffian_small() {
        let a = Polynomial::named("x");
        let s = Matrix::from_rows(vec![vec![Polynomial::zero(), a.clone()], vec![-&a, Polynomial::zero()]]).unwrap();
        assert_eq!(pfaffian(&s).unwrap(), a);

        let names = ["s_1_2", "s_1_3", "s_1_4", "s_2_3", "s_2_4", "s_3_4"];
        let v: Vec<Polynomial> = names.iter().map(|n| Polynomial::named(n)).collect();
        let z = Polynomial::zero;
        let s = Matrix::from_rows(vec![
            vec![z(), v[0].clone(), v[1].clone(), v[2].clone()],
            vec![-&v[0], z(), v[3].clone(), v[4].clone()],
            vec![-&v[1], -&v[3], z(), v[5].clone()],
            vec![-&v[2], -&v[4], -&v[5], z()],
        ])
        .unwrap();
        let expected = Polynomial::parse("s_1_2*s_3_4 - s_1_3*s_2_4 + s_1_4*s_2_3").unwrap();
        assert_eq!(pfaffian(&s).unwrap(), expected);
        assert_eq!(pfaffian(&s).unwrap().pow(2), s.determinant().unwrap());
    }

    #[test]
    fn pfaffian_errors() {
        assert_eq!(pfaffian(&int_matrix(&[&[0, 1], &[1, 0]])).unwrap_err(), Error::NotSkew);
        assert_eq!(pfaffian(&int_matrix(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]])).unwrap_err(), Error::OddDimension(3));
        let big: ScalarMatrix = Matrix::zeros(14, 14);
        assert_eq!(pfaffian(&big).unwrap_err(), Error::TooLarge(14, 12));
    }

    #[test]
    fn calibration_gives_four() {
        let c = calibrate_n2();
        assert_eq!(c.pfaffian, g(4));
        assert_eq!(c.target, g(32));
        assert_eq!(c.kappa, g(4));
        assert_eq!(c.kappa, QNormalization::standard(2).kappa);
    }

    #[test]
    fn q4_with_identity_vanishes() {
        let x = spin4::phi(&spin4::c1(), &spin4::c2()).unwrap();
        assert!(q_form(&[Matrix::identity(4), x]).unwrap().is_zero());
    }

    #[test]
    fn q4_tau_examples() {
        let g1 = FreeWord::generator(1);
        let g2 = FreeWord::generator(2);
        let expected = Polynomial::parse("4*t1_2*t2_2*t12_1 - 4*t1_1*t2_1*t12_2").unwrap();
        assert_eq!(q4_tau(&g1, &g2).unwrap(), expected);
        assert!(q4_tau(&FreeWord::identity(), &g1).unwrap().is_zero());
        let w = FreeWord::parse("g1^2 g2", 2).unwrap();
        let t1 = reduce_trace_copy(&w, 1).unwrap();
        let t2 = reduce_trace_copy(&w, 2).unwrap();
        let diag = (&t1.pow(2) - &t2.pow(2)).scale(&g(8));
        assert_eq!(q4_tau(&w, &w).unwrap(), diag);
    }

    #[test]
    fn q4_trace_formula_matches_matrices() {
        let mut rng = crate::rng::seeded(11);
        for _ in 0..10 {
            let rho1 = [sample_sl2(&mut rng, 3), sample_sl2(&mut rng, 3)];
            let rho2 = [sample_sl2(&mut rng, 3), sample_sl2(&mut rng, 3)];
            let w1 = FreeWord::random(&mut rng, 2, 4);
            let w2 = FreeWord::random(&mut rng, 2, 4);
            let lhs = q4_tau(&w1, &w2).unwrap().evaluate(&copy_assignment(&rho1, &rho2)).unwrap();
            let rhs = q4_matrix_oracle(&w1, &w2, &rho1, &rho2).unwrap();
            assert_eq!(lhs, rhs, "{w1} / {w2}");
        }
    }

    #[test]
    fn torus_values() {
        assert!(q_torus(1, 0).unwrap().is_zero());
        assert!(q_torus(3, 0).unwrap().is_zero());
        let x = Var::torus(1);
        let expected = laurent_difference(x, 1).scale(&(&g(2) * &GaussianRational::i()));
        assert_eq!(q_torus(1, 1).unwrap(), expected);
        for n in 1..=3 {
            for k in [1, 2, -1] {
                let q = q_torus(n, k).unwrap();
                assert_eq!(q, q_torus_closed_form(n, k));
                assert!(weyl_symmetry_holds(&q, n).unwrap());
            }
        }
    }

    #[test]
    fn antisymmetrized_sum_degenerates() {
        assert!(antisymmetrized_torus_sum(&[1, 1]).is_zero());
        assert!(antisymmetrized_torus_sum(&[2, 2, 2]).is_zero());
        assert!(!antisymmetrized_torus_sum(&[1, 2]).is_zero());
        assert_eq!(antisymmetrized_torus_sum(&[3]), laurent_difference(Var::torus(1), 3).scale(&GaussianRational::i()));
    }

    #[test]
    fn reflections_are_orthogonal() {
        let mut rng = crate::rng::seeded(5);
        for _ in 0..5 {
            let m = sample_reflection(&mut rng, 4);
            assert_eq!(m.mul(&m.transpose()).unwrap(), Matrix::identity(4));
            assert_eq!(m.determinant().unwrap(), g(-1));
        }
    }

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|(_, s)| s).sum::<i32>(), 0);
    }
}
