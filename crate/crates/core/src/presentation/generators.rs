//! Monomial maps from generator names into a polynomial ring.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact::{Monomial, Polynomial, Var};

/// `τ_{g,copy}` for `g ∈ {1, 2, 12}` and `copy ∈ {1, 2}`.
pub fn tau(g: usize, copy: usize) -> Var {
    assert!(matches!(g, 1 | 2 | 12) && matches!(copy, 1 | 2), "bad tau index");
    Var::new(&format!("t{g}_{copy}"))
}

/// `a_{i,j,k}`, with `a_{i,2,1} = a_{i,1,2}`.
pub fn a(i: usize, j: usize, k: usize) -> Var {
    let (j, k) = (j.min(k), j.max(k));
    Var::new(&format!("a_{i}_{j}_{k}"))
}

/// `b_{j,k}`, with `b_{2,1} = b_{1,2}`.
pub fn b(j: usize, k: usize) -> Var {
    let (j, k) = (j.min(k), j.max(k));
    Var::new(&format!("b_{j}_{k}"))
}

pub fn c(i: usize, j: usize, k: usize) -> Var {
    Var::new(&format!("c_{i}_{j}_{k}"))
}

/// An ordered list of generators, each sent to a monomial with coefficient 1.
/// The degree of a generator is the total degree of its image.
#[derive(Clone, Debug)]
pub struct MonomialMap {
    generators: Vec<Var>,
    images: Vec<Monomial>,
    degrees: Vec<i64>,
    index: HashMap<Var, usize>,
}

impl MonomialMap {
    pub fn new(pairs: Vec<(Var, Monomial)>) -> MonomialMap {
        let index = pairs.iter().enumerate().map(|(k, (v, _))| (*v, k)).collect();
        let degrees = pairs.iter().map(|(_, m)| m.degree()).collect();
        let (generators, images) = pairs.into_iter().unzip();
        MonomialMap { generators, images, degrees, index }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Var] {
        &self.generators
    }

    pub fn position(&self, v: Var) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn image(&self, v: Var) -> Option<&Monomial> {
        self.position(v).map(|k| &self.images[k])
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, v: Var) -> Option<i64> {
        self.position(v).map(|k| self.degrees[k])
    }

    /// Image of a polynomial in the generators.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let mut bindings = HashMap::new();
        for v in p.variables() {
            let m = self.image(v).ok_or_else(|| Error::UnknownGenerator(v.name().to_owned()))?;
            bindings.insert(v, Polynomial::monomial(m.clone()));
        }
        p.substitute(&bindings)
    }

    /// Exponent vector of a monomial in the generators.
    pub fn exponent_vector(&self, m: &Monomial) -> Result<Vec<u32>> {
        let mut e = vec![0u32; self.len()];
        for &(v, k) in m.exponents() {
            let pos = self.position(v).ok_or_else(|| Error::UnknownGenerator(v.name().to_owned()))?;
            e[pos] = k as u32;
        }
        Ok(e)
    }

    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        Monomial::from_exponents(self.generators.iter().zip(exps).filter(|(_, &k)| k > 0).map(|(&v, &k)| (v, k as i32)))
            .expect("nonnegative exponents")
    }

    /// Image of the generator monomial with the given exponents.
    pub fn image_of(&self, exps: &[u32]) -> Monomial {
        self.images.iter().zip(exps).filter(|(_, &k)| k > 0).fold(Monomial::one(), |acc, (m, &k)| acc.mul(&m.pow(k)))
    }

    /// Weighted degree of a generator monomial.
    pub fn weighted_degree(&self, exps: &[u32]) -> i64 {
        self.degrees.iter().zip(exps).map(|(d, &k)| d * k as i64).sum()
    }

    /// All generator monomials of weighted degree `d`, as exponent vectors in
    /// lexicographic order.
    pub fn monomials_of_degree(&self, d: i64) -> Vec<Vec<u32>> {
        fn go(degs: &[i64], pos: usize, left: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if pos == degs.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let mut k = 0;
            while k as i64 * degs[pos] <= left {
                cur.push(k);
                go(degs, pos + 1, left - k as i64 * degs[pos], cur, out);
                cur.pop();
                k += 1;
                if degs[pos] == 0 {
                    break;
                }
            }
        }
        let mut out = Vec::new();
        if d >= 0 {
            go(&self.degrees, 0, d, &mut Vec::new(), &mut out);
        }
        out.reverse();
        out
    }
}

/// The 17 generators `a_{i,j,k} = τ_{i,j}τ_{i,k}`, `b_{j,k} = τ_{12,j}τ_{12,k}`
/// (`j ≤ k`) and `c_{i,j,k} = τ_{1,i}τ_{2,j}τ_{12,k}`.
pub fn so4_generator_map() -> MonomialMap {
    let mono = |vs: &[Var]| Monomial::from_exponents(vs.iter().map(|&v| (v, 1))).expect("monomial");
    let mut pairs = Vec::with_capacity(17);
    for i in 1..=2 {
        for (j, k) in [(1, 1), (1, 2), (2, 2)] {
            pairs.push((a(i, j, k), mono(&[tau(i, j), tau(i, k)])));
        }
    }
    for (j, k) in [(1, 1), (1, 2), (2, 2)] {
        pairs.push((b(j, k), mono(&[tau(12, j), tau(12, k)])));
    }
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                pairs.push((c(i, j, k), mono(&[tau(1, i), tau(2, j), tau(12, k)])));
            }
        }
    }
    MonomialMap::new(pairs)
}

/// `g₁ = τ₁²`, `g₂ = τ₂²`, `g₃ = τ₁₂²`, `g₄ = τ₁τ₂τ₁₂`.
pub fn psl2_generator_map() -> MonomialMap {
    let m = |s: &str| Polynomial::parse(s).expect("literal").as_monomial().expect("monomial").clone();
    MonomialMap::new(vec![
        (Var::new("g1"), m("t1^2")),
        (Var::new("g2"), m("t2^2")),
        (Var::new("g3"), m("t12^2")),
        (Var::new("g4"), m("t1*t2*t12")),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so4_map_shape() {
        let map = so4_generator_map();
        assert_eq!(map.len(), 17);
        let img = map.image(c(1, 2, 1)).unwrap();
        assert_eq!(Polynomial::monomial(img.clone()), Polynomial::parse("t1_1*t2_2*t12_1").unwrap());
        assert_eq!(map.degree(a(2, 2, 1)), Some(2));
        assert_eq!(map.degree(b(1, 2)), Some(2));
        assert_eq!(map.degree(c(2, 2, 2)), Some(3));
        assert_eq!(a(1, 2, 1), a(1, 1, 2));
    }

    #[test]
    fn monomial_counts() {
        let map = so4_generator_map();
        assert_eq!(map.monomials_of_degree(2).len(), 9);
        assert_eq!(map.monomials_of_degree(3).len(), 8);
        // four weight-2 factors, or one weight-2 and two weight-3 factors
        assert_eq!(map.monomials_of_degree(8).len(), 495 + 9 * 36);
        assert_eq!(map.monomials_of_degree(1).len(), 0);
        assert_eq!(map.monomials_of_degree(0), vec![vec![0; 17]]);
    }

    #[test]
    fn apply_rejects_unknown() {
        let map = psl2_generator_map();
        assert_eq!(map.apply(&Polynomial::named("x")).unwrap_err(), Error::UnknownGenerator("x".into()));
        let rel = Polynomial::parse("g1*g2*g3 - g4^2").unwrap();
        assert!(num_traits::Zero::is_zero(&map.apply(&rel).unwrap()));
    }
}
