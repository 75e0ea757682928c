//! The involution σ on the SO(4) generators and the induced splitting of
//! generators into σ-even and σ-odd parts.
//!
//! σ replaces every copy index by its hat (`1̂ = 2`, `2̂ = 1`):
//! `a_{i,j,k} ↦ a_{i,ĵ,k̂}`, `b_{j,k} ↦ b_{ĵ,k̂}`, `c_{i,j,k} ↦ c_{î,ĵ,k̂}`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::generators::{a, b, c, tau};
use crate::error::{Error, Result};
use crate::exact::{Polynomial, Var};

fn hat(i: usize) -> usize {
    3 - i
}

fn sigma_table() -> HashMap<Var, Var> {
    let mut t = HashMap::new();
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                t.insert(a(i, j, k), a(i, hat(j), hat(k)));
                t.insert(c(i, j, k), c(hat(i), hat(j), hat(k)));
            }
        }
    }
    for j in 1..=2 {
        for k in 1..=2 {
            t.insert(b(j, k), b(hat(j), hat(k)));
        }
    }
    t
}

/// σ on a polynomial in the 17 generators; other variables are untouched.
pub fn sigma_action(p: &Polynomial) -> Polynomial {
    let t = sigma_table();
    p.rename(|v| t.get(&v).copied().unwrap_or(v))
}

/// Swap of the copy indices `τ_{g,1} ↔ τ_{g,2}`, the action of σ on the
/// τ-ring.
pub fn swap_copies(p: &Polynomial) -> Polynomial {
    let mut t = HashMap::new();
    for g in [1, 2, 12] {
        t.insert(tau(g, 1), tau(g, 2));
        t.insert(tau(g, 2), tau(g, 1));
    }
    p.rename(|v| t.get(&v).copied().unwrap_or(v))
}

/// `pᵢ = rᵢ + σ(rᵢ)`, the nonzero `qᵢ = rᵢ − σ(rᵢ)`, and the module
/// generators `t₀ = 1, t₁, …` taken from the `q`s.
#[derive(Clone, Debug, PartialEq)]
pub struct PqSplit {
    pub p: Vec<Polynomial>,
    pub q: Vec<Polynomial>,
    pub t: Vec<Polynomial>,
}

/// Splits `generators` under σ. The `t`-list is `1` followed by
/// `L − σ(L)` for each leader `L` in `leaders`, which must pick exactly one
/// sign of every nonzero `q` up to sign.
pub fn pq_split(generators: &[Var], leaders: &[Var]) -> Result<PqSplit> {
    let mut p = Vec::new();
    let mut q = Vec::new();
    for &r in generators {
        let rv = Polynomial::var(r);
        let s = sigma_action(&rv);
        let plus = &rv + &s;
        if !p.contains(&plus) {
            p.push(plus);
        }
        let minus = &rv - &s;
        if !minus.is_zero() {
            q.push(minus);
        }
    }
    let mut t = vec![Polynomial::one()];
    for &l in leaders {
        let lv = Polynomial::var(l);
        let tl = &lv - &sigma_action(&lv);
        if !q.contains(&tl) {
            return Err(Error::Input(format!("{l} has no σ-odd part among the generators")));
        }
        if t.contains(&tl) || t.contains(&-&tl) {
            return Err(Error::Input(format!("{l} repeats a module generator")));
        }
        t.push(tl);
    }
    let covered = q.iter().all(|x| t.contains(x) || t.contains(&-x));
    if !covered {
        return Err(Error::Input("leaders do not cover every σ-odd generator".into()));
    }
    Ok(PqSplit { p, q, t })
}

/// Leaders giving `t₁ … t₇` in the order
/// `c₁₁₂, c₁₂₁, c₁₂₂, a₁₁₁, a₂₁₁, b₁₁, c₁₁₁`.
pub fn so4_t_leaders() -> Vec<Var> {
    vec![c(1, 1, 2), c(1, 2, 1), c(1, 2, 2), a(1, 1, 1), a(2, 1, 1), b(1, 1), c(1, 1, 1)]
}

/// `t₀, …, t₇` as polynomials in the generators.
pub fn so4_t_list() -> Vec<Polynomial> {
    let map = super::generators::so4_generator_map();
    pq_split(map.generators(), &so4_t_leaders()).expect("SO(4) leaders are valid").t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::generators::so4_generator_map;

    fn v(x: Var) -> Polynomial {
        Polynomial::var(x)
    }

    #[test]
    fn hat_rule() {
        assert_eq!(sigma_action(&v(c(1, 1, 2))), v(c(2, 2, 1)));
        assert_eq!(sigma_action(&v(a(1, 1, 2))), v(a(1, 1, 2)));
        assert_eq!(sigma_action(&v(a(2, 1, 1))), v(a(2, 2, 2)));
        let p = Polynomial::parse("c_1_1_2*a_1_1_1 - 3*b_1_2 + b_2_2^2").unwrap();
        assert_eq!(sigma_action(&sigma_action(&p)), p);
    }

    #[test]
    fn sigma_matches_copy_swap() {
        let map = so4_generator_map();
        for &g in map.generators() {
            let lhs = map.apply(&sigma_action(&v(g))).unwrap();
            let rhs = swap_copies(&map.apply(&v(g)).unwrap());
            assert_eq!(lhs, rhs, "{g}");
        }
    }

    #[test]
    fn t_list_in_order() {
        let t = so4_t_list();
        let expected: Vec<Polynomial> = [
            "1",
            "c_1_1_2 - c_2_2_1",
            "c_1_2_1 - c_2_1_2",
            "c_1_2_2 - c_2_1_1",
            "a_1_1_1 - a_1_2_2",
            "a_2_1_1 - a_2_2_2",
            "b_1_1 - b_2_2",
            "c_1_1_1 - c_2_2_2",
        ]
        .iter()
        .map(|s| Polynomial::parse(s).unwrap())
        .collect();
        assert_eq!(t, expected);
    }

    #[test]
    fn p_list_contents() {
        let map = so4_generator_map();
        let split = pq_split(map.generators(), &so4_t_leaders()).unwrap();
        for s in ["a_1_1_1 + a_1_2_2", "a_2_1_1 + a_2_2_2", "b_1_1 + b_2_2", "2*a_1_1_2", "2*b_1_2"] {
            assert!(split.p.contains(&Polynomial::parse(s).unwrap()), "{s}");
        }
        // a_{i,1,2} and b_{1,2} are σ-fixed, so 14 of the 17 q's survive.
        assert_eq!(split.q.len(), 14);
        assert!(pq_split(map.generators(), &so4_t_leaders()[..6]).is_err());
    }
}
