//! Identities behind the module and algebra generators of the SO(4)
//! coordinate ring, each checked as an exact zero in the τ-ring.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::generators::{a, c, psl2_generator_map, so4_generator_map, tau, MonomialMap};
use super::sigma::{sigma_action, so4_t_list};
use crate::error::Result;
use crate::exact::{rank_of, Echelon, GaussianRational, Monomial, Polynomial, SparseVec, Var};
use crate::qinv::q4_tau_with;
use crate::sl2trace::{TauVars, TraceReducer};
use crate::words::FreeWord;

/// `lhs − rhs` of a named identity; it holds when the residual is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub residual: Polynomial,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

fn word(s: &str) -> FreeWord {
    FreeWord::parse(s, 2).expect("literal word")
}

fn ratio(n: i64, d: i64) -> GaussianRational {
    GaussianRational::from_ratio(n, d)
}

fn gen(v: Var) -> Polynomial {
    Polynomial::var(v)
}

/// Expansions of `t₀..t₇` and of `Q₄` on word pairs, in the τ-ring.
struct Expander {
    map: MonomialMap,
    t: Vec<Polynomial>,
    reducer: TraceReducer,
}

impl Expander {
    fn new() -> Expander {
        let map = so4_generator_map();
        let t = so4_t_list().iter().map(|p| map.apply(p).expect("generator polynomial")).collect();
        Expander { map, t, reducer: TraceReducer::new() }
    }

    fn q4(&mut self, w1: &str, w2: &str) -> Result<Polynomial> {
        q4_tau_with(&mut self.reducer, &word(w1), &word(w2))
    }

    fn gen(&self, v: Var) -> Polynomial {
        self.map.apply(&gen(v)).expect("generator")
    }
}

/// The expressions of `t₁, …, t₇` through `Q₄` of explicit word pairs.
pub fn verify_t_identities() -> Result<Vec<IdentityCheck>> {
    let mut x = Expander::new();
    let t = x.t.clone();
    let mut out = Vec::new();
    let mut check = |name: &str, lhs: &Polynomial, rhs: Polynomial| {
        out.push(IdentityCheck { name: name.to_owned(), residual: lhs - &rhs });
    };

    check("t1 = -1/4 Q4(g1, g2)", &t[1], x.q4("g1", "g2")?.scale(&ratio(-1, 4)));
    check("t4 = 1/8 Q4(g1, g1)", &t[4], x.q4("g1", "g1")?.scale(&ratio(1, 8)));
    check("t5 = 1/8 Q4(g2, g2)", &t[5], x.q4("g2", "g2")?.scale(&ratio(1, 8)));
    check("t6 = 1/8 Q4(g1 g2, g1 g2)", &t[6], x.q4("g1 g2", "g1 g2")?.scale(&ratio(1, 8)));

    let rhs = &x.q4("g2 g1^-1", "g1")?.scale(&ratio(1, 4)) + &(&x.gen(a(2, 1, 2)) * &t[4]);
    check("t2 = 1/4 Q4(g2 g1^-1, g1) + a_2_1_2 t4", &t[2], rhs);

    let rhs = &x.q4("g1 g2^-1", "g2")?.scale(&ratio(-1, 4)) - &(&x.gen(a(1, 1, 2)) * &t[5]);
    check("t3 = -1/4 Q4(g1 g2^-1, g2) - a_1_1_2 t5", &t[3], rhs);

    let a2 = &x.gen(a(2, 1, 1)) + &x.gen(a(2, 2, 2));
    let a1 = &x.gen(a(1, 1, 1)) + &x.gen(a(1, 2, 2));
    let rhs = &(&(&(&t[4] * &a2) + &(&t[5] * &a1)).scale(&ratio(1, 4)) + &t[6].scale(&ratio(1, 2)))
        - &x.q4("g1 g2^-1", "g1 g2^-1")?.scale(&ratio(1, 16));
    check(
        "t7 = 1/4 (t4 (a_2_1_1 + a_2_2_2) + t5 (a_1_1_1 + a_1_2_2)) + 1/2 t6 - 1/16 Q4(g1 g2^-1, g1 g2^-1)",
        &t[7],
        rhs,
    );
    Ok(out)
}

/// Characters of SO(4) on the image of a word, as τ-polynomials.
#[derive(Clone, Debug)]
pub enum Character {
    /// Defining representation: `τ_{w,1}·τ_{w,2}`.
    Defining(FreeWord),
    /// Three-dimensional representation through copy `j`: `τ_{w,j}² − 1`.
    HalfSpin(FreeWord, usize),
}

impl Character {
    pub fn expand(&self, reducer: &mut TraceReducer) -> Result<Polynomial> {
        Ok(match self {
            Character::Defining(w) => {
                let p = reducer.reduce(w)?;
                &TauVars::copy(1).relabel(&p) * &TauVars::copy(2).relabel(&p)
            }
            Character::HalfSpin(w, j) => &TauVars::copy(*j).relabel(&reducer.reduce(w)?).pow(2) - &Polynomial::one(),
        })
    }
}

fn tv(g: usize, j: usize) -> Polynomial {
    Polynomial::var(tau(g, j))
}

/// Each listed element of the full trace algebra written through characters.
pub fn verify_ft_generators() -> Result<Vec<IdentityCheck>> {
    let mut r = TraceReducer::new();
    let mut out = Vec::new();
    let one = Polynomial::one();
    let def = |r: &mut TraceReducer, w: &str| Character::Defining(word(w)).expand(r);
    let hs = |r: &mut TraceReducer, w: &str, j| Character::HalfSpin(word(w), j).expand(r);

    // The squaring identity in a single SL(2) copy.
    let sq = {
        let p = r.reduce(&word("g1^2 g2"))?;
        let plain = |s: &str| Polynomial::named(s);
        let rhs =
            (&(&p.pow(2) - &(&plain("t1").pow(2) * &plain("t12").pow(2))) - &plain("t2").pow(2)).scale(&ratio(-1, 2));
        &(&(&plain("t1") * &plain("t2")) * &plain("t12")) - &rhs
    };
    out.push(IdentityCheck { name: "t1 t2 t12 = -1/2 (tr(g1^2 g2)^2 - t1^2 t12^2 - t2^2)".into(), residual: sq });

    for (g, w) in [(1, "g1"), (2, "g2"), (12, "g1 g2")] {
        for j in 1..=2 {
            let rhs = &hs(&mut r, w, j)? + &one;
            out.push(IdentityCheck {
                name: format!("tau_{g},{j}^2 = D({w}, {j}) + 1"),
                residual: &tv(g, j).pow(2) - &rhs,
            });
        }
        let rhs = def(&mut r, w)?;
        out.push(IdentityCheck {
            name: format!("tau_{g},1 tau_{g},2 = C4({w})"),
            residual: &(&tv(g, 1) * &tv(g, 2)) - &rhs,
        });
    }

    for j in 1..=2 {
        let sq = |r: &mut TraceReducer, w: &str| -> Result<Polynomial> { Ok(&hs(r, w, j)? + &one) };
        let rhs = (&(&sq(&mut r, "g1^2 g2")? - &(&sq(&mut r, "g1")? * &sq(&mut r, "g1 g2")?)) - &sq(&mut r, "g2")?)
            .scale(&ratio(-1, 2));
        let lhs = &(&tv(1, j) * &tv(2, j)) * &tv(12, j);
        out.push(IdentityCheck { name: format!("tau_1,{j} tau_2,{j} tau_12,{j} via g1^2 g2"), residual: &lhs - &rhs });
    }

    let mixed = |p: [(usize, usize); 3], q: [(usize, usize); 3]| {
        let prod = |m: [(usize, usize); 3]| m.iter().fold(Polynomial::one(), |acc, &(g, j)| &acc * &tv(g, j));
        &prod(p) + &prod(q)
    };
    let lhs = mixed([(1, 1), (2, 2), (12, 1)], [(1, 2), (2, 1), (12, 2)]);
    let rhs = &(&(&def(&mut r, "g1")? * &def(&mut r, "g1 g2")?) + &def(&mut r, "g2")?) - &def(&mut r, "g1^2 g2")?;
    out.push(IdentityCheck { name: "c_1_2_1 + c_2_1_2 via g1^2 g2".into(), residual: &lhs - &rhs });

    let lhs = mixed([(1, 1), (2, 2), (12, 2)], [(1, 2), (2, 1), (12, 1)]);
    let rhs = &(&(&def(&mut r, "g2")? * &def(&mut r, "g1 g2")?) + &def(&mut r, "g1")?) - &def(&mut r, "g1 g2^2")?;
    out.push(IdentityCheck { name: "c_1_2_2 + c_2_1_1 via g1 g2^2".into(), residual: &lhs - &rhs });

    let lhs = mixed([(1, 1), (2, 1), (12, 2)], [(1, 2), (2, 2), (12, 1)]);
    let rhs = &(&(&def(&mut r, "g1")? * &def(&mut r, "g2")?) + &def(&mut r, "g1 g2")?) - &def(&mut r, "g1^-1 g2")?;
    out.push(IdentityCheck { name: "c_1_1_2 + c_2_2_1 via g1^-1 g2".into(), residual: &lhs - &rhs });

    Ok(out)
}

/// Outcome of a span-equality check in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanCheck {
    pub name: String,
    pub degree: i64,
    /// Dimension of the target space.
    pub dim: usize,
    /// Rank of the proposed spanning set inside it.
    pub rank: usize,
    /// Every spanning vector lies in the target space.
    pub inside: bool,
}

impl SpanCheck {
    pub fn holds(&self) -> bool {
        self.inside && self.dim == self.rank
    }
}

fn coordinates(p: &Polynomial, basis: &HashMap<Monomial, usize>) -> Option<SparseVec> {
    p.coordinates(basis)
}

/// Monomials in `t1, t2, t12` of degree `d`.
fn plain_monomials(d: i64) -> Vec<(Monomial, (u32, u32))> {
    let vars = [Var::new("t1"), Var::new("t2"), Var::new("t12")];
    let mut out = Vec::new();
    for e1 in 0..=d {
        for e2 in 0..=d - e1 {
            let e3 = d - e1 - e2;
            let m = Monomial::from_exponents([(vars[0], e1 as i32), (vars[1], e2 as i32), (vars[2], e3 as i32)])
                .expect("nonnegative");
            out.push((m, (((e1 + e3) % 2) as u32, ((e2 + e3) % 2) as u32)));
        }
    }
    out
}

/// `R_{0,0}` is generated by `τ₁², τ₂², τ₁₂², τ₁τ₂τ₁₂`, and each other
/// graded piece is generated over it by the two listed elements. Checked
/// degree by degree: the products span the whole graded piece.
pub fn module_generators_check(max_degree: i64) -> Vec<SpanCheck> {
    let p = |s: &str| Polynomial::parse(s).expect("literal");
    let classes: [((u32, u32), Vec<Polynomial>); 4] = [
        ((0, 0), vec![p("1")]),
        ((1, 0), vec![p("t1"), p("t2*t12")]),
        ((0, 1), vec![p("t2"), p("t1*t12")]),
        ((1, 1), vec![p("t12"), p("t1*t2")]),
    ];
    let r00 = psl2_generator_map();
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let all = plain_monomials(d);
        for (weight, module_gens) in &classes {
            let basis: HashMap<Monomial, usize> =
                all.iter().filter(|(_, w)| w == weight).enumerate().map(|(k, (m, _))| (m.clone(), k)).collect();
            let mut inside = true;
            let mut vectors = Vec::new();
            for g in module_gens {
                let gd = g.total_degree().unwrap_or(0);
                for e in r00.monomials_of_degree(d - gd) {
                    let prod = g.mul_monomial(&r00.image_of(&e));
                    match coordinates(&prod, &basis) {
                        Some(v) => vectors.push(v),
                        None => inside = false,
                    }
                }
            }
            out.push(SpanCheck {
                name: format!("R{}{} degree {d}", weight.0, weight.1),
                degree: d,
                dim: basis.len(),
                rank: rank_of(basis.len(), vectors),
                inside,
            });
        }
    }
    out
}

/// In each degree, the image of the generator monomials is spanned by
/// `(m + σm)·tᵢ` for `i = 0..7`: the coordinate ring is generated by
/// `t₀, …, t₇` over the σ-invariants.
pub fn module_decomposition_check(max_degree: i64) -> Result<Vec<SpanCheck>> {
    let map = so4_generator_map();
    let t = so4_t_list();
    let t_deg: Vec<i64> = t
        .iter()
        .map(|p| p.terms().next().map_or(0, |(m, _)| map.weighted_degree(&map.exponent_vector(m).expect("gens"))))
        .collect();
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut basis: HashMap<Monomial, usize> = HashMap::new();
        for e in map.monomials_of_degree(d) {
            let n = basis.len();
            basis.entry(map.image_of(&e)).or_insert(n);
        }
        let mut inside = true;
        let mut vectors = Vec::new();
        for (ti, &td) in t.iter().zip(&t_deg) {
            for e in map.monomials_of_degree(d - td) {
                let m = Polynomial::monomial(map.monomial(&e));
                let even = &m + &sigma_action(&m);
                let image = map.apply(&(&even * ti))?;
                if image.is_zero() {
                    continue;
                }
                match coordinates(&image, &basis) {
                    Some(v) => vectors.push(v),
                    None => inside = false,
                }
            }
        }
        out.push(SpanCheck {
            name: format!("module degree {d}"),
            degree: d,
            dim: basis.len(),
            rank: rank_of(basis.len(), vectors),
            inside,
        });
    }
    Ok(out)
}

/// Ranks proving that no nonzero combination of `t₁, t₂, t₃` lies in the
/// degree-3 part of the full trace algebra.
///
/// The algebra has no elements of degree 1, so its degree-3 part is spanned
/// by its five degree-3 generators
/// `c₁₁₁, c₂₂₂, c₁₂₁ + c₂₁₂, c₁₂₂ + c₂₁₁, c₁₁₂ + c₂₂₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub ft_rank: usize,
    /// Rank after appending `t₁`, `t₂`, `t₃` one at a time.
    pub with_single: Vec<usize>,
    pub with_all: usize,
    /// `c₁₁₂ + c₂₂₁` lies in the span, as it should.
    pub sanity_contained: bool,
    /// Every product `tⱼtₖ`, `1 ≤ j, k ≤ 7`, is σ-fixed.
    pub products_sigma_fixed: bool,
}

impl IndependenceReport {
    pub fn holds(&self) -> bool {
        self.ft_rank == 5
            && self.with_single == [6, 6, 6]
            && self.with_all == 8
            && self.sanity_contained
            && self.products_sigma_fixed
    }
}

pub fn independence_certificate() -> IndependenceReport {
    let map = so4_generator_map();
    let mut basis: HashMap<Monomial, usize> = HashMap::new();
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                let n = basis.len();
                basis.insert(map.image(c(i, j, k)).expect("c generator").clone(), n);
            }
        }
    }
    let vec_of = |p: &Polynomial| coordinates(&map.apply(p).expect("generators"), &basis).expect("degree 3");
    let cv = |i, j, k| gen(c(i, j, k));
    let ft: Vec<SparseVec> = [
        cv(1, 1, 1),
        cv(2, 2, 2),
        &cv(1, 2, 1) + &cv(2, 1, 2),
        &cv(1, 2, 2) + &cv(2, 1, 1),
        &cv(1, 1, 2) + &cv(2, 2, 1),
    ]
    .iter()
    .map(vec_of)
    .collect();
    let t = so4_t_list();
    let t_vecs: Vec<SparseVec> = t[1..=3].iter().map(vec_of).collect();

    let ft_rank = rank_of(8, ft.clone());
    let with_single =
        t_vecs.iter().map(|tv| rank_of(8, ft.iter().cloned().chain(std::iter::once(tv.clone())))).collect();
    let with_all = rank_of(8, ft.iter().cloned().chain(t_vecs.iter().cloned()));
    let mut span = Echelon::new(8);
    for v in &ft {
        span.insert(v.clone());
    }
    let sanity_contained = span.contains(&vec_of(&(&cv(1, 1, 2) + &cv(2, 2, 1))));
    let products_sigma_fixed = (1..=7).all(|j| {
        (1..=7).all(|k| {
            let prod = &t[j] * &t[k];
            sigma_action(&prod) == prod
        })
    });
    IndependenceReport { ft_rank, with_single, with_all, sanity_contained, products_sigma_fixed }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_identities() {
        for c in verify_t_identities().unwrap() {
            assert!(c.holds(), "{}: residual {}", c.name, c.residual);
        }
    }

    #[test]
    fn ft_identities() {
        for c in verify_ft_generators().unwrap() {
            assert!(c.holds(), "{}: residual {}", c.name, c.residual);
        }
    }

    #[test]
    fn module_generators() {
        for c in module_generators_check(6) {
            assert!(c.holds(), "{c:?}");
        }
    }

    #[test]
    fn module_decomposition() {
        for c in module_decomposition_check(6).unwrap() {
            assert!(c.holds(), "{c:?}");
        }
    }

    #[test]
    fn independence() {
        let r = independence_certificate();
        assert_eq!(r.ft_rank, 5);
        assert_eq!(r.with_single, vec![6, 6, 6]);
        assert_eq!(r.with_all, 8);
        assert!(r.sanity_contained && r.products_sigma_fixed);
    }
}
