//! The six families of quadratic relations among the SO(4) generators, and
//! the single PSL(2) relation.

use num_traits::Zero;

use super::generators::{a, b, c, MonomialMap};
use crate::error::Result;
use crate::exact::{Polynomial, Var};

/// A named polynomial in generator variables.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub name: String,
    pub family: usize,
    pub poly: Polynomial,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn families(&self) -> Vec<usize> {
        let mut f: Vec<usize> = self.relations.iter().map(|r| r.family).collect();
        f.dedup();
        f
    }

    /// Adds a relation unless it is zero or `±` an existing one.
    fn push(&mut self, family: usize, name: String, poly: Polynomial) {
        if poly.is_zero() {
            return;
        }
        let neg = -&poly;
        if self.relations.iter().any(|r| r.poly == poly || r.poly == neg) {
            return;
        }
        self.relations.push(Relation { name, family, poly });
    }
}

/// How the sixth family is instantiated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family6 {
    /// `b_{j,k}c_{i,j′,k′} − b_{j,k′}c_{i,j′,k}`
    Corrected,
    /// `b_{j,k}c_{i,j′,k′} − b_{j,k′}c_{i,j′,j}`, which differs from the
    /// corrected form whenever `k ≠ j` and then is not a relation.
    AsPrinted,
}

fn binomial(p: Var, q: Var, r: Var, s: Var) -> Polynomial {
    &(&Polynomial::var(p) * &Polynomial::var(q)) - &(&Polynomial::var(r) * &Polynomial::var(s))
}

fn cubic(c1: Var, c2: Var, a1: Var, a2: Var, b1: Var) -> Polynomial {
    let lhs = &Polynomial::var(c1) * &Polynomial::var(c2);
    let rhs = &(&Polynomial::var(a1) * &Polynomial::var(a2)) * &Polynomial::var(b1);
    &lhs - &rhs
}

const IDX: [usize; 2] = [1, 2];

fn quads() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    IDX.into_iter().flat_map(|p| {
        IDX.into_iter().flat_map(move |q| IDX.into_iter().flat_map(move |r| IDX.into_iter().map(move |s| (p, q, r, s))))
    })
}

/// All instances of the six families with `Family6::Corrected`.
pub fn so4_relations() -> RelationSet {
    so4_relations_with(Family6::Corrected, &[])
}

/// All instances of the families `1..=6` except those in `omit`.
pub fn so4_relations_with(family6: Family6, omit: &[usize]) -> RelationSet {
    let mut set = RelationSet::default();
    let keep = |f: usize| !omit.contains(&f);
    if keep(1) {
        for i in IDX {
            for (j, k, j2, k2) in quads() {
                set.push(
                    1,
                    format!("F1(i={i},j={j},k={k},j'={j2},k'={k2})"),
                    binomial(a(i, j, k), a(i, j2, k2), a(i, j, j2), a(i, k, k2)),
                );
            }
        }
    }
    if keep(2) {
        for (j, k, j2, k2) in quads() {
            set.push(2, format!("F2(j={j},k={k},j'={j2},k'={k2})"), binomial(b(j, k), b(j2, k2), b(j, j2), b(k, k2)));
        }
    }
    if keep(3) {
        for (i, j, k, i2) in quads() {
            for j2 in IDX {
                for k2 in IDX {
                    set.push(
                        3,
                        format!("F3(i={i},j={j},k={k},i'={i2},j'={j2},k'={k2})"),
                        cubic(c(i, j, k), c(i2, j2, k2), a(1, i, i2), a(2, j, j2), b(k, k2)),
                    );
                }
            }
        }
    }
    for i in IDX {
        for (j, k, j2, k2) in quads() {
            let tag = format!("(i={i},j={j},k={k},j'={j2},k'={k2})");
            if keep(4) {
                set.push(4, format!("F4{tag}"), binomial(a(1, j, k), c(i, j2, k2), a(1, i, k), c(j, j2, k2)));
            }
            if keep(5) {
                set.push(5, format!("F5{tag}"), binomial(a(2, j, k), c(i, j2, k2), a(2, j2, k), c(i, j, k2)));
            }
            if keep(6) {
                let last = match family6 {
                    Family6::Corrected => k,
                    Family6::AsPrinted => j,
                };
                set.push(6, format!("F6{tag}"), binomial(b(j, k), c(i, j2, k2), b(j, k2), c(i, j2, last)));
            }
        }
    }
    set.relations.sort_by_key(|r| r.family);
    set
}

/// `g₁g₂g₃ − g₄²`.
pub fn psl2_relations() -> RelationSet {
    let mut set = RelationSet::default();
    set.push(1, "g1*g2*g3 - g4^2".into(), Polynomial::parse("g1*g2*g3 - g4^2").expect("literal"));
    set
}

/// Image of one relation under a monomial map.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationVerdict {
    pub name: String,
    pub residual: Polynomial,
}

impl RelationVerdict {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

pub fn verify_relations(map: &MonomialMap, rels: &RelationSet) -> Result<Vec<RelationVerdict>> {
    rels.relations.iter().map(|r| Ok(RelationVerdict { name: r.name.clone(), residual: map.apply(&r.poly)? })).collect()
}

/// Weighted degree of a relation, if all its terms share one.
pub fn relation_degree(map: &MonomialMap, p: &Polynomial) -> Result<Option<i64>> {
    let mut deg = None;
    for (m, _) in p.terms() {
        let d = map.weighted_degree(&map.exponent_vector(m)?);
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return Ok(None),
            _ => {}
        }
    }
    Ok(deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::generators::{psl2_generator_map, so4_generator_map};

    #[test]
    fn all_families_hold() {
        let map = so4_generator_map();
        let rels = so4_relations();
        assert_eq!(rels.families(), vec![1, 2, 3, 4, 5, 6]);
        for v in verify_relations(&map, &rels).unwrap() {
            assert!(v.holds(), "{} leaves {}", v.name, v.residual);
        }
        for v in verify_relations(&psl2_generator_map(), &psl2_relations()).unwrap() {
            assert!(v.holds());
        }
    }

    #[test]
    fn printed_family6_fails_off_diagonal() {
        let map = so4_generator_map();
        let rels = so4_relations_with(Family6::AsPrinted, &[1, 2, 3, 4, 5]);
        let verdicts = verify_relations(&map, &rels).unwrap();
        assert!(verdicts.iter().any(|v| !v.holds()));
        for (r, v) in rels.relations.iter().zip(&verdicts) {
            let j_eq_k = {
                let parse = |key: &str| r.name.split(key).nth(1).unwrap().chars().next().unwrap();
                parse("j=") == parse(",k=")
            };
            assert_eq!(v.holds(), j_eq_k, "{}", r.name);
        }
    }

    #[test]
    fn nonzero_residual_example() {
        let map = so4_generator_map();
        let p = &Polynomial::var(a(1, 1, 1)) - &Polynomial::var(b(1, 1));
        let expected = Polynomial::parse("t1_1^2 - t12_1^2").unwrap();
        assert_eq!(map.apply(&p).unwrap(), expected);
    }

    #[test]
    fn relations_are_homogeneous() {
        let map = so4_generator_map();
        for r in so4_relations().relations {
            let d = relation_degree(&map, &r.poly).unwrap().unwrap();
            let expected = match r.family {
                1 | 2 => 4,
                3 => 6,
                _ => 5,
            };
            assert_eq!(d, expected, "{}", r.name);
        }
    }
}
