//! Degree-bounded completeness certificates for monomial presentations.
//!
//! In weighted degree `d`, the kernel of the map from generator monomials to
//! their images is spanned by differences of monomials with equal image. A
//! relation set is complete in degree `d` when that kernel lies in the span
//! of all products `relation × generator monomial` of degree `d`.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;

use super::generators::MonomialMap;
use super::relations::{relation_degree, RelationSet};
use crate::error::{Error, Result};
use crate::exact::{Echelon, GaussianRational, SparseMatrix, SparseVec};

/// Largest number of generator monomials handled in a single degree.
pub const MAX_MONOMIALS_PER_DEGREE: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCertificate {
    pub degree: i64,
    /// Generator monomials of this degree.
    pub monomials: usize,
    /// Distinct images of those monomials.
    pub images: usize,
    pub kernel_dim: usize,
    /// Dimension of the span of relation multiples.
    pub span_dim: usize,
    /// Every kernel basis vector reduces to zero modulo the relation span.
    pub contained: bool,
}

impl DegreeCertificate {
    pub fn complete(&self) -> bool {
        self.contained && self.kernel_dim == self.span_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessCertificate {
    pub max_degree: i64,
    pub degrees: Vec<DegreeCertificate>,
}

impl CompletenessCertificate {
    /// Complete through `max_degree`.
    pub fn complete(&self) -> bool {
        self.degrees.iter().all(DegreeCertificate::complete)
    }

    pub fn first_failure(&self) -> Option<i64> {
        self.degrees.iter().find(|d| !d.complete()).map(|d| d.degree)
    }
}

/// A relation as `(exponent vector, coefficient)` terms.
type SparseRelation = Vec<(Vec<u32>, GaussianRational)>;

pub fn completeness_certificate(
    map: &MonomialMap,
    rels: &RelationSet,
    max_degree: i64,
) -> Result<CompletenessCertificate> {
    let mut by_degree: BTreeMap<i64, Vec<SparseRelation>> = BTreeMap::new();
    for r in &rels.relations {
        let deg = relation_degree(map, &r.poly)?
            .ok_or_else(|| Error::Input(format!("relation {} is not homogeneous", r.name)))?;
        let terms = r
            .poly
            .terms()
            .map(|(m, c)| Ok((map.exponent_vector(m)?, c.clone())))
            .collect::<Result<SparseRelation>>()?;
        by_degree.entry(deg).or_default().push(terms);
    }

    let mut degrees = Vec::new();
    for d in 1..=max_degree {
        degrees.push(certify_degree(map, &by_degree, d)?);
    }
    Ok(CompletenessCertificate { max_degree, degrees })
}

fn certify_degree(
    map: &MonomialMap,
    by_degree: &BTreeMap<i64, Vec<SparseRelation>>,
    d: i64,
) -> Result<DegreeCertificate> {
    let basis = map.monomials_of_degree(d);
    if basis.len() > MAX_MONOMIALS_PER_DEGREE {
        return Err(Error::BudgetExceeded { needed: basis.len() as u64, budget: MAX_MONOMIALS_PER_DEGREE as u64 });
    }
    let column: HashMap<&[u32], usize> = basis.iter().enumerate().map(|(k, e)| (e.as_slice(), k)).collect();

    // One row per image monomial, with a 1 in every column mapping to it.
    let mut fibers: BTreeMap<_, SparseVec> = BTreeMap::new();
    for (k, e) in basis.iter().enumerate() {
        fibers.entry(map.image_of(e)).or_default().insert(k, GaussianRational::one());
    }
    let mut matrix = SparseMatrix::new(basis.len());
    let images = fibers.len();
    for row in fibers.into_values() {
        matrix.push_row(row);
    }
    let kernel = matrix.kernel_basis();

    let mut span = Echelon::new(basis.len());
    for (&rd, rels) in by_degree.range(..=d) {
        for cofactor in map.monomials_of_degree(d - rd) {
            for rel in rels {
                let mut v = SparseVec::new();
                for (e, coeff) in rel {
                    let prod: Vec<u32> = e.iter().zip(&cofactor).map(|(x, y)| x + y).collect();
                    let col = column[prod.as_slice()];
                    let entry = v.entry(col).or_insert_with(num_traits::Zero::zero);
                    *entry += coeff;
                }
                v.retain(|_, x| !num_traits::Zero::is_zero(x));
                span.insert(v);
            }
        }
    }
    let contained = kernel.iter().all(|v| span.contains(v));
    Ok(DegreeCertificate {
        degree: d,
        monomials: basis.len(),
        images,
        kernel_dim: kernel.len(),
        span_dim: span.rank(),
        contained,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::generators::{psl2_generator_map, so4_generator_map};
    use crate::presentation::relations::{psl2_relations, so4_relations, so4_relations_with, Family6};

    #[test]
    fn psl2_complete_through_12() {
        let cert = completeness_certificate(&psl2_generator_map(), &psl2_relations(), 12).unwrap();
        assert!(cert.complete(), "{cert:?}");
        let d6 = &cert.degrees[5];
        assert_eq!((d6.kernel_dim, d6.span_dim), (1, 1));
    }

    #[test]
    fn so4_complete_through_6() {
        let cert = completeness_certificate(&so4_generator_map(), &so4_relations(), 6).unwrap();
        assert!(cert.complete(), "{cert:?}");
    }

    #[test]
    fn mutation_fails_at_six() {
        let rels = so4_relations_with(Family6::Corrected, &[3]);
        let cert = completeness_certificate(&so4_generator_map(), &rels, 6).unwrap();
        assert_eq!(cert.first_failure(), Some(6));
    }

    #[test]
    fn empty_relations_fail_where_kernel_starts() {
        let cert = completeness_certificate(&psl2_generator_map(), &RelationSet::default(), 6).unwrap();
        assert_eq!(cert.first_failure(), Some(6));
    }
}
