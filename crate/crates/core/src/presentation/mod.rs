//! The coordinate ring of the SO(4) character variety of `F₂` as a quotient
//! of a polynomial ring in 17 generators, and the certificates built on it.
//!
//! Through the spin covering, the ring is the `ℤ/2×ℤ/2`-invariant part of
//! `ℂ[τ_{1,j}, τ_{2,j}, τ_{12,j} : j = 1, 2]`. It is spanned by monomials, so
//! every question about generators and relations reduces to exact linear
//! algebra on monomials of bounded degree.

pub mod certificate;
pub mod generators;
pub mod identities;
pub mod relations;
pub mod sigma;

pub use certificate::{completeness_certificate, CompletenessCertificate, DegreeCertificate};
pub use generators::{psl2_generator_map, so4_generator_map, MonomialMap};
pub use identities::{
    independence_certificate, module_decomposition_check, module_generators_check, verify_ft_generators,
    verify_t_identities, IdentityCheck, IndependenceReport,
};
pub use relations::{psl2_relations, so4_relations, so4_relations_with, verify_relations, Family6, RelationSet};
pub use sigma::{pq_split, sigma_action, so4_t_list, PqSplit};
