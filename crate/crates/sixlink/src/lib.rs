//! Exact classification of smooth and PL isotopy classes of embeddings of
//! two disjoint closed connected orientable 3-manifolds into the 6-sphere.
//!
//! The input is a pair of integer surgery presentations. Everything
//! downstream is finite integer linear algebra: first homology groups and
//! their canonical coordinates, the group of sphere links in 6-space with
//! its parity constraint, stabilizer sublattices built from intersection
//! pairings, and quotient shapes describing how many isotopy classes share
//! a fixed tuple of Whitney invariants. An isotopy oracle decides whether
//! two invariant tuples name the same class, with an explicit certificate
//! when they do.
//!
//! All arithmetic is arbitrary-precision and exact; there is no floating
//! point anywhere in the crate.

pub mod classifier;
pub mod framedlink;
pub mod intlinalg;
pub mod linkgroup;
pub mod manifold;

pub use classifier::{
    act, corollary1_witness, enumerate_wl, fiber_structure, is_in_stabilizer, isotopic,
    isotopy_verdict, pl_fiber_structure, pl_simplification_check, pl_stabilizer, stabilizer,
    EmbeddingInvariants, FiberStructure, IsotopyVerdict, StabilizerSubgroup, WlEnumeration,
    WlValue,
};
pub use intlinalg::{AbelianGroupShape, IntMatrix, SmithDecomposition};
pub use linkgroup::{KnotClass, LinkClass, PlLinkClass};
pub use manifold::{H1Class, H2Class, HomologyData, SurgeryPresentation};
