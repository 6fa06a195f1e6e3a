//! Finite multiplicative Lie algebras as explicit operation tables.
//!
//! A multiplicative Lie algebra is a group `(G, ·)` carrying a second binary
//! operation `⋆` that behaves like a Lie bracket written multiplicatively:
//! it is alternating, distributes over products on either side up to
//! conjugation twists, satisfies a Jacobi-style three-term identity, and is
//! preserved by conjugation. This crate represents such structures on finite
//! carriers as dense multiplication tables and provides:
//!
//! * verification of the group laws and the five star identities
//!   ([`FiniteMla::verify_group`], [`FiniteMla::verify_star_axioms`]);
//! * subalgebra/ideal lattices, centers, Frattini subalgebra, normalizers,
//!   and central series ([`structure`]);
//! * mutual actions of two algebras on each other with bracket and
//!   compatibility axioms ([`actions`]);
//! * relative Lie central extensions, their invariants, and constructions
//!   that produce new extensions from old ([`extensions`]);
//! * isoclinism of extensions, decided by exhaustive search ([`isoclinism`]);
//! * enumeration of all star operations over a fixed group table and a small
//!   catalog builder ([`enumeration`]).
//!
//! Elements are plain indices `0..n`, the identity is always index `0`, and
//! all binary operations are row-major `n × n` tables. Witnesses reported by
//! verifiers are lexicographically least in the scan order documented on each
//! function.

pub mod actions;
pub mod algebra;
pub mod enumeration;
pub mod extensions;
pub mod fixtures;
pub mod groups;
pub mod isoclinism;
pub mod structure;

pub use algebra::{
    direct_product, quotient, restrict, ElemSet, FiniteMla, GroupViolation, HomViolation,
    IdealFailure, MlaHom, Quotient, StarViolation, StructuralError, Subalgebra,
    SubalgebraFailure,
};
pub use structure::{BoundExceeded, Centers, Outcome, SeriesResult, StructureCheck, StructureReport};
