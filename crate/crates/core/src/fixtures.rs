//! Named example algebras used across tests and the command-line tools.
//!
//! Each fixture is constructed, not hand-typed: the Klein-four and dihedral
//! structures come out of the enumerator pinned down by one generator-pair
//! star value, and the symmetric/alternating ones take the commutator as
//! star. Results are cached for the life of the process.

use std::sync::{Arc, OnceLock};

use crate::algebra::FiniteMla;
use crate::enumeration::{complete_partial_star, StarConstraint};
use crate::groups;

fn cached(
    cell: &'static OnceLock<Arc<FiniteMla>>,
    build: impl FnOnce() -> FiniteMla,
) -> Arc<FiniteMla> {
    cell.get_or_init(|| {
        let alg = build();
        debug_assert!(alg.verify().is_ok());
        Arc::new(alg)
    })
    .clone()
}

/// The Klein four-group with the star structure pinned by `a⋆b = a`.
pub fn v4a() -> Arc<FiniteMla> {
    static CELL: OnceLock<Arc<FiniteMla>> = OnceLock::new();
    cached(&CELL, || {
        complete_partial_star(&groups::klein_four(), &StarConstraint::single(1, 2, 1), 12)
            .expect("V4 is enumerable")
            .algebras
            .swap_remove(0)
    })
}

/// The dihedral group of order 8 with the star structure pinned by
/// `a⋆b = b` (rotation `b` at index 1, reflection `a` at index 4).
pub fn d4b() -> Arc<FiniteMla> {
    static CELL: OnceLock<Arc<FiniteMla>> = OnceLock::new();
    cached(&CELL, || {
        complete_partial_star(&groups::dihedral(4), &StarConstraint::single(4, 1, 1), 12)
            .expect("D4 is enumerable")
            .algebras
            .swap_remove(0)
    })
}

/// The symmetric group on three points with commutator star.
pub fn s3c() -> Arc<FiniteMla> {
    static CELL: OnceLock<Arc<FiniteMla>> = OnceLock::new();
    cached(&CELL, || groups::symmetric(3).with_commutator_star())
}

/// The alternating group on five points with commutator star; the smallest
/// Lie-simple, Lie-perfect example in the suite.
pub fn comm_a5() -> Arc<FiniteMla> {
    static CELL: OnceLock<Arc<FiniteMla>> = OnceLock::new();
    cached(&CELL, || groups::alternating(5).with_commutator_star())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure;

    #[test]
    fn v4a_table_is_the_constant_nontrivial_form() {
        let a = v4a();
        for x in 0..4 {
            for y in 0..4 {
                let expected = if x != y && x != 0 && y != 0 { 1 } else { 0 };
                assert_eq!(a.star(x, y), expected, "star({x}, {y})");
            }
        }
        assert_eq!(
            structure::frattini(&a, 24).unwrap().members(),
            vec![0],
            "frattini of the pinned Klein-four structure is trivial"
        );
    }

    #[test]
    fn d4b_table_matches_the_closed_form() {
        let a = d4b();
        // Rotations are b^i at index i, reflections b^i·a at index 4+i.
        for i in 0..4usize {
            for j in 0..4usize {
                assert_eq!(a.star(i, j), 0, "b^{i} ⋆ b^{j}");
                assert_eq!(a.star(i, 4 + j), (4 - i) % 4, "b^{i} ⋆ b^{j}a");
                assert_eq!(a.star(4 + i, j), j, "b^{i}a ⋆ b^{j}");
                assert_eq!(a.star(4 + i, 4 + j), (4 + j - i) % 4, "b^{i}a ⋆ b^{j}a");
            }
        }
        assert_eq!(
            structure::frattini(&a, 24).unwrap().members(),
            vec![0, 2],
            "frattini is {{1, b^2}}"
        );
    }

    #[test]
    fn s3c_and_a5_are_commutator_structures() {
        let s = s3c();
        assert_eq!(s.order(), 6);
        assert!(!s.star_is_trivial());
        assert_eq!(s.star(1, 2), s.comm(1, 2));

        let a5 = comm_a5();
        assert_eq!(a5.order(), 60);
        // Perfect: the derived ideal is everything.
        let full = crate::algebra::ElemSet::full(60);
        assert_eq!(
            structure::pair_commutator(&a5, &full).unwrap(),
            full
        );
    }
}
