//! Cross-module invariants checked over the whole small-order catalog,
//! plus randomized closure-operator and isomorphism properties.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use mla_core::algebra::{self, ElemSet, FiniteMla};
use mla_core::enumeration::{build_catalog, find_isomorphisms, is_isomorphic, Catalog};
use mla_core::extensions::{self, identity_extension};
use mla_core::groups;
use mla_core::structure::{self, Outcome};

fn catalog8() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| build_catalog(8).expect("catalog of order ≤ 8"))
}

fn catalog12() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| build_catalog(12).expect("catalog of order ≤ 12"))
}

#[test]
fn every_catalog_entry_passes_full_verification() {
    for e in &catalog12().entries {
        e.algebra.verify().unwrap_or_else(|v| panic!("{}: {v}", e.name));
    }
}

#[test]
fn star_absorbs_the_identity_on_both_sides() {
    for e in &catalog12().entries {
        let a = &e.algebra;
        for g in 0..a.order() {
            assert_eq!(a.star(g, 0), 0, "{}: g⋆1 ≠ 1 at {g}", e.name);
            assert_eq!(a.star(0, g), 0, "{}: 1⋆g ≠ 1 at {g}", e.name);
        }
    }
}

#[test]
fn commutator_and_trivial_stars_verify_on_all_builtin_groups() {
    for (name, g) in groups::builtin_groups(8) {
        g.with_commutator_star()
            .verify()
            .unwrap_or_else(|v| panic!("Comm({name}): {v}"));
        g.with_trivial_star()
            .verify()
            .unwrap_or_else(|v| panic!("TrivStar({name}): {v}"));
    }
}

#[test]
fn quotients_by_every_ideal_verify_and_project_homomorphically() {
    for e in &catalog8().entries {
        let a = &e.algebra;
        for s in structure::all_subalgebras(a, 64).unwrap() {
            if !a.is_ideal(&s) {
                continue;
            }
            let q = algebra::quotient(a, &s).unwrap();
            q.algebra
                .verify()
                .unwrap_or_else(|v| panic!("{}/{s:?}: {v}", e.name));
            q.projection
                .verify()
                .unwrap_or_else(|v| panic!("{} projection: {v}", e.name));
            assert_eq!(q.algebra.order() * s.len(), a.order());
        }
    }
}

#[test]
fn direct_products_of_catalog_entries_verify() {
    let entries = &catalog8().entries;
    for a in entries.iter().step_by(5) {
        for b in entries.iter().step_by(7) {
            let p = algebra::direct_product(&a.algebra, &b.algebra);
            p.verify()
                .unwrap_or_else(|v| panic!("{} × {}: {v}", a.name, b.name));
        }
    }
}

#[test]
fn structural_theorem_suite_holds_on_the_whole_catalog() {
    for e in &catalog12().entries {
        let report = structure::structure_report(&e.algebra, 64).unwrap();
        for c in &report.checks {
            if let Outcome::Fail(w) = &c.outcome {
                panic!("{}: {} failed: {w}", e.name, c.name);
            }
        }
    }
}

#[test]
fn algebras_with_no_proper_subalgebras_have_prime_order() {
    for e in &catalog12().entries {
        let subs = structure::all_subalgebras(&e.algebra, 64).unwrap();
        // Exactly two distinct subalgebras: the trivial one and the whole
        // carrier. The one-element algebra has only one and is excluded.
        if subs.len() == 2 {
            let n = e.algebra.order();
            let prime = n >= 2 && (2..n).all(|d| d * d > n || n % d != 0);
            assert!(
                prime,
                "{}: only trivial subalgebras but order {n} is not prime",
                e.name
            );
        }
    }
}

#[test]
fn catalog_entries_on_the_same_group_are_pairwise_non_isomorphic() {
    let entries = &catalog8().entries;
    for (i, a) in entries.iter().enumerate() {
        for b in entries.iter().skip(i + 1) {
            if a.algebra.order() != b.algebra.order() {
                continue;
            }
            assert!(
                !is_isomorphic(&a.algebra, &b.algebra),
                "{} and {} are distinct entries yet isomorphic",
                a.name,
                b.name
            );
        }
    }
}

#[test]
fn catalog_perfect_flag_matches_the_pair_computation() {
    for e in &catalog8().entries {
        let full = ElemSet::full(e.algebra.order());
        let report = extensions::is_lie_perfect_pair(&e.algebra, &full).unwrap();
        assert_eq!(report.holds, e.perfect, "{}", e.name);
    }
}

#[test]
fn conjugation_actions_satisfy_all_axioms_and_the_displacement_identity() {
    for e in &catalog8().entries {
        let action = mla_core::actions::conjugation_action(&e.algebra);
        action
            .verify_action()
            .unwrap_or_else(|v| panic!("{} action: {v}", e.name));
        action
            .verify_compatibility()
            .unwrap_or_else(|v| panic!("{} compatibility: {v}", e.name));
        action
            .displacement_identity_check()
            .unwrap_or_else(|v| panic!("{} displacement: {v}", e.name));
    }
}

#[test]
fn identity_extensions_verify_across_the_catalog() {
    for e in &catalog8().entries {
        identity_extension(&e.algebra)
            .verify()
            .unwrap_or_else(|v| panic!("{}: {v}", e.name));
    }
}

/// An arbitrary catalog algebra together with an arbitrary seed set.
fn algebra_and_seeds() -> impl Strategy<Value = (Arc<FiniteMla>, Vec<usize>)> {
    let n = catalog8().entries.len();
    (0..n).prop_flat_map(|i| {
        let a = catalog8().entries[i].algebra.clone();
        let order = a.order();
        (Just(a), proptest::collection::vec(0..order, 0..6))
    })
}

proptest! {
    #[test]
    fn closure_operators_are_extensive_monotone_idempotent(
        (a, seeds) in algebra_and_seeds(),
        extra in proptest::collection::vec(0usize..64, 0..3),
    ) {
        let order = a.order();
        let ops: [fn(&FiniteMla, Vec<usize>) -> ElemSet; 3] = [
            |x, s| structure::gen_subgroup(x, s),
            |x, s| structure::gen_subalgebra(x, s),
            |x, s| structure::gen_ideal(x, s),
        ];
        let mut larger = seeds.clone();
        larger.extend(extra.iter().map(|e| e % order));
        for op in ops {
            let closed = op(&a, seeds.clone());
            // Extensive: the seeds lie inside their closure.
            for &s in &seeds {
                prop_assert!(closed.contains(s));
            }
            // Idempotent: closing a closed set changes nothing.
            prop_assert_eq!(op(&a, closed.iter().collect::<Vec<_>>()), closed.clone());
            // Monotone: a larger seed set closes to a superset.
            prop_assert!(closed.is_subset_of(&op(&a, larger.clone())));
        }
    }

    #[test]
    fn isomorphisms_compose_and_invert_within_the_catalog(i in 0usize..29) {
        let entries = &catalog8().entries;
        let a = &entries[i % entries.len()].algebra;
        for h in find_isomorphisms(a, a).into_iter().take(4) {
            h.verify().unwrap();
            let inv = h.inverse().expect("isomorphisms invert");
            inv.verify().unwrap();
            let round = h.compose(&inv);
            prop_assert!((0..a.order()).all(|x| round.apply(x) == x));
        }
    }
}
