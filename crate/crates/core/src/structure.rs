//! Structural invariants: closure operators, the subalgebra lattice,
//! centers, pair commutators and centers, central series, the Frattini
//! subalgebra, multiplicative normalizers, and a report that checks a suite
//! of structural theorems on a concrete algebra.

use std::collections::HashSet;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{quotient, restrict, ElemSet, FiniteMla, IdealFailure, SubalgebraFailure};

/// Default cap on carrier size for lattice enumeration.
pub const DEFAULT_LATTICE_BOUND: usize = 24;

/// Exhaustive lattice search refused because the carrier is too large.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("order {order} exceeds the exhaustive-search bound {bound}")]
pub struct BoundExceeded {
    pub order: usize,
    pub bound: usize,
}

fn close(a: &FiniteMla, seeds: impl IntoIterator<Item = usize>, with_star: bool) -> ElemSet {
    let mut set = ElemSet::empty(a.order());
    set.insert(0);
    let mut queue = vec![0usize];
    for s in seeds {
        if set.insert(s) {
            queue.push(s);
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        let ix = a.inv(x);
        if set.insert(ix) {
            queue.push(ix);
        }
        // Pair x against everything found so far; later arrivals pick up
        // their pairs with x when they are processed themselves.
        for j in 0..queue.len() {
            let y = queue[j];
            for v in [a.mul(x, y), a.mul(y, x)] {
                if set.insert(v) {
                    queue.push(v);
                }
            }
            if with_star {
                for v in [a.star(x, y), a.star(y, x)] {
                    if set.insert(v) {
                        queue.push(v);
                    }
                }
            }
        }
    }
    set
}

/// Least subgroup containing the seeds (product and inverse closure only).
pub fn gen_subgroup(a: &FiniteMla, seeds: impl IntoIterator<Item = usize>) -> ElemSet {
    close(a, seeds, false)
}

/// Least subalgebra containing the seeds: closed under product, inverse,
/// and star among members.
pub fn gen_subalgebra(a: &FiniteMla, seeds: impl IntoIterator<Item = usize>) -> ElemSet {
    close(a, seeds, true)
}

/// Least ideal containing the seeds: a subalgebra additionally closed under
/// conjugation by, and star with, every element of the whole algebra.
pub fn gen_ideal(a: &FiniteMla, seeds: impl IntoIterator<Item = usize>) -> ElemSet {
    let n = a.order();
    let mut set = ElemSet::empty(n);
    set.insert(0);
    let mut queue = vec![0usize];
    for s in seeds {
        if set.insert(s) {
            queue.push(s);
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        let ix = a.inv(x);
        if set.insert(ix) {
            queue.push(ix);
        }
        for j in 0..queue.len() {
            let y = queue[j];
            for v in [a.mul(x, y), a.mul(y, x)] {
                if set.insert(v) {
                    queue.push(v);
                }
            }
        }
        for g in 0..n {
            for v in [a.conj(g, x), a.star(g, x)] {
                if set.insert(v) {
                    queue.push(v);
                }
            }
        }
    }
    set
}

/// Every subalgebra, sorted by (size, members). Grown by closing supersets:
/// start from the trivial subalgebra and repeatedly adjoin one outside
/// element, memoizing closures, so no powerset scan happens.
pub fn all_subalgebras(a: &FiniteMla, bound: usize) -> Result<Vec<ElemSet>, BoundExceeded> {
    let n = a.order();
    if n > bound {
        return Err(BoundExceeded { order: n, bound });
    }
    let base = gen_subalgebra(a, []);
    let mut found: HashSet<ElemSet> = HashSet::new();
    found.insert(base.clone());
    let mut queue = vec![base];
    let mut i = 0;
    while i < queue.len() {
        let s = queue[i].clone();
        i += 1;
        for g in 0..n {
            if s.contains(g) {
                continue;
            }
            let t = gen_subalgebra(a, s.iter().chain(std::iter::once(g)));
            if !found.contains(&t) {
                found.insert(t.clone());
                queue.push(t);
            }
        }
    }
    let mut out: Vec<ElemSet> = found.into_iter().collect();
    out.sort();
    Ok(out)
}

fn maximal_among(subs: &[ElemSet], n: usize) -> Vec<ElemSet> {
    let full = ElemSet::full(n);
    let proper: Vec<&ElemSet> = subs.iter().filter(|s| **s != full).collect();
    proper
        .iter()
        .filter(|s| {
            proper
                .iter()
                .all(|t| *t == **s || !s.is_subset_of(t))
        })
        .map(|s| (*s).clone())
        .collect()
}

/// Proper subalgebras not contained in any larger proper subalgebra.
pub fn maximal_subalgebras(a: &FiniteMla, bound: usize) -> Result<Vec<ElemSet>, BoundExceeded> {
    Ok(maximal_among(&all_subalgebras(a, bound)?, a.order()))
}

fn intersect_all(sets: &[ElemSet], n: usize) -> ElemSet {
    let mut out = ElemSet::full(n);
    for s in sets {
        out.intersect_with(s);
    }
    out
}

/// Intersection of all maximal subalgebras; the whole carrier when there is
/// no maximal subalgebra (only the order-1 algebra at this scale).
pub fn frattini(a: &FiniteMla, bound: usize) -> Result<ElemSet, BoundExceeded> {
    Ok(intersect_all(&maximal_subalgebras(a, bound)?, a.order()))
}

/// Non-generators via the maximal-subalgebra characterization: exactly the
/// elements lying in every maximal subalgebra.
pub fn non_generators(a: &FiniteMla, bound: usize) -> Result<ElemSet, BoundExceeded> {
    frattini(a, bound)
}

/// Non-generators straight from the definition: `g` such that every
/// generating set still generates after dropping `g`. Exponential in the
/// order; intended as a cross-check at small sizes.
pub fn non_generators_by_definition(a: &FiniteMla) -> ElemSet {
    let n = a.order();
    assert!(n <= 16, "definition scan is exponential; use small orders");
    let full = ElemSet::full(n);
    let mut out = ElemSet::full(n);
    for mask in 0u32..(1u32 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if gen_subalgebra(a, members.iter().copied()) != full {
            continue;
        }
        for &g in &members {
            if gen_subalgebra(a, members.iter().copied().filter(|&x| x != g)) != full {
                out.remove(g);
            }
        }
    }
    out
}

/// The three centers: group center `Z`, Lie center `LZ = {g : g ⋆ x = 1}`,
/// and their intersection `MZ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Centers {
    pub group: ElemSet,
    pub lie: ElemSet,
    pub multiplicative: ElemSet,
}

pub fn centers(a: &FiniteMla) -> Centers {
    let n = a.order();
    let mut group = ElemSet::empty(n);
    let mut lie = ElemSet::empty(n);
    for g in 0..n {
        if (0..n).all(|x| a.mul(g, x) == a.mul(x, g)) {
            group.insert(g);
        }
        if (0..n).all(|x| a.star(g, x) == 0) {
            lie.insert(g);
        }
    }
    let mut multiplicative = group.clone();
    multiplicative.intersect_with(&lie);
    debug_assert!(a.is_ideal(&group));
    debug_assert!(a.is_ideal(&lie));
    debug_assert!(a.is_ideal(&multiplicative));
    Centers {
        group,
        lie,
        multiplicative,
    }
}

/// The pair commutator: the ideal generated by all `[g, h]` and `g ⋆ h`
/// with `g` anywhere and `h` in the given ideal. With the whole carrier
/// this is the derived ideal of the algebra.
pub fn pair_commutator(a: &FiniteMla, h: &ElemSet) -> Result<ElemSet, IdealFailure> {
    if let Some(f) = a.ideal_failure(h) {
        return Err(f);
    }
    let mut seeds = Vec::new();
    for g in 0..a.order() {
        for x in h.iter() {
            seeds.push(a.comm(g, x));
            seeds.push(a.star(g, x));
        }
    }
    Ok(gen_ideal(a, seeds))
}

/// The pair center: elements `h` of the ideal with `[g, h] = 1` and
/// `g ⋆ h = 1` for every `g`.
pub fn pair_center(a: &FiniteMla, h: &ElemSet) -> Result<ElemSet, IdealFailure> {
    if let Some(f) = a.ideal_failure(h) {
        return Err(f);
    }
    let n = a.order();
    let mut out = ElemSet::empty(n);
    for x in h.iter() {
        if (0..n).all(|g| a.comm(g, x) == 0 && a.star(g, x) == 0) {
            out.insert(x);
        }
    }
    debug_assert!(a.is_ideal(&out));
    debug_assert!(out.is_subset_of(&centers(a).multiplicative));
    Ok(out)
}

/// A central or normalizer series.
///
/// `terms` always ends with two equal sets (the fixpoint, recorded twice so
/// stabilization is visible). `class_index` is series-specific: for central
/// series, the first index holding the terminal value; for normalizer
/// towers, the first index equal to the whole carrier, if reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesResult {
    pub terms: Vec<ElemSet>,
    pub stabilized: bool,
    pub class_index: Option<usize>,
}

fn run_to_fixpoint(start: ElemSet, mut step: impl FnMut(&ElemSet) -> ElemSet) -> Vec<ElemSet> {
    let mut terms = vec![start];
    loop {
        let next = step(terms.last().unwrap());
        let done = &next == terms.last().unwrap();
        terms.push(next);
        if done {
            return terms;
        }
    }
}

fn first_index_of_terminal(terms: &[ElemSet]) -> Option<usize> {
    let terminal = terms.last().unwrap();
    terms.iter().position(|t| t == terminal)
}

/// Descending series `M_0 = G`, `M_{n+1} = ^M[G, M_n]`, using the full
/// multiplicative commutator at every step. Nilpotent iff the terminal term
/// is trivial; the class is then `class_index`.
pub fn lower_central_series(a: &FiniteMla) -> SeriesResult {
    let terms = run_to_fixpoint(ElemSet::full(a.order()), |m| {
        pair_commutator(a, m).expect("series terms are ideals")
    });
    let class_index = first_index_of_terminal(&terms);
    SeriesResult {
        terms,
        stabilized: true,
        class_index,
    }
}

/// The literal reading with a plain group bracket after the first step:
/// `M_0 = G`, `M_1 = ^M[G, G]`, then `M_{n+1} = [G, M_n]` as a generated
/// subgroup of group commutators only.
pub fn lower_central_series_plain(a: &FiniteMla) -> SeriesResult {
    let full = ElemSet::full(a.order());
    let mut terms = vec![full.clone()];
    let mut current = pair_commutator(a, &full).expect("the whole carrier is an ideal");
    loop {
        let done = &current == terms.last().unwrap();
        terms.push(current.clone());
        if done {
            break;
        }
        let mut seeds = Vec::new();
        for g in 0..a.order() {
            for m in current.iter() {
                seeds.push(a.comm(g, m));
            }
        }
        current = gen_subgroup(a, seeds);
    }
    let class_index = first_index_of_terminal(&terms);
    SeriesResult {
        terms,
        stabilized: true,
        class_index,
    }
}

pub fn nilpotency_class(a: &FiniteMla) -> Option<usize> {
    let series = lower_central_series(a);
    if series.terms.last().unwrap().len() == 1 {
        series.class_index
    } else {
        None
    }
}

/// Ascending series `Z_0 = {1}`, `Z_{i+1}` the preimage of the
/// multiplicative center of `A / Z_i` under the quotient projection.
pub fn upper_central_series(a: &Arc<FiniteMla>) -> SeriesResult {
    let terms = run_to_fixpoint(ElemSet::from_members(a.order(), [0]), |z| {
        let q = quotient(a, z).expect("upper series terms are ideals");
        let mz = centers(&q.algebra).multiplicative;
        q.projection.preimage_of(&mz)
    });
    let class_index = first_index_of_terminal(&terms);
    SeriesResult {
        terms,
        stabilized: true,
        class_index,
    }
}

/// The multiplicative normalizer `{g : gHg⁻¹ = H and g ⋆ H ⊆ H}` of a
/// subalgebra. Always a subalgebra containing `H`.
pub fn normalizer(a: &FiniteMla, h: &ElemSet) -> Result<ElemSet, SubalgebraFailure> {
    if let Some(f) = a.subalgebra_failure(h) {
        return Err(f);
    }
    let n = a.order();
    let mut out = ElemSet::empty(n);
    'g: for g in 0..n {
        for x in h.iter() {
            if !h.contains(a.conj(g, x)) || !h.contains(a.star(g, x)) {
                continue 'g;
            }
        }
        out.insert(g);
    }
    debug_assert!(h.is_subset_of(&out));
    debug_assert!(a.is_subalgebra(&out));
    Ok(out)
}

/// Ascending tower `𝒩⁰ = H`, `𝒩ⁱ⁺¹ = normalizer(𝒩ⁱ)` until it stabilizes.
/// `class_index` is the first step equal to the whole carrier, if any.
pub fn normalizer_tower(a: &FiniteMla, h: &ElemSet) -> Result<SeriesResult, SubalgebraFailure> {
    if let Some(f) = a.subalgebra_failure(h) {
        return Err(f);
    }
    let n = a.order();
    let terms = run_to_fixpoint(h.clone(), |cur| {
        normalizer(a, cur).expect("normalizers are subalgebras")
    });
    let class_index = terms.iter().position(|t| t.len() == n);
    Ok(SeriesResult {
        terms,
        stabilized: true,
        class_index,
    })
}

/// Result of one theorem check inside [`StructureReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The statement's hypothesis does not hold here, so there was nothing
    /// to check.
    Vacuous,
    Fail(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureCheck {
    pub name: &'static str,
    pub outcome: Outcome,
}

/// Structural theorem suite evaluated on one algebra, plus the three series
/// and the divergence (if any) between the two lower-series readings.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub checks: Vec<StructureCheck>,
    pub lower: SeriesResult,
    pub lower_plain: SeriesResult,
    pub upper: SeriesResult,
    /// First index at which the two lower central series differ.
    pub series_divergence: Option<usize>,
    pub nilpotency_class: Option<usize>,
}

fn product_set(a: &FiniteMla, x: &ElemSet, y: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty(a.order());
    for p in x.iter() {
        for q in y.iter() {
            out.insert(a.mul(p, q));
        }
    }
    out
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn divergence_index(x: &SeriesResult, y: &SeriesResult) -> Option<usize> {
    let len = x.terms.len().max(y.terms.len());
    let at = |s: &SeriesResult, i: usize| s.terms.get(i).unwrap_or_else(|| s.terms.last().unwrap()).clone();
    (0..len).find(|&i| at(x, i) != at(y, i))
}

/// Runs every structural theorem in the suite against `a`.
///
/// Conditional statements report [`Outcome::Vacuous`] when their hypothesis
/// fails; unconditional ones must pass on every verified algebra, and a
/// failure carries a witness description.
pub fn structure_report(a: &Arc<FiniteMla>, bound: usize) -> Result<StructureReport, BoundExceeded> {
    let n = a.order();
    let subs = all_subalgebras(a, bound)?;
    let maxes = maximal_among(&subs, n);
    let frat = intersect_all(&maxes, n);
    let full = ElemSet::full(n);
    let derived = pair_commutator(a, &full).expect("the whole carrier is an ideal");
    let lower = lower_central_series(a);
    let lower_plain = lower_central_series_plain(a);
    let upper = upper_central_series(a);
    let series_divergence = divergence_index(&lower, &lower_plain);
    let class = if lower.terms.last().unwrap().len() == 1 {
        lower.class_index
    } else {
        None
    };
    let cents = centers(a);
    let ideals: Vec<ElemSet> = subs.iter().filter(|s| a.is_ideal(s)).cloned().collect();
    let nilpotent = class.is_some();

    // Per-subalgebra data reused by several checks.
    let restricted: Vec<crate::algebra::Subalgebra> = subs
        .iter()
        .map(|s| restrict(a, s).expect("lattice members are subalgebras"))
        .collect();
    let sub_frattini: Vec<ElemSet> = restricted
        .iter()
        .map(|r| {
            let f = frattini(&r.algebra, bound).expect("sub-lattice is within the bound");
            r.inclusion.image_of(&f)
        })
        .collect();

    let mut checks = Vec::new();
    let mut push = |name: &'static str, outcome: Outcome| {
        checks.push(StructureCheck { name, outcome })
    };

    // Frattini subalgebra = set of non-generators. Cross-checked against
    // the raw definition where the powerset scan is affordable.
    push(
        "frattini-equals-non-generators",
        if n <= 12 {
            let direct = non_generators_by_definition(a);
            if direct == frat {
                Outcome::Pass
            } else {
                Outcome::Fail(format!(
                    "non-generators by definition {direct:?} differ from frattini {frat:?}"
                ))
            }
        } else {
            // At larger orders the definition scan is infeasible and the
            // computed set is the characterization itself.
            Outcome::Vacuous
        },
    );

    // The multiplicative normalizer of a subalgebra is a subalgebra.
    push("normalizer-is-subalgebra", {
        let mut outcome = Outcome::Pass;
        for s in &subs {
            let nz = normalizer(a, s).expect("lattice members are subalgebras");
            if !a.is_subalgebra(&nz) {
                outcome = Outcome::Fail(format!(
                    "normalizer {nz:?} of {s:?} is not a subalgebra"
                ));
                break;
            }
        }
        outcome
    });

    // Nilpotent algebras satisfy the normalizer condition: every proper
    // subalgebra sits strictly inside its normalizer.
    push(
        "normalizer-condition",
        if !nilpotent {
            Outcome::Vacuous
        } else {
            let mut outcome = Outcome::Pass;
            for s in &subs {
                if *s == full {
                    continue;
                }
                let nz = normalizer(a, s).expect("lattice members are subalgebras");
                if nz == *s {
                    outcome = Outcome::Fail(format!("proper subalgebra {s:?} is self-normalizing"));
                    break;
                }
            }
            outcome
        },
    );

    // In a nilpotent algebra every maximal subalgebra is an ideal.
    push(
        "maximal-subalgebras-are-ideals",
        if !nilpotent {
            Outcome::Vacuous
        } else {
            match maxes.iter().find(|m| !a.is_ideal(m)) {
                None => Outcome::Pass,
                Some(m) => Outcome::Fail(format!("maximal subalgebra {m:?} is not an ideal")),
            }
        },
    );

    // In a nilpotent algebra the derived ideal lies in the Frattini
    // subalgebra.
    push(
        "derived-in-frattini",
        if !nilpotent {
            Outcome::Vacuous
        } else if derived.is_subset_of(&frat) {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("derived ideal {derived:?} escapes frattini {frat:?}"))
        },
    );

    // Unconditional: MZ ∩ derived ⊆ frattini.
    push("center-meet-derived-in-frattini", {
        let mut meet = cents.multiplicative.clone();
        meet.intersect_with(&derived);
        if meet.is_subset_of(&frat) {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("MZ ∩ derived = {meet:?} escapes frattini {frat:?}"))
        }
    });

    // In a nilpotent algebra, a subalgebra H with derived·H = G must be G.
    push(
        "derived-supplement-forces-whole",
        if !nilpotent {
            Outcome::Vacuous
        } else {
            let mut outcome = Outcome::Pass;
            for s in &subs {
                if product_set(a, &derived, s) == full && *s != full {
                    outcome = Outcome::Fail(format!(
                        "proper subalgebra {s:?} satisfies derived·H = G"
                    ));
                    break;
                }
            }
            outcome
        },
    );

    // In a nilpotent algebra of class c, every normalizer tower reaches the
    // whole algebra in at most c steps.
    push(
        "normalizer-tower-reaches",
        match class {
            None => Outcome::Vacuous,
            Some(c) => {
                let mut outcome = Outcome::Pass;
                for s in &subs {
                    let tower = normalizer_tower(a, s).expect("lattice members are subalgebras");
                    match tower.class_index {
                        Some(i) if i <= c => {}
                        reached => {
                            outcome = Outcome::Fail(format!(
                                "tower of {s:?} reaches the whole algebra at {reached:?}, class is {c}"
                            ));
                            break;
                        }
                    }
                }
                outcome
            }
        },
    );

    // An ideal K lies in the Frattini subalgebra iff no proper subalgebra
    // H satisfies gen(H ∪ K) = G. Both directions, over every ideal.
    push("frattini-lemma-supplement", {
        let mut outcome = Outcome::Pass;
        'k: for k in &ideals {
            let inside = k.is_subset_of(&frat);
            let mut supplement = None;
            for h in &subs {
                if *h != full && gen_subalgebra(a, h.iter().chain(k.iter())) == full {
                    supplement = Some(h.clone());
                    break;
                }
            }
            match (inside, supplement) {
                (true, Some(h)) => {
                    outcome = Outcome::Fail(format!(
                        "K = {k:?} lies in frattini yet gen(H ∪ K) = G for proper H = {h:?}"
                    ));
                    break 'k;
                }
                (false, None) => {
                    outcome = Outcome::Fail(format!(
                        "K = {k:?} escapes frattini yet admits no proper supplement"
                    ));
                    break 'k;
                }
                _ => {}
            }
        }
        outcome
    });

    // If K is an ideal of G contained in the Frattini subalgebra of some
    // subalgebra H, then K lies in the Frattini subalgebra of G.
    push("frattini-lemma-intermediate", {
        let mut outcome = Outcome::Pass;
        'pair: for k in &ideals {
            for (h, fh) in subs.iter().zip(&sub_frattini) {
                if k.is_subset_of(h) && k.is_subset_of(fh) && !k.is_subset_of(&frat) {
                    outcome = Outcome::Fail(format!(
                        "K = {k:?} ⊆ frattini({h:?}) = {fh:?} but K escapes frattini(G)"
                    ));
                    break 'pair;
                }
            }
        }
        outcome
    });

    // The Frattini subalgebra of a nilpotent ideal lies in the Frattini
    // subalgebra of the whole algebra.
    push("frattini-lemma-nilpotent-ideal", {
        let mut outcome = Outcome::Pass;
        for k in &ideals {
            let pos = subs.iter().position(|s| s == k).expect("ideals are subalgebras");
            if nilpotency_class(&restricted[pos].algebra).is_none() {
                continue;
            }
            let fk = &sub_frattini[pos];
            if !fk.is_subset_of(&frat) {
                outcome = Outcome::Fail(format!(
                    "nilpotent ideal {k:?} has frattini {fk:?} escaping frattini(G)"
                ));
                break;
            }
        }
        outcome
    });

    // An algebra with no subalgebras besides {1} and itself has prime order.
    push(
        "prime-order-without-proper-subalgebras",
        if n > 1 && subs.len() == 2 {
            if is_prime(n) {
                Outcome::Pass
            } else {
                Outcome::Fail(format!("order {n} is composite yet the lattice is trivial"))
            }
        } else {
            Outcome::Vacuous
        },
    );

    Ok(StructureReport {
        checks,
        lower,
        lower_plain,
        upper,
        series_divergence,
        nilpotency_class: class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    fn s3c() -> FiniteMla {
        groups::symmetric(3).with_commutator_star()
    }

    #[test]
    fn closures_on_symmetric_three() {
        let a = s3c();
        // A 3-cycle generates the alternating subalgebra.
        assert_eq!(gen_subalgebra(&a, [3]).members(), vec![0, 3, 4]);
        // The normal closure of a transposition is everything.
        assert_eq!(gen_ideal(&a, [2]).len(), 6);
        assert_eq!(gen_subalgebra(&a, []).members(), vec![0]);
    }

    #[test]
    fn lattice_and_frattini_of_symmetric_three() {
        let a = s3c();
        let subs = all_subalgebras(&a, 24).unwrap();
        // {1}, three transposition pairs, A3, S3.
        assert_eq!(subs.len(), 6);
        let maxes = maximal_subalgebras(&a, 24).unwrap();
        assert_eq!(maxes.len(), 4);
        assert_eq!(frattini(&a, 24).unwrap().members(), vec![0]);
    }

    #[test]
    fn frattini_of_cyclic_twelve_is_six_torsion() {
        let a = groups::cyclic(12).with_trivial_star();
        assert_eq!(frattini(&a, 24).unwrap().members(), vec![0, 6]);
        assert_eq!(
            non_generators_by_definition(&a),
            frattini(&a, 24).unwrap()
        );
    }

    #[test]
    fn bound_is_enforced() {
        let a = groups::cyclic(30).with_trivial_star();
        assert_eq!(
            all_subalgebras(&a, 24),
            Err(BoundExceeded {
                order: 30,
                bound: 24
            })
        );
    }

    #[test]
    fn centers_of_commutator_star_symmetric_three() {
        let c = centers(&s3c());
        assert_eq!(c.group.members(), vec![0]);
        assert_eq!(c.lie.members(), vec![0]);
        assert_eq!(c.multiplicative.members(), vec![0]);
    }

    #[test]
    fn pair_invariants_on_symmetric_three() {
        let a = s3c();
        let a3 = ElemSet::from_members(6, [0, 3, 4]);
        let full = ElemSet::full(6);
        assert_eq!(pair_commutator(&a, &a3).unwrap(), a3);
        assert_eq!(pair_commutator(&a, &full).unwrap(), a3);
        assert_eq!(pair_center(&a, &a3).unwrap().members(), vec![0]);
        let z4 = groups::cyclic(4).with_trivial_star();
        let evens = ElemSet::from_members(4, [0, 2]);
        assert_eq!(pair_center(&z4, &evens).unwrap(), evens);
        assert!(pair_commutator(&z4, &ElemSet::from_members(4, [0, 1]))
            .is_err());
    }

    #[test]
    fn lower_series_of_trivial_star_cyclic_has_class_one() {
        let a = groups::cyclic(4).with_trivial_star();
        let s = lower_central_series(&a);
        assert_eq!(s.terms.len(), 3);
        assert_eq!(s.terms[1].members(), vec![0]);
        assert_eq!(nilpotency_class(&a), Some(1));
        let point = groups::cyclic(1).with_trivial_star();
        assert_eq!(nilpotency_class(&point), Some(0));
    }

    #[test]
    fn lower_series_of_symmetric_three_stalls_at_alternating() {
        let a = s3c();
        let s = lower_central_series(&a);
        let a3 = ElemSet::from_members(6, [0, 3, 4]);
        assert_eq!(s.terms[1], a3);
        assert_eq!(*s.terms.last().unwrap(), a3);
        assert_eq!(nilpotency_class(&a), None);
        // The plain-bracket reading agrees here.
        let plain = lower_central_series_plain(&a);
        assert_eq!(divergence_index(&s, &plain), None);
    }

    #[test]
    fn trivial_star_dihedral_four_is_class_two() {
        let a = groups::dihedral(4).with_trivial_star();
        assert_eq!(nilpotency_class(&a), Some(2));
        let s = lower_central_series(&a);
        assert_eq!(s.terms[1].members(), vec![0, 2]);
    }

    #[test]
    fn upper_series_endpoints() {
        let v4 = Arc::new(groups::klein_four().with_trivial_star());
        let s = upper_central_series(&v4);
        assert_eq!(s.terms[1].len(), 4);
        assert_eq!(s.class_index, Some(1));
        let a = Arc::new(s3c());
        let s = upper_central_series(&a);
        assert_eq!(s.terms.len(), 2);
        assert_eq!(s.class_index, Some(0));
    }

    #[test]
    fn normalizers_in_symmetric_three() {
        let a = s3c();
        let h = ElemSet::from_members(6, [0, 2]);
        assert_eq!(normalizer(&a, &h).unwrap(), h);
        let tower = normalizer_tower(&a, &h).unwrap();
        assert_eq!(tower.class_index, None);
        assert_eq!(*tower.terms.last().unwrap(), h);
        // An ideal normalizes to everything in one step.
        let a3 = ElemSet::from_members(6, [0, 3, 4]);
        let tower = normalizer_tower(&a, &a3).unwrap();
        assert_eq!(tower.class_index, Some(1));
        // Non-subalgebras are rejected.
        assert!(normalizer(&a, &ElemSet::from_members(6, [0, 3])).is_err());
    }

    #[test]
    fn report_on_commutator_star_symmetric_three() {
        let a = Arc::new(s3c());
        let report = structure_report(&a, 24).unwrap();
        assert_eq!(report.nilpotency_class, None);
        assert_eq!(report.series_divergence, None);
        for check in &report.checks {
            match check.name {
                "normalizer-condition"
                | "maximal-subalgebras-are-ideals"
                | "derived-in-frattini"
                | "derived-supplement-forces-whole"
                | "normalizer-tower-reaches"
                | "prime-order-without-proper-subalgebras" => {
                    assert_eq!(check.outcome, Outcome::Vacuous, "{}", check.name)
                }
                _ => assert_eq!(check.outcome, Outcome::Pass, "{}", check.name),
            }
        }
    }

    #[test]
    fn report_on_trivial_star_dihedral_four() {
        let a = Arc::new(groups::dihedral(4).with_trivial_star());
        let report = structure_report(&a, 24).unwrap();
        assert_eq!(report.nilpotency_class, Some(2));
        for check in &report.checks {
            let expect = if check.name == "prime-order-without-proper-subalgebras" {
                Outcome::Vacuous
            } else {
                Outcome::Pass
            };
            assert_eq!(check.outcome, expect, "{}", check.name);
        }
    }

    #[test]
    fn report_flags_prime_lattices() {
        let a = Arc::new(groups::cyclic(5).with_trivial_star());
        let report = structure_report(&a, 24).unwrap();
        let prime = report
            .checks
            .iter()
            .find(|c| c.name == "prime-order-without-proper-subalgebras")
            .unwrap();
        assert_eq!(prime.outcome, Outcome::Pass);
    }
}
