//! Exhaustive generation of star structures on a given group, completion of
//! partially specified star tables, isomorphism search, and catalog
//! construction.
//!
//! The enumerator fixes a generating sequence of the group and branches only
//! on the star values of generator pairs; identities (2) and (3) determine
//! every other entry from those seeds, so each branch yields exactly one
//! candidate table. Candidates are then re-verified against all five
//! identities (the remaining ones — notably (4) and (5) — act as filters,
//! aborting at the first violation), which makes the output complete and
//! duplicate-free by construction.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{ElemSet, FiniteMla, GroupViolation, MlaHom};
use crate::groups;
use crate::structure::{
    self, BoundExceeded, Centers, StructureReport, DEFAULT_LATTICE_BOUND,
};

/// Default cap on the group order accepted by [`enumerate_stars`] and
/// [`build_catalog`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error(transparent)]
    Bound(#[from] BoundExceeded),
    #[error("the given table is not a group: {0}")]
    Group(#[from] GroupViolation),
    #[error(transparent)]
    Constraint(#[from] ConstraintError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("conflicting constraints: {i}⋆{j} pinned to both {k1} and {k2}")]
    Conflicting {
        i: usize,
        j: usize,
        k1: usize,
        k2: usize,
    },
    #[error("constraint ({i}, {j}, {k}) is out of range for order {order}")]
    OutOfRange {
        i: usize,
        j: usize,
        k: usize,
        order: usize,
    },
}

/// A partial specification of a star table: a list of pinned entries
/// `i ⋆ j = k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarConstraint {
    pairs: Vec<(usize, usize, usize)>,
}

impl StarConstraint {
    /// Rejects two pins of the same cell to different values. Range checks
    /// happen against a concrete group in [`complete_partial_star`].
    pub fn new(pairs: Vec<(usize, usize, usize)>) -> Result<Self, ConstraintError> {
        for (a, &(i, j, k)) in pairs.iter().enumerate() {
            for &(i2, j2, k2) in &pairs[a + 1..] {
                if (i, j) == (i2, j2) && k != k2 {
                    return Err(ConstraintError::Conflicting { i, j, k1: k, k2 });
                }
            }
        }
        Ok(StarConstraint { pairs })
    }

    pub fn single(i: usize, j: usize, k: usize) -> Self {
        StarConstraint {
            pairs: vec![(i, j, k)],
        }
    }

    pub fn pairs(&self) -> &[(usize, usize, usize)] {
        &self.pairs
    }
}

/// A greedily chosen generating sequence together with a breadth-first
/// decomposition: every non-identity element `x` gets a parent `(s, x2)`
/// with `x = s·x2`, `s` a generator, and `x2` discovered earlier.
pub(crate) struct GenDecomposition {
    pub gens: Vec<usize>,
    pub order: Vec<usize>,
    pub parent: Vec<(usize, usize)>,
}

pub(crate) fn decompose(g: &FiniteMla) -> GenDecomposition {
    let n = g.order();
    let mut gens = Vec::new();
    let mut closure = structure::gen_subgroup(g, []);
    while closure.len() < n {
        let s = (0..n)
            .find(|&x| !closure.contains(x))
            .expect("closure is proper");
        gens.push(s);
        closure = structure::gen_subgroup(g, gens.iter().copied());
    }
    let mut order = vec![0usize];
    let mut parent = vec![(0usize, 0usize); n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let x2 = order[head];
        head += 1;
        for &s in &gens {
            let x = g.mul(s, x2);
            if !seen[x] {
                seen[x] = true;
                parent[x] = (s, x2);
                order.push(x);
            }
        }
    }
    debug_assert_eq!(order.len(), n);
    GenDecomposition {
        gens,
        order,
        parent,
    }
}

/// Expands generator-pair seed values into a full candidate star table via
/// identities (2) and (3). `seed[i][j]` is the value for the i-th and j-th
/// generators (row-major m×m over generator positions).
fn derive_table(g: &FiniteMla, dec: &GenDecomposition, seed: &[usize]) -> Vec<usize> {
    let n = g.order();
    let m = dec.gens.len();
    let mut gen_pos = vec![usize::MAX; n];
    for (i, &s) in dec.gens.iter().enumerate() {
        gen_pos[s] = i;
    }
    // Generator rows by second-argument recursion:
    // s ⋆ (t·x2) = (s⋆t) · ᵗ(s⋆x2).
    let mut gen_rows = vec![vec![0usize; n]; m];
    for (i, row) in gen_rows.iter_mut().enumerate() {
        for &x in &dec.order[1..] {
            let (t, x2) = dec.parent[x];
            let seed_val = seed[i * m + gen_pos[t]];
            row[x] = g.mul(seed_val, g.conj(t, row[x2]));
        }
    }
    // All rows by first-argument recursion: (s·x2) ⋆ h = ˢ(x2⋆h) · (s⋆h).
    let mut table = vec![0usize; n * n];
    for &x in &dec.order[1..] {
        let (s, x2) = dec.parent[x];
        let srow = &gen_rows[gen_pos[s]];
        for h in 0..n {
            table[x * n + h] = g.mul(g.conj(s, table[x2 * n + h]), srow[h]);
        }
    }
    table
}

/// Every star table on `group` satisfying all five identities, sorted
/// lexicographically by table. The star of `group` itself is ignored; only
/// its group table and names carry over.
pub fn enumerate_stars(group: &FiniteMla, bound: usize) -> Result<Vec<FiniteMla>, EnumerationError> {
    let n = group.order();
    if n > bound {
        return Err(BoundExceeded { order: n, bound }.into());
    }
    group.verify_group()?;
    let dec = decompose(group);
    let m = dec.gens.len();
    let npairs = m * m.saturating_sub(1) / 2;
    let pair_slots: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();

    let mut results = Vec::new();
    let mut choice = vec![0usize; npairs];
    loop {
        let mut seed = vec![0usize; m * m];
        for (slot, &(i, j)) in pair_slots.iter().enumerate() {
            seed[i * m + j] = choice[slot];
            seed[j * m + i] = group.inv(choice[slot]);
        }
        let table = derive_table(group, &dec, &seed);
        if let Ok(candidate) = group.with_star(table) {
            if candidate.verify_star_axioms().is_ok() {
                results.push(candidate);
            }
        }
        // Advance the odometer over seed assignments.
        let mut slot = npairs;
        loop {
            if slot == 0 {
                break;
            }
            slot -= 1;
            choice[slot] += 1;
            if choice[slot] < n {
                break;
            }
            choice[slot] = 0;
        }
        if choice.iter().all(|&c| c == 0) {
            break;
        }
    }
    results.sort_by(|a, b| a.star_table().cmp(b.star_table()));
    Ok(results)
}

/// The result of completing a partial star table: every matching algebra,
/// plus a human-readable note (match counts, or why nothing matched).
#[derive(Debug, Clone)]
pub struct Completions {
    pub algebras: Vec<FiniteMla>,
    pub note: String,
}

/// The subset of [`enumerate_stars`] output consistent with the pinned
/// entries. Contradictory constraints give an empty result whose note says
/// which pin failed; they are not an error.
pub fn complete_partial_star(
    group: &FiniteMla,
    c: &StarConstraint,
    bound: usize,
) -> Result<Completions, EnumerationError> {
    let n = group.order();
    for &(i, j, k) in c.pairs() {
        if i >= n || j >= n || k >= n {
            return Err(ConstraintError::OutOfRange { i, j, k, order: n }.into());
        }
    }
    let all = enumerate_stars(group, bound)?;
    let total = all.len();
    let algebras: Vec<FiniteMla> = all
        .into_iter()
        .filter(|alg| c.pairs().iter().all(|&(i, j, k)| alg.star(i, j) == k))
        .collect();
    let note = if algebras.is_empty() {
        let reason = c
            .pairs()
            .iter()
            .find_map(|&(i, j, k)| {
                if i == j && k != 0 {
                    Some(format!(
                        "pin {}⋆{} = {} contradicts g⋆g = 1",
                        group.name(i),
                        group.name(j),
                        group.name(k)
                    ))
                } else if (i == 0 || j == 0) && k != 0 {
                    Some(format!(
                        "pin {}⋆{} = {} contradicts 1⋆g = g⋆1 = 1",
                        group.name(i),
                        group.name(j),
                        group.name(k)
                    ))
                } else {
                    None
                }
            })
            .unwrap_or_else(|| "no valid star table matches the pinned entries".to_string());
        format!("0 of {total} valid star tables match: {reason}")
    } else {
        format!("{} of {} valid star tables match", algebras.len(), total)
    };
    Ok(Completions { algebras, note })
}

/// All bijections `a → b` preserving the requested tables, as raw index
/// maps, in a deterministic order (depth-first over ascending generator
/// images).
fn search_maps(a: &FiniteMla, b: &FiniteMla, preserve_star: bool, limit: usize) -> Vec<Vec<usize>> {
    let n = a.order();
    let mut found = Vec::new();
    if b.order() != n || limit == 0 {
        return found;
    }
    let dec = decompose(a);
    let m = dec.gens.len();
    let mut images = vec![0usize; m];
    search_rec(
        a,
        b,
        &dec,
        preserve_star,
        limit,
        0,
        &mut images,
        &mut found,
    );
    found
}

#[allow(clippy::too_many_arguments)]
fn search_rec(
    a: &FiniteMla,
    b: &FiniteMla,
    dec: &GenDecomposition,
    preserve_star: bool,
    limit: usize,
    depth: usize,
    images: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    if found.len() >= limit {
        return;
    }
    let n = a.order();
    if depth == dec.gens.len() {
        // Derive the full map from generator images and check it is an
        // isomorphism of the requested structure.
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut gen_image = vec![usize::MAX; n];
        for (i, &s) in dec.gens.iter().enumerate() {
            gen_image[s] = images[i];
        }
        for &x in &dec.order[1..] {
            let (s, x2) = dec.parent[x];
            map[x] = b.mul(gen_image[s], map[x2]);
        }
        let mut seen = vec![false; n];
        for &v in &map {
            if seen[v] {
                return;
            }
            seen[v] = true;
        }
        for x in 0..n {
            for y in 0..n {
                if map[a.mul(x, y)] != b.mul(map[x], map[y]) {
                    return;
                }
                if preserve_star && map[a.star(x, y)] != b.star(map[x], map[y]) {
                    return;
                }
            }
        }
        found.push(map);
        return;
    }
    let s = dec.gens[depth];
    let target_order = a.elem_order(s);
    for img in 0..n {
        if b.elem_order(img) != target_order {
            continue;
        }
        if images[..depth].contains(&img) {
            continue;
        }
        images[depth] = img;
        search_rec(a, b, dec, preserve_star, limit, depth + 1, images, found);
        if found.len() >= limit {
            return;
        }
    }
}

/// All isomorphisms preserving both the group and star tables, empty iff
/// the algebras are not isomorphic.
pub fn find_isomorphisms(a: &Arc<FiniteMla>, b: &Arc<FiniteMla>) -> Vec<MlaHom> {
    search_maps(a, b, true, usize::MAX)
        .into_iter()
        .map(|map| {
            let hom = MlaHom::new(a.clone(), b.clone(), map).expect("map is well-shaped");
            debug_assert!(hom.verify().is_ok());
            hom
        })
        .collect()
}

pub fn is_isomorphic(a: &FiniteMla, b: &FiniteMla) -> bool {
    !search_maps(a, b, true, 1).is_empty()
}

/// Automorphisms of the group table alone (star-blind), as permutations.
pub fn group_automorphism_perms(g: &FiniteMla) -> Vec<Vec<usize>> {
    search_maps(g, g, false, usize::MAX)
}

/// One star structure per isomorphism class on a fixed group table, chosen
/// as the lexicographically least table in its orbit under the group's
/// automorphisms.
fn is_canonical(alg: &FiniteMla, auts: &[Vec<usize>]) -> bool {
    let n = alg.order();
    let own = alg.star_table();
    let mut permuted = vec![0usize; n * n];
    for perm in auts {
        for x in 0..n {
            for y in 0..n {
                permuted[perm[x] * n + perm[y]] = perm[alg.star(x, y)];
            }
        }
        if permuted.as_slice() < own {
            return false;
        }
    }
    true
}

/// A star structure on a stock group, annotated with the invariants the
/// property suites quantify over.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// `"<group>#<i>"`, numbering the structures on one group from 1.
    pub name: String,
    pub group_name: String,
    pub algebra: Arc<FiniteMla>,
    pub nilpotency_class: Option<usize>,
    pub perfect: bool,
    pub frattini: ElemSet,
    pub centers: Centers,
    pub report: StructureReport,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub max_order: usize,
    pub entries: Vec<CatalogEntry>,
}

/// All star structures up to isomorphism on the stock groups of order at
/// most `max_order`, annotated. `max_order` is capped by
/// [`DEFAULT_ENUMERATION_BOUND`].
pub fn build_catalog(max_order: usize) -> Result<Catalog, EnumerationError> {
    if max_order > DEFAULT_ENUMERATION_BOUND {
        return Err(BoundExceeded {
            order: max_order,
            bound: DEFAULT_ENUMERATION_BOUND,
        }
        .into());
    }
    let mut entries = Vec::new();
    for (group_name, group) in groups::builtin_groups(max_order) {
        let auts = group_automorphism_perms(&group);
        let mut index = 0usize;
        for alg in enumerate_stars(&group, max_order)? {
            if !is_canonical(&alg, &auts) {
                continue;
            }
            index += 1;
            let algebra = Arc::new(alg);
            debug_assert!(algebra.verify().is_ok());
            let full = ElemSet::full(algebra.order());
            let derived = structure::pair_commutator(&algebra, &full)
                .expect("the whole carrier is an ideal");
            entries.push(CatalogEntry {
                name: format!("{group_name}#{index}"),
                group_name: group_name.clone(),
                nilpotency_class: structure::nilpotency_class(&algebra),
                perfect: derived == full,
                frattini: structure::frattini(&algebra, DEFAULT_LATTICE_BOUND)
                    .expect("catalog orders stay within the lattice bound"),
                centers: structure::centers(&algebra),
                report: structure_report_for(&algebra),
                algebra,
            });
        }
    }
    Ok(Catalog { max_order, entries })
}

fn structure_report_for(a: &Arc<FiniteMla>) -> StructureReport {
    structure::structure_report(a, DEFAULT_LATTICE_BOUND)
        .expect("catalog orders stay within the lattice bound")
}
