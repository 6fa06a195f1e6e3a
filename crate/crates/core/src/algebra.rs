//! Carrier type and first-order checks: finite multiplicative Lie algebras
//! as dense operation tables, subsets as bit sets, homomorphisms, quotients,
//! restrictions, and direct products.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Shape problems detected while building a table-backed object.
///
/// These are raised by constructors only. Violations of the algebraic laws
/// themselves are reported by [`FiniteMla::verify_group`],
/// [`FiniteMla::verify_star_axioms`], and [`MlaHom::verify`], so that broken
/// tables can still be represented and diagnosed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("order must be at least 1")]
    EmptyCarrier,
    #[error("{table} table has {got} entries, expected {expected}")]
    BadTableSize {
        table: &'static str,
        got: usize,
        expected: usize,
    },
    #[error("{table} entry at row {row}, column {col} is {value}, outside 0..{order}")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("expected {expected} names, got {got}")]
    BadNameCount { expected: usize, got: usize },
    #[error("name {index} ({name:?}) must be nonempty with no whitespace or '#'")]
    BadName { index: usize, name: String },
    #[error("elements {first} and {second} share the name {name:?}")]
    DuplicateName {
        first: usize,
        second: usize,
        name: String,
    },
    #[error("homomorphism map has {got} entries, expected {expected}")]
    BadMapSize { got: usize, expected: usize },
    #[error("homomorphism image {value} at index {index} is outside target order {order}")]
    MapOutOfRange {
        index: usize,
        value: usize,
        order: usize,
    },
}

fn check_table(table: &'static str, order: usize, data: &[usize]) -> Result<(), StructuralError> {
    if data.len() != order * order {
        return Err(StructuralError::BadTableSize {
            table,
            got: data.len(),
            expected: order * order,
        });
    }
    for (idx, &value) in data.iter().enumerate() {
        if value >= order {
            return Err(StructuralError::EntryOutOfRange {
                table,
                row: idx / order,
                col: idx % order,
                value,
                order,
            });
        }
    }
    Ok(())
}

/// A finite multiplicative Lie algebra on the carrier `0..order`.
///
/// Index `0` is reserved for the group identity. `group` and `star` are
/// row-major `order × order` tables: entry `a * order + b` holds `a · b`
/// respectively `a ⋆ b`. Optional names are display-only and never affect
/// any computation.
#[derive(Clone)]
pub struct FiniteMla {
    order: usize,
    group: Vec<usize>,
    star: Vec<usize>,
    names: Option<Vec<String>>,
    /// `inv[g]` is the two-sided inverse of `g` when one exists, else `0`.
    /// Filled eagerly so that inner loops avoid a search; only meaningful
    /// once `verify_group` has passed.
    inv: Vec<usize>,
}

impl fmt::Debug for FiniteMla {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteMla(order = {})", self.order)
    }
}

impl FiniteMla {
    /// Builds an algebra from raw tables, checking shape only: table sizes,
    /// entry ranges, and that names (when given) are distinct printable
    /// tokens. Run [`Self::verify_group`] and [`Self::verify_star_axioms`]
    /// to check the laws.
    pub fn new(
        order: usize,
        group: Vec<usize>,
        star: Vec<usize>,
        names: Option<Vec<String>>,
    ) -> Result<Self, StructuralError> {
        if order == 0 {
            return Err(StructuralError::EmptyCarrier);
        }
        check_table("group", order, &group)?;
        check_table("star", order, &star)?;
        if let Some(ns) = &names {
            if ns.len() != order {
                return Err(StructuralError::BadNameCount {
                    expected: order,
                    got: ns.len(),
                });
            }
            for (index, name) in ns.iter().enumerate() {
                if name.is_empty() || name.contains(char::is_whitespace) || name.contains('#') {
                    return Err(StructuralError::BadName {
                        index,
                        name: name.clone(),
                    });
                }
            }
            for i in 0..ns.len() {
                for j in (i + 1)..ns.len() {
                    if ns[i] == ns[j] {
                        return Err(StructuralError::DuplicateName {
                            first: i,
                            second: j,
                            name: ns[i].clone(),
                        });
                    }
                }
            }
        }
        let mut inv = vec![0usize; order];
        for g in 0..order {
            for h in 0..order {
                if group[g * order + h] == 0 && group[h * order + g] == 0 {
                    inv[g] = h;
                    break;
                }
            }
        }
        Ok(FiniteMla {
            order,
            group,
            star,
            names,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn group_table(&self) -> &[usize] {
        &self.group
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.group[a * self.order + b]
    }

    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.star[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Conjugation `a · b · a⁻¹`.
    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    /// Group commutator `[a, b] = a · b · a⁻¹ · b⁻¹`.
    #[inline]
    pub fn comm(&self, a: usize, b: usize) -> usize {
        self.mul(self.conj(a, b), self.inv(b))
    }

    /// Multiplicative order of `g`. Meaningful once the group laws hold.
    pub fn elem_order(&self, g: usize) -> usize {
        let mut acc = g;
        for k in 1..=self.order {
            if acc == 0 {
                return k;
            }
            acc = self.mul(acc, g);
        }
        // Unreachable for a verified group; keep a deterministic fallback.
        0
    }

    /// Display name of element `i`: the assigned name if any, else the index.
    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(ns) => ns[i].clone(),
            None => i.to_string(),
        }
    }

    /// Renders a subset as `{name, name, ...}` with members ascending.
    pub fn display_set(&self, set: &ElemSet) -> String {
        let mut out = String::from("{");
        for (i, m) in set.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            out.push_str(&self.name(m));
        }
        out.push('}');
        out
    }

    /// Same carrier and group table, new star table.
    pub fn with_star(&self, star: Vec<usize>) -> Result<FiniteMla, StructuralError> {
        check_table("star", self.order, &star)?;
        Ok(FiniteMla {
            star,
            ..self.clone()
        })
    }

    /// Same group, star constantly the identity.
    pub fn with_trivial_star(&self) -> FiniteMla {
        FiniteMla {
            star: vec![0; self.order * self.order],
            ..self.clone()
        }
    }

    /// Same group, star given by the group commutator `[a, b]`.
    pub fn with_commutator_star(&self) -> FiniteMla {
        let n = self.order;
        let mut star = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                star[a * n + b] = self.comm(a, b);
            }
        }
        FiniteMla {
            star,
            ..self.clone()
        }
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn star_is_trivial(&self) -> bool {
        self.star.iter().all(|&v| v == 0)
    }

    /// Checks the group laws in a fixed order, returning the first failure:
    /// Latin square (row-major cell scan, so the reported cell is the first
    /// place a repeated value appears), two-sided identity at index 0,
    /// associativity, two-sided inverses.
    pub fn verify_group(&self) -> Result<(), GroupViolation> {
        let n = self.order;
        let mut col_seen = vec![false; n * n];
        for row in 0..n {
            let mut row_seen = vec![false; n];
            for col in 0..n {
                let value = self.mul(row, col);
                if row_seen[value] {
                    return Err(GroupViolation::LatinSquareRow { row, col, value });
                }
                row_seen[value] = true;
                if col_seen[col * n + value] {
                    return Err(GroupViolation::LatinSquareCol { row, col, value });
                }
                col_seen[col * n + value] = true;
            }
        }
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(GroupViolation::Identity { element: g });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupViolation::Associativity { a, b, c });
                    }
                }
            }
        }
        for g in 0..n {
            let h = self.inv[g];
            if self.mul(g, h) != 0 || self.mul(h, g) != 0 {
                return Err(GroupViolation::Inverse { element: g });
            }
        }
        Ok(())
    }

    /// Checks the five star identities in order, assuming the group laws
    /// already hold. Witnesses are the lexicographically least tuples in the
    /// scan order `(g, h, k)`:
    ///
    /// 1. `g ⋆ g = 1`
    /// 2. `g ⋆ (h·k) = (g ⋆ h) · ʰ(g ⋆ k)`
    /// 3. `(g·h) ⋆ k = ᵍ(h ⋆ k) · (g ⋆ k)`
    /// 4. `((g⋆h) ⋆ ʰk) · ((h⋆k) ⋆ ᵏg) · ((k⋆g) ⋆ ᵍh) = 1`
    /// 5. `ᵏ(g ⋆ h) = ᵏg ⋆ ᵏh`
    pub fn verify_star_axioms(&self) -> Result<(), StarViolation> {
        let n = self.order;
        for g in 0..n {
            if self.star(g, g) != 0 {
                return Err(StarViolation {
                    identity: 1,
                    witness: vec![g],
                });
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    let lhs = self.star(g, self.mul(h, k));
                    let rhs = self.mul(self.star(g, h), self.conj(h, self.star(g, k)));
                    if lhs != rhs {
                        return Err(StarViolation {
                            identity: 2,
                            witness: vec![g, h, k],
                        });
                    }
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    let lhs = self.star(self.mul(g, h), k);
                    let rhs = self.mul(self.conj(g, self.star(h, k)), self.star(g, k));
                    if lhs != rhs {
                        return Err(StarViolation {
                            identity: 3,
                            witness: vec![g, h, k],
                        });
                    }
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    let t1 = self.star(self.star(g, h), self.conj(h, k));
                    let t2 = self.star(self.star(h, k), self.conj(k, g));
                    let t3 = self.star(self.star(k, g), self.conj(g, h));
                    if self.mul(self.mul(t1, t2), t3) != 0 {
                        return Err(StarViolation {
                            identity: 4,
                            witness: vec![g, h, k],
                        });
                    }
                }
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    let lhs = self.conj(k, self.star(g, h));
                    let rhs = self.star(self.conj(k, g), self.conj(k, h));
                    if lhs != rhs {
                        return Err(StarViolation {
                            identity: 5,
                            witness: vec![g, h, k],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Group laws followed by star identities.
    pub fn verify(&self) -> Result<(), MlaViolation> {
        self.verify_group()?;
        self.verify_star_axioms()?;
        Ok(())
    }

    /// First reason `set` fails to be a subalgebra, or `None` if it is one:
    /// it must contain the identity and be closed under product and star.
    /// Scan order: members ascending, products before stars.
    pub fn subalgebra_failure(&self, set: &ElemSet) -> Option<SubalgebraFailure> {
        debug_assert_eq!(set.universe(), self.order);
        if !set.contains(0) {
            return Some(SubalgebraFailure::MissingIdentity);
        }
        for a in set.iter() {
            for b in set.iter() {
                let product = self.mul(a, b);
                if !set.contains(product) {
                    return Some(SubalgebraFailure::ProductEscapes { a, b, product });
                }
            }
        }
        for a in set.iter() {
            for b in set.iter() {
                let value = self.star(a, b);
                if !set.contains(value) {
                    return Some(SubalgebraFailure::StarEscapes { a, b, value });
                }
            }
        }
        None
    }

    pub fn is_subalgebra(&self, set: &ElemSet) -> bool {
        self.subalgebra_failure(set).is_none()
    }

    /// First reason `set` fails to be an ideal, or `None` if it is one: a
    /// subalgebra that is conjugation-stable and absorbs `g ⋆ m` for every
    /// `g` in the whole algebra. Closure of `m ⋆ g` follows for verified
    /// algebras since `m ⋆ g = (g ⋆ m)⁻¹`.
    pub fn ideal_failure(&self, set: &ElemSet) -> Option<IdealFailure> {
        if let Some(f) = self.subalgebra_failure(set) {
            return Some(IdealFailure::NotSubalgebra(f));
        }
        for g in 0..self.order {
            for member in set.iter() {
                let conjugate = self.conj(g, member);
                if !set.contains(conjugate) {
                    return Some(IdealFailure::ConjugateEscapes {
                        g,
                        member,
                        conjugate,
                    });
                }
            }
        }
        for g in 0..self.order {
            for member in set.iter() {
                let value = self.star(g, member);
                if !set.contains(value) {
                    return Some(IdealFailure::BracketEscapes { g, member, value });
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, set: &ElemSet) -> bool {
        self.ideal_failure(set).is_none()
    }
}

/// A group-law failure, with the lexicographically least witness in the
/// documented scan order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GroupViolation {
    #[error("not a Latin square: row {row} repeats value {value} at column {col}")]
    LatinSquareRow { row: usize, col: usize, value: usize },
    #[error("not a Latin square: column {col} repeats value {value} at row {row}")]
    LatinSquareCol { row: usize, col: usize, value: usize },
    #[error("element 0 is not a two-sided identity against element {element}")]
    Identity { element: usize },
    #[error("associativity fails at ({a}, {b}, {c})")]
    Associativity { a: usize, b: usize, c: usize },
    #[error("element {element} has no two-sided inverse")]
    Inverse { element: usize },
}

/// A star-identity failure: which of the five identities broke, and the
/// least witness tuple.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("star identity {identity} fails at witness {witness:?}")]
pub struct StarViolation {
    pub identity: u8,
    pub witness: Vec<usize>,
}

/// Either kind of law failure, in the order they are checked.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MlaViolation {
    #[error(transparent)]
    Group(#[from] GroupViolation),
    #[error(transparent)]
    Star(#[from] StarViolation),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SubalgebraFailure {
    #[error("subset does not contain the identity")]
    MissingIdentity,
    #[error("not closed under product: mul({a}, {b}) = {product} is outside the subset")]
    ProductEscapes { a: usize, b: usize, product: usize },
    #[error("not closed under star: star({a}, {b}) = {value} is outside the subset")]
    StarEscapes { a: usize, b: usize, value: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IdealFailure {
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(SubalgebraFailure),
    #[error("not normal: conj({g}, {member}) = {conjugate} is outside the subset")]
    ConjugateEscapes {
        g: usize,
        member: usize,
        conjugate: usize,
    },
    #[error("does not absorb star: star({g}, {member}) = {value} is outside the subset")]
    BracketEscapes {
        g: usize,
        member: usize,
        value: usize,
    },
}

/// A subset of `0..n`, stored as a bit set over `u64` words.
///
/// Ordering is by size first, then by the member sequence lexicographically,
/// so `{0, 3} < {1, 2}` and any listing sorted with this order puts smaller
/// subsets first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    n: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(n: usize) -> Self {
        ElemSet {
            n,
            words: vec![0; (n + 63) / 64],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        for i in 0..n {
            set.insert(i);
        }
        set
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        let mut set = Self::empty(n);
        set.insert(i);
        set
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Self {
        let mut set = Self::empty(n);
        for m in members {
            set.insert(m);
        }
        set
    }

    /// Size of the ambient carrier, not of the subset.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.n);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Inserts `i`; returns whether it was newly added.
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.n);
        let word = &mut self.words[i / 64];
        let mask = 1u64 << (i % 64);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    /// Removes `i`; returns whether it was present.
    pub fn remove(&mut self, i: usize) -> bool {
        debug_assert!(i < self.n);
        let word = &mut self.words[i / 64];
        let mask = 1u64 << (i % 64);
        let present = *word & mask != 0;
        *word &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn least(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.n, other.n);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.n, other.n);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub fn is_subset_of(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(w, o)| w & !o == 0)
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// A carrier map `source → target`, stored as the image of every element.
#[derive(Clone)]
pub struct MlaHom {
    pub source: Arc<FiniteMla>,
    pub target: Arc<FiniteMla>,
    pub map: Vec<usize>,
}

impl fmt::Debug for MlaHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MlaHom({} -> {}, map = {:?})",
            self.source.order(),
            self.target.order(),
            self.map
        )
    }
}

/// A homomorphism-law failure with its least witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum HomViolation {
    #[error("identity maps to {image}, not to the identity")]
    IdentityMoved { image: usize },
    #[error("products are not preserved at ({a}, {b})")]
    Product { a: usize, b: usize },
    #[error("star is not preserved at ({a}, {b})")]
    Star { a: usize, b: usize },
}

impl MlaHom {
    pub fn new(
        source: Arc<FiniteMla>,
        target: Arc<FiniteMla>,
        map: Vec<usize>,
    ) -> Result<Self, StructuralError> {
        if map.len() != source.order() {
            return Err(StructuralError::BadMapSize {
                got: map.len(),
                expected: source.order(),
            });
        }
        for (index, &value) in map.iter().enumerate() {
            if value >= target.order() {
                return Err(StructuralError::MapOutOfRange {
                    index,
                    value,
                    order: target.order(),
                });
            }
        }
        Ok(MlaHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(a: &Arc<FiniteMla>) -> Self {
        MlaHom {
            source: a.clone(),
            target: a.clone(),
            map: (0..a.order()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// Checks that the map preserves identity, products, and star, in that
    /// order, with the least failing pair as witness.
    pub fn verify(&self) -> Result<(), HomViolation> {
        if self.map[0] != 0 {
            return Err(HomViolation::IdentityMoved { image: self.map[0] });
        }
        let n = self.source.order();
        for a in 0..n {
            for b in 0..n {
                if self.map[self.source.mul(a, b)] != self.target.mul(self.map[a], self.map[b]) {
                    return Err(HomViolation::Product { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.map[self.source.star(a, b)] != self.target.star(self.map[a], self.map[b]) {
                    return Err(HomViolation::Star { a, b });
                }
            }
        }
        Ok(())
    }

    /// `next ∘ self`: apply `self`, then `next`.
    pub fn compose(&self, next: &MlaHom) -> MlaHom {
        debug_assert_eq!(self.target.order(), next.source.order());
        MlaHom {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&i| next.map[i]).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut seen = vec![false; self.target.order()];
        for &v in &self.map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn inverse(&self) -> Option<MlaHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut map = vec![0usize; self.target.order()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        Some(MlaHom {
            source: self.target.clone(),
            target: self.source.clone(),
            map,
        })
    }

    pub fn image_of(&self, set: &ElemSet) -> ElemSet {
        debug_assert_eq!(set.universe(), self.source.order());
        let mut out = ElemSet::empty(self.target.order());
        for m in set.iter() {
            out.insert(self.map[m]);
        }
        out
    }

    pub fn image(&self) -> ElemSet {
        self.image_of(&ElemSet::full(self.source.order()))
    }

    pub fn preimage_of(&self, set: &ElemSet) -> ElemSet {
        debug_assert_eq!(set.universe(), self.target.order());
        let mut out = ElemSet::empty(self.source.order());
        for (i, &v) in self.map.iter().enumerate() {
            if set.contains(v) {
                out.insert(i);
            }
        }
        out
    }

    pub fn kernel(&self) -> ElemSet {
        self.preimage_of(&ElemSet::singleton(self.target.order(), 0))
    }
}

/// A quotient algebra together with its canonical projection.
///
/// Cosets are indexed in order of their least member, so the identity coset
/// is index 0 and coset names (when the parent is named) read `[rep]`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: Arc<FiniteMla>,
    pub projection: MlaHom,
}

/// Quotients `a` by an ideal. Fails with the first ideal violation found.
pub fn quotient(a: &Arc<FiniteMla>, ideal: &ElemSet) -> Result<Quotient, IdealFailure> {
    if let Some(f) = a.ideal_failure(ideal) {
        return Err(f);
    }
    let n = a.order();
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for g in 0..n {
        if class[g] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(g);
        for m in ideal.iter() {
            class[a.mul(g, m)] = c;
        }
        debug_assert_eq!(class[g], c);
    }
    let q = reps.len();
    let mut qmul = vec![0usize; q * q];
    let mut qstar = vec![0usize; q * q];
    for i in 0..q {
        for j in 0..q {
            qmul[i * q + j] = class[a.mul(reps[i], reps[j])];
            qstar[i * q + j] = class[a.star(reps[i], reps[j])];
        }
    }
    // Both operations descend to cosets of an ideal; double-check
    // representative independence in debug builds.
    #[cfg(debug_assertions)]
    for g in 0..n {
        for h in 0..n {
            debug_assert_eq!(class[a.mul(g, h)], qmul[class[g] * q + class[h]]);
            debug_assert_eq!(class[a.star(g, h)], qstar[class[g] * q + class[h]]);
        }
    }
    let names = a
        .names()
        .map(|ns| reps.iter().map(|&r| format!("[{}]", ns[r])).collect());
    let algebra = Arc::new(
        FiniteMla::new(q, qmul, qstar, names).expect("quotient tables are well-shaped"),
    );
    let projection = MlaHom {
        source: a.clone(),
        target: algebra.clone(),
        map: class,
    };
    Ok(Quotient { algebra, projection })
}

/// A subalgebra re-indexed onto its own carrier `0..members.len()`.
#[derive(Debug, Clone)]
pub struct Subalgebra {
    pub algebra: Arc<FiniteMla>,
    pub members: ElemSet,
    /// Embedding of the subalgebra back into the parent.
    pub inclusion: MlaHom,
    /// Parent index to subalgebra index; `usize::MAX` outside the subset.
    pub index_of: Vec<usize>,
}

/// Restricts `a` to a subset, which must be a subalgebra. Members keep
/// their relative order, so the parent identity becomes index 0.
pub fn restrict(a: &Arc<FiniteMla>, set: &ElemSet) -> Result<Subalgebra, SubalgebraFailure> {
    if let Some(f) = a.subalgebra_failure(set) {
        return Err(f);
    }
    let members_vec = set.members();
    let m = members_vec.len();
    let mut index_of = vec![usize::MAX; a.order()];
    for (i, &g) in members_vec.iter().enumerate() {
        index_of[g] = i;
    }
    let mut smul = vec![0usize; m * m];
    let mut sstar = vec![0usize; m * m];
    for i in 0..m {
        for j in 0..m {
            smul[i * m + j] = index_of[a.mul(members_vec[i], members_vec[j])];
            sstar[i * m + j] = index_of[a.star(members_vec[i], members_vec[j])];
        }
    }
    let names = a
        .names()
        .map(|ns| members_vec.iter().map(|&g| ns[g].clone()).collect());
    let algebra = Arc::new(
        FiniteMla::new(m, smul, sstar, names).expect("restricted tables are well-shaped"),
    );
    let inclusion = MlaHom {
        source: algebra.clone(),
        target: a.clone(),
        map: members_vec,
    };
    Ok(Subalgebra {
        algebra,
        members: set.clone(),
        inclusion,
        index_of,
    })
}

/// Componentwise product on pairs, indexed as `x * b.order() + y`. Names
/// become `(x,y)` when both factors are named.
pub fn direct_product(a: &Arc<FiniteMla>, b: &Arc<FiniteMla>) -> Arc<FiniteMla> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut gmul = vec![0usize; n * n];
    let mut gstar = vec![0usize; n * n];
    for ax in 0..na {
        for ay in 0..nb {
            let i = ax * nb + ay;
            for bx in 0..na {
                for by in 0..nb {
                    let j = bx * nb + by;
                    gmul[i * n + j] = a.mul(ax, bx) * nb + b.mul(ay, by);
                    gstar[i * n + j] = a.star(ax, bx) * nb + b.star(ay, by);
                }
            }
        }
    }
    let names = match (a.names(), b.names()) {
        (Some(an), Some(bn)) => {
            let mut ns = Vec::with_capacity(n);
            for x in an {
                for y in bn {
                    ns.push(format!("({x},{y})"));
                }
            }
            Some(ns)
        }
        _ => None,
    };
    Arc::new(FiniteMla::new(n, gmul, gstar, names).expect("product tables are well-shaped"))
}
