//! Relative central extensions of a pair: a surjection `tau: L → G` onto an
//! ideal `H` of `G`, with `G` and `L` acting compatibly on each other. This
//! module verifies the four defining conditions, computes the extension
//! commutator `^M{G,L}` and extension center `Z̄(G,L)`, builds the stock
//! constructions (identity, inclusion, product, restriction, quotient,
//! pullback), verifies morphisms between extensions, and checks the
//! finitely-testable covering-pair conditions.

use std::sync::Arc;

use thiserror::Error;

use crate::actions::{
    conjugation_action, ActionViolation, CompatibilityViolation, MutualAction,
};
use crate::algebra::{
    self, ElemSet, FiniteMla, HomViolation, IdealFailure, MlaHom, SubalgebraFailure,
};
use crate::enumeration::is_isomorphic;
use crate::structure::{self, Outcome};

/// Carrier mismatches caught at construction time.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionShapeError {
    #[error("the action's left algebra does not match the codomain of tau")]
    LeftCarrierMismatch,
    #[error("the action's right algebra does not match the domain of tau")]
    RightCarrierMismatch,
    #[error("the marked subset lives over order {got}, expected {expected}")]
    SubsetMismatch { got: usize, expected: usize },
}

/// The first failing requirement of a relative central extension, in the
/// order: tau a homomorphism, the marked subset an ideal, the mutual action
/// laws, compatibility, then conditions 1–4.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionViolation {
    #[error("tau is not a homomorphism: {0}")]
    Tau(#[from] HomViolation),
    #[error("the marked subset is not an ideal: {0}")]
    Ideal(#[from] IdealFailure),
    #[error(transparent)]
    Action(#[from] ActionViolation),
    #[error(transparent)]
    Compatibility(#[from] CompatibilityViolation),
    #[error("condition 1: the image of tau is {got:?}, not the marked ideal")]
    ImageNotMarked { got: ElemSet },
    #[error("condition 1: kernel element {k} is moved by the action of {g}")]
    KernelMoved { g: usize, k: usize },
    #[error("condition 1: bracket of {g} with kernel element {k} is not the identity")]
    KernelBracket { g: usize, k: usize },
    #[error("condition 2: tau(ᵍl) ≠ g·tau(l)·g⁻¹ at (g, l) = ({g}, {l})")]
    TauConj { g: usize, l: usize },
    #[error("condition 2: tau(⟨g, l⟩) ≠ g ⋆ tau(l) at (g, l) = ({g}, {l})")]
    TauStar { g: usize, l: usize },
    #[error("condition 3: the action of tau(l) is not conjugation by l at (l, l') = ({l}, {lp})")]
    LiftedConj { l: usize, lp: usize },
    #[error("condition 3: the bracket of tau(l) is not l ⋆ l' at (l, l') = ({l}, {lp})")]
    LiftedStar { l: usize, lp: usize },
    #[error("condition 4: ˡg ≠ conjugation by tau(l) at (l, g) = ({l}, {g})")]
    BackConj { l: usize, g: usize },
    #[error("condition 4: ⟨l, g⟩ ≠ tau(l) ⋆ g at (l, g) = ({l}, {g})")]
    BackStar { l: usize, g: usize },
}

/// A relative central extension candidate: `tau: L → G`, a marked ideal `H`
/// of `G`, and a mutual action with `G` on the left and `L` on the right.
/// Construction checks carriers only; the laws live in
/// [`RelativeExtension::verify`].
#[derive(Debug, Clone)]
pub struct RelativeExtension {
    pub tau: MlaHom,
    pub h: ElemSet,
    pub action: MutualAction,
}

fn same_algebra(a: &FiniteMla, b: &FiniteMla) -> bool {
    a.order() == b.order()
        && a.group_table() == b.group_table()
        && a.star_table() == b.star_table()
}

impl RelativeExtension {
    pub fn new(
        tau: MlaHom,
        h: ElemSet,
        action: MutualAction,
    ) -> Result<Self, ExtensionShapeError> {
        if !same_algebra(&action.left, &tau.target) {
            return Err(ExtensionShapeError::LeftCarrierMismatch);
        }
        if !same_algebra(&action.right, &tau.source) {
            return Err(ExtensionShapeError::RightCarrierMismatch);
        }
        if h.universe() != tau.target.order() {
            return Err(ExtensionShapeError::SubsetMismatch {
                got: h.universe(),
                expected: tau.target.order(),
            });
        }
        Ok(RelativeExtension { tau, h, action })
    }

    /// The extension carrier `L`.
    pub fn l(&self) -> &Arc<FiniteMla> {
        &self.tau.source
    }

    /// The base algebra `G`.
    pub fn g(&self) -> &Arc<FiniteMla> {
        &self.tau.target
    }

    pub fn kernel(&self) -> ElemSet {
        self.tau.kernel()
    }

    /// Checks every defining requirement, reporting the lowest-numbered
    /// failure with its least witness.
    pub fn verify(&self) -> Result<(), ExtensionViolation> {
        self.tau.verify()?;
        if let Some(f) = self.g().ideal_failure(&self.h) {
            return Err(f.into());
        }
        self.action.verify_action()?;
        self.action.verify_compatibility()?;
        let (gx, lx) = (self.g(), self.l());
        let (ng, nl) = (gx.order(), lx.order());

        // Condition 1: tau maps onto the marked ideal and G acts trivially
        // on the kernel.
        let image = self.tau.image();
        if image != self.h {
            return Err(ExtensionViolation::ImageNotMarked { got: image });
        }
        for k in self.kernel().iter() {
            for g in 0..ng {
                if self.action.act_gl(g, k) != k {
                    return Err(ExtensionViolation::KernelMoved { g, k });
                }
                if self.action.brk_gl(g, k) != 0 {
                    return Err(ExtensionViolation::KernelBracket { g, k });
                }
            }
        }
        // Condition 2: tau is equivariant for action and bracket.
        for g in 0..ng {
            for l in 0..nl {
                if self.tau.apply(self.action.act_gl(g, l)) != gx.conj(g, self.tau.apply(l)) {
                    return Err(ExtensionViolation::TauConj { g, l });
                }
                if self.tau.apply(self.action.brk_gl(g, l)) != gx.star(g, self.tau.apply(l)) {
                    return Err(ExtensionViolation::TauStar { g, l });
                }
            }
        }
        // Condition 3: elements of tau(L) act on L the way L does on itself.
        for l in 0..nl {
            let t = self.tau.apply(l);
            for lp in 0..nl {
                if self.action.act_gl(t, lp) != lx.conj(l, lp) {
                    return Err(ExtensionViolation::LiftedConj { l, lp });
                }
                if self.action.brk_gl(t, lp) != lx.star(l, lp) {
                    return Err(ExtensionViolation::LiftedStar { l, lp });
                }
            }
        }
        // Condition 4: L acts on G through tau.
        for l in 0..nl {
            let t = self.tau.apply(l);
            for g in 0..ng {
                if self.action.act_lg(l, g) != gx.conj(t, g) {
                    return Err(ExtensionViolation::BackConj { l, g });
                }
                if self.action.brk_lg(l, g) != gx.star(t, g) {
                    return Err(ExtensionViolation::BackStar { l, g });
                }
            }
        }
        Ok(())
    }
}

/// The extension commutator `^M{G,L}`: the subgroup of `L` generated by all
/// displacements `ᵍl·l⁻¹` and all brackets `⟨g, l⟩`. Ideal-ness in `L` is a
/// consequence for valid extensions and is asserted, not forced.
pub fn action_commutator(e: &RelativeExtension) -> ElemSet {
    let lx = e.l();
    let (ng, nl) = (e.g().order(), lx.order());
    let mut seeds = Vec::new();
    for g in 0..ng {
        for l in 0..nl {
            seeds.push(lx.mul(e.action.act_gl(g, l), lx.inv(l)));
            seeds.push(e.action.brk_gl(g, l));
        }
    }
    let set = structure::gen_subgroup(lx, seeds);
    debug_assert!(lx.is_ideal(&set));
    set
}

/// The extension center `Z̄(G,L)`: elements of `L` fixed by every `g` with
/// all brackets trivial. Ideal-ness is asserted, not forced.
pub fn action_center(e: &RelativeExtension) -> ElemSet {
    let (ng, nl) = (e.g().order(), e.l().order());
    let mut set = ElemSet::empty(nl);
    for l in 0..nl {
        let central = (0..ng)
            .all(|g| e.action.act_gl(g, l) == l && e.action.brk_gl(g, l) == 0);
        if central {
            set.insert(l);
        }
    }
    debug_assert!(e.l().is_ideal(&set));
    set
}

/// Whether the kernel of tau sits inside both the multiplicative center of
/// `L` and the extension center — true for every valid extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub kernel: ElemSet,
    pub in_multiplicative_center: bool,
    pub in_action_center: bool,
}

impl KernelReport {
    pub fn passed(&self) -> bool {
        self.in_multiplicative_center && self.in_action_center
    }
}

pub fn kernel_checks(e: &RelativeExtension) -> KernelReport {
    let kernel = e.kernel();
    let mz = structure::centers(e.l()).multiplicative;
    let zbar = action_center(e);
    KernelReport {
        in_multiplicative_center: kernel.is_subset_of(&mz),
        in_action_center: kernel.is_subset_of(&zbar),
        kernel,
    }
}

/// Report for the Lie-perfect-pair test `^M{G,H} = H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerfectPairReport {
    /// `^M{G,H} = H`, computed on the inclusion extension.
    pub holds: bool,
    /// The companion fact `^M[G,H] = H` for the pair commutator.
    pub pair_commutator_equals: bool,
}

/// Tests whether `(a, h)` is a Lie perfect pair: the extension commutator
/// of the inclusion extension over `h` is all of `h`.
pub fn is_lie_perfect_pair(
    a: &Arc<FiniteMla>,
    h: &ElemSet,
) -> Result<PerfectPairReport, IdealFailure> {
    let e = inclusion_extension(a, h)?;
    let full = ElemSet::full(e.l().order());
    let holds = action_commutator(&e) == full;
    let pair_commutator_equals = structure::pair_commutator(a, h)? == *h;
    Ok(PerfectPairReport {
        holds,
        pair_commutator_equals,
    })
}

/// `tau = id`, `H = G`, conjugation action: valid for any verified algebra.
pub fn identity_extension(a: &Arc<FiniteMla>) -> RelativeExtension {
    RelativeExtension {
        tau: MlaHom::identity(a),
        h: ElemSet::full(a.order()),
        action: conjugation_action(a),
    }
}

/// `L` = the ideal `h` as its own algebra, `tau` = inclusion, with the
/// conjugation/star action restricted to it.
pub fn inclusion_extension(
    a: &Arc<FiniteMla>,
    h: &ElemSet,
) -> Result<RelativeExtension, IdealFailure> {
    if let Some(f) = a.ideal_failure(h) {
        return Err(f);
    }
    let sub = algebra::restrict(a, h).expect("an ideal is a subalgebra");
    let (ng, nl) = (a.order(), sub.algebra.order());
    let mut act_gl = vec![0usize; ng * nl];
    let mut brk_gl = vec![0usize; ng * nl];
    let mut act_lg = vec![0usize; nl * ng];
    let mut brk_lg = vec![0usize; nl * ng];
    for li in 0..nl {
        let member = sub.inclusion.apply(li);
        for g in 0..ng {
            act_gl[g * nl + li] = sub.index_of[a.conj(g, member)];
            brk_gl[g * nl + li] = sub.index_of[a.star(g, member)];
            act_lg[li * ng + g] = a.conj(member, g);
            brk_lg[li * ng + g] = a.star(member, g);
        }
    }
    let action = MutualAction::new(
        a.clone(),
        sub.algebra.clone(),
        act_gl,
        brk_gl,
        act_lg,
        brk_lg,
    )
    .expect("restricted tables are well-shaped");
    Ok(RelativeExtension {
        tau: sub.inclusion,
        h: h.clone(),
        action,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("the attached factor must be a valid abelian algebra with trivial star")]
    FactorNotCentral,
    #[error("the restriction carrier is not a subalgebra: {0}")]
    NotSubalgebra(#[from] SubalgebraFailure),
    #[error("tau does not map the restriction carrier onto the marked ideal")]
    RestrictionImageMismatch,
    #[error("the restriction carrier is not action-invariant: element {member} escapes under {g}")]
    RestrictionNotInvariant { g: usize, member: usize },
    #[error("the quotient kernel is not an ideal: {0}")]
    QuotientNotIdeal(IdealFailure),
    #[error("the quotient kernel is not contained in the kernel of tau")]
    QuotientKernelTooBig,
    #[error("induced table {table} is not well-defined on cosets")]
    NotWellDefined { table: &'static str },
    #[error("the glue map must be an isomorphism between the two base algebras")]
    GlueNotIso,
    #[error("the glue map sends the marked ideal to {got:?}, not onto the target's")]
    GlueIdealMismatch { got: ElemSet },
}

/// A product extension together with the projection back to the original
/// carrier (a morphism over the identity on `G`).
#[derive(Debug, Clone)]
pub struct ProductExtension {
    pub extension: RelativeExtension,
    pub projection: MlaHom,
}

/// Extends the carrier by a central factor: `tau(l, k) = tau(l)`, the
/// action and bracket work on the first component, and `k` rides along
/// untouched (bracket values land in the first factor).
pub fn construct_product(
    e: &RelativeExtension,
    k: &Arc<FiniteMla>,
) -> Result<ProductExtension, ConstructError> {
    if !k.is_abelian() || !k.star_is_trivial() || k.verify().is_err() {
        return Err(ConstructError::FactorNotCentral);
    }
    let lx = e.l();
    let big = algebra::direct_product(lx, k);
    let (ng, _nl, nk) = (e.g().order(), lx.order(), k.order());
    let n = big.order();
    let mut tau_map = vec![0usize; n];
    let mut proj_map = vec![0usize; n];
    let mut act_gl = vec![0usize; ng * n];
    let mut brk_gl = vec![0usize; ng * n];
    let mut act_lg = vec![0usize; n * ng];
    let mut brk_lg = vec![0usize; n * ng];
    for p in 0..n {
        let (l, kk) = (p / nk, p % nk);
        tau_map[p] = e.tau.apply(l);
        proj_map[p] = l;
        for g in 0..ng {
            act_gl[g * n + p] = e.action.act_gl(g, l) * nk + kk;
            brk_gl[g * n + p] = e.action.brk_gl(g, l) * nk;
            act_lg[p * ng + g] = e.action.act_lg(l, g);
            brk_lg[p * ng + g] = e.action.brk_lg(l, g);
        }
    }
    let tau = MlaHom::new(big.clone(), e.g().clone(), tau_map).expect("tau map is well-shaped");
    let action = MutualAction::new(e.g().clone(), big.clone(), act_gl, brk_gl, act_lg, brk_lg)
        .expect("product tables are well-shaped");
    let extension = RelativeExtension {
        tau,
        h: e.h.clone(),
        action,
    };
    // The extension commutator is carried by the first factor.
    #[cfg(debug_assertions)]
    {
        let embedded = action_commutator(&extension);
        let original = action_commutator(e);
        let sub_big = algebra::restrict(&big, &embedded).expect("commutator is a subalgebra");
        let sub_small = algebra::restrict(lx, &original).expect("commutator is a subalgebra");
        debug_assert!(is_isomorphic(&sub_big.algebra, &sub_small.algebra));
    }
    Ok(ProductExtension {
        extension,
        projection: MlaHom::new(big, lx.clone(), proj_map).expect("projection is well-shaped"),
    })
}

/// A restricted extension together with the inclusion of its carrier back
/// into the original one.
#[derive(Debug, Clone)]
pub struct RestrictionExtension {
    pub extension: RelativeExtension,
    pub inclusion: MlaHom,
}

/// Restricts the carrier to a subalgebra `m` that still maps onto the
/// marked ideal and is invariant under the action tables.
pub fn construct_restriction(
    e: &RelativeExtension,
    m: &ElemSet,
) -> Result<RestrictionExtension, ConstructError> {
    let lx = e.l();
    let sub = algebra::restrict(lx, m)?;
    let image: ElemSet = {
        let mut s = ElemSet::empty(e.g().order());
        for l in m.iter() {
            s.insert(e.tau.apply(l));
        }
        s
    };
    if image != e.h {
        return Err(ConstructError::RestrictionImageMismatch);
    }
    let ng = e.g().order();
    for l in m.iter() {
        for g in 0..ng {
            if !m.contains(e.action.act_gl(g, l)) || !m.contains(e.action.brk_gl(g, l)) {
                return Err(ConstructError::RestrictionNotInvariant { g, member: l });
            }
        }
    }
    let nl = sub.algebra.order();
    let mut tau_map = vec![0usize; nl];
    let mut act_gl = vec![0usize; ng * nl];
    let mut brk_gl = vec![0usize; ng * nl];
    let mut act_lg = vec![0usize; nl * ng];
    let mut brk_lg = vec![0usize; nl * ng];
    for li in 0..nl {
        let l = sub.inclusion.apply(li);
        tau_map[li] = e.tau.apply(l);
        for g in 0..ng {
            act_gl[g * nl + li] = sub.index_of[e.action.act_gl(g, l)];
            brk_gl[g * nl + li] = sub.index_of[e.action.brk_gl(g, l)];
            act_lg[li * ng + g] = e.action.act_lg(l, g);
            brk_lg[li * ng + g] = e.action.brk_lg(l, g);
        }
    }
    let tau =
        MlaHom::new(sub.algebra.clone(), e.g().clone(), tau_map).expect("tau map is well-shaped");
    let action = MutualAction::new(
        e.g().clone(),
        sub.algebra.clone(),
        act_gl,
        brk_gl,
        act_lg,
        brk_lg,
    )
    .expect("restricted tables are well-shaped");
    Ok(RestrictionExtension {
        extension: RelativeExtension {
            tau,
            h: e.h.clone(),
            action,
        },
        inclusion: sub.inclusion,
    })
}

/// A quotient extension together with the natural projection (a morphism
/// over the identity on `G`).
#[derive(Debug, Clone)]
pub struct QuotientExtension {
    pub extension: RelativeExtension,
    pub projection: MlaHom,
}

/// Quotients the carrier by an ideal inside the kernel of tau. All induced
/// tables are re-verified to be independent of coset representatives.
pub fn construct_quotient(
    e: &RelativeExtension,
    k: &ElemSet,
) -> Result<QuotientExtension, ConstructError> {
    let lx = e.l();
    if !k.is_subset_of(&e.kernel()) {
        return Err(ConstructError::QuotientKernelTooBig);
    }
    let q = algebra::quotient(lx, k).map_err(ConstructError::QuotientNotIdeal)?;
    let (ng, nl, nq) = (e.g().order(), lx.order(), q.algebra.order());
    const UNSET: usize = usize::MAX;
    let mut tau_map = vec![UNSET; nq];
    let mut act_gl = vec![UNSET; ng * nq];
    let mut brk_gl = vec![UNSET; ng * nq];
    let mut act_lg = vec![UNSET; nq * ng];
    let mut brk_lg = vec![UNSET; nq * ng];
    let put = |slot: &mut usize, value: usize, table: &'static str| {
        if *slot == UNSET {
            *slot = value;
            Ok(())
        } else if *slot == value {
            Ok(())
        } else {
            Err(ConstructError::NotWellDefined { table })
        }
    };
    for l in 0..nl {
        let c = q.projection.apply(l);
        put(&mut tau_map[c], e.tau.apply(l), "tau")?;
        for g in 0..ng {
            let av = q.projection.apply(e.action.act_gl(g, l));
            put(&mut act_gl[g * nq + c], av, "act_gl")?;
            let bv = q.projection.apply(e.action.brk_gl(g, l));
            put(&mut brk_gl[g * nq + c], bv, "brk_gl")?;
            put(&mut act_lg[c * ng + g], e.action.act_lg(l, g), "act_lg")?;
            put(&mut brk_lg[c * ng + g], e.action.brk_lg(l, g), "brk_lg")?;
        }
    }
    let tau =
        MlaHom::new(q.algebra.clone(), e.g().clone(), tau_map).expect("tau map is well-shaped");
    let action = MutualAction::new(
        e.g().clone(),
        q.algebra.clone(),
        act_gl,
        brk_gl,
        act_lg,
        brk_lg,
    )
    .expect("quotient tables are well-shaped");
    Ok(QuotientExtension {
        extension: RelativeExtension {
            tau,
            h: e.h.clone(),
            action,
        },
        projection: q.projection,
    })
}

/// A pullback extension with its two component projections and the member
/// set inside the direct product of the carriers.
#[derive(Debug, Clone)]
pub struct PullbackExtension {
    pub extension: RelativeExtension,
    pub proj1: MlaHom,
    pub proj2: MlaHom,
    /// The fiber-product carrier as a subset of `L1 × L2`.
    pub members: ElemSet,
}

/// The fiber product of two extensions along an isomorphism of their base
/// algebras that matches the marked ideals: the carrier is all pairs
/// `(l1, l2)` with `theta(tau1(l1)) = tau2(l2)`.
pub fn construct_pullback(
    e1: &RelativeExtension,
    e2: &RelativeExtension,
    theta: &MlaHom,
) -> Result<PullbackExtension, ConstructError> {
    if !same_algebra(&theta.source, e1.g())
        || !same_algebra(&theta.target, e2.g())
        || !theta.is_bijective()
        || theta.verify().is_err()
    {
        return Err(ConstructError::GlueNotIso);
    }
    let image = theta.image_of(&e1.h);
    if image != e2.h {
        return Err(ConstructError::GlueIdealMismatch { got: image });
    }
    let (l1, l2) = (e1.l(), e2.l());
    let (n1, n2) = (l1.order(), l2.order());
    let prod = algebra::direct_product(l1, l2);
    let mut members = ElemSet::empty(prod.order());
    for a in 0..n1 {
        for b in 0..n2 {
            if theta.apply(e1.tau.apply(a)) == e2.tau.apply(b) {
                members.insert(a * n2 + b);
            }
        }
    }
    let sub = algebra::restrict(&prod, &members)
        .expect("the fiber product is closed under the operations");
    let npb = sub.algebra.order();
    let ng = e1.g().order();
    let mut tau_map = vec![0usize; npb];
    let mut p1 = vec![0usize; npb];
    let mut p2 = vec![0usize; npb];
    let mut act_gl = vec![0usize; ng * npb];
    let mut brk_gl = vec![0usize; ng * npb];
    let mut act_lg = vec![0usize; npb * ng];
    let mut brk_lg = vec![0usize; npb * ng];
    for i in 0..npb {
        let p = sub.inclusion.apply(i);
        let (a, b) = (p / n2, p % n2);
        tau_map[i] = e1.tau.apply(a);
        p1[i] = a;
        p2[i] = b;
        for g in 0..ng {
            let tg = theta.apply(g);
            let acted = e1.action.act_gl(g, a) * n2 + e2.action.act_gl(tg, b);
            act_gl[g * npb + i] = sub.index_of[acted];
            debug_assert_ne!(act_gl[g * npb + i], usize::MAX, "action leaves the fiber");
            let bracketed = e1.action.brk_gl(g, a) * n2 + e2.action.brk_gl(tg, b);
            brk_gl[g * npb + i] = sub.index_of[bracketed];
            debug_assert_ne!(brk_gl[g * npb + i], usize::MAX, "bracket leaves the fiber");
            act_lg[i * ng + g] = e1.action.act_lg(a, g);
            brk_lg[i * ng + g] = e1.action.brk_lg(a, g);
        }
    }
    let tau = MlaHom::new(sub.algebra.clone(), e1.g().clone(), tau_map)
        .expect("tau map is well-shaped");
    let action = MutualAction::new(
        e1.g().clone(),
        sub.algebra.clone(),
        act_gl,
        brk_gl,
        act_lg,
        brk_lg,
    )
    .expect("pullback tables are well-shaped");
    Ok(PullbackExtension {
        extension: RelativeExtension {
            tau,
            h: e1.h.clone(),
            action,
        },
        proj1: MlaHom::new(sub.algebra.clone(), l1.clone(), p1).expect("projection well-shaped"),
        proj2: MlaHom::new(sub.algebra.clone(), l2.clone(), p2).expect("projection well-shaped"),
        members,
    })
}

/// A candidate morphism between extensions: `theta` on the bases, `beta`
/// on the carriers.
#[derive(Debug, Clone)]
pub struct ExtMorphism {
    pub theta: MlaHom,
    pub beta: MlaHom,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismViolation {
    #[error("theta does not connect the two base algebras")]
    ThetaShape,
    #[error("beta does not connect the two carriers")]
    BetaShape,
    #[error("theta is not a homomorphism: {0}")]
    Theta(HomViolation),
    #[error("beta is not a homomorphism: {0}")]
    Beta(HomViolation),
    #[error("theta sends the marked ideal to {got:?}, not onto the target's")]
    IdealImage { got: ElemSet },
    #[error("beta sends the extension commutator to {got:?}, not onto the target's")]
    CommutatorImage { got: ElemSet },
    #[error("theta∘tau1 ≠ tau2∘beta at l = {l}")]
    Square { l: usize },
}

/// Checks the three morphism requirements: `theta(H1) = H2`, `beta` maps
/// the extension commutator onto the target's, and the square
/// `theta∘tau1 = tau2∘beta` commutes.
pub fn verify_morphism(
    e1: &RelativeExtension,
    e2: &RelativeExtension,
    m: &ExtMorphism,
) -> Result<(), MorphismViolation> {
    if !same_algebra(&m.theta.source, e1.g()) || !same_algebra(&m.theta.target, e2.g()) {
        return Err(MorphismViolation::ThetaShape);
    }
    if !same_algebra(&m.beta.source, e1.l()) || !same_algebra(&m.beta.target, e2.l()) {
        return Err(MorphismViolation::BetaShape);
    }
    m.theta.verify().map_err(MorphismViolation::Theta)?;
    m.beta.verify().map_err(MorphismViolation::Beta)?;
    let ideal_image = m.theta.image_of(&e1.h);
    if ideal_image != e2.h {
        return Err(MorphismViolation::IdealImage { got: ideal_image });
    }
    let comm_image = m.beta.image_of(&action_commutator(e1));
    if comm_image != action_commutator(e2) {
        return Err(MorphismViolation::CommutatorImage { got: comm_image });
    }
    for l in 0..e1.l().order() {
        if m.theta.apply(e1.tau.apply(l)) != e2.tau.apply(m.beta.apply(l)) {
            return Err(MorphismViolation::Square { l });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("malformed multiplier certificate: {0}")]
    BadCertificate(&'static str),
    #[error("the candidate subset lives over order {got}, expected {expected}")]
    SubsetMismatch { got: usize, expected: usize },
}

/// Outcome of the four finitely-checkable covering-pair conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    /// `I` is an ideal of the carrier.
    pub ideal_ok: bool,
    /// `I ⊆ Z̄(G,L) ∩ ^M{G,L}`.
    pub central_commutator_ok: bool,
    /// `L/I` is isomorphic to the marked ideal as an algebra.
    pub quotient_matches: bool,
    /// `I` is isomorphic to the supplied multiplier certificate.
    pub multiplier_matches: bool,
}

impl CoverReport {
    pub fn passed(&self) -> bool {
        self.ideal_ok
            && self.central_commutator_ok
            && self.quotient_matches
            && self.multiplier_matches
    }
}

/// Checks the covering-pair conditions for a claimed central subset `I` and
/// an externally supplied multiplier certificate (an abelian trivial-star
/// algebra; multipliers are not computed here).
pub fn covering_pair_check(
    e: &RelativeExtension,
    i: &ElemSet,
    cert: &Arc<FiniteMla>,
) -> Result<CoverReport, CoverError> {
    if cert.verify().is_err() || !cert.is_abelian() || !cert.star_is_trivial() {
        return Err(CoverError::BadCertificate(
            "certificate must be a valid abelian algebra with trivial star",
        ));
    }
    let lx = e.l();
    if i.universe() != lx.order() {
        return Err(CoverError::SubsetMismatch {
            got: i.universe(),
            expected: lx.order(),
        });
    }
    let ideal_ok = lx.is_ideal(i);
    let mut central = action_center(e);
    central.intersect_with(&action_commutator(e));
    let central_commutator_ok = i.is_subset_of(&central);
    let (quotient_matches, multiplier_matches) = if ideal_ok {
        let h_alg = algebra::restrict(e.g(), &e.h)
            .expect("the marked ideal is a subalgebra")
            .algebra;
        let q = algebra::quotient(lx, i).expect("checked ideal").algebra;
        let i_alg = algebra::restrict(lx, i).expect("an ideal is a subalgebra").algebra;
        (
            is_isomorphic(&q, &h_alg),
            is_isomorphic(&i_alg, cert),
        )
    } else {
        (false, false)
    };
    Ok(CoverReport {
        ideal_ok,
        central_commutator_ok,
        quotient_matches,
        multiplier_matches,
    })
}

/// Outcome of the perfect-cover conclusion `^M{G,L} = L`, with the
/// hypotheses that gate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectCoverReport {
    /// `(G, H)` is a Lie perfect pair.
    pub perfect_pair: bool,
    /// Kernel-as-`I` covering conditions: `ker τ ⊆ Z̄ ∩ ^M` and `L/ker ≅ H`.
    pub cover_conditions: bool,
    /// `Pass`/`Fail` for `^M{G,L} = L` when the hypotheses hold, `Vacuous`
    /// otherwise.
    pub outcome: Outcome,
}

pub fn perfect_cover_check(e: &RelativeExtension) -> PerfectCoverReport {
    let perfect_pair = is_lie_perfect_pair(e.g(), &e.h)
        .map(|r| r.holds)
        .unwrap_or(false);
    let kernel = e.kernel();
    let mut central = action_center(e);
    central.intersect_with(&action_commutator(e));
    let cover_conditions = kernel.is_subset_of(&central) && {
        let h_alg = algebra::restrict(e.g(), &e.h)
            .expect("the marked ideal is a subalgebra")
            .algebra;
        match algebra::quotient(e.l(), &kernel) {
            Ok(q) => is_isomorphic(&q.algebra, &h_alg),
            Err(_) => false,
        }
    };
    let outcome = if perfect_pair && cover_conditions {
        let full = ElemSet::full(e.l().order());
        if action_commutator(e) == full {
            Outcome::Pass
        } else {
            Outcome::Fail(format!(
                "extension commutator is {:?}, not the whole carrier",
                action_commutator(e)
            ))
        }
    } else {
        Outcome::Vacuous
    };
    PerfectCoverReport {
        perfect_pair,
        cover_conditions,
        outcome,
    }
}
