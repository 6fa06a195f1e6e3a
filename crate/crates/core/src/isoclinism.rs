//! Isoclinism of relative central extensions: a base isomorphism `theta`
//! matching the marked ideals plus an isomorphism `beta` between the
//! extension commutators that transports displacements and brackets. The
//! module verifies witnesses, searches for them exhaustively, classifies
//! isoclinic morphisms, checks the standard consequences, and probes the
//! equivalence theorem's constructions at desk scale.

use thiserror::Error;

use crate::algebra::{self, ElemSet, FiniteMla, HomViolation, MlaHom, Subalgebra};
use crate::enumeration::find_isomorphisms;
use crate::extensions::{
    action_commutator, construct_product, construct_pullback, verify_morphism, ConstructError,
    ExtMorphism, MorphismViolation, RelativeExtension,
};

/// A claimed isoclinism: `theta` between the bases, `beta` between the
/// extension commutators realized as restricted subalgebras.
#[derive(Debug, Clone)]
pub struct IsoclinismWitness {
    pub theta: MlaHom,
    pub beta: MlaHom,
}

/// The identity witness on a single extension.
pub fn identity_witness(e: &RelativeExtension) -> IsoclinismWitness {
    let m = action_commutator(e);
    let sub = algebra::restrict(e.l(), &m).expect("commutator is a subalgebra");
    IsoclinismWitness {
        theta: MlaHom::identity(e.g()),
        beta: MlaHom::identity(&sub.algebra),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoclinismViolation {
    #[error("theta does not connect the two base algebras")]
    ThetaShape,
    #[error("theta is not a homomorphism: {0}")]
    ThetaInvalid(HomViolation),
    #[error("theta is not bijective")]
    ThetaNotBijective,
    #[error("theta sends the marked ideal to {got:?}, not onto the target's")]
    IdealImage { got: ElemSet },
    #[error("beta does not connect the two extension commutators")]
    BetaShape,
    #[error("beta is not a homomorphism: {0}")]
    BetaInvalid(HomViolation),
    #[error("beta is not bijective")]
    BetaNotBijective,
    #[error(
        "preimage choice is not neutral: lifts {l2a} and {l2b} of the same base element \
         disagree on the {kind} under {g2}"
    )]
    PreimageDependent {
        g2: usize,
        l2a: usize,
        l2b: usize,
        kind: &'static str,
    },
    #[error("displacement transport fails at (g1, l1) = ({g1}, {l1})")]
    Displacement { g1: usize, l1: usize },
    #[error("bracket transport fails at (g1, l1) = ({g1}, {l1})")]
    Bracket { g1: usize, l1: usize },
}

/// The two restricted commutator subalgebras a witness connects.
struct CommutatorPair {
    sub1: Subalgebra,
    sub2: Subalgebra,
}

fn commutator_pair(e1: &RelativeExtension, e2: &RelativeExtension) -> CommutatorPair {
    let m1 = action_commutator(e1);
    let m2 = action_commutator(e2);
    CommutatorPair {
        sub1: algebra::restrict(e1.l(), &m1).expect("commutator is a subalgebra"),
        sub2: algebra::restrict(e2.l(), &m2).expect("commutator is a subalgebra"),
    }
}

/// Least tau-preimage per marked-ideal element, `usize::MAX` elsewhere.
fn canonical_preimages(e: &RelativeExtension) -> Vec<usize> {
    let mut canon = vec![usize::MAX; e.g().order()];
    for l in (0..e.l().order()).rev() {
        canon[e.tau.apply(l)] = l;
    }
    canon
}

fn same_algebra(a: &FiniteMla, b: &FiniteMla) -> bool {
    a.order() == b.order()
        && a.group_table() == b.group_table()
        && a.star_table() == b.star_table()
}

/// Checks a witness: theta and beta are isomorphisms of the right things,
/// preimage choice does not matter on the target side, and both defining
/// transport equalities hold with canonical preimages.
pub fn verify_isoclinism(
    e1: &RelativeExtension,
    e2: &RelativeExtension,
    w: &IsoclinismWitness,
) -> Result<(), IsoclinismViolation> {
    if !same_algebra(&w.theta.source, e1.g()) || !same_algebra(&w.theta.target, e2.g()) {
        return Err(IsoclinismViolation::ThetaShape);
    }
    w.theta.verify().map_err(IsoclinismViolation::ThetaInvalid)?;
    if !w.theta.is_bijective() {
        return Err(IsoclinismViolation::ThetaNotBijective);
    }
    let image = w.theta.image_of(&e1.h);
    if image != e2.h {
        return Err(IsoclinismViolation::IdealImage { got: image });
    }
    let pair = commutator_pair(e1, e2);
    if !same_algebra(&w.beta.source, &pair.sub1.algebra)
        || !same_algebra(&w.beta.target, &pair.sub2.algebra)
    {
        return Err(IsoclinismViolation::BetaShape);
    }
    w.beta.verify().map_err(IsoclinismViolation::BetaInvalid)?;
    if !w.beta.is_bijective() {
        return Err(IsoclinismViolation::BetaNotBijective);
    }

    // Choice-of-preimage independence on the target side: lifts of the same
    // base element produce the same displacements and brackets.
    let (l2x, ng2, nl2) = (e2.l(), e2.g().order(), e2.l().order());
    let canon2 = canonical_preimages(e2);
    for l2 in 0..nl2 {
        let c = canon2[e2.tau.apply(l2)];
        if c == l2 {
            continue;
        }
        for g2 in 0..ng2 {
            let via_l2 = l2x.mul(e2.action.act_gl(g2, l2), l2x.inv(l2));
            let via_c = l2x.mul(e2.action.act_gl(g2, c), l2x.inv(c));
            if via_l2 != via_c {
                return Err(IsoclinismViolation::PreimageDependent {
                    g2,
                    l2a: c,
                    l2b: l2,
                    kind: "displacement",
                });
            }
            if e2.action.brk_gl(g2, l2) != e2.action.brk_gl(g2, c) {
                return Err(IsoclinismViolation::PreimageDependent {
                    g2,
                    l2a: c,
                    l2b: l2,
                    kind: "bracket",
                });
            }
        }
    }

    // Transport beta through the inclusion maps: L1 element -> L2 element.
    let beta_l = |x: usize| -> usize {
        let i = pair.sub1.index_of[x];
        debug_assert_ne!(i, usize::MAX, "argument lies in the commutator");
        pair.sub2.inclusion.apply(w.beta.apply(i))
    };
    let (l1x, ng1, nl1) = (e1.l(), e1.g().order(), e1.l().order());
    for g1 in 0..ng1 {
        let g2 = w.theta.apply(g1);
        for l1 in 0..nl1 {
            let l2 = canon2[w.theta.apply(e1.tau.apply(l1))];
            let d1 = l1x.mul(e1.action.act_gl(g1, l1), l1x.inv(l1));
            let d2 = l2x.mul(e2.action.act_gl(g2, l2), l2x.inv(l2));
            if beta_l(d1) != d2 {
                return Err(IsoclinismViolation::Displacement { g1, l1 });
            }
            if beta_l(e1.action.brk_gl(g1, l1)) != e2.action.brk_gl(g2, l2) {
                return Err(IsoclinismViolation::Bracket { g1, l1 });
            }
        }
    }
    Ok(())
}

/// Forces beta on the commutator generators from a fixed theta, closes
/// under products and inverses, and returns the candidate map on parent
/// indices (`usize::MAX` off the commutator) — or `None` on any conflict.
fn force_beta(
    e1: &RelativeExtension,
    e2: &RelativeExtension,
    theta: &MlaHom,
    pair: &CommutatorPair,
    canon2: &[usize],
) -> Option<Vec<usize>> {
    let (l1x, l2x) = (e1.l(), e2.l());
    let mut part = vec![usize::MAX; l1x.order()];
    let mut known: Vec<usize> = Vec::new();
    let assign = |part: &mut Vec<usize>, known: &mut Vec<usize>, x: usize, v: usize| -> bool {
        if part[x] == usize::MAX {
            part[x] = v;
            known.push(x);
            true
        } else {
            part[x] == v
        }
    };
    for g1 in 0..e1.g().order() {
        let g2 = theta.apply(g1);
        for l1 in 0..l1x.order() {
            let l2 = canon2[theta.apply(e1.tau.apply(l1))];
            let d1 = l1x.mul(e1.action.act_gl(g1, l1), l1x.inv(l1));
            let d2 = l2x.mul(e2.action.act_gl(g2, l2), l2x.inv(l2));
            if !assign(&mut part, &mut known, d1, d2) {
                return None;
            }
            let b1 = e1.action.brk_gl(g1, l1);
            let b2 = e2.action.brk_gl(g2, l2);
            if !assign(&mut part, &mut known, b1, b2) {
                return None;
            }
        }
    }
    // Close under inverses and products; the generators generate the whole
    // commutator subgroup, so this defines beta everywhere on it.
    let mut i = 0;
    while i < known.len() {
        let x = known[i];
        let px = part[x];
        i += 1;
        if !assign(&mut part, &mut known, l1x.inv(x), l2x.inv(px)) {
            return None;
        }
        for j in 0..known.len() {
            let y = known[j];
            let py = part[y];
            if !assign(&mut part, &mut known, l1x.mul(x, y), l2x.mul(px, py)) {
                return None;
            }
            if !assign(&mut part, &mut known, l1x.mul(y, x), l2x.mul(py, px)) {
                return None;
            }
        }
    }
    // Everything in the commutator must be covered, bijectively onto the
    // target commutator.
    let mut hit = vec![false; l2x.order()];
    let mut count = 0;
    for x in pair.sub1.members.iter() {
        let v = part[x];
        if v == usize::MAX || pair.sub2.index_of[v] == usize::MAX || hit[v] {
            return None;
        }
        hit[v] = true;
        count += 1;
    }
    if count != pair.sub2.members.len() {
        return None;
    }
    Some(part)
}

/// Exhaustive search: enumerate base isomorphisms respecting the marked
/// ideals; beta is forced by each theta on the commutator generators, then
/// the assembled witness is fully re-verified. Returns the first witness in
/// deterministic order.
pub fn find_isoclinism(
    e1: &RelativeExtension,
    e2: &RelativeExtension,
) -> Option<IsoclinismWitness> {
    let pair = commutator_pair(e1, e2);
    if pair.sub1.algebra.order() != pair.sub2.algebra.order() {
        return None;
    }
    let canon2 = canonical_preimages(e2);
    for theta in find_isomorphisms(e1.g(), e2.g()) {
        if theta.image_of(&e1.h) != e2.h {
            continue;
        }
        let Some(part) = force_beta(e1, e2, &theta, &pair, &canon2) else {
            continue;
        };
        let map: Vec<usize> = (0..pair.sub1.algebra.order())
            .map(|i| pair.sub2.index_of[part[pair.sub1.inclusion.apply(i)]])
            .collect();
        let beta = MlaHom::new(
            pair.sub1.algebra.clone(),
            pair.sub2.algebra.clone(),
            map,
        )
        .expect("forced map is well-shaped");
        let w = IsoclinismWitness { theta, beta };
        if verify_isoclinism(e1, e2, &w).is_ok() {
            return Some(w);
        }
    }
    None
}

/// Injectivity/surjectivity classification of a morphism's carrier map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorphismClass {
    pub monomorphism: bool,
    pub epimorphism: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoclinicMorphismError {
    #[error(transparent)]
    Morphism(#[from] MorphismViolation),
    #[error(transparent)]
    Isoclinism(#[from] IsoclinismViolation),
}

/// Checks that a morphism is isoclinic: the morphism laws hold and the
/// restriction of beta to the extension commutator, paired with theta, is
/// an isoclinism. Reports whether beta is injective/surjective on the full
/// carrier.
pub fn verify_isoclinic_morphism(
    e1: &RelativeExtension,
    e2: &RelativeExtension,
    m: &ExtMorphism,
) -> Result<MorphismClass, IsoclinicMorphismError> {
    verify_morphism(e1, e2, m)?;
    let pair = commutator_pair(e1, e2);
    let map: Vec<usize> = (0..pair.sub1.algebra.order())
        .map(|i| {
            let parent = m.beta.apply(pair.sub1.inclusion.apply(i));
            let j = pair.sub2.index_of[parent];
            debug_assert_ne!(j, usize::MAX, "beta maps commutator into commutator");
            j
        })
        .collect();
    let beta = MlaHom::new(
        pair.sub1.algebra.clone(),
        pair.sub2.algebra.clone(),
        map,
    )
    .expect("restricted beta is well-shaped");
    let w = IsoclinismWitness {
        theta: m.theta.clone(),
        beta,
    };
    verify_isoclinism(e1, e2, &w)?;
    let mut seen = vec![false; e2.l().order()];
    let mut injective = true;
    for x in 0..e1.l().order() {
        let v = m.beta.apply(x);
        if seen[v] {
            injective = false;
        }
        seen[v] = true;
    }
    Ok(MorphismClass {
        monomorphism: injective,
        epimorphism: seen.iter().all(|&s| s),
    })
}

/// Failure of one of the standard isoclinism consequences.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConsequenceViolation {
    #[error("theta∘tau1 ≠ tau2∘beta at commutator element {x}")]
    TauSquare { x: usize },
    #[error("beta sends ker∩commutator to {got:?}, expected {expected:?}")]
    KernelImage { got: ElemSet, expected: ElemSet },
    #[error("recombination fails at (g1, g1', l1, l1') = ({g1}, {gp1}, {l1}, {lp1})")]
    Recombination {
        g1: usize,
        gp1: usize,
        l1: usize,
        lp1: usize,
    },
}

/// Checks the three consequences that hold for every verified isoclinism:
/// the tau square commutes on the commutator, beta matches the kernels
/// inside the commutators, and combined displacement-bracket words are
/// transported to their beta-images.
pub fn isoclinism_consequences(
    e1: &RelativeExtension,
    e2: &RelativeExtension,
    w: &IsoclinismWitness,
) -> Result<(), ConsequenceViolation> {
    let pair = commutator_pair(e1, e2);
    let beta_l = |x: usize| -> usize {
        pair.sub2
            .inclusion
            .apply(w.beta.apply(pair.sub1.index_of[x]))
    };

    // (1) theta∘tau1 = tau2∘beta on the commutator.
    for x in pair.sub1.members.iter() {
        if w.theta.apply(e1.tau.apply(x)) != e2.tau.apply(beta_l(x)) {
            return Err(ConsequenceViolation::TauSquare { x });
        }
    }

    // (2) beta(ker tau1 ∩ ^M1) = ker tau2 ∩ ^M2.
    let mut k1 = e1.kernel();
    k1.intersect_with(&pair.sub1.members);
    let mut got = ElemSet::empty(e2.l().order());
    for x in k1.iter() {
        got.insert(beta_l(x));
    }
    let mut expected = e2.kernel();
    expected.intersect_with(&pair.sub2.members);
    if got != expected {
        return Err(ConsequenceViolation::KernelImage { got, expected });
    }

    // (3) beta(ᵍ¹l1·l1⁻¹·⟨g1', l1'⟩) = ᵍ²β(l1)·β(l1)⁻¹·⟨g2', β(l1')⟩ for
    // commutator arguments.
    let (l1x, l2x) = (e1.l(), e2.l());
    for g1 in 0..e1.g().order() {
        let g2 = w.theta.apply(g1);
        for gp1 in 0..e1.g().order() {
            let gp2 = w.theta.apply(gp1);
            for l1 in pair.sub1.members.iter() {
                let bl1 = beta_l(l1);
                let lhs_d = l1x.mul(e1.action.act_gl(g1, l1), l1x.inv(l1));
                let rhs_d = l2x.mul(e2.action.act_gl(g2, bl1), l2x.inv(bl1));
                for lp1 in pair.sub1.members.iter() {
                    let lhs = l1x.mul(lhs_d, e1.action.brk_gl(gp1, lp1));
                    let rhs = l2x.mul(rhs_d, e2.action.brk_gl(gp2, beta_l(lp1)));
                    if beta_l(lhs) != rhs {
                        return Err(ConsequenceViolation::Recombination { g1, gp1, l1, lp1 });
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Error)]
pub enum ProbeFailure {
    #[error("no isoclinism witness found between the two extensions")]
    NoWitness,
    #[error("construction failed at stage {stage}: {source}")]
    Construct {
        stage: &'static str,
        #[source]
        source: ConstructError,
    },
    #[error("the pullback quotient factor is not abelian with trivial star")]
    FactorNotCentral,
    #[error("realized morphism failed at stage {stage}: {source}")]
    Morphism {
        stage: &'static str,
        #[source]
        source: IsoclinicMorphismError,
    },
    #[error("realized morphism at stage {stage} is not an {expected}")]
    WrongClass {
        stage: &'static str,
        expected: &'static str,
    },
}

/// What the probe built and confirmed.
#[derive(Debug)]
pub struct ProbeReport {
    pub witness: IsoclinismWitness,
    pub pullback_order: usize,
    pub factor_order: usize,
    pub epi_onto_first: MorphismClass,
    pub epi_onto_second: MorphismClass,
    pub mono_into_first_product: MorphismClass,
    pub mono_into_second_product: MorphismClass,
}

/// Constructively exercises the equivalence between isoclinism and the
/// pullback/product realizations: finds a witness, builds the pullback and
/// verifies its two projections are isoclinic epimorphisms, then embeds the
/// pullback into both product extensions (against the factor
/// `pullback carrier / its commutator`) and verifies isoclinic
/// monomorphisms. Any failure is surfaced as a counterexample.
pub fn equivalence_probe(
    e1: &RelativeExtension,
    e2: &RelativeExtension,
) -> Result<ProbeReport, ProbeFailure> {
    let witness = find_isoclinism(e1, e2).ok_or(ProbeFailure::NoWitness)?;
    let pb = construct_pullback(e1, e2, &witness.theta).map_err(|source| {
        ProbeFailure::Construct {
            stage: "pullback",
            source,
        }
    })?;
    let pbx = &pb.extension;

    let stage_check = |e_to: &RelativeExtension,
                       m: &ExtMorphism,
                       stage: &'static str,
                       expect_epi: bool|
     -> Result<MorphismClass, ProbeFailure> {
        let class = verify_isoclinic_morphism(pbx, e_to, m)
            .map_err(|source| ProbeFailure::Morphism { stage, source })?;
        let ok = if expect_epi {
            class.epimorphism
        } else {
            class.monomorphism
        };
        if !ok {
            return Err(ProbeFailure::WrongClass {
                stage,
                expected: if expect_epi {
                    "epimorphism"
                } else {
                    "monomorphism"
                },
            });
        }
        Ok(class)
    };

    let epi1 = stage_check(
        e1,
        &ExtMorphism {
            theta: MlaHom::identity(e1.g()),
            beta: pb.proj1.clone(),
        },
        "projection onto first",
        true,
    )?;
    let epi2 = stage_check(
        e2,
        &ExtMorphism {
            theta: witness.theta.clone(),
            beta: pb.proj2.clone(),
        },
        "projection onto second",
        true,
    )?;

    // The central factor: pullback carrier modulo its own commutator.
    let pb_comm = action_commutator(pbx);
    let q = algebra::quotient(pbx.l(), &pb_comm).expect("commutator is an ideal");
    let factor = q.algebra;
    if !factor.is_abelian() || !factor.star_is_trivial() {
        return Err(ProbeFailure::FactorNotCentral);
    }

    let nf = factor.order();
    let built1 = construct_product(e1, &factor).map_err(|source| ProbeFailure::Construct {
        stage: "first product",
        source,
    })?;
    let embed1: Vec<usize> = (0..pbx.l().order())
        .map(|p| pb.proj1.apply(p) * nf + q.projection.apply(p))
        .collect();
    let mono1 = stage_check(
        &built1.extension,
        &ExtMorphism {
            theta: MlaHom::identity(e1.g()),
            beta: MlaHom::new(pbx.l().clone(), built1.extension.l().clone(), embed1)
                .expect("embedding is well-shaped"),
        },
        "embedding into first product",
        false,
    )?;

    let built2 = construct_product(e2, &factor).map_err(|source| ProbeFailure::Construct {
        stage: "second product",
        source,
    })?;
    let embed2: Vec<usize> = (0..pbx.l().order())
        .map(|p| pb.proj2.apply(p) * nf + q.projection.apply(p))
        .collect();
    let mono2 = stage_check(
        &built2.extension,
        &ExtMorphism {
            theta: witness.theta.clone(),
            beta: MlaHom::new(pbx.l().clone(), built2.extension.l().clone(), embed2)
                .expect("embedding is well-shaped"),
        },
        "embedding into second product",
        false,
    )?;

    Ok(ProbeReport {
        witness,
        pullback_order: pbx.l().order(),
        factor_order: nf,
        epi_onto_first: epi1,
        epi_onto_second: epi2,
        mono_into_first_product: mono1,
        mono_into_second_product: mono2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::{construct_quotient, identity_extension};
    use crate::fixtures;
    use crate::groups;
    use std::sync::Arc;

    fn z2() -> Arc<FiniteMla> {
        Arc::new(groups::cyclic(2).with_trivial_star())
    }

    #[test]
    fn identity_witness_verifies_and_satisfies_consequences() {
        for a in [fixtures::s3c(), fixtures::d4b(), fixtures::v4a()] {
            let e = identity_extension(&a);
            let w = identity_witness(&e);
            verify_isoclinism(&e, &e, &w).unwrap();
            isoclinism_consequences(&e, &e, &w).unwrap();
        }
    }

    #[test]
    fn product_extension_is_isoclinic_to_the_original() {
        let e = identity_extension(&fixtures::s3c());
        let pe = construct_product(&e, &z2()).unwrap().extension;
        let w = find_isoclinism(&e, &pe).expect("witness exists");
        verify_isoclinism(&e, &pe, &w).unwrap();
        isoclinism_consequences(&e, &pe, &w).unwrap();

        // Symmetry: invert both maps.
        let back = IsoclinismWitness {
            theta: w.theta.inverse().unwrap(),
            beta: w.beta.inverse().unwrap(),
        };
        verify_isoclinism(&pe, &e, &back).unwrap();
    }

    #[test]
    fn quotient_extension_is_isoclinic_and_witnesses_compose() {
        let e = identity_extension(&fixtures::s3c());
        let pe = construct_product(&e, &z2()).unwrap().extension;
        let qe = construct_quotient(&pe, &pe.kernel()).unwrap().extension;

        let w1 = find_isoclinism(&e, &pe).expect("first witness");
        let w2 = find_isoclinism(&pe, &qe).expect("second witness");
        let composed = IsoclinismWitness {
            theta: w1.theta.compose(&w2.theta),
            beta: w1.beta.compose(&w2.beta),
        };
        verify_isoclinism(&e, &qe, &composed).unwrap();
    }

    #[test]
    fn no_witness_between_structurally_different_bases() {
        let e1 = identity_extension(&fixtures::s3c());
        let z6 = Arc::new(groups::cyclic(6).with_trivial_star());
        let e2 = identity_extension(&z6);
        assert!(find_isoclinism(&e1, &e2).is_none());
    }

    #[test]
    fn perturbed_beta_is_rejected() {
        let e = identity_extension(&fixtures::s3c());
        let good = identity_witness(&e);
        // The commutator subalgebra has order 3; swap its two non-identity
        // points. That map is a group automorphism of Z3, so it survives
        // the hom checks and must be caught by the transport equalities.
        let mut map = good.beta.map.clone();
        map.swap(1, 2);
        let bad = IsoclinismWitness {
            theta: good.theta.clone(),
            beta: MlaHom::new(
                good.beta.source.clone(),
                good.beta.target.clone(),
                map,
            )
            .unwrap(),
        };
        assert!(matches!(
            verify_isoclinism(&e, &e, &bad),
            Err(IsoclinismViolation::Displacement { .. } | IsoclinismViolation::Bracket { .. })
        ));
    }

    #[test]
    fn probe_passes_on_identity_and_product_pairs() {
        let e = identity_extension(&fixtures::s3c());
        let report = equivalence_probe(&e, &e).unwrap();
        assert!(report.epi_onto_first.epimorphism);
        assert!(report.epi_onto_second.epimorphism);
        assert!(report.mono_into_first_product.monomorphism);
        assert!(report.mono_into_second_product.monomorphism);
        assert_eq!(report.pullback_order, 6);

        let pe = construct_product(&e, &z2()).unwrap().extension;
        let report = equivalence_probe(&e, &pe).unwrap();
        assert_eq!(report.pullback_order, 12);
        assert!(report.epi_onto_second.epimorphism);
        assert!(report.mono_into_second_product.monomorphism);
    }
}
