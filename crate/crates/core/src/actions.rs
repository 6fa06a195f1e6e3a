//! Mutual actions of two multiplicative Lie algebras: each side acts on the
//! other by automorphisms, and bracket maps `⟨·,·⟩` connect the two carriers
//! in both directions. Verifiers check the four bracket axioms, the five
//! compatibility conditions, and the displacement identity that ties
//! `[⟨g,h⟩, h']`, `⟨g·ʰ(g⁻¹), h'⟩`, and `(ᵍh·h⁻¹) ⋆ h'` together.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{FiniteMla, StructuralError};

/// Which of the two symmetric directions a violation was found in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// The left algebra acting on the right one.
    LeftOnRight,
    /// The right algebra acting on the left one.
    RightOnLeft,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::LeftOnRight => f.write_str("left on right"),
            Direction::RightOnLeft => f.write_str("right on left"),
        }
    }
}

/// An action-law failure: lowest-numbered law, direction (left-on-right
/// checked first), and the lexicographically least witness in loop order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionViolation {
    #[error("group-action law {law} fails ({direction}) at witness {witness:?}")]
    GroupAction {
        law: u8,
        direction: Direction,
        witness: Vec<usize>,
    },
    #[error("bracket axiom {axiom} fails ({direction}) at witness {witness:?}")]
    Bracket {
        axiom: u8,
        direction: Direction,
        witness: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("compatibility condition {condition} fails ({direction}) at witness {witness:?}")]
pub struct CompatibilityViolation {
    pub condition: u8,
    pub direction: Direction,
    pub witness: Vec<usize>,
}

/// Failure of the three-way displacement identity, with all three values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("displacement identity fails at (g, h, h') = {witness:?}: terms {terms:?}")]
pub struct DisplacementViolation {
    pub witness: [usize; 3],
    pub terms: [usize; 3],
}

fn check_rect(
    table: &'static str,
    rows: usize,
    cols: usize,
    bound: usize,
    data: &[usize],
) -> Result<(), StructuralError> {
    if data.len() != rows * cols {
        return Err(StructuralError::BadTableSize {
            table,
            got: data.len(),
            expected: rows * cols,
        });
    }
    for (idx, &value) in data.iter().enumerate() {
        if value >= bound {
            return Err(StructuralError::EntryOutOfRange {
                table,
                row: idx / cols,
                col: idx % cols,
                value,
                order: bound,
            });
        }
    }
    Ok(())
}

/// A pair of algebras acting on each other, with bracket maps both ways.
///
/// Tables are row-major with the acting element as row: `act_gl[g][l]` is
/// `ᵍl ∈ L`, `brk_gl[g][l]` is `⟨g, l⟩ ∈ L`, `act_lg[l][g]` is `ˡg ∈ G`,
/// and `brk_lg[l][g]` is `⟨l, g⟩ ∈ G`. Construction checks shape only; the
/// laws live in [`MutualAction::verify_action`] and
/// [`MutualAction::verify_compatibility`].
#[derive(Clone)]
pub struct MutualAction {
    pub left: Arc<FiniteMla>,
    pub right: Arc<FiniteMla>,
    act_gl: Vec<usize>,
    brk_gl: Vec<usize>,
    act_lg: Vec<usize>,
    brk_lg: Vec<usize>,
}

impl fmt::Debug for MutualAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MutualAction(left order {}, right order {})",
            self.left.order(),
            self.right.order()
        )
    }
}

impl MutualAction {
    pub fn new(
        left: Arc<FiniteMla>,
        right: Arc<FiniteMla>,
        act_gl: Vec<usize>,
        brk_gl: Vec<usize>,
        act_lg: Vec<usize>,
        brk_lg: Vec<usize>,
    ) -> Result<Self, StructuralError> {
        let (ng, nl) = (left.order(), right.order());
        check_rect("act_gl", ng, nl, nl, &act_gl)?;
        check_rect("brk_gl", ng, nl, nl, &brk_gl)?;
        check_rect("act_lg", nl, ng, ng, &act_lg)?;
        check_rect("brk_lg", nl, ng, ng, &brk_lg)?;
        Ok(MutualAction {
            left,
            right,
            act_gl,
            brk_gl,
            act_lg,
            brk_lg,
        })
    }

    #[inline]
    pub fn act_gl(&self, g: usize, l: usize) -> usize {
        self.act_gl[g * self.right.order() + l]
    }

    #[inline]
    pub fn brk_gl(&self, g: usize, l: usize) -> usize {
        self.brk_gl[g * self.right.order() + l]
    }

    #[inline]
    pub fn act_lg(&self, l: usize, g: usize) -> usize {
        self.act_lg[l * self.left.order() + g]
    }

    #[inline]
    pub fn brk_lg(&self, l: usize, g: usize) -> usize {
        self.brk_lg[l * self.left.order() + g]
    }

    pub fn act_gl_table(&self) -> &[usize] {
        &self.act_gl
    }

    pub fn brk_gl_table(&self) -> &[usize] {
        &self.brk_gl
    }

    pub fn act_lg_table(&self) -> &[usize] {
        &self.act_lg
    }

    pub fn brk_lg_table(&self) -> &[usize] {
        &self.brk_lg
    }

    fn views(&self) -> [View<'_>; 2] {
        [
            View {
                x: &self.left,
                y: &self.right,
                axy: &self.act_gl,
                ayx: &self.act_lg,
                bxy: &self.brk_gl,
                byx: &self.brk_lg,
                direction: Direction::LeftOnRight,
            },
            View {
                x: &self.right,
                y: &self.left,
                axy: &self.act_lg,
                ayx: &self.act_gl,
                bxy: &self.brk_lg,
                byx: &self.brk_gl,
                direction: Direction::RightOnLeft,
            },
        ]
    }

    /// Checks that both group actions are actions by automorphisms (laws
    /// 1–4) and that the four bracket axioms hold, in both directions.
    /// Violations are ordered by (law/axiom number, direction, witness).
    pub fn verify_action(&self) -> Result<(), ActionViolation> {
        for law in 1..=4u8 {
            for v in self.views() {
                if let Some(witness) = v.action_law_failure(law) {
                    return Err(ActionViolation::GroupAction {
                        law,
                        direction: v.direction,
                        witness,
                    });
                }
            }
        }
        for axiom in 1..=4u8 {
            for v in self.views() {
                if let Some(witness) = v.bracket_axiom_failure(axiom) {
                    return Err(ActionViolation::Bracket {
                        axiom,
                        direction: v.direction,
                        witness,
                    });
                }
            }
        }
        // The bracket annihilates identities; forced by axioms 1 and 2.
        #[cfg(debug_assertions)]
        for v in self.views() {
            for g in 0..v.x.order() {
                debug_assert_eq!(v.bxy(g, 0), 0);
            }
            for h in 0..v.y.order() {
                debug_assert_eq!(v.bxy(0, h), 0);
            }
        }
        Ok(())
    }

    /// Checks the five compatibility conditions in both directions,
    /// ordered by (condition number, direction, witness).
    pub fn verify_compatibility(&self) -> Result<(), CompatibilityViolation> {
        for condition in 1..=5u8 {
            for v in self.views() {
                if let Some(witness) = v.compatibility_failure(condition) {
                    return Err(CompatibilityViolation {
                        condition,
                        direction: v.direction,
                        witness,
                    });
                }
            }
        }
        Ok(())
    }

    /// Checks `[⟨g,h⟩, h'] = ⟨g·ʰ(g⁻¹), h'⟩ = (ᵍh·h⁻¹) ⋆ h'` over all
    /// `g` in the left algebra and `h, h'` in the right one. Holds on every
    /// compatible mutual action; a failure is a finding, never suppressed.
    pub fn displacement_identity_check(&self) -> Result<(), DisplacementViolation> {
        let (gx, ly) = (&self.left, &self.right);
        for g in 0..gx.order() {
            for h in 0..ly.order() {
                for hp in 0..ly.order() {
                    let t1 = ly.comm(self.brk_gl(g, h), hp);
                    let shifted = gx.mul(g, self.act_lg(h, gx.inv(g)));
                    let t2 = self.brk_gl(shifted, hp);
                    let displaced = ly.mul(self.act_gl(g, h), ly.inv(h));
                    let t3 = ly.star(displaced, hp);
                    if t1 != t2 || t2 != t3 {
                        return Err(DisplacementViolation {
                            witness: [g, h, hp],
                            terms: [t1, t2, t3],
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

struct View<'a> {
    x: &'a FiniteMla,
    y: &'a FiniteMla,
    axy: &'a [usize],
    ayx: &'a [usize],
    bxy: &'a [usize],
    byx: &'a [usize],
    direction: Direction,
}

impl View<'_> {
    #[inline]
    fn axy(&self, g: usize, h: usize) -> usize {
        self.axy[g * self.y.order() + h]
    }

    #[inline]
    fn ayx(&self, h: usize, g: usize) -> usize {
        self.ayx[h * self.x.order() + g]
    }

    #[inline]
    fn bxy(&self, g: usize, h: usize) -> usize {
        self.bxy[g * self.y.order() + h]
    }

    #[inline]
    fn byx(&self, h: usize, g: usize) -> usize {
        self.byx[h * self.x.order() + g]
    }

    fn action_law_failure(&self, law: u8) -> Option<Vec<usize>> {
        let (x, y) = (self.x, self.y);
        match law {
            // The identity acts as the identity map.
            1 => {
                for h in 0..y.order() {
                    if self.axy(0, h) != h {
                        return Some(vec![h]);
                    }
                }
            }
            // Acting by a product composes: ^(gg')h = ᵍ(ᵍ'h).
            2 => {
                for g in 0..x.order() {
                    for gp in 0..x.order() {
                        for h in 0..y.order() {
                            if self.axy(x.mul(g, gp), h) != self.axy(g, self.axy(gp, h)) {
                                return Some(vec![g, gp, h]);
                            }
                        }
                    }
                }
            }
            // Each element acts as a group automorphism.
            3 => {
                for g in 0..x.order() {
                    for h in 0..y.order() {
                        for hp in 0..y.order() {
                            if self.axy(g, y.mul(h, hp))
                                != y.mul(self.axy(g, h), self.axy(g, hp))
                            {
                                return Some(vec![g, h, hp]);
                            }
                        }
                    }
                }
            }
            // Each element acts as a star automorphism.
            4 => {
                for g in 0..x.order() {
                    for h in 0..y.order() {
                        for hp in 0..y.order() {
                            if self.axy(g, y.star(h, hp))
                                != y.star(self.axy(g, h), self.axy(g, hp))
                            {
                                return Some(vec![g, h, hp]);
                            }
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
        None
    }

    fn bracket_axiom_failure(&self, axiom: u8) -> Option<Vec<usize>> {
        let (x, y) = (self.x, self.y);
        match axiom {
            // ⟨g, hh'⟩ = ⟨g, h⟩ ⟨ʰg, ʰh'⟩
            1 => {
                for g in 0..x.order() {
                    for h in 0..y.order() {
                        for hp in 0..y.order() {
                            let lhs = self.bxy(g, y.mul(h, hp));
                            let rhs =
                                y.mul(self.bxy(g, h), self.bxy(self.ayx(h, g), y.conj(h, hp)));
                            if lhs != rhs {
                                return Some(vec![g, h, hp]);
                            }
                        }
                    }
                }
            }
            // ⟨gg', h⟩ = ⟨ᵍg', ᵍh⟩ ⟨g, h⟩
            2 => {
                for g in 0..x.order() {
                    for gp in 0..x.order() {
                        for h in 0..y.order() {
                            let lhs = self.bxy(x.mul(g, gp), h);
                            let rhs =
                                y.mul(self.bxy(x.conj(g, gp), self.axy(g, h)), self.bxy(g, h));
                            if lhs != rhs {
                                return Some(vec![g, gp, h]);
                            }
                        }
                    }
                }
            }
            // ⟨g⋆g', ᵍ'h⟩ ⟨ʰg, ⟨g',h⟩⟩⁻¹ ⟨ᵍg', ⟨g,h⟩⁻¹⟩⁻¹ = 1
            3 => {
                for g in 0..x.order() {
                    for gp in 0..x.order() {
                        for h in 0..y.order() {
                            let t1 = self.bxy(x.star(g, gp), self.axy(gp, h));
                            let t2 = self.bxy(self.ayx(h, g), self.bxy(gp, h));
                            let t3 = self.bxy(x.conj(g, gp), y.inv(self.bxy(g, h)));
                            if y.mul(y.mul(t1, y.inv(t2)), y.inv(t3)) != 0 {
                                return Some(vec![g, gp, h]);
                            }
                        }
                    }
                }
            }
            // ⟨^h'g, h⋆h'⟩ (ʰh' ⋆ ⟨g,h⟩) (ᵍh ⋆ ⟨g,h'⟩⁻¹) = 1
            4 => {
                for g in 0..x.order() {
                    for h in 0..y.order() {
                        for hp in 0..y.order() {
                            let t1 = self.bxy(self.ayx(hp, g), y.star(h, hp));
                            let t2 = y.star(y.conj(h, hp), self.bxy(g, h));
                            let t3 = y.star(self.axy(g, h), y.inv(self.bxy(g, hp)));
                            if y.mul(y.mul(t1, t2), t3) != 0 {
                                return Some(vec![g, h, hp]);
                            }
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
        None
    }

    fn compatibility_failure(&self, condition: u8) -> Option<Vec<usize>> {
        let (x, y) = (self.x, self.y);
        match condition {
            // ^(ᵍh)g' = ᵍ(ʰ(^g⁻¹ g')): mixed exponents compose left to right.
            1 => {
                for g in 0..x.order() {
                    for h in 0..y.order() {
                        for gp in 0..x.order() {
                            let lhs = self.ayx(self.axy(g, h), gp);
                            let rhs = x.conj(g, self.ayx(h, x.conj(x.inv(g), gp)));
                            if lhs != rhs {
                                return Some(vec![g, h, gp]);
                            }
                        }
                    }
                }
            }
            // ⟨⟨h,g⟩⁻¹, h'⟩ = ⟨g,h⟩ ⋆ h'
            2 => {
                for g in 0..x.order() {
                    for h in 0..y.order() {
                        for hp in 0..y.order() {
                            let lhs = self.bxy(x.inv(self.byx(h, g)), hp);
                            let rhs = y.star(self.bxy(g, h), hp);
                            if lhs != rhs {
                                return Some(vec![g, h, hp]);
                            }
                        }
                    }
                }
            }
            // ^(⟨g,h⟩⟨h,g⟩)h' = h'
            3 => {
                for g in 0..x.order() {
                    for h in 0..y.order() {
                        for hp in 0..y.order() {
                            let inner = self.axy(self.byx(h, g), hp);
                            if y.conj(self.bxy(g, h), inner) != hp {
                                return Some(vec![g, h, hp]);
                            }
                        }
                    }
                }
            }
            // ᵍ⟨h, g'⟩ = ⟨ᵍh, ᵍg'⟩
            4 => {
                for g in 0..x.order() {
                    for h in 0..y.order() {
                        for gp in 0..x.order() {
                            let lhs = x.conj(g, self.byx(h, gp));
                            let rhs = self.byx(self.axy(g, h), x.conj(g, gp));
                            if lhs != rhs {
                                return Some(vec![g, h, gp]);
                            }
                        }
                    }
                }
            }
            // ⟨g·ʰ(g⁻¹), h'⟩ = (ᵍh·h⁻¹) ⋆ h'
            5 => {
                for g in 0..x.order() {
                    for h in 0..y.order() {
                        for hp in 0..y.order() {
                            let lhs = self.bxy(x.mul(g, self.ayx(h, x.inv(g))), hp);
                            let rhs = y.star(y.mul(self.axy(g, h), y.inv(h)), hp);
                            if lhs != rhs {
                                return Some(vec![g, h, hp]);
                            }
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
        None
    }
}

/// The canonical self-action: both group actions are conjugation and both
/// brackets are the star of `a`. Submitted to the verifiers like any other
/// action, never assumed valid.
pub fn conjugation_action(a: &Arc<FiniteMla>) -> MutualAction {
    let n = a.order();
    let mut conj = vec![0usize; n * n];
    for g in 0..n {
        for h in 0..n {
            conj[g * n + h] = a.conj(g, h);
        }
    }
    let star = a.star_table().to_vec();
    MutualAction::new(a.clone(), a.clone(), conj.clone(), star.clone(), conj, star)
        .expect("conjugation tables are well-shaped")
}

/// Both sides fix each other pointwise and both brackets are constantly
/// the identity.
pub fn trivial_action(left: &Arc<FiniteMla>, right: &Arc<FiniteMla>) -> MutualAction {
    let (ng, nl) = (left.order(), right.order());
    let mut act_gl = vec![0usize; ng * nl];
    for g in 0..ng {
        for l in 0..nl {
            act_gl[g * nl + l] = l;
        }
    }
    let mut act_lg = vec![0usize; nl * ng];
    for l in 0..nl {
        for g in 0..ng {
            act_lg[l * ng + g] = g;
        }
    }
    MutualAction::new(
        left.clone(),
        right.clone(),
        act_gl,
        vec![0; ng * nl],
        act_lg,
        vec![0; nl * ng],
    )
    .expect("trivial tables are well-shaped")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    fn verify_all(action: &MutualAction) {
        action.verify_action().unwrap();
        action.verify_compatibility().unwrap();
        action.displacement_identity_check().unwrap();
    }

    #[test]
    fn trivial_action_between_small_algebras_passes() {
        let z2 = Arc::new(groups::cyclic(2).with_trivial_star());
        verify_all(&trivial_action(&z2, &z2));
        // Also between algebras with nontrivial star.
        let s3c = Arc::new(groups::symmetric(3).with_commutator_star());
        verify_all(&trivial_action(&s3c, &z2));
    }

    #[test]
    fn conjugation_action_passes_on_commutator_star_algebras() {
        for a in [
            groups::symmetric(3).with_commutator_star(),
            groups::dihedral(4).with_commutator_star(),
            groups::quaternion().with_commutator_star(),
            groups::cyclic(6).with_trivial_star(),
        ] {
            verify_all(&conjugation_action(&Arc::new(a)));
        }
    }

    #[test]
    fn perturbed_bracket_is_rejected_with_witness() {
        let s3c = Arc::new(groups::symmetric(3).with_commutator_star());
        let good = conjugation_action(&s3c);
        let mut brk = good.brk_gl_table().to_vec();
        // ⟨(12), (123)⟩ moved to a wrong value.
        brk[2 * 6 + 3] = if brk[2 * 6 + 3] == 0 { 1 } else { 0 };
        let bad = MutualAction::new(
            s3c.clone(),
            s3c.clone(),
            good.act_gl_table().to_vec(),
            brk,
            good.act_lg_table().to_vec(),
            good.brk_lg_table().to_vec(),
        )
        .unwrap();
        assert!(matches!(
            bad.verify_action(),
            Err(ActionViolation::Bracket { .. })
        ));
    }

    #[test]
    fn perturbed_action_table_fails_a_group_action_law() {
        let q8 = Arc::new(groups::quaternion().with_commutator_star());
        let good = conjugation_action(&q8);
        let mut act = good.act_gl_table().to_vec();
        // Identity row must act trivially; breaking it hits law 1 first.
        act[0 * 8 + 2] = 3;
        let bad = MutualAction::new(
            q8.clone(),
            q8.clone(),
            act,
            good.brk_gl_table().to_vec(),
            good.act_lg_table().to_vec(),
            good.brk_lg_table().to_vec(),
        )
        .unwrap();
        assert_eq!(
            bad.verify_action(),
            Err(ActionViolation::GroupAction {
                law: 1,
                direction: Direction::LeftOnRight,
                witness: vec![2]
            })
        );
    }

    #[test]
    fn dimension_mismatch_is_a_structural_error() {
        let z2 = Arc::new(groups::cyclic(2).with_trivial_star());
        let z3 = Arc::new(groups::cyclic(3).with_trivial_star());
        let err = MutualAction::new(
            z2.clone(),
            z3.clone(),
            vec![0; 4], // should be 2×3
            vec![0; 6],
            vec![0; 6],
            vec![0; 6],
        );
        assert!(matches!(err, Err(StructuralError::BadTableSize { .. })));
    }
}
