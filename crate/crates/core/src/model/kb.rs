//! Knowledge bases: TBox axioms, ABox assertions, updates, and feature sets.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::model::{Concept, ConceptName, IndividualName, ModelError, RoleName, Signature};

/// A terminological axiom. Original axioms are kept verbatim (not
/// normalized); the candidate search inspects their left-hand sides.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TBoxAxiom {
    ConceptInclusion { lhs: Concept, rhs: Concept },
    RoleInclusion { sub: RoleName, sup: RoleName },
}

/// An assertional axiom. Concept assertions carry atomic names only;
/// complex concept assertions are rejected at the syntax level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Assertion {
    Concept(ConceptName, IndividualName),
    Role(RoleName, IndividualName, IndividualName),
}

impl Assertion {
    /// The individual the assertion is about: the subject of a role
    /// assertion, or the individual of a concept assertion.
    pub fn subject(&self) -> IndividualName {
        match self {
            Assertion::Concept(_, x) => *x,
            Assertion::Role(_, x, _) => *x,
        }
    }
}

/// An immutable ELH knowledge base: TBox, ABox, and signature.
///
/// Individual names are interpreted under the unique-name assumption.
/// All operations that "modify" a knowledge base return a new value; the
/// signature is shared behind an `Arc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnowledgeBase {
    signature: Arc<Signature>,
    tbox: BTreeSet<TBoxAxiom>,
    abox: BTreeSet<Assertion>,
}

impl KnowledgeBase {
    pub fn new(
        signature: Signature,
        tbox: BTreeSet<TBoxAxiom>,
        abox: BTreeSet<Assertion>,
    ) -> KnowledgeBase {
        KnowledgeBase {
            signature: Arc::new(signature),
            tbox,
            abox,
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn tbox(&self) -> &BTreeSet<TBoxAxiom> {
        &self.tbox
    }

    pub fn abox(&self) -> &BTreeSet<Assertion> {
        &self.abox
    }

    pub fn individuals(&self) -> impl Iterator<Item = IndividualName> + '_ {
        self.signature.individual_names()
    }

    /// The feature set of an individual: the concept names `D` with `D(x)`
    /// in the ABox and the role names `r` with some `r(x, y)` in the ABox.
    /// Incoming role assertions `r(y, x)` do not count as features of `x`.
    pub fn feature_set(&self, x: IndividualName) -> FeatureSet {
        let mut concept_names = BTreeSet::new();
        let mut role_names = BTreeSet::new();
        for assertion in &self.abox {
            match assertion {
                Assertion::Concept(name, subject) if *subject == x => {
                    concept_names.insert(*name);
                }
                Assertion::Role(role, subject, _) if *subject == x => {
                    role_names.insert(*role);
                }
                _ => {}
            }
        }
        FeatureSet {
            concept_names,
            role_names,
        }
    }

    /// All assertions whose subject is `x`.
    pub fn assertions_about(&self, x: IndividualName) -> Vec<Assertion> {
        self.abox
            .iter()
            .filter(|a| a.subject() == x)
            .copied()
            .collect()
    }

    /// Applies an update, returning the new knowledge base. The TBox is
    /// unchanged. Fails on infeasible change sets, on removals that are not
    /// asserted, and on additions that are already asserted.
    pub fn apply_changeset(&self, cs: &ChangeSet) -> Result<KnowledgeBase, ModelError> {
        if !cs.feasible() {
            return Err(ModelError::InfeasibleChangeSet);
        }
        let mut abox = self.abox.clone();
        for assertion in cs.removed() {
            if !abox.remove(assertion) {
                return Err(ModelError::RemovedAssertionMissing(
                    self.signature.render_assertion(assertion),
                ));
            }
        }
        for assertion in cs.added() {
            if !abox.insert(*assertion) {
                return Err(ModelError::AddedAssertionPresent(
                    self.signature.render_assertion(assertion),
                ));
            }
        }
        Ok(KnowledgeBase {
            signature: Arc::clone(&self.signature),
            tbox: self.tbox.clone(),
            abox,
        })
    }

    /// Returns the same knowledge base with extra assertions inserted,
    /// bypassing changeset bookkeeping. Used by materialization.
    pub(crate) fn with_assertions<I: IntoIterator<Item = Assertion>>(
        &self,
        extra: I,
    ) -> KnowledgeBase {
        let mut abox = self.abox.clone();
        abox.extend(extra);
        KnowledgeBase {
            signature: Arc::clone(&self.signature),
            tbox: self.tbox.clone(),
            abox,
        }
    }

    /// Returns the same knowledge base under an extended signature. The
    /// extension must preserve every existing id.
    pub(crate) fn with_signature(&self, signature: Signature) -> KnowledgeBase {
        KnowledgeBase {
            signature: Arc::new(signature),
            tbox: self.tbox.clone(),
            abox: self.abox.clone(),
        }
    }
}

/// An ABox delta turning one knowledge base into another.
///
/// `feasible == false` encodes the case where a candidate demands making
/// the top concept fail, which no update can do; such change sets carry no
/// assertions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChangeSet {
    removed: BTreeSet<Assertion>,
    added: BTreeSet<Assertion>,
    feasible: bool,
}

impl ChangeSet {
    pub fn new(
        removed: BTreeSet<Assertion>,
        added: BTreeSet<Assertion>,
    ) -> Result<ChangeSet, ModelError> {
        if removed.intersection(&added).next().is_some() {
            return Err(ModelError::OverlappingChangeSet);
        }
        Ok(ChangeSet {
            removed,
            added,
            feasible: true,
        })
    }

    pub fn removal(removed: BTreeSet<Assertion>) -> ChangeSet {
        ChangeSet {
            removed,
            added: BTreeSet::new(),
            feasible: true,
        }
    }

    pub fn addition(added: BTreeSet<Assertion>) -> ChangeSet {
        ChangeSet {
            removed: BTreeSet::new(),
            added,
            feasible: true,
        }
    }

    pub fn infeasible() -> ChangeSet {
        ChangeSet {
            removed: BTreeSet::new(),
            added: BTreeSet::new(),
            feasible: false,
        }
    }

    pub fn empty() -> ChangeSet {
        ChangeSet::removal(BTreeSet::new())
    }

    pub fn removed(&self) -> &BTreeSet<Assertion> {
        &self.removed
    }

    pub fn added(&self) -> &BTreeSet<Assertion> {
        &self.added
    }

    pub fn feasible(&self) -> bool {
        self.feasible
    }

    pub fn is_empty(&self) -> bool {
        self.removed.is_empty() && self.added.is_empty()
    }

    /// The inverse update: applying it to the updated knowledge base
    /// restores the original one.
    pub fn inverted(&self) -> ChangeSet {
        ChangeSet {
            removed: self.added.clone(),
            added: self.removed.clone(),
            feasible: self.feasible,
        }
    }

    /// Checks locality with respect to `kb` and the target individual:
    /// every removed assertion has subject `x`, and every added assertion
    /// has subject `x` or a fresh individual not in `kb`'s signature.
    pub fn is_local(&self, kb: &KnowledgeBase, x: IndividualName) -> bool {
        let known = kb.signature().individual_count() as u32;
        self.removed.iter().all(|a| a.subject() == x)
            && self
                .added
                .iter()
                .all(|a| a.subject() == x || a.subject().0 >= known)
    }
}

/// The concept and role names an individual exhibits in an ABox.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FeatureSet {
    pub concept_names: BTreeSet<ConceptName>,
    pub role_names: BTreeSet<RoleName>,
}

impl FeatureSet {
    pub fn len(&self) -> usize {
        self.concept_names.len() + self.role_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concept_names.is_empty() && self.role_names.is_empty()
    }

    /// Size of the symmetric difference, taken separately over concept and
    /// role names and summed. This is the edit distance of Eq. form
    /// `|Δ(A_K^x, A_K'^x)|` when applied to before/after feature sets.
    pub fn symmetric_difference_size(&self, other: &FeatureSet) -> usize {
        let concepts = self
            .concept_names
            .symmetric_difference(&other.concept_names)
            .count();
        let roles = self
            .role_names
            .symmetric_difference(&other.role_names)
            .count();
        concepts + roles
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{SignatureBuilder, SymbolKind};

    fn sig(concepts: &[&str], roles: &[&str], individuals: &[&str]) -> Signature {
        let mut builder = SignatureBuilder::new();
        for c in concepts {
            builder.declare(c, SymbolKind::Concept).unwrap();
        }
        for r in roles {
            builder.declare(r, SymbolKind::Role).unwrap();
        }
        for i in individuals {
            builder.declare(i, SymbolKind::Individual).unwrap();
        }
        builder.build()
    }

    fn example1() -> KnowledgeBase {
        // T = {B and C SubClassOf D}, A = {B(x), C(x), D(x)}
        let signature = sig(&["B", "C", "D"], &[], &["x"]);
        let b = signature.concept("B").unwrap();
        let c = signature.concept("C").unwrap();
        let d = signature.concept("D").unwrap();
        let x = signature.individual("x").unwrap();
        let tbox = BTreeSet::from([TBoxAxiom::ConceptInclusion {
            lhs: Concept::and([Concept::Atomic(b), Concept::Atomic(c)]),
            rhs: Concept::Atomic(d),
        }]);
        let abox = BTreeSet::from([
            Assertion::Concept(b, x),
            Assertion::Concept(c, x),
            Assertion::Concept(d, x),
        ]);
        KnowledgeBase::new(signature, tbox, abox)
    }

    #[test]
    fn feature_set_collects_subject_position_names() {
        let kb = example1();
        let x = kb.signature().individual("x").unwrap();
        let features = kb.feature_set(x);
        assert_eq!(features.concept_names.len(), 3);
        assert!(features.role_names.is_empty());
    }

    #[test]
    fn feature_set_excludes_incoming_edges() {
        let signature = sig(&["Female", "Male"], &["hasSibling"], &["a", "x"]);
        let male = signature.concept("Male").unwrap();
        let female = signature.concept("Female").unwrap();
        let sib = signature.role("hasSibling").unwrap();
        let x = signature.individual("x").unwrap();
        let a = signature.individual("a").unwrap();
        let abox = BTreeSet::from([
            Assertion::Concept(male, x),
            Assertion::Role(sib, x, a),
            Assertion::Concept(female, a),
        ]);
        let kb = KnowledgeBase::new(signature, BTreeSet::new(), abox);

        let fx = kb.feature_set(x);
        assert_eq!(fx.concept_names, BTreeSet::from([male]));
        assert_eq!(fx.role_names, BTreeSet::from([sib]));

        let fa = kb.feature_set(a);
        assert_eq!(fa.concept_names, BTreeSet::from([female]));
        assert!(fa.role_names.is_empty(), "incoming edge must not count");
    }

    #[test]
    fn feature_set_of_unused_individual_is_empty() {
        let signature = sig(&[], &[], &["x"]);
        let kb = KnowledgeBase::new(signature, BTreeSet::new(), BTreeSet::new());
        let x = kb.signature().individual("x").unwrap();
        assert!(kb.feature_set(x).is_empty());
    }

    #[test]
    fn apply_changeset_removes_and_keeps_original() {
        let kb = example1();
        let c = kb.signature().concept("C").unwrap();
        let d = kb.signature().concept("D").unwrap();
        let x = kb.signature().individual("x").unwrap();
        let cs = ChangeSet::removal(BTreeSet::from([
            Assertion::Concept(c, x),
            Assertion::Concept(d, x),
        ]));
        let updated = kb.apply_changeset(&cs).unwrap();
        assert_eq!(updated.abox().len(), 1);
        assert_eq!(kb.abox().len(), 3, "original untouched");
        assert_eq!(updated.tbox(), kb.tbox());
    }

    #[test]
    fn apply_empty_changeset_is_identity() {
        let kb = example1();
        let updated = kb.apply_changeset(&ChangeSet::empty()).unwrap();
        assert_eq!(updated, kb);
    }

    #[test]
    fn apply_addition_on_empty_abox() {
        let signature = sig(&["Male"], &[], &["x"]);
        let male = signature.concept("Male").unwrap();
        let x = signature.individual("x").unwrap();
        let kb = KnowledgeBase::new(signature, BTreeSet::new(), BTreeSet::new());
        let cs = ChangeSet::addition(BTreeSet::from([Assertion::Concept(male, x)]));
        let updated = kb.apply_changeset(&cs).unwrap();
        assert_eq!(updated.abox().len(), 1);
    }

    #[test]
    fn apply_then_invert_restores_original() {
        let kb = example1();
        let b = kb.signature().concept("B").unwrap();
        let x = kb.signature().individual("x").unwrap();
        let cs = ChangeSet::removal(BTreeSet::from([Assertion::Concept(b, x)]));
        let updated = kb.apply_changeset(&cs).unwrap();
        let restored = updated.apply_changeset(&cs.inverted()).unwrap();
        assert_eq!(restored, kb);
    }

    #[test]
    fn apply_rejects_bad_changesets() {
        let kb = example1();
        let b = kb.signature().concept("B").unwrap();
        let x = kb.signature().individual("x").unwrap();

        let err = kb.apply_changeset(&ChangeSet::infeasible()).unwrap_err();
        assert!(matches!(err, ModelError::InfeasibleChangeSet));

        let present = ChangeSet::addition(BTreeSet::from([Assertion::Concept(b, x)]));
        assert!(kb.apply_changeset(&present).is_err());

        let gone = ChangeSet::removal(BTreeSet::from([Assertion::Concept(b, x)]));
        let smaller = kb.apply_changeset(&gone).unwrap();
        assert!(smaller.apply_changeset(&gone).is_err());
    }

    #[test]
    fn changeset_rejects_overlap() {
        let kb = example1();
        let b = kb.signature().concept("B").unwrap();
        let x = kb.signature().individual("x").unwrap();
        let overlap = ChangeSet::new(
            BTreeSet::from([Assertion::Concept(b, x)]),
            BTreeSet::from([Assertion::Concept(b, x)]),
        );
        assert!(overlap.is_err());
    }
}
