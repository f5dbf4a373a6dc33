//! Interned symbol names and the knowledge-base signature.
//!
//! All concept, role, and individual names are interned into small integer
//! ids so that set operations downstream (symmetric differences, hitting
//! sets, saturation labels) work on integers instead of strings. The three
//! namespaces are disjoint: one lexical name may not be used both as a
//! concept and as a role within the same knowledge base.

use std::collections::HashMap;
use std::fmt;

use crate::model::ModelError;

/// The namespace a symbol belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolKind {
    Concept,
    Role,
    Individual,
}

impl fmt::Display for SymbolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolKind::Concept => write!(f, "concept"),
            SymbolKind::Role => write!(f, "role"),
            SymbolKind::Individual => write!(f, "individual"),
        }
    }
}

/// Interned id of an atomic concept name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConceptName(pub(crate) u32);

/// Interned id of a role name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RoleName(pub(crate) u32);

/// Interned id of an individual name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndividualName(pub(crate) u32);

impl ConceptName {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl RoleName {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl IndividualName {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The symbol tables of one knowledge base.
///
/// Built through [`SignatureBuilder`], which assigns ids in lexicographic
/// order of the names. Two independently parsed, textually equal knowledge
/// bases therefore get identical id assignments, which makes structural
/// equality of parsed knowledge bases meaningful.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Signature {
    concepts: Vec<String>,
    roles: Vec<String>,
    individuals: Vec<String>,
    by_text: HashMap<String, (SymbolKind, u32)>,
}

impl Signature {
    pub fn concept(&self, text: &str) -> Option<ConceptName> {
        match self.by_text.get(text) {
            Some((SymbolKind::Concept, id)) => Some(ConceptName(*id)),
            _ => None,
        }
    }

    pub fn role(&self, text: &str) -> Option<RoleName> {
        match self.by_text.get(text) {
            Some((SymbolKind::Role, id)) => Some(RoleName(*id)),
            _ => None,
        }
    }

    pub fn individual(&self, text: &str) -> Option<IndividualName> {
        match self.by_text.get(text) {
            Some((SymbolKind::Individual, id)) => Some(IndividualName(*id)),
            _ => None,
        }
    }

    pub fn kind_of(&self, text: &str) -> Option<SymbolKind> {
        self.by_text.get(text).map(|(kind, _)| *kind)
    }

    pub fn concept_text(&self, name: ConceptName) -> &str {
        &self.concepts[name.index()]
    }

    pub fn role_text(&self, name: RoleName) -> &str {
        &self.roles[name.index()]
    }

    pub fn individual_text(&self, name: IndividualName) -> &str {
        &self.individuals[name.index()]
    }

    pub fn concept_count(&self) -> usize {
        self.concepts.len()
    }

    pub fn role_count(&self) -> usize {
        self.roles.len()
    }

    pub fn individual_count(&self) -> usize {
        self.individuals.len()
    }

    pub fn concept_names(&self) -> impl Iterator<Item = ConceptName> + '_ {
        (0..self.concepts.len() as u32).map(ConceptName)
    }

    pub fn role_names(&self) -> impl Iterator<Item = RoleName> + '_ {
        (0..self.roles.len() as u32).map(RoleName)
    }

    pub fn individual_names(&self) -> impl Iterator<Item = IndividualName> + '_ {
        (0..self.individuals.len() as u32).map(IndividualName)
    }

    /// Appends a new individual name, used when an update introduces fresh
    /// individuals. The name must not collide with any existing symbol.
    pub fn add_individual(&mut self, text: &str) -> Result<IndividualName, ModelError> {
        if let Some((kind, _)) = self.by_text.get(text) {
            return Err(ModelError::KindConflict {
                name: text.to_string(),
                existing: *kind,
                requested: SymbolKind::Individual,
            });
        }
        let id = self.individuals.len() as u32;
        self.individuals.push(text.to_string());
        self.by_text
            .insert(text.to_string(), (SymbolKind::Individual, id));
        Ok(IndividualName(id))
    }
}

/// Collects name declarations, then interns them sorted per namespace.
#[derive(Debug, Default)]
pub struct SignatureBuilder {
    declared: HashMap<String, SymbolKind>,
}

impl SignatureBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a name in a namespace. A name may be declared repeatedly
    /// with the same kind; declaring it with a different kind is an error.
    pub fn declare(&mut self, text: &str, kind: SymbolKind) -> Result<(), ModelError> {
        match self.declared.get(text) {
            None => {
                self.declared.insert(text.to_string(), kind);
                Ok(())
            }
            Some(existing) if *existing == kind => Ok(()),
            Some(existing) => Err(ModelError::KindConflict {
                name: text.to_string(),
                existing: *existing,
                requested: kind,
            }),
        }
    }

    pub fn build(self) -> Signature {
        let mut concepts = Vec::new();
        let mut roles = Vec::new();
        let mut individuals = Vec::new();
        for (text, kind) in &self.declared {
            match kind {
                SymbolKind::Concept => concepts.push(text.clone()),
                SymbolKind::Role => roles.push(text.clone()),
                SymbolKind::Individual => individuals.push(text.clone()),
            }
        }
        concepts.sort();
        roles.sort();
        individuals.sort();
        let mut by_text = HashMap::new();
        for (id, text) in concepts.iter().enumerate() {
            by_text.insert(text.clone(), (SymbolKind::Concept, id as u32));
        }
        for (id, text) in roles.iter().enumerate() {
            by_text.insert(text.clone(), (SymbolKind::Role, id as u32));
        }
        for (id, text) in individuals.iter().enumerate() {
            by_text.insert(text.clone(), (SymbolKind::Individual, id as u32));
        }
        Signature {
            concepts,
            roles,
            individuals,
            by_text,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_follow_lexicographic_order() {
        let mut builder = SignatureBuilder::new();
        builder.declare("Zebra", SymbolKind::Concept).unwrap();
        builder.declare("Apple", SymbolKind::Concept).unwrap();
        builder.declare("hasPart", SymbolKind::Role).unwrap();
        let sig = builder.build();
        assert_eq!(sig.concept_text(ConceptName(0)), "Apple");
        assert_eq!(sig.concept_text(ConceptName(1)), "Zebra");
        assert_eq!(sig.role("hasPart"), Some(RoleName(0)));
    }

    #[test]
    fn namespaces_are_disjoint() {
        let mut builder = SignatureBuilder::new();
        builder.declare("Male", SymbolKind::Concept).unwrap();
        let err = builder.declare("Male", SymbolKind::Role).unwrap_err();
        assert!(matches!(err, ModelError::KindConflict { .. }));
    }

    #[test]
    fn redeclaring_same_kind_is_fine() {
        let mut builder = SignatureBuilder::new();
        builder.declare("anna", SymbolKind::Individual).unwrap();
        builder.declare("anna", SymbolKind::Individual).unwrap();
        let sig = builder.build();
        assert_eq!(sig.individual_count(), 1);
    }

    #[test]
    fn fresh_individual_collision_is_rejected() {
        let mut builder = SignatureBuilder::new();
        builder.declare("Male", SymbolKind::Concept).unwrap();
        let mut sig = builder.build();
        assert!(sig.add_individual("Male").is_err());
        let fresh = sig.add_individual("_cf_fresh_0").unwrap();
        assert_eq!(sig.individual_text(fresh), "_cf_fresh_0");
    }
}
