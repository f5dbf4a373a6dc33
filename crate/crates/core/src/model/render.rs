//! Canonical text rendering of concepts, assertions, and axioms.
//!
//! The rendering is the inverse of the parser grammar: `Thing`, `and`,
//! `some`, `SubClassOf`, `SubRoleOf`. Non-atomic existential fillers are
//! parenthesized. Equal values always render to equal strings, which gives
//! the deterministic tie-break ordering used when ranking counterfactuals.

use crate::model::{Assertion, Concept, Signature, TBoxAxiom};

impl Signature {
    pub fn render_concept(&self, concept: &Concept) -> String {
        match concept {
            Concept::And(parts) => {
                let rendered: Vec<String> = parts.iter().map(|p| self.render_prim(p)).collect();
                rendered.join(" and ")
            }
            other => self.render_prim(other),
        }
    }

    fn render_prim(&self, concept: &Concept) -> String {
        match concept {
            Concept::Top => "Thing".to_string(),
            Concept::Atomic(name) => self.concept_text(*name).to_string(),
            Concept::Exists(role, filler) => {
                let filler_text = match filler.as_ref() {
                    Concept::Top | Concept::Atomic(_) => self.render_prim(filler),
                    nested => format!("({})", self.render_concept(nested)),
                };
                format!("{} some {}", self.role_text(*role), filler_text)
            }
            Concept::And(_) => format!("({})", self.render_concept(concept)),
        }
    }

    pub fn render_assertion(&self, assertion: &Assertion) -> String {
        match assertion {
            Assertion::Concept(name, x) => {
                format!("{}({})", self.concept_text(*name), self.individual_text(*x))
            }
            Assertion::Role(role, x, y) => format!(
                "{}({}, {})",
                self.role_text(*role),
                self.individual_text(*x),
                self.individual_text(*y)
            ),
        }
    }

    pub fn render_axiom(&self, axiom: &TBoxAxiom) -> String {
        match axiom {
            TBoxAxiom::ConceptInclusion { lhs, rhs } => format!(
                "{} SubClassOf {}",
                self.render_concept(lhs),
                self.render_concept(rhs)
            ),
            TBoxAxiom::RoleInclusion { sub, sup } => {
                format!("{} SubRoleOf {}", self.role_text(*sub), self.role_text(*sup))
            }
        }
    }
}
