//! Counterfactual explanations for concept assertions in ELH knowledge bases.
//!
//! Given a knowledge base, an individual `x`, and a concept `C`, this crate
//! computes the minimal, local, non-redundant ABox updates that flip whether
//! `C(x)` holds, ranks them by the likeliness of the resulting feature
//! combination, and renders them as natural-language sentences.
//!
//! The pieces:
//!
//! - [`model`]: immutable knowledge-base values (concepts, assertions,
//!   change sets, feature sets).
//! - [`parser`]: the line-oriented text format and its canonical serializer.
//! - [`reasoner`]: ELH entailment via TBox normalization and completion-rule
//!   saturation; subsumption, instance checking, materialization.
//! - [`counterfactual`]: candidate generation over subsumption paths,
//!   minimal hitting sets, edit distance, likeliness ranking.
//! - [`verbalizer`]: template-based sentence rendering.

pub mod counterfactual;
pub mod model;
pub mod parser;
pub mod reasoner;
pub mod verbalizer;

pub use model::{
    Assertion, ChangeSet, Concept, ConceptName, CounterfactualRequest, Direction, FeatureSet,
    IndividualName, KnowledgeBase, MeanDistance, ModelError, RankedCounterfactual, RoleName,
    Signature, SignatureBuilder, SymbolKind, TBoxAxiom,
};
