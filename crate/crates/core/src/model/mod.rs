//! Immutable domain types for ELH knowledge bases.
//!
//! Everything here is a plain value: knowledge bases, concepts, assertions,
//! change sets. There is no interior mutation, so all types can be shared
//! and sent across threads freely.

mod concept;
mod kb;
mod render;
mod request;
mod symbols;

pub use concept::Concept;
pub use kb::{Assertion, ChangeSet, FeatureSet, KnowledgeBase, TBoxAxiom};
pub use request::{CounterfactualRequest, Direction, MeanDistance, RankedCounterfactual};
pub use symbols::{
    ConceptName, IndividualName, RoleName, Signature, SignatureBuilder, SymbolKind,
};

use thiserror::Error;

/// Errors from constructing or updating model values.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("name `{name}` is already used as a {existing} name and cannot also be a {requested} name")]
    KindConflict {
        name: String,
        existing: SymbolKind,
        requested: SymbolKind,
    },
    #[error("unknown {kind} name `{name}`")]
    UnknownSymbol { name: String, kind: SymbolKind },
    #[error("change set is infeasible and cannot be applied")]
    InfeasibleChangeSet,
    #[error("cannot remove `{0}`: not asserted in the ABox")]
    RemovedAssertionMissing(String),
    #[error("cannot add `{0}`: already asserted in the ABox")]
    AddedAssertionPresent(String),
    #[error("change set removes and adds the same assertion")]
    OverlappingChangeSet,
}
