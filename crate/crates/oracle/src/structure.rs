//! Depth-bounded canonical structures for naive entailment checking.
//!
//! The structure starts from the named individuals with their asserted
//! labels and edges, then exhaustively applies the TBox axioms: whenever an
//! axiom's left-hand side evaluates true at a node, the right-hand side is
//! asserted there, creating anonymous witness nodes for existential
//! restrictions. Evaluation of a concept at a node is purely structural.
//!
//! Anonymous expansion is cut off at a depth bound, which must be generous
//! enough for the queries evaluated against the structure; exceeding the
//! node budget is a test-configuration error and panics.

use std::collections::{BTreeSet, HashMap};

use elhcf::model::{
    Assertion, Concept, ConceptName, IndividualName, KnowledgeBase, RoleName, TBoxAxiom,
};

const NODE_LIMIT: usize = 200_000;

pub struct CanonicalStructure {
    labels: Vec<BTreeSet<ConceptName>>,
    edges: Vec<Vec<(RoleName, usize)>>,
    depth: Vec<usize>,
    max_depth: usize,
    role_supers: Vec<BTreeSet<RoleName>>,
    witnesses: HashMap<(usize, RoleName, Concept), usize>,
}

impl CanonicalStructure {
    /// Builds the structure for a knowledge base, expanded far enough to
    /// evaluate concepts of role depth `query_depth` at named individuals.
    pub fn build(kb: &KnowledgeBase, query_depth: usize) -> CanonicalStructure {
        let mut structure = CanonicalStructure::empty(kb, query_depth);
        for _ in 0..kb.signature().individual_count() {
            structure.labels.push(BTreeSet::new());
            structure.edges.push(Vec::new());
            structure.depth.push(0);
        }
        for assertion in kb.abox() {
            match assertion {
                Assertion::Concept(name, x) => {
                    structure.labels[x.index()].insert(*name);
                }
                Assertion::Role(role, x, y) => {
                    structure.edges[x.index()].push((*role, y.index()));
                }
            }
        }
        structure.saturate(kb);
        structure
    }

    /// Builds a structure holding a single synthetic root at which `seed`
    /// is asserted; used for naive subsumption checks.
    pub fn build_for_subsumption(
        kb: &KnowledgeBase,
        seed: &Concept,
        query_depth: usize,
    ) -> CanonicalStructure {
        let mut structure = CanonicalStructure::empty(kb, query_depth + seed.role_depth());
        structure.labels.push(BTreeSet::new());
        structure.edges.push(Vec::new());
        structure.depth.push(0);
        structure.assert_concept(seed, 0);
        structure.saturate(kb);
        structure
    }

    fn empty(kb: &KnowledgeBase, query_depth: usize) -> CanonicalStructure {
        let tbox_depth = kb
            .tbox()
            .iter()
            .map(|axiom| match axiom {
                TBoxAxiom::ConceptInclusion { lhs, rhs } => {
                    lhs.role_depth().max(rhs.role_depth())
                }
                TBoxAxiom::RoleInclusion { .. } => 0,
            })
            .max()
            .unwrap_or(0);
        let concept_axioms = kb
            .tbox()
            .iter()
            .filter(|a| matches!(a, TBoxAxiom::ConceptInclusion { .. }))
            .count();
        // Witness chains along distinct axiom fillers stabilize after at
        // most one step per concept axiom; queries look `query_depth`
        // levels below the named individuals on top of that.
        let max_depth = query_depth + tbox_depth + concept_axioms + 2;
        CanonicalStructure {
            labels: Vec::new(),
            edges: Vec::new(),
            depth: Vec::new(),
            max_depth,
            role_supers: role_closure(kb),
            witnesses: HashMap::new(),
        }
    }

    fn saturate(&mut self, kb: &KnowledgeBase) {
        loop {
            let mut changed = false;
            let axioms: Vec<(Concept, Concept)> = kb
                .tbox()
                .iter()
                .filter_map(|axiom| match axiom {
                    TBoxAxiom::ConceptInclusion { lhs, rhs } => Some((lhs.clone(), rhs.clone())),
                    TBoxAxiom::RoleInclusion { .. } => None,
                })
                .collect();
            for (lhs, rhs) in &axioms {
                let node_count = self.labels.len();
                for node in 0..node_count {
                    if self.eval(lhs, node) && self.assert_concept(rhs, node) {
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Structural evaluation of a concept at a node.
    pub fn eval(&self, concept: &Concept, node: usize) -> bool {
        match concept {
            Concept::Top => true,
            Concept::Atomic(name) => self.labels[node].contains(name),
            Concept::And(parts) => parts.iter().all(|p| self.eval(p, node)),
            Concept::Exists(role, filler) => self.edges[node].iter().any(|(edge_role, target)| {
                self.role_supers[edge_role.index()].contains(role) && self.eval(filler, *target)
            }),
        }
    }

    pub fn eval_at_individual(&self, concept: &Concept, x: IndividualName) -> bool {
        self.eval(concept, x.index())
    }

    /// Asserts a concept at a node, creating anonymous witnesses for
    /// existential restrictions. Returns true if anything was added.
    fn assert_concept(&mut self, concept: &Concept, node: usize) -> bool {
        match concept {
            Concept::Top => false,
            Concept::Atomic(name) => self.labels[node].insert(*name),
            Concept::And(parts) => {
                let mut changed = false;
                for part in parts {
                    changed |= self.assert_concept(part, node);
                }
                changed
            }
            Concept::Exists(role, filler) => {
                let key = (node, *role, filler.as_ref().clone());
                if self.witnesses.contains_key(&key) {
                    return false;
                }
                if self.depth[node] >= self.max_depth {
                    // Beyond the depth bound the subtree cannot influence
                    // query answers at the named individuals.
                    return false;
                }
                assert!(
                    self.labels.len() < NODE_LIMIT,
                    "canonical structure exceeded {NODE_LIMIT} nodes; \
                     instance too large for the naive oracle"
                );
                let fresh = self.labels.len();
                self.labels.push(BTreeSet::new());
                self.edges.push(Vec::new());
                self.depth.push(self.depth[node] + 1);
                self.edges[node].push((*role, fresh));
                self.witnesses.insert(key, fresh);
                self.assert_concept(filler, fresh);
                true
            }
        }
    }
}

/// Reflexive-transitive closure of the role hierarchy: `supers[r]` holds
/// every `s` with `r ⊑* s`.
pub fn role_closure(kb: &KnowledgeBase) -> Vec<BTreeSet<RoleName>> {
    let count = kb.signature().role_count();
    let mut supers: Vec<BTreeSet<RoleName>> = kb
        .signature()
        .role_names()
        .map(|r| BTreeSet::from([r]))
        .collect();
    let inclusions: Vec<(RoleName, RoleName)> = kb
        .tbox()
        .iter()
        .filter_map(|axiom| match axiom {
            TBoxAxiom::RoleInclusion { sub, sup } => Some((*sub, *sup)),
            TBoxAxiom::ConceptInclusion { .. } => None,
        })
        .collect();
    loop {
        let mut changed = false;
        for (sub, sup) in &inclusions {
            let additions: Vec<RoleName> = supers[sup.index()]
                .difference(&supers[sub.index()])
                .copied()
                .collect();
            if !additions.is_empty() {
                supers[sub.index()].extend(additions);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert_eq!(supers.len(), count);
    supers
}
