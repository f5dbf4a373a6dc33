//! Concept descriptions: top, atomic names, intersections, existential
//! restrictions.

use crate::model::{ConceptName, RoleName};

/// A concept description in canonical form.
///
/// Canonical form means: intersections are flattened (no `And` directly
/// inside an `And`), deduplicated, sorted, never contain `Top`, and have at
/// least two members. Use [`Concept::and`] to build intersections; it
/// establishes the canonical form, which makes structural equality decide
/// syntactic equality of concepts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Concept {
    /// The top concept, holding for every individual.
    Top,
    /// An atomic concept name.
    Atomic(ConceptName),
    /// An existential restriction over a role; the filler may be any concept.
    Exists(RoleName, Box<Concept>),
    /// An intersection of two or more canonical non-intersection concepts.
    And(Vec<Concept>),
}

impl Concept {
    pub fn atomic(name: ConceptName) -> Concept {
        Concept::Atomic(name)
    }

    pub fn exists(role: RoleName, filler: Concept) -> Concept {
        Concept::Exists(role, Box::new(filler))
    }

    /// Builds a canonical intersection: flattens nested intersections, drops
    /// `Top` members, deduplicates, and sorts. An empty or all-`Top` input
    /// yields `Top`; a single remaining member is returned unwrapped.
    pub fn and<I: IntoIterator<Item = Concept>>(parts: I) -> Concept {
        let mut flat = Vec::new();
        for part in parts {
            Self::flatten_into(part, &mut flat);
        }
        flat.sort();
        flat.dedup();
        match flat.len() {
            0 => Concept::Top,
            1 => flat.pop().expect("len checked"),
            _ => Concept::And(flat),
        }
    }

    fn flatten_into(concept: Concept, out: &mut Vec<Concept>) {
        match concept {
            Concept::Top => {}
            Concept::And(parts) => {
                for part in parts {
                    Self::flatten_into(part, out);
                }
            }
            other => out.push(other),
        }
    }

    /// The top-level conjuncts: the members of an intersection, or the
    /// concept itself.
    pub fn top_conjuncts(&self) -> Vec<Concept> {
        match self {
            Concept::And(parts) => parts.clone(),
            other => vec![other.clone()],
        }
    }

    pub fn is_intersection(&self) -> bool {
        matches!(self, Concept::And(_))
    }

    /// Maximal nesting depth of existential restrictions.
    pub fn role_depth(&self) -> usize {
        match self {
            Concept::Top | Concept::Atomic(_) => 0,
            Concept::Exists(_, filler) => 1 + filler.role_depth(),
            Concept::And(parts) => parts.iter().map(|p| p.role_depth()).max().unwrap_or(0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(id: u32) -> Concept {
        Concept::Atomic(ConceptName(id))
    }

    #[test]
    fn and_flattens_dedups_and_sorts() {
        let nested = Concept::and([a(2), Concept::and([a(0), a(2)]), a(1)]);
        assert_eq!(nested, Concept::And(vec![a(0), a(1), a(2)]));
    }

    #[test]
    fn and_drops_top_and_unwraps_singletons() {
        assert_eq!(Concept::and([Concept::Top, a(3)]), a(3));
        assert_eq!(Concept::and([Concept::Top, Concept::Top]), Concept::Top);
        assert_eq!(Concept::and([]), Concept::Top);
    }

    #[test]
    fn top_conjuncts_of_non_intersection_is_singleton() {
        let c = Concept::exists(RoleName(0), a(1));
        assert_eq!(c.top_conjuncts(), vec![c.clone()]);
        assert_eq!(Concept::and([a(0), a(1)]).top_conjuncts(), vec![a(0), a(1)]);
    }

    #[test]
    fn role_depth_counts_nesting() {
        let c = Concept::exists(RoleName(0), Concept::exists(RoleName(1), a(0)));
        assert_eq!(c.role_depth(), 2);
        assert_eq!(Concept::and([a(0), c]).role_depth(), 2);
        assert_eq!(Concept::Top.role_depth(), 0);
    }
}
