//! Counterfactual requests and ranked results.

use std::fmt;

use num_rational::Ratio;

use crate::model::{ChangeSet, Concept, IndividualName};

/// Whether the target assertion should newly hold or newly fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Add,
    Remove,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Add => write!(f, "add"),
            Direction::Remove => write!(f, "rem"),
        }
    }
}

/// A request to flip the truth of `C(x)` by updating the ABox.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterfactualRequest {
    pub concept: Concept,
    pub individual: IndividualName,
    pub direction: Direction,
}

/// Exact average of pairwise distances, kept as a rational so ranking and
/// the `l_min <= l_mean` invariant are free of float rounding.
pub type MeanDistance = Ratio<u64>;

/// A counterfactual with its edit distance and likeliness scores.
///
/// `l_min`/`l_mean` are `None` exactly when there are no existing negative
/// individuals to compare against, or for add-direction requests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedCounterfactual {
    pub change_set: ChangeSet,
    pub edit_distance: usize,
    pub l_min: Option<u64>,
    pub l_mean: Option<MeanDistance>,
    /// 1-based position under the measure the list was sorted by.
    pub rank: usize,
}
