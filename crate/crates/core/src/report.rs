use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::graph::VertexSet;

/// Exact parameters of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub alpha: usize,
    pub vc: usize,
    pub vc_plus: usize,
    pub i_min: usize,
    pub degeneracy: usize,
}

/// Search-tree size of one run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeStats {
    pub leaves: u64,
    pub nodes: u64,
    /// The parameter the run was bounded by (budget for the vc⁺ search).
    pub k: usize,
}

/// Algorithm-specific counters attached to a report.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub tree: Option<TreeStats>,
    /// Partitions `(A, B)` of the minimum cover that were examined.
    pub partitions: Option<u64>,
    /// Maximal independent sets emitted by the oracle.
    pub sets_enumerated: Option<u64>,
    /// Leaves of the vc⁺ search whose cross-component constraint count
    /// exceeded the flag threshold.
    pub flagged_leaves: Option<u64>,
    pub elapsed: Duration,
}

/// The decision plus certificates.
///
/// `vc`, `vc_plus` and `alpha` are `None` when the producing algorithm did
/// not determine them (for example after an early exit).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WellCoveredReport {
    pub well_covered: bool,
    pub alpha: Option<usize>,
    pub vc: Option<usize>,
    pub vc_plus: Option<usize>,
    /// On NO: a maximal independent set strictly smaller than `witness_large`.
    pub witness_small: Option<VertexSet>,
    pub witness_large: Option<VertexSet>,
    pub stats: SearchStats,
}

impl WellCoveredReport {
    pub fn yes(n: usize, alpha: usize) -> Self {
        Self {
            well_covered: true,
            alpha: Some(alpha),
            vc: Some(n - alpha),
            vc_plus: Some(n - alpha),
            witness_small: None,
            witness_large: None,
            stats: SearchStats::default(),
        }
    }

    /// A NO answer certified by two maximal independent sets of different
    /// sizes (given in either order).
    pub fn no(a: VertexSet, b: VertexSet) -> Self {
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        debug_assert!(small.len() < large.len());
        Self {
            well_covered: false,
            alpha: None,
            vc: None,
            vc_plus: None,
            witness_small: Some(small),
            witness_large: Some(large),
            stats: SearchStats::default(),
        }
    }

    pub fn with_stats(mut self, stats: SearchStats) -> Self {
        self.stats = stats;
        self
    }
}
