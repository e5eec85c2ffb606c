//! Brute-force ground truth: enumerate every maximal independent set.
//!
//! Enumeration is Bron–Kerbosch with pivoting, run on the graph itself with
//! closed neighborhoods playing the role of complement non-adjacency. Every
//! other decision procedure in the crate is tested against this module.

use std::time::Instant;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::report::{GraphStats, SearchStats, WellCoveredReport};

pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;
pub const ORACLE_BUDGET_ENV: &str = "WCOV_ORACLE_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of maximal independent sets to enumerate.
    pub budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_ORACLE_BUDGET,
        }
    }
}

impl OracleConfig {
    /// Default budget, overridden by `WCOV_ORACLE_BUDGET` when it parses.
    pub fn from_env() -> Self {
        let budget = std::env::var(ORACLE_BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_ORACLE_BUDGET);
        Self { budget }
    }
}

struct Frame {
    p: FixedBitSet,
    x: FixedBitSet,
    branch: Vec<Vertex>,
    next: usize,
}

/// Streaming enumeration of maximal independent sets, each exactly once, in a
/// deterministic order.
pub struct MaximalIndependentSets {
    closed: Vec<FixedBitSet>,
    stack: Vec<Frame>,
    current: Vec<Vertex>,
    pending_root: bool,
}

impl MaximalIndependentSets {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let closed = g
            .vertices()
            .map(|v| {
                let mut b = FixedBitSet::with_capacity(n);
                b.insert(v);
                for &w in g.neighbors(v) {
                    b.insert(w);
                }
                b
            })
            .collect();
        Self {
            closed,
            stack: Vec::new(),
            current: Vec::new(),
            pending_root: true,
        }
    }

    /// Pivot `u` in P ∪ X minimizing |P ∩ N[u]| (lowest id on ties); branch on
    /// P ∩ N[u]. Every maximal independent set extending the current one must
    /// contain `u` or a neighbor of `u`.
    fn branch_set(&self, p: &FixedBitSet, x: &FixedBitSet) -> Vec<Vertex> {
        let mut best: Option<(usize, Vertex)> = None;
        for u in p.union(x) {
            let c = p.intersection_count(&self.closed[u]);
            if best.is_none_or(|(bc, _)| c < bc) {
                best = Some((c, u));
            }
        }
        let (_, u) = best.expect("P ∪ X non-empty");
        p.intersection(&self.closed[u]).collect()
    }
}

impl Iterator for MaximalIndependentSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.pending_root {
            self.pending_root = false;
            let n = self.closed.len();
            if n == 0 {
                return Some(VertexSet::new());
            }
            let mut p = FixedBitSet::with_capacity(n);
            p.insert_range(..);
            let x = FixedBitSet::with_capacity(n);
            let branch = self.branch_set(&p, &x);
            self.stack.push(Frame { p, x, branch, next: 0 });
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next == frame.branch.len() {
                self.stack.pop();
                self.current.pop();
                continue;
            }
            let v = frame.branch[frame.next];
            frame.next += 1;
            frame.p.set(v, false);
            frame.x.insert(v);
            let mut p = frame.p.clone();
            p.difference_with(&self.closed[v]);
            let mut x = frame.x.clone();
            x.difference_with(&self.closed[v]);
            self.current.push(v);
            if p.is_clear() {
                let found = x.is_clear().then(|| self.current.iter().copied().collect());
                self.current.pop();
                if found.is_some() {
                    return found;
                }
                continue;
            }
            let branch = self.branch_set(&p, &x);
            self.stack.push(Frame { p, x, branch, next: 0 });
        }
    }
}

/// Collects all maximal independent sets, failing once more than
/// `config.budget` have been produced.
pub fn enumerate_maximal_independent_sets(g: &Graph, config: &OracleConfig) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    for s in MaximalIndependentSets::new(g) {
        if out.len() as u64 >= config.budget {
            return Err(Error::OracleBudgetExceeded(config.budget));
        }
        out.push(s);
    }
    Ok(out)
}

/// Minimal vertex covers: complements of the maximal independent sets.
pub fn enumerate_minimal_vertex_covers_oracle(g: &Graph, config: &OracleConfig) -> Result<Vec<VertexSet>> {
    Ok(enumerate_maximal_independent_sets(g, config)?
        .into_iter()
        .map(|s| s.complement(g.n()))
        .collect())
}

struct Extremes {
    smallest: VertexSet,
    largest: VertexSet,
    count: u64,
}

fn extremes(g: &Graph, config: &OracleConfig) -> Result<Extremes> {
    let mut it = MaximalIndependentSets::new(g);
    let first = it.next().expect("every graph has a maximal independent set");
    let mut ext = Extremes {
        smallest: first.clone(),
        largest: first,
        count: 1,
    };
    for s in it {
        if ext.count >= config.budget {
            return Err(Error::OracleBudgetExceeded(config.budget));
        }
        ext.count += 1;
        // lexicographically first set among ties, so witnesses do not
        // depend on the enumeration order
        if (s.len(), &s) < (ext.smallest.len(), &ext.smallest) {
            ext.smallest = s.clone();
        }
        if s.len() > ext.largest.len() || (s.len() == ext.largest.len() && s < ext.largest) {
            ext.largest = s;
        }
    }
    Ok(ext)
}

pub fn graph_stats_oracle(g: &Graph, config: &OracleConfig) -> Result<GraphStats> {
    let ext = extremes(g, config)?;
    let n = g.n();
    let (alpha, i_min) = (ext.largest.len(), ext.smallest.len());
    Ok(GraphStats {
        n,
        alpha,
        vc: n - alpha,
        vc_plus: n - i_min,
        i_min,
        degeneracy: g.degeneracy(),
    })
}

/// Decides well-coveredness by full enumeration. On NO the witnesses are a
/// smallest and a largest maximal independent set (lexicographically first of
/// each size).
pub fn is_well_covered_oracle(g: &Graph, config: &OracleConfig) -> Result<WellCoveredReport> {
    let start = Instant::now();
    let ext = extremes(g, config)?;
    let n = g.n();
    let (alpha, i_min) = (ext.largest.len(), ext.smallest.len());
    let mut report = if alpha == i_min {
        WellCoveredReport::yes(n, alpha)
    } else {
        WellCoveredReport::no(ext.smallest, ext.largest)
    };
    report.alpha = Some(alpha);
    report.vc = Some(n - alpha);
    report.vc_plus = Some(n - i_min);
    report.stats = SearchStats {
        sets_enumerated: Some(ext.count),
        elapsed: start.elapsed(),
        ..Default::default()
    };
    Ok(report)
}

/// Subset-scan reference for tiny graphs (n ≤ 20): every subset tested with
/// `is_maximal_independent_set`, in increasing bitmask order.
pub fn maximal_independent_sets_by_subset_scan(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 20, "subset scan is for tiny graphs");
    let nb: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let independent = (0..n).all(|v| mask & (1 << v) == 0 || nb[v] & mask == 0);
        if !independent {
            continue;
        }
        let maximal = (0..n).all(|v| mask & (1 << v) != 0 || nb[v] & mask != 0);
        if maximal {
            out.push((0..n).filter(|&v| mask & (1 << v) != 0).collect());
        }
    }
    out
}
