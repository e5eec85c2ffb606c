//! Search tree over closed neighborhoods of a minimum-degree vertex.
//!
//! Every maximal independent set of the residual graph dominates the
//! branching vertex `v`, so it contains some `u ∈ N[v]`. Committing `u` and
//! deleting `N[u]` therefore reaches every maximal independent set, and each
//! empty-residual leaf is one at depth `|set|`. In a `d`-degenerate graph
//! `|N[v]| ≤ d + 1` and the depth is at most `α`, giving at most `(d+1)^α`
//! leaves.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::par::{self, Execution};
use crate::report::{SearchStats, TreeStats, WellCoveredReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegenOptions {
    /// Stop at the second distinct leaf depth.
    pub early_exit: bool,
    /// Explore root subtrees in parallel. Only used without early exit, where
    /// the result does not depend on visiting order.
    pub execution: Execution,
}

impl Default for DegenOptions {
    fn default() -> Self {
        Self {
            early_exit: true,
            execution: Execution::Sequential,
        }
    }
}

/// `(d+1)^α`, saturating.
pub fn degen_leaf_bound(d: usize, alpha: usize) -> u64 {
    let base = d as u64 + 1;
    u32::try_from(alpha)
        .ok()
        .and_then(|a| base.checked_pow(a))
        .unwrap_or(u64::MAX)
}

#[derive(Clone, Debug, Default)]
struct Outcome {
    /// Lexicographically first chosen set for each observed leaf depth.
    depths: BTreeMap<usize, VertexSet>,
    leaves: u64,
    nodes: u64,
}

impl Outcome {
    fn see(&mut self, chosen: &[Vertex]) {
        self.leaves += 1;
        let set: VertexSet = chosen.iter().copied().collect();
        self.depths
            .entry(set.len())
            .and_modify(|s| {
                if set < *s {
                    *s = set.clone();
                }
            })
            .or_insert(set);
    }

    fn merge(&mut self, other: Outcome) {
        self.leaves += other.leaves;
        self.nodes += other.nodes;
        for (d, set) in other.depths {
            self.depths
                .entry(d)
                .and_modify(|s| {
                    if set < *s {
                        *s = set.clone();
                    }
                })
                .or_insert(set);
        }
    }
}

#[derive(Clone)]
struct State<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    deg: Vec<usize>,
    alive_count: usize,
    chosen: Vec<Vertex>,
    trail: Vec<Vertex>,
}

impl<'g> State<'g> {
    fn new(g: &'g Graph) -> Self {
        Self {
            g,
            alive: vec![true; g.n()],
            deg: g.vertices().map(|v| g.degree(v)).collect(),
            alive_count: g.n(),
            chosen: Vec::new(),
            trail: Vec::new(),
        }
    }

    fn min_degree_vertex(&self) -> Option<Vertex> {
        let mut best: Option<Vertex> = None;
        for v in self.g.vertices() {
            if self.alive[v] && best.is_none_or(|b| self.deg[v] < self.deg[b]) {
                best = Some(v);
                if self.deg[v] == 0 {
                    break;
                }
            }
        }
        best
    }

    fn kill(&mut self, w: Vertex) {
        self.alive[w] = false;
        self.alive_count -= 1;
        self.trail.push(w);
        for &x in self.g.neighbors(w) {
            if self.alive[x] {
                self.deg[x] -= 1;
            }
        }
    }

    /// Commits `u`, deleting `N[u]`; returns the trail mark for [`Self::undo`].
    fn commit(&mut self, u: Vertex) -> usize {
        let mark = self.trail.len();
        self.chosen.push(u);
        self.kill(u);
        for i in 0..self.g.neighbors(u).len() {
            let w = self.g.neighbors(u)[i];
            if self.alive[w] {
                self.kill(w);
            }
        }
        mark
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let w = self.trail.pop().expect("trail longer than mark");
            for &x in self.g.neighbors(w) {
                if self.alive[x] {
                    self.deg[x] += 1;
                }
            }
            self.alive[w] = true;
            self.alive_count += 1;
        }
        self.chosen.pop();
    }

    fn branch_set(&self, v: Vertex) -> Vec<Vertex> {
        let mut b: Vec<Vertex> = std::iter::once(v)
            .chain(self.g.neighbors(v).iter().copied().filter(|&w| self.alive[w]))
            .collect();
        b.sort_unstable();
        b
    }

    /// Returns `false` once early exit triggers.
    fn explore(&mut self, out: &mut Outcome, early_exit: bool) -> bool {
        out.nodes += 1;
        let Some(v) = self.min_degree_vertex() else {
            out.see(&self.chosen);
            return !(early_exit && out.depths.len() > 1);
        };
        for u in self.branch_set(v) {
            let mark = self.commit(u);
            let go_on = self.explore(out, early_exit);
            self.undo(mark);
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn run(g: &Graph, options: DegenOptions) -> Outcome {
    let mut root = State::new(g);
    let parallel = !options.early_exit && options.execution.is_parallel();
    let Some(v) = root.min_degree_vertex().filter(|_| parallel) else {
        let mut out = Outcome::default();
        root.explore(&mut out, options.early_exit);
        return out;
    };
    let children = root.branch_set(v);
    let parts = par::map(&children, options.execution, |&u| {
        let mut s = root.clone();
        s.commit(u);
        let mut out = Outcome::default();
        s.explore(&mut out, false);
        out
    });
    let mut out = Outcome {
        nodes: 1,
        ..Default::default()
    };
    for p in parts {
        out.merge(p);
    }
    out
}

/// Decides well-coveredness by comparing leaf depths.
///
/// With early exit a NO answer leaves `alpha`, `vc` and `vc_plus` unset; a
/// full exploration reports them all.
pub fn well_covered_degenerate(g: &Graph, options: DegenOptions) -> WellCoveredReport {
    let start = Instant::now();
    let n = g.n();
    let out = run(g, options);
    let (&lo, _) = out.depths.first_key_value().expect("the tree has a leaf");
    let (&hi, _) = out.depths.last_key_value().expect("the tree has a leaf");
    let mut report = if lo == hi {
        WellCoveredReport::yes(n, hi)
    } else {
        let mut depths = out.depths.clone();
        let small = depths.pop_first().expect("two depths").1;
        let large = depths.pop_last().expect("two depths").1;
        let mut r = WellCoveredReport::no(small, large);
        if !options.early_exit {
            r.alpha = Some(hi);
            r.vc = Some(n - hi);
            r.vc_plus = Some(n - lo);
        }
        r
    };
    report.stats = SearchStats {
        tree: Some(TreeStats {
            leaves: out.leaves,
            nodes: out.nodes,
            k: hi,
        }),
        elapsed: start.elapsed(),
        ..Default::default()
    };
    report
}

/// Size of the full tree (no early exit). `k` is the deepest leaf, i.e. `α`.
pub fn degen_tree_stats(g: &Graph, execution: Execution) -> TreeStats {
    let report = well_covered_degenerate(
        g,
        DegenOptions {
            early_exit: false,
            execution,
        },
    );
    report.stats.tree.expect("degen reports always carry tree stats")
}
