//! Bounded search tree parameterized by the maximum minimal vertex cover.
//!
//! Each node branches on a residual vertex `x` of degree at least three:
//! either `x` joins the cover, or `x` stays out and its whole residual
//! neighborhood joins the cover (no minimal cover contains `N[x]`). Nodes with
//! residual maximum degree at most two, or with an exhausted budget, are
//! leaves; a leaf residual is a disjoint union of paths and cycles, and the
//! smallest and largest ways to complete the partial cover into a minimal
//! cover of the whole graph are found by dynamic programming.
//!
//! With budget `k` the leaf count obeys `T(k) ≤ T(k−1) + T(k−3)`, i.e.
//! `T(k) ≤ 1.4656^k`.

use std::collections::HashMap;
use std::time::Instant;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::report::{SearchStats, TreeStats, WellCoveredReport};

/// Growth rate of the leaf recurrence, rounded up.
pub const BRANCHING_FACTOR: f64 = 1.4656;

/// Leaves whose cross-component constraint count exceeds this are flagged.
pub const CONSTRAINT_FLAG_THRESHOLD: usize = 20;

/// `ceil(1.4656^k)`.
pub fn leaf_bound(k: usize) -> u64 {
    BRANCHING_FACTOR.powi(k as i32).ceil() as u64
}

/// A search node: the residual graph is everything neither in the partial
/// cover nor excluded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchNode {
    pub partial_cover: VertexSet,
    /// Vertices committed to stay out of the cover.
    pub excluded: VertexSet,
    pub budget: usize,
}

/// Smallest and largest completions `X` of a leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafExtensions {
    pub min: VertexSet,
    pub max: VertexSet,
    /// Constraints that link more than one residual component.
    pub cross_constraints: usize,
}

const RESIDUAL: u8 = 0;
const COVER: u8 = 1;
const EXCLUDED: u8 = 2;

/// Among all `X ⊆ residual` such that `partial_cover ∪ X` is a minimal vertex
/// cover of `original`, a smallest and a largest one; `None` if there is none.
pub fn solve_degree2_leaf(original: &Graph, node: &SearchNode) -> Result<Option<LeafExtensions>> {
    let mut status = vec![RESIDUAL; original.n()];
    for v in node.partial_cover.iter() {
        status[v] = COVER;
    }
    for v in node.excluded.iter() {
        if status[v] == COVER {
            return Err(Error::Contract("a vertex is both covered and excluded".into()));
        }
        status[v] = EXCLUDED;
    }
    for v in original.vertices().filter(|&v| status[v] == RESIDUAL) {
        let d = original.neighbors(v).iter().filter(|&&w| status[w] == RESIDUAL).count();
        if d > 2 {
            return Err(Error::Contract(format!("residual vertex {v} has degree {d} > 2")));
        }
    }
    Ok(leaf_extensions(original, &status))
}

#[derive(Clone)]
struct Best {
    /// Number of residual vertices put into the cover.
    size: usize,
    chosen: Vec<Vertex>,
}

#[derive(Clone)]
struct Span {
    min: Best,
    max: Best,
}

impl Span {
    fn single(b: Best) -> Self {
        Self { min: b.clone(), max: b }
    }

    fn absorb(&mut self, other: &Span) {
        if other.min.size < self.min.size {
            self.min = other.min.clone();
        }
        if other.max.size > self.max.size {
            self.max = other.max.clone();
        }
    }

    fn combine(&self, other: &Span) -> Span {
        let join = |a: &Best, b: &Best| Best {
            size: a.size + b.size,
            chosen: a.chosen.iter().chain(&b.chosen).copied().collect(),
        };
        Span {
            min: join(&self.min, &other.min),
            max: join(&self.max, &other.max),
        }
    }
}

/// DP state along a path or cycle.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    first_out: bool,
    first_dominated: bool,
    prev_out: bool,
    prev_dominated: bool,
    mask: FixedBitSet,
}

fn leaf_extensions(g: &Graph, status: &[u8]) -> Option<LeafExtensions> {
    let n = g.n();
    let res_nbrs = |v: Vertex| g.neighbors(v).iter().copied().filter(|&w| status[w] == RESIDUAL);
    let isolated = |v: Vertex| res_nbrs(v).next().is_none();

    // every cover vertex needs a neighbor outside the final cover
    let mut constraint_sets: Vec<Vec<Vertex>> = Vec::new();
    for v in (0..n).filter(|&v| status[v] == COVER) {
        if g.neighbors(v).iter().any(|&w| status[w] == EXCLUDED) {
            continue;
        }
        let s: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| status[w] == RESIDUAL)
            .collect();
        if s.is_empty() {
            return None;
        }
        // isolated residual vertices are never covered
        if s.iter().any(|&w| isolated(w)) {
            continue;
        }
        constraint_sets.push(s);
    }

    // residual components, each as a path or cycle in traversal order
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<(Vec<Vertex>, bool)> = Vec::new();
    for s in (0..n).filter(|&v| status[v] == RESIDUAL) {
        if comp_of[s] != usize::MAX || isolated(s) {
            continue;
        }
        // start from an endpoint if there is one
        let mut start = s;
        let mut seen_walk = vec![s];
        let mut prev = usize::MAX;
        let mut cur = s;
        loop {
            let next = res_nbrs(cur).find(|&w| w != prev);
            match next {
                Some(w) if w != s && !seen_walk.contains(&w) => {
                    prev = cur;
                    cur = w;
                    seen_walk.push(w);
                }
                _ => break,
            }
        }
        let is_cycle = res_nbrs(cur).count() == 2 && res_nbrs(s).count() == 2 && res_nbrs(cur).any(|w| w == s) && seen_walk.len() >= 3;
        if !is_cycle {
            start = cur;
        }
        let id = comps.len();
        let mut order = vec![start];
        comp_of[start] = id;
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(w) = res_nbrs(cur).find(|&w| w != prev && comp_of[w] == usize::MAX) {
            comp_of[w] = id;
            order.push(w);
            prev = cur;
            cur = w;
        }
        comps.push((order, is_cycle));
    }

    // classify constraints: local to one component or crossing several
    let t = constraint_sets.len();
    let mut touches: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut comps_of_constraint: Vec<Vec<usize>> = Vec::with_capacity(t);
    for (ci, s) in constraint_sets.iter().enumerate() {
        let mut cs: Vec<usize> = s.iter().map(|&w| comp_of[w]).collect();
        cs.sort_unstable();
        cs.dedup();
        comps_of_constraint.push(cs);
        for &w in s {
            touches[w].push(ci);
        }
    }
    let cross: Vec<usize> = (0..t).filter(|&c| comps_of_constraint[c].len() > 1).collect();
    let mut cross_index = vec![usize::MAX; t];
    for (i, &c) in cross.iter().enumerate() {
        cross_index[c] = i;
    }

    let mut global: HashMap<FixedBitSet, Span> = HashMap::new();
    global.insert(
        FixedBitSet::with_capacity(t),
        Span::single(Best { size: 0, chosen: Vec::new() }),
    );
    for (order, is_cycle) in &comps {
        let local = component_dp(order, *is_cycle, &touches, &cross_index, t)?;
        let mut next: HashMap<FixedBitSet, Span> = HashMap::new();
        for (gm, gs) in &global {
            for (cm, cs) in &local {
                let mut key = gm.clone();
                key.union_with(cm);
                let span = gs.combine(cs);
                match next.get_mut(&key) {
                    Some(e) => e.absorb(&span),
                    None => {
                        next.insert(key, span);
                    }
                }
            }
        }
        global = next;
    }
    let mut full = FixedBitSet::with_capacity(t);
    for &c in &cross {
        full.insert(c);
    }
    let span = global.get(&full)?;
    Some(LeafExtensions {
        min: span.min.chosen.iter().copied().collect(),
        max: span.max.chosen.iter().copied().collect(),
        cross_constraints: cross.len(),
    })
}

/// Maximal independent sets `I` of one path/cycle component, grouped by the
/// set of crossing constraints they hit. Local constraints are required to be
/// hit before they leave the DP. The cover part is the complement of `I`.
fn component_dp(
    order: &[Vertex],
    is_cycle: bool,
    touches: &[Vec<usize>],
    cross_index: &[usize],
    t: usize,
) -> Option<HashMap<FixedBitSet, Span>> {
    let len = order.len();
    // last position at which each local constraint can still be hit
    let mut last_pos: HashMap<usize, usize> = HashMap::new();
    for (i, &v) in order.iter().enumerate() {
        for &c in &touches[v] {
            if cross_index[c] == usize::MAX {
                last_pos.insert(c, i);
            }
        }
    }
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); len];
    for (&c, &i) in &last_pos {
        closing[i].push(c);
    }

    let mut states: HashMap<Key, Span> = HashMap::new();
    for out in [false, true] {
        let mut mask = FixedBitSet::with_capacity(t);
        if !out {
            for &c in &touches[order[0]] {
                mask.insert(c);
            }
        }
        let key = Key {
            first_out: out,
            first_dominated: false,
            prev_out: out,
            prev_dominated: false,
            mask,
        };
        let best = Best {
            size: usize::from(out),
            chosen: if out { vec![order[0]] } else { Vec::new() },
        };
        states.insert(key, Span::single(best));
    }
    close_constraints(&mut states, &closing[0]);

    for i in 1..len {
        let v = order[i];
        let mut next: HashMap<Key, Span> = HashMap::new();
        for (key, span) in &states {
            for out in [false, true] {
                let in_set = !out;
                let prev_in = !key.prev_out;
                if in_set && prev_in {
                    continue;
                }
                // the previous vertex loses its last chance of a dominator,
                // except the first vertex of a cycle, which wraps around
                let prev_is_cycle_start = is_cycle && i == 1;
                if key.prev_out && !key.prev_dominated && out && !prev_is_cycle_start {
                    continue;
                }
                let mut mask = key.mask.clone();
                if in_set {
                    for &c in &touches[v] {
                        mask.insert(c);
                    }
                }
                let first_dominated = if i == 1 { in_set } else { key.first_dominated };
                let nk = Key {
                    first_out: key.first_out,
                    first_dominated,
                    prev_out: out,
                    prev_dominated: out && prev_in,
                    mask,
                };
                let mut ns = span.clone();
                if out {
                    for b in [&mut ns.min, &mut ns.max] {
                        b.size += 1;
                        b.chosen.push(v);
                    }
                }
                match next.get_mut(&nk) {
                    Some(e) => e.absorb(&ns),
                    None => {
                        next.insert(nk, ns);
                    }
                }
            }
        }
        states = next;
        close_constraints(&mut states, &closing[i]);
        if states.is_empty() {
            return None;
        }
    }

    let mut out: HashMap<FixedBitSet, Span> = HashMap::new();
    for (key, span) in states {
        let ok = if is_cycle {
            let last_in = !key.prev_out;
            let first_in = !key.first_out;
            !(last_in && first_in)
                && (!key.prev_out || key.prev_dominated || first_in)
                && (!key.first_out || key.first_dominated || last_in)
        } else if len == 1 {
            // a lone vertex here has a residual neighbor, so this never
            // happens; isolated vertices are handled by the caller
            !key.prev_out
        } else {
            !key.prev_out || key.prev_dominated
        };
        if !ok {
            continue;
        }
        match out.get_mut(&key.mask) {
            Some(e) => e.absorb(&span),
            None => {
                out.insert(key.mask, span);
            }
        }
    }
    (!out.is_empty()).then_some(out)
}

/// Drops states that missed a local constraint whose window just closed and
/// clears its bit so equivalent states merge.
fn close_constraints(states: &mut HashMap<Key, Span>, closing: &[usize]) {
    if closing.is_empty() {
        return;
    }
    let old = std::mem::take(states);
    for (mut key, span) in old {
        if closing.iter().all(|&c| key.mask.contains(c)) {
            for &c in closing {
                key.mask.set(c, false);
            }
            match states.get_mut(&key) {
                Some(e) => e.absorb(&span),
                None => {
                    states.insert(key, span);
                }
            }
        }
    }
}

/// Outcome of one budgeted run of the search tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchRun {
    /// Smallest and largest minimal covers found, if any.
    pub min_cover: Option<VertexSet>,
    pub max_cover: Option<VertexSet>,
    pub tree: TreeStats,
    /// No branch was cut by the budget, so every minimal cover was seen.
    pub exhaustive: bool,
    pub flagged_leaves: u64,
}

struct Search<'g> {
    g: &'g Graph,
    status: Vec<u8>,
    deg: Vec<usize>,
    cover_size: usize,
    run: BranchRun,
}

impl<'g> Search<'g> {
    fn set(&mut self, v: Vertex, to: u8) {
        debug_assert_eq!(self.status[v], RESIDUAL);
        self.status[v] = to;
        for &w in self.g.neighbors(v) {
            if self.status[w] == RESIDUAL {
                self.deg[w] -= 1;
            }
        }
        if to == COVER {
            self.cover_size += 1;
        }
    }

    fn reset(&mut self, v: Vertex) {
        if self.status[v] == COVER {
            self.cover_size -= 1;
        }
        self.status[v] = RESIDUAL;
        for &w in self.g.neighbors(v) {
            if self.status[w] == RESIDUAL {
                self.deg[w] += 1;
            }
        }
    }

    fn record(&mut self, x: &VertexSet) {
        let cover: VertexSet = self
            .g
            .vertices()
            .filter(|&v| self.status[v] == COVER)
            .chain(x.iter())
            .collect();
        debug_assert!(self.g.is_minimal_vertex_cover(&cover));
        let better_min = self.run.min_cover.as_ref().is_none_or(|c| cover.len() < c.len());
        let better_max = self.run.max_cover.as_ref().is_none_or(|c| cover.len() > c.len());
        if better_min {
            self.run.min_cover = Some(cover.clone());
        }
        if better_max {
            self.run.max_cover = Some(cover);
        }
    }

    fn leaf(&mut self) {
        self.run.tree.leaves += 1;
        if let Some(ext) = leaf_extensions(self.g, &self.status) {
            if ext.cross_constraints > CONSTRAINT_FLAG_THRESHOLD {
                self.run.flagged_leaves += 1;
            }
            self.record(&ext.min);
            self.record(&ext.max);
        }
    }

    fn node(&mut self, budget: usize) {
        self.run.tree.nodes += 1;
        let mut pick: Option<Vertex> = None;
        for v in self.g.vertices() {
            if self.status[v] == RESIDUAL && pick.is_none_or(|p| self.deg[v] > self.deg[p]) {
                pick = Some(v);
            }
        }
        let pick = pick.filter(|&p| self.deg[p] >= 3);
        if budget == 0 {
            let residual_edges = self
                .g
                .edges()
                .iter()
                .any(|&(u, v)| self.status[u] == RESIDUAL && self.status[v] == RESIDUAL);
            if residual_edges {
                // every completion is larger than the budget
                self.run.tree.leaves += 1;
                self.run.exhaustive = false;
            } else {
                self.leaf();
            }
            return;
        }
        let Some(x) = pick else {
            self.leaf();
            return;
        };
        // child 1: x in the cover
        self.set(x, COVER);
        self.node(budget - 1);
        self.reset(x);
        // child 2: x out, N(x) in
        let nbrs: Vec<Vertex> = self
            .g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&w| self.status[w] == RESIDUAL)
            .collect();
        if budget >= nbrs.len() {
            self.set(x, EXCLUDED);
            for &w in &nbrs {
                self.set(w, COVER);
            }
            self.node(budget - nbrs.len());
            for &w in nbrs.iter().rev() {
                self.reset(w);
            }
            self.reset(x);
        } else {
            self.run.exhaustive = false;
        }
    }
}

/// Runs the search tree with budget `k`.
///
/// Every minimal cover of size at most `k` is reachable, so for `k ≥ vc⁺` the
/// extremes are exactly `vc` and `vc⁺`. Leaf completions are not capped by the
/// budget, so larger covers may also be reported.
pub fn vc_and_vcplus_branching(g: &Graph, k: usize) -> BranchRun {
    let mut s = Search {
        g,
        status: vec![RESIDUAL; g.n()],
        deg: g.vertices().map(|v| g.degree(v)).collect(),
        cover_size: 0,
        run: BranchRun {
            min_cover: None,
            max_cover: None,
            tree: TreeStats { leaves: 0, nodes: 0, k },
            exhaustive: true,
            flagged_leaves: 0,
        },
    };
    s.node(k);
    debug_assert_eq!(s.cover_size, 0);
    s.run
}

/// Decides well-coveredness with the vc⁺ search tree.
///
/// The budget starts at the size of a greedy minimal cover (some minimal cover
/// has that size) and doubles until a run is exhaustive; the reported tree is
/// that of a final run with budget exactly `vc⁺`.
pub fn well_covered_via_branching(g: &Graph) -> WellCoveredReport {
    let start = Instant::now();
    let n = g.n();
    let greedy = g.greedy_maximal_independent_set(g.vertices());
    let mut k = n - greedy.len();
    let mut run = loop {
        let run = vc_and_vcplus_branching(g, k);
        if run.exhaustive || k >= n {
            break run;
        }
        k = (2 * k).clamp(1, n);
    };
    let vc_plus = run.max_cover.as_ref().expect("exhaustive runs find a minimal cover").len();
    if run.tree.k != vc_plus {
        run = vc_and_vcplus_branching(g, vc_plus);
    }
    let min_cover = run.min_cover.expect("budget vc⁺ reaches every minimal cover");
    let max_cover = run.max_cover.expect("budget vc⁺ reaches every minimal cover");
    debug_assert_eq!(max_cover.len(), vc_plus);
    let vc = min_cover.len();
    let mut report = if vc == vc_plus {
        WellCoveredReport::yes(n, n - vc)
    } else {
        WellCoveredReport::no(max_cover.complement(n), min_cover.complement(n))
    };
    report.alpha = Some(n - vc);
    report.vc = Some(vc);
    report.vc_plus = Some(vc_plus);
    report.stats = SearchStats {
        tree: Some(run.tree),
        flagged_leaves: Some(run.flagged_leaves),
        elapsed: start.elapsed(),
        ..Default::default()
    };
    report
}
