//! Minimal vertex cover enumeration from a minimum cover.
//!
//! Given a minimum vertex cover `C`, every minimal vertex cover `C'` equals
//! `A ∪ (N(B) \ B)` for the partition `A = C ∩ C'`, `B = C \ C'`. Walking all
//! `2^|C|` partitions and keeping the candidates that are minimal covers
//! therefore lists every minimal cover, which decides well-coveredness in
//! `O*(2^vc)`.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::matching::greedy_maximal_matching;
use crate::par::{self, Execution};
use crate::report::{SearchStats, WellCoveredReport};

/// Largest minimum cover the partition walk accepts (partitions are u64 masks).
pub const MAX_PARTITION_BITS: usize = 63;

// ---------------------------------------------------------------------------
// minimum vertex cover by bounded search

struct CoverSearch<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    deg: Vec<usize>,
    edges_alive: usize,
    cover: Vec<Vertex>,
    removed: Vec<Vertex>,
}

impl<'g> CoverSearch<'g> {
    fn new(g: &'g Graph) -> Self {
        Self {
            g,
            alive: vec![true; g.n()],
            deg: g.vertices().map(|v| g.degree(v)).collect(),
            edges_alive: g.m(),
            cover: Vec::new(),
            removed: Vec::new(),
        }
    }

    fn remove(&mut self, v: Vertex) {
        debug_assert!(self.alive[v]);
        self.alive[v] = false;
        self.edges_alive -= self.deg[v];
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                self.deg[w] -= 1;
            }
        }
        self.removed.push(v);
    }

    fn take(&mut self, v: Vertex) {
        self.remove(v);
        self.cover.push(v);
    }

    fn undo_to(&mut self, removed_len: usize, cover_len: usize) {
        while self.removed.len() > removed_len {
            let v = self.removed.pop().expect("non-empty");
            for &w in self.g.neighbors(v) {
                if self.alive[w] {
                    self.deg[w] += 1;
                }
            }
            self.alive[v] = true;
            self.edges_alive += self.deg[v];
        }
        self.cover.truncate(cover_len);
    }

    fn matching_lower_bound(&self) -> usize {
        let mut used = vec![false; self.g.n()];
        let mut size = 0;
        for &(u, v) in self.g.edges() {
            if self.alive[u] && self.alive[v] && !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                size += 1;
            }
        }
        size
    }

    /// Is there a cover of the alive graph with at most `k` more vertices?
    /// On success `self.cover` holds the full cover.
    fn solve(&mut self, mut k: usize) -> bool {
        let (removed_len, cover_len) = (self.removed.len(), self.cover.len());
        // a degree-1 vertex can always leave its neighbor to the cover
        loop {
            if self.edges_alive == 0 {
                return true;
            }
            let Some(u) = self.g.vertices().find(|&u| self.alive[u] && self.deg[u] == 1) else {
                break;
            };
            if k == 0 {
                self.undo_to(removed_len, cover_len);
                return false;
            }
            let w = *self
                .g
                .neighbors(u)
                .iter()
                .find(|&&w| self.alive[w])
                .expect("degree one");
            self.take(w);
            k -= 1;
        }
        let mut best: Option<Vertex> = None;
        for v in self.g.vertices() {
            if self.alive[v] && best.is_none_or(|b| self.deg[v] > self.deg[b]) {
                best = Some(v);
            }
        }
        let v = best.expect("edges remain");
        let dmax = self.deg[v];
        if k == 0 || self.edges_alive > k * dmax || self.matching_lower_bound() > k {
            self.undo_to(removed_len, cover_len);
            return false;
        }
        let mark = (self.removed.len(), self.cover.len());
        self.take(v);
        if self.solve(k - 1) {
            return true;
        }
        self.undo_to(mark.0, mark.1);
        if dmax <= k {
            let nbrs: Vec<Vertex> = self
                .g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| self.alive[w])
                .collect();
            for w in nbrs {
                self.take(w);
            }
            if self.solve(k - dmax) {
                return true;
            }
        }
        self.undo_to(removed_len, cover_len);
        false
    }
}

/// A minimum vertex cover, or `None` when `budget` is given and every cover
/// has more than `budget` vertices.
///
/// Bounded search branching on the lowest-id vertex of maximum degree (take it
/// first, then its neighborhood), with the degree-one rule applied at every
/// node; budgets are tried upward from a matching lower bound.
pub fn minimum_vertex_cover(g: &Graph, budget: Option<usize>) -> Option<VertexSet> {
    let lower = greedy_maximal_matching(g).len();
    let upper = 2 * lower;
    let cap = budget.map_or(upper, |b| b.min(upper));
    for k in lower..=cap {
        let mut search = CoverSearch::new(g);
        if search.solve(k) {
            return Some(search.cover.into_iter().collect());
        }
    }
    // the endpoints of a maximal matching always cover
    debug_assert!(budget.is_some_and(|b| b < upper));
    None
}

/// `vc(G)`.
pub fn vertex_cover_number(g: &Graph) -> usize {
    minimum_vertex_cover(g, None).expect("unbudgeted").len()
}

// ---------------------------------------------------------------------------
// partitions of the minimum cover

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartitionVerdict {
    MinimalCover,
    CoverNotMinimal,
    NotACover,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCandidate {
    pub a: VertexSet,
    pub b: VertexSet,
    /// `A ∪ (N(B) \ B)`.
    pub candidate: VertexSet,
    pub verdict: PartitionVerdict,
}

/// Classifies one partition `(A, B)` of `cover` given by its `B` side, by
/// direct construction of the candidate set.
pub fn classify_partition(g: &Graph, cover: &VertexSet, b: &VertexSet) -> Result<PartitionCandidate> {
    if !b.is_subset(cover) {
        return Err(Error::Contract("B must be a subset of the cover".into()));
    }
    let a = cover.difference(b);
    let nb: VertexSet = b.iter().flat_map(|v| g.neighbors(v).iter().copied()).collect();
    let candidate = a.union(&nb.difference(b));
    let verdict = if !g.is_vertex_cover(&candidate) {
        PartitionVerdict::NotACover
    } else if g.is_minimal_vertex_cover(&candidate) {
        PartitionVerdict::MinimalCover
    } else {
        PartitionVerdict::CoverNotMinimal
    };
    Ok(PartitionCandidate { a, b: b.clone(), candidate, verdict })
}

/// Precomputed bit masks for evaluating partitions in `O(classes)` time.
///
/// Bit `i` of a mask stands for `cover[i]`. Vertices outside the cover form
/// an independent set and are grouped by their (cover-side) neighborhood.
struct PartitionScanner {
    cover: Vec<Vertex>,
    /// Cover-internal adjacency.
    inner: Vec<u64>,
    /// `(neighborhood mask, number of outside vertices with it)`.
    classes: Vec<(u64, usize)>,
    outside: Vec<(Vertex, u64)>,
    full: u64,
}

impl PartitionScanner {
    fn new(g: &Graph, cover: &VertexSet) -> Self {
        let n = g.n();
        let mut index = vec![usize::MAX; n];
        for (i, v) in cover.iter().enumerate() {
            index[v] = i;
        }
        let mask_of = |v: Vertex| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| index[w] != usize::MAX)
                .fold(0u64, |acc, &w| acc | 1 << index[w])
        };
        let inner = cover.iter().map(mask_of).collect();
        let outside: Vec<(Vertex, u64)> = g
            .vertices()
            .filter(|&v| index[v] == usize::MAX)
            .map(|v| (v, mask_of(v)))
            .collect();
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for &(_, m) in &outside {
            *counts.entry(m).or_default() += 1;
        }
        let c = cover.len();
        Self {
            cover: cover.as_slice().to_vec(),
            inner,
            classes: counts.into_iter().collect(),
            outside,
            full: if c == 64 { u64::MAX } else { (1u64 << c) - 1 },
        }
    }

    /// Size of `A ∪ (N(B) \ B)` when it is a minimal cover, else `None`.
    fn eval(&self, b: u64) -> Option<usize> {
        let mut nb_of_b = 0u64;
        let mut bits = b;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if self.inner[i] & b != 0 {
                return None;
            }
            nb_of_b |= self.inner[i];
        }
        let mut free = 0u64;
        let mut size = (self.full & !b).count_ones() as usize;
        for &(m, count) in &self.classes {
            if m & b == 0 {
                free |= m;
            } else {
                size += count;
            }
        }
        let a = self.full & !b;
        (a & !(nb_of_b | free) == 0).then_some(size)
    }

    fn build(&self, b: u64) -> VertexSet {
        let mut out: Vec<Vertex> = (0..self.cover.len())
            .filter(|&i| b & (1 << i) == 0)
            .map(|i| self.cover[i])
            .collect();
        out.extend(self.outside.iter().filter(|&&(_, m)| m & b != 0).map(|&(v, _)| v));
        out.into_iter().collect()
    }
}

#[derive(Default)]
struct ChunkResult {
    examined: u64,
    /// `(size, b)` of the first smallest / largest minimal cover.
    min: Option<(usize, u64)>,
    max: Option<(usize, u64)>,
    emitted: Vec<u64>,
    deviation: Option<u64>,
}

#[derive(Clone, Copy)]
enum ScanMode {
    Collect,
    Extremes,
    /// Stop at the first minimal cover whose size differs from the argument.
    DecideOnly(usize),
}

fn scan_range(scanner: &PartitionScanner, lo: u64, hi: u64, mode: ScanMode, cutoff: &AtomicU64) -> ChunkResult {
    let mut r = ChunkResult::default();
    for b in lo..hi {
        if let ScanMode::DecideOnly(_) = mode {
            if b > cutoff.load(Ordering::Relaxed) {
                break;
            }
        }
        r.examined += 1;
        let Some(size) = scanner.eval(b) else { continue };
        if r.min.is_none_or(|(s, _)| size < s) {
            r.min = Some((size, b));
        }
        if r.max.is_none_or(|(s, _)| size > s) {
            r.max = Some((size, b));
        }
        match mode {
            ScanMode::Collect => r.emitted.push(b),
            ScanMode::Extremes => {}
            ScanMode::DecideOnly(target) => {
                if size != target {
                    r.deviation = Some(b);
                    cutoff.fetch_min(b, Ordering::Relaxed);
                    break;
                }
            }
        }
    }
    r
}

fn scan(scanner: &PartitionScanner, mode: ScanMode, execution: Execution) -> ChunkResult {
    let c = scanner.cover.len();
    let total: u64 = 1u64 << c;
    let chunks: u64 = if execution.is_parallel() && c >= 10 {
        (par::threads() as u64 * 16).min(total)
    } else {
        1
    };
    let cutoff = AtomicU64::new(u64::MAX);
    let step = total.div_ceil(chunks);
    let parts = par::map_range(chunks as usize, execution, |i| {
        let lo = i as u64 * step;
        let hi = (lo + step).min(total);
        scan_range(scanner, lo, hi, mode, &cutoff)
    });
    // merge in partition order: earliest b wins ties
    let mut out = ChunkResult::default();
    for p in parts {
        out.examined += p.examined;
        if let Some((s, b)) = p.min {
            if out.min.is_none_or(|(bs, _)| s < bs) {
                out.min = Some((s, b));
            }
        }
        if let Some((s, b)) = p.max {
            if out.max.is_none_or(|(bs, _)| s > bs) {
                out.max = Some((s, b));
            }
        }
        out.emitted.extend(p.emitted);
        if out.deviation.is_none() {
            out.deviation = p.deviation;
        }
    }
    out
}

fn check_minimum(g: &Graph, cmin: &VertexSet) -> Result<()> {
    if !g.is_vertex_cover(cmin) {
        return Err(Error::Contract("the reference set is not a vertex cover".into()));
    }
    if !cmin.is_empty() && minimum_vertex_cover(g, Some(cmin.len() - 1)).is_some() {
        return Err(Error::Contract("the reference cover is not minimum".into()));
    }
    if cmin.len() > MAX_PARTITION_BITS {
        return Err(Error::GuardExceeded {
            what: "minimum vertex cover size for partition enumeration",
            limit: MAX_PARTITION_BITS,
            got: cmin.len(),
        });
    }
    Ok(())
}

/// Every minimal vertex cover of `g`, in binary-counter order of the `B`
/// side of the partition that produced it. `cmin` must be a minimum cover.
pub fn enumerate_minimal_vertex_covers(g: &Graph, cmin: &VertexSet, execution: Execution) -> Result<Vec<VertexSet>> {
    check_minimum(g, cmin)?;
    let scanner = PartitionScanner::new(g, cmin);
    let r = scan(&scanner, ScanMode::Collect, execution);
    debug_assert_eq!(r.examined, 1u64 << cmin.len());
    let mut seen = HashSet::new();
    Ok(r.emitted
        .into_iter()
        .map(|b| scanner.build(b))
        .filter(|s| seen.insert(s.clone()))
        .collect())
}

/// Number of minimal vertex covers (without materializing them).
pub fn count_minimal_vertex_covers(g: &Graph, cmin: &VertexSet, execution: Execution) -> Result<u64> {
    check_minimum(g, cmin)?;
    let scanner = PartitionScanner::new(g, cmin);
    Ok(scan(&scanner, ScanMode::Collect, execution).emitted.len() as u64)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MvcEnumOptions {
    /// Stop at the first minimal cover whose size differs from `vc`.
    pub decide_only: bool,
    pub execution: Execution,
}

/// Decides well-coveredness by walking all partitions of a minimum cover.
///
/// In full mode `vc_plus` is exact; in decide-only mode a NO answer leaves
/// `vc_plus` unset.
pub fn well_covered_via_mvc_enum(g: &Graph, options: MvcEnumOptions) -> Result<WellCoveredReport> {
    let start = Instant::now();
    let cmin = minimum_vertex_cover(g, None).expect("unbudgeted");
    if cmin.len() > MAX_PARTITION_BITS {
        return Err(Error::GuardExceeded {
            what: "minimum vertex cover size for partition enumeration",
            limit: MAX_PARTITION_BITS,
            got: cmin.len(),
        });
    }
    let n = g.n();
    let vc = cmin.len();
    let scanner = PartitionScanner::new(g, &cmin);
    let mode = if options.decide_only {
        ScanMode::DecideOnly(vc)
    } else {
        ScanMode::Extremes
    };
    let r = scan(&scanner, mode, options.execution);
    let (min_size, _) = r.min.expect("the minimum cover itself is found at B = ∅");
    debug_assert_eq!(min_size, vc);
    let mut report = match (options.decide_only, r.deviation) {
        (true, None) => WellCoveredReport::yes(n, n - vc),
        (true, Some(b)) => {
            let dev = scanner.build(b);
            let mut rep = WellCoveredReport::no(cmin.complement(n), dev.complement(n));
            rep.alpha = Some(n - vc);
            rep.vc = Some(vc);
            rep
        }
        (false, _) => {
            let (max_size, max_b) = r.max.expect("non-empty");
            if max_size == vc {
                WellCoveredReport::yes(n, n - vc)
            } else {
                let mut rep = WellCoveredReport::no(
                    scanner.build(0).complement(n),
                    scanner.build(max_b).complement(n),
                );
                rep.alpha = Some(n - vc);
                rep.vc = Some(vc);
                rep.vc_plus = Some(max_size);
                rep
            }
        }
    };
    report.stats = SearchStats {
        partitions: Some(r.examined),
        elapsed: start.elapsed(),
        ..Default::default()
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_minimal_vertex_covers_oracle, OracleConfig};

    /// c1..c5 = 0..4, n1..n5 = 5..9.
    fn ten_vertex_example() -> Graph {
        Graph::from_edges(
            10,
            [(0, 1), (1, 2), (2, 3), (0, 5), (0, 6), (1, 6), (2, 7), (3, 8), (4, 8), (4, 9)],
        )
        .unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn minimum_cover_examples() {
        let c = minimum_vertex_cover(&ten_vertex_example(), None).unwrap();
        assert_eq!(c.len(), 5);
        assert!(ten_vertex_example().is_vertex_cover(&c));
        assert_eq!(vertex_cover_number(&cycle(5)), 3);
        assert_eq!(minimum_vertex_cover(&Graph::empty(4), None), Some(VertexSet::new()));
        assert_eq!(minimum_vertex_cover(&cycle(5), Some(2)), None);
        assert_eq!(minimum_vertex_cover(&cycle(5), Some(3)).unwrap().len(), 3);
    }

    #[test]
    fn ten_vertex_example_partitions() {
        let g = ten_vertex_example();
        let cover = VertexSet::from([0, 1, 2, 3, 4]);
        // B = {c5}: candidate {c1..c4, n4, n5}, c4 redundant
        let first = classify_partition(&g, &cover, &VertexSet::from([4])).unwrap();
        assert_eq!(first.candidate, VertexSet::from([0, 1, 2, 3, 8, 9]));
        assert_eq!(first.verdict, PartitionVerdict::CoverNotMinimal);
        // B = {c1, c2}: edge c1c2 inside B
        let second = classify_partition(&g, &cover, &VertexSet::from([0, 1])).unwrap();
        assert_eq!(second.verdict, PartitionVerdict::NotACover);
        // B = {c1}: {c2..c5, n1, n2}
        let third = classify_partition(&g, &cover, &VertexSet::from([0])).unwrap();
        assert_eq!(third.candidate, VertexSet::from([1, 2, 3, 4, 5, 6]));
        assert_eq!(third.verdict, PartitionVerdict::MinimalCover);
        let all = enumerate_minimal_vertex_covers(&g, &cover, Execution::Sequential).unwrap();
        assert!(all.contains(&third.candidate));
        assert!(!all.contains(&first.candidate));
    }

    #[test]
    fn c4_enumeration() {
        let g = cycle(4);
        let covers = enumerate_minimal_vertex_covers(&g, &VertexSet::from([0, 2]), Execution::Sequential).unwrap();
        assert_eq!(covers, vec![VertexSet::from([0, 2]), VertexSet::from([1, 3])]);
    }

    #[test]
    fn rejects_non_minimum_reference() {
        let g = cycle(4);
        assert!(matches!(
            enumerate_minimal_vertex_covers(&g, &VertexSet::from([0, 1, 2]), Execution::Sequential),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            enumerate_minimal_vertex_covers(&g, &VertexSet::from([0]), Execution::Sequential),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn decision_examples() {
        let full = MvcEnumOptions::default();
        let r = well_covered_via_mvc_enum(&cycle(7), full).unwrap();
        assert!(r.well_covered);
        assert_eq!((r.vc, r.vc_plus), (Some(4), Some(4)));

        let r = well_covered_via_mvc_enum(&star(4), full).unwrap();
        assert!(!r.well_covered);
        assert_eq!((r.vc, r.vc_plus), (Some(1), Some(4)));
        assert_eq!(r.witness_large.unwrap(), VertexSet::from([1, 2, 3, 4]));
        assert_eq!(r.witness_small.unwrap(), VertexSet::from([0]));

        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(well_covered_via_mvc_enum(&k2, full).unwrap().well_covered);

        let decide = MvcEnumOptions { decide_only: true, ..full };
        let r = well_covered_via_mvc_enum(&star(4), decide).unwrap();
        assert!(!r.well_covered);
        assert!(r.stats.partitions.unwrap() <= 2);
    }

    #[test]
    fn partition_count_is_exact() {
        let g = ten_vertex_example();
        let r = well_covered_via_mvc_enum(&g, MvcEnumOptions::default()).unwrap();
        assert_eq!(r.stats.partitions, Some(32));
    }

    #[test]
    fn matches_oracle_on_ten_vertex_example() {
        let g = ten_vertex_example();
        let cmin = minimum_vertex_cover(&g, None).unwrap();
        let mut ours = enumerate_minimal_vertex_covers(&g, &cmin, Execution::Sequential).unwrap();
        let mut theirs = enumerate_minimal_vertex_covers_oracle(&g, &OracleConfig::default()).unwrap();
        ours.sort();
        theirs.sort();
        assert_eq!(ours, theirs);
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        // 12 disjoint edges plus a hub: cover of size 12
        let mut edges: Vec<_> = (0..12).map(|i| (2 * i, 2 * i + 1)).collect();
        edges.extend((0..12).map(|i| (2 * i, 24)));
        let g = Graph::from_edges(25, edges).unwrap();
        let cmin = minimum_vertex_cover(&g, None).unwrap();
        let a = enumerate_minimal_vertex_covers(&g, &cmin, Execution::Sequential).unwrap();
        let b = enumerate_minimal_vertex_covers(&g, &cmin, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        for decide_only in [false, true] {
            let seq = well_covered_via_mvc_enum(&g, MvcEnumOptions { decide_only, execution: Execution::Sequential }).unwrap();
            let par = well_covered_via_mvc_enum(&g, MvcEnumOptions { decide_only, execution: Execution::Parallel }).unwrap();
            assert_eq!(seq.witness_small, par.witness_small);
            assert_eq!(seq.witness_large, par.witness_large);
            assert_eq!(seq.vc_plus, par.vc_plus);
        }
    }
}
