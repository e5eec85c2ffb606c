//! Greedy maximal matchings and augmenting-path bipartite matchings.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex, VertexSet};

/// Vertex-disjoint edges; each pair is stored as given by the producer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.pairs.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Every pair is an edge of `g` and no vertex appears twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        for &(u, v) in &self.pairs {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }
}

/// Scans the edges in sorted order and keeps every edge disjoint from the
/// ones already taken.
pub fn greedy_maximal_matching(g: &Graph) -> Matching {
    let mut used = vec![false; g.n()];
    let mut pairs = Vec::new();
    for &(u, v) in g.edges() {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            pairs.push((u, v));
        }
    }
    Matching { pairs }
}

/// A maximum matching between two disjoint sides, with the mate table kept
/// so callers can walk alternating paths.
#[derive(Clone, Debug)]
pub struct BipartiteMatching {
    /// Pairs as `(left, right)`, ordered by left vertex.
    pub matching: Matching,
    mate: Vec<Option<Vertex>>,
    left: VertexSet,
    right: VertexSet,
}

impl BipartiteMatching {
    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    pub fn len(&self) -> usize {
        self.matching.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matching.is_empty()
    }

    pub fn unmatched_right(&self) -> VertexSet {
        self.right.iter().filter(|&v| self.mate[v].is_none()).collect()
    }

    pub fn unmatched_left(&self) -> VertexSet {
        self.left.iter().filter(|&v| self.mate[v].is_none()).collect()
    }

    /// Vertices reachable from the unmatched right-side vertices by
    /// alternating paths (any cross edge right→left, matching edge left→right).
    /// Returns `(right_reached, left_reached)`. When the matching is maximum,
    /// every reached left vertex is matched.
    pub fn alternating_reach_from_right(&self, g: &Graph) -> (VertexSet, VertexSet) {
        let n = g.n();
        let in_left = self.left.to_mask(n);
        let mut seen = vec![false; n];
        let mut queue: VecDeque<Vertex> = VecDeque::new();
        for v in self.unmatched_right().iter() {
            seen[v] = true;
            queue.push_back(v);
        }
        let (mut right, mut left) = (Vec::new(), Vec::new());
        while let Some(r) = queue.pop_front() {
            right.push(r);
            for &l in g.neighbors(r) {
                if !in_left[l] || seen[l] || self.mate[r] == Some(l) {
                    continue;
                }
                seen[l] = true;
                left.push(l);
                if let Some(r2) = self.mate[l] {
                    if !seen[r2] {
                        seen[r2] = true;
                        queue.push_back(r2);
                    }
                }
            }
        }
        (right.into_iter().collect(), left.into_iter().collect())
    }
}

/// Maximum-cardinality matching of the bipartite subgraph between `left` and
/// `right` (edges inside a side are ignored). Augmenting paths are searched
/// from left vertices in ascending order.
pub fn max_bipartite_matching(g: &Graph, left: &VertexSet, right: &VertexSet) -> BipartiteMatching {
    let n = g.n();
    let in_right = right.to_mask(n);
    let mut mate: Vec<Option<Vertex>> = vec![None; n];

    fn augment(
        g: &Graph,
        u: Vertex,
        in_right: &[bool],
        mate: &mut [Option<Vertex>],
        visited: &mut [bool],
    ) -> bool {
        for &w in g.neighbors(u) {
            if !in_right[w] || visited[w] {
                continue;
            }
            visited[w] = true;
            let free = match mate[w] {
                None => true,
                Some(u2) => augment(g, u2, in_right, mate, visited),
            };
            if free {
                mate[w] = Some(u);
                mate[u] = Some(w);
                return true;
            }
        }
        false
    }

    let mut visited = vec![false; n];
    for u in left.iter() {
        visited.iter_mut().for_each(|b| *b = false);
        augment(g, u, &in_right, &mut mate, &mut visited);
    }
    let pairs = left
        .iter()
        .filter_map(|u| mate[u].map(|w| (u, w)))
        .collect();
    BipartiteMatching {
        matching: Matching { pairs },
        mate,
        left: left.clone(),
        right: right.clone(),
    }
}

/// Maximum matching size of a general graph by exhaustive search; test oracle
/// for small graphs only.
pub fn brute_force_maximum_matching(g: &Graph) -> usize {
    fn rec(edges: &[(Vertex, Vertex)], used: &mut Vec<bool>) -> usize {
        let Some((&(u, v), rest)) = edges.split_first() else {
            return 0;
        };
        let skip = rec(rest, used);
        if used[u] || used[v] {
            return skip;
        }
        used[u] = true;
        used[v] = true;
        let take = 1 + rec(rest, used);
        used[u] = false;
        used[v] = false;
        skip.max(take)
    }
    rec(g.edges(), &mut vec![false; g.n()])
}
