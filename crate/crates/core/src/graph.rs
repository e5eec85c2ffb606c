//! Simple undirected graphs over dense vertex ids `0..n`.
//!
//! Every iteration order exposed here (neighbors, edges, components) is by
//! ascending id, so all algorithms built on top are deterministic.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        Self(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &b)| b.then_some(v))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// `{0..n} \ self`.
    pub fn complement(&self, n: usize) -> VertexSet {
        let mask = self.to_mask(n);
        (0..n).filter(|&v| !mask[v]).collect()
    }

    /// Translate every member through `map` (e.g. an induced-subgraph id map).
    pub fn translate(&self, map: &[Vertex]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Immutable simple undirected graph.
///
/// Adjacency lists are sorted; `edges` lists every unordered pair once as
/// `(u, v)` with `u < v`, in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

/// An induced subgraph together with the map from its ids back to the host.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `map[i]` is the host vertex for subgraph vertex `i`; ascending.
    pub map: Vec<Vertex>,
}

impl Induced {
    pub fn to_host(&self, s: &VertexSet) -> VertexSet {
        s.translate(&self.map)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list. Parallel edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_sorted_edges(n, set.into_iter().collect()))
    }

    fn from_sorted_edges(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { adj, edges }
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(Vertex, Vertex) -> bool) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted_edges(n, edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> Range<Vertex> {
        0..self.n()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        self.adj[v].iter().copied().chain([v]).collect()
    }

    /// Vertices of degree zero.
    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2 - self.m());
        for u in 0..n {
            let mut nb = self.adj[u].iter().peekable();
            for v in u + 1..n {
                while nb.peek().is_some_and(|&&w| w < v) {
                    nb.next();
                }
                if nb.peek() != Some(&&v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted_edges(n, edges)
    }

    /// Connected components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// The subgraph induced by `s`, relabelled `0..|s|` in ascending host order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Induced> {
        if let Some(v) = s.max() {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
            }
        }
        let mut index = vec![usize::MAX; self.n()];
        for (i, v) in s.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, u) in s.iter().enumerate() {
            for &w in &self.adj[u] {
                if w > u && index[w] != usize::MAX {
                    edges.push((i, index[w]));
                }
            }
        }
        edges.sort_unstable();
        Ok(Induced {
            graph: Self::from_sorted_edges(s.len(), edges),
            map: s.as_slice().to_vec(),
        })
    }

    /// `induced_subgraph(V \ s)`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Induced {
        self.induced_subgraph(&s.complement(self.n()))
            .expect("complement is in range")
    }

    /// Repeatedly removes a minimum-degree vertex (lowest id on ties).
    /// Returns the removal order and the largest degree seen at removal,
    /// which is the degeneracy.
    pub fn degeneracy_ordering(&self) -> (Vec<Vertex>, usize) {
        let n = self.n();
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut buckets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); self.max_degree() + 1];
        for v in 0..n {
            buckets[deg[v]].insert(v);
        }
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut d = 0;
        let mut low = 0;
        for _ in 0..n {
            while buckets[low].is_empty() {
                low += 1;
            }
            let v = buckets[low].pop_first().expect("non-empty bucket");
            d = d.max(low);
            removed[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    buckets[deg[w]].remove(&w);
                    deg[w] -= 1;
                    buckets[deg[w]].insert(w);
                }
            }
            low = low.saturating_sub(1);
        }
        (order, d)
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy_ordering().1
    }

    pub fn is_vertex_cover(&self, s: &VertexSet) -> bool {
        let mask = s.to_mask(self.n());
        self.edges.iter().all(|&(u, v)| mask[u] || mask[v])
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        let mask = s.to_mask(self.n());
        self.edges.iter().all(|&(u, v)| !(mask[u] && mask[v]))
    }

    /// A cover is minimal iff every member has a neighbor outside it.
    pub fn is_minimal_vertex_cover(&self, s: &VertexSet) -> bool {
        if s.max().is_some_and(|v| v >= self.n()) {
            return false;
        }
        let mask = s.to_mask(self.n());
        self.edges.iter().all(|&(u, v)| mask[u] || mask[v])
            && s.iter().all(|v| self.adj[v].iter().any(|&w| !mask[w]))
    }

    /// Independent, and every vertex outside has a neighbor inside.
    pub fn is_maximal_independent_set(&self, s: &VertexSet) -> bool {
        if s.max().is_some_and(|v| v >= self.n()) {
            return false;
        }
        let mask = s.to_mask(self.n());
        self.edges.iter().all(|&(u, v)| !(mask[u] && mask[v]))
            && self
                .vertices()
                .all(|v| mask[v] || self.adj[v].iter().any(|&w| mask[w]))
    }

    /// Greedy maximal independent set scanning vertices in the given order.
    pub fn greedy_maximal_independent_set(&self, order: impl IntoIterator<Item = Vertex>) -> VertexSet {
        let mut blocked = vec![false; self.n()];
        let mut out = Vec::new();
        for v in order {
            if !blocked[v] {
                out.push(v);
                blocked[v] = true;
                for &w in &self.adj[v] {
                    blocked[w] = true;
                }
            }
        }
        let mut s: VertexSet = out.into_iter().collect();
        // vertices never scanned
        for v in self.vertices() {
            if !blocked[v] {
                s.insert(v);
                blocked[v] = true;
                for &w in &self.adj[v] {
                    blocked[w] = true;
                }
            }
        }
        s
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)))
            .collect();
        Self::from_sorted_edges(off + other.n(), edges)
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut edges: Vec<_> = self.edges.clone();
        for u in 0..off {
            for v in 0..other.n() {
                edges.push((u, v + off));
            }
        }
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        edges.sort_unstable();
        Self::from_sorted_edges(off + other.n(), edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn from_edges_dedups_and_rejects_loops() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(c4().complement().edges(), &[(0, 2), (1, 3)]);
        let k3 = Graph::from_fn(3, |_, _| true);
        assert_eq!(k3.complement().m(), 0);
        // P4 a-b-c-d = 0-1-2-3; complement has edges 02, 03, 13 = path 1-3-0-2 (b-d-a-c)
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let expected: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .filter(|&(u, v)| !p4.has_edge(u, v))
            .collect();
        assert_eq!(p4.complement().edges(), expected.as_slice());
        assert_eq!(p4.complement().edges(), &[(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn components_examples() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            two_k2.connected_components(),
            vec![VertexSet::from([0, 1]), VertexSet::from([2, 3])]
        );
        assert_eq!(cycle(5).connected_components().len(), 1);
        assert_eq!(
            Graph::empty(3).connected_components(),
            vec![VertexSet::from([0]), VertexSet::from([1]), VertexSet::from([2])]
        );
        assert!(Graph::empty(0).connected_components().is_empty());
    }

    #[test]
    fn induced_examples() {
        let p = cycle(5).induced_subgraph(&VertexSet::from([1, 2, 3])).unwrap();
        assert_eq!(p.graph.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(p.map, vec![1, 2, 3]);
        let e = c4().induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(e.graph.n(), 0);
        let two = c4().induced_subgraph(&VertexSet::from([0, 2])).unwrap();
        assert_eq!((two.graph.n(), two.graph.m()), (2, 0));
        assert!(c4().induced_subgraph(&VertexSet::from([4])).is_err());
    }

    #[test]
    fn degeneracy_examples() {
        let tree = Graph::from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(tree.degeneracy(), 1);
        assert_eq!(c4().degeneracy(), 2);
        assert_eq!(Graph::from_fn(4, |_, _| true).degeneracy(), 3);
        assert_eq!(Graph::empty(0).degeneracy_ordering(), (vec![], 0));
    }

    #[test]
    fn cover_predicates() {
        let g = c4();
        assert!(g.is_minimal_vertex_cover(&VertexSet::from([0, 2])));
        assert!(!g.is_minimal_vertex_cover(&VertexSet::from([0, 1, 2])));
        assert!(!g.is_minimal_vertex_cover(&VertexSet::from([0])));
        assert!(g.is_maximal_independent_set(&VertexSet::from([1, 3])));
        assert!(!g.is_maximal_independent_set(&VertexSet::from([1])));
        assert!(Graph::empty(2).is_minimal_vertex_cover(&VertexSet::new()));
    }

    #[test]
    fn join_and_union_sizes() {
        let a = cycle(4);
        let b = cycle(5);
        assert_eq!(a.disjoint_union(&b).m(), 9);
        let j = a.join(&b);
        assert_eq!(j.m(), 9 + 20);
        assert!(j.has_edge(0, 4));
    }
}
