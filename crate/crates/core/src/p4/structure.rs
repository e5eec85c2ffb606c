//! Induced P4s, p-components and the pseudo-split / spider / separable
//! p-component structures.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Largest graph accepted by the `O(n⁴)` P4 enumeration.
pub const P4_GUARD: usize = 500;

fn guard(g: &Graph) -> Result<()> {
    if g.n() > P4_GUARD {
        return Err(Error::GuardExceeded {
            what: "P4 enumeration vertex count",
            limit: P4_GUARD,
            got: g.n(),
        });
    }
    Ok(())
}

/// Calls `f(w, x, y, z)` once per induced P4 `w-x-y-z`. Each P4 is reported
/// with its middle edge oriented `x < y`.
pub fn for_each_p4(g: &Graph, mut f: impl FnMut(Vertex, Vertex, Vertex, Vertex)) {
    for &(x, y) in g.edges() {
        for &w in g.neighbors(x) {
            if w == y || g.has_edge(w, y) {
                continue;
            }
            for &z in g.neighbors(y) {
                if z == x || z == w || g.has_edge(z, x) || g.has_edge(w, z) {
                    continue;
                }
                f(w, x, y, z);
            }
        }
    }
}

pub fn induced_p4s(g: &Graph) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for_each_p4(g, |w, x, y, z| out.push([w, x, y, z]));
    out
}

pub fn count_p4s(g: &Graph) -> usize {
    let mut c = 0;
    for_each_p4(g, |_, _, _, _| c += 1);
    c
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Classes of the relation "lie together in an induced P4", ordered by
/// smallest vertex. Vertices in no P4 are singletons.
pub fn p_components(g: &Graph) -> Result<Vec<VertexSet>> {
    guard(g)?;
    let mut dsu = Dsu((0..g.n()).collect());
    for_each_p4(g, |w, x, y, z| {
        dsu.union(w, x);
        dsu.union(x, y);
        dsu.union(y, z);
    });
    let mut groups: Vec<Vec<Vertex>> = vec![Vec::new(); g.n()];
    for v in g.vertices() {
        let r = dsu.find(v);
        groups[r].push(v);
    }
    Ok(groups.into_iter().filter(|c| !c.is_empty()).map(VertexSet::from).collect())
}

pub fn is_p_connected(g: &Graph) -> Result<bool> {
    Ok(g.n() <= 1 || p_components(g)?.len() == 1)
}

/// `(R, C, S)`: `C` a clique, `S` independent, `R` complete to `C` and
/// anticomplete to `S`, every `C` vertex with an `S` neighbor and every `S`
/// vertex with a `C` non-neighbor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoSplitPartition {
    pub r: VertexSet,
    pub c: VertexSet,
    pub s: VertexSet,
}

impl PseudoSplitPartition {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let (r, c, s) = (&self.r, &self.c, &self.s);
        if r.len() + c.len() + s.len() != g.n()
            || r.max().is_some_and(|v| v >= g.n())
            || c.max().is_some_and(|v| v >= g.n())
            || s.max().is_some_and(|v| v >= g.n())
            || !r.is_disjoint(c)
            || !r.is_disjoint(s)
            || !c.is_disjoint(s)
        {
            return false;
        }
        let clique = c.iter().all(|x| c.iter().all(|y| x == y || g.has_edge(x, y)));
        let r_ok = r
            .iter()
            .all(|x| c.iter().all(|y| g.has_edge(x, y)) && s.iter().all(|y| !g.has_edge(x, y)));
        clique
            && g.is_independent_set(s)
            && r_ok
            && c.iter().all(|x| s.iter().any(|y| g.has_edge(x, y)))
            && s.iter().all(|x| c.iter().any(|y| !g.has_edge(x, y)))
    }
}

/// Finds a pseudo-split partition by degree stratification.
///
/// In any valid partition `deg(c) ≥ |C| + |R| > deg(r) ≥ |C| > deg(s)`, so
/// `C` is a prefix of the vertices sorted by decreasing degree and `R` the
/// next block. Every split point with strict degree gaps is verified; the
/// first valid one (smallest `|C|`, then smallest `|R|`) is returned.
pub fn pseudo_split_partition(g: &Graph) -> Option<PseudoSplitPartition> {
    let n = g.n();
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg = |i: usize| g.degree(order[i]);
    for c in 1..n {
        if deg(c - 1) == deg(c) || deg(c - 1) < c {
            continue;
        }
        for r in 0..n - c {
            let s_start = c + r;
            if r > 0 && (deg(c - 1) < c + r || deg(s_start - 1) < c) {
                break;
            }
            if s_start < n && deg(s_start) >= c {
                continue;
            }
            if r > 0 && deg(s_start - 1) == deg(s_start) {
                continue;
            }
            let part = PseudoSplitPartition {
                c: order[..c].iter().copied().collect(),
                r: order[c..s_start].iter().copied().collect(),
                s: order[s_start..].iter().copied().collect(),
            };
            if part.is_valid_in(g) {
                return Some(part);
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpiderKind {
    Thin,
    Thick,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    C,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Replacement {
    K2,
    CoK2,
}

/// Vertex `kept` of the spider was replaced by the pair `{kept, twin}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    pub side: Side,
    pub replacement: Replacement,
    pub kept: Vertex,
    pub twin: Vertex,
}

/// A spider (`|C| = |S| = k ≥ 2`) or quasi-spider. `base` holds the spider
/// itself in host ids, without the substituted twin; `pairing[i] = (c_i, s_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderPartition {
    pub base: PseudoSplitPartition,
    pub kind: SpiderKind,
    pub pairing: Vec<(Vertex, Vertex)>,
    pub substitution: Option<Substitution>,
}

impl SpiderPartition {
    pub fn k(&self) -> usize {
        self.pairing.len()
    }

    /// `C` and `S` in the host graph, including the twin.
    pub fn sides(&self) -> (VertexSet, VertexSet) {
        let (mut c, mut s) = (self.base.c.clone(), self.base.s.clone());
        if let Some(sub) = self.substitution {
            match sub.side {
                Side::C => c.insert(sub.twin),
                Side::S => s.insert(sub.twin),
            };
        }
        (c, s)
    }
}

/// Thin when each `c` has exactly one `S` neighbor, thick when exactly one
/// `S` non-neighbor. With `k = 2` the two coincide and thin is reported.
fn spider_from_partition(g: &Graph, p: PseudoSplitPartition) -> Option<SpiderPartition> {
    let k = p.c.len();
    if k < 2 || p.s.len() != k {
        return None;
    }
    for kind in [SpiderKind::Thin, SpiderKind::Thick] {
        let mut pairing = Vec::with_capacity(k);
        let mut used = vec![false; g.n()];
        let ok = p.c.iter().all(|c| {
            let partner: Vec<Vertex> = p
                .s
                .iter()
                .filter(|&s| g.has_edge(c, s) == (kind == SpiderKind::Thin))
                .collect();
            match partner[..] {
                [s] if !used[s] => {
                    used[s] = true;
                    pairing.push((c, s));
                    true
                }
                _ => false,
            }
        });
        if ok {
            return Some(SpiderPartition {
                base: p,
                kind,
                pairing,
                substitution: None,
            });
        }
    }
    None
}

pub fn spider_partition(g: &Graph) -> Option<SpiderPartition> {
    spider_from_partition(g, pseudo_split_partition(g)?)
}

/// Spider detection, then for every true-twin pair (`K2`) or false-twin pair
/// (`co-K2`) in increasing order: drop the larger vertex and retry.
pub fn quasi_spider_partition(g: &Graph) -> Option<SpiderPartition> {
    if let Some(s) = spider_partition(g) {
        return Some(s);
    }
    for a in g.vertices() {
        for b in a + 1..g.n() {
            let replacement = if g.has_edge(a, b) {
                if g.closed_neighborhood(a) != g.closed_neighborhood(b) {
                    continue;
                }
                Replacement::K2
            } else {
                if g.neighbors(a) != g.neighbors(b) {
                    continue;
                }
                Replacement::CoK2
            };
            let keep = VertexSet::from([b]).complement(g.n());
            let sub = g.induced_subgraph(&keep).expect("ids in range");
            let Some(sp) = spider_partition(&sub.graph) else {
                continue;
            };
            let base = PseudoSplitPartition {
                r: sub.to_host(&sp.base.r),
                c: sub.to_host(&sp.base.c),
                s: sub.to_host(&sp.base.s),
            };
            let side = if base.c.contains(a) {
                Side::C
            } else if base.s.contains(a) {
                Side::S
            } else {
                continue;
            };
            return Some(SpiderPartition {
                base,
                kind: sp.kind,
                pairing: sp.pairing.iter().map(|&(c, s)| (sub.map[c], sub.map[s])).collect(),
                substitution: Some(Substitution {
                    side,
                    replacement,
                    kept: a,
                    twin: b,
                }),
            });
        }
    }
    None
}

/// `H → (H1, H2)` with every vertex outside `H` complete to `H1` and
/// anticomplete to `H2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PComponentSeparation {
    pub h: VertexSet,
    pub h1: VertexSet,
    pub h2: VertexSet,
}

/// All separable p-components in the order of [`p_components`].
///
/// Requires `g` and its complement connected and `g` not p-connected.
pub fn separable_p_components(g: &Graph) -> Result<Vec<PComponentSeparation>> {
    guard(g)?;
    if !g.is_connected() || !g.complement().is_connected() {
        return Err(Error::Contract("graph and complement must be connected".into()));
    }
    let comps = p_components(g)?;
    if comps.len() <= 1 {
        return Err(Error::Contract("graph is p-connected".into()));
    }
    let mut out = Vec::new();
    for h in comps {
        let outside = h.complement(g.n());
        let (h1, h2): (Vec<Vertex>, Vec<Vertex>) = h
            .iter()
            .filter(|&v| {
                let k = outside.iter().filter(|&u| g.has_edge(u, v)).count();
                k == 0 || k == outside.len()
            })
            .partition(|&v| outside.iter().all(|u| g.has_edge(u, v)));
        if h1.len() + h2.len() != h.len() {
            continue;
        }
        let (h1, h2) = (VertexSet::from(h1), VertexSet::from(h2));
        let sub = g.induced_subgraph(&h)?;
        let in_h1: Vec<bool> = sub.map.iter().map(|&v| h1.contains(v)).collect();
        let mut crossing_ok = true;
        for_each_p4(&sub.graph, |w, x, y, z| {
            let sides = [in_h1[w], in_h1[x], in_h1[y], in_h1[z]];
            let mixed = sides.iter().any(|&b| b) && sides.iter().any(|&b| !b);
            if mixed && sides != [false, true, true, false] {
                crossing_ok = false;
            }
        });
        if crossing_ok {
            out.push(PComponentSeparation { h, h1, h2 });
        }
    }
    Ok(out)
}

pub fn separable_p_component(g: &Graph) -> Result<Option<PComponentSeparation>> {
    Ok(separable_p_components(g)?.into_iter().next())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Special {
    C5,
    P5,
    P5Bar,
}

pub fn special_five(g: &Graph) -> Option<Special> {
    if g.n() != 5 || !g.is_connected() {
        return None;
    }
    let path_like = |h: &Graph| h.m() == 4 && h.max_degree() == 2 && h.is_connected();
    if g.m() == 5 && g.vertices().all(|v| g.degree(v) == 2) {
        Some(Special::C5)
    } else if path_like(g) {
        Some(Special::P5)
    } else if path_like(&g.complement()) {
        Some(Special::P5Bar)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn p4_enumeration() {
        assert_eq!(count_p4s(&path(4)), 1);
        assert_eq!(count_p4s(&path(5)), 2);
        assert_eq!(count_p4s(&cycle(5)), 5);
        assert_eq!(count_p4s(&cycle(4)), 0);
        assert_eq!(induced_p4s(&path(4)), vec![[0, 1, 2, 3]]);
    }

    #[test]
    fn p_component_examples() {
        assert_eq!(p_components(&path(4)).unwrap(), vec![VertexSet::from([0, 1, 2, 3])]);
        assert_eq!(p_components(&cycle(4)).unwrap().len(), 4);
        assert_eq!(p_components(&path(5)).unwrap(), vec![VertexSet::from([0, 1, 2, 3, 4])]);
        assert!(p_components(&Graph::empty(501)).is_err());
    }

    #[test]
    fn pseudo_split_examples() {
        let p = pseudo_split_partition(&path(4)).unwrap();
        assert_eq!(p.c, VertexSet::from([1, 2]));
        assert_eq!(p.s, VertexSet::from([0, 3]));
        assert!(p.r.is_empty());
        assert_eq!(pseudo_split_partition(&cycle(5)), None);
        // P4 plus a vertex 4 adjacent to both middle vertices
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]).unwrap();
        let p = pseudo_split_partition(&g).unwrap();
        assert_eq!(p.r, VertexSet::from([4]));
    }

    #[test]
    fn thick_spider_detected() {
        // C = {0,1,2}, S = {3,4,5}, s_i ~ c_j iff i ≠ j
        let mut edges = vec![(0, 1), (0, 2), (1, 2)];
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    edges.push((j, 3 + i));
                }
            }
        }
        let g = Graph::from_edges(6, edges).unwrap();
        let sp = quasi_spider_partition(&g).unwrap();
        assert_eq!(sp.kind, SpiderKind::Thick);
        assert_eq!(sp.base.c, VertexSet::from([0, 1, 2]));
        assert_eq!(sp.pairing, vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn quasi_spider_examples() {
        let sp = quasi_spider_partition(&path(4)).unwrap();
        assert_eq!(sp.kind, SpiderKind::Thin);
        assert_eq!(sp.substitution, None);
        // s1 = 0 replaced by the K2 {0, 4}
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 1)]).unwrap();
        let sp = quasi_spider_partition(&g).unwrap();
        assert_eq!(sp.kind, SpiderKind::Thin);
        let sub = sp.substitution.unwrap();
        assert_eq!((sub.side, sub.replacement, sub.kept, sub.twin), (Side::S, Replacement::K2, 0, 4));
        assert_eq!(quasi_spider_partition(&cycle(4)), None);
    }

    #[test]
    fn separable_examples() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]).unwrap();
        let sep = separable_p_component(&g).unwrap().unwrap();
        assert_eq!(sep.h, VertexSet::from([0, 1, 2, 3]));
        assert_eq!(sep.h1, VertexSet::from([1, 2]));
        assert_eq!(sep.h2, VertexSet::from([0, 3]));
        assert!(separable_p_component(&path(4)).is_err());
        let cograph = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(separable_p_component(&cograph).is_err());
    }

    #[test]
    fn specials() {
        assert_eq!(special_five(&cycle(5)), Some(Special::C5));
        assert_eq!(special_five(&path(5)), Some(Special::P5));
        assert_eq!(special_five(&path(5).complement()), Some(Special::P5Bar));
        assert_eq!(special_five(&path(4)), None);
    }
}
