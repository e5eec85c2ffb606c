//! Crown decompositions and the linear kernel.
//!
//! A well-covered graph without isolated vertices and with vertex cover
//! number `k` has at most `5k` vertices, so `n > 5k` is a sound NO test.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Induced, VertexSet};
use crate::matching::{greedy_maximal_matching, max_bipartite_matching, Matching};
use crate::mvc_enum::vertex_cover_number;
use crate::oracle::{is_well_covered_oracle, OracleConfig};

/// `(C, H, R)` with a matching of the head into the crown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrownDecomposition {
    pub crown: VertexSet,
    pub head: VertexSet,
    pub remainder: VertexSet,
    /// Pairs `(h, c)` with `h ∈ head`, `c ∈ crown`.
    pub matching: Matching,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrownOrMatching {
    Matching(Matching),
    Crown(CrownDecomposition),
}

/// Either a matching with `k + 1` edges or a crown decomposition.
///
/// Requires no isolated vertices and `n ≥ 3k + 1`. A greedy maximal matching
/// `M1` either is large enough or leaves an independent set `I` of at least
/// `k + 1` vertices; a maximum matching `M2` between `V(M1)` and `I` is then
/// either large enough or leaves an unmatched vertex of `I`, and the
/// `M2`-alternating closure of the unmatched `I` vertices is the crown, with
/// their partners as the head.
pub fn find_crown_or_matching(g: &Graph, k: usize) -> Result<CrownOrMatching> {
    if !g.isolated_vertices().is_empty() {
        return Err(Error::Contract("graph has isolated vertices".into()));
    }
    if g.n() < 3 * k + 1 {
        return Err(Error::Contract(format!(
            "need n ≥ 3k + 1 (n = {}, k = {k})",
            g.n()
        )));
    }
    let m1 = greedy_maximal_matching(g);
    if m1.len() > k {
        return Ok(CrownOrMatching::Matching(Matching {
            pairs: m1.pairs[..=k].to_vec(),
        }));
    }
    let matched = m1.vertices();
    let rest = matched.complement(g.n());
    let m2 = max_bipartite_matching(g, &matched, &rest);
    if m2.len() > k {
        return Ok(CrownOrMatching::Matching(Matching {
            pairs: m2.matching.pairs[..=k].to_vec(),
        }));
    }
    let (crown, head) = m2.alternating_reach_from_right(g);
    debug_assert!(!crown.is_empty());
    let pairs = head
        .iter()
        .map(|h| (h, m2.mate(h).expect("a maximum matching saturates the reached head")))
        .collect();
    let remainder = crown.union(&head).complement(g.n());
    Ok(CrownOrMatching::Crown(CrownDecomposition {
        crown,
        head,
        remainder,
        matching: Matching { pairs },
    }))
}

/// Checks the four defining conditions plus the partition property.
pub fn validate_crown(g: &Graph, d: &CrownDecomposition) -> bool {
    let n = g.n();
    let (c, h, r) = (&d.crown, &d.head, &d.remainder);
    if c.is_empty() || c.len() + h.len() + r.len() != n {
        return false;
    }
    if c.max().is_some_and(|v| v >= n) || h.max().is_some_and(|v| v >= n) || r.max().is_some_and(|v| v >= n) {
        return false;
    }
    if !c.is_disjoint(h) || !c.is_disjoint(r) || !h.is_disjoint(r) {
        return false;
    }
    if !g.is_independent_set(c) {
        return false;
    }
    let in_r = r.to_mask(n);
    if c.iter().any(|v| g.neighbors(v).iter().any(|&w| in_r[w])) {
        return false;
    }
    let m = &d.matching;
    m.len() == h.len()
        && m.is_valid_in(g)
        && m.pairs.iter().all(|&(x, y)| h.contains(x) && c.contains(y))
}

/// Removes isolated vertices. They lie in every maximal independent set, so
/// the well-covered verdict is unchanged.
pub fn strip_isolated(g: &Graph) -> Induced {
    g.remove_vertices(&g.isolated_vertices())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutcome {
    /// `n > 5k`: not well covered.
    NotWellCovered { n: usize, k: usize },
    Kernel { graph: Graph, k: usize },
}

/// The `5k` size rule. The kernel is the input itself; no crown is removed.
pub fn kernelize(g: &Graph) -> Result<KernelOutcome> {
    if !g.isolated_vertices().is_empty() {
        return Err(Error::Contract(
            "graph has isolated vertices; strip them first".into(),
        ));
    }
    let k = vertex_cover_number(g);
    Ok(if g.n() > 5 * k {
        KernelOutcome::NotWellCovered { n: g.n(), k }
    } else {
        KernelOutcome::Kernel { graph: g.clone(), k }
    })
}

/// Well-coveredness of a graph and of both sides of one of its crowns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrownAudit {
    pub crown: CrownDecomposition,
    pub graph_well_covered: bool,
    pub remainder_well_covered: bool,
    pub crown_head_well_covered: bool,
    pub crown_equals_head: bool,
    pub remainder_has_isolated: bool,
}

impl CrownAudit {
    /// The implications that must hold when the graph is well covered.
    pub fn lemmas_hold(&self) -> bool {
        !self.graph_well_covered
            || (self.remainder_well_covered
                && self.crown_head_well_covered
                && (!self.crown.remainder.is_empty() || self.crown_equals_head))
    }
}

/// Audits a given crown decomposition against the oracle.
pub fn audit_crown(g: &Graph, crown: CrownDecomposition, config: &OracleConfig) -> Result<CrownAudit> {
    let wc = |s: &VertexSet| -> Result<bool> {
        let sub = g.induced_subgraph(s)?;
        Ok(is_well_covered_oracle(&sub.graph, config)?.well_covered)
    };
    let r = g.induced_subgraph(&crown.remainder)?;
    Ok(CrownAudit {
        graph_well_covered: is_well_covered_oracle(g, config)?.well_covered,
        remainder_well_covered: wc(&crown.remainder)?,
        crown_head_well_covered: wc(&crown.crown.union(&crown.head))?,
        crown_equals_head: crown.crown.len() == crown.head.len(),
        remainder_has_isolated: !r.graph.isolated_vertices().is_empty(),
        crown,
    })
}

/// Finds a crown with `k = vc(g)` and audits it. Requires no isolated
/// vertices and `n ≥ 3·vc + 1`; with `k = vc` no matching of size `k + 1`
/// exists, so a crown is always returned.
pub fn crown_lemma_audit(g: &Graph, config: &OracleConfig) -> Result<CrownAudit> {
    let k = vertex_cover_number(g);
    match find_crown_or_matching(g, k)? {
        CrownOrMatching::Crown(c) => audit_crown(g, c, config),
        CrownOrMatching::Matching(_) => unreachable!("a matching larger than vc cannot exist"),
    }
}
