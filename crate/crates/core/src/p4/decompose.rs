use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::structure::{
    count_p4s, is_p_connected, pseudo_split_partition, quasi_spider_partition, separable_p_components,
    special_five, PComponentSeparation, PseudoSplitPartition, Special, SpiderPartition,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Default `q` for `(q, q−4)` mode.
pub const DEFAULT_Q: usize = 7;
/// Largest graph [`is_class_member`] accepts in extended P4-laden mode.
pub const EXT_LADEN_MEMBERSHIP_GUARD: usize = 30;
/// Largest graph [`is_class_member`] accepts in `(q, q−4)` mode.
pub const QQ4_MEMBERSHIP_GUARD: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassMode {
    ExtLaden,
    Qq4 { q: usize },
}

impl ClassMode {
    pub fn qq4(q: usize) -> Result<Self> {
        if q < 4 {
            return Err(Error::InvalidParameter(format!("q must be at least 4, got {q}")));
        }
        Ok(ClassMode::Qq4 { q })
    }
}

impl fmt::Display for ClassMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassMode::ExtLaden => f.write_str("ext-laden"),
            ClassMode::Qq4 { q } => write!(f, "qq4(q={q})"),
        }
    }
}

impl FromStr for ClassMode {
    type Err = Error;

    /// `ext-laden` or `qq4` (with [`DEFAULT_Q`]).
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ext-laden" => Ok(ClassMode::ExtLaden),
            "qq4" => ClassMode::qq4(DEFAULT_Q),
            _ => Err(Error::InvalidParameter(format!("unknown class {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "tag")]
pub enum DecompositionCase {
    SingleVertex,
    /// Connected components.
    Union { parts: Vec<VertexSet> },
    /// Components of the complement.
    Join { parts: Vec<VertexSet> },
    C5,
    P5,
    P5Bar,
    PseudoSplit { partition: PseudoSplitPartition },
    QuasiSpider { partition: SpiderPartition },
    PComponent { separation: PComponentSeparation },
    Small,
}

/// One level of the decomposition. Fails with
/// [`Error::DecompositionFailed`] when no case applies, which means the
/// graph is outside the declared class.
pub fn decompose_step(g: &Graph, mode: ClassMode) -> Result<DecompositionCase> {
    match g.n() {
        0 => return Err(Error::Contract("cannot decompose the empty graph".into())),
        1 => return Ok(DecompositionCase::SingleVertex),
        _ => {}
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return Ok(DecompositionCase::Union { parts: comps });
    }
    let co = g.complement().connected_components();
    if co.len() > 1 {
        return Ok(DecompositionCase::Join { parts: co });
    }
    if mode == ClassMode::ExtLaden {
        match special_five(g) {
            Some(Special::C5) => return Ok(DecompositionCase::C5),
            Some(Special::P5) => return Ok(DecompositionCase::P5),
            Some(Special::P5Bar) => return Ok(DecompositionCase::P5Bar),
            None => {}
        }
    }
    if let Some(partition) = pseudo_split_partition(g) {
        return Ok(DecompositionCase::PseudoSplit { partition });
    }
    if let Some(partition) = quasi_spider_partition(g) {
        return Ok(DecompositionCase::QuasiSpider { partition });
    }
    if let ClassMode::Qq4 { q } = mode {
        if !is_p_connected(g)? {
            if let Some(separation) = separable_p_components(g)?.into_iter().find(|s| s.h.len() < q) {
                return Ok(DecompositionCase::PComponent { separation });
            }
        }
        if g.n() < q {
            return Ok(DecompositionCase::Small);
        }
    }
    Err(Error::DecompositionFailed {
        residual: Box::new(g.clone()),
    })
}

/// Calls `f` on every subset of `0..n` with exactly `size` elements.
fn for_each_subset(n: usize, size: usize, f: &mut impl FnMut(&[Vertex]) -> bool) -> bool {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<Vertex>, f: &mut impl FnMut(&[Vertex]) -> bool) -> bool {
        if left == 0 {
            return f(cur);
        }
        for v in start..=n - left {
            cur.push(v);
            let go_on = rec(v + 1, n, left - 1, cur, f);
            cur.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    size <= n && rec(0, n, size, &mut Vec::with_capacity(size), f)
}

/// Literal check of the class definition by brute force over small subsets.
///
/// Extended P4-laden: every induced subgraph on at most six vertices has at
/// most two induced P4s or is `{2K2, C4}`-free. `(q, q−4)`: every set of at
/// most `q` vertices induces at most `q − 4` P4s.
pub fn is_class_member(g: &Graph, mode: ClassMode) -> Result<bool> {
    let (limit, max_size) = match mode {
        ClassMode::ExtLaden => (EXT_LADEN_MEMBERSHIP_GUARD, 6),
        ClassMode::Qq4 { q } => (QQ4_MEMBERSHIP_GUARD, q),
    };
    if g.n() > limit {
        return Err(Error::GuardExceeded {
            what: "class membership vertex count",
            limit,
            got: g.n(),
        });
    }
    // Both properties are hereditary, so checking the largest admissible
    // subsets suffices; smaller graphs are checked whole.
    let size = max_size.min(g.n());
    let ok = for_each_subset(g.n(), size, &mut |s| {
        let sub = g.induced_subgraph(&VertexSet::from(s.to_vec())).expect("ids in range");
        match mode {
            ClassMode::ExtLaden => count_p4s(&sub.graph) <= 2 || !has_2k2_or_c4(&sub.graph),
            ClassMode::Qq4 { q } => count_p4s(&sub.graph) <= q - 4,
        }
    });
    Ok(ok)
}

/// Some four vertices induce `2K2` or `C4`.
fn has_2k2_or_c4(g: &Graph) -> bool {
    !for_each_subset(g.n(), 4, &mut |s| {
        let deg: Vec<usize> = s
            .iter()
            .map(|&a| s.iter().filter(|&&b| g.has_edge(a, b)).count())
            .collect();
        let m: usize = deg.iter().sum::<usize>() / 2;
        // 2K2 and C4 are the 1- and 2-regular graphs on four vertices
        !((m == 2 && deg.iter().all(|&d| d == 1)) || (m == 4 && deg.iter().all(|&d| d == 2)))
    })
}
