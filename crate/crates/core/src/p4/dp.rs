use std::time::Instant;

use super::decompose::{decompose_step, ClassMode, DecompositionCase};
use super::structure::{PseudoSplitPartition, Replacement, SpiderKind, SpiderPartition};
use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::oracle::MaximalIndependentSets;
use crate::report::{SearchStats, WellCoveredReport};

/// Result for one decomposition node, in that node's vertex ids.
#[derive(Clone, Debug)]
struct Solved {
    alpha: usize,
    /// A maximum independent set (hence maximal).
    maximum: VertexSet,
    /// On NO: a maximal independent set smaller than `alpha`.
    smaller: Option<VertexSet>,
}

impl Solved {
    fn lift(self, map: &[Vertex]) -> Solved {
        Solved {
            alpha: self.alpha,
            maximum: self.maximum.translate(map),
            smaller: self.smaller.map(|s| s.translate(map)),
        }
    }
}

/// Exhaustive answer for graphs with a handful of vertices.
fn brute(g: &Graph, restrict_to: impl Fn(&VertexSet) -> bool) -> Option<(VertexSet, VertexSet)> {
    let mut lo: Option<VertexSet> = None;
    let mut hi: Option<VertexSet> = None;
    for s in MaximalIndependentSets::new(g).filter(|s| restrict_to(s)) {
        if lo.as_ref().is_none_or(|l| (s.len(), &s) < (l.len(), l)) {
            lo = Some(s.clone());
        }
        if hi.as_ref().is_none_or(|h| s.len() > h.len() || (s.len() == h.len() && s < *h)) {
            hi = Some(s);
        }
    }
    Some((lo?, hi?))
}

fn solve_small(g: &Graph) -> Solved {
    let (lo, hi) = brute(g, |_| true).expect("every graph has a maximal independent set");
    Solved {
        alpha: hi.len(),
        smaller: (lo.len() < hi.len()).then_some(lo),
        maximum: hi,
    }
}

fn solve_part(g: &Graph, part: &VertexSet, mode: ClassMode) -> Result<Solved> {
    let sub = g.induced_subgraph(part)?;
    Ok(solve(&sub.graph, mode)?.lift(&sub.map))
}

/// Greedy completion of `seed` to a maximal independent set of `g`, trying
/// `candidates` in order first and then all vertices.
fn extend(g: &Graph, seed: VertexSet, candidates: &VertexSet) -> VertexSet {
    let mut blocked = vec![false; g.n()];
    let mut out = seed.clone();
    for v in seed.iter() {
        blocked[v] = true;
        for &w in g.neighbors(v) {
            blocked[w] = true;
        }
    }
    for v in candidates.iter().chain(g.vertices()) {
        if !blocked[v] {
            out.insert(v);
            blocked[v] = true;
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    out
}

/// Maximal independent sets of a (quasi-)pseudo-split either contain a
/// vertex of `C` (and then nothing of `R`) or avoid `C`, in which case they
/// are a maximal set of `G[S]` plus a maximal set of `G[R]`. The first kind
/// are listed, one per `C` vertex; the second kind is built from the maximum
/// set of `R`.
fn split_candidates(g: &Graph, c: &VertexSet, s: &VertexSet, r: Option<&Solved>) -> (Vec<VertexSet>, VertexSet) {
    let with_c = c.iter().map(|x| extend(g, VertexSet::from([x]), c)).collect();
    let seed = r.map(|r| r.maximum.clone()).unwrap_or_default();
    let without_c = extend(g, seed, s);
    debug_assert!(without_c.is_disjoint(c));
    (with_c, without_c)
}

fn assemble(alpha_rule: bool, with_c: Vec<VertexSet>, without_c: VertexSet) -> Solved {
    let maximum = with_c
        .iter()
        .fold(without_c.clone(), |best, x| if x.len() > best.len() { x.clone() } else { best });
    let alpha = maximum.len();
    let smaller = if alpha_rule {
        None
    } else {
        let smallest = with_c
            .into_iter()
            .chain(std::iter::once(without_c))
            .min_by_key(|x| x.len())
            .expect("at least one candidate");
        debug_assert!(smallest.len() < alpha, "NO verdict without a smaller maximal set");
        Some(smallest)
    };
    Solved {
        alpha,
        maximum,
        smaller,
    }
}

fn solve_pseudo_split(g: &Graph, p: &PseudoSplitPartition, mode: ClassMode) -> Result<Solved> {
    let r = if p.r.is_empty() {
        None
    } else {
        Some(solve_part(g, &p.r, mode)?)
    };
    let exactly_one = p
        .c
        .iter()
        .all(|x| g.neighbors(x).iter().filter(|&&y| p.s.contains(y)).count() == 1);
    let wc = p.r.is_empty() && exactly_one;
    let (with_c, without_c) = split_candidates(g, &p.c, &p.s, r.as_ref());
    Ok(assemble(wc, with_c, without_c))
}

fn solve_quasi_spider(g: &Graph, sp: &SpiderPartition, mode: ClassMode) -> Result<Solved> {
    let r = if sp.base.r.is_empty() {
        None
    } else {
        Some(solve_part(g, &sp.base.r, mode)?)
    };
    let thin = sp.kind == SpiderKind::Thin || sp.k() == 2;
    let k2_or_none = sp.substitution.is_none_or(|s| s.replacement == Replacement::K2);
    let wc = sp.base.r.is_empty() && thin && k2_or_none;
    let (c, s) = sp.sides();
    let (with_c, without_c) = split_candidates(g, &c, &s, r.as_ref());
    Ok(assemble(wc, with_c, without_c))
}

fn solve(g: &Graph, mode: ClassMode) -> Result<Solved> {
    if g.n() == 0 {
        return Ok(Solved {
            alpha: 0,
            maximum: VertexSet::new(),
            smaller: None,
        });
    }
    Ok(match decompose_step(g, mode)? {
        DecompositionCase::SingleVertex => Solved {
            alpha: 1,
            maximum: VertexSet::from([0]),
            smaller: None,
        },
        DecompositionCase::Union { parts } => {
            let solved = parts
                .iter()
                .map(|p| solve_part(g, p, mode))
                .collect::<Result<Vec<_>>>()?;
            let maximum = solved.iter().fold(VertexSet::new(), |acc, s| acc.union(&s.maximum));
            // a smaller set in one part plus maximum sets elsewhere
            let smaller = solved.iter().enumerate().find_map(|(i, s)| {
                s.smaller.as_ref().map(|small| {
                    solved
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .fold(small.clone(), |acc, (_, t)| acc.union(&t.maximum))
                })
            });
            Solved {
                alpha: solved.iter().map(|s| s.alpha).sum(),
                maximum,
                smaller,
            }
        }
        DecompositionCase::Join { parts } => {
            let solved = parts
                .iter()
                .map(|p| solve_part(g, p, mode))
                .collect::<Result<Vec<_>>>()?;
            let best = solved
                .iter()
                .max_by_key(|s| (s.alpha, std::cmp::Reverse(s.maximum.clone())))
                .expect("a join has parts");
            let alpha = best.alpha;
            let maximum = best.maximum.clone();
            // a maximal set of one part is maximal in the join
            let smaller = solved.iter().find_map(|s| s.smaller.clone()).or_else(|| {
                let worst = solved.iter().min_by_key(|s| s.alpha).expect("a join has parts");
                (worst.alpha < alpha).then(|| worst.maximum.clone())
            });
            Solved {
                alpha,
                maximum,
                smaller,
            }
        }
        DecompositionCase::C5 | DecompositionCase::P5 | DecompositionCase::P5Bar | DecompositionCase::Small => {
            solve_small(g)
        }
        DecompositionCase::PseudoSplit { partition } => solve_pseudo_split(g, &partition, mode)?,
        DecompositionCase::QuasiSpider { partition } => solve_quasi_spider(g, &partition, mode)?,
        DecompositionCase::PComponent { separation } => {
            let rest = separation.h.complement(g.n());
            let rest_solved = solve_part(g, &rest, mode)?;
            let h2 = solve_part(g, &separation.h2, mode)?;
            let base = rest_solved.alpha + h2.alpha;
            let base_set = rest_solved.maximum.union(&h2.maximum);
            let hsub = g.induced_subgraph(&separation.h)?;
            let h1_local: Vec<bool> = hsub.map.iter().map(|&v| separation.h1.contains(v)).collect();
            // maximal sets of H meeting H1 are maximal in G
            let meeting = brute(&hsub.graph, |s| s.iter().any(|v| h1_local[v]))
                .map(|(lo, hi)| (hsub.to_host(&lo), hsub.to_host(&hi)));
            let (alpha, maximum) = match &meeting {
                Some((_, hi)) if hi.len() > base => (hi.len(), hi.clone()),
                _ => (base, base_set.clone()),
            };
            let smaller = if let Some(small) = rest_solved.smaller {
                Some(small.union(&h2.maximum))
            } else if let Some(small) = h2.smaller {
                Some(rest_solved.maximum.union(&small))
            } else {
                match meeting {
                    Some((lo, _)) if lo.len() < base => Some(lo),
                    Some((_, hi)) if hi.len() > base => Some(base_set),
                    _ => None,
                }
            };
            Solved {
                alpha,
                maximum,
                smaller,
            }
        }
    })
}

/// Bottom-up well-coveredness and `α` over the decomposition.
///
/// On NO the witnesses are a maximal independent set smaller than `α` and a
/// maximum independent set, both of `g`.
pub fn well_covered_few_p4(g: &Graph, mode: ClassMode) -> Result<(WellCoveredReport, usize)> {
    let start = Instant::now();
    let solved = solve(g, mode)?;
    let n = g.n();
    let mut report = match solved.smaller {
        None => WellCoveredReport::yes(n, solved.alpha),
        Some(small) => {
            let mut r = WellCoveredReport::no(small, solved.maximum);
            r.alpha = Some(solved.alpha);
            r.vc = Some(n - solved.alpha);
            r
        }
    };
    report.stats = SearchStats {
        elapsed: start.elapsed(),
        ..Default::default()
    };
    Ok((report, solved.alpha))
}
