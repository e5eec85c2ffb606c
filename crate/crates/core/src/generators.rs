//! Deterministic instance families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::p4::{Replacement, Side};
use crate::rng::SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Gnp,
    Empty,
    Path,
    Cycle,
    Star,
    Complete,
    Corona,
    ThinSpider,
    ThickSpider,
    PseudoSplit,
    Cograph,
    UnionJoinRecipe,
    CliqueFringe,
    TwoDegenerate,
    Separable,
}

impl Family {
    pub const ALL: [Family; 15] = [
        Family::Gnp,
        Family::Empty,
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
        Family::Corona,
        Family::ThinSpider,
        Family::ThickSpider,
        Family::PseudoSplit,
        Family::Cograph,
        Family::UnionJoinRecipe,
        Family::CliqueFringe,
        Family::TwoDegenerate,
        Family::Separable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gnp => "gnp",
            Family::Empty => "empty",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Corona => "corona",
            Family::ThinSpider => "thin-spider",
            Family::ThickSpider => "thick-spider",
            Family::PseudoSplit => "pseudo-split",
            Family::Cograph => "cograph",
            Family::UnionJoinRecipe => "union-join-recipe",
            Family::CliqueFringe => "clique-fringe",
            Family::TwoDegenerate => "two-degenerate",
            Family::Separable => "separable",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// Replace spider vertex `c_index` or `s_index` (by `side`) with a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderSubstitution {
    pub side: Side,
    pub index: usize,
    pub replacement: Replacement,
}

/// Family plus parameters. Which parameters matter depends on the family:
///
/// | family | parameters |
/// |---|---|
/// | gnp | `n`, `p` |
/// | empty, path, cycle, complete | `n` |
/// | star | `n` (total vertex count, center 0) |
/// | corona | `base` built from `n`, `p`, `seed`, then one pendant per vertex |
/// | thin-spider, thick-spider | `k`, `r` (size of a random cograph `R`), `substitution` |
/// | pseudo-split | `n` |
/// | cograph, union-join-recipe | `n` |
/// | clique-fringe | `n`, `k` (core size, equal to the vertex cover number) |
/// | two-degenerate | `n`, `p` (chance of a second back edge) |
/// | separable | `n`, `k` (template index) |
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub p: f64,
    pub r: usize,
    pub seed: u64,
    pub substitution: Option<SpiderSubstitution>,
    pub base: Option<Family>,
}

impl GenSpec {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            n: 0,
            k: 0,
            p: 0.5,
            r: 0,
            seed: 0,
            substitution: None,
            base: None,
        }
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn p(mut self, p: f64) -> Self {
        self.p = p;
        self
    }

    pub fn r(mut self, r: usize) -> Self {
        self.r = r;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn substitution(mut self, s: SpiderSubstitution) -> Self {
        self.substitution = Some(s);
        self
    }

    pub fn base(mut self, f: Family) -> Self {
        self.base = Some(f);
        self
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn generate(spec: &GenSpec) -> Result<Graph> {
    let mut rng = SplitMix64::new(spec.seed);
    let n = spec.n;
    if !(0.0..=1.0).contains(&spec.p) {
        return Err(invalid(format!("p = {} outside [0, 1]", spec.p)));
    }
    Ok(match spec.family {
        Family::Gnp => gnp(n, spec.p, &mut rng),
        Family::Empty => Graph::empty(n),
        Family::Path => path(n),
        Family::Cycle => {
            if n < 3 {
                return Err(invalid("cycle needs n ≥ 3"));
            }
            cycle(n)
        }
        Family::Star => {
            if n == 0 {
                return Err(invalid("star needs n ≥ 1"));
            }
            star(n - 1)
        }
        Family::Complete => complete(n),
        Family::Corona => {
            let base = spec.base.unwrap_or(Family::Gnp);
            if base == Family::Corona {
                return Err(invalid("corona base cannot be corona"));
            }
            let inner = GenSpec {
                family: base,
                base: None,
                ..spec.clone()
            };
            corona(&generate(&inner)?)
        }
        Family::ThinSpider | Family::ThickSpider => {
            let thin = spec.family == Family::ThinSpider;
            if spec.k < 2 {
                return Err(invalid("spiders need k ≥ 2"));
            }
            if let Some(s) = spec.substitution {
                if s.index >= spec.k {
                    return Err(invalid("substitution index must be below k"));
                }
            }
            let r = random_cograph(spec.r, &mut rng);
            spider(spec.k, thin, &r, spec.substitution)
        }
        Family::PseudoSplit => {
            if n < 4 {
                return Err(invalid("pseudo-split needs n ≥ 4"));
            }
            random_pseudo_split(n, &mut rng)
        }
        Family::Cograph => random_cograph(n, &mut rng),
        Family::UnionJoinRecipe => {
            if n == 0 {
                return Err(invalid("union-join-recipe needs n ≥ 1"));
            }
            union_join_recipe(n, &mut rng)
        }
        Family::CliqueFringe => {
            if spec.k == 0 || n < 3 * spec.k {
                return Err(invalid("clique-fringe needs k ≥ 1 and n ≥ 3k"));
            }
            clique_fringe(n, spec.k, &mut rng)
        }
        Family::TwoDegenerate => two_degenerate(n, spec.p, &mut rng),
        Family::Separable => {
            if spec.k >= SEPARABLE_TEMPLATES.len() {
                return Err(invalid(format!(
                    "separable template index must be below {}",
                    SEPARABLE_TEMPLATES.len()
                )));
            }
            let t = &SEPARABLE_TEMPLATES[spec.k];
            if n <= t.n {
                return Err(invalid(format!("separable template {} needs n > {}", spec.k, t.n)));
            }
            separable(t, n - t.n, &mut rng)
        }
    })
}

fn edges_graph(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator edges are in range and loop-free")
}

pub fn gnp(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    edges_graph(n, edges)
}

pub fn path(n: usize) -> Graph {
    edges_graph(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn cycle(n: usize) -> Graph {
    edges_graph(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    edges_graph(leaves + 1, (1..=leaves).map(|i| (0, i)).collect())
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

/// One pendant `n + v` for every vertex `v`. Always well covered.
pub fn corona(h: &Graph) -> Graph {
    let n = h.n();
    let edges = h.edges().iter().copied().chain((0..n).map(|v| (v, n + v))).collect();
    edges_graph(2 * n, edges)
}

/// Spider with `c_i = i`, `s_i = k + i`, `R` at `2k..2k + |R|` and a
/// substituted twin appended last.
pub fn spider(k: usize, thin: bool, r: &Graph, substitution: Option<SpiderSubstitution>) -> Graph {
    let rn = r.n();
    let mut n = 2 * k + rn;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
        }
        for j in 0..k {
            if (i == j) == thin {
                edges.push((j, k + i));
            }
        }
    }
    for &(a, b) in r.edges() {
        edges.push((2 * k + a, 2 * k + b));
    }
    for x in 0..rn {
        for c in 0..k {
            edges.push((c, 2 * k + x));
        }
    }
    if let Some(sub) = substitution {
        let v = match sub.side {
            Side::C => sub.index,
            Side::S => k + sub.index,
        };
        let twin = n;
        n += 1;
        let nbrs: Vec<Vertex> = edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect();
        edges.extend(nbrs.into_iter().map(|w| (w, twin)));
        if sub.replacement == Replacement::K2 {
            edges.push((v, twin));
        }
    }
    edges_graph(n, edges)
}

/// Random union/join tree over `n` leaves.
pub fn random_cograph(n: usize, rng: &mut SplitMix64) -> Graph {
    match n {
        0 => Graph::empty(0),
        1 => Graph::empty(1),
        _ => {
            let left = rng.range(1, n - 1);
            let a = random_cograph(left, rng);
            let b = random_cograph(n - left, rng);
            if rng.bernoulli(0.5) {
                a.disjoint_union(&b)
            } else {
                a.join(&b)
            }
        }
    }
}

/// Random pseudo-split on `n ≥ 4` vertices with `C = 0..|C|`, then `S`, then
/// a random cograph `R`. About a third of the instances have `R = ∅` and every
/// `C` vertex with exactly one `S` neighbor, i.e. are well covered.
pub fn random_pseudo_split(n: usize, rng: &mut SplitMix64) -> Graph {
    let well_covered = rng.bernoulli(0.35);
    let r_size = if well_covered || rng.bernoulli(0.3) {
        0
    } else {
        rng.range(0, (n - 4) / 2)
    };
    let c_size = rng.range(2, n - r_size - 2);
    let s_size = n - r_size - c_size;
    let (c0, s0, r0) = (0, c_size, c_size + s_size);
    let mut edges = Vec::new();
    for i in 0..c_size {
        for j in i + 1..c_size {
            edges.push((c0 + i, c0 + j));
        }
    }
    // each S vertex gets a designated C non-neighbor; no C vertex may be
    // designated by every S vertex
    let mut avoid: Vec<usize> = (0..s_size).map(|_| rng.below(c_size as u64) as usize).collect();
    if avoid.iter().all(|&a| a == avoid[0]) {
        avoid[0] = (avoid[0] + 1) % c_size;
    }
    for i in 0..c_size {
        let allowed: Vec<usize> = (0..s_size).filter(|&j| avoid[j] != i).collect();
        let chosen: Vec<usize> = if well_covered {
            vec![allowed[rng.below(allowed.len() as u64) as usize]]
        } else {
            let mut c: Vec<usize> = allowed.iter().copied().filter(|_| rng.bernoulli(0.5)).collect();
            if c.is_empty() {
                c.push(allowed[rng.below(allowed.len() as u64) as usize]);
            }
            c
        };
        edges.extend(chosen.into_iter().map(|j| (c0 + i, s0 + j)));
    }
    let r = random_cograph(r_size, rng);
    edges.extend(r.edges().iter().map(|&(a, b)| (r0 + a, r0 + b)));
    for x in 0..r_size {
        for i in 0..c_size {
            edges.push((c0 + i, r0 + x));
        }
    }
    edges_graph(n, edges)
}

fn recipe_block(rng: &mut SplitMix64) -> Graph {
    match rng.below(8) {
        0 => Graph::empty(1),
        1 => complete(2),
        2 => complete(3),
        3 => cycle(4),
        4 => cycle(5),
        5 => path(5),
        6 => path(5).complement(),
        _ => path(4),
    }
}

/// Union/join combinations of small extended-P4-laden blocks (`K1`, `K2`,
/// `K3`, `C4`, `C5`, `P4`, `P5`, `P̄5`) with at most `n` vertices. Joins pair
/// parts of equal `α` about half the time.
pub fn union_join_recipe(n: usize, rng: &mut SplitMix64) -> Graph {
    fn alpha_small(g: &Graph) -> usize {
        crate::oracle::MaximalIndependentSets::new(g)
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }
    fn build(budget: usize, rng: &mut SplitMix64) -> Graph {
        if budget < 10 || rng.bernoulli(0.25) {
            loop {
                let b = recipe_block(rng);
                if b.n() <= budget {
                    return b;
                }
            }
        }
        let left = rng.range(5, budget - 5);
        let a = build(left, rng);
        let b = build(budget - left, rng);
        if rng.bernoulli(0.5) {
            a.disjoint_union(&b)
        } else if rng.bernoulli(0.5) || a.n() + b.n() > 24 {
            a.join(&b)
        } else {
            // equalize α by padding the smaller side with isolated vertices
            // in a union, keeping the total within budget
            let (aa, ab) = (alpha_small(&a), alpha_small(&b));
            let pad = aa.abs_diff(ab);
            if a.n() + b.n() + pad > budget {
                return a.join(&b);
            }
            let (a, b) = if aa < ab {
                (a.disjoint_union(&Graph::empty(pad)), b)
            } else {
                (a, b.disjoint_union(&Graph::empty(pad)))
            };
            a.join(&b)
        }
    }
    build(n.max(1), rng)
}

/// `K_k` core on `0..k` plus `n − k` independent fringe vertices, each
/// adjacent to one to three core vertices; every core vertex gets at least
/// two fringe neighbors, so the core is the unique minimum vertex cover.
pub fn clique_fringe(n: usize, k: usize, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
        }
    }
    for (idx, f) in (k..n).enumerate() {
        edges.push((idx % k, f));
        for _ in 0..rng.range(0, 2) {
            edges.push((rng.below(k as u64) as usize, f));
        }
    }
    edges_graph(n, edges)
}

/// Every vertex after the first attaches to one earlier vertex, and with
/// probability `p` to a second one, so the degeneracy is at most 2.
pub fn two_degenerate(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.below(v as u64) as usize, v));
        if v >= 2 && rng.bernoulli(p) {
            edges.push((rng.below(v as u64) as usize, v));
        }
    }
    edges_graph(n, edges)
}

/// A p-connected separable graph `H` on `0..n` with its `H1` side.
pub struct SeparableTemplate {
    pub n: usize,
    pub edges: &'static [(Vertex, Vertex)],
    pub h1: &'static [Vertex],
}

/// Small p-connected graphs with a separation `H → (H1, H2)` that are
/// neither pseudo-splits nor quasi-spiders once attached to a cograph.
pub const SEPARABLE_TEMPLATES: &[SeparableTemplate] = &[
    SeparableTemplate {
        n: 6,
        edges: &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4)],
        h1: &[0, 2, 3, 4],
    },
    SeparableTemplate {
        n: 6,
        edges: &[(0, 1), (0, 2), (0, 3), (0, 5), (1, 4), (2, 3)],
        h1: &[0, 1],
    },
    SeparableTemplate {
        n: 6,
        edges: &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 3)],
        h1: &[0, 2, 3, 4],
    },
    SeparableTemplate {
        n: 6,
        edges: &[(0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)],
        h1: &[0, 1, 3, 4],
    },
];

/// Template `H` plus a random cograph on `extra` vertices complete to `H1`
/// and anticomplete to `H2`.
pub fn separable(t: &SeparableTemplate, extra: usize, rng: &mut SplitMix64) -> Graph {
    let rest = random_cograph(extra, rng);
    let mut edges: Vec<(Vertex, Vertex)> = t.edges.to_vec();
    edges.extend(rest.edges().iter().map(|&(a, b)| (t.n + a, t.n + b)));
    for x in 0..extra {
        edges.extend(t.h1.iter().map(|&h| (h, t.n + x)));
    }
    edges_graph(t.n + extra, edges)
}
