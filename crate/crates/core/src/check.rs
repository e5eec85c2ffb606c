//! Algorithm selection: one entry point that runs a chosen decision
//! procedure, or picks one from cheap parameter estimates.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::crown::strip_isolated;
use crate::degen::{well_covered_degenerate, DegenOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::greedy_maximal_matching;
use crate::mvc_enum::{minimum_vertex_cover, well_covered_via_mvc_enum, MvcEnumOptions};
use crate::oracle::{is_well_covered_oracle, OracleConfig};
use crate::p4::{is_class_member, well_covered_few_p4, ClassMode};
use crate::par::Execution;
use crate::report::WellCoveredReport;
use crate::vcplus::{well_covered_via_branching, BRANCHING_FACTOR};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Auto,
    Oracle,
    MvcEnum,
    Vcplus,
    Degen,
    P4,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Auto,
        Algorithm::Oracle,
        Algorithm::MvcEnum,
        Algorithm::Vcplus,
        Algorithm::Degen,
        Algorithm::P4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Oracle => "oracle",
            Algorithm::MvcEnum => "mvc-enum",
            Algorithm::Vcplus => "vcplus",
            Algorithm::Degen => "degen",
            Algorithm::P4 => "p4",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm {s:?}")))
    }
}

/// Largest `vc` for which auto picks partition enumeration.
pub const AUTO_MVC_ENUM_MAX_VC: usize = 25;
/// Largest estimated tree size for which auto picks a search tree.
pub const AUTO_TREE_BUDGET: f64 = 1e8;

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub algorithm: Algorithm,
    /// Required for [`Algorithm::P4`].
    pub class: Option<ClassMode>,
    /// Run the brute-force class membership test before the p4 algorithm.
    pub verify_class: bool,
    /// Stop at the first evidence of NO (mvc-enum and degen).
    pub early_exit: bool,
    pub execution: Execution,
    pub oracle: OracleConfig,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            algorithm: Algorithm::Auto,
            class: None,
            verify_class: false,
            early_exit: true,
            execution: Execution::Sequential,
            oracle: OracleConfig::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub report: WellCoveredReport,
    /// The algorithm that produced the verdict; for auto, what it chose.
    pub algorithm: Algorithm,
    /// Auto answered NO from the `n > 5·vc` size test.
    pub kernel_short_circuit: bool,
}

fn run(g: &Graph, algorithm: Algorithm, options: &CheckOptions) -> Result<WellCoveredReport> {
    match algorithm {
        Algorithm::Auto => unreachable!("auto is resolved before running"),
        Algorithm::Oracle => is_well_covered_oracle(g, &options.oracle),
        Algorithm::MvcEnum => well_covered_via_mvc_enum(
            g,
            MvcEnumOptions {
                decide_only: options.early_exit,
                execution: options.execution,
            },
        ),
        Algorithm::Vcplus => Ok(well_covered_via_branching(g)),
        Algorithm::Degen => Ok(well_covered_degenerate(
            g,
            DegenOptions {
                early_exit: options.early_exit,
                execution: options.execution,
            },
        )),
        Algorithm::P4 => {
            let class = options
                .class
                .ok_or_else(|| Error::InvalidParameter("the p4 algorithm needs a class".into()))?;
            if options.verify_class && !is_class_member(g, class)? {
                return Err(Error::Contract(format!("graph is not in class {class}")));
            }
            Ok(well_covered_few_p4(g, class)?.0)
        }
    }
}

/// Maps witnesses of `inner` (ids of the stripped graph) back to `g` by
/// adding the isolated vertices, and fixes up the parameters.
fn lift_report(g: &Graph, stripped: &crate::graph::Induced, mut r: WellCoveredReport) -> WellCoveredReport {
    let iso = g.isolated_vertices();
    let lift = |s: crate::graph::VertexSet| stripped.to_host(&s).union(&iso);
    r.witness_small = r.witness_small.map(lift);
    r.witness_large = r.witness_large.map(lift);
    r.alpha = r.alpha.map(|a| a + iso.len());
    r
}

/// Runs the chosen algorithm, or the auto policy:
///
/// 1. strip isolated vertices;
/// 2. if `vc ≤ 25` (found by bounded search): answer NO when `n > 5·vc`,
///    otherwise use partition enumeration;
/// 3. with `ν` a maximal matching, answer NO when `n > 5·2ν` (an upper
///    bound on `vc`);
/// 4. degen when `(d+1)^α` with `α ≤ n − ν` is at most the tree budget;
/// 5. vcplus when `1.4656^k` with `k ≤ n − ⌈n/(Δ+1)⌉` is;
/// 6. the oracle, subject to its set budget.
pub fn check(g: &Graph, options: &CheckOptions) -> Result<CheckOutcome> {
    if options.algorithm != Algorithm::Auto {
        return Ok(CheckOutcome {
            report: run(g, options.algorithm, options)?,
            algorithm: options.algorithm,
            kernel_short_circuit: false,
        });
    }
    let start = Instant::now();
    let stripped = strip_isolated(g);
    let h = &stripped.graph;
    let n = h.n();
    let finish = |report: WellCoveredReport, algorithm: Algorithm, short: bool| {
        let mut report = lift_report(g, &stripped, report);
        report.stats.elapsed = start.elapsed();
        CheckOutcome {
            report,
            algorithm,
            kernel_short_circuit: short,
        }
    };
    if n == 0 {
        return Ok(finish(WellCoveredReport::yes(0, 0), Algorithm::Auto, false));
    }
    if let Some(cover) = minimum_vertex_cover(h, Some(AUTO_MVC_ENUM_MAX_VC)) {
        let vc = cover.len();
        if n > 5 * vc {
            return Ok(finish(size_test_no(h, &cover, true, options)?, Algorithm::Auto, true));
        }
        let report = run(h, Algorithm::MvcEnum, options)?;
        return Ok(finish(report, Algorithm::MvcEnum, false));
    }
    let nu = greedy_maximal_matching(h).len();
    if n > 10 * nu {
        let cover = greedy_maximal_matching(h).vertices();
        return Ok(finish(size_test_no(h, &cover, false, options)?, Algorithm::Auto, true));
    }
    let d = h.degeneracy();
    let alpha_ub = n - nu;
    let degen_estimate = (alpha_ub as f64) * ((d + 1) as f64).ln();
    if degen_estimate <= AUTO_TREE_BUDGET.ln() {
        return Ok(finish(run(h, Algorithm::Degen, options)?, Algorithm::Degen, false));
    }
    let k_ub = n - n.div_ceil(h.max_degree() + 1);
    if (k_ub as f64) * BRANCHING_FACTOR.ln() <= AUTO_TREE_BUDGET.ln() {
        return Ok(finish(run(h, Algorithm::Vcplus, options)?, Algorithm::Vcplus, false));
    }
    Ok(finish(run(h, Algorithm::Oracle, options)?, Algorithm::Oracle, false))
}

/// NO from the size test, with witnesses: a maximal independent set grown
/// from the complement of `cover` (a maximum one when `cover` is minimum),
/// and the smallest of the maximal independent sets grown greedily from each
/// cover vertex. Partition enumeration supplies witnesses if that fails.
fn size_test_no(
    g: &Graph,
    cover: &crate::graph::VertexSet,
    minimum: bool,
    options: &CheckOptions,
) -> Result<WellCoveredReport> {
    let n = g.n();
    let large = g.greedy_maximal_independent_set(cover.complement(n).iter().chain(g.vertices()));
    let small = cover
        .iter()
        .map(|v| g.greedy_maximal_independent_set(std::iter::once(v).chain(cover.iter()).chain(g.vertices())))
        .min_by_key(|s| s.len())
        .filter(|s| s.len() < large.len());
    let mut r = match small {
        Some(small) => WellCoveredReport::no(small, large),
        None => {
            let exact = run(g, Algorithm::MvcEnum, options)?;
            debug_assert!(!exact.well_covered);
            exact
        }
    };
    if minimum {
        r.alpha = Some(n - cover.len());
        r.vc = Some(cover.len());
    }
    Ok(r)
}
