//! Reporting and batch helpers behind the `wcov` binary.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use wcov_core::check::{check, Algorithm, CheckOptions};
use wcov_core::degen::degen_leaf_bound;
use wcov_core::graph::Graph;
use wcov_core::io::read_graph;
use wcov_core::par::{self, Execution};
use wcov_core::report::WellCoveredReport;
use wcov_core::vcplus::leaf_bound;

pub const SCHEMA_VERSION: u32 = 1;

/// One decision, as printed by `check --json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub input: String,
    pub n: usize,
    pub m: usize,
    /// For auto, the algorithm it delegated to, or `auto` when the size test
    /// decided.
    pub algorithm: String,
    pub well_covered: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vc: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vc_plus: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_small: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_large: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree_leaves: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tree_nodes: Option<u64>,
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn new(input: &str, g: &Graph, algorithm: Algorithm, r: &WellCoveredReport) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            input: input.to_string(),
            n: g.n(),
            m: g.m(),
            algorithm: algorithm.name().to_string(),
            well_covered: r.well_covered,
            vc: r.vc,
            vc_plus: r.vc_plus,
            alpha: r.alpha,
            witness_small: r.witness_small.clone().map(|s| s.into_vec()),
            witness_large: r.witness_large.clone().map(|s| s.into_vec()),
            tree_leaves: r.stats.tree.map(|t| t.leaves),
            tree_nodes: r.stats.tree.map(|t| t.nodes),
            elapsed_ms: r.stats.elapsed.as_secs_f64() * 1e3,
        }
    }

    pub fn to_text(&self, tree_stats: bool) -> String {
        let mut out = format!(
            "input: {}\nn: {}  m: {}\nalgorithm: {}\nwell_covered: {}\n",
            self.input, self.n, self.m, self.algorithm, self.well_covered
        );
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        out += &format!(
            "alpha: {}  vc: {}  vc_plus: {}\n",
            opt(self.alpha),
            opt(self.vc),
            opt(self.vc_plus)
        );
        let join = |s: &[usize]| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        if let (Some(a), Some(b)) = (&self.witness_small, &self.witness_large) {
            out += &format!("witness_small ({}): {}\n", a.len(), join(a));
            out += &format!("witness_large ({}): {}\n", b.len(), join(b));
        }
        if tree_stats {
            if let (Some(l), Some(nodes)) = (self.tree_leaves, self.tree_nodes) {
                out += &format!("tree_leaves: {l}  tree_nodes: {nodes}\n");
            }
        }
        out += &format!("elapsed_ms: {:.3}\n", self.elapsed_ms);
        out
    }
}

/// One row of `bench` output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub instance: String,
    pub algorithm: String,
    pub well_covered: Option<bool>,
    pub leaves: Option<u64>,
    /// `ceil(1.4656^k)` for vcplus, `(d+1)^α` for degen, `2^vc` partitions
    /// for mvc-enum.
    pub bound: Option<u64>,
    pub violation: bool,
    pub elapsed_ms: f64,
    pub error: Option<String>,
}

/// Regular files of `dir`, sorted by name.
pub fn corpus_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    files.retain(|p| p.is_file());
    files.sort();
    Ok(files)
}

fn bench_one(name: &str, g: &Graph, algorithm: Algorithm, base: &CheckOptions) -> BenchRow {
    let start = Instant::now();
    let options = CheckOptions {
        algorithm,
        early_exit: false,
        execution: Execution::Sequential,
        ..base.clone()
    };
    let mut row = BenchRow {
        instance: name.to_string(),
        algorithm: algorithm.name().to_string(),
        well_covered: None,
        leaves: None,
        bound: None,
        violation: false,
        elapsed_ms: 0.0,
        error: None,
    };
    match check(g, &options) {
        Ok(out) => {
            let r = out.report;
            row.well_covered = Some(r.well_covered);
            match algorithm {
                Algorithm::Vcplus => {
                    let t = r.stats.tree.expect("vcplus reports a tree");
                    row.leaves = Some(t.leaves);
                    row.bound = Some(leaf_bound(t.k));
                }
                Algorithm::Degen => {
                    let t = r.stats.tree.expect("degen reports a tree");
                    row.leaves = Some(t.leaves);
                    let alpha = r.alpha.expect("full degen runs report alpha");
                    row.bound = Some(degen_leaf_bound(g.degeneracy(), alpha));
                }
                Algorithm::MvcEnum => {
                    row.leaves = r.stats.partitions;
                    row.bound = r.vc.and_then(|vc| 1u64.checked_shl(vc as u32));
                }
                _ => {}
            }
            row.violation = matches!((row.leaves, row.bound), (Some(l), Some(b)) if l > b);
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    row
}

/// Runs every algorithm on every corpus file; rows come back sorted by
/// instance name, then in the order of `algorithms`, regardless of
/// scheduling. Unreadable files give one error row per algorithm.
pub fn bench(files: &[PathBuf], algorithms: &[Algorithm], base: &CheckOptions, execution: Execution) -> Vec<BenchRow> {
    let per_file = par::map(files, execution, |path| {
        let name = path
            .file_name()
            .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        match read_graph(path) {
            Ok(g) => algorithms.iter().map(|&a| bench_one(&name, &g, a, base)).collect(),
            Err(e) => algorithms
                .iter()
                .map(|a| BenchRow {
                    instance: name.clone(),
                    algorithm: a.name().to_string(),
                    well_covered: None,
                    leaves: None,
                    bound: None,
                    violation: false,
                    elapsed_ms: 0.0,
                    error: Some(e.to_string()),
                })
                .collect::<Vec<_>>(),
        }
    });
    let mut rows: Vec<BenchRow> = per_file.into_iter().flatten().collect();
    rows.sort_by(|a, b| a.instance.cmp(&b.instance));
    rows
}

pub fn bench_table(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:<28} {:<9} {:<8} {:>12} {:>20} {:<9} {:>12}\n",
        "instance", "algorithm", "verdict", "leaves", "bound", "violation", "elapsed_ms"
    );
    let opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
    for r in rows {
        let verdict = match (&r.error, r.well_covered) {
            (Some(_), _) => "error",
            (None, Some(true)) => "yes",
            (None, Some(false)) => "no",
            (None, None) => "-",
        };
        out += &format!(
            "{:<28} {:<9} {:<8} {:>12} {:>20} {:<9} {:>12.3}",
            r.instance,
            r.algorithm,
            verdict,
            opt(r.leaves),
            opt(r.bound),
            if r.violation { "VIOLATION" } else { "ok" },
            r.elapsed_ms
        );
        if let Some(e) = &r.error {
            out += &format!("  ({e})");
        }
        out.push('\n');
    }
    out
}
