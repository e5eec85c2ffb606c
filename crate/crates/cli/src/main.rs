use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use wcov::{bench, bench_table, corpus_files, RunReport};
use wcov_core::check::{check, Algorithm, CheckOptions};
use wcov_core::crown::{kernelize, strip_isolated, KernelOutcome};
use wcov_core::generators::{generate, Family, GenSpec, SpiderSubstitution};
use wcov_core::graph::Graph;
use wcov_core::io::{read_graph, to_dimacs, to_edge_list};
use wcov_core::mvc_enum::{count_minimal_vertex_covers, enumerate_minimal_vertex_covers, minimum_vertex_cover};
use wcov_core::oracle::{graph_stats_oracle, OracleConfig};
use wcov_core::p4::{ClassMode, Replacement, Side, DEFAULT_Q};
use wcov_core::par::Execution;

#[derive(Parser)]
#[command(name = "wcov", version, about = "Well-covered graph recognition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Split independent work across threads.
    #[arg(long)]
    parallel: bool,
    /// Maximum number of maximal independent sets the oracle may enumerate
    /// [default: $WCOV_ORACLE_BUDGET or 10000000].
    #[arg(long)]
    oracle_budget: Option<u64>,
}

impl Common {
    fn execution(&self) -> Execution {
        if self.parallel {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }

    fn oracle(&self) -> OracleConfig {
        match self.oracle_budget {
            Some(budget) => OracleConfig { budget },
            None => OracleConfig::from_env(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Auto,
    Oracle,
    MvcEnum,
    Vcplus,
    Degen,
    P4,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Auto => Algorithm::Auto,
            AlgoArg::Oracle => Algorithm::Oracle,
            AlgoArg::MvcEnum => Algorithm::MvcEnum,
            AlgoArg::Vcplus => Algorithm::Vcplus,
            AlgoArg::Degen => Algorithm::Degen,
            AlgoArg::P4 => Algorithm::P4,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    ExtLaden,
    Qq4,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    C,
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReplacementArg {
    K2,
    CoK2,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    EdgeList,
    Dimacs,
}

#[derive(Args)]
struct ClassArgs {
    /// Graph class for the p4 algorithm.
    #[arg(long, value_enum)]
    class: Option<ClassArg>,
    /// Vertex bound q of the (q, q−4) class.
    #[arg(long, default_value_t = DEFAULT_Q)]
    q: usize,
    /// Check class membership by brute force first.
    #[arg(long)]
    verify_class: bool,
}

impl ClassArgs {
    fn mode(&self) -> Result<Option<ClassMode>> {
        Ok(match self.class {
            None => None,
            Some(ClassArg::ExtLaden) => Some(ClassMode::ExtLaden),
            Some(ClassArg::Qq4) => Some(ClassMode::qq4(self.q)?),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is well covered. Exit 0: yes, 1: no, 2: error.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        algo: AlgoArg,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        json: bool,
        /// Print search-tree leaf and node counts.
        #[arg(long)]
        emit_tree_stats: bool,
        /// Explore the whole search space instead of stopping at the first
        /// evidence of NO.
        #[arg(long)]
        no_early_exit: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Exact parameters by full enumeration (small graphs only).
    Stats {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        max_n: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Apply the 5k size rule after removing isolated vertices.
    Kernel {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate every minimal vertex cover via partitions of a minimum one.
    EnumMvc {
        file: PathBuf,
        #[arg(long)]
        count_only: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Write a generated graph to stdout.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Base family for corona.
        #[arg(long)]
        base: Option<String>,
        /// Spider side of the substituted vertex.
        #[arg(long, value_enum, requires = "sub_replacement")]
        sub_side: Option<SideArg>,
        #[arg(long, default_value_t = 0)]
        sub_index: usize,
        #[arg(long, value_enum, requires = "sub_side")]
        sub_replacement: Option<ReplacementArg>,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: FormatArg,
    },
    /// Run algorithms over every graph file in a directory.
    Bench {
        dir: PathBuf,
        /// Comma-separated algorithm names.
        #[arg(long, value_delimiter = ',', default_values = ["oracle", "mvc-enum", "vcplus", "degen"])]
        algos: Vec<AlgoArg>,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: Common,
    },
}

fn load(path: &Path) -> Result<Graph> {
    read_graph(path).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check {
            file,
            algo,
            class,
            json,
            emit_tree_stats,
            no_early_exit,
            common,
        } => {
            let g = load(&file)?;
            let options = CheckOptions {
                algorithm: algo.into(),
                class: class.mode()?,
                verify_class: class.verify_class,
                early_exit: !no_early_exit,
                execution: common.execution(),
                oracle: common.oracle(),
            };
            let out = check(&g, &options)?;
            let report = RunReport::new(&file.display().to_string(), &g, out.algorithm, &out.report);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.to_text(emit_tree_stats));
            }
            Ok(if report.well_covered {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Stats {
            file,
            max_n,
            json,
            common,
        } => {
            let g = load(&file)?;
            if g.n() > max_n {
                bail!("graph has {} vertices; stats is limited to --max-n {max_n}", g.n());
            }
            let s = graph_stats_oracle(&g, &common.oracle())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&s)?);
            } else {
                println!(
                    "n: {}  m: {}\nalpha: {}  i_min: {}\nvc: {}  vc_plus: {}\ndegeneracy: {}",
                    s.n,
                    g.m(),
                    s.alpha,
                    s.i_min,
                    s.vc,
                    s.vc_plus,
                    s.degeneracy
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kernel { file, json } => {
            let g = load(&file)?;
            let stripped = strip_isolated(&g);
            let isolated = g.n() - stripped.graph.n();
            let (verdict, n, k) = match kernelize(&stripped.graph)? {
                KernelOutcome::NotWellCovered { n, k } => ("not-well-covered", n, k),
                KernelOutcome::Kernel { graph, k } => ("kernel", graph.n(), k),
            };
            if json {
                let v = serde_json::json!({
                    "outcome": verdict,
                    "isolated_removed": isolated,
                    "n": n,
                    "k": k,
                    "bound": 5 * k,
                });
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("isolated removed: {isolated}\nn: {n}  k: {k}  5k: {}\noutcome: {verdict}", 5 * k);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::EnumMvc {
            file,
            count_only,
            common,
        } => {
            let g = load(&file)?;
            let cmin = minimum_vertex_cover(&g, None).expect("unbounded search always finds a cover");
            if count_only {
                println!("{}", count_minimal_vertex_covers(&g, &cmin, common.execution())?);
            } else {
                for c in enumerate_minimal_vertex_covers(&g, &cmin, common.execution())? {
                    let line: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                    println!("{}", line.join(" "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            family,
            n,
            k,
            p,
            r,
            seed,
            base,
            sub_side,
            sub_index,
            sub_replacement,
            format,
        } => {
            let mut spec = GenSpec::new(family.parse::<Family>()?).n(n).k(k).p(p).r(r).seed(seed);
            if let Some(b) = base {
                spec = spec.base(b.parse()?);
            }
            if let (Some(side), Some(replacement)) = (sub_side, sub_replacement) {
                spec = spec.substitution(SpiderSubstitution {
                    side: match side {
                        SideArg::C => Side::C,
                        SideArg::S => Side::S,
                    },
                    index: sub_index,
                    replacement: match replacement {
                        ReplacementArg::K2 => Replacement::K2,
                        ReplacementArg::CoK2 => Replacement::CoK2,
                    },
                });
            }
            let g = generate(&spec)?;
            match format {
                FormatArg::EdgeList => print!("{}", to_edge_list(&g)),
                FormatArg::Dimacs => print!("{}", to_dimacs(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            dir,
            algos,
            class,
            json,
            common,
        } => {
            let files = corpus_files(&dir).with_context(|| format!("listing {}", dir.display()))?;
            let algorithms: Vec<Algorithm> = algos.into_iter().map(Algorithm::from).collect();
            let base = CheckOptions {
                class: class.mode()?,
                verify_class: class.verify_class,
                oracle: common.oracle(),
                ..Default::default()
            };
            let rows = bench(&files, &algorithms, &base, common.execution());
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                print!("{}", bench_table(&rows));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
