use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wcov_core::degen::degen_tree_stats;
use wcov_core::generators::{clique_fringe, gnp};
use wcov_core::graph::Graph;
use wcov_core::mvc_enum::{well_covered_via_mvc_enum, MvcEnumOptions};
use wcov_core::oracle::{is_well_covered_oracle, OracleConfig};
use wcov_core::par::{self, Execution};
use wcov_core::rng::SplitMix64;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn corpus() -> Vec<Graph> {
    let mut rng = SplitMix64::new(1);
    (0..400).map(|i| gnp(8 + i % 6, 0.1 + 0.1 * (i % 8) as f64, &mut rng)).collect()
}

fn batch_cross_validation(c: &mut Criterion) {
    let graphs = corpus();
    let mut group = c.benchmark_group("batch_cross_validation");
    for (name, execution) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                par::map(&graphs, execution, |g| {
                    let truth = is_well_covered_oracle(g, &OracleConfig::default()).unwrap();
                    let ours = well_covered_via_mvc_enum(g, MvcEnumOptions::default()).unwrap();
                    truth.well_covered == ours.well_covered
                })
            })
        });
    }
    group.finish();
}

fn mvc_enum_full_scan(c: &mut Criterion) {
    // 18 disjoint P3s: minimum cover of 18 centres, 2^18 partitions
    let mut edges = Vec::new();
    for i in 0..18 {
        edges.push((3 * i, 3 * i + 1));
        edges.push((3 * i + 1, 3 * i + 2));
    }
    let g = Graph::from_edges(54, edges).unwrap();
    let mut group = c.benchmark_group("mvc_enum_full_scan");
    group.sample_size(10);
    for (name, execution) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                well_covered_via_mvc_enum(
                    &g,
                    MvcEnumOptions {
                        decide_only: false,
                        execution,
                    },
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

fn degen_full_tree(c: &mut Criterion) {
    let g = clique_fringe(40, 4, &mut SplitMix64::new(5));
    let mut group = c.benchmark_group("degen_full_tree");
    group.sample_size(10);
    for (name, execution) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| degen_tree_stats(&g, execution)));
    }
    group.finish();
}

criterion_group!(benches, batch_cross_validation, mvc_enum_full_scan, degen_full_tree);
criterion_main!(benches);
