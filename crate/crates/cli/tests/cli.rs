use std::path::Path;
use std::process::{Command, Output};

use wcov::{bench, corpus_files, BenchRow, RunReport};
use wcov_core::check::{Algorithm, CheckOptions};
use wcov_core::generators::{cycle, gnp, path, star};
use wcov_core::graph::Graph;
use wcov_core::io::to_edge_list;
use wcov_core::par::Execution;
use wcov_core::rng::SplitMix64;

fn wcov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wcov"))
        .args(args)
        .env_remove("WCOV_ORACLE_BUDGET")
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, g: &Graph) -> String {
    let p = dir.join(name);
    std::fs::write(&p, to_edge_list(g)).unwrap();
    p.display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.txt", &cycle(5));
    assert_eq!(wcov(&["check", &c5]).status.code(), Some(0));
    let k16 = write(dir.path(), "k16.txt", &star(6));
    let out = wcov(&["check", "--json", &k16]);
    assert_eq!(out.status.code(), Some(1));
    let report: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.algorithm, "auto");
    assert_eq!(report.schema, 1);
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 1\n1 x\n").unwrap();
    assert_eq!(wcov(&["check", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(wcov(&["check", "/nonexistent/graph.txt"]).status.code(), Some(2));
}

#[test]
fn every_algorithm_agrees_on_c5_and_p5() {
    let dir = tempfile::tempdir().unwrap();
    for (name, g, code) in [("c5.txt", cycle(5), 0), ("p5.txt", path(5), 1)] {
        let file = write(dir.path(), name, &g);
        for algo in ["auto", "oracle", "mvc-enum", "vcplus", "degen"] {
            let out = wcov(&["check", "--algo", algo, &file]);
            assert_eq!(out.status.code(), Some(code), "{algo} on {name}");
        }
        let out = wcov(&["check", "--algo", "p4", "--class", "ext-laden", &file]);
        assert_eq!(out.status.code(), Some(code), "p4 on {name}");
    }
}

#[test]
fn p4_without_class_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c5.txt", &cycle(5));
    assert_eq!(wcov(&["check", "--algo", "p4", &file]).status.code(), Some(2));
    // C6 has too many P4s for (5,1)
    let c6 = write(dir.path(), "c6.txt", &cycle(6));
    let out = wcov(&["check", "--algo", "p4", "--class", "qq4", "--q", "5", &c6]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "p5.txt", &path(5));
    let out = wcov(&["check", "--algo", "vcplus", "--json", &file]);
    let text = stdout(&out);
    let report: RunReport = serde_json::from_str(&text).unwrap();
    let again: RunReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(report, again);
    assert_eq!((report.vc, report.vc_plus, report.alpha), (Some(2), Some(3), Some(3)));
    assert!(report.tree_leaves.is_some());
    // fields an algorithm does not compute are absent
    let out = wcov(&["check", "--algo", "oracle", "--json", &file]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.get("tree_leaves").is_none());
}

#[test]
fn stats_examples() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (cycle(7), (3, 4, 4, 2)),
        (path(5), (3, 2, 3, 1)),
        (Graph::empty(1), (1, 0, 0, 0)),
    ];
    for (i, (g, (alpha, vc, vc_plus, d))) in cases.into_iter().enumerate() {
        let file = write(dir.path(), &format!("g{i}.txt"), &g);
        let out = wcov(&["stats", "--json", &file]);
        assert_eq!(out.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["alpha"], alpha);
        assert_eq!(v["vc"], vc);
        assert_eq!(v["vc_plus"], vc_plus);
        assert_eq!(v["degeneracy"], d);
    }
    let big = write(dir.path(), "big.txt", &path(300));
    assert_eq!(wcov(&["stats", &big]).status.code(), Some(2));
}

#[test]
fn oracle_budget_from_env_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    // C5 has five maximal independent sets
    let file = write(dir.path(), "c5.txt", &cycle(5));
    let env = Command::new(env!("CARGO_BIN_EXE_wcov"))
        .args(["check", "--algo", "oracle", &file])
        .env("WCOV_ORACLE_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));
    let flag = wcov(&["check", "--algo", "oracle", "--oracle-budget", "2", &file]);
    assert_eq!(flag.status.code(), Some(2));
    assert_eq!(wcov(&["check", "--algo", "oracle", &file]).status.code(), Some(0));
}

#[test]
fn kernel_and_enum_mvc() {
    let dir = tempfile::tempdir().unwrap();
    let k16 = write(dir.path(), "k16.txt", &star(6));
    let out = wcov(&["kernel", "--json", &k16]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["outcome"], "not-well-covered");
    assert_eq!(v["k"], 1);
    let c4 = write(dir.path(), "c4.txt", &cycle(4));
    assert_eq!(stdout(&wcov(&["enum-mvc", &c4])), "0 2\n1 3\n");
    assert_eq!(stdout(&wcov(&["enum-mvc", "--count-only", "--parallel", &c4])), "2\n");
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--family", "gnp", "--n", "30", "--p", "0.3", "--seed", "9"];
    let a = wcov(&args);
    let b = wcov(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let spider = stdout(&wcov(&["gen", "--family", "thin-spider", "--k", "3"]));
    assert!(spider.starts_with("# vertices 6\n"), "{spider}");
    let dimacs = stdout(&wcov(&["gen", "--family", "cycle", "--n", "5", "--format", "dimacs"]));
    assert!(dimacs.starts_with("p edge 5 5\n"));
    assert_eq!(wcov(&["gen", "--family", "nope"]).status.code(), Some(2));
}

fn gnp_corpus(dir: &Path) {
    let mut rng = SplitMix64::new(50);
    for i in 0..50 {
        let n = rng.range(4, 12);
        let g = gnp(n, rng.next_f64(), &mut rng);
        write(dir, &format!("gnp{i:02}.txt"), &g);
    }
}

#[test]
fn bench_has_no_violations_and_algorithms_agree() {
    let dir = tempfile::tempdir().unwrap();
    gnp_corpus(dir.path());
    let files = corpus_files(dir.path()).unwrap();
    let algos = [Algorithm::Oracle, Algorithm::MvcEnum, Algorithm::Vcplus, Algorithm::Degen];
    let rows = bench(&files, &algos, &CheckOptions::default(), Execution::Parallel);
    assert_eq!(rows.len(), 200);
    assert!(rows.iter().all(|r| r.error.is_none() && !r.violation));
    for chunk in rows.chunks(4) {
        assert!(chunk.iter().all(|r| r.instance == chunk[0].instance));
        assert!(chunk.iter().all(|r| r.well_covered == chunk[0].well_covered), "{chunk:?}");
    }
    let seq = bench(&files, &algos, &CheckOptions::default(), Execution::Sequential);
    let key = |rows: &[BenchRow]| rows.iter().map(|r| (r.instance.clone(), r.algorithm.clone(), r.leaves)).collect::<Vec<_>>();
    assert_eq!(key(&rows), key(&seq));

    let out = wcov(&["bench", "--json", "--parallel", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: Vec<BenchRow> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed.len(), 200);
}

#[test]
fn bench_edge_cases() {
    let empty = tempfile::tempdir().unwrap();
    let out = wcov(&["bench", "--json", empty.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "[]");

    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.txt", &cycle(5));
    std::fs::write(dir.path().join("b.txt"), "not a graph\n").unwrap();
    let out = wcov(&["bench", "--json", "--algos", "degen,vcplus", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<BenchRow> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows[..2].iter().all(|r| r.error.is_none()));
    assert!(rows[2..].iter().all(|r| r.instance == "b.txt" && r.error.is_some()));
}
