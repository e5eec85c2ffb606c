use proptest::prelude::*;
use wcov_core::crown::{find_crown_or_matching, kernelize, strip_isolated, validate_crown, CrownOrMatching, KernelOutcome};
use wcov_core::degen::{degen_tree_stats, well_covered_degenerate, DegenOptions};
use wcov_core::graph::{Graph, VertexSet};
use wcov_core::io::{parse_graph, to_dimacs, to_edge_list, Format};
use wcov_core::matching::{brute_force_maximum_matching, greedy_maximal_matching, max_bipartite_matching};
use wcov_core::mvc_enum::{
    classify_partition, enumerate_minimal_vertex_covers, minimum_vertex_cover, well_covered_via_mvc_enum,
    MvcEnumOptions, PartitionVerdict,
};
use wcov_core::oracle::{
    enumerate_maximal_independent_sets, graph_stats_oracle, maximal_independent_sets_by_subset_scan,
    OracleConfig,
};
use wcov_core::par::Execution;
use wcov_core::vcplus::{leaf_bound, well_covered_via_branching};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn subset(n: usize) -> impl Strategy<Value = VertexSet> {
    prop::collection::vec(any::<bool>(), n).prop_map(|bits| VertexSet::from_mask(&bits))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cover_complement_duality((g, s) in graph(10).prop_flat_map(|g| { let n = g.n(); (Just(g), subset(n)) })) {
        let rest = s.complement(g.n());
        prop_assert_eq!(g.is_minimal_vertex_cover(&s), g.is_maximal_independent_set(&rest));
        prop_assert_eq!(g.is_vertex_cover(&s), g.is_independent_set(&rest));
    }

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn degeneracy_ordering_is_valid(g in graph(14)) {
        let (order, d) = g.degeneracy_ordering();
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for v in g.vertices() {
            let later = g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count();
            prop_assert!(later <= d);
        }
    }

    #[test]
    fn matchings(g in graph(10)) {
        let best = brute_force_maximum_matching(&g);
        let greedy = greedy_maximal_matching(&g);
        prop_assert!(greedy.is_valid_in(&g));
        prop_assert!(2 * greedy.len() >= best);
        let left: VertexSet = g.vertices().filter(|v| v % 2 == 0).collect();
        let right = left.complement(g.n());
        let bip = max_bipartite_matching(&g, &left, &right);
        prop_assert!(bip.matching.is_valid_in(&g));
        // brute force on the bipartite subgraph
        let cross = Graph::from_edges(
            g.n(),
            g.edges().iter().copied().filter(|&(u, v)| left.contains(u) != left.contains(v)),
        ).unwrap();
        prop_assert_eq!(bip.len(), brute_force_maximum_matching(&cross));
    }

    #[test]
    fn oracle_matches_subset_scan(g in graph(11)) {
        let mut bk = enumerate_maximal_independent_sets(&g, &OracleConfig::default()).unwrap();
        let mut scan = maximal_independent_sets_by_subset_scan(&g);
        bk.sort();
        scan.sort();
        prop_assert_eq!(bk, scan);
        let s = graph_stats_oracle(&g, &OracleConfig::default()).unwrap();
        prop_assert_eq!(s.vc + s.alpha, g.n());
        prop_assert_eq!(s.vc_plus + s.i_min, g.n());
    }

    #[test]
    fn partitions_with_covers_have_independent_b(g in graph(10)) {
        let cmin = minimum_vertex_cover(&g, None).unwrap();
        let k = cmin.len();
        let full = well_covered_via_mvc_enum(&g, MvcEnumOptions::default()).unwrap();
        prop_assert_eq!(full.stats.partitions, Some(1u64 << k));
        for mask in 0u32..1 << k {
            let b: VertexSet = cmin.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v).collect();
            let p = classify_partition(&g, &cmin, &b).unwrap();
            if p.verdict != PartitionVerdict::NotACover {
                prop_assert!(g.is_independent_set(&b));
            }
        }
    }

    #[test]
    fn deciders_agree_with_oracle(g in graph(11)) {
        let truth = graph_stats_oracle(&g, &OracleConfig::default()).unwrap();
        let expect = (truth.vc == truth.vc_plus, Some(truth.vc), Some(truth.vc_plus));
        let m = well_covered_via_mvc_enum(&g, MvcEnumOptions::default()).unwrap();
        prop_assert_eq!((m.well_covered, m.vc, m.vc_plus), expect);
        let v = well_covered_via_branching(&g);
        prop_assert_eq!((v.well_covered, v.vc, v.vc_plus), expect);
        prop_assert!(v.stats.tree.unwrap().leaves <= leaf_bound(g.n() - truth.i_min));
        let d = well_covered_degenerate(&g, DegenOptions { early_exit: false, ..Default::default() });
        prop_assert_eq!((d.well_covered, d.vc, d.vc_plus), expect);
        for r in [&m, &v, &d] {
            if let (Some(a), Some(b)) = (&r.witness_small, &r.witness_large) {
                prop_assert!(g.is_maximal_independent_set(a));
                prop_assert!(g.is_maximal_independent_set(b));
                prop_assert!(g.is_minimal_vertex_cover(&a.complement(g.n())));
                prop_assert!(a.len() < b.len());
            }
        }
    }

    #[test]
    fn crowns_are_valid(g in graph(16), k_frac in 0.0f64..1.0) {
        let h = strip_isolated(&g).graph;
        prop_assume!(h.n() >= 4);
        let k = ((h.n() - 1) / 3) as f64 * k_frac;
        let k = k as usize;
        let m1 = greedy_maximal_matching(&h);
        if m1.len() <= k {
            let cover = m1.vertices();
            prop_assert!(h.is_vertex_cover(&cover));
            prop_assert!(h.is_independent_set(&cover.complement(h.n())));
        }
        match find_crown_or_matching(&h, k).unwrap() {
            CrownOrMatching::Matching(m) => {
                prop_assert_eq!(m.len(), k + 1);
                prop_assert!(m.is_valid_in(&h));
            }
            CrownOrMatching::Crown(c) => {
                prop_assert!(validate_crown(&h, &c));
                prop_assert!(c.head.len() <= k);
            }
        }
    }

    #[test]
    fn kernel_is_sound(g in graph(12)) {
        let h = strip_isolated(&g).graph;
        if let KernelOutcome::NotWellCovered { n, k } = kernelize(&h).unwrap() {
            prop_assert!(n > 5 * k);
            let s = graph_stats_oracle(&h, &OracleConfig::default()).unwrap();
            prop_assert!(s.vc != s.vc_plus);
        }
    }

    #[test]
    fn formats_round_trip(g in graph(12)) {
        prop_assert_eq!(&parse_graph(&to_edge_list(&g), Format::EdgeList).unwrap(), &g);
        prop_assert_eq!(&parse_graph(&to_dimacs(&g), Format::Dimacs).unwrap(), &g);
    }

    #[test]
    fn parallel_matches_sequential(g in graph(12)) {
        let cmin = minimum_vertex_cover(&g, None).unwrap();
        prop_assert_eq!(
            enumerate_minimal_vertex_covers(&g, &cmin, Execution::Sequential).unwrap(),
            enumerate_minimal_vertex_covers(&g, &cmin, Execution::Parallel).unwrap()
        );
        prop_assert_eq!(degen_tree_stats(&g, Execution::Sequential), degen_tree_stats(&g, Execution::Parallel));
    }
}
