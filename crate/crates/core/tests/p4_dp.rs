use wcov_core::generators::{
    cycle, generate, path, Family, GenSpec, SpiderSubstitution, SEPARABLE_TEMPLATES,
};
use wcov_core::graph::Graph;
use wcov_core::oracle::{is_well_covered_oracle, OracleConfig};
use wcov_core::p4::{
    decompose_step, pseudo_split_partition, quasi_spider_partition, well_covered_few_p4, ClassMode,
    DecompositionCase, Replacement, Side, SpiderKind,
};
use wcov_core::rng::SplitMix64;

fn check(g: &Graph, mode: ClassMode, label: &str) {
    let truth = is_well_covered_oracle(g, &OracleConfig::default()).unwrap();
    let (report, alpha) = well_covered_few_p4(g, mode).unwrap_or_else(|e| panic!("{label}: {e}"));
    assert_eq!(report.well_covered, truth.well_covered, "{label}: verdict");
    assert_eq!(Some(alpha), truth.alpha, "{label}: alpha");
    if !report.well_covered {
        let small = report.witness_small.unwrap();
        let large = report.witness_large.unwrap();
        assert!(g.is_maximal_independent_set(&small), "{label}: small witness {small:?}");
        assert!(g.is_maximal_independent_set(&large), "{label}: large witness {large:?}");
        assert!(small.len() < large.len(), "{label}");
    }
}

fn spider_variants() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for k in 2..=6 {
        for family in [Family::ThinSpider, Family::ThickSpider] {
            let mut subs = vec![None];
            for side in [Side::C, Side::S] {
                for replacement in [Replacement::K2, Replacement::CoK2] {
                    subs.push(Some(SpiderSubstitution {
                        side,
                        index: k / 2,
                        replacement,
                    }));
                }
            }
            for sub in subs {
                for r in [0, 2] {
                    let mut spec = GenSpec::new(family).k(k).r(r).seed(k as u64);
                    spec.substitution = sub;
                    let label = format!("{family} k={k} r={r} sub={sub:?}");
                    out.push((label, generate(&spec).unwrap()));
                }
            }
        }
    }
    out
}

#[test]
fn spiders_match_oracle() {
    for (label, g) in spider_variants() {
        check(&g, ClassMode::ExtLaden, &label);
        check(&g, ClassMode::Qq4 { q: 7 }, &label);
    }
}

#[test]
fn thin_spiders_are_detected_as_thin() {
    for k in 2..=6 {
        let g = generate(&GenSpec::new(Family::ThinSpider).k(k)).unwrap();
        let sp = quasi_spider_partition(&g).unwrap();
        assert_eq!(sp.kind, SpiderKind::Thin);
        assert_eq!(sp.substitution, None);
    }
}

#[test]
fn pseudo_splits_match_oracle() {
    for seed in 0..200 {
        let n = 4 + (seed as usize % 27);
        let g = generate(&GenSpec::new(Family::PseudoSplit).n(n).seed(seed)).unwrap();
        let p = pseudo_split_partition(&g).unwrap_or_else(|| panic!("seed {seed}: no partition"));
        assert!(p.is_valid_in(&g));
        check(&g, ClassMode::ExtLaden, &format!("pseudo-split seed {seed}"));
    }
}

#[test]
fn pseudo_split_detector_is_sound_on_random_graphs() {
    let mut rng = SplitMix64::new(5);
    for _ in 0..2000 {
        let n = rng.range(1, 9);
        let g = wcov_core::generators::gnp(n, rng.next_f64(), &mut rng);
        if let Some(p) = pseudo_split_partition(&g) {
            assert!(p.is_valid_in(&g), "{g:?}");
        }
    }
}

#[test]
fn cographs_and_recipes_match_oracle() {
    for seed in 0..200 {
        let n = 1 + (seed as usize % 40);
        let g = generate(&GenSpec::new(Family::Cograph).n(n).seed(seed)).unwrap();
        check(&g, ClassMode::ExtLaden, &format!("cograph seed {seed}"));
        check(&g, ClassMode::Qq4 { q: 4 }, &format!("cograph qq4 seed {seed}"));
        let g = generate(&GenSpec::new(Family::UnionJoinRecipe).n(n).seed(seed)).unwrap();
        check(&g, ClassMode::ExtLaden, &format!("recipe seed {seed}"));
    }
}

#[test]
fn special_five_vertex_graphs() {
    for (g, wc) in [(cycle(5), true), (path(5), false), (path(5).complement(), true)] {
        let (r, _) = well_covered_few_p4(&g, ClassMode::ExtLaden).unwrap();
        assert_eq!(r.well_covered, wc);
        check(&g, ClassMode::ExtLaden, "special");
    }
}

#[test]
fn join_rule() {
    let g = wcov_core::generators::cycle(4).join(&cycle(5));
    let (r, alpha) = well_covered_few_p4(&g, ClassMode::ExtLaden).unwrap();
    assert!(r.well_covered);
    assert_eq!(alpha, 2);
    // C4 and a union of two triangles: both well covered, α 2 and 2
    let two_k3 = wcov_core::generators::complete(3).disjoint_union(&wcov_core::generators::complete(3));
    check(&cycle(4).join(&two_k3), ClassMode::ExtLaden, "C4 v 2K3");
    // C4 and a union of three triangles: α 2 ≠ 3
    let three_k3 = two_k3.disjoint_union(&wcov_core::generators::complete(3));
    let g = cycle(4).join(&three_k3);
    let (r, alpha) = well_covered_few_p4(&g, ClassMode::ExtLaden).unwrap();
    assert!(!r.well_covered);
    assert_eq!(alpha, 3);
    check(&g, ClassMode::ExtLaden, "C4 v 3K3");
    check(&cycle(4).disjoint_union(&cycle(4)), ClassMode::ExtLaden, "C4 u C4");
}

#[test]
fn separable_family_matches_oracle() {
    for (t, template) in SEPARABLE_TEMPLATES.iter().enumerate() {
        for seed in 0..25 {
            let n = template.n + 1 + (seed as usize % 8);
            let g = generate(&GenSpec::new(Family::Separable).n(n).k(t).seed(seed)).unwrap();
            let case = decompose_step(&g, ClassMode::Qq4 { q: 7 }).unwrap();
            assert!(matches!(case, DecompositionCase::PComponent { .. }), "template {t}: {case:?}");
            check(&g, ClassMode::Qq4 { q: 7 }, &format!("separable t={t} seed={seed}"));
        }
    }
}

#[test]
fn p4_plus_v_is_not_well_covered() {
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]).unwrap();
    check(&g, ClassMode::Qq4 { q: 7 }, "P4 plus v");
    let (r, _) = well_covered_few_p4(&g, ClassMode::Qq4 { q: 7 }).unwrap();
    assert!(!r.well_covered);
}

#[test]
fn outside_class_fails_to_decompose() {
    // C6 is neither extended P4-laden-decomposable nor small for q = 5
    let err = well_covered_few_p4(&cycle(6), ClassMode::Qq4 { q: 5 }).unwrap_err();
    assert!(matches!(err, wcov_core::error::Error::DecompositionFailed { .. }));
}
