use regsat::checkers::{
    check_inequalities, is_free, is_oversaturated, is_oversaturated_with, is_regular, is_saturated, is_saturated_with,
    diameter_bounds, rrsat_witness, CheckMode, Witness,
};
use regsat::constructions::{blow_up, circulant, graph_from_expr, k3_connection_set, regreg_witness};
use regsat::patterns::{self, build_pattern, pattern_from_key, PatternGraph, PatternKind};
use regsat::polarity::twin_augmented_polarity;
use regsat::Graph;

fn k(s: usize) -> PatternGraph {
    build_pattern(PatternKind::Clique(s)).unwrap()
}

/// Regular graphs claimed saturated for the given pattern.
fn instances() -> Vec<(Graph, PatternGraph)> {
    vec![
        (patterns::cycle(5), k(3)),
        (patterns::complete_multipartite(&[5, 5]), k(3)),
        (circulant(&k3_connection_set(35).unwrap()), k(3)),
        (graph_from_expr("C5+E3").unwrap(), k(4)),
        (graph_from_expr("C5[E2]+E6").unwrap(), k(4)),
        (blow_up(&patterns::cycle(5), &patterns::complete(2)), pattern_from_key("F6").unwrap()),
    ]
}

#[test]
fn saturation_implies_oversaturation_and_bounds() {
    for (g, f) in instances() {
        let sat = is_saturated(&g, &f);
        assert!(sat.pass, "{} on {} vertices", f.name, g.order());
        assert!(is_oversaturated(&g, &f).pass);
        let d = g.regular_degree().unwrap();
        let b = diameter_bounds(&f);
        if let Some(m) = b.m {
            let r = check_inequalities(g.order(), d, Some(m), None, None);
            assert!(r.pass, "n - d - 1 <= d^m fails for {}", f.name);
        }
    }
}

#[test]
fn oversaturated_degree_inequality() {
    let g = twin_augmented_polarity(3).unwrap().graph;
    assert!(is_oversaturated(&g, &k(3)).pass);
    assert!(!is_saturated(&g, &k(3)).pass);
    let d = g.regular_degree().unwrap();
    assert!(check_inequalities(g.order(), d, None, None, Some(1)).pass);
}

#[test]
fn rrsat_implies_free_and_regular() {
    for (t, d) in [(1, 2), (2, 2), (1, 4)] {
        let g = regreg_witness(t, d).unwrap().graph.graph;
        let r = rrsat_witness(&g, &k(t + 2));
        assert!(r.pass);
        assert_eq!(r.witness, Some(Witness::Vertex { vertex: 0 }));
        assert!(is_free(&g, &k(t + 2)).pass && is_regular(&g).pass);
    }
    assert!(!rrsat_witness(&patterns::cycle(6), &k(3)).pass);
    assert!(!rrsat_witness(&patterns::path(4), &k(3)).pass);
}

#[test]
fn witnesses_are_smallest_failing_pairs() {
    let c9 = patterns::cycle(9);
    let r = is_saturated(&c9, &k(3));
    assert_eq!(r.non_edge(), Some((0, 3)));
    let r = is_oversaturated(&patterns::cycle(6), &k(3));
    assert_eq!(r.non_edge(), Some((0, 3)));
}

#[test]
fn sampled_mode_is_seeded_and_recorded() {
    let g = circulant(&k3_connection_set(101).unwrap());
    let mode = CheckMode::Sampled { count: 200, seed: 9 };
    let a = is_saturated_with(&g, &k(3), mode);
    let b = is_saturated_with(&g, &k(3), mode);
    assert!(a.pass && a.mode == mode);
    assert_eq!(a.parameters.get("non_edges_checked"), b.parameters.get("non_edges_checked"));
    // More samples than non-edges falls back to the exhaustive check.
    let small = is_oversaturated_with(&patterns::cycle(5), &k(3), CheckMode::Sampled { count: 100, seed: 1 });
    assert_eq!(small.mode, CheckMode::Exhaustive);
}

#[test]
fn bounds_examples() {
    let b = diameter_bounds(&k(3));
    assert_eq!((b.m, b.r), (Some(2), Some(2)));
    let b = diameter_bounds(&k(4));
    assert_eq!((b.m, b.r), (Some(2), Some(2)));
    let b = diameter_bounds(&patterns::path(3));
    assert_eq!(b.m, None);
    assert!(check_inequalities(8, 3, Some(2), None, None).pass);
    assert!(!check_inequalities(100, 3, Some(2), None, None).pass);
    assert!(check_inequalities(22, 5, None, None, Some(1)).pass);
}

#[test]
fn report_json_shape() {
    let r = is_saturated(&patterns::cycle(7), &k(3));
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["property", "pass", "mode", "witness", "parameters", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["witness"]["kind"], "non_edge");
    assert_eq!(v["pass"], false);
}
