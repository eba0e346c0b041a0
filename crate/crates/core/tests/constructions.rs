use proptest::prelude::*;

use regsat::constructions::{
    blow_up, circulant, graph_from_expr, join, join_report, k3_connection_set, k4_connection_set, matching_saturated,
    regreg_witness, CirculantSpec,
};
use regsat::patterns::{self, build_pattern, f_prime_t, pattern_from_key, PatternKind};
use regsat::Error;

fn small_regular() -> impl Strategy<Value = (String, usize, usize)> {
    prop_oneof![
        (3usize..9).prop_map(|n| (format!("C{n}"), n, 2)),
        (1usize..6).prop_map(|n| (format!("K{n}"), n, n - 1)),
        (1usize..6).prop_map(|n| (format!("E{n}"), n, 0)),
        Just(("petersen".to_string(), 10, 3)),
        (1usize..4).prop_map(|a| (format!("K{a},{a}"), 2 * a, a)),
    ]
}

proptest! {
    #[test]
    fn blow_up_degree_law((g, ng, dg) in small_regular(), (h, nh, dh) in small_regular()) {
        let b = blow_up(&graph_from_expr(&g).unwrap(), &graph_from_expr(&h).unwrap());
        prop_assert_eq!(b.order(), ng * nh);
        prop_assert_eq!(b.regular_degree(), Some(dg * nh + dh));
    }

    #[test]
    fn join_is_regular_iff_balanced((g, ng, dg) in small_regular(), (h, nh, dh) in small_regular()) {
        let (gg, hh) = (graph_from_expr(&g).unwrap(), graph_from_expr(&h).unwrap());
        let j = join(&gg, &hh);
        let report = join_report(&gg, &hh).unwrap();
        prop_assert_eq!(report.balanced, dg + nh == dh + ng);
        prop_assert_eq!(j.regular_degree().is_some(), report.balanced);
        prop_assert_eq!(j.edge_count(), gg.edge_count() + hh.edge_count() + ng * nh);
    }

    #[test]
    fn circulant_degree(n in 3usize..60, raw in proptest::collection::vec(1usize..30, 0..5)) {
        let residues: Vec<usize> = raw.into_iter().filter(|&a| a <= n / 2).collect();
        let spec = CirculantSpec::new(n, residues).unwrap();
        let g = circulant(&spec);
        prop_assert_eq!(g.regular_degree(), Some(spec.degree()));
        for &a in spec.residues() {
            prop_assert!(g.has_edge(0, a) && g.has_edge(0, (n - a) % n));
        }
    }
}

#[test]
fn k3_case_examples() {
    let spec = k3_connection_set(35).unwrap();
    assert_eq!(spec.residues(), &[1, 3, 5, 12, 14]);
    assert!(matches!(k3_connection_set(40), Err(Error::InvalidParameter(_))));
    assert!(matches!(k3_connection_set(13), Err(Error::BelowCaseThreshold { .. })));
    for n in (61..=101).step_by(2) {
        assert_eq!(circulant(&k3_connection_set(n).unwrap()).regular_degree(), Some(2 * k3_connection_set(n).unwrap().residues().len()));
    }
}

#[test]
fn k4_sets() {
    assert_eq!(k4_connection_set(14).unwrap().residues(), &[1, 2, 5, 6]);
    assert!(k4_connection_set(16).is_err());
    assert!(k4_connection_set(6).is_err());
}

#[test]
fn f_prime_edge_counts() {
    // C(s,2)·t² − t² + s·C(t,2) + 1, computed independently of the constructor.
    for s in [3usize, 4] {
        for t in [2usize, 3] {
            let base = build_pattern(PatternKind::Clique(s)).unwrap();
            let f = f_prime_t(&base, t, None).unwrap();
            let want = s * (s - 1) / 2 * t * t - t * t + s * t * (t - 1) / 2 + 1;
            assert_eq!((f.order(), f.edge_count()), (s * t, want), "s = {s}, t = {t}");
        }
    }
    let f = pattern_from_key("Kprime:3:2").unwrap();
    assert_eq!((f.order(), f.edge_count()), (6, 12));
}

#[test]
fn matching_saturated_profile() {
    let g = matching_saturated(3, 10).unwrap();
    assert_eq!(g.degree_summary().profile(), vec![(2, 8), (9, 2)]);
    assert!(matching_saturated(3, 5).is_err());
}

#[test]
fn regreg_orders() {
    for (t, d) in [(1, 2), (2, 4), (3, 2)] {
        let w = regreg_witness(t, d).unwrap();
        assert_eq!(w.graph.graph.order(), 1 + d * d * t);
        assert_eq!(w.graph.graph.regular_degree(), Some(d * t));
        assert_eq!(w.stated_order, 1 + d * d * t * t);
        assert_eq!(w.graph.labels.len(), w.graph.graph.order());
    }
    assert!(regreg_witness(1, 3).is_err());
}

#[test]
fn expressions() {
    assert_eq!(graph_from_expr("C5[E2]+E6").unwrap().regular_degree(), Some(10));
    assert_eq!(graph_from_expr("(C5+E3)[E_10]").unwrap().order(), 80);
    assert_eq!(graph_from_expr("petersen").unwrap(), patterns::petersen());
    assert!(graph_from_expr("C5+").is_err());
    assert!(graph_from_expr("Q7").is_err());
}
