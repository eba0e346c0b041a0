//! Blow-ups, joins and derived patterns: degree laws for G[H] and G + H, the
//! F'_t pattern, and matching-saturated graphs.
//!
//! cargo run --release --example blowups

use regsat::checkers::{is_free, is_saturated};
use regsat::constructions::{blow_up, graph_from_expr, join_report, matching_saturated};
use regsat::patterns::{build_pattern, f_prime_t, PatternKind};

fn main() -> regsat::Result<()> {
    for (g, h) in [("C5", "E2"), ("C5", "K2"), ("petersen", "E3")] {
        let (gg, hh) = (graph_from_expr(g)?, graph_from_expr(h)?);
        let b = blow_up(&gg, &hh);
        println!("{g}[{h}]: n = {}, degree {:?}", b.order(), b.regular_degree());
    }

    let k4 = build_pattern(PatternKind::Clique(4))?;
    for (g, h) in [("C5", "E3"), ("C5[E2]", "E6"), ("petersen", "E7")] {
        let (gg, hh) = (graph_from_expr(g)?, graph_from_expr(h)?);
        let rep = join_report(&gg, &hh);
        let j = graph_from_expr(&format!("{g}+{h}"))?;
        println!(
            "{g} + {h}: regular {:?}, balanced {}, K4-saturated {}",
            j.regular_degree(),
            rep.is_some(),
            is_saturated(&j, &k4).pass
        );
    }

    let k3 = build_pattern(PatternKind::Clique(3))?;
    for t in 1..=3 {
        let f = f_prime_t(&k3, t, None)?;
        println!("{}: n = {}, edges = {}", f.name, f.order(), f.edge_count());
    }

    for (k, n) in [(2, 6), (3, 8), (3, 10)] {
        let g = matching_saturated(k, n)?;
        let m = build_pattern(PatternKind::Matching(k))?;
        println!(
            "M{k}-saturated on {n}: degree profile {:?}, free {}, saturated {}",
            g.degree_summary().profile(),
            is_free(&g, &m).pass,
            is_saturated(&g, &m).pass
        );
    }
    Ok(())
}
