//! Polarity graphs over GF(2^p): order, degree profile, absolute points and
//! edge density, plus the twin-augmented and blown-up variants for small p.
//!
//! cargo run --release --example polarity

use regsat::checkers::is_oversaturated;
use regsat::patterns::{build_pattern, PatternKind};
use regsat::polarity::{edge_density, oversaturated_family, polarity_graph, twin_augmented_polarity};

fn main() -> regsat::Result<()> {
    println!("{:>2} {:>6} {:>8} {:>9} {:>10}  density^2", "p", "n", "edges", "absolute", "diameter");
    for p in 1..=6 {
        let pg = polarity_graph(p)?;
        let g = &pg.graph.graph;
        let dens = edge_density(g);
        println!(
            "{p:>2} {:>6} {:>8} {:>9} {:>10}  {} (~{:.4})",
            g.order(),
            g.edge_count(),
            pg.absolute_points.len(),
            g.diameter().map_or("inf".into(), |d| d.to_string()),
            dens.squared,
            dens.value,
        );
        assert!(pg.absolute_matches_expected);
    }

    let k3 = build_pattern(PatternKind::Clique(3))?;
    for p in 1..=3 {
        let twin = twin_augmented_polarity(p)?;
        let r = is_oversaturated(&twin.graph, &k3);
        println!("p = {p}: twin-augmented graph, n = {}, K3-oversaturated: {}", twin.graph.order(), r.pass);
    }
    let blown = oversaturated_family(2, 3)?;
    println!(
        "p = 2 blown up by 3: n = {}, regular degree {:?}",
        blown.graph.order(),
        blown.graph.regular_degree()
    );
    Ok(())
}
