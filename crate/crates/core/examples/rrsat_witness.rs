//! Regular K_{t+2}-free graphs with a vertex at which every non-edge is
//! saturated, checked with the rooted witness checker.
//!
//! cargo run --release --example rrsat_witness

use regsat::checkers::rrsat_witness;
use regsat::constructions::regreg_witness;
use regsat::patterns::{build_pattern, PatternKind};

fn main() -> regsat::Result<()> {
    for (t, d) in [(1, 2), (1, 4), (2, 2), (2, 4), (3, 2)] {
        let w = regreg_witness(t, d)?;
        let f = build_pattern(PatternKind::Clique(t + 2))?;
        let r = rrsat_witness(&w.graph.graph, &f);
        println!(
            "t = {t}, d = {d}: built n = {} (quoted {}), degree {}, witness check {}",
            w.constructed_order, w.stated_order, w.degree, r.pass
        );
    }
    Ok(())
}
