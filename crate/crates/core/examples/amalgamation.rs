//! Builds H[s,t,G] for complete multipartite H and checks it.
//!
//! cargo run --release --example amalgamation            # 64-vertex instance
//! cargo run --release --example amalgamation -- --large # 7344-vertex instance

use std::time::Instant;

use regsat::amalgam::{amalgamate_multipartite, multipartite_two_factors, solve_t, verify_orientation_property};
use regsat::checkers::{is_free, is_saturated, is_saturated_with, CheckMode};
use regsat::constructions::graph_from_expr;
use regsat::patterns::{build_pattern, PatternKind};

fn run(q: usize, s: usize, g_expr: &str, mode: CheckMode) -> regsat::Result<()> {
    let g = graph_from_expr(g_expr)?;
    let d_g = g.regular_degree().expect("G is regular");
    let (n_h, d_h) = ((s + 1) * q, s * q);
    let t = solve_t(n_h, d_h, g.order(), d_g, s)?.t.expect("integral t") as usize;
    let factors = multipartite_two_factors(q, s)?;
    println!(
        "H = K_{{{q} x {}}}, s = {s}, G = {g_expr} ({} vertices, {d_g}-regular), t = {t}",
        s + 1,
        g.order()
    );
    println!("orientation property: {}", verify_orientation_property(&factors)?.pass);

    let start = Instant::now();
    let out = amalgamate_multipartite(q, s, t, &g)?.graph;
    println!(
        "built {} vertices, degree {:?}, {} edges in {:.2?}",
        out.order(),
        out.regular_degree(),
        out.edge_count(),
        start.elapsed()
    );
    println!(
        "  G-blob degree s*t + (n_H-1)*d_G = {}, H-blob degree t*d_H + s*n_G = {}",
        s * t + (n_h - 1) * d_g,
        t * d_h + s * g.order()
    );

    let kk = build_pattern(PatternKind::Clique(s + 2))?;
    let start = Instant::now();
    let free = is_free(&out, &kk);
    println!("{}-free: {} ({:.2?})", kk.name, free.pass, start.elapsed());
    let start = Instant::now();
    let sat = match mode {
        CheckMode::Exhaustive => is_saturated(&out, &kk),
        m => is_saturated_with(&out, &kk, m),
    };
    println!("{}-saturated ({:?}): {} ({:.2?})", kk.name, sat.mode, sat.pass, start.elapsed());
    Ok(())
}

fn main() -> regsat::Result<()> {
    run(4, 1, "C5", CheckMode::Exhaustive)?;
    if std::env::args().any(|a| a == "--large") {
        println!();
        run(16, 2, "(C5+E3)[E10]", CheckMode::Sampled { count: 10_000, seed: 7 })?;
    }
    Ok(())
}
