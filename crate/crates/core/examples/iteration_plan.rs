//! Iterated amalgamation: a chain of K_{s+2}-saturated regular graphs whose
//! edge density keeps dropping. Prints the plan and verifies every step.
//!
//! cargo run --release --example iteration_plan [-- <s> <q> <seed> <m>]

use regsat::amalgam::{iteration_plan, verify_plan};
use regsat::checkers::CheckMode;
use regsat::constructions::graph_from_expr;

fn main() -> regsat::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let s = args.first().and_then(|a| a.parse().ok()).unwrap_or(1);
    let q = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let seed = graph_from_expr(args.get(2).map(String::as_str).unwrap_or("C5"))?;
    let m = args.get(3).and_then(|a| a.parse().ok()).unwrap_or(1);

    let mut plan = iteration_plan(s, q, &seed, m)?;
    verify_plan(&mut plan, CheckMode::Exhaustive)?;
    for step in &plan.steps {
        println!(
            "step {}: n = {:>5}, d = {:>4}, t = {:>3}, d/n = {}/{}, verified {:?}",
            step.i,
            step.n,
            step.d,
            step.t.map_or("-".into(), |t| t.to_string()),
            step.ratio_num,
            step.ratio_den,
            step.verified
        );
    }
    Ok(())
}
