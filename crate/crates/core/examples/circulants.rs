//! Triangle-saturated circulants on odd n and K4-saturated circulants on
//! n = 6 (mod 8), with the smallest working order per residue class.
//!
//! cargo run --release --example circulants

use regsat::checkers::is_saturated;
use regsat::constructions::{circulant, k3_connection_set, k4_connection_set};
use regsat::patterns::{build_pattern, PatternKind};
use regsat::Error;

fn main() -> regsat::Result<()> {
    let k3 = build_pattern(PatternKind::Clique(3))?;
    println!("odd n, triangle circulants (n up to 151):");
    for r in [1, 3, 5, 7, 9] {
        let mut failures = Vec::new();
        let mut below = Vec::new();
        let mut last_failure = None;
        for n in (1..=151).filter(|n| n % 10 == r && n % 2 == 1) {
            match k3_connection_set(n) {
                Err(Error::BelowCaseThreshold { .. }) => below.push(n),
                Err(e) => return Err(e),
                Ok(spec) => {
                    let report = is_saturated(&circulant(&spec), &k3);
                    if !report.pass {
                        let why = if report.param_bool("free") == Some(false) { "has a triangle" } else { "unsaturated" };
                        failures.push(format!("{n} ({why})"));
                        last_failure = Some(n);
                    }
                }
            }
        }
        let first_good = (1..=151).find(|n| n % 10 == r && *n > last_failure.unwrap_or(0) && !below.contains(n));
        println!(
            "  n = {r} (mod 10): passes for every n >= {}; failures: [{}]; no connection set: {:?}",
            first_good.map_or("-".to_string(), |n| n.to_string()),
            failures.join(", "),
            below
        );
    }

    let k4 = build_pattern(PatternKind::Clique(4))?;
    println!("n = 6 (mod 8), K4 circulants:");
    for n in (14..=62).step_by(8) {
        let spec = k4_connection_set(n)?;
        let g = circulant(&spec);
        println!(
            "  n = {n:>2}  A = {:?}  d = {:?}  K4-saturated: {}",
            spec.residues(),
            g.regular_degree(),
            is_saturated(&g, &k4).pass
        );
    }
    Ok(())
}
