//! Exhaustive search for regular saturated graphs of small order, cached in a
//! JSONL store so a second run is free.
//!
//! cargo run --release --example search_table [-- K3 4 10]

use regsat::search::{render_table, rsat_table};

fn main() -> regsat::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let key = args.first().map(String::as_str).unwrap_or("K3");
    let lo = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let hi = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(9);
    let dir = std::env::temp_dir().join("regsat-search-example");
    std::fs::create_dir_all(&dir)?;
    let store = dir.join("rsat.jsonl");

    let t = std::time::Instant::now();
    let results = rsat_table(&store, lo..=hi, key)?;
    println!("first pass {:?}", t.elapsed());
    print!("{}", render_table(&results));

    let t = std::time::Instant::now();
    rsat_table(&store, lo..=hi, key)?;
    println!("cached pass {:?} (store: {})", t.elapsed(), store.display());
    Ok(())
}
