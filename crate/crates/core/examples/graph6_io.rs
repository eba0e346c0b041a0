//! Reading and writing graph6 and edge lists.
//!
//! cargo run --example graph6_io [-- <file>]

use regsat::io::{decode_graph6, encode_graph6_string, parse_edge_list, read_graph, write_edge_list};
use regsat::patterns;

fn main() -> regsat::Result<()> {
    if let Some(path) = std::env::args().nth(1) {
        let g = read_graph(std::path::Path::new(&path))?;
        println!("{path}: n = {}, m = {}, graph6 {}", g.order(), g.edge_count(), encode_graph6_string(&g));
        return Ok(());
    }
    let p = patterns::petersen();
    let s = encode_graph6_string(&p);
    println!("petersen as graph6: {s}");
    assert_eq!(decode_graph6(s.as_bytes())?, p);

    let text = write_edge_list(&p);
    print!("{}", text.lines().take(4).collect::<Vec<_>>().join("\n"));
    println!("\n...");
    let doc = parse_edge_list(&text)?;
    assert_eq!(doc.graph, p);
    Ok(())
}
