//! graph6 and plain edge-list formats.
//!
//! graph6: header byte `n + 63` for `n <= 62`, else `126` followed by three
//! 6-bit big-endian groups (each `+ 63`); larger orders use `126 126` and six
//! groups. The body packs the upper triangle column by column,
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte, high bit first,
//! zero padded.
//!
//! Edge list: a header line `n <count>`, then one `u v` pair per line. An
//! optional `name <label>` line may precede the header; `#` starts a comment.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= SMALL_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            acc = (acc << 1) | crate::bits::test(row, i) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Same bytes as [`encode_graph6`], as a `String` (graph6 is printable ASCII).
pub fn encode_graph6_string(g: &Graph) -> String {
    String::from_utf8(encode_graph6(g)).expect("graph6 is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Error::Graph6 {
            offset,
            reason: format!("byte {b} outside 63..=126"),
        }),
        None => Err(Error::Graph6 {
            offset,
            reason: "unexpected end of input".into(),
        }),
    }
}

/// Parses one graph6 record. A leading `>>graph6<<` marker and surrounding
/// ASCII whitespace are ignored.
pub fn decode_graph6(input: &[u8]) -> Result<Graph> {
    let bytes = input.strip_prefix(b">>graph6<<").unwrap_or(input);
    let start = bytes.iter().position(|b| !b.is_ascii_whitespace()).unwrap_or(bytes.len());
    let end = bytes.iter().rposition(|b| !b.is_ascii_whitespace()).map_or(start, |p| p + 1);
    let base = input.len() - bytes.len() + start;
    let bytes = &bytes[start..end];
    let at = |i: usize| sextet(bytes, i).map_err(|e| shift_offset(e, base));

    let (n, mut pos) = match bytes.first() {
        None => {
            return Err(Error::Graph6 {
                offset: base,
                reason: "empty input".into(),
            })
        }
        Some(126) if bytes.get(1) == Some(&126) => {
            let mut n = 0usize;
            for i in 2..8 {
                n = (n << 6) | at(i)? as usize;
            }
            (n, 8)
        }
        Some(126) => {
            let mut n = 0usize;
            for i in 1..4 {
                n = (n << 6) | at(i)? as usize;
            }
            (n, 4)
        }
        Some(_) => (at(0)? as usize, 1),
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let body_len = pairs.div_ceil(6);
    if bytes.len() != pos + body_len {
        return Err(Error::Graph6 {
            offset: base + bytes.len().min(pos + body_len),
            reason: format!("n = {n} needs {body_len} body bytes, found {}", bytes.len().saturating_sub(pos)),
        });
    }

    let mut b = GraphBuilder::new(n);
    let mut k = 0usize;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                cur = at(pos)?;
                pos += 1;
            }
            if cur >> (5 - k % 6) & 1 == 1 {
                b.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}

fn shift_offset(e: Error, base: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

/// A parsed edge-list document.
#[derive(Clone, Debug)]
pub struct EdgeListDoc {
    pub name: Option<String>,
    pub graph: Graph,
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListDoc> {
    let mut name = None;
    let mut builder: Option<GraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let bad = |reason: String| Error::EdgeList { line, reason };
        let mut fields = content.split_whitespace();
        let first = fields.next().unwrap_or_default();
        match (&mut builder, first) {
            (None, "name") => {
                let rest = content["name".len()..].trim();
                name = Some(rest.to_string());
            }
            (None, "n") => {
                let n: usize = fields
                    .next()
                    .ok_or_else(|| bad("missing vertex count".into()))?
                    .parse()
                    .map_err(|e| bad(format!("vertex count: {e}")))?;
                builder = Some(GraphBuilder::new(n));
            }
            (None, other) => return Err(bad(format!("expected `n <count>` header, found `{other}`"))),
            (Some(b), _) => {
                let second = fields.next().ok_or_else(|| bad("expected two endpoints".into()))?;
                if fields.next().is_some() {
                    return Err(bad("more than two fields".into()));
                }
                let u: usize = first.parse().map_err(|e| bad(format!("endpoint: {e}")))?;
                let v: usize = second.parse().map_err(|e| bad(format!("endpoint: {e}")))?;
                b.try_add_edge(u, v).map_err(|e| bad(e.to_string()))?;
            }
        }
    }
    let graph = builder
        .ok_or_else(|| Error::EdgeList {
            line: 0,
            reason: "no `n <count>` header".into(),
        })?
        .build();
    Ok(EdgeListDoc { name, graph })
}

/// On-disk graph formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl GraphFormat {
    /// Format implied by a recognised file extension.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()? {
            "g6" | "graph6" => Some(GraphFormat::Graph6),
            "txt" | "edges" | "el" | "edgelist" => Some(GraphFormat::EdgeList),
            _ => None,
        }
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let data = fs::read(path)?;
    let format = GraphFormat::from_path(path).unwrap_or_else(|| {
        let text = String::from_utf8_lossy(&data);
        if text.trim_start().starts_with("n ") || text.trim_start().starts_with("name ") {
            GraphFormat::EdgeList
        } else {
            GraphFormat::Graph6
        }
    });
    match format {
        GraphFormat::Graph6 => decode_graph6(&data),
        GraphFormat::EdgeList => {
            let text = String::from_utf8(data).map_err(|e| Error::EdgeList {
                line: 0,
                reason: e.to_string(),
            })?;
            Ok(parse_edge_list(&text)?.graph)
        }
    }
}

/// Writes via a sibling temp file and rename so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let file_name = path.file_name().and_then(|s| s.to_str()).unwrap_or("out");
    let tmp = dir.join(format!(".{file_name}.tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn write_graph(path: &Path, g: &Graph, format: GraphFormat) -> Result<()> {
    let body = match format {
        GraphFormat::Graph6 => {
            let mut b = encode_graph6(g);
            b.push(b'\n');
            b
        }
        GraphFormat::EdgeList => write_edge_list(g).into_bytes(),
    };
    write_atomic(path, &body)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn k3_encodes_to_bw() {
        assert_eq!(encode_graph6(&k3()), b"Bw");
    }

    #[test]
    fn b_question_is_e3() {
        let g = decode_graph6(b"B?").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn c5_round_trip() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(decode_graph6(&encode_graph6(&c5)).unwrap(), c5);
    }

    #[test]
    fn extended_header() {
        let g = Graph::from_edges(100, [(0, 99), (5, 6)]).unwrap();
        let bytes = encode_graph6(&g);
        assert_eq!(&bytes[..4], &[126, 63, 63 + 1, 63 + 36]);
        assert_eq!(decode_graph6(&bytes).unwrap(), g);
    }

    #[test]
    fn empty_and_singleton() {
        assert_eq!(encode_graph6(&Graph::empty(0)), b"?");
        assert_eq!(encode_graph6(&Graph::empty(1)), b"@");
        assert_eq!(decode_graph6(b"@").unwrap().order(), 1);
    }

    #[test]
    fn decode_errors_carry_offsets() {
        match decode_graph6(b"B\x7f") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match decode_graph6(b"Bww") {
            Err(Error::Graph6 { .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(decode_graph6(b"").is_err());
        assert!(decode_graph6(b"D").is_err());
    }

    #[test]
    fn tolerates_marker_and_newline() {
        assert_eq!(decode_graph6(b">>graph6<<Bw\n").unwrap(), k3());
    }

    #[test]
    fn edge_list_round_trip() {
        let text = write_edge_list(&k3());
        assert_eq!(text, "n 3\n0 1\n0 2\n1 2\n");
        let doc = parse_edge_list(&format!("name triangle\n# comment\n{text}")).unwrap();
        assert_eq!(doc.name.as_deref(), Some("triangle"));
        assert_eq!(doc.graph, k3());
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("0 1\n"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("n 2\n0 2\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("n 2\n1 1\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(parse_edge_list("").is_err());
    }
}
