//! Small pattern graphs: cliques, cycles, paths, stars, matchings, complete
//! multipartite graphs, the Petersen graph, the 3-sun and the derived
//! patterns `F'_t`.

use std::fmt;
use std::ops::Deref;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constructions::blow_up;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, GraphBuilder};
use crate::io;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    Clique(usize),
    Multipartite(Vec<usize>),
    Cycle(usize),
    /// Path on the given number of vertices.
    Path(usize),
    Matching(usize),
    /// Star with the given number of leaves.
    Star(usize),
    Empty(usize),
    ThreeSun,
    Petersen,
    DerivedFPrime { base: String, t: usize },
    Custom,
}

/// A named pattern graph `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    pub graph: Graph,
    pub name: String,
    pub kind: PatternKind,
}

impl Deref for PatternGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

impl Adjacency for PatternGraph {
    fn order(&self) -> usize {
        self.graph.order()
    }

    fn row(&self, v: usize) -> &[u64] {
        self.graph.row(v)
    }
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl PatternGraph {
    pub fn custom(name: impl Into<String>, graph: Graph) -> Self {
        PatternGraph {
            graph,
            name: name.into(),
            kind: PatternKind::Custom,
        }
    }

    /// Clique order if this pattern is tagged as a clique.
    pub fn clique_size(&self) -> Option<usize> {
        match self.kind {
            PatternKind::Clique(s) => Some(s),
            _ => None,
        }
    }
}

pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        for j in i + 1..n {
            b.add_edge(i, j);
        }
    }
    b.build()
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn cycle(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        b.add_edge(i, (i + 1) % n);
    }
    b.build()
}

pub fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for i in 1..n {
        b.add_edge(i - 1, i);
    }
    b.build()
}

/// `K_{1,r}` with the centre at 0.
pub fn star(r: usize) -> Graph {
    let mut b = GraphBuilder::new(r + 1);
    for i in 1..=r {
        b.add_edge(0, i);
    }
    b.build()
}

/// `k` disjoint edges `(2i, 2i+1)`.
pub fn matching(k: usize) -> Graph {
    let mut b = GraphBuilder::new(2 * k);
    for i in 0..k {
        b.add_edge(2 * i, 2 * i + 1);
    }
    b.build()
}

/// Complete multipartite graph; parts occupy consecutive index ranges.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if part_of[i] != part_of[j] {
                b.add_edge(i, j);
            }
        }
    }
    b.build()
}

/// Kneser graph `K(5,2)`: 2-subsets of `{0..4}` in lexicographic order,
/// adjacent iff disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut g = GraphBuilder::new(pairs.len());
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j);
            }
        }
    }
    g.build()
}

/// 3-sun on `a..f = 0..5`: edges ab, ac, bc, ad, bd, be, ce, af, cf.
pub fn three_sun() -> Graph {
    Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)]).expect("valid")
}

fn positive(what: &str, v: usize, min: usize) -> Result<()> {
    if v < min {
        Err(Error::param(format!("{what} must be at least {min}, got {v}")))
    } else {
        Ok(())
    }
}

pub fn build_pattern(kind: PatternKind) -> Result<PatternGraph> {
    let (graph, name) = match &kind {
        PatternKind::Clique(s) => {
            positive("clique order", *s, 1)?;
            (complete(*s), format!("K{s}"))
        }
        PatternKind::Multipartite(parts) => {
            if parts.len() < 2 || parts.contains(&0) {
                return Err(Error::param("multipartite pattern needs at least two non-empty parts"));
            }
            let label = parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
            (complete_multipartite(parts), format!("K{label}"))
        }
        PatternKind::Cycle(n) => {
            positive("cycle length", *n, 3)?;
            (cycle(*n), format!("C{n}"))
        }
        PatternKind::Path(n) => {
            positive("path order", *n, 1)?;
            (path(*n), format!("P{n}"))
        }
        PatternKind::Matching(k) => {
            positive("matching size", *k, 1)?;
            (matching(*k), format!("M{k}"))
        }
        PatternKind::Star(r) => {
            positive("star leaves", *r, 1)?;
            (star(*r), format!("S{r}"))
        }
        PatternKind::Empty(n) => (empty(*n), format!("E{n}")),
        PatternKind::ThreeSun => (three_sun(), "F6".to_string()),
        PatternKind::Petersen => (petersen(), "petersen".to_string()),
        PatternKind::DerivedFPrime { .. } | PatternKind::Custom => {
            return Err(Error::param("derived and custom patterns have dedicated constructors"))
        }
    };
    Ok(PatternGraph { graph, name, kind })
}

/// `F'_t`: delete `removed_edge` (default: the lexicographically first edge)
/// from `base`, blow the result up by `K_t`, then restore one edge between
/// the first copies of the deleted edge's endpoints.
///
/// `base` should be edge-transitive; that is the caller's responsibility.
/// For other bases the result depends on which edge is removed.
pub fn f_prime_t(base: &PatternGraph, t: usize, removed_edge: Option<(usize, usize)>) -> Result<PatternGraph> {
    positive("blow-up factor", t, 1)?;
    let (x, y) = match removed_edge {
        Some((x, y)) if base.has_edge(x, y) => (x.min(y), x.max(y)),
        Some((x, y)) => return Err(Error::param(format!("({x}, {y}) is not an edge of {}", base.name))),
        None => base
            .edges()
            .next()
            .ok_or_else(|| Error::param(format!("{} has no edges", base.name)))?,
    };
    let reduced = base.without_edge(x, y);
    let blown = blow_up(&reduced, &complete(t));
    let mut b = GraphBuilder::from_graph(&blown);
    b.add_edge(x * t, y * t);
    Ok(PatternGraph {
        graph: b.build(),
        name: format!("({})'_{t}[-{x}{y},+{x}.0-{y}.0]", base.name),
        kind: PatternKind::DerivedFPrime {
            base: base.name.clone(),
            t,
        },
    })
}

fn parse_num(key: &str, digits: &str) -> Result<usize> {
    digits.parse().map_err(|_| Error::UnknownKey {
        kind: "pattern",
        key: key.to_string(),
        known: PATTERN_KEYS.to_string(),
    })
}

pub const PATTERN_KEYS: &str =
    "K<s>, K<a>,<b>[,...], C<n>, P<n>, S<r>, M<k>, E<n>, F6, petersen, Kprime:<s>:<t>, file:<path>";

/// Resolves a registry key such as `K4`, `F6`, `M3`, `C5`, `petersen`,
/// `Kprime:3:2`, `K3,3` or `file:pattern.txt`.
pub fn pattern_from_key(key: &str) -> Result<PatternGraph> {
    let unknown = || Error::UnknownKey {
        kind: "pattern",
        key: key.to_string(),
        known: PATTERN_KEYS.to_string(),
    };
    if let Some(path) = key.strip_prefix("file:") {
        return load_pattern(Path::new(path));
    }
    if let Some(rest) = key.strip_prefix("Kprime:") {
        let mut it = rest.split(':');
        let s = parse_num(key, it.next().ok_or_else(unknown)?)?;
        let t = parse_num(key, it.next().ok_or_else(unknown)?)?;
        if it.next().is_some() {
            return Err(unknown());
        }
        let base = build_pattern(PatternKind::Clique(s))?;
        return f_prime_t(&base, t, None);
    }
    match key {
        "F6" | "3-sun" | "sun" => return build_pattern(PatternKind::ThreeSun),
        "petersen" | "Petersen" => return build_pattern(PatternKind::Petersen),
        _ => {}
    }
    let mut chars = key.chars();
    let head = chars.next().ok_or_else(unknown)?;
    let rest = chars.as_str();
    if rest.is_empty() {
        return Err(unknown());
    }
    let kind = match head {
        'K' if rest.contains(',') => {
            let parts = rest.split(',').map(|p| parse_num(key, p)).collect::<Result<Vec<_>>>()?;
            PatternKind::Multipartite(parts)
        }
        'K' => PatternKind::Clique(parse_num(key, rest)?),
        'C' => PatternKind::Cycle(parse_num(key, rest)?),
        'P' => PatternKind::Path(parse_num(key, rest)?),
        'S' => PatternKind::Star(parse_num(key, rest)?),
        'M' => PatternKind::Matching(parse_num(key, rest)?),
        'E' => PatternKind::Empty(parse_num(key, rest)?),
        _ => return Err(unknown()),
    };
    build_pattern(kind)
}

/// Loads an edge-list file; its `name` line (or the file stem) names it.
pub fn load_pattern(path: &Path) -> Result<PatternGraph> {
    let text = std::fs::read_to_string(path)?;
    let doc = io::parse_edge_list(&text)?;
    let name = doc
        .name
        .or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()))
        .unwrap_or_else(|| "custom".into());
    Ok(PatternGraph::custom(name, doc.graph))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_four() {
        let k4 = build_pattern(PatternKind::Clique(4)).unwrap();
        assert_eq!((k4.order(), k4.edge_count()), (4, 6));
        assert_eq!(k4.name, "K4");
    }

    #[test]
    fn three_sun_degrees() {
        let f6 = build_pattern(PatternKind::ThreeSun).unwrap();
        assert_eq!(f6.order(), 6);
        assert_eq!(f6.edge_count(), 9);
        let mut degs = f6.degree_summary().degrees;
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![4, 4, 4, 2, 2, 2]);
    }

    #[test]
    fn matching_two() {
        let m2 = build_pattern(PatternKind::Matching(2)).unwrap();
        assert_eq!(m2.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn kind_counts() {
        for s in 1..7 {
            assert_eq!(build_pattern(PatternKind::Clique(s)).unwrap().edge_count(), s * (s - 1) / 2);
        }
        for n in 3..9 {
            assert_eq!(build_pattern(PatternKind::Cycle(n)).unwrap().edge_count(), n);
        }
        for k in 1..5 {
            let m = build_pattern(PatternKind::Matching(k)).unwrap();
            assert_eq!((m.order(), m.edge_count()), (2 * k, k));
        }
        assert_eq!(build_pattern(PatternKind::Star(3)).unwrap().edge_count(), 3);
    }

    #[test]
    fn invalid_parameters() {
        assert!(build_pattern(PatternKind::Clique(0)).is_err());
        assert!(build_pattern(PatternKind::Cycle(2)).is_err());
        assert!(build_pattern(PatternKind::Matching(0)).is_err());
        assert!(build_pattern(PatternKind::Multipartite(vec![3])).is_err());
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.order(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.regular_degree(), Some(3));
        assert_eq!(p.diameter(), Some(2));
    }

    #[test]
    fn f_prime_edge_counts() {
        for s in [3usize, 4] {
            for t in [2usize, 3] {
                let base = build_pattern(PatternKind::Clique(s)).unwrap();
                let f = f_prime_t(&base, t, None).unwrap();
                let expected = s * (s - 1) / 2 * t * t - t * t + s * t * (t - 1) / 2 + 1;
                assert_eq!(f.order(), s * t);
                assert_eq!(f.edge_count(), expected, "s={s} t={t}");
            }
        }
        let k3 = build_pattern(PatternKind::Clique(3)).unwrap();
        assert_eq!(f_prime_t(&k3, 2, None).unwrap().edge_count(), 12);
    }

    #[test]
    fn f_prime_t1_is_identity() {
        let k4 = build_pattern(PatternKind::Clique(4)).unwrap();
        assert_eq!(f_prime_t(&k4, 1, None).unwrap().graph, k4.graph);
    }

    #[test]
    fn f_prime_rejects_non_edge() {
        let c5 = build_pattern(PatternKind::Cycle(5)).unwrap();
        assert!(f_prime_t(&c5, 2, Some((0, 2))).is_err());
        let e3 = build_pattern(PatternKind::Empty(3)).unwrap();
        assert!(f_prime_t(&e3, 2, None).is_err());
    }

    #[test]
    fn registry_keys() {
        assert_eq!(pattern_from_key("K4").unwrap().edge_count(), 6);
        assert_eq!(pattern_from_key("F6").unwrap().edge_count(), 9);
        assert_eq!(pattern_from_key("M3").unwrap().edge_count(), 3);
        assert_eq!(pattern_from_key("C5").unwrap().edge_count(), 5);
        assert_eq!(pattern_from_key("petersen").unwrap().order(), 10);
        assert_eq!(pattern_from_key("Kprime:3:2").unwrap().edge_count(), 12);
        assert_eq!(pattern_from_key("K3,3").unwrap().edge_count(), 9);
        assert!(matches!(pattern_from_key("Q7"), Err(Error::UnknownKey { .. })));
        assert!(pattern_from_key("Kx").is_err());
        assert!(pattern_from_key("").is_err());
    }
}
