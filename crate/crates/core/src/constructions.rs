//! Closed-form constructions: circulants, blow-ups, joins, the regular
//! rrsat witness and the biregular matching-saturated graph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::patterns::{self, pattern_from_key};

/// A graph together with one human-readable label per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    pub fn indexed(graph: Graph) -> Self {
        let labels = (0..graph.order()).map(|i| format!("v{i}")).collect();
        LabeledGraph { graph, labels }
    }

    /// One `index label` line per vertex.
    pub fn label_map(&self) -> String {
        self.labels.iter().enumerate().map(|(i, l)| format!("{i} {l}\n")).collect()
    }
}

/// Order `n` and connection set `A ⊆ [1, ⌊n/2⌋]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirculantSpec {
    n: usize,
    residues: Vec<usize>,
}

impl CirculantSpec {
    /// Residues are sorted and deduplicated; each must lie in `[1, ⌊n/2⌋]`.
    pub fn new(n: usize, residues: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut residues: Vec<usize> = residues.into_iter().collect();
        residues.sort_unstable();
        residues.dedup();
        if let Some(&bad) = residues.iter().find(|&&a| a == 0 || a > n / 2) {
            return Err(Error::param(format!("residue {bad} outside [1, {}] for n = {n}", n / 2)));
        }
        Ok(CirculantSpec { n, residues })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    /// `2|A|`, minus one when `n/2 ∈ A`.
    pub fn degree(&self) -> usize {
        self.residues
            .iter()
            .map(|&a| if 2 * a == self.n { 1 } else { 2 })
            .sum()
    }
}

/// Vertex `i` adjacent to `i ± a (mod n)` for every `a` in the set.
pub fn circulant(spec: &CirculantSpec) -> Graph {
    let n = spec.n;
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        for &a in &spec.residues {
            b.add_edge(i, (i + a) % n);
        }
    }
    b.build()
}

/// Connection set for a triangle-saturated circulant on odd `n`. The set is
/// `{1, 3, ..., y}` plus a run of even residues starting at `2y + 2`, where
/// `y` and the run length depend on `n mod 10`:
///
/// | n mod 10 | y          | extra residues        |
/// |----------|------------|-----------------------|
/// | 1        | (n − 6)/5  | 2y+2                  |
/// | 3        | (n − 18)/5 | 2y+2, …, 2y+8         |
/// | 5        | (n − 10)/5 | 2y+2, 2y+4            |
/// | 7        | (n − 22)/5 | 2y+2, …, 2y+10        |
/// | 9        | (n − 14)/5 | 2y+2, 2y+4, 2y+6      |
///
/// Only structural feasibility is validated here. Small `n` can produce a
/// valid set whose circulant is not saturated; the checker decides that.
pub fn k3_connection_set(n: usize) -> Result<CirculantSpec> {
    if n.is_multiple_of(2) {
        return Err(Error::param(format!("n = {n} is even; use K_(n/2,n/2)")));
    }
    let (offset, extra, case) = match n % 10 {
        1 => (6, 1, "n ≡ 1 (mod 10)"),
        3 => (18, 4, "n ≡ 3 (mod 10)"),
        5 => (10, 2, "n ≡ 5 (mod 10)"),
        7 => (22, 5, "n ≡ 7 (mod 10)"),
        _ => (14, 3, "n ≡ 9 (mod 10)"),
    };
    let below = Error::BelowCaseThreshold { n, case };
    if n < offset + 5 {
        return Err(below);
    }
    let y = (n - offset) / 5;
    let mut set: Vec<usize> = (1..=y).step_by(2).collect();
    set.extend((1..=extra).map(|i| 2 * y + 2 * i));
    if set.iter().any(|&a| a > (n - 1) / 2) {
        return Err(below);
    }
    CirculantSpec::new(n, set)
}

/// `{1, 2, 5, 6, ..., 4k+1, 4k+2}` for `n = 8k + 6`, `k >= 1`.
pub fn k4_connection_set(n: usize) -> Result<CirculantSpec> {
    if n % 8 != 6 || n < 14 {
        return Err(Error::param(format!("n = {n} is not of the form 8k + 6 with k >= 1")));
    }
    let k = (n - 6) / 8;
    CirculantSpec::new(n, (0..=k).flat_map(|j| [4 * j + 1, 4 * j + 2]))
}

/// Lexicographic product `G[H]`; vertex `(u, i)` has index `u·|H| + i`.
pub fn blow_up(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let mut b = GraphBuilder::new(g.order() * m);
    for u in 0..g.order() {
        for (i, j) in h.edges() {
            b.add_edge(u * m + i, u * m + j);
        }
    }
    for (u, v) in g.edges() {
        for i in 0..m {
            for j in 0..m {
                b.add_edge(u * m + i, v * m + j);
            }
        }
    }
    b.build()
}

/// Disjoint union plus every edge between the two sides; `G` first.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let mut b = GraphBuilder::new(off + h.order());
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        b.add_edge(off + u, off + v);
    }
    for u in 0..off {
        for v in 0..h.order() {
            b.add_edge(u, off + v);
        }
    }
    b.build()
}

/// Degree balance of a join of two regular graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinReport {
    pub left_order: usize,
    pub left_degree: usize,
    pub right_order: usize,
    pub right_degree: usize,
    /// `d_H + |G| == d_G + |H|`.
    pub balanced: bool,
    /// Common degree of the join when balanced.
    pub degree: Option<usize>,
}

/// `None` unless both sides are regular.
pub fn join_report(g: &Graph, h: &Graph) -> Option<JoinReport> {
    let dg = g.regular_degree()?;
    let dh = h.regular_degree()?;
    let left = dg + h.order();
    let right = dh + g.order();
    Some(JoinReport {
        left_order: g.order(),
        left_degree: dg,
        right_order: h.order(),
        right_degree: dh,
        balanced: left == right,
        degree: (left == right).then_some(left),
    })
}

/// `K_{k-1} + E_{n-k+1}`: `k - 1` vertices of degree `n - 1`, the rest of
/// degree `k - 1`.
pub fn matching_saturated(k: usize, n: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k {
        return Err(Error::param(format!("need k >= 1 and n >= 2k, got k = {k}, n = {n}")));
    }
    Ok(join(&patterns::complete(k - 1), &patterns::empty(n - k + 1)))
}

/// Regular `K_{t+2}`-free graph with a special vertex at which every non-edge
/// completes a `K_{t+2}`.
#[derive(Clone, Debug)]
pub struct RegRegWitness {
    pub graph: LabeledGraph,
    pub special_vertex: usize,
    pub degree: usize,
    /// `1 + dt + d(dt - t) = 1 + d²t`, the order actually built.
    pub constructed_order: usize,
    /// `1 + (dt)²`, the order quoted alongside the construction.
    pub stated_order: usize,
}

/// Layout: the special vertex `v = 0`; cliques `A_1..A_d` of size `t` on
/// `N(v)`; sets `B_1..B_d` of size `dt - t`, each `A_i` completely joined to
/// `B_i`; and a bipartite circulant between `B_1 ∪ … ∪ B_{d/2}` and
/// `B_{d/2+1} ∪ … ∪ B_d` in which left vertex `x` meets right vertices
/// `x, x+1, …, x + dt - t - 1` (mod part size).
pub fn regreg_witness(t: usize, d: usize) -> Result<RegRegWitness> {
    if t == 0 {
        return Err(Error::param("t must be at least 1"));
    }
    if d < 2 || d % 2 == 1 {
        return Err(Error::param(format!("d must be even and at least 2, got {d}")));
    }
    let dt = d * t;
    let bsize = dt - t;
    let a_at = |i: usize, j: usize| 1 + i * t + j;
    let b_at = |i: usize, j: usize| 1 + dt + i * bsize + j;
    let n = 1 + dt + d * bsize;
    let mut g = GraphBuilder::new(n);
    let mut labels = vec!["v".to_string()];
    for i in 0..d {
        for j in 0..t {
            labels.push(format!("A{}.{j}", i + 1));
            g.add_edge(0, a_at(i, j));
            for j2 in j + 1..t {
                g.add_edge(a_at(i, j), a_at(i, j2));
            }
            for k in 0..bsize {
                g.add_edge(a_at(i, j), b_at(i, k));
            }
        }
    }
    for i in 0..d {
        for k in 0..bsize {
            labels.push(format!("B{}.{k}", i + 1));
        }
    }
    let half = d / 2 * bsize;
    let left = |x: usize| b_at(x / bsize, x % bsize);
    let right = |y: usize| b_at(d / 2 + y / bsize, y % bsize);
    for x in 0..half {
        for off in 0..bsize {
            g.add_edge(left(x), right((x + off) % half));
        }
    }
    Ok(RegRegWitness {
        graph: LabeledGraph {
            graph: g.build(),
            labels,
        },
        special_vertex: 0,
        degree: dt,
        constructed_order: n,
        stated_order: 1 + dt * dt,
    })
}

/// Parses a small graph expression: registry keys (`C5`, `E3`, `K4`,
/// `K3,3`, `petersen`, …), blow-ups `X[Y]`, joins `X+Y` and parentheses.
/// `C5[E2]+E6` is the join of `C5[E_2]` with `E_6`.
pub fn graph_from_expr(expr: &str) -> Result<Graph> {
    let mut p = ExprParser {
        src: expr.as_bytes(),
        pos: 0,
        text: expr,
    };
    let g = p.join_expr()?;
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(g)
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl ExprParser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::param(format!("graph expression `{}`: {what} at offset {}", self.text, self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn join_expr(&mut self) -> Result<Graph> {
        let mut g = self.term()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            let h = self.term()?;
            g = join(&g, &h);
        }
        Ok(g)
    }

    fn term(&mut self) -> Result<Graph> {
        let mut g = self.atom()?;
        while self.peek() == Some(b'[') {
            self.pos += 1;
            let h = self.join_expr()?;
            if self.peek() != Some(b']') {
                return Err(self.error("expected `]`"));
            }
            self.pos += 1;
            g = blow_up(&g, &h);
        }
        Ok(g)
    }

    fn atom(&mut self) -> Result<Graph> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let g = self.join_expr()?;
            if self.peek() != Some(b')') {
                return Err(self.error("expected `)`"));
            }
            self.pos += 1;
            return Ok(g);
        }
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b',' || c == b':' || c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected a graph name"));
        }
        let key = &self.text[start..self.pos];
        Ok(pattern_from_key(&key.replace('_', ""))?.graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{complete, cycle, empty, petersen};

    #[test]
    fn circulant_c5() {
        let g = circulant(&CirculantSpec::new(5, [1]).unwrap());
        assert_eq!(g, cycle(5));
    }

    #[test]
    fn circulant_degrees() {
        let spec = CirculantSpec::new(11, [1, 4]).unwrap();
        assert_eq!(circulant(&spec).regular_degree(), Some(4));
        let spec = CirculantSpec::new(8, [1, 4]).unwrap();
        assert_eq!(spec.degree(), 3);
        assert_eq!(circulant(&spec).regular_degree(), Some(3));
    }

    #[test]
    fn circulant_rejects_out_of_range() {
        assert!(CirculantSpec::new(10, [6]).is_err());
        assert!(CirculantSpec::new(10, [0]).is_err());
    }

    #[test]
    fn k3_sets() {
        assert_eq!(k3_connection_set(21).unwrap().residues(), &[1, 3, 8]);
        assert_eq!(k3_connection_set(35).unwrap().residues(), &[1, 3, 5, 12, 14]);
        assert_eq!(k3_connection_set(11).unwrap().residues(), &[1, 4]);
        match k3_connection_set(13) {
            Err(Error::BelowCaseThreshold { n: 13, case }) => assert!(case.contains("3 (mod 10)")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(k3_connection_set(12), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn k3_sets_have_full_degree() {
        for n in (11..200).step_by(2) {
            if let Ok(spec) = k3_connection_set(n) {
                assert_eq!(circulant(&spec).regular_degree(), Some(2 * spec.residues().len()), "n = {n}");
            }
        }
    }

    #[test]
    fn k4_sets() {
        assert_eq!(k4_connection_set(14).unwrap().residues(), &[1, 2, 5, 6]);
        assert_eq!(k4_connection_set(22).unwrap().residues(), &[1, 2, 5, 6, 9, 10]);
        assert_eq!(k4_connection_set(30).unwrap().residues(), &[1, 2, 5, 6, 9, 10, 13, 14]);
        assert!(k4_connection_set(16).is_err());
        assert!(k4_connection_set(6).is_err());
    }

    #[test]
    fn blow_up_degrees() {
        let g = blow_up(&cycle(5), &complete(2));
        assert_eq!((g.order(), g.regular_degree()), (10, Some(5)));
        let g = blow_up(&cycle(5), &empty(3));
        assert_eq!((g.order(), g.regular_degree()), (15, Some(6)));
        let g = blow_up(&petersen(), &empty(2));
        assert_eq!((g.order(), g.regular_degree()), (20, Some(6)));
    }

    #[test]
    fn join_degrees() {
        let g = join(&cycle(5), &empty(3));
        assert_eq!((g.order(), g.regular_degree()), (8, Some(5)));
        let r = join_report(&cycle(5), &empty(3)).unwrap();
        assert!(r.balanced);
        assert_eq!(r.degree, Some(5));
        let g = join(&petersen(), &empty(7));
        assert_eq!((g.order(), g.regular_degree()), (17, Some(10)));
        assert!(!join_report(&cycle(5), &empty(4)).unwrap().balanced);
        assert!(join_report(&patterns::star(3), &empty(1)).is_none());
    }

    #[test]
    fn matching_profile() {
        let g = matching_saturated(3, 10).unwrap();
        assert_eq!(g.degree_summary().profile(), vec![(2, 8), (9, 2)]);
        assert!(matching_saturated(3, 5).is_err());
    }

    #[test]
    fn regreg_small() {
        let w = regreg_witness(1, 2).unwrap();
        assert_eq!(w.graph.graph.order(), 5);
        assert_eq!(w.graph.graph.regular_degree(), Some(2));
        assert_eq!(w.graph.graph.diameter(), Some(2));
        assert_eq!((w.constructed_order, w.stated_order), (5, 5));
        let w = regreg_witness(2, 4).unwrap();
        assert_eq!(w.graph.graph.order(), 33);
        assert_eq!(w.graph.graph.regular_degree(), Some(8));
        assert_eq!(w.stated_order, 65);
        let w = regreg_witness(1, 4).unwrap();
        assert_eq!((w.graph.graph.order(), w.graph.graph.regular_degree()), (17, Some(4)));
        assert!(regreg_witness(1, 3).is_err());
        assert!(regreg_witness(0, 2).is_err());
    }

    #[test]
    fn expressions() {
        let g = graph_from_expr("C5[E2]+E6").unwrap();
        assert_eq!((g.order(), g.regular_degree()), (16, Some(10)));
        assert_eq!(graph_from_expr("(C5+E3)[E10]").unwrap().order(), 80);
        assert_eq!(graph_from_expr("K4,4").unwrap().regular_degree(), Some(4));
        assert!(graph_from_expr("C5[").is_err());
        assert!(graph_from_expr("C5)").is_err());
    }
}
