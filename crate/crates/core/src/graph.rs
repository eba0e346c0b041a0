//! Dense simple graphs stored as adjacency bit rows.
//!
//! Vertices are `0..n`. Row `i` holds bit `j` iff `{i, j}` is an edge, so
//! neighbourhood intersections are word-wise ANDs. Every construction in the
//! crate produces a [`Graph`] and every checker consumes one.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};

/// Read access to a symmetric adjacency matrix stored as bit rows.
///
/// Implemented by [`Graph`] and by the mutable partial graphs used during
/// exhaustive search, so the subgraph engine runs on both.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn row(&self, v: usize) -> &[u64];

    #[inline]
    fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    #[inline]
    fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }
}

/// An undirected simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Adjacency for Graph {
    #[inline]
    fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Degree sequence with derived regularity and edge count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub degrees: Vec<usize>,
    pub regular_degree: Option<usize>,
    pub edge_count: usize,
}

impl DegreeSummary {
    pub fn min(&self) -> Option<usize> {
        self.degrees.iter().copied().min()
    }

    pub fn max(&self) -> Option<usize> {
        self.degrees.iter().copied().max()
    }

    /// Distinct degrees with multiplicities, ascending by degree.
    pub fn profile(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for &d in &self.degrees {
            *counts.entry(d).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }
}

/// Sentinel for unreachable pairs in a [`DistanceMatrix`].
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    /// `None` when `v` is unreachable from `u`.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Largest finite distance, `None` if some pair is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for &d in &self.dist {
            if d == UNREACHABLE {
                return None;
            }
            best = best.max(d);
        }
        Some(best)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    /// Builds a graph from a list of vertex pairs. Duplicate pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn row(&self, v: usize) -> &[u64] {
        Adjacency::row(self, v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::test(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> bits::Ones<'_> {
        bits::ones(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        bits::count(&self.bits) / 2
    }

    /// Edges `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.neighbors(i).filter(move |&j| j > i).map(move |j| (i, j)))
    }

    /// Non-adjacent pairs `(i, j)` with `i < j`, lexicographic.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            ((i + 1)..self.n).filter(move |&j| !bits::test(self.row(i), j)).map(move |j| (i, j))
        })
    }

    pub fn non_edge_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2 - self.edge_count()
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let sum: usize = degrees.iter().sum();
        let regular_degree = match (degrees.iter().min(), degrees.iter().max()) {
            (Some(lo), Some(hi)) if lo == hi => Some(*lo),
            (None, None) => Some(0),
            _ => None,
        };
        DegreeSummary {
            degrees,
            regular_degree,
            edge_count: sum / 2,
        }
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Breadth-first distances from `source`; `UNREACHABLE` where disconnected.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances(&self) -> DistanceMatrix {
        let mut dist = Vec::with_capacity(self.n * self.n);
        for s in 0..self.n {
            dist.extend(self.bfs(s));
        }
        DistanceMatrix { n: self.n, dist }
    }

    /// Eccentricity of `source` via bitset frontier expansion, `None` if
    /// some vertex is unreachable.
    pub fn eccentricity(&self, source: usize) -> Option<u32> {
        let mut seen = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        let mut next = vec![0u64; self.words];
        bits::set(&mut seen, source);
        bits::set(&mut frontier, source);
        let mut reached = 1;
        let mut depth = 0;
        while reached < self.n {
            next.iter_mut().for_each(|w| *w = 0);
            for u in bits::ones(&frontier) {
                bits::or_assign(&mut next, self.row(u));
            }
            bits::andnot_assign(&mut next, &seen);
            let grown = bits::count(&next);
            if grown == 0 {
                return None;
            }
            reached += grown;
            depth += 1;
            bits::or_assign(&mut seen, &next);
            std::mem::swap(&mut frontier, &mut next);
        }
        Some(depth)
    }

    /// Maximum eccentricity; `None` if disconnected. Memory stays `O(n)`.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for s in 0..self.n {
            best = best.max(self.eccentricity(s)?);
        }
        Some(best)
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (c, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(a, c);
                }
            }
        }
        b.build()
    }

    /// Copy with `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut b = GraphBuilder::from_graph(self);
        b.try_add_edge(u, v)?;
        Ok(b.build())
    }

    /// Copy with `{u, v}` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut b = GraphBuilder::from_graph(self);
        b.remove_edge(u, v);
        b.build()
    }

    /// Image of the graph under `perm` (vertex `v` goes to `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v]);
        }
        b.build()
    }

    pub(crate) fn check_invariants(&self) -> bool {
        (0..self.n).all(|i| {
            !bits::test(self.row(i), i) && self.neighbors(i).all(|j| j < self.n && bits::test(self.row(j), i))
        })
    }
}

/// Mutable adjacency rows that freeze into a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let words = bits::words_for(n).max(1);
        GraphBuilder {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            n: g.n,
            words: g.words,
            bits: g.bits.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on loops or out-of-range endpoints.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v}) for n = {}", self.n);
        let w = self.words;
        bits::set(&mut self.bits[u * w..(u + 1) * w], v);
        bits::set(&mut self.bits[v * w..(v + 1) * w], u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::clear(&mut self.bits[u * w..(u + 1) * w], v);
        bits::clear(&mut self.bits[v * w..(v + 1) * w], u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(&self.bits[u * self.words..(u + 1) * self.words], v)
    }

    pub fn build(self) -> Graph {
        let g = Graph {
            n: self.n,
            words: self.words,
            bits: self.bits,
        };
        debug_assert!(g.check_invariants());
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn build_triangle() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.regular_degree(), Some(2));
    }

    #[test]
    fn build_empty_four() {
        let g = Graph::from_edges(4, []).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.non_edges().count(), 6);
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_out_of_range_and_loops() {
        match Graph::from_edges(3, [(0, 3)]) {
            Err(Error::VertexOutOfRange { u: 0, v: 3, n: 3 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(Error::Loop(1))));
    }

    #[test]
    fn c5_summary() {
        let s = cycle(5).degree_summary();
        assert_eq!(s.degrees, vec![2; 5]);
        assert_eq!(s.regular_degree, Some(2));
        assert_eq!(s.edge_count, 5);
    }

    #[test]
    fn star_is_not_regular() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = g.degree_summary();
        assert_eq!(s.degrees, vec![3, 1, 1, 1]);
        assert_eq!(s.regular_degree, None);
        assert_eq!(s.profile(), vec![(1, 3), (3, 1)]);
    }

    #[test]
    fn k33_summary() {
        let g = Graph::from_edges(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
        let s = g.degree_summary();
        assert_eq!(s.regular_degree, Some(3));
        assert_eq!(s.edge_count, 9);
    }

    #[test]
    fn diameters() {
        assert_eq!(cycle(6).diameter(), Some(3));
        assert_eq!(cycle(6).distances().diameter(), Some(3));
        assert_eq!(Graph::empty(4).diameter(), None);
        assert_eq!(Graph::empty(4).distances().diameter(), None);
        assert_eq!(Graph::empty(1).diameter(), Some(0));
    }

    #[test]
    fn non_edge_streams() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.non_edges().count(), 0);
        assert_eq!(cycle(5).non_edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        assert_eq!(Graph::empty(3).non_edges().count(), 3);
        assert_eq!(cycle(5).non_edge_count(), 5);
    }

    #[test]
    fn wide_rows() {
        let n = 200;
        let g = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        assert_eq!(g.regular_degree(), Some(2));
        assert_eq!(g.diameter(), Some(100));
        assert!(g.has_edge(199, 0));
    }
}
