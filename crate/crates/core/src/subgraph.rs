//! Clique and (non-induced) subgraph containment.
//!
//! Both searches accept an optional `through` pair. The pair is treated as an
//! edge of the host whether or not it is present, so asking "does `G + e`
//! contain a copy of `F` using `e`" never materialises `G + e`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::graph::Adjacency;

/// Injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub mapping: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity, that every pattern edge lands on a host edge (or
    /// the `through` pair) and, when `through` is given, that some pattern
    /// edge maps onto it.
    pub fn is_valid<H: Adjacency, P: Adjacency>(&self, host: &H, pattern: &P, through: Option<(usize, usize)>) -> bool {
        let host = VirtualHost::new(host, through);
        let m = &self.mapping;
        if m.len() != pattern.order() || m.iter().any(|&x| x >= host.order()) {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        if !m.iter().all(|x| seen.insert(*x)) {
            return false;
        }
        let mut covers = through.is_none();
        for a in 0..pattern.order() {
            for b in bits::ones(pattern.row(a)).filter(|&b| b > a) {
                if !host.has_edge(m[a], m[b]) {
                    return false;
                }
                if let Some((u, v)) = through {
                    covers |= (m[a], m[b]) == (u, v) || (m[a], m[b]) == (v, u);
                }
            }
        }
        covers
    }

    /// True iff the image is a clique of the host (plus `through`).
    pub fn is_clique_in<H: Adjacency>(&self, host: &H, through: Option<(usize, usize)>) -> bool {
        let host = VirtualHost::new(host, through);
        let m = &self.mapping;
        m.iter()
            .enumerate()
            .all(|(i, &x)| m[i + 1..].iter().all(|&y| x != y && host.has_edge(x, y)))
    }
}

/// Host adjacency with one optional extra pair switched on.
pub(crate) struct VirtualHost<'a, A: Adjacency> {
    inner: &'a A,
    extra: Option<(usize, usize, Vec<u64>, Vec<u64>)>,
}

impl<'a, A: Adjacency> VirtualHost<'a, A> {
    pub(crate) fn new(inner: &'a A, through: Option<(usize, usize)>) -> Self {
        let extra = through.filter(|&(u, v)| u != v && u < inner.order() && v < inner.order()).map(|(u, v)| {
            let mut ru = inner.row(u).to_vec();
            let mut rv = inner.row(v).to_vec();
            bits::set(&mut ru, v);
            bits::set(&mut rv, u);
            (u, v, ru, rv)
        });
        VirtualHost { inner, extra }
    }
}

impl<A: Adjacency> Adjacency for VirtualHost<'_, A> {
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[inline]
    fn row(&self, x: usize) -> &[u64] {
        match &self.extra {
            Some((u, _, ru, _)) if *u == x => ru,
            Some((_, v, _, rv)) if *v == x => rv,
            _ => self.inner.row(x),
        }
    }
}

fn row_len<A: Adjacency>(g: &A) -> usize {
    if g.order() == 0 {
        bits::words_for(0).max(1)
    } else {
        g.row(0).len()
    }
}

/// Smallest-index representative of each false-twin class (identical open
/// neighbourhoods). Twins are pairwise non-adjacent, so a clique uses at most
/// one vertex per class and can always be moved onto representatives.
fn twin_representatives<A: Adjacency>(g: &A) -> Vec<u64> {
    let mut reps = vec![0u64; row_len(g)];
    let mut seen: HashMap<&[u64], ()> = HashMap::with_capacity(g.order());
    for v in 0..g.order() {
        if seen.insert(g.row(v), ()).is_none() {
            bits::set(&mut reps, v);
        }
    }
    reps
}

/// Extends `stack` by `need` pairwise adjacent vertices drawn from `cand`.
fn grow_clique<A: Adjacency>(g: &A, cand: &[u64], need: usize, stack: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if bits::count(cand) < need {
        return false;
    }
    if need == 1 {
        stack.push(bits::ones(cand).next().expect("non-empty"));
        return true;
    }
    let mut next = vec![0u64; cand.len()];
    for w in bits::ones(cand) {
        bits::and_into(&mut next, cand, g.row(w));
        bits::clear_through(&mut next, w);
        if need == 2 {
            if let Some(x) = bits::ones(&next).next() {
                stack.extend([w, x]);
                return true;
            }
            continue;
        }
        stack.push(w);
        if grow_clique(g, &next, need - 1, stack) {
            return true;
        }
        stack.pop();
    }
    false
}

/// Finds a copy of `K_k`, optionally one containing both endpoints of
/// `through` (the pair counts as an edge).
///
/// Candidates are filtered by intersecting neighbourhood rows and pruned when
/// the remaining candidate popcount falls below the vertices still needed.
pub fn has_clique<A: Adjacency>(g: &A, k: usize, through: Option<(usize, usize)>) -> Option<Embedding> {
    let n = g.order();
    match through {
        Some((u, v)) => {
            if k < 2 || u == v || u >= n || v >= n {
                return None;
            }
            let mut cand = vec![0u64; row_len(g)];
            bits::and_into(&mut cand, g.row(u), g.row(v));
            bits::clear(&mut cand, u);
            bits::clear(&mut cand, v);
            let mut stack = vec![u, v];
            grow_clique(g, &cand, k - 2, &mut stack).then_some(Embedding { mapping: stack })
        }
        None => {
            if k == 0 {
                return Some(Embedding { mapping: vec![] });
            }
            if k > n {
                return None;
            }
            let cand = if n >= 128 {
                twin_representatives(g)
            } else {
                bits::full(n)
            };
            let mut cand = cand;
            cand.resize(row_len(g), 0);
            let mut stack = Vec::with_capacity(k);
            grow_clique(g, &cand, k, &mut stack).then_some(Embedding { mapping: stack })
        }
    }
}

/// Matching order: seed vertices first, then repeatedly the vertex with the
/// most already-ordered neighbours, ties by higher degree, then lower index.
fn match_order<P: Adjacency>(pattern: &P, seed: &[usize]) -> Vec<usize> {
    let k = pattern.order();
    let mut order: Vec<usize> = seed.to_vec();
    let mut placed = vec![false; k];
    for &s in seed {
        placed[s] = true;
    }
    while order.len() < k {
        let best = (0..k)
            .filter(|&x| !placed[x])
            .max_by_key(|&x| {
                let linked = order.iter().filter(|&&y| pattern.has_edge(x, y)).count();
                (linked, pattern.degree(x), std::cmp::Reverse(x))
            })
            .expect("unplaced vertex exists");
        placed[best] = true;
        order.push(best);
    }
    order
}

struct Matcher<'a, H: Adjacency, P: Adjacency> {
    host: &'a H,
    pattern: &'a P,
    order: Vec<usize>,
    /// For position `i`, the positions `< i` adjacent to `order[i]`.
    back: Vec<Vec<usize>>,
    host_deg: Vec<usize>,
    image: Vec<usize>,
    used: Vec<u64>,
}

impl<'a, H: Adjacency, P: Adjacency> Matcher<'a, H, P> {
    fn new(host: &'a H, pattern: &'a P, order: Vec<usize>) -> Self {
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &x)| (0..i).filter(|&j| pattern.has_edge(x, order[j])).collect())
            .collect();
        let host_deg = (0..host.order()).map(|v| host.degree(v)).collect();
        let words = row_len(host);
        Matcher {
            host,
            pattern,
            order,
            back,
            host_deg,
            image: Vec::new(),
            used: vec![0; words],
        }
    }

    fn place(&mut self, x: usize) {
        self.image.push(x);
        bits::set(&mut self.used, x);
    }

    fn unplace(&mut self) {
        let x = self.image.pop().expect("placed");
        bits::clear(&mut self.used, x);
    }

    fn search(&mut self) -> bool {
        let pos = self.image.len();
        if pos == self.order.len() {
            return true;
        }
        let need_deg = self.pattern.degree(self.order[pos]);
        let mut cand = match self.back[pos].first() {
            Some(&j) => self.host.row(self.image[j]).to_vec(),
            None => bits::full(self.host.order()),
        };
        cand.resize(self.used.len(), 0);
        for &j in &self.back[pos][1.min(self.back[pos].len())..] {
            bits::and_assign(&mut cand, self.host.row(self.image[j]));
        }
        bits::andnot_assign(&mut cand, &self.used);
        let options: Vec<usize> = bits::ones(&cand).filter(|&x| self.host_deg[x] >= need_deg).collect();
        for x in options {
            self.place(x);
            if self.search() {
                return true;
            }
            self.unplace();
        }
        false
    }

    fn embedding(&self) -> Embedding {
        let mut mapping = vec![0; self.order.len()];
        for (i, &p) in self.order.iter().enumerate() {
            mapping[p] = self.image[i];
        }
        Embedding { mapping }
    }
}

/// Finds an injective edge-preserving map of `pattern` into `host`
/// (not necessarily induced). With `through = (u, v)` the pair counts as a
/// host edge and some pattern edge must land on it; both orientations of
/// every pattern edge are tried in lexicographic order.
pub fn contains_subgraph<H: Adjacency, P: Adjacency>(
    host: &H,
    pattern: &P,
    through: Option<(usize, usize)>,
) -> Option<Embedding> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    match through {
        None => {
            let order = match_order(pattern, &[]);
            let mut m = Matcher::new(host, pattern, order);
            m.search().then(|| m.embedding())
        }
        Some((u, v)) => {
            if u == v || u >= host.order() || v >= host.order() {
                return None;
            }
            let vh = VirtualHost::new(host, through);
            for a in 0..k {
                for b in bits::ones(pattern.row(a)).filter(|&b| b > a) {
                    let order = match_order(pattern, &[a, b]);
                    let mut m = Matcher::new(&vh, pattern, order);
                    for (x, y) in [(u, v), (v, u)] {
                        if m.host_deg[x] < pattern.degree(a) || m.host_deg[y] < pattern.degree(b) {
                            continue;
                        }
                        m.place(x);
                        m.place(y);
                        if m.search() {
                            return Some(m.embedding());
                        }
                        m.unplace();
                        m.unplace();
                    }
                }
            }
            None
        }
    }
}
