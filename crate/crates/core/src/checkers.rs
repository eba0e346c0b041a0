//! Freeness, saturation, oversaturation and rrsat-witness checkers, plus the
//! counting inequalities every regular saturated instance must satisfy.
//!
//! Saturation is decided edge by edge: once `G` is known to be `F`-free, any
//! copy of `F` in `G + e` must use `e`, so each non-edge costs one rooted
//! search instead of a full containment test. Non-edges are scanned in
//! parallel; the reported witness is always the lexicographically smallest
//! failing pair, independent of scheduling.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use num::{BigUint, One};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::graph::{Adjacency, Graph};
use crate::patterns::PatternGraph;
use crate::subgraph::{contains_subgraph, has_clique, Embedding};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Free,
    Saturated,
    Oversaturated,
    RrsatWitness,
    Regular,
    Inequality,
}

/// How non-edges are covered by a saturation-type check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMode {
    #[default]
    Exhaustive,
    /// A uniform random subset of `count` distinct non-edges.
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A non-edge whose addition creates no copy of the pattern.
    NonEdge { u: usize, v: usize },
    /// A copy of the pattern (pattern vertex `i` maps to `mapping[i]`).
    Embedding { mapping: Vec<usize> },
    Vertex { vertex: usize },
    Degree { vertex: usize, degree: usize, expected: usize },
    Inequalities { checks: Vec<InequalityCheck> },
    /// Sources and sinks of a `K_{c,d}` with every arc pointing into the sinks.
    Biclique { sources: Vec<usize>, sinks: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub property: Property,
    pub pass: bool,
    pub mode: CheckMode,
    pub witness: Option<Witness>,
    pub parameters: BTreeMap<String, Value>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub(crate) fn new(property: Property) -> Self {
        VerificationReport {
            property,
            pass: true,
            mode: CheckMode::Exhaustive,
            witness: None,
            parameters: BTreeMap::new(),
            elapsed_ms: 0.0,
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters
            .insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
        self
    }

    pub(crate) fn finish(mut self, pass: bool, witness: Option<Witness>, started: Instant) -> Self {
        self.pass = pass;
        self.witness = witness;
        self.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
        debug_assert!(self.pass || self.witness.is_some());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn param_bool(&self, key: &str) -> Option<bool> {
        self.parameters.get(key)?.as_bool()
    }

    /// The failing non-edge, if that is what the witness is.
    pub fn non_edge(&self) -> Option<(usize, usize)> {
        match self.witness {
            Some(Witness::NonEdge { u, v }) => Some((u, v)),
            _ => None,
        }
    }
}

fn is_complete_pattern(f: &PatternGraph) -> bool {
    let k = f.order();
    f.edge_count() == k * k.saturating_sub(1) / 2
}

/// A copy of `f` in `g` (plus `through`, which must then be used).
pub fn find_copy(g: &Graph, f: &PatternGraph, through: Option<(usize, usize)>) -> Option<Embedding> {
    if is_complete_pattern(f) {
        has_clique(g, f.order(), through)
    } else {
        contains_subgraph(g, f, through)
    }
}

fn base_report(property: Property, g: &Graph, f: &PatternGraph) -> VerificationReport {
    VerificationReport::new(property)
        .param("n", g.order())
        .param("edges", g.edge_count())
        .param("d", g.regular_degree())
        .param("pattern", &f.name)
}

pub fn is_free(g: &Graph, f: &PatternGraph) -> VerificationReport {
    let started = Instant::now();
    let report = base_report(Property::Free, g, f);
    match find_copy(g, f, None) {
        None => report.finish(true, None, started),
        Some(e) => report.finish(false, Some(Witness::Embedding { mapping: e.mapping }), started),
    }
}

pub fn is_regular(g: &Graph) -> VerificationReport {
    let started = Instant::now();
    let s = g.degree_summary();
    let report = VerificationReport::new(Property::Regular)
        .param("n", g.order())
        .param("edges", s.edge_count)
        .param("d", s.regular_degree);
    match s.regular_degree {
        Some(_) => report.finish(true, None, started),
        None => {
            let expected = s.degrees[0];
            let vertex = s.degrees.iter().position(|&d| d != expected).expect("irregular");
            let witness = Witness::Degree {
                vertex,
                degree: s.degrees[vertex],
                expected,
            };
            report.finish(false, Some(witness), started)
        }
    }
}

/// Distinct non-edges drawn uniformly at random, sorted lexicographically.
fn sample_non_edges(g: &Graph, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = HashSet::with_capacity(count);
    while picked.len() < count {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b || g.has_edge(a, b) {
            continue;
        }
        picked.insert((a.min(b), a.max(b)));
    }
    let mut out: Vec<_> = picked.into_iter().collect();
    out.sort_unstable();
    out
}

/// First non-edge (lexicographically) with no copy of `f` through it.
/// Returns the failure (if any), the number of non-edges examined and the
/// effective mode.
fn first_unsaturated(g: &Graph, f: &PatternGraph, mode: CheckMode) -> (Option<(usize, usize)>, usize, CheckMode) {
    let n = g.order();
    let total = g.non_edge_count();
    let fails = |u: usize, v: usize| find_copy(g, f, Some((u, v))).is_none();
    match mode {
        CheckMode::Sampled { count, seed } if count < total => {
            let pairs = sample_non_edges(g, count, seed);
            let hit = pairs.par_iter().find_first(|&&(u, v)| fails(u, v)).copied();
            (hit, pairs.len(), mode)
        }
        _ => {
            let hit = (0..n).into_par_iter().find_map_first(|u| {
                ((u + 1)..n).filter(|&v| !g.has_edge(u, v)).find(|&v| fails(u, v)).map(|v| (u, v))
            });
            (hit, total, CheckMode::Exhaustive)
        }
    }
}

pub fn is_saturated(g: &Graph, f: &PatternGraph) -> VerificationReport {
    is_saturated_with(g, f, CheckMode::Exhaustive)
}

/// `F`-free, and every non-edge (every sampled non-edge in sampled mode)
/// creates a copy of `F` through it.
pub fn is_saturated_with(g: &Graph, f: &PatternGraph, mode: CheckMode) -> VerificationReport {
    let started = Instant::now();
    let mut report = base_report(Property::Saturated, g, f);
    if let Some(e) = find_copy(g, f, None) {
        report.mode = mode;
        return report
            .param("free", false)
            .finish(false, Some(Witness::Embedding { mapping: e.mapping }), started);
    }
    let (hit, checked, mode) = first_unsaturated(g, f, mode);
    report.mode = mode;
    report
        .param("free", true)
        .param("non_edges_checked", checked)
        .finish(hit.is_none(), hit.map(|(u, v)| Witness::NonEdge { u, v }), started)
}

pub fn is_oversaturated(g: &Graph, f: &PatternGraph) -> VerificationReport {
    is_oversaturated_with(g, f, CheckMode::Exhaustive)
}

/// Every non-edge creates a copy of `F` that uses it; `F`-freeness is not
/// required.
pub fn is_oversaturated_with(g: &Graph, f: &PatternGraph, mode: CheckMode) -> VerificationReport {
    let started = Instant::now();
    let mut report = base_report(Property::Oversaturated, g, f);
    let (hit, checked, mode) = first_unsaturated(g, f, mode);
    report.mode = mode;
    report
        .param("non_edges_checked", checked)
        .finish(hit.is_none(), hit.map(|(u, v)| Witness::NonEdge { u, v }), started)
}

/// Regular, `F`-free, and some vertex `v` has every incident non-edge create
/// a copy of `F`.
///
/// Together with regularity this certifies that every regular proper
/// supergraph on the same vertex set contains `F`: such a supergraph raises
/// every degree, so it adds a non-edge at `v`.
pub fn rrsat_witness(g: &Graph, f: &PatternGraph) -> VerificationReport {
    let started = Instant::now();
    let report = base_report(Property::RrsatWitness, g, f);
    let regular = is_regular(g);
    if !regular.pass {
        return report.param("regular", false).finish(false, regular.witness, started);
    }
    if let Some(e) = find_copy(g, f, None) {
        return report
            .param("regular", true)
            .param("free", false)
            .finish(false, Some(Witness::Embedding { mapping: e.mapping }), started);
    }
    let n = g.order();
    let failures_at = |v: usize, stop_early: bool| -> (usize, Option<(usize, usize)>) {
        let mut count = 0;
        let mut first = None;
        for u in (0..n).filter(|&u| u != v && !g.has_edge(u, v)) {
            if find_copy(g, f, Some((v, u))).is_none() {
                count += 1;
                first.get_or_insert((v.min(u), v.max(u)));
                if stop_early {
                    break;
                }
            }
        }
        (count, first)
    };
    let special = (0..n).into_par_iter().find_first(|&v| failures_at(v, true).0 == 0);
    let report = report.param("regular", true).param("free", true);
    match special {
        Some(vertex) => report.finish(true, Some(Witness::Vertex { vertex }), started),
        None => {
            let (vertex, (fewest, first)) = (0..n)
                .into_par_iter()
                .map(|v| (v, failures_at(v, false)))
                .min_by_key(|&(v, (c, _))| (c, v))
                .expect("n > 0 when no vertex qualifies");
            let (u, w) = first.expect("vertex has a failing non-edge");
            report
                .param("closest_vertex", vertex)
                .param("closest_vertex_failures", fewest)
                .finish(false, Some(Witness::NonEdge { u, v: w }), started)
        }
    }
}

/// Per-edge cycle and diameter data for a pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBound {
    pub edge: (usize, usize),
    /// Length of the shortest cycle through the edge.
    pub shortest_cycle: Option<u32>,
    /// Diameter of the pattern with this edge deleted.
    pub diameter_without: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    /// Smallest `m` with every edge on a cycle of length at most `m + 1`.
    pub m: Option<u32>,
    /// Largest diameter of `F \ e` over edges `e`.
    pub r: Option<u32>,
    pub per_edge: Vec<EdgeBound>,
}

pub fn diameter_bounds(f: &Graph) -> BoundReport {
    let per_edge: Vec<EdgeBound> = f
        .edges()
        .map(|(a, b)| {
            let reduced = f.without_edge(a, b);
            let dist = reduced.bfs(a)[b];
            EdgeBound {
                edge: (a, b),
                shortest_cycle: (dist != crate::graph::UNREACHABLE).then(|| dist + 1),
                diameter_without: reduced.diameter(),
            }
        })
        .collect();
    let aggregate = |pick: fn(&EdgeBound) -> Option<u32>| -> Option<u32> {
        if per_edge.is_empty() {
            return None;
        }
        per_edge.iter().map(pick).collect::<Option<Vec<_>>>()?.into_iter().max()
    };
    BoundReport {
        m: aggregate(|e| e.shortest_cycle).map(|c| c - 1),
        r: aggregate(|e| e.diameter_without),
        per_edge,
    }
}

fn pow(base: usize, exp: u32) -> BigUint {
    let mut acc = BigUint::one();
    let b = BigUint::from(base);
    for _ in 0..exp {
        acc *= &b;
    }
    acc
}

/// Evaluates, exactly, whichever of these apply:
/// `n - d - 1 <= d^m`, `n - d - 1 <= d^r` and `d(d - 1) >= t(n - d - 1)`.
pub fn check_inequalities(n: usize, d: usize, m: Option<u32>, r: Option<u32>, t: Option<usize>) -> VerificationReport {
    let started = Instant::now();
    let report = VerificationReport::new(Property::Inequality)
        .param("n", n)
        .param("d", d)
        .param("m", m)
        .param("r", r)
        .param("t", t);
    if n <= d {
        let check = InequalityCheck {
            name: "n > d".into(),
            lhs: n.to_string(),
            rhs: d.to_string(),
            holds: false,
        };
        return report.finish(false, Some(Witness::Inequalities { checks: vec![check] }), started);
    }
    let gap = BigUint::from(n - d - 1);
    let mut checks = Vec::new();
    if let Some(m) = m {
        let rhs = pow(d, m);
        checks.push(InequalityCheck {
            name: "n-d-1 <= d^m".into(),
            holds: gap <= rhs,
            lhs: gap.to_string(),
            rhs: rhs.to_string(),
        });
    }
    if let Some(r) = r {
        let rhs = pow(d, r);
        checks.push(InequalityCheck {
            name: "n-d-1 <= d^r".into(),
            holds: gap <= rhs,
            lhs: gap.to_string(),
            rhs: rhs.to_string(),
        });
    }
    if let Some(t) = t {
        let lhs = BigUint::from(d) * BigUint::from(d.saturating_sub(1));
        let rhs = BigUint::from(t) * &gap;
        checks.push(InequalityCheck {
            name: "d(d-1) >= t(n-d-1)".into(),
            holds: lhs >= rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    let pass = checks.iter().all(|c| c.holds);
    report.finish(pass, Some(Witness::Inequalities { checks }), started)
}
