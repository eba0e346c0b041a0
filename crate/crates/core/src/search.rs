//! Exhaustive search over `d`-regular graphs of small order.
//!
//! Graphs are generated by filling adjacency rows in vertex order: vertex
//! `i` picks its remaining neighbours among `i+1..n`. Unprocessed vertices
//! with identical adjacency to the processed ones are interchangeable, so
//! within each such class only the lowest-indexed members are ever picked.
//! This keeps every isomorphism class while skipping most relabellings.
//! When a pattern is given, every edge is checked as it is added and the
//! branch is cut as soon as a copy of the pattern appears.
//!
//! Results go to an append-only JSON-lines store with one record per
//! `(n, d, pattern)`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::checkers::is_saturated;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, GraphBuilder};
use crate::io::{decode_graph6, encode_graph6_string};
use crate::patterns::{pattern_from_key, PatternGraph};
use crate::subgraph::{contains_subgraph, has_clique};

/// Largest order for which search is offered.
pub const MAX_ORDER: usize = 12;

/// Largest order at which [`enumerate_regular`] reduces its output to one
/// graph per isomorphism class.
pub const CANONICAL_MAX_ORDER: usize = 10;

#[derive(Clone, Debug)]
struct Partial {
    n: usize,
    rows: Vec<u64>,
}

impl Adjacency for Partial {
    fn order(&self) -> usize {
        self.n
    }

    fn row(&self, v: usize) -> &[u64] {
        std::slice::from_ref(&self.rows[v])
    }
}

impl Partial {
    fn new(n: usize) -> Self {
        Partial { n, rows: vec![0; n] }
    }

    fn from_graph(g: &Graph) -> Self {
        Partial {
            n: g.order(),
            rows: (0..g.order()).map(|v| g.row(v)[0]).collect(),
        }
    }

    fn add(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    fn remove(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    fn deg(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    fn adj(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    fn to_graph(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj(u, v) {
                    b.add_edge(u, v);
                }
            }
        }
        b.build()
    }
}

fn creates_copy(g: &Partial, f: &PatternGraph, u: usize, v: usize) -> bool {
    let k = f.order();
    if f.edge_count() == k * k.saturating_sub(1) / 2 {
        has_clique(g, k, Some((u, v))).is_some()
    } else {
        contains_subgraph(g, f, Some((u, v))).is_some()
    }
}

struct Generator<'a> {
    n: usize,
    d: usize,
    forbid: Option<&'a PatternGraph>,
}

impl Generator<'_> {
    /// Every vertex after `i` can still reach degree `d` using only the
    /// other vertices after `i`.
    fn feasible(&self, g: &Partial, i: usize) -> bool {
        let others = self.n - i - 1;
        (i + 1..self.n).all(|j| self.d - g.deg(j) < others)
    }

    /// Open vertices of `i+1..n` grouped by adjacency to `0..i`.
    fn classes(&self, g: &Partial, i: usize) -> Vec<Vec<usize>> {
        let mask = (1u64 << i) - 1;
        let mut by_row: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for j in i + 1..self.n {
            if g.deg(j) < self.d {
                by_row.entry(g.rows[j] & mask).or_default().push(j);
            }
        }
        let mut out: Vec<Vec<usize>> = by_row.into_values().collect();
        out.sort_by_key(|c| c[0]);
        out
    }

    /// Finishes vertices `i..stop` in every admissible way and calls `visit`
    /// on each result; `visit` returns `false` to abort.
    fn run(&self, g: &mut Partial, i: usize, stop: usize, visit: &mut dyn FnMut(&Partial) -> bool) -> bool {
        if i == stop {
            return visit(g);
        }
        let need = self.d - g.deg(i);
        if need == 0 {
            return !self.feasible(g, i) || self.run(g, i + 1, stop, visit);
        }
        let classes = self.classes(g, i);
        let mut counts = vec![0; classes.len()];
        self.choose(g, i, stop, &classes, 0, need, &mut counts, visit)
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &self,
        g: &mut Partial,
        i: usize,
        stop: usize,
        classes: &[Vec<usize>],
        c: usize,
        need: usize,
        counts: &mut [usize],
        visit: &mut dyn FnMut(&Partial) -> bool,
    ) -> bool {
        if need == 0 {
            return self.apply(g, i, stop, classes, counts, visit);
        }
        let room: usize = classes[c..].iter().map(Vec::len).sum();
        if room < need {
            return true;
        }
        for take in (0..=need.min(classes[c].len())).rev() {
            counts[c] = take;
            let go = self.choose(g, i, stop, classes, c + 1, need - take, counts, visit);
            counts[c] = 0;
            if !go {
                return false;
            }
        }
        true
    }

    fn apply(
        &self,
        g: &mut Partial,
        i: usize,
        stop: usize,
        classes: &[Vec<usize>],
        counts: &[usize],
        visit: &mut dyn FnMut(&Partial) -> bool,
    ) -> bool {
        let picked: Vec<usize> = classes
            .iter()
            .zip(counts)
            .flat_map(|(cl, &k)| cl[..k].iter().copied())
            .collect();
        let mut added = 0;
        for &j in &picked {
            if self.forbid.is_some_and(|f| creates_copy(g, f, i, j)) {
                break;
            }
            g.add(i, j);
            added += 1;
        }
        let go = added < picked.len() || !self.feasible(g, i) || self.run(g, i + 1, stop, visit);
        for &j in &picked[..added] {
            g.remove(i, j);
        }
        go
    }

    /// Independent subtrees: partial graphs with the first two vertices
    /// finished, in generation order.
    fn frontier(&self) -> Vec<Partial> {
        let mut out = Vec::new();
        self.run(&mut Partial::new(self.n), 0, self.n.min(2), &mut |p| {
            out.push(p.clone());
            true
        });
        out
    }

    fn subtree(&self, start: &Partial, visit: &mut dyn FnMut(&Partial) -> bool) {
        let mut g = start.clone();
        self.run(&mut g, self.n.min(2), self.n, visit);
    }
}

/// Ordered partition refinement: split cells by neighbour counts into every
/// cell until stable. Label-invariant.
fn refine(g: &Partial, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(g.n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (g.rows[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    next.push(keyed[start..k].iter().map(|(_, v)| *v).collect());
                    start = k;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn leaf_code(g: &Partial, order: &[usize]) -> u64 {
    let mut code = 0u64;
    for a in 0..order.len() {
        for b in a + 1..order.len() {
            code = code << 1 | g.adj(order[a], order[b]) as u64;
        }
    }
    code
}

fn canon_search(g: &Partial, cells: Vec<Vec<usize>>, best: &mut Option<u64>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = leaf_code(g, &order);
            if best.is_none_or(|b| code < b) {
                *best = Some(code);
            }
        }
        Some(at) => {
            for &v in &cells[at] {
                let mut split = cells.clone();
                let rest: Vec<usize> = cells[at].iter().copied().filter(|&w| w != v).collect();
                split.splice(at..=at, [vec![v], rest]);
                canon_search(g, split, best);
            }
        }
    }
}

/// Isomorphism invariant that separates non-isomorphic graphs: the smallest
/// upper-triangle adjacency string over all individualisation-refinement
/// leaves. Needs `n <= 11`.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.order() <= 11, "canonical codes need n <= 11");
    let p = Partial::from_graph(g);
    let mut best = None;
    canon_search(&p, vec![(0..g.order()).collect()], &mut best);
    best.unwrap_or(0)
}

/// Output of [`enumerate_regular`].
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub n: usize,
    pub d: usize,
    pub graphs: Vec<Graph>,
    /// Whether `graphs` holds exactly one graph per isomorphism class.
    pub deduplicated: bool,
    pub note: Option<String>,
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::param(format!("exhaustive search is limited to n <= {MAX_ORDER}, got {n}")));
    }
    Ok(())
}

fn parity_note(n: usize, d: usize) -> Option<String> {
    if d >= n.max(1) {
        Some(format!("no {d}-regular graph on {n} vertices: d must be below n"))
    } else if n * d % 2 == 1 {
        Some(format!("no {d}-regular graph on {n} vertices: n·d is odd"))
    } else {
        None
    }
}

/// Every `d`-regular graph on `n` vertices up to isomorphism. For
/// `n <= CANONICAL_MAX_ORDER` each class appears exactly once, otherwise
/// some classes may repeat.
pub fn enumerate_regular(n: usize, d: usize) -> Result<Enumeration> {
    check_order(n)?;
    let deduplicated = n <= CANONICAL_MAX_ORDER;
    if let Some(note) = parity_note(n, d) {
        return Ok(Enumeration {
            n,
            d,
            graphs: Vec::new(),
            deduplicated,
            note: Some(note),
        });
    }
    let gen = Generator { n, d, forbid: None };
    let branches: Vec<Vec<Graph>> = gen
        .frontier()
        .par_iter()
        .map(|start| {
            let mut out = Vec::new();
            gen.subtree(start, &mut |p| {
                out.push(p.to_graph());
                true
            });
            out
        })
        .collect();
    let mut graphs: Vec<Graph> = branches.into_iter().flatten().collect();
    if deduplicated {
        let codes: Vec<u64> = graphs.par_iter().map(canonical_code).collect();
        let mut seen = HashSet::new();
        let mut keep = codes.iter().map(|c| seen.insert(*c));
        graphs.retain(|_| keep.next().unwrap());
    }
    Ok(Enumeration {
        n,
        d,
        graphs,
        deduplicated,
        note: None,
    })
}

/// Search outcome for one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeOutcome {
    pub d: usize,
    pub exists: bool,
    /// graph6 encoding of the first saturated graph found.
    pub witness: Option<String>,
    /// `F`-free `d`-regular candidates examined.
    pub count_checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    pub pattern: String,
    pub outcomes: Vec<DegreeOutcome>,
    /// Smallest `n·d/2` over degrees with a witness.
    pub rsat_value: Option<usize>,
    pub exhaustive: bool,
}

impl SearchResult {
    fn from_outcomes(n: usize, pattern: String, outcomes: Vec<DegreeOutcome>) -> Self {
        let rsat_value = outcomes.iter().filter(|o| o.exists).map(|o| n * o.d / 2).min();
        SearchResult {
            n,
            pattern,
            outcomes,
            rsat_value,
            exhaustive: true,
        }
    }
}

/// Degrees worth searching: `0..n` with `n·d` even.
pub fn feasible_degrees(n: usize) -> Vec<usize> {
    (0..n).filter(|d| (n * d).is_multiple_of(2)).collect()
}

/// Searches the `F`-free `d`-regular graphs on `n` vertices for one that is
/// `F`-saturated, for one degree.
pub fn search_degree(n: usize, d: usize, f: &PatternGraph) -> Result<DegreeOutcome> {
    check_order(n)?;
    if parity_note(n, d).is_some() {
        return Err(Error::param(format!("no {d}-regular graphs on {n} vertices")));
    }
    let gen = Generator { n, d, forbid: Some(f) };
    // Each subtree stops at its own first witness; taking subtrees in order
    // makes the result independent of scheduling.
    let per_branch: Vec<(u64, Option<Graph>)> = gen
        .frontier()
        .par_iter()
        .map(|start| {
            let mut count = 0u64;
            let mut found = None;
            gen.subtree(start, &mut |p| {
                count += 1;
                let g = p.to_graph();
                if is_saturated(&g, f).pass {
                    found = Some(g);
                    false
                } else {
                    true
                }
            });
            (count, found)
        })
        .collect();
    let mut count_checked = 0;
    let mut witness = None;
    for (count, found) in per_branch {
        count_checked += count;
        if found.is_some() {
            witness = found;
            break;
        }
    }
    Ok(DegreeOutcome {
        d,
        exists: witness.is_some(),
        witness: witness.as_ref().map(encode_graph6_string),
        count_checked,
    })
}

/// Every feasible degree on `n` vertices.
pub fn find_regular_saturated(n: usize, f: &PatternGraph) -> Result<SearchResult> {
    check_order(n)?;
    let outcomes = feasible_degrees(n)
        .into_iter()
        .map(|d| search_degree(n, d, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchResult::from_outcomes(n, f.name.clone(), outcomes))
}

/// One line of the store.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoreRecord {
    pub n: usize,
    pub d: usize,
    /// Registry key of the pattern.
    pub pattern: String,
    pub exists: bool,
    pub witness: Option<String>,
    pub count_checked: u64,
    pub exhaustive: bool,
}

impl StoreRecord {
    fn outcome(&self) -> DegreeOutcome {
        DegreeOutcome {
            d: self.d,
            exists: self.exists,
            witness: self.witness.clone(),
            count_checked: self.count_checked,
        }
    }
}

fn verify_record(rec: &StoreRecord, f: &PatternGraph) -> std::result::Result<(), String> {
    if rec.n * rec.d % 2 == 1 || rec.d >= rec.n.max(1) {
        return Err(format!("no {}-regular graph exists on {} vertices", rec.d, rec.n));
    }
    match (rec.exists, &rec.witness) {
        (false, None) => Ok(()),
        (false, Some(_)) => Err("witness given for a nonexistent record".into()),
        (true, None) => Err("existing record without witness".into()),
        (true, Some(w)) => {
            let g = decode_graph6(w.as_bytes()).map_err(|e| e.to_string())?;
            if g.order() != rec.n {
                return Err(format!("witness has {} vertices", g.order()));
            }
            if g.regular_degree() != Some(rec.d) {
                return Err(format!("witness is not {}-regular", rec.d));
            }
            let r = is_saturated(&g, f);
            if !r.pass {
                return Err(format!("witness is not {}-saturated: {:?}", f.name, r.witness));
            }
            Ok(())
        }
    }
}

/// Loads and re-verifies every record. Any malformed line or failing
/// witness is a hard error naming its line. A missing file is empty.
pub fn load_store(path: &Path) -> Result<Vec<StoreRecord>> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e.into()),
    };
    let mut patterns: HashMap<String, PatternGraph> = HashMap::new();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |reason: String| Error::Store { line: line_no, reason };
        let rec: StoreRecord = serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
        if !patterns.contains_key(&rec.pattern) {
            let f = pattern_from_key(&rec.pattern).map_err(|e| bad(e.to_string()))?;
            patterns.insert(rec.pattern.clone(), f);
        }
        verify_record(&rec, &patterns[&rec.pattern]).map_err(bad)?;
        if seen.insert((rec.n, rec.d, rec.pattern.clone())) {
            out.push(rec);
        }
    }
    Ok(out)
}

fn append_records(path: &Path, records: &[StoreRecord]) -> Result<()> {
    if records.is_empty() {
        return Ok(());
    }
    let mut buf = String::new();
    for r in records {
        buf.push_str(&serde_json::to_string(r)?);
        buf.push('\n');
    }
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    file.write_all(buf.as_bytes())?;
    file.sync_all()?;
    Ok(())
}

/// Results for every `n` in `range`, reusing verified records from the store
/// at `path` and appending any that are missing. Re-running a range leaves
/// the store unchanged.
pub fn rsat_table(path: &Path, range: std::ops::RangeInclusive<usize>, key: &str) -> Result<Vec<SearchResult>> {
    let f = pattern_from_key(key)?;
    if let Some(n) = range.clone().find(|&n| n > MAX_ORDER) {
        check_order(n)?;
    }
    let stored = load_store(path)?;
    let mut results = Vec::new();
    for n in range {
        let mut outcomes = Vec::new();
        let mut fresh = Vec::new();
        for d in feasible_degrees(n) {
            match stored.iter().find(|r| r.n == n && r.d == d && r.pattern == key) {
                Some(r) => outcomes.push(r.outcome()),
                None => {
                    let o = search_degree(n, d, &f)?;
                    fresh.push(StoreRecord {
                        n,
                        d,
                        pattern: key.to_string(),
                        exists: o.exists,
                        witness: o.witness.clone(),
                        count_checked: o.count_checked,
                        exhaustive: true,
                    });
                    outcomes.push(o);
                }
            }
        }
        append_records(path, &fresh)?;
        results.push(SearchResult::from_outcomes(n, f.name.clone(), outcomes));
    }
    Ok(results)
}

/// Groups store records into one result per `(pattern, n)`.
pub fn results_from_store(records: &[StoreRecord]) -> Vec<SearchResult> {
    let mut grouped: BTreeMap<(String, usize), Vec<DegreeOutcome>> = BTreeMap::new();
    for r in records {
        grouped.entry((r.pattern.clone(), r.n)).or_default().push(r.outcome());
    }
    grouped
        .into_iter()
        .map(|((pattern, n), mut outcomes)| {
            outcomes.sort_by_key(|o| o.d);
            SearchResult::from_outcomes(n, pattern, outcomes)
        })
        .collect()
}

/// Plain-text table: one row per result.
pub fn render_table(results: &[SearchResult]) -> String {
    let mut out = String::from("pattern   n  rsat          degrees with witness  checked\n");
    for r in results {
        let rsat = r.rsat_value.map_or("nonexistent".to_string(), |v| v.to_string());
        let ds: Vec<String> = r.outcomes.iter().filter(|o| o.exists).map(|o| o.d.to_string()).collect();
        let ds = if ds.is_empty() { "-".to_string() } else { ds.join(",") };
        let checked: u64 = r.outcomes.iter().map(|o| o.count_checked).sum();
        let _ = writeln!(out, "{:<8} {:>2}  {:<12}  {:<20}  {}", r.pattern, r.n, rsat, ds, checked);
    }
    out
}
