//! Oriented 2-factors on complete multipartite graphs, the amalgamation
//! `H[s, t, G]`, and the iteration that drives `d/n` down while keeping the
//! graphs regular and `K_{s+2}`-saturated.
//!
//! Vertex numbering on `K_{q,...,q}` (`s + 1` parts) is 0-based: vertex `i` of
//! part `j` has index `j·q + i`.

use std::time::Instant;

use num::{BigInt, BigRational, Integer, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::checkers::{is_saturated_with, CheckMode, Property, VerificationReport, Witness};
use crate::constructions::{blow_up, LabeledGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::patterns::{self, build_pattern, PatternKind};

/// `s - 1` oriented 2-factors on `K_{q,...,q}` with `s + 1` parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedTwoFactorSet {
    pub q: usize,
    pub s: usize,
    pub shifts: Vec<usize>,
    /// `arcs[f]` lists the arcs `(tail, head)` of factor `f`.
    pub arcs: Vec<Vec<(usize, usize)>>,
}

impl OrientedTwoFactorSet {
    pub fn vertex_count(&self) -> usize {
        (self.s + 1) * self.q
    }

    pub fn label(&self, v: usize) -> String {
        format!("u{}.{}", v / self.q, v % self.q)
    }

    /// Out-neighbours of every vertex in the union of all factors.
    pub fn out_neighbors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for factor in &self.arcs {
            for &(a, b) in factor {
                out[a].push(b);
            }
        }
        out
    }

    /// Checks in- and out-degree 1 per factor, pairwise disjoint underlying
    /// edges, no loops and in-range endpoints.
    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        let mut seen = std::collections::HashMap::new();
        for (f, factor) in self.arcs.iter().enumerate() {
            let mut indeg = vec![0usize; n];
            let mut outdeg = vec![0usize; n];
            for &(a, b) in factor {
                if a >= n || b >= n || a == b {
                    return Err(Error::FactorSet(format!("factor {f}: bad arc ({a}, {b})")));
                }
                outdeg[a] += 1;
                indeg[b] += 1;
                if let Some(prev) = seen.insert((a.min(b), a.max(b)), f) {
                    return Err(Error::FactorSet(format!(
                        "edge {{{a}, {b}}} appears in factors {prev} and {f}"
                    )));
                }
            }
            if let Some(v) = (0..n).find(|&v| indeg[v] != 1 || outdeg[v] != 1) {
                return Err(Error::FactorSet(format!(
                    "factor {f}: vertex {v} has in-degree {} and out-degree {}",
                    indeg[v], outdeg[v]
                )));
            }
        }
        Ok(())
    }
}

/// For each shift `a = 0..s-2` and each `b`, the directed cycle
/// `(0, b) → (1, b+a) → (2, b+2a) → … → (s, b+sa) → (0, b)`, indices mod `q`.
pub fn multipartite_two_factors(q: usize, s: usize) -> Result<OrientedTwoFactorSet> {
    if q == 0 || s == 0 {
        return Err(Error::param("q and s must be positive"));
    }
    let shifts: Vec<usize> = (0..s.saturating_sub(1)).collect();
    let arcs = shifts
        .iter()
        .map(|&a| {
            let mut factor = Vec::with_capacity((s + 1) * q);
            for b in 0..q {
                let at = |j: usize| j * q + (b + j * a) % q;
                for j in 0..s {
                    factor.push((at(j), at(j + 1)));
                }
                factor.push((at(s), at(0)));
            }
            factor
        })
        .collect();
    Ok(OrientedTwoFactorSet { q, s, shifts, arcs })
}

fn subsets(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for i in start..items.len() {
        cur.push(items[i]);
        subsets(items, size, i + 1, cur, out);
        cur.pop();
    }
}

/// Brute-force check that the union of the factors contains no `K_{c,d}`
/// (`c + d = s + 1`, `c, d >= 1`) with every arc directed into the `d`-side.
///
/// Every such biclique has a source `x` whose out-neighbourhood contains the
/// whole sink side, so it suffices to try every `d`-subset `D` of every
/// out-neighbourhood and count the common in-neighbours of `D`.
pub fn verify_orientation_property(factors: &OrientedTwoFactorSet) -> Result<VerificationReport> {
    factors.validate()?;
    let started = Instant::now();
    let s = factors.s;
    let n = factors.vertex_count();
    let out = factors.out_neighbors();
    let mut in_sets = vec![Vec::new(); n];
    for (x, heads) in out.iter().enumerate() {
        for &y in heads {
            in_sets[y].push(x);
        }
    }
    let report = VerificationReport::new(Property::Free)
        .param("q", factors.q)
        .param("s", s)
        .param("factors", factors.arcs.len())
        .param("check", "oriented K_{c,d} with c + d = s + 1");
    let mut witness = None;
    'search: for (x, outs) in out.iter().enumerate() {
        for d in 1..=s {
            let c = s + 1 - d;
            let mut cands = Vec::new();
            subsets(outs, d, 0, &mut Vec::new(), &mut cands);
            for sinks in cands {
                let mut common: Vec<usize> = in_sets[sinks[0]].clone();
                for &y in &sinks[1..] {
                    common.retain(|z| in_sets[y].contains(z));
                }
                if common.len() >= c {
                    let mut sources: Vec<usize> = vec![x];
                    sources.extend(common.iter().copied().filter(|&z| z != x).take(c - 1));
                    sources.sort_unstable();
                    witness = Some(Witness::Biclique { sources, sinks });
                    break 'search;
                }
            }
        }
    }
    Ok(report.finish(witness.is_none(), witness, started))
}

/// Regular amalgamation parameter: `t = ((n_H - 1)d_G - s·n_G) / (d_H - s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TSolution {
    pub numerator: String,
    pub denominator: String,
    /// Present iff the quotient is a positive integer.
    pub t: Option<u64>,
}

pub fn solve_t(n_h: usize, d_h: usize, n_g: usize, d_g: usize, s: usize) -> Result<TSolution> {
    if d_h <= s {
        return Err(Error::param(format!("d_H = {d_h} must exceed s = {s}")));
    }
    let num = BigInt::from(n_h as i64 - 1) * BigInt::from(d_g) - BigInt::from(s) * BigInt::from(n_g);
    let q = BigRational::new(num, BigInt::from(d_h - s));
    let t = (q.is_integer() && q.is_positive())
        .then(|| q.to_integer().to_u64())
        .flatten();
    Ok(TSolution {
        numerator: q.numer().to_string(),
        denominator: q.denom().to_string(),
        t,
    })
}

/// Orders and degrees entering an amalgamation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmalgamParams {
    pub s: usize,
    pub t: usize,
    pub n_h: usize,
    pub d_h: usize,
    pub n_g: usize,
    pub d_g: usize,
}

impl AmalgamParams {
    /// Degree of a vertex in a `G`-blob: `st + (n_H - 1)d_G`.
    pub fn g_blob_degree(&self) -> usize {
        self.s * self.t + (self.n_h - 1) * self.d_g
    }

    /// Degree of a vertex in an `H`-blob: `t·d_H + s·n_G`.
    pub fn h_blob_degree(&self) -> usize {
        self.t * self.d_h + self.s * self.n_g
    }

    pub fn is_regular(&self) -> bool {
        self.g_blob_degree() == self.h_blob_degree()
    }

    pub fn order(&self) -> usize {
        self.n_h * (self.t + self.n_g)
    }
}

/// `H[s, t, G]`.
///
/// Vertices: `t` copies of each vertex of `H` (the `H`-blobs, blob-major,
/// index `j·t + i`), then one copy of `G` per vertex of `H` (the `G`-blobs,
/// index `h·t + b·g + a`). Edges:
///
/// 1. `u^j_i ~ u^{j'}_{i'}` whenever `u_j u_{j'} ∈ E(H)`;
/// 2. every `H`-blob vertex of `u_j` to every `G`-blob vertex of `u_j`;
/// 3. `v^b_a ~ v^{b'}_{a'}` for `b ≠ b'` and `v_a v_{a'} ∈ E(G)`;
/// 4. for each arc `u_j → u_{j'}` of the factors, every `H`-blob vertex of
///    `u_j` to every `G`-blob vertex of `u_{j'}`.
pub fn amalgamate(h: &Graph, factors: &OrientedTwoFactorSet, s: usize, t: usize, g: &Graph) -> Result<LabeledGraph> {
    factors.validate()?;
    if factors.vertex_count() != h.order() {
        return Err(Error::FactorSet(format!(
            "factors live on {} vertices but H has {}",
            factors.vertex_count(),
            h.order()
        )));
    }
    if factors.arcs.len() + 1 != s {
        return Err(Error::FactorSet(format!(
            "s = {s} needs {} factors, got {}",
            s.saturating_sub(1),
            factors.arcs.len()
        )));
    }
    if let Some(&(a, b)) = factors.arcs.iter().flatten().find(|&&(a, b)| !h.has_edge(a, b)) {
        return Err(Error::FactorSet(format!("arc ({a}, {b}) is not an edge of H")));
    }
    if t == 0 {
        return Err(Error::param("t must be at least 1"));
    }
    let hn = h.order();
    let gn = g.order();
    let hb = |j: usize, i: usize| j * t + i;
    let gb = |b: usize, a: usize| hn * t + b * gn + a;
    let mut out = GraphBuilder::new(hn * (t + gn));

    for (j, jj) in h.edges() {
        for i in 0..t {
            for ii in 0..t {
                out.add_edge(hb(j, i), hb(jj, ii));
            }
        }
    }
    for j in 0..hn {
        for i in 0..t {
            for a in 0..gn {
                out.add_edge(hb(j, i), gb(j, a));
            }
        }
    }
    for (a, aa) in g.edges() {
        for b in 0..hn {
            for bb in 0..hn {
                if b != bb {
                    out.add_edge(gb(b, a), gb(bb, aa));
                }
            }
        }
    }
    for &(j, jj) in factors.arcs.iter().flatten() {
        for i in 0..t {
            for a in 0..gn {
                out.add_edge(hb(j, i), gb(jj, a));
            }
        }
    }

    let mut labels = Vec::with_capacity(hn * (t + gn));
    for j in 0..hn {
        for i in 0..t {
            labels.push(format!("H[{}].{i}", factors.label(j)));
        }
    }
    for b in 0..hn {
        for a in 0..gn {
            labels.push(format!("G[{}].{a}", factors.label(b)));
        }
    }
    Ok(LabeledGraph {
        graph: out.build(),
        labels,
    })
}

/// `K_{q,...,q}` with `s + 1` parts, its factors and `H[s, t, G]`.
pub fn amalgamate_multipartite(q: usize, s: usize, t: usize, g: &Graph) -> Result<LabeledGraph> {
    let h = patterns::complete_multipartite(&vec![q; s + 1]);
    let factors = multipartite_two_factors(q, s)?;
    amalgamate(&h, &factors, s, t, g)
}

fn ratio(a: usize, b: usize) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Exact check of `d_G/n_G >= s/(n_H - 1)` and `d/n <= (n_H - 1)/n_H · d_G/n_G`,
/// together with the claimed `n = n_H(t + n_G)` and `d = st + (n_H - 1)d_G`.
pub fn ratio_check(params: &AmalgamParams, n: usize, d: usize) -> VerificationReport {
    let started = Instant::now();
    let p = params;
    let hypothesis_lhs = ratio(p.d_g, p.n_g);
    let hypothesis_rhs = ratio(p.s, p.n_h - 1);
    let conclusion_lhs = ratio(d, n);
    let conclusion_rhs = ratio(p.n_h - 1, p.n_h) * ratio(p.d_g, p.n_g);
    let check = |name: &str, lhs: &BigRational, rhs: &BigRational, holds: bool| crate::checkers::InequalityCheck {
        name: name.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        holds,
    };
    let checks = vec![
        check(
            "n = n_H(t + n_G)",
            &BigRational::from_integer(n.into()),
            &BigRational::from_integer(p.order().into()),
            n == p.order(),
        ),
        check(
            "d = st + (n_H - 1)d_G",
            &BigRational::from_integer(d.into()),
            &BigRational::from_integer(p.g_blob_degree().into()),
            d == p.g_blob_degree(),
        ),
        check("d_G/n_G >= s/(n_H - 1)", &hypothesis_lhs, &hypothesis_rhs, hypothesis_lhs >= hypothesis_rhs),
        check("d/n <= (n_H - 1)/n_H * d_G/n_G", &conclusion_lhs, &conclusion_rhs, conclusion_lhs <= conclusion_rhs),
    ];
    let pass = checks.iter().all(|c| c.holds);
    VerificationReport::new(Property::Inequality)
        .param("params", p)
        .param("n", n)
        .param("d", d)
        .finish(pass, Some(Witness::Inequalities { checks }), started)
}

/// One row of an iteration plan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanStep {
    pub i: usize,
    pub n: usize,
    pub d: usize,
    /// The blob size used to build this graph from the previous one.
    pub t: Option<u64>,
    pub ratio_num: u64,
    pub ratio_den: u64,
    /// `(s(q - 1))^{m - i}`; must divide both `n` and `d`.
    pub divisor: String,
    pub divisibility_holds: bool,
    /// `d_i/n_i <= ((s+1)q - 1)/((s+1)q) · d_{i-1}/n_{i-1}` (true for `i = 0`).
    pub ratio_bound_holds: bool,
    /// Saturation verdict once [`verify_plan`] has run.
    pub verified: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Plan {
    pub s: usize,
    pub q: usize,
    pub iterations: usize,
    pub steps: Vec<PlanStep>,
    pub graphs: Vec<Graph>,
    pub orientation: VerificationReport,
}

impl Plan {
    /// Steps as a JSON array of `{i, n, d, t, ratio_num, ratio_den, divisor, verified, ...}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.steps).expect("plan serialises")
    }
}

fn reduced_ratio(d: usize, n: usize) -> (u64, u64) {
    let g = d.gcd(&n).max(1);
    ((d / g) as u64, (n / g) as u64)
}

/// Starts from `F_0 = seed[E_{(s(q-1))^m}]` and sets
/// `F_{i+1} = K_{q,...,q}[s, t_{i+1}, F_i]` with `t` from [`solve_t`].
///
/// The seed must be regular and `K_{s+2}`-saturated and the factors must
/// pass [`verify_orientation_property`]; both are re-checked here.
pub fn iteration_plan(s: usize, q: usize, seed: &Graph, iterations: usize) -> Result<Plan> {
    let kk = build_pattern(PatternKind::Clique(s + 2))?;
    let d_seed = seed
        .regular_degree()
        .ok_or_else(|| Error::Plan {
            step: 0,
            reason: "seed graph is not regular".into(),
        })?;
    let seed_check = is_saturated_with(seed, &kk, CheckMode::Exhaustive);
    if !seed_check.pass {
        return Err(Error::Plan {
            step: 0,
            reason: format!("seed is not {}-saturated: {:?}", kk.name, seed_check.witness),
        });
    }
    let factors = multipartite_two_factors(q, s)?;
    let orientation = verify_orientation_property(&factors)?;
    if !orientation.pass {
        return Err(Error::Plan {
            step: 0,
            reason: format!("orientation property fails for q = {q}, s = {s}: {:?}", orientation.witness),
        });
    }
    let base = s * (q - 1);
    let blow = base
        .checked_pow(iterations as u32)
        .ok_or_else(|| Error::param("blow-up factor overflows"))?;
    let h = patterns::complete_multipartite(&vec![q; s + 1]);
    let (n_h, d_h) = ((s + 1) * q, s * q);

    let f0 = blow_up(seed, &patterns::empty(blow));
    debug_assert_eq!(f0.regular_degree(), Some(d_seed * blow));
    let mut graphs = vec![f0];
    let mut steps = Vec::new();
    let divides = |i: usize, n: usize, d: usize| -> (String, bool) {
        let div = BigInt::from(base).pow((iterations - i) as u32);
        let holds = (BigInt::from(n) % &div).is_zero() && (BigInt::from(d) % &div).is_zero();
        (div.to_string(), holds)
    };
    let (n0, d0) = (graphs[0].order(), d_seed * blow);
    let (divisor, holds) = divides(0, n0, d0);
    let (rn, rd) = reduced_ratio(d0, n0);
    steps.push(PlanStep {
        i: 0,
        n: n0,
        d: d0,
        t: None,
        ratio_num: rn,
        ratio_den: rd,
        divisor,
        divisibility_holds: holds,
        ratio_bound_holds: true,
        verified: None,
    });

    for i in 1..=iterations {
        let prev = &steps[i - 1];
        let (n_prev, d_prev) = (prev.n, prev.d);
        let sol = solve_t(n_h, d_h, n_prev, d_prev, s)?;
        let t = sol.t.ok_or_else(|| Error::Plan {
            step: i,
            reason: format!("t = {}/{} is not a positive integer", sol.numerator, sol.denominator),
        })? as usize;
        let params = AmalgamParams {
            s,
            t,
            n_h,
            d_h,
            n_g: n_prev,
            d_g: d_prev,
        };
        if !params.is_regular() {
            return Err(Error::Plan {
                step: i,
                reason: "solved t does not balance the blob degrees".into(),
            });
        }
        let next = amalgamate(&h, &factors, s, t, &graphs[i - 1])?.graph;
        let (n, d) = (params.order(), params.g_blob_degree());
        debug_assert_eq!(next.order(), n);
        let (divisor, holds) = divides(i, n, d);
        let factor = ratio(n_h - 1, n_h);
        let ratio_bound_holds = ratio(d, n) <= factor * ratio(d_prev, n_prev);
        let (rn, rd) = reduced_ratio(d, n);
        steps.push(PlanStep {
            i,
            n,
            d,
            t: Some(t as u64),
            ratio_num: rn,
            ratio_den: rd,
            divisor,
            divisibility_holds: holds,
            ratio_bound_holds,
            verified: None,
        });
        graphs.push(next);
    }
    Ok(Plan {
        s,
        q,
        iterations,
        steps,
        graphs,
        orientation,
    })
}

/// Runs regularity and `K_{s+2}`-saturation on every `F_i` and records the
/// verdicts in the plan.
pub fn verify_plan(plan: &mut Plan, mode: CheckMode) -> Result<Vec<VerificationReport>> {
    let kk = build_pattern(PatternKind::Clique(plan.s + 2))?;
    let mut reports = Vec::new();
    for (step, g) in plan.steps.iter_mut().zip(&plan.graphs) {
        let r = is_saturated_with(g, &kk, mode);
        step.verified = Some(r.pass && g.regular_degree() == Some(step.d));
        reports.push(r);
    }
    Ok(reports)
}
