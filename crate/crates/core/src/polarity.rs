//! `GF(2^p)` arithmetic and the orthogonality polarity graph on the points of
//! the projective plane over it.
//!
//! Points are normalised so the first non-zero coordinate is 1 and indexed as
//! `(1, x, y) ↦ x·q + y`, `(0, 1, y) ↦ q² + y`, `(0, 0, 1) ↦ q² + q`, where
//! `q = 2^p` and field elements are their bit patterns.

use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use crate::constructions::{blow_up, LabeledGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::patterns;

/// Irreducible polynomials over `GF(2)`, bit `i` is the coefficient of `x^i`.
const MODULI: [u32; 17] = [
    0,
    0b11,
    0b111,
    0b1011,
    0b1_0011,
    0b10_0101,
    0b100_0011,
    0b1000_0011,
    0b1_0001_1011,
    0b10_0001_0001,
    0b100_0000_1001,
    0b1000_0000_0101,
    0b1_0000_0101_0011,
    0b10_0000_0001_1011,
    0b100_0100_0100_0011,
    0b1000_0000_0000_0011,
    0b1_0001_0000_0000_1011,
];

/// The field `GF(2^p)` for `1 <= p <= 16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaloisField {
    p: u32,
    modulus: u32,
}

/// An element of some `GF(2^p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElem {
    pub p: u32,
    pub bits: u32,
}

impl GaloisField {
    pub fn new(p: u32) -> Result<Self> {
        if !(1..=16).contains(&p) {
            return Err(Error::param(format!("field degree p = {p} outside [1, 16]")));
        }
        Ok(GaloisField {
            p,
            modulus: MODULI[p as usize],
        })
    }

    pub fn degree(&self) -> u32 {
        self.p
    }

    pub fn size(&self) -> usize {
        1 << self.p
    }

    /// The reduction polynomial.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn elem(&self, bits: u32) -> Result<FieldElem> {
        if (bits as usize) >= self.size() {
            return Err(Error::param(format!("{bits:#x} is not an element of GF(2^{})", self.p)));
        }
        Ok(FieldElem { p: self.p, bits })
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { p: self.p, bits: 0 }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem { p: self.p, bits: 1 }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.size() as u32).map(|bits| FieldElem { p: self.p, bits })
    }

    pub fn add(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        FieldElem {
            p: self.p,
            bits: x.bits ^ y.bits,
        }
    }

    pub fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        FieldElem {
            p: self.p,
            bits: self.mul_bits(x.bits, y.bits),
        }
    }

    fn mul_bits(&self, mut a: u32, mut b: u32) -> u32 {
        let top = 1u32 << self.p;
        let mut acc = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }

    pub fn pow(&self, x: FieldElem, mut e: u64) -> FieldElem {
        let mut base = x.bits;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_bits(acc, base);
            }
            base = self.mul_bits(base, base);
            e >>= 1;
        }
        FieldElem { p: self.p, bits: acc }
    }

    /// `x^(2^p - 2)`.
    pub fn inv(&self, x: FieldElem) -> Result<FieldElem> {
        if x.bits == 0 {
            return Err(Error::param("zero has no inverse"));
        }
        Ok(self.pow(x, (1u64 << self.p) - 2))
    }

    fn div_bits(&self, a: u32, b: u32) -> u32 {
        let inv = self.pow(FieldElem { p: self.p, bits: b }, (1u64 << self.p) - 2);
        self.mul_bits(a, inv.bits)
    }
}

/// A normalised point `(a, b, c)` of `PG(2, 2^p)`, stored as bit patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjectivePoint {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl ProjectivePoint {
    pub fn index(&self, q: usize) -> usize {
        let (b, c) = (self.b as usize, self.c as usize);
        match (self.a, self.b) {
            (0, 0) => q * q + q,
            (0, _) => q * q + c,
            _ => b * q + c,
        }
    }

    pub fn from_index(i: usize, q: usize) -> Self {
        if i < q * q {
            ProjectivePoint {
                a: 1,
                b: (i / q) as u32,
                c: (i % q) as u32,
            }
        } else if i < q * q + q {
            ProjectivePoint {
                a: 0,
                b: 1,
                c: (i - q * q) as u32,
            }
        } else {
            ProjectivePoint { a: 0, b: 0, c: 1 }
        }
    }

    pub fn label(&self) -> String {
        format!("{:x} {:x} {:x}", self.a, self.b, self.c)
    }
}

/// Number of points `q² + q + 1`.
pub fn point_count(p: u32) -> usize {
    let q = 1usize << p;
    q * q + q + 1
}

fn dot(f: &GaloisField, x: ProjectivePoint, y: ProjectivePoint) -> u32 {
    f.mul_bits(x.a, y.a) ^ f.mul_bits(x.b, y.b) ^ f.mul_bits(x.c, y.c)
}

/// Indices of all points `X` with `P·X = 0`, including `P` itself when `P`
/// is absolute.
fn line_points(f: &GaloisField, pt: ProjectivePoint) -> Vec<usize> {
    let q = f.size();
    let (a, b, c) = (pt.a, pt.b, pt.c);
    let mut out = Vec::with_capacity(q + 1);
    // (1, x, y): a + b·x + c·y = 0
    if c != 0 {
        for x in 0..q as u32 {
            let y = f.div_bits(a ^ f.mul_bits(b, x), c);
            out.push(x as usize * q + y as usize);
        }
    } else if b != 0 {
        let x = f.div_bits(a, b) as usize;
        out.extend((0..q).map(|y| x * q + y));
    }
    // (0, 1, y): b + c·y = 0
    if c != 0 {
        out.push(q * q + f.div_bits(b, c) as usize);
    } else if b == 0 {
        out.extend((0..q).map(|y| q * q + y));
    }
    // (0, 0, 1): c = 0
    if c == 0 {
        out.push(q * q + q);
    }
    out
}

/// The polarity graph together with its absolute points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarityGraph {
    pub p: u32,
    pub field: GaloisField,
    pub graph: LabeledGraph,
    /// Indices of the self-orthogonal points, ascending.
    pub absolute_points: Vec<usize>,
    /// Whether the absolute points are exactly `{(1, x, 1+x)} ∪ {(0, 1, 1)}`.
    pub absolute_matches_expected: bool,
}

/// `{(1, x, 1 + x) : x ∈ GF(2^p)} ∪ {(0, 1, 1)}` as sorted indices.
pub fn expected_absolute_points(p: u32) -> Vec<usize> {
    let q = 1usize << p;
    let mut v: Vec<usize> = (0..q).map(|x| x * q + (x ^ 1)).collect();
    v.push(q * q + 1);
    v.sort_unstable();
    v
}

fn polarity_range(p: u32) -> Result<GaloisField> {
    if !(1..=8).contains(&p) {
        return Err(Error::param(format!("polarity graphs need 1 <= p <= 8, got {p}")));
    }
    GaloisField::new(p)
}

/// Points of `PG(2, 2^p)`, adjacent when orthogonal; no loops.
pub fn polarity_graph(p: u32) -> Result<PolarityGraph> {
    let field = polarity_range(p)?;
    let q = field.size();
    let n = point_count(p);
    let mut b = GraphBuilder::new(n);
    let mut absolute_points = Vec::new();
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let pt = ProjectivePoint::from_index(i, q);
        labels.push(pt.label());
        if dot(&field, pt, pt) == 0 {
            absolute_points.push(i);
        }
        for j in line_points(&field, pt) {
            if j > i {
                b.add_edge(i, j);
            }
        }
    }
    let absolute_matches_expected = absolute_points == expected_absolute_points(p);
    Ok(PolarityGraph {
        p,
        field,
        graph: LabeledGraph {
            graph: b.build(),
            labels,
        },
        absolute_points,
        absolute_matches_expected,
    })
}

/// Index of `(1, 1, 1)`.
pub fn all_ones_index(p: u32) -> usize {
    let q = 1usize << p;
    q + 1
}

/// The polarity graph plus a twin of `(1, 1, 1)`: a new last vertex adjacent
/// to exactly the neighbours of `(1, 1, 1)`, which are the absolute points.
pub fn twin_augmented_polarity(p: u32) -> Result<LabeledGraph> {
    let pg = polarity_graph(p)?;
    let base = pg.graph.graph;
    let n = base.order();
    let mut b = GraphBuilder::new(n + 1);
    for (u, v) in base.edges() {
        b.add_edge(u, v);
    }
    for u in base.neighbors(all_ones_index(p)) {
        b.add_edge(u, n);
    }
    let mut labels = pg.graph.labels;
    labels.push("twin".to_string());
    Ok(LabeledGraph {
        graph: b.build(),
        labels,
    })
}

/// `G[K_t]` for the twin-augmented polarity graph `G`; regular of degree
/// `t(2^p + 1) + t - 1` on `t(2^{2p} + 2^p + 2)` vertices.
pub fn oversaturated_family(p: u32, t: usize) -> Result<LabeledGraph> {
    if t == 0 {
        return Err(Error::param("t must be at least 1"));
    }
    let base = twin_augmented_polarity(p)?;
    if t == 1 {
        return Ok(base);
    }
    let graph = blow_up(&base.graph, &patterns::complete(t));
    let labels = base
        .labels
        .iter()
        .flat_map(|l| (0..t).map(move |i| format!("{l} #{i}")))
        .collect();
    Ok(LabeledGraph { graph, labels })
}

/// `e(G)/n^{3/2}`: the exact square `e²/n³` and its square root.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeDensity {
    pub edges: usize,
    pub order: usize,
    pub squared: String,
    pub value: f64,
}

pub fn edge_density(g: &Graph) -> EdgeDensity {
    let (e, n) = (g.edge_count(), g.order());
    let sq = BigRational::new(BigInt::from(e) * BigInt::from(e), BigInt::from(n) * BigInt::from(n) * BigInt::from(n));
    EdgeDensity {
        edges: e,
        order: n,
        squared: sq.to_string(),
        value: e as f64 / (n as f64).powf(1.5),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Remainder of a by m over GF(2)[x], by schoolbook long division.
    fn poly_rem(mut a: u64, m: u64) -> u64 {
        let dm = 63 - m.leading_zeros();
        while a != 0 && 63 - a.leading_zeros() >= dm {
            a ^= m << (63 - a.leading_zeros() - dm);
        }
        a
    }

    fn clmul(a: u64, b: u64) -> u64 {
        (0..32).filter(|i| b >> i & 1 == 1).fold(0, |acc, i| acc ^ (a << i))
    }

    #[test]
    fn moduli_are_irreducible() {
        for p in 1..=16u32 {
            let m = MODULI[p as usize] as u64;
            assert_eq!(63 - m.leading_zeros(), p);
            for d in 2u64..(1 << (p / 2 + 1)) {
                assert_ne!(poly_rem(m, d), 0, "p = {p} divisible by {d:#b}");
            }
        }
    }

    #[test]
    fn mul_matches_long_division() {
        for p in 1..=6 {
            let f = GaloisField::new(p).unwrap();
            for x in f.elements() {
                for y in f.elements() {
                    let want = poly_rem(clmul(x.bits as u64, y.bits as u64), f.modulus() as u64) as u32;
                    assert_eq!(f.mul(x, y).bits, want);
                }
            }
        }
        let f = GaloisField::new(2).unwrap();
        assert_eq!(f.mul(f.elem(2).unwrap(), f.elem(2).unwrap()).bits, 3);
    }

    #[test]
    fn inverses() {
        for p in 1..=8 {
            let f = GaloisField::new(p).unwrap();
            for x in f.elements().skip(1) {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
            }
            assert!(f.inv(f.zero()).is_err());
        }
        assert!(GaloisField::new(0).is_err());
        assert!(GaloisField::new(17).is_err());
    }

    #[test]
    fn index_round_trip() {
        let q = 8;
        for i in 0..point_count(3) {
            assert_eq!(ProjectivePoint::from_index(i, q).index(q), i);
        }
    }

    #[test]
    fn lines_match_brute_force() {
        for p in 1..=3 {
            let f = GaloisField::new(p).unwrap();
            let q = f.size();
            for i in 0..point_count(p) {
                let pt = ProjectivePoint::from_index(i, q);
                let mut fast = line_points(&f, pt);
                fast.sort_unstable();
                let slow: Vec<usize> = (0..point_count(p))
                    .filter(|&j| dot(&f, pt, ProjectivePoint::from_index(j, q)) == 0)
                    .collect();
                assert_eq!(fast, slow);
                assert_eq!(fast.len(), q + 1);
            }
        }
    }

    #[test]
    fn p2_graph() {
        let pg = polarity_graph(2).unwrap();
        let g = &pg.graph.graph;
        assert_eq!(g.order(), 21);
        assert_eq!(g.degree_summary().profile(), vec![(4, 5), (5, 16)]);
        assert!(pg.absolute_matches_expected);
        assert_eq!(g.diameter(), Some(2));
    }

    #[test]
    fn p3_degrees() {
        let pg = polarity_graph(3).unwrap();
        assert_eq!(pg.graph.graph.degree_summary().profile(), vec![(8, 9), (9, 64)]);
    }

    #[test]
    fn twin_is_regular() {
        for p in 1..=5 {
            let g = twin_augmented_polarity(p).unwrap();
            let q = 1usize << p;
            assert_eq!(g.graph.order(), q * q + q + 2);
            assert_eq!(g.graph.regular_degree(), Some(q + 1));
            assert_eq!(g.labels.last().map(String::as_str), Some("twin"));
            assert!(!g.graph.has_edge(all_ones_index(p), q * q + q + 1));
        }
    }

    #[test]
    fn blow_up_degrees() {
        let g = oversaturated_family(2, 2).unwrap().graph;
        assert_eq!((g.order(), g.regular_degree()), (44, Some(11)));
        let g = oversaturated_family(3, 2).unwrap().graph;
        assert_eq!((g.order(), g.regular_degree()), (148, Some(19)));
        assert_eq!(oversaturated_family(3, 1).unwrap(), twin_augmented_polarity(3).unwrap());
    }

    #[test]
    fn density_p2() {
        let d = edge_density(&twin_augmented_polarity(2).unwrap().graph);
        assert_eq!(d.edges, 55);
        assert_eq!(d.squared, "25/88");
        assert!((d.value - 0.533).abs() < 0.001);
    }
}
