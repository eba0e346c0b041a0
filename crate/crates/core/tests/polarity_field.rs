use proptest::prelude::*;

use regsat::polarity::{
    all_ones_index, expected_absolute_points, oversaturated_family, polarity_graph, twin_augmented_polarity,
    GaloisField,
};

#[test]
fn field_axioms_exhaustive_small() {
    for p in 1..=4 {
        let f = GaloisField::new(p).unwrap();
        let els: Vec<_> = f.elements().collect();
        for &x in &els {
            assert_eq!(f.add(x, x), f.zero());
            assert_eq!(f.mul(x, f.one()), x);
            for &y in &els {
                assert_eq!(f.mul(x, y), f.mul(y, x));
                for &z in &els {
                    assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                    assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn field_axioms_sampled(p in 5u32..=8, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = GaloisField::new(p).unwrap();
        let m = (1u32 << p) - 1;
        let (x, y, z) = (f.elem(a & m).unwrap(), f.elem(b & m).unwrap(), f.elem(c & m).unwrap());
        prop_assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        if x != f.zero() {
            prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
        }
        // Frobenius: squaring is additive in characteristic 2.
        prop_assert_eq!(f.pow(f.add(x, y), 2), f.add(f.pow(x, 2), f.pow(y, 2)));
    }
}

#[test]
fn multiplicative_group_is_cyclic_of_right_order() {
    for p in 1..=8 {
        let f = GaloisField::new(p).unwrap();
        for x in f.elements().skip(1) {
            assert_eq!(f.pow(x, (1 << p) - 1), f.one());
        }
    }
}

#[test]
fn absolute_points_and_diameter() {
    for p in 2..=4 {
        let pg = polarity_graph(p).unwrap();
        assert_eq!(pg.absolute_points, expected_absolute_points(p));
        assert!(pg.absolute_matches_expected);
        let q = 1usize << p;
        let g = &pg.graph.graph;
        for v in 0..g.order() {
            let want = if pg.absolute_points.contains(&v) { q } else { q + 1 };
            assert_eq!(g.degree(v), want);
        }
        assert_eq!(g.diameter(), Some(2));
        // The absolute points are exactly the neighbours of (1,1,1).
        let nbrs: Vec<usize> = g.neighbors(all_ones_index(p)).collect();
        assert_eq!(nbrs, pg.absolute_points);
    }
}

#[test]
fn labels() {
    let g = twin_augmented_polarity(2).unwrap();
    let map = g.label_map();
    assert!(map.starts_with("0 1 0 0\n"));
    assert!(map.contains("\n5 1 1 1\n"));
    assert!(map.ends_with("21 twin\n"));
    assert!(polarity_graph(9).is_err());
    assert!(oversaturated_family(2, 0).is_err());
}

#[test]
fn twin_augmented_diameter() {
    let g = twin_augmented_polarity(3).unwrap().graph;
    assert_eq!((g.order(), g.regular_degree(), g.diameter()), (74, Some(9), Some(2)));
}
