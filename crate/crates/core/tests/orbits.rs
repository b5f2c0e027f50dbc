//! Dynkin gradings and the partition calculus checked against each other.

use lie_orbits::chevalley::ChevalleyAlgebra;
use lie_orbits::dynkin::{self, WeightedDiagram};
use lie_orbits::partitions::{enumerate_orbits, ClassicalType, JordanOrbit, OrbitPoset};
use lie_orbits::suites::orbit_diagrams;
use proptest::prelude::*;

fn alg(s: &str) -> ChevalleyAlgebra {
    ChevalleyAlgebra::from_type(s.parse().unwrap()).unwrap()
}

fn ct(s: &str) -> ClassicalType {
    ClassicalType::new(s.parse().unwrap()).unwrap()
}

/// Number of nilpotent orbits (zero orbit included).
const ORBIT_COUNTS: [(&str, usize); 8] = [
    ("A3", 5),
    ("B2", 4),
    ("B3", 7),
    ("C3", 8),
    ("D4", 12),
    ("G2", 5),
    ("F4", 16),
    ("A4", 7),
];

#[test]
fn exhaustive_diagram_search_finds_every_orbit() {
    for (t, count) in ORBIT_COUNTS {
        let g = alg(t);
        let found = orbit_diagrams(&g).unwrap();
        assert_eq!(found.len() + 1, count, "{t}");
        if let Ok(c) = ClassicalType::new(g.cartan_type()) {
            let mut from_partitions: Vec<WeightedDiagram> = enumerate_orbits(c)
                .iter()
                .filter(|o| !o.is_zero())
                .map(JordanOrbit::weighted_diagram)
                .collect();
            from_partitions.sort();
            let mut found = found.clone();
            found.sort();
            assert_eq!(found, from_partitions, "{t}");
        }
    }
}

#[test]
fn partition_dimension_matches_generic_element() {
    for t in ["A3", "B3", "C3", "D4", "C2", "B4"] {
        let g = alg(t);
        for o in enumerate_orbits(ct(t)).iter().filter(|o| !o.is_zero()) {
            let wd = o.weighted_diagram();
            let gr = dynkin::grading_from_diagram(&g, &wd).unwrap();
            let triple = dynkin::generic_element(&g, &gr).unwrap();
            assert!(triple.verify(&g).unwrap());
            let by_centralizer = g.orbit_dimension(&triple.n0).unwrap();
            let by_grading = g.dim() - gr.dim_piece(0) - gr.dim_piece(1);
            assert_eq!(o.orbit_dim(), by_centralizer, "{t} {o}");
            assert_eq!(o.orbit_dim(), by_grading, "{t} {o}");
        }
    }
}

#[test]
fn weighted_diagrams_are_injective() {
    for t in ["A5", "B4", "C4", "D4", "D5"] {
        let orbits = enumerate_orbits(ct(t));
        let mut diagrams: Vec<_> = orbits.iter().map(|o| o.weighted_diagram()).collect();
        diagrams.sort();
        diagrams.dedup();
        assert_eq!(diagrams.len(), orbits.len(), "{t}");
    }
}

#[test]
fn closure_order_strictly_increases_dimension() {
    for t in ["A4", "B3", "C4", "D4", "D5"] {
        let p = OrbitPoset::new(ct(t));
        for (i, j) in p.edges() {
            let (a, b) = (&p.orbits()[i], &p.orbits()[j]);
            assert!(b.orbit_dim() >= a.orbit_dim() + 2, "{t}: {a} < {b}");
        }
    }
}

#[test]
fn root_vector_orbits_by_length() {
    // Long root vectors lie in the minimal orbit, short ones in one other orbit.
    for t in ["B3", "C3", "G2", "F4"] {
        let g = alg(t);
        let rs = g.root_system();
        let min = dynkin::minimal_orbit_diagram(&g);
        let mut short = Vec::new();
        for r in rs.positive_roots() {
            let d = dynkin::diagram_of_root_vector_orbit(&g, r).unwrap();
            if rs.is_long(r) {
                assert_eq!(d, min, "{t} {r}");
            } else {
                short.push(d);
            }
        }
        short.dedup();
        assert_eq!(short.len(), 1, "{t}");
    }
}

fn leq(a: &[u32], b: &[u32]) -> bool {
    let (mut x, mut y) = (0, 0);
    for i in 0..a.len().max(b.len()) {
        x += a.get(i).copied().unwrap_or(0);
        y += b.get(i).copied().unwrap_or(0);
        if x > y {
            return false;
        }
    }
    true
}

proptest! {
    #[test]
    fn dominance_is_a_partial_order(i in 0usize..30, j in 0usize..30, k in 0usize..30) {
        let orbits = enumerate_orbits(ct("A6"));
        let n = orbits.len();
        let (a, b, c) = (&orbits[i % n], &orbits[j % n], &orbits[k % n]);
        prop_assert!(a.closure_leq(a));
        if a.closure_leq(b) && b.closure_leq(a) {
            prop_assert_eq!(a, b);
        }
        if a.closure_leq(b) && b.closure_leq(c) {
            prop_assert!(a.closure_leq(c));
        }
        prop_assert_eq!(a.closure_leq(b), leq(a.parts(), b.parts()));
        if a.closure_leq(b) && a != b {
            prop_assert!(a.orbit_dim() < b.orbit_dim());
        }
    }

    #[test]
    fn dual_partition_is_an_involution(i in 0usize..200) {
        let orbits = enumerate_orbits(ct("A7"));
        let o = &orbits[i % orbits.len()];
        let dual = JordanOrbit::new(ct("A7"), o.dual_parts(), None).unwrap();
        prop_assert_eq!(dual.dual_parts(), o.parts().to_vec());
        // Dualizing reverses dominance.
        let m = &orbits[(i * 7 + 3) % orbits.len()];
        let mdual = JordanOrbit::new(ct("A7"), m.dual_parts(), None).unwrap();
        prop_assert_eq!(o.closure_leq(m), mdual.closure_leq(&dual));
    }
}
