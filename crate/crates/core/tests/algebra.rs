//! Root systems and Chevalley algebras against classical numerology.

use lie_orbits::chevalley::ChevalleyAlgebra;
use lie_orbits::linalg::q;
use lie_orbits::rootsys::{CartanType, Family, RootSystem};
use lie_orbits::suites::fixtures::random_element;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ty(s: &str) -> CartanType {
    s.parse().unwrap()
}

/// Coxeter number.
fn coxeter(t: CartanType) -> usize {
    let l = t.rank;
    match t.family {
        Family::A => l + 1,
        Family::B | Family::C => 2 * l,
        Family::D => 2 * l - 2,
        Family::E => [12, 18, 30][l - 6],
        Family::F => 12,
        Family::G => 6,
    }
}

/// Dual Coxeter number.
fn dual_coxeter(t: CartanType) -> usize {
    let l = t.rank;
    match t.family {
        Family::A => l + 1,
        Family::B => 2 * l - 1,
        Family::C => l + 1,
        Family::D => 2 * l - 2,
        Family::E => [12, 18, 30][l - 6],
        Family::F => 9,
        Family::G => 4,
    }
}

const TYPES: [&str; 16] = [
    "A1", "A2", "A3", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7",
];

#[test]
fn positive_root_count_is_rank_times_half_coxeter() {
    for s in TYPES.iter().chain(&["E8"]) {
        let t = ty(s);
        let rs = RootSystem::new(t).unwrap();
        assert_eq!(rs.num_positive() * 2, t.rank * coxeter(t), "{s}");
        assert_eq!(rs.highest_root().height() as usize + 1, coxeter(t), "{s}");
    }
}

#[test]
fn killing_on_highest_root_pair_is_twice_dual_coxeter() {
    for s in TYPES {
        let t = ty(s);
        let g = ChevalleyAlgebra::from_type(t).unwrap();
        let rs = g.root_system();
        let x = g.highest_root_vector();
        let y = g.x_root(&rs.highest_root().neg()).unwrap();
        let want = q(2 * dual_coxeter(t) as i64);
        assert_eq!(g.killing_trace(&x, &y), want, "{s}");
        assert_eq!(g.killing(&x, &y), want, "{s}");
    }
}

#[test]
fn minimal_orbit_dimension_is_twice_dual_coxeter_minus_two() {
    for s in TYPES {
        let t = ty(s);
        let g = ChevalleyAlgebra::from_type(t).unwrap();
        let d = g.orbit_dimension(&g.highest_root_vector()).unwrap();
        assert_eq!(d, 2 * dual_coxeter(t) - 2, "{s}");
    }
}

#[test]
fn weyl_reflections_permute_roots() {
    for s in ["B3", "C3", "G2", "F4", "D4"] {
        let rs = RootSystem::new(ty(s)).unwrap();
        for r in rs.roots() {
            for i in 0..rs.rank() {
                let w = rs.reflect(r, i);
                assert!(rs.is_root(&w.0), "{s}: s_{i}({r}) = {w}");
                assert_eq!(rs.norm2(&w), rs.norm2(r));
            }
        }
    }
}

fn algebras() -> Vec<ChevalleyAlgebra> {
    ["A2", "B2", "C3", "G2", "B3"]
        .iter()
        .map(|s| ChevalleyAlgebra::from_type(ty(s)).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_identities(seed in any::<u64>(), which in 0usize..5) {
        let algs = algebras();
        let g = &algs[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(g, &mut rng);
        let b = random_element(g, &mut rng);
        let c = random_element(g, &mut rng);
        // Antisymmetry.
        prop_assert_eq!(g.bracket(&a, &b).unwrap(), -&g.bracket(&b, &a).unwrap());
        // Jacobi.
        let j = &(&g.bracket(&a, &g.bracket(&b, &c).unwrap()).unwrap()
            + &g.bracket(&b, &g.bracket(&c, &a).unwrap()).unwrap())
            + &g.bracket(&c, &g.bracket(&a, &b).unwrap()).unwrap();
        prop_assert!(j.is_zero());
        // Killing form: both routes, symmetry, invariance.
        prop_assert_eq!(g.killing(&a, &b), g.killing_trace(&a, &b));
        prop_assert_eq!(g.killing(&a, &b), g.killing(&b, &a));
        prop_assert_eq!(
            g.killing(&g.bracket(&a, &b).unwrap(), &c),
            g.killing(&a, &g.bracket(&b, &c).unwrap())
        );
    }

    #[test]
    fn centralizer_is_kernel_of_ad(seed in any::<u64>(), which in 0usize..5) {
        let algs = algebras();
        let g = &algs[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_element(g, &mut rng);
        let z = g.centralizer(&a);
        prop_assert_eq!(z.len(), g.centralizer_dim(&a));
        for v in &z {
            prop_assert!(g.bracket(&a, v).unwrap().is_zero());
        }
        // The centralizer of any element has dimension at least the rank.
        prop_assert!(z.len() >= g.rank());
    }
}
