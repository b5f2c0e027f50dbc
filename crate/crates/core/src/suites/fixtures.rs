//! Seeded pseudo-random elements used by the property suites.

use rand::Rng;

use crate::chevalley::{ChevalleyAlgebra, LieElement};
use crate::dynkin::Grading;
use crate::linalg::{q, SparseVec};
use crate::Error;

fn nonzero_coeff<R: Rng>(rng: &mut R) -> i64 {
    let c = rng.gen_range(1..=4);
    if rng.gen_bool(0.5) {
        c
    } else {
        -c
    }
}

/// Random integer combination of the given basis vectors, each present with
/// probability `density`; never zero when `indices` is nonempty.
pub fn random_combination<R: Rng>(
    alg: &ChevalleyAlgebra,
    indices: &[usize],
    density: f64,
    rng: &mut R,
) -> LieElement {
    if indices.is_empty() {
        return alg.zero();
    }
    let mut coeffs = SparseVec::new();
    for &k in indices {
        if rng.gen_bool(density) {
            coeffs.insert(k, q(nonzero_coeff(rng)));
        }
    }
    if coeffs.is_empty() {
        let k = indices[rng.gen_range(0..indices.len())];
        coeffs.insert(k, q(nonzero_coeff(rng)));
    }
    alg.element(coeffs)
}

pub fn random_element<R: Rng>(alg: &ChevalleyAlgebra, rng: &mut R) -> LieElement {
    let all: Vec<usize> = (0..alg.dim()).collect();
    random_combination(alg, &all, 0.3, rng)
}

fn positive_indices(alg: &ChevalleyAlgebra) -> Vec<usize> {
    (0..alg.root_system().num_positive()).collect()
}

fn negative_indices(alg: &ChevalleyAlgebra) -> Vec<usize> {
    (alg.root_system().num_positive()..alg.num_roots()).collect()
}

fn cartan_indices(alg: &ChevalleyAlgebra) -> Vec<usize> {
    (0..alg.rank()).map(|i| alg.h_index(i)).collect()
}

/// `exp(ad v)(x)` with `x` in the positive nilradical and `v` in the
/// negative one: nilpotent, and usually not inside either nilradical.
pub fn nilpotent_fixture<R: Rng>(alg: &ChevalleyAlgebra, rng: &mut R) -> Result<LieElement, Error> {
    let x = random_combination(alg, &positive_indices(alg), 0.5, rng);
    let v = random_combination(alg, &negative_indices(alg), 0.3, rng);
    alg.exp_ad(&v, &x)
}

/// A conjugate of a nonzero Cartan element, or `X_a + X_{-a}`.
pub fn semisimple_fixture<R: Rng>(alg: &ChevalleyAlgebra, rng: &mut R) -> Result<LieElement, Error> {
    if rng.gen_bool(0.25) {
        let a = rng.gen_range(0..alg.root_system().num_positive());
        let x = alg.x(a);
        let y = alg.x(alg.root_system().neg_index(a));
        return Ok(&x + &y);
    }
    let h = random_combination(alg, &cartan_indices(alg), 0.7, rng);
    let u = random_combination(alg, &positive_indices(alg), 0.3, rng);
    alg.exp_ad(&u, &h)
}

/// Random element of `n` whose `P`-orbit is open in `n`, certified by
/// `[p, N] = n`; `None` if `attempts` draws all miss.
pub fn open_orbit_element<R: Rng>(
    alg: &ChevalleyAlgebra,
    grading: &Grading,
    attempts: usize,
    rng: &mut R,
) -> Result<Option<LieElement>, Error> {
    let n = grading.n();
    if n.is_empty() {
        return Ok(None);
    }
    for _ in 0..attempts {
        let x = random_combination(alg, &n, 1.0, rng);
        let mut images = Vec::new();
        for k in grading.p() {
            images.push(alg.bracket(&alg.basis(k), &x)?.coeffs().clone());
        }
        if crate::linalg::rank(&images) == n.len() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}
