//! Nilpotency characterizations, the centralizer test, the kernel of the
//! form `omega_N` and the pairing criterion `[N, g(-2)] -> g(0)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Grading;
use crate::chevalley::{ChevalleyAlgebra, LieElement};
use crate::linalg::{kernel_of_rows, q, solve_rows, SparseMatrix, SparseVec, Q};
use crate::Error;

/// The three nilpotency tests applied to one element.
#[derive(Clone, Debug, Serialize)]
pub struct NilpotencyReport {
    /// Some `H` satisfies `[H, N] = N`.
    pub homothety_solvable: bool,
    /// `kappa(z, N) = 0` for every `z` centralizing `N`.
    pub centralizer_orthogonal: bool,
    /// `ad N` is a nilpotent matrix.
    pub ad_nilpotent: bool,
}

impl NilpotencyReport {
    pub fn is_nilpotent(&self) -> bool {
        self.ad_nilpotent
    }
}

/// Runs the three tests on `n` and errors if they disagree.
pub fn nilpotency_report(
    alg: &ChevalleyAlgebra,
    n: &LieElement,
) -> Result<NilpotencyReport, Error> {
    let ad = alg.ad_matrix(n);
    // [H, N] = N  <=>  ad(N) H = -N.
    let rhs: Vec<Q> = (0..alg.dim()).map(|k| -n.coeff(k)).collect();
    let homothety_solvable = solve_rows(&ad.rows(), &rhs, alg.dim()).is_some();
    let centralizer_orthogonal = alg
        .centralizer(n)
        .iter()
        .all(|z| alg.killing(z, n) == q(0));
    let ad_nilpotent = ad.nilpotency_index().is_some();
    let report = NilpotencyReport {
        homothety_solvable,
        centralizer_orthogonal,
        ad_nilpotent,
    };
    if homothety_solvable != ad_nilpotent || centralizer_orthogonal != ad_nilpotent {
        return Err(Error::Inconsistent(format!(
            "nilpotency tests disagree: {report:?}"
        )));
    }
    Ok(report)
}

/// First centralizer basis vector of `N` outside `n_perp`, if any.
///
/// The centralizer test holds at `N` exactly when this returns `None`.
pub fn key_lemma_violation(
    alg: &ChevalleyAlgebra,
    grading: &Grading,
    n: &LieElement,
) -> Result<Option<LieElement>, Error> {
    if !grading.in_n(n) {
        return Err(Error::NotInSubspace("n"));
    }
    Ok(alg
        .centralizer(n)
        .into_iter()
        .find(|z| !grading.in_n_perp(z)))
}

/// Whether the centralizer of `N in n` lies in `n_perp`.
pub fn key_lemma_check(
    alg: &ChevalleyAlgebra,
    grading: &Grading,
    n: &LieElement,
) -> Result<bool, Error> {
    Ok(key_lemma_violation(alg, grading, n)?.is_none())
}

/// `dim (ker omega_N / p)` where `omega_N(X, Y) = kappa(N, [X, Y])` on `n_perp`.
///
/// `X in n_perp` is in the kernel iff `[N, X]` is orthogonal to `n_perp`,
/// i.e. iff `[N, X]` has no component of degree below 2.
pub fn omega_kernel_dim(
    alg: &ChevalleyAlgebra,
    grading: &Grading,
    n: &LieElement,
) -> Result<usize, Error> {
    if !grading.in_n(n) {
        return Err(Error::NotInSubspace("n"));
    }
    let unknowns = grading.n_perp();
    let cols: Vec<SparseVec> = unknowns
        .iter()
        .map(|&k| {
            alg.bracket(n, &alg.basis(k)).map(|e| {
                e.coeffs()
                    .iter()
                    .filter(|(&i, _)| grading.degree_of(i) < 2)
                    .map(|(&i, c)| (i, c.clone()))
                    .collect()
            })
        })
        .collect::<Result<_, _>>()?;
    let m = SparseMatrix::from_columns(alg.dim(), cols);
    let kernel = unknowns.len() - m.rank();
    let p = grading.p().len();
    kernel
        .checked_sub(p)
        .ok_or_else(|| Error::Inconsistent("kernel of omega_N misses p".into()))
}

/// Outcome of the pairing criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairingVerdict {
    /// Proven for every nonzero `N in g(2)`.
    Holds,
    /// `N in g(2)` and `Q in g(-2)`, both nonzero, with `[N, Q] = 0`.
    FailsWithWitness { n: LieElement, q: LieElement },
    /// No witness found among structured candidates and random samples.
    ProbabilisticHolds { samples: usize, seed: u64 },
}

impl PairingVerdict {
    pub fn holds(&self) -> bool {
        !matches!(self, PairingVerdict::FailsWithWitness { .. })
    }
}

pub const DEFAULT_PAIRING_SEED: u64 = 0x9a12_2026;
pub const DEFAULT_PAIRING_SAMPLES: usize = 1000;

/// Nonzero `Q in g(-2)` with `[N, Q] = 0`, if one exists.
fn annihilated_partner(
    alg: &ChevalleyAlgebra,
    grading: &Grading,
    n: &LieElement,
) -> Result<Option<LieElement>, Error> {
    partner_in(alg, grading.piece(-2), n)
}

fn partner_in(
    alg: &ChevalleyAlgebra,
    space: &[usize],
    fixed: &LieElement,
) -> Result<Option<LieElement>, Error> {
    let cols: Vec<SparseVec> = space
        .iter()
        .map(|&k| alg.bracket(fixed, &alg.basis(k)).map(|e| e.coeffs().clone()))
        .collect::<Result<_, _>>()?;
    let rows = SparseMatrix::from_columns(alg.dim(), cols).rows();
    Ok(kernel_of_rows(&rows, space.len()).into_iter().next().map(|v| {
        alg.element(v.into_iter().map(|(i, c)| (space[i], c)).collect())
    }))
}

fn combo(alg: &ChevalleyAlgebra, space: &[usize], coeffs: &[i64]) -> LieElement {
    alg.element(
        space
            .iter()
            .zip(coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|(&k, &c)| (k, q(c)))
            .collect(),
    )
}

/// Pairing criterion with the default seed and sample count.
pub fn pairing_criterion(
    alg: &ChevalleyAlgebra,
    grading: &Grading,
) -> Result<PairingVerdict, Error> {
    pairing_criterion_with(alg, grading, DEFAULT_PAIRING_SEED, DEFAULT_PAIRING_SAMPLES)
}

/// Checks that `[N, Q] != 0` for all nonzero `N in g(2)`, `Q in g(-2)`.
///
/// Exact when `dim g(2) <= 1`. Otherwise searches basis vectors and
/// two-term combinations on both sides, then `samples` random integer
/// combinations of `g(2)`; every sample is tested exactly.
pub fn pairing_criterion_with(
    alg: &ChevalleyAlgebra,
    grading: &Grading,
    seed: u64,
    samples: usize,
) -> Result<PairingVerdict, Error> {
    let plus = grading.piece(2).to_vec();
    let minus = grading.piece(-2).to_vec();
    let found = |n: LieElement, qv: LieElement| Ok(PairingVerdict::FailsWithWitness { n, q: qv });

    if plus.is_empty() {
        return Ok(PairingVerdict::Holds);
    }
    let mut candidates: Vec<Vec<i64>> = Vec::new();
    for i in 0..plus.len() {
        let mut c = vec![0; plus.len()];
        c[i] = 1;
        candidates.push(c);
    }
    for n in candidates.iter().map(|c| combo(alg, &plus, c)) {
        if let Some(qv) = annihilated_partner(alg, grading, &n)? {
            return found(n, qv);
        }
    }
    if plus.len() == 1 {
        return Ok(PairingVerdict::Holds);
    }
    // Fix Q and look for N on the other side.
    for &k in &minus {
        let qv = alg.basis(k);
        if let Some(n) = partner_in(alg, &plus, &qv)? {
            return found(n, qv);
        }
    }
    for i in 0..plus.len() {
        for j in i + 1..plus.len() {
            for s in [1, -1, 2, -2] {
                let mut c = vec![0; plus.len()];
                c[i] = 1;
                c[j] = s;
                let n = combo(alg, &plus, &c);
                if let Some(qv) = annihilated_partner(alg, grading, &n)? {
                    return found(n, qv);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let c: Vec<i64> = (0..plus.len()).map(|_| rng.gen_range(-9..=9)).collect();
        if c.iter().all(|&x| x == 0) {
            continue;
        }
        let n = combo(alg, &plus, &c);
        if let Some(qv) = annihilated_partner(alg, grading, &n)? {
            return found(n, qv);
        }
    }
    Ok(PairingVerdict::ProbabilisticHolds { samples, seed })
}

#[cfg(test)]
mod tests {
    use super::super::{grading_from_diagram, WeightedDiagram};
    use super::*;

    fn setup(t: &str, labels: &[i64]) -> (ChevalleyAlgebra, Grading) {
        let g = ChevalleyAlgebra::from_type(t.parse().unwrap()).unwrap();
        let wd = WeightedDiagram::new(g.cartan_type(), labels.to_vec()).unwrap();
        let gr = grading_from_diagram(&g, &wd).unwrap();
        (g, gr)
    }

    #[test]
    fn nilpotency_of_root_vectors_and_cartan() {
        let (g, _) = setup("B2", &[0, 0]);
        let r = nilpotency_report(&g, &g.x(0)).unwrap();
        assert!(r.homothety_solvable && r.centralizer_orthogonal && r.ad_nilpotent);
        let r = nilpotency_report(&g, &g.h(1)).unwrap();
        assert!(!r.is_nilpotent());
        let r = nilpotency_report(&g, &g.zero()).unwrap();
        assert!(r.is_nilpotent());
    }

    #[test]
    fn g2_subregular_long_root_vector_violates_centralizer_test() {
        let (g, gr) = setup("G2", &[0, 2]);
        let rs = g.root_system();
        let n = g.x_root(&crate::rootsys::Root(vec![3, 1])).unwrap();
        assert!(gr.in_piece(&n, 2));
        let z = key_lemma_violation(&g, &gr, &n).unwrap().unwrap();
        assert!(!gr.in_n_perp(&z));
        // X_{-alpha_2} centralizes and sits in degree -2.
        let q2 = g.x_root(&rs.simple_root(1).neg()).unwrap();
        assert!(g.bracket(&n, &q2).unwrap().is_zero());
    }

    #[test]
    fn generic_elements_pass_centralizer_test() {
        for (t, labels) in [
            ("G2", vec![0, 2]),
            ("G2", vec![2, 2]),
            ("G2", vec![1, 0]),
            ("B3", vec![1, 0, 1]),
        ] {
            let (g, gr) = setup(t, &labels);
            let tr = super::super::generic_element(&g, &gr).unwrap();
            assert!(key_lemma_check(&g, &gr, &tr.n0).unwrap(), "{t} {labels:?}");
            assert_eq!(omega_kernel_dim(&g, &gr, &tr.n0).unwrap(), 0);
        }
    }

    #[test]
    fn omega_kernel_even_and_positive_on_boundary() {
        let (g, gr) = setup("G2", &[1, 0]);
        let d = omega_kernel_dim(&g, &gr, &g.highest_root_vector()).unwrap();
        assert!(d > 0 && d % 2 == 0);
        assert_eq!(omega_kernel_dim(&g, &gr, &g.zero()).unwrap(), gr.dim_piece(1));
    }

    #[test]
    fn pairing_on_g2() {
        let (g, gr) = setup("G2", &[0, 1]);
        assert_eq!(pairing_criterion(&g, &gr).unwrap(), PairingVerdict::Holds);
        let (g, gr) = setup("G2", &[1, 0]);
        assert_eq!(pairing_criterion(&g, &gr).unwrap(), PairingVerdict::Holds);
        let (g, gr) = setup("G2", &[0, 2]);
        match pairing_criterion(&g, &gr).unwrap() {
            PairingVerdict::FailsWithWitness { n, q } => {
                assert!(gr.in_piece(&n, 2) && gr.in_piece(&q, -2));
                assert!(!n.is_zero() && !q.is_zero());
                assert!(g.bracket(&n, &q).unwrap().is_zero());
            }
            v => panic!("expected a witness, got {v:?}"),
        }
    }
}
