//! Explicit elements showing that the centralizer test fails for whole
//! families of diagrams in types E and F4.

use serde::Serialize;

use super::{grading_from_diagram, Grading, WeightedDiagram};
use crate::chevalley::{ChevalleyAlgebra, LieElement};
use crate::linalg::Q;
use crate::rootsys::{Family, Root};
use crate::Error;

/// Result of an exclusion test on one diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exclusion {
    /// `n in n` and `z` centralizes `n` but `z` lies outside `n_perp`.
    Excluded {
        n: LieElement,
        z: LieElement,
        roots: Vec<Root>,
        witness_root: Root,
    },
    /// Label sum 2 with two end labels zero: `n` lies in `g(2)` and the
    /// diagram is decided by the pairing criterion instead.
    InDegreeTwo { n: LieElement },
    NotExcluded,
}

impl Exclusion {
    pub fn is_excluded(&self) -> bool {
        matches!(self, Exclusion::Excluded { .. })
    }
}

fn sum_of_roots(alg: &ChevalleyAlgebra, roots: &[Root]) -> Result<LieElement, Error> {
    let mut acc = alg.zero();
    for r in roots {
        let x = alg
            .x_root(r)
            .ok_or_else(|| Error::Inconsistent(format!("{r} is not a root")))?;
        acc = &acc + &x;
    }
    Ok(acc)
}

/// Brackets `n` with `z` and checks membership; an exclusion only counts
/// when all three conditions hold exactly.
fn certify(
    alg: &ChevalleyAlgebra,
    grading: &Grading,
    roots: Vec<Root>,
    witness_root: Root,
) -> Result<Exclusion, Error> {
    let n = sum_of_roots(alg, &roots)?;
    let z = sum_of_roots(alg, std::slice::from_ref(&witness_root))?;
    if !alg.bracket(&n, &z)?.is_zero() {
        return Err(Error::Inconsistent(format!(
            "{witness_root} does not centralize the exclusion element"
        )));
    }
    if !grading.in_n(&n) || grading.in_n_perp(&z) {
        return Err(Error::Inconsistent(format!(
            "exclusion element misplaced for {}",
            grading.diagram()
        )));
    }
    Ok(Exclusion::Excluded {
        n,
        z,
        roots,
        witness_root,
    })
}

/// Exclusion test for E6, E7, E8 built from `sigma`, the sum of the simple
/// roots, and the three end nodes `alpha, beta, gamma` of the diagram.
///
/// With `s` the label sum and `m` the largest end label (attained at
/// `gamma`): if `s - m >= 2`, `N = X_{sigma-alpha} + X_{sigma-beta}` lies in
/// `n` and `X_{gamma-sigma}` centralizes it from degree `m - s <= -2`.
pub fn etype_exclusion(alg: &ChevalleyAlgebra, wd: &WeightedDiagram) -> Result<Exclusion, Error> {
    let t = alg.cartan_type();
    if t.family != Family::E {
        return Err(Error::WrongType {
            op: "etype_exclusion",
            expected: "E6, E7 or E8",
            got: t,
        });
    }
    let grading = grading_from_diagram(alg, wd)?;
    let rs = alg.root_system();
    let l = rs.rank();
    let labels = wd.labels();
    let sigma = Root(vec![1; l]);
    let ends = rs.end_nodes();
    let s: i64 = labels.iter().sum();
    let gamma = *ends
        .iter()
        .max_by_key(|&&e| (labels[e], std::cmp::Reverse(e)))
        .unwrap();
    let m = labels[gamma];
    let minus = |e: usize| sigma.sub(&rs.simple_root(e));
    if s - m >= 2 {
        let others: Vec<Root> = ends.iter().filter(|&&e| e != gamma).map(|&e| minus(e)).collect();
        let witness = rs.simple_root(gamma).sub(&sigma);
        return certify(alg, &grading, others, witness);
    }
    let zero_ends: Vec<usize> = ends.iter().copied().filter(|&e| labels[e] == 0).collect();
    if s == 2 && zero_ends.len() >= 2 {
        let roots: Vec<Root> = zero_ends[..2].iter().map(|&e| minus(e)).collect();
        let n = sum_of_roots(alg, &roots)?;
        if !grading.in_piece(&n, 2) {
            return Err(Error::Inconsistent(format!(
                "degree-two element misplaced for {wd}"
            )));
        }
        return Ok(Exclusion::InDegreeTwo { n });
    }
    Ok(Exclusion::NotExcluded)
}

/// The F4 roots `alpha, beta, gamma` (simple-root coordinates) used by
/// [`f4_exclusion`].
pub const F4_ALPHA: [i64; 4] = [1, 1, 1, 0];
pub const F4_BETA: [i64; 4] = [1, 2, 2, 2];
pub const F4_GAMMA: [i64; 4] = [1, 2, 4, 2];

/// Exclusion test for F4: when `l1 + l2 + l3 >= 2`, the element
/// `X_alpha + X_beta` lies in `n` and is centralized by `X_{-gamma}`.
pub fn f4_exclusion(alg: &ChevalleyAlgebra, wd: &WeightedDiagram) -> Result<Exclusion, Error> {
    let t = alg.cartan_type();
    if t.family != Family::F {
        return Err(Error::WrongType {
            op: "f4_exclusion",
            expected: "F4",
            got: t,
        });
    }
    let grading = grading_from_diagram(alg, wd)?;
    let l = wd.labels();
    if l[0] + l[1] + l[2] >= 2 {
        let roots = vec![Root(F4_ALPHA.to_vec()), Root(F4_BETA.to_vec())];
        return certify(alg, &grading, roots, Root(F4_GAMMA.to_vec()).neg());
    }
    Ok(Exclusion::NotExcluded)
}

/// Two roots given in epsilon coordinates, evaluated on a diagram.
#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalPair {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub lambda_value: i64,
    pub mu_value: i64,
    pub orthogonal: bool,
    /// `[X_lambda, X_mu] = 0`.
    pub commuting: bool,
}

impl OrthogonalPair {
    pub fn both_in_degree_two(&self) -> bool {
        self.lambda_value == 2 && self.mu_value == 2
    }
}

/// Converts `lambda`, `mu` from epsilon coordinates and records their
/// degrees under `wd`, their inner product and their bracket.
pub fn orthogonal_pair_in_degree_two(
    alg: &ChevalleyAlgebra,
    wd: &WeightedDiagram,
    lambda_eps: &[Q],
    mu_eps: &[Q],
) -> Result<OrthogonalPair, Error> {
    let rs = alg.root_system();
    let to_root = |v: &[Q]| -> Result<Root, Error> {
        let c = rs
            .from_epsilon(v)
            .ok_or(Error::NotInSubspace("the root lattice"))?;
        let ints: Option<Vec<i64>> = c.iter().map(crate::linalg::to_i64).collect();
        let r = Root(ints.ok_or(Error::NotInSubspace("the root lattice"))?);
        if !rs.is_root(&r.0) {
            return Err(Error::NotInSubspace("the root set"));
        }
        Ok(r)
    };
    let lambda = to_root(lambda_eps)?;
    let mu = to_root(mu_eps)?;
    let commuting = alg
        .bracket(&alg.x_root(&lambda).unwrap(), &alg.x_root(&mu).unwrap())?
        .is_zero();
    Ok(OrthogonalPair {
        lambda_value: lambda.eval(wd.labels()),
        mu_value: mu.eval(wd.labels()),
        orthogonal: rs.inner(&lambda, &mu) == Q::from_integer(0.into()),
        commuting,
        lambda: lambda.0,
        mu: mu.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, q_frac};

    fn alg(s: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::from_type(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn f4_roots_are_roots() {
        let rs = crate::rootsys::RootSystem::new("F4".parse().unwrap()).unwrap();
        for r in [F4_ALPHA, F4_BETA, F4_GAMMA] {
            assert!(rs.is_root(&r), "{r:?}");
        }
    }

    #[test]
    fn f4_split() {
        let g = alg("F4");
        let wd = |l: [i64; 4]| WeightedDiagram::new(g.cartan_type(), l.to_vec()).unwrap();
        assert!(f4_exclusion(&g, &wd([1, 0, 1, 0])).unwrap().is_excluded());
        assert!(f4_exclusion(&g, &wd([2, 0, 0, 2])).unwrap().is_excluded());
        assert_eq!(
            f4_exclusion(&g, &wd([0, 0, 1, 2])).unwrap(),
            Exclusion::NotExcluded
        );
        assert!(f4_exclusion(&alg("G2"), &WeightedDiagram::zero("G2".parse().unwrap())).is_err());
    }

    #[test]
    fn e6_cases() {
        let g = alg("E6");
        let wd = |l: &[i64]| WeightedDiagram::new(g.cartan_type(), l.to_vec()).unwrap();
        assert!(etype_exclusion(&g, &wd(&[0, 0, 1, 0, 1, 0])).unwrap().is_excluded());
        // Minimal orbit of E6: label 1 on node 2 only.
        assert_eq!(
            etype_exclusion(&g, &wd(&[0, 1, 0, 0, 0, 0])).unwrap(),
            Exclusion::NotExcluded
        );
        assert!(matches!(
            etype_exclusion(&g, &wd(&[0, 2, 0, 0, 0, 0])).unwrap(),
            Exclusion::InDegreeTwo { .. }
        ));
    }

    #[test]
    fn e8_pair() {
        let g = alg("E8");
        let wd = WeightedDiagram::new(g.cartan_type(), vec![1, 0, 0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(etype_exclusion(&g, &wd).unwrap(), Exclusion::NotExcluded);
        let lambda = vec![q_frac(1, 2); 8];
        let mut mu = vec![q(0); 8];
        mu[7] = q(1);
        mu[6] = q(-1);
        let p = orthogonal_pair_in_degree_two(&g, &wd, &lambda, &mu).unwrap();
        assert!(p.both_in_degree_two() && p.orthogonal && p.commuting);
    }
}
