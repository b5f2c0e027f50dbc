//! The minimal nilpotent orbit of `sp(2n)` as squares of vectors.
//!
//! With `omega(u, w) = u^T J w` and `J = [[0, I], [-I, 0]]`, the vector `v`
//! maps to the endomorphism `u -> omega(v, u) v`, i.e. the matrix `v v^T J`.
//! Its image is the closure of the minimal orbit and the map is 2-to-1
//! away from zero.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::linalg::{q, rational_sqrt, SparseMatrix, Q};
use crate::Error;

/// `Q^{2n}` with the standard symplectic form.
#[derive(Clone, Debug)]
pub struct SymplecticSpace {
    n: usize,
    form: SparseMatrix,
}

impl SymplecticSpace {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroElement("n"));
        }
        let mut form = SparseMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            form.set(i, n + i, Q::one());
            form.set(n + i, i, -Q::one());
        }
        Ok(Self { n, form })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// The matrix `J`.
    pub fn form(&self) -> &SparseMatrix {
        &self.form
    }

    pub fn omega(&self, u: &[Q], w: &[Q]) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.n {
            acc += &u[i] * &w[self.n + i] - &u[self.n + i] * &w[i];
        }
        acc
    }

    /// `omega(Xu, w) + omega(u, Xw) = 0` for all `u, w`, i.e. `X^T J + J X = 0`.
    pub fn is_in_sp(&self, x: &SparseMatrix) -> bool {
        x.transpose().mul(&self.form).add(&self.form.mul(x)).is_zero()
    }

    /// Basis `S J` of `sp(2n)` with `S` running over symmetric unit matrices.
    pub fn sp_basis(&self) -> Vec<SparseMatrix> {
        let d = self.dim();
        let mut out = Vec::with_capacity(self.n * (2 * self.n + 1));
        for i in 0..d {
            for j in i..d {
                let mut s = SparseMatrix::zeros(d, d);
                s.set(i, j, Q::one());
                s.set(j, i, Q::one());
                out.push(s.mul(&self.form));
            }
        }
        out
    }

    fn check_len(&self, v: &[Q]) -> Result<(), Error> {
        if v.len() != self.dim() {
            return Err(Error::Inconsistent(format!(
                "vector of length {} in a space of dimension {}",
                v.len(),
                self.dim()
            )));
        }
        Ok(())
    }
}

/// `mu(v)`: the matrix of `u -> omega(v, u) v`.
#[derive(Clone, Debug)]
pub struct RankOneElement {
    pub v: Vec<Q>,
    pub matrix: SparseMatrix,
}

fn outer(a: &[Q], b: &[Q]) -> SparseMatrix {
    let rows: Vec<Vec<Q>> = a.iter().map(|x| b.iter().map(|y| x * y).collect()).collect();
    SparseMatrix::from_dense(&rows)
}

pub fn mu(space: &SymplecticSpace, v: &[Q]) -> Result<RankOneElement, Error> {
    space.check_len(v)?;
    Ok(RankOneElement {
        v: v.to_vec(),
        matrix: outer(v, v).mul(space.form()),
    })
}

/// All `w` with `mu(w) = x`, solved exactly.
///
/// `mu(w) = x` means `w w^T = -x J` (as `J^{-1} = -J`). A nonzero diagonal
/// entry `s_ii` forces `w_i = ±sqrt(s_ii)` and then `w_j = s_ij / w_i`, so
/// there are at most two candidates; each is checked against `x`.
pub fn fiber(space: &SymplecticSpace, x: &SparseMatrix) -> Result<Vec<Vec<Q>>, Error> {
    let d = space.dim();
    let s = x.mul(space.form()).scale(&-Q::one());
    let candidates: Vec<Vec<Q>> = match (0..d).find(|&i| !s.get(i, i).is_zero()) {
        None => vec![vec![Q::zero(); d]],
        Some(i) => match rational_sqrt(&s.get(i, i)) {
            None => vec![],
            Some(root) => [root.clone(), -root]
                .into_iter()
                .map(|wi| (0..d).map(|j| s.get(i, j) / &wi).collect())
                .collect(),
        },
    };
    let mut out = Vec::new();
    for w in candidates {
        if mu(space, &w)?.matrix == *x {
            out.push(w);
        }
    }
    Ok(out)
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_type(x: &SparseMatrix) -> Option<Vec<u32>> {
    let n = x.nrows();
    let mut ranks = vec![n];
    let mut p = x.clone();
    loop {
        let r = p.rank();
        ranks.push(r);
        if r == 0 {
            break;
        }
        if ranks.len() > n + 1 {
            return None;
        }
        p = p.mul(x);
    }
    // Blocks of size >= k: ranks[k-1] - ranks[k].
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(std::iter::repeat(k as u32).take(exact));
    }
    Some(parts)
}

/// Rank of `(X, Y) -> tr(mu(v) [X, Y])` on `sp(2n)`.
///
/// The trace form is a nonzero multiple of the Killing form, so the rank is
/// that of the Kostant-Kirillov form at `mu(v)`.
pub fn kk_rank_at(space: &SymplecticSpace, v: &[Q]) -> Result<usize, Error> {
    if v.iter().all(Q::is_zero) {
        return Err(Error::ZeroElement("v"));
    }
    let m = mu(space, v)?.matrix;
    let basis = space.sp_basis();
    let b = basis.len();
    let mut gram = vec![vec![Q::zero(); b]; b];
    for i in 0..b {
        for j in i + 1..b {
            let bracket = basis[i].mul(&basis[j]).add(&basis[j].mul(&basis[i]).scale(&-Q::one()));
            let val = m.trace_of_product(&bracket);
            gram[j][i] = -val.clone();
            gram[i][j] = val;
        }
    }
    Ok(SparseMatrix::from_dense(&gram).rank())
}

/// Fiber of `[v_1 + ... + v_k] -> [mu(v_1) + ... + mu(v_k)]` over a sample
/// point of `P(V_1 + ... + V_k)`.
#[derive(Clone, Debug, Serialize)]
pub struct ProductCover {
    pub n_list: Vec<usize>,
    /// Dimension of the projective space `P^{2n-1}`, `n = sum n_i`.
    pub ambient_dim: usize,
    pub degree: usize,
    /// Fiber points, normalized so the first coordinate is positive.
    pub fiber: Vec<Vec<Vec<String>>>,
}

/// Sample vector of `V_i`, all coordinates nonzero.
pub fn sample_vector(i: usize, n_i: usize) -> Vec<Q> {
    (0..2 * n_i)
        .map(|j| {
            let x = (j + i + 1) as i64;
            if j % 2 == 0 {
                q(x)
            } else {
                q(-x)
            }
        })
        .collect()
}

/// Enumerates the fiber exactly and checks it has `2^{k-1}` points.
///
/// Points with the same image satisfy `mu(w_i) = c mu(v_i)` for a common
/// `c`; rescaling the point makes `c = 1`, so each `w_i` is in the fiber
/// of `mu` over `mu(v_i)`. Tuples are then identified up to the global
/// sign, the remaining scalar freedom.
pub fn product_cover_degree(n_list: &[usize]) -> Result<ProductCover, Error> {
    if n_list.is_empty() {
        return Err(Error::ZeroElement("k"));
    }
    let mut per_factor = Vec::new();
    for (i, &ni) in n_list.iter().enumerate() {
        let space = SymplecticSpace::new(ni)?;
        let v = sample_vector(i, ni);
        let f = fiber(&space, &mu(&space, &v)?.matrix)?;
        if f.len() != 2 || !f.contains(&v) {
            return Err(Error::Inconsistent(format!(
                "fiber of mu over mu(v) in factor {i} has {} points",
                f.len()
            )));
        }
        per_factor.push(f);
    }
    let mut tuples: Vec<Vec<Vec<Q>>> = vec![vec![]];
    for f in &per_factor {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                f.iter().map(move |w| {
                    let mut t = t.clone();
                    t.push(w.clone());
                    t
                })
            })
            .collect();
    }
    // Quotient by the global sign: keep tuples whose first coordinate is positive.
    let fiber: Vec<Vec<Vec<Q>>> = tuples
        .into_iter()
        .filter(|t| t[0][0] > Q::zero())
        .collect();
    let k = n_list.len();
    if fiber.len() != 1 << (k - 1) {
        return Err(Error::Inconsistent(format!(
            "fiber has {} points, expected {}",
            fiber.len(),
            1 << (k - 1)
        )));
    }
    let n: usize = n_list.iter().sum();
    Ok(ProductCover {
        n_list: n_list.to_vec(),
        ambient_dim: 2 * n - 1,
        degree: fiber.len(),
        fiber: fiber
            .iter()
            .map(|t| {
                t.iter()
                    .map(|w| w.iter().map(Q::to_string).collect())
                    .collect()
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn mu_basics() {
        let s = SymplecticSpace::new(2).unwrap();
        let x = mu(&s, &v(&[1, -2, 3, 5])).unwrap().matrix;
        assert!(s.is_in_sp(&x));
        assert!(x.mul(&x).is_zero());
        assert_eq!(x.rank(), 1);
        assert!(mu(&s, &v(&[0, 0, 0, 0])).unwrap().matrix.is_zero());
        let scaled = mu(&s, &v(&[3, -6, 9, 15])).unwrap().matrix;
        assert_eq!(scaled, x.scale(&q(9)));
        assert!(mu(&s, &v(&[1, 2])).is_err());
    }

    #[test]
    fn omega_matches_form() {
        let s = SymplecticSpace::new(2).unwrap();
        let (a, b) = (v(&[1, 2, 3, 4]), v(&[-1, 0, 2, 7]));
        let jb = s.form().mul_vec(&b.iter().cloned().enumerate().collect());
        let direct: Q = a.iter().enumerate().map(|(i, x)| x * jb.get(&i).cloned().unwrap_or_default()).sum();
        assert_eq!(s.omega(&a, &b), direct);
        assert_eq!(s.omega(&a, &b), -s.omega(&b, &a));
    }

    #[test]
    fn fiber_is_plus_minus() {
        let s = SymplecticSpace::new(2).unwrap();
        let w = v(&[2, -1, 0, 3]);
        let f = fiber(&s, &mu(&s, &w).unwrap().matrix).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.contains(&w));
        assert!(f.contains(&w.iter().map(|x| -x).collect()));
        // A rank-one element whose square root is irrational has no rational fiber.
        let x = mu(&s, &w).unwrap().matrix.scale(&q(2));
        assert!(fiber(&s, &x).unwrap().is_empty());
    }

    #[test]
    fn jordan_types() {
        let s = SymplecticSpace::new(3).unwrap();
        let x = mu(&s, &v(&[1, 1, 2, -1, 3, 4])).unwrap().matrix;
        assert_eq!(jordan_type(&x).unwrap(), vec![2, 1, 1, 1, 1]);
        assert_eq!(jordan_type(&SparseMatrix::identity(2)), None);
        let mut shift = SparseMatrix::zeros(3, 3);
        shift.set(0, 1, q(1));
        shift.set(1, 2, q(1));
        assert_eq!(jordan_type(&shift).unwrap(), vec![3]);
    }

    #[test]
    fn kk_ranks() {
        for n in 1..=3 {
            let s = SymplecticSpace::new(n).unwrap();
            assert_eq!(s.sp_basis().len(), n * (2 * n + 1));
            assert!(s.sp_basis().iter().all(|x| s.is_in_sp(x)));
            let w = sample_vector(0, n);
            assert_eq!(kk_rank_at(&s, &w).unwrap(), 2 * n);
            let w3: Vec<Q> = w.iter().map(|x| x * q(3)).collect();
            assert_eq!(kk_rank_at(&s, &w3).unwrap(), 2 * n);
        }
        let s = SymplecticSpace::new(1).unwrap();
        assert!(kk_rank_at(&s, &v(&[0, 0])).is_err());
    }

    #[test]
    fn product_degrees() {
        assert_eq!(product_cover_degree(&[3]).unwrap().degree, 1);
        assert_eq!(product_cover_degree(&[1, 1]).unwrap().degree, 2);
        let c = product_cover_degree(&[1, 2, 1]).unwrap();
        assert_eq!((c.degree, c.ambient_dim), (4, 7));
        assert!(product_cover_degree(&[]).is_err());
    }
}
