//! Chevalley basis of a simple Lie algebra.
//!
//! The basis is `X_r` for every root `r` (in `RootSystem::roots` order)
//! followed by the simple coroots `H_1..H_l`. Brackets are
//!
//! * `[X_r, X_s] = N_{r,s} X_{r+s}` when `r + s` is a root,
//! * `[X_r, X_{-r}] = H_r`, the coroot of `r` written over the `H_i`,
//! * `[H_i, X_r] = <r, alpha_i^vee> X_r`.
//!
//! Signs of the `N_{r,s}` are fixed by declaring `N = +(p+1)` on every
//! extraspecial pair, with positive roots ordered by height and then by
//! descending coefficient vector (the `RootSystem` order). All other
//! constants follow from the usual identities between structure constants.
//! The Jacobi identity is checked on a deterministic sample at build time.

use std::collections::HashMap;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{axpy, q, scaled, to_i64, SparseMatrix, SparseVec, Q};
use crate::rootsys::{CartanType, Root, RootSystem};
use crate::Error;

/// Sparse element of a Chevalley algebra, tagged with its Cartan type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    ty: CartanType,
    coeffs: SparseVec,
}

impl LieElement {
    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn coeffs(&self) -> &SparseVec {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(&k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, a: &Q) -> LieElement {
        LieElement {
            ty: self.ty,
            coeffs: scaled(&self.coeffs, a),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    fn check_same(&self, other: &LieElement) -> Result<(), Error> {
        if self.ty == other.ty {
            Ok(())
        } else {
            Err(Error::MixedAlgebras(self.ty, other.ty))
        }
    }
}

impl Add for &LieElement {
    type Output = LieElement;

    /// Panics when the operands come from different algebras.
    fn add(self, rhs: &LieElement) -> LieElement {
        self.check_same(rhs).expect("adding elements of different algebras");
        let mut coeffs = self.coeffs.clone();
        axpy(&mut coeffs, &Q::one(), &rhs.coeffs);
        LieElement {
            ty: self.ty,
            coeffs,
        }
    }
}

impl Sub for &LieElement {
    type Output = LieElement;

    fn sub(self, rhs: &LieElement) -> LieElement {
        self.check_same(rhs)
            .expect("subtracting elements of different algebras");
        let mut coeffs = self.coeffs.clone();
        axpy(&mut coeffs, &-Q::one(), &rhs.coeffs);
        LieElement {
            ty: self.ty,
            coeffs,
        }
    }
}

impl Neg for &LieElement {
    type Output = LieElement;

    fn neg(self) -> LieElement {
        self.scale(&-Q::one())
    }
}

/// Exact structure-constant realization of a simple Lie algebra.
#[derive(Debug)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    dim: usize,
    nroots: usize,
    /// `[e_i, e_j]`, stored at `i * dim + j`.
    table: Vec<Vec<(usize, i64)>>,
    /// `N_{r,s}` over root indices, for every pair with `r + s` a root.
    constants: HashMap<(usize, usize), i64>,
    /// Killing form on basis vectors, row by row.
    gram: Vec<SparseVec>,
}

impl ChevalleyAlgebra {
    pub fn new(rs: RootSystem) -> Result<Self, Error> {
        let constants = structure_constants(&rs)?;
        let nroots = rs.roots().len();
        let rank = rs.rank();
        let dim = nroots + rank;
        let a = rs.cartan_matrix();

        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..nroots {
            for j in 0..nroots {
                let entry = &mut table[i * dim + j];
                if j == rs.neg_index(i) {
                    for (k, c) in coroot(&rs, rs.root(i)).into_iter().enumerate() {
                        if c != 0 {
                            entry.push((nroots + k, c));
                        }
                    }
                } else if let Some(&n) = constants.get(&(i, j)) {
                    let sum = rs.root(i).add(rs.root(j));
                    entry.push((rs.index_of(&sum.0).unwrap(), n));
                }
            }
        }
        for k in 0..rank {
            for r in 0..nroots {
                let c: i64 = (0..rank).map(|j| rs.root(r).0[j] * a[k][j]).sum();
                if c != 0 {
                    table[(nroots + k) * dim + r].push((r, c));
                    table[r * dim + nroots + k].push((r, -c));
                }
            }
        }

        let mut alg = Self {
            rs,
            dim,
            nroots,
            table,
            constants,
            gram: Vec::new(),
        };
        alg.gram = alg.killing_gram();
        alg.check_jacobi_sample(0x5eed, 4000)?;
        Ok(alg)
    }

    pub fn from_type(t: CartanType) -> Result<Self, Error> {
        Self::new(RootSystem::new(t)?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn cartan_type(&self) -> CartanType {
        self.rs.cartan_type()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.nroots
    }

    /// Basis index of `H_i`.
    pub fn h_index(&self, i: usize) -> usize {
        self.nroots + i
    }

    /// Root index of basis vector `k`, or `None` for the Cartan part.
    pub fn root_of_basis(&self, k: usize) -> Option<usize> {
        (k < self.nroots).then_some(k)
    }

    pub fn basis_label(&self, k: usize) -> String {
        if k < self.nroots {
            format!("X{}", self.rs.root(k))
        } else {
            format!("H{}", k - self.nroots + 1)
        }
    }

    /// `N_{r,s}` for root indices with `r + s` a root, else `None`.
    pub fn structure_constant(&self, r: usize, s: usize) -> Option<i64> {
        self.constants.get(&(r, s)).copied()
    }

    pub fn zero(&self) -> LieElement {
        self.element(SparseVec::new())
    }

    pub fn element(&self, coeffs: SparseVec) -> LieElement {
        debug_assert!(coeffs.keys().all(|&k| k < self.dim));
        debug_assert!(coeffs.values().all(|v| !v.is_zero()));
        LieElement {
            ty: self.cartan_type(),
            coeffs,
        }
    }

    pub fn basis(&self, k: usize) -> LieElement {
        self.element(SparseVec::from([(k, Q::one())]))
    }

    /// Root vector `X_r` by root index.
    pub fn x(&self, r: usize) -> LieElement {
        self.basis(r)
    }

    pub fn x_root(&self, r: &Root) -> Option<LieElement> {
        self.rs.index_of(&r.0).map(|i| self.x(i))
    }

    pub fn h(&self, i: usize) -> LieElement {
        self.basis(self.h_index(i))
    }

    /// Coroot `H_r = [X_r, X_{-r}]` over the simple coroots.
    pub fn coroot_element(&self, r: &Root) -> LieElement {
        let coeffs = coroot(&self.rs, r)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| (self.h_index(i), q(c)))
            .collect();
        self.element(coeffs)
    }

    /// The Cartan element `H` with `alpha_i(H) = values[i]`.
    pub fn cartan_from_values(&self, values: &[Q]) -> LieElement {
        let l = self.rank();
        assert_eq!(values.len(), l);
        let a = self.rs.cartan_matrix();
        // alpha_k(sum_j c_j H_j) = sum_j c_j a[j][k]
        let rows: Vec<SparseVec> = (0..l)
            .map(|k| {
                (0..l)
                    .filter(|&j| a[j][k] != 0)
                    .map(|j| (j, q(a[j][k])))
                    .collect()
            })
            .collect();
        let sol = crate::linalg::solve_rows(&rows, values, l).expect("Cartan matrix is invertible");
        self.element(
            sol.into_iter()
                .map(|(j, c)| (self.h_index(j), c))
                .collect(),
        )
    }

    /// `r(H)` for `H` in the Cartan subalgebra.
    pub fn root_value(&self, r: &Root, h: &LieElement) -> Q {
        let a = self.rs.cartan_matrix();
        let l = self.rank();
        let mut acc = Q::zero();
        for (k, c) in h.coeffs() {
            assert!(*k >= self.nroots, "root_value needs a Cartan element");
            let j = k - self.nroots;
            let pairing: i64 = (0..l).map(|m| r.0[m] * a[j][m]).sum();
            acc += c * q(pairing);
        }
        acc
    }

    pub fn is_cartan(&self, x: &LieElement) -> bool {
        x.support().all(|k| k >= self.nroots)
    }

    pub(crate) fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i * self.dim + j]
    }

    pub(crate) fn bracket_vec(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, ai) in a {
            for (j, bj) in b {
                let entry = self.bracket_basis(*i, *j);
                if entry.is_empty() {
                    continue;
                }
                let ab = ai * bj;
                for (k, c) in entry {
                    let term = &ab * q(*c);
                    let slot = out.entry(*k).or_insert_with(Q::zero);
                    *slot += term;
                    if slot.is_zero() {
                        out.remove(k);
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> Result<LieElement, Error> {
        a.check_same(b)?;
        if a.ty != self.cartan_type() {
            return Err(Error::MixedAlgebras(self.cartan_type(), a.ty));
        }
        Ok(self.element(self.bracket_vec(&a.coeffs, &b.coeffs)))
    }

    /// Matrix of `ad a` in the Chevalley basis; column `j` is `[a, e_j]`.
    pub fn ad_matrix(&self, a: &LieElement) -> SparseMatrix {
        let cols = (0..self.dim)
            .map(|j| {
                let mut col = SparseVec::new();
                for (i, ai) in a.coeffs() {
                    for (k, c) in self.bracket_basis(*i, j) {
                        axpy(&mut col, &(ai * q(*c)), &SparseVec::from([(*k, Q::one())]));
                    }
                }
                col
            })
            .collect();
        SparseMatrix::from_columns(self.dim, cols)
    }

    /// Killing form from the cached Gram matrix.
    pub fn killing(&self, a: &LieElement, b: &LieElement) -> Q {
        let mut acc = Q::zero();
        for (i, ai) in a.coeffs() {
            for (j, g) in &self.gram[*i] {
                if let Some(bj) = b.coeffs.get(j) {
                    acc += ai * g * bj;
                }
            }
        }
        acc
    }

    /// Killing form as `trace(ad a ad b)`, computed from scratch.
    pub fn killing_trace(&self, a: &LieElement, b: &LieElement) -> Q {
        self.ad_matrix(a).trace_of_product(&self.ad_matrix(b))
    }

    /// Gram matrix of the Killing form over the full basis.
    pub fn killing_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.dim, self.gram.clone())
    }

    fn killing_basis_trace(&self, i: usize, j: usize) -> Q {
        let mut t = 0i64;
        for m in 0..self.dim {
            for (k, c) in self.bracket_basis(j, m) {
                for (k2, c2) in self.bracket_basis(i, *k) {
                    if *k2 == m {
                        t += c * c2;
                    }
                }
            }
        }
        q(t)
    }

    fn killing_gram(&self) -> Vec<SparseVec> {
        let mut gram = vec![SparseVec::new(); self.dim];
        for i in 0..self.nroots {
            let j = self.rs.neg_index(i);
            if i < j {
                let v = self.killing_basis_trace(i, j);
                gram[i].insert(j, v.clone());
                gram[j].insert(i, v);
            }
        }
        for a in 0..self.rank() {
            for b in a..self.rank() {
                let (i, j) = (self.h_index(a), self.h_index(b));
                let v = self.killing_basis_trace(i, j);
                if !v.is_zero() {
                    gram[i].insert(j, v.clone());
                    gram[j].insert(i, v);
                }
            }
        }
        gram
    }

    /// Jacobi identity on basis triples: exhaustive for small algebras,
    /// otherwise on `samples` triples drawn from a seeded generator.
    pub fn check_jacobi_sample(&self, seed: u64, samples: usize) -> Result<(), Error> {
        let d = self.dim;
        let check = |i: usize, j: usize, k: usize| -> Result<(), Error> {
            if self.jacobi_residual_basis(i, j, k).is_empty() {
                Ok(())
            } else {
                Err(Error::Inconsistent(format!(
                    "{}: Jacobi fails on ({}, {}, {})",
                    self.cartan_type(),
                    self.basis_label(i),
                    self.basis_label(j),
                    self.basis_label(k)
                )))
            }
        };
        if d * d * d <= samples * 8 {
            for i in 0..d {
                for j in i + 1..d {
                    for k in j + 1..d {
                        check(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                check(rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d))?;
            }
        }
        Ok(())
    }

    pub(crate) fn jacobi_residual_basis(&self, i: usize, j: usize, k: usize) -> SparseVec {
        let e = |m: usize| SparseVec::from([(m, Q::one())]);
        let mut out = SparseVec::new();
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.bracket_vec(&e(b), &e(c));
            let outer = self.bracket_vec(&e(a), &inner);
            axpy(&mut out, &Q::one(), &outer);
        }
        out
    }

    /// Basis of the centralizer `{x : [a, x] = 0}`.
    pub fn centralizer(&self, a: &LieElement) -> Vec<LieElement> {
        if a.is_zero() {
            return (0..self.dim).map(|k| self.basis(k)).collect();
        }
        self.ad_matrix(a)
            .kernel()
            .into_iter()
            .map(|v| self.element(v))
            .collect()
    }

    pub fn centralizer_dim(&self, a: &LieElement) -> usize {
        if a.is_zero() {
            return self.dim;
        }
        self.dim - self.ad_matrix(a).rank()
    }

    /// `dim g - dim z(a)`.
    pub fn orbit_dimension(&self, a: &LieElement) -> Result<usize, Error> {
        if a.is_zero() {
            return Err(Error::ZeroElement("orbit representative"));
        }
        Ok(self.dim - self.centralizer_dim(a))
    }

    pub fn projective_orbit_dimension(&self, a: &LieElement) -> Result<usize, Error> {
        Ok(self.orbit_dimension(a)? - 1)
    }

    /// `X_theta` for the highest root.
    pub fn highest_root_vector(&self) -> LieElement {
        self.x_root(&self.rs.highest_root()).unwrap()
    }

    /// `exp(ad x)` applied to `y`, for `ad x` nilpotent.
    pub fn exp_ad(&self, x: &LieElement, y: &LieElement) -> Result<LieElement, Error> {
        let mut term = y.clone();
        let mut acc = y.clone();
        for k in 1..=self.dim {
            term = self.bracket(x, &term)?.scale(&(Q::one() / q(k as i64)));
            if term.is_zero() {
                return Ok(acc);
            }
            acc = &acc + &term;
        }
        Err(Error::Inconsistent("exp_ad of a non-nilpotent element".into()))
    }
}

/// Coefficients of the coroot `r^vee` over the simple coroots.
pub fn coroot(rs: &RootSystem, r: &Root) -> Vec<i64> {
    let n2 = rs.norm2(r);
    (0..rs.rank())
        .map(|i| {
            let s = rs.simple_root(i);
            let c = q(r.0[i]) * rs.norm2(&s) / &n2;
            to_i64(&c).expect("coroot coefficients are integral")
        })
        .collect()
}

/// All `N_{r,s}` (root indices, `r + s` a root) from the extraspecial pairs.
fn structure_constants(rs: &RootSystem) -> Result<HashMap<(usize, usize), i64>, Error> {
    let npos = rs.num_positive();
    let mut pos: HashMap<(usize, usize), i64> = HashMap::new();

    for xi in 0..npos {
        let target = rs.root(xi);
        let special: Vec<(usize, usize)> = (0..xi)
            .filter_map(|a| {
                let b = rs.index_of(&target.sub(rs.root(a)).0)?;
                (b < npos && a < b).then_some((a, b))
            })
            .collect();
        let Some(&(r1, s1)) = special.first() else {
            continue; // simple root
        };
        let p = rs.string_down(rs.root(r1), rs.root(s1));
        pos.insert((r1, s1), p + 1);
        let n_extra = q(p + 1);
        let xi_len = rs.norm2(target);
        for &(r, s) in &special[1..] {
            let (rr, sr, r1r) = (rs.root(r), rs.root(s), rs.root(r1));
            let mut acc = Q::zero();
            let d1 = sr.sub(r1r);
            if rs.is_root(&d1.0) {
                let n_a = general(rs, &pos, s, rs.neg_index(r1));
                let n_b = general(rs, &pos, r, rs.neg_index(s1));
                acc += n_a * n_b / rs.norm2(&d1);
            }
            let d2 = rr.sub(r1r);
            if rs.is_root(&d2.0) {
                let n_a = general(rs, &pos, rs.neg_index(r1), r);
                let n_b = general(rs, &pos, s, rs.neg_index(s1));
                acc += n_a * n_b / rs.norm2(&d2);
            }
            let val = &xi_len * acc / &n_extra;
            let n = to_i64(&val).ok_or_else(|| {
                Error::Inconsistent(format!("non-integral N for {rr} + {sr}: {val}"))
            })?;
            let expect = rs.string_down(rr, sr) + 1;
            if n.abs() != expect {
                return Err(Error::Inconsistent(format!(
                    "|N({rr}, {sr})| = {} but string gives {expect}",
                    n.abs()
                )));
            }
            pos.insert((r, s), n);
        }
    }

    let nroots = rs.roots().len();
    let mut all = HashMap::new();
    for a in 0..nroots {
        for b in 0..nroots {
            let sum = rs.root(a).add(rs.root(b));
            if rs.is_root(&sum.0) {
                let v = general(rs, &pos, a, b);
                let n = to_i64(&v).ok_or_else(|| {
                    Error::Inconsistent(format!("non-integral structure constant {v}"))
                })?;
                all.insert((a, b), n);
            }
        }
    }
    Ok(all)
}

/// `N_{a,b}` for arbitrary roots, reduced to positive pairs through
/// `N_{-a,-b} = -N_{a,b}`, antisymmetry, and
/// `N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)` when `a + b + c = 0`.
fn general(rs: &RootSystem, pos: &HashMap<(usize, usize), i64>, a: usize, b: usize) -> Q {
    let npos = rs.num_positive();
    let (ap, bp) = (a < npos, b < npos);
    if ap && bp {
        return if a < b {
            q(pos[&(a, b)])
        } else {
            -q(pos[&(b, a)])
        };
    }
    if !ap && !bp {
        return -general(rs, pos, rs.neg_index(a), rs.neg_index(b));
    }
    let c_root = rs.root(a).add(rs.root(b)).neg();
    let c = rs.index_of(&c_root.0).expect("a + b is a root");
    let cp = c < npos;
    let cc = rs.norm2(&c_root);
    if cp == ap {
        cc / rs.norm2(rs.root(b)) * general(rs, pos, c, a)
    } else {
        cc / rs.norm2(rs.root(a)) * general(rs, pos, b, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::from_type(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn sl2_relations() {
        let g = alg("A1");
        assert_eq!(g.dim(), 3);
        let (x, y, h) = (g.x(0), g.x(1), g.h(0));
        assert_eq!(g.bracket(&x, &y).unwrap(), h);
        assert_eq!(g.bracket(&h, &x).unwrap(), x.scale(&q(2)));
        assert_eq!(g.bracket(&h, &y).unwrap(), y.scale(&q(-2)));
        assert_eq!(g.killing(&h, &h), q(8));
        assert_eq!(g.killing_trace(&h, &h), q(8));
    }

    #[test]
    fn dimensions() {
        for (t, d) in [("A1", 3), ("G2", 14), ("B3", 21), ("F4", 52)] {
            assert_eq!(alg(t).dim(), d);
        }
    }

    #[test]
    fn jacobi_exhaustive_rank_two() {
        for t in ["A2", "B2", "C2", "G2"] {
            let g = alg(t);
            for i in 0..g.dim() {
                for j in 0..g.dim() {
                    for k in 0..g.dim() {
                        assert!(g.jacobi_residual_basis(i, j, k).is_empty(), "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn structure_constant_identities() {
        for t in ["B3", "C3", "G2", "F4", "D4"] {
            let g = alg(t);
            let rs = g.root_system();
            for (&(r, s), &n) in &g.constants {
                assert_eq!(g.structure_constant(s, r), Some(-n), "{t} antisymmetry");
                assert_eq!(
                    g.structure_constant(rs.neg_index(r), rs.neg_index(s)),
                    Some(-n),
                    "{t} negation"
                );
                let p = rs.string_down(rs.root(r), rs.root(s));
                assert_eq!(n.abs(), p + 1, "{t} integrality");
            }
        }
    }

    #[test]
    fn highest_root_bracket_and_killing() {
        let g = alg("C3");
        let theta = g.root_system().highest_root();
        let xt = g.highest_root_vector();
        let ht = g.coroot_element(&theta);
        assert_eq!(g.bracket(&ht, &xt).unwrap(), xt.scale(&q(2)));
        let xmt = g.x_root(&theta.neg()).unwrap();
        assert!(!g.killing(&xt, &xmt).is_zero());
        assert_eq!(g.killing(&xt, &xmt), g.killing_trace(&xt, &xmt));
    }

    #[test]
    fn mixed_algebras_rejected() {
        let a = alg("A2");
        let b = alg("B2");
        assert!(matches!(
            a.bracket(&a.x(0), &b.x(0)),
            Err(Error::MixedAlgebras(..))
        ));
    }

    #[test]
    fn centralizers_of_highest_root_vector() {
        let g = alg("A2");
        assert_eq!(g.centralizer(&g.zero()).len(), 8);
        assert_eq!(g.centralizer(&g.highest_root_vector()).len(), 4);
        assert!(g.orbit_dimension(&g.zero()).is_err());
        let g2 = alg("G2");
        assert_eq!(
            g2.projective_orbit_dimension(&g2.highest_root_vector()).unwrap(),
            5
        );
    }

    #[test]
    fn ad_highest_root_cubes_to_zero() {
        for t in ["A3", "B2", "G2", "F4"] {
            let g = alg(t);
            let ad = g.ad_matrix(&g.highest_root_vector());
            assert!(!ad.mul(&ad).is_zero());
            assert!(ad.mul(&ad).mul(&ad).is_zero(), "{t}");
        }
    }

    #[test]
    fn cartan_from_values_evaluates_back() {
        let g = alg("F4");
        let vals = [q(1), q(0), q(2), q(1)];
        let h = g.cartan_from_values(&vals);
        for i in 0..4 {
            assert_eq!(g.root_value(&g.root_system().simple_root(i), &h), vals[i]);
        }
    }

    #[test]
    fn exp_ad_conjugates_cartan() {
        let g = alg("A1");
        let h = g.h(0);
        let x = g.x(0);
        // exp(ad X) H = H - 2X
        let out = g.exp_ad(&x, &h).unwrap();
        assert_eq!(out, &h - &x.scale(&q(2)));
    }
}
