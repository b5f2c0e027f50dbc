//! Exact sparse linear algebra over the rationals.
//!
//! Vectors are `BTreeMap<usize, Q>` with zero entries never stored, so two
//! vectors are equal exactly when their maps are equal. Everything here is
//! plain Gaussian elimination; there is no modular or floating shortcut.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

/// Sparse vector indexed by coordinate; zero entries are never stored.
pub type SparseVec = BTreeMap<usize, Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Returns the integer value of `x` if it is an integer that fits in `i64`.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.to_integer()).ok()
}

/// Exact square root of a non-negative rational, when it is a perfect square.
pub fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer();
    let d = x.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Q::new(rn, rd))
    } else {
        None
    }
}

/// `y += a * x`, dropping entries that cancel.
pub fn axpy(y: &mut SparseVec, a: &Q, x: &SparseVec) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let prod = a * v;
        match y.get_mut(k) {
            Some(e) => {
                *e += prod;
                if e.is_zero() {
                    y.remove(k);
                }
            }
            None => {
                y.insert(*k, prod);
            }
        }
    }
}

pub fn scaled(x: &SparseVec, a: &Q) -> SparseVec {
    if a.is_zero() {
        return SparseVec::new();
    }
    x.iter().map(|(k, v)| (*k, v * a)).collect()
}

pub fn dot(x: &SparseVec, y: &SparseVec) -> Q {
    let (small, large) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    let mut acc = Q::zero();
    for (k, v) in small {
        if let Some(w) = large.get(k) {
            acc += v * w;
        }
    }
    acc
}

/// Row echelon basis built incrementally.
///
/// Each stored row has a leading 1 at its pivot column and no entries to the
/// left of it. Rows are not back-reduced against later pivots; `kernel` and
/// `solve` do the back substitution.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Remainder of `row` after eliminating every pivot column it touches.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        let mut cursor = 0usize;
        loop {
            let next = row
                .range(cursor..)
                .map(|(k, _)| *k)
                .find(|k| self.pivots.contains_key(k));
            let Some(k) = next else { break };
            let c = -row[&k].clone();
            axpy(&mut row, &c, &self.pivots[&k]);
            cursor = k + 1;
        }
        row
    }

    /// Adds `row` to the span; returns false when it was already dependent.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let r = self.reduce(row);
        let Some((&lead, v)) = r.iter().next() else {
            return false;
        };
        let inv = v.recip();
        self.pivots.insert(lead, scaled(&r, &inv));
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }
}

/// Rank of a family of vectors.
pub fn rank<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v.clone());
    }
    ech.rank()
}

/// Basis of `{x in Q^ncols : <row, x> = 0 for every row}`.
pub fn kernel_of_rows(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r.clone());
    }
    let pivots: Vec<usize> = ech.pivot_columns().collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !ech.pivots.contains_key(c)) {
        let mut x = SparseVec::new();
        x.insert(free, Q::one());
        for &p in pivots.iter().rev() {
            let row = &ech.pivots[&p];
            let mut acc = Q::zero();
            for (j, c) in row.range(p + 1..) {
                if let Some(xj) = x.get(j) {
                    acc -= c * xj;
                }
            }
            if !acc.is_zero() {
                x.insert(p, acc);
            }
        }
        basis.push(x);
    }
    basis
}

/// One solution of `A x = b` (free variables set to zero), or `None`.
pub fn solve_rows(rows: &[SparseVec], rhs: &[Q], ncols: usize) -> Option<SparseVec> {
    assert_eq!(rows.len(), rhs.len());
    let mut ech = Echelon::new();
    for (r, b) in rows.iter().zip(rhs) {
        let mut aug = r.clone();
        debug_assert!(aug.keys().all(|&k| k < ncols));
        if !b.is_zero() {
            aug.insert(ncols, b.clone());
        }
        ech.insert(aug);
    }
    if ech.pivots.contains_key(&ncols) {
        return None;
    }
    let mut x = SparseVec::new();
    let pivots: Vec<usize> = ech.pivot_columns().collect();
    for &p in pivots.iter().rev() {
        let row = &ech.pivots[&p];
        let mut acc = row.get(&ncols).cloned().unwrap_or_else(Q::zero);
        for (j, c) in row.range(p + 1..ncols) {
            if let Some(xj) = x.get(j) {
                acc -= c * xj;
            }
        }
        if !acc.is_zero() {
            x.insert(p, acc);
        }
    }
    Some(x)
}

/// Sparse matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let cols = (0..n)
            .map(|i| SparseVec::from([(i, Q::one())]))
            .collect();
        Self {
            nrows: n,
            ncols: n,
            cols,
        }
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.keys().all(|&k| k < nrows)));
        Self {
            nrows,
            ncols: cols.len(),
            cols,
        }
    }

    /// Dense row-major constructor, mostly for tests and small models.
    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut cols = vec![SparseVec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    cols[j].insert(i, v.clone());
                }
            }
        }
        Self { nrows, ncols, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.cols[j].get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        if v.is_zero() {
            self.cols[j].remove(&i);
        } else {
            self.cols[j].insert(i, v);
        }
    }

    pub fn rows(&self) -> Vec<SparseVec> {
        let mut rows = vec![SparseVec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                rows[*i].insert(j, v.clone());
            }
        }
        rows
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.ncols]; self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self {
            nrows: self.ncols,
            ncols: self.nrows,
            cols: self.rows(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::len).sum()
    }

    pub fn mul_vec(&self, x: &SparseVec) -> SparseVec {
        let mut y = SparseVec::new();
        for (j, xj) in x {
            axpy(&mut y, xj, &self.cols[*j]);
        }
        y
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let cols = other.cols.iter().map(|c| self.mul_vec(c)).collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            cols,
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut out = self.clone();
        for (j, c) in other.cols.iter().enumerate() {
            axpy(&mut out.cols[j], &Q::one(), c);
        }
        out
    }

    pub fn scale(&self, a: &Q) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            cols: self.cols.iter().map(|c| scaled(c, a)).collect(),
        }
    }

    pub fn trace(&self) -> Q {
        let mut t = Q::zero();
        for (j, c) in self.cols.iter().enumerate() {
            if let Some(v) = c.get(&j) {
                t += v;
            }
        }
        t
    }

    /// `trace(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &SparseMatrix) -> Q {
        assert_eq!(self.ncols, other.nrows);
        assert_eq!(self.nrows, other.ncols);
        let rows = self.rows();
        let mut t = Q::zero();
        for (j, col) in other.cols.iter().enumerate() {
            t += dot(&rows[j], col);
        }
        t
    }

    pub fn rank(&self) -> usize {
        rank(self.cols.iter())
    }

    /// Basis of the null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<SparseVec> {
        kernel_of_rows(&self.rows(), self.ncols)
    }

    /// Smallest `k` with `self^k = 0`, if the matrix is nilpotent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        assert_eq!(self.nrows, self.ncols);
        if self.is_zero() {
            return Some(1);
        }
        let mut power = self.clone();
        for k in 2..=self.nrows {
            power = self.mul(&power);
            if power.is_zero() {
                return Some(k);
            }
        }
        None
    }
}
