//! Dynkin gradings, sl2-triples and weighted Dynkin diagrams.
//!
//! A weighted diagram fixes a Cartan element `H` by `alpha_i(H) = label_i`;
//! the eigenvalues of `ad H` split the algebra into pieces `g(i)` spanned by
//! basis vectors, so membership tests in `p`, `n` and `n_perp` are
//! coordinatewise.

mod criteria;
mod exclusion;

pub use criteria::{
    key_lemma_check, key_lemma_violation, nilpotency_report, omega_kernel_dim,
    pairing_criterion, pairing_criterion_with, NilpotencyReport, PairingVerdict,
    DEFAULT_PAIRING_SAMPLES, DEFAULT_PAIRING_SEED,
};
pub use exclusion::{
    etype_exclusion, f4_exclusion, orthogonal_pair_in_degree_two, Exclusion, OrthogonalPair,
    F4_ALPHA, F4_BETA, F4_GAMMA,
};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::chevalley::{ChevalleyAlgebra, LieElement};
use crate::linalg::{q, solve_rows, SparseMatrix, SparseVec, Q};
use crate::rootsys::{CartanType, Family, Root};
use crate::Error;

/// Labels `alpha_i(H)` on the nodes of a Dynkin diagram, Bourbaki order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightedDiagram {
    cartan_type: CartanType,
    labels: Vec<i64>,
}

impl WeightedDiagram {
    pub fn new(cartan_type: CartanType, labels: Vec<i64>) -> Result<Self, Error> {
        if labels.len() != cartan_type.rank {
            return Err(Error::DiagramLength {
                ty: cartan_type,
                expected: cartan_type.rank,
                got: labels.len(),
            });
        }
        if let Some(&bad) = labels.iter().find(|l| !(0..=2).contains(*l)) {
            return Err(Error::DiagramLabel(bad));
        }
        Ok(Self {
            cartan_type,
            labels,
        })
    }

    /// Parses `"1,0,1"`.
    pub fn parse(cartan_type: CartanType, s: &str) -> Result<Self, Error> {
        let labels = s
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::ParseType(format!("diagram `{s}`")))?;
        Self::new(cartan_type, labels)
    }

    pub fn zero(cartan_type: CartanType) -> Self {
        Self {
            cartan_type,
            labels: vec![0; cartan_type.rank],
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn is_even(&self) -> bool {
        self.labels.iter().all(|l| l % 2 == 0)
    }
}

impl fmt::Display for WeightedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.labels.iter().map(i64::to_string).collect();
        write!(f, "{}[{}]", self.cartan_type, s.join(","))
    }
}

/// Decomposition `g = sum_i g(i)` by eigenvalues of `ad H`.
#[derive(Clone, Debug)]
pub struct Grading {
    diagram: WeightedDiagram,
    h: LieElement,
    /// Degree of each basis vector.
    degree: Vec<i64>,
    pieces: BTreeMap<i64, Vec<usize>>,
}

impl Grading {
    pub fn diagram(&self) -> &WeightedDiagram {
        &self.diagram
    }

    pub fn h(&self) -> &LieElement {
        &self.h
    }

    pub fn degree_of(&self, basis_index: usize) -> i64 {
        self.degree[basis_index]
    }

    pub fn pieces(&self) -> &BTreeMap<i64, Vec<usize>> {
        &self.pieces
    }

    /// Basis indices spanning `g(i)`.
    pub fn piece(&self, i: i64) -> &[usize] {
        self.pieces.get(&i).map_or(&[], Vec::as_slice)
    }

    pub fn dim_piece(&self, i: i64) -> usize {
        self.piece(i).len()
    }

    fn indices_where(&self, pred: impl Fn(i64) -> bool) -> Vec<usize> {
        (0..self.degree.len())
            .filter(|&k| pred(self.degree[k]))
            .collect()
    }

    /// `p = sum_{i >= 0} g(i)`.
    pub fn p(&self) -> Vec<usize> {
        self.indices_where(|d| d >= 0)
    }

    /// `n = sum_{i >= 2} g(i)`.
    pub fn n(&self) -> Vec<usize> {
        self.indices_where(|d| d >= 2)
    }

    /// `n_perp = sum_{i >= -1} g(i)`.
    pub fn n_perp(&self) -> Vec<usize> {
        self.indices_where(|d| d >= -1)
    }

    fn all_degrees(&self, x: &LieElement, pred: impl Fn(i64) -> bool) -> bool {
        x.support().all(|k| pred(self.degree[k]))
    }

    pub fn in_piece(&self, x: &LieElement, i: i64) -> bool {
        self.all_degrees(x, |d| d == i)
    }

    pub fn in_n(&self, x: &LieElement) -> bool {
        self.all_degrees(x, |d| d >= 2)
    }

    pub fn in_n_perp(&self, x: &LieElement) -> bool {
        self.all_degrees(x, |d| d >= -1)
    }

    pub fn in_p(&self, x: &LieElement) -> bool {
        self.all_degrees(x, |d| d >= 0)
    }
}

/// Grading defined by `alpha_i(H) = label_i`.
pub fn grading_from_diagram(
    alg: &ChevalleyAlgebra,
    wd: &WeightedDiagram,
) -> Result<Grading, Error> {
    if wd.cartan_type() != alg.cartan_type() {
        return Err(Error::MixedAlgebras(alg.cartan_type(), wd.cartan_type()));
    }
    let values: Vec<Q> = wd.labels().iter().map(|&l| q(l)).collect();
    let h = alg.cartan_from_values(&values);
    let rs = alg.root_system();
    let mut degree = Vec::with_capacity(alg.dim());
    for r in rs.roots() {
        degree.push(r.eval(wd.labels()));
    }
    degree.extend(std::iter::repeat(0).take(alg.rank()));
    let mut pieces: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (k, d) in degree.iter().enumerate() {
        pieces.entry(*d).or_default().push(k);
    }
    Ok(Grading {
        diagram: wd.clone(),
        h,
        degree,
        pieces,
    })
}

/// `(N0, H, N1)` with `[H,N0] = 2N0`, `[H,N1] = -2N1`, `[N1,N0] = H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub n0: LieElement,
    pub h: LieElement,
    pub n1: LieElement,
}

impl Sl2Triple {
    /// Re-checks the three relations with the algebra's bracket.
    pub fn verify(&self, alg: &ChevalleyAlgebra) -> Result<bool, Error> {
        let two = q(2);
        Ok(alg.bracket(&self.h, &self.n0)? == self.n0.scale(&two)
            && alg.bracket(&self.h, &self.n1)? == self.n1.scale(&-two)
            && alg.bracket(&self.n1, &self.n0)? == self.h)
    }
}

/// Completes `N0 in g(2)` to an sl2-triple whose semisimple element is the
/// grading's `H`, by solving `[N1, N0] = H` for `N1 in g(-2)`.
pub fn sl2_complete(
    alg: &ChevalleyAlgebra,
    grading: &Grading,
    n0: &LieElement,
) -> Result<Sl2Triple, Error> {
    if n0.is_zero() {
        return Err(Error::ZeroElement("N0"));
    }
    if !grading.in_piece(n0, 2) {
        return Err(Error::NotInSubspace("g(2)"));
    }
    let unknowns = grading.piece(-2);
    let cols: Vec<SparseVec> = unknowns
        .iter()
        .map(|&k| alg.bracket(&alg.basis(k), n0).map(|e| e.coeffs().clone()))
        .collect::<Result<_, _>>()?;
    let m = SparseMatrix::from_columns(alg.dim(), cols);
    let rhs: Vec<Q> = (0..alg.dim()).map(|k| grading.h().coeff(k)).collect();
    let sol = solve_rows(&m.rows(), &rhs, unknowns.len()).ok_or(Error::NoTriple)?;
    let n1 = alg.element(
        sol.into_iter()
            .map(|(i, c)| (unknowns[i], c))
            .collect(),
    );
    let triple = Sl2Triple {
        n0: n0.clone(),
        h: grading.h().clone(),
        n1,
    };
    if !triple.verify(alg)? {
        return Err(Error::Inconsistent(
            "sl2 solve returned a triple violating its relations".into(),
        ));
    }
    Ok(triple)
}

/// Maximum number of coefficient patterns tried by [`generic_element`].
pub const GENERIC_ATTEMPTS: usize = 24;

/// Coefficients used on attempt `k` for the `j`-th basis vector of `g(2)`.
fn perturbation(k: usize, j: usize) -> i64 {
    if k == 0 {
        1
    } else {
        1 + ((j as i64 + 1) * (k as i64 + 1) + (j * j) as i64) % (k as i64 + 2)
    }
}

/// A generic element of `g(2)` together with its sl2-triple.
///
/// Starts from the sum of the basis vectors of `g(2)` and walks through
/// deterministic small-integer perturbations until `sl2_complete` succeeds.
/// Fails with `NoTriple` when the diagram is not the diagram of an orbit
/// (or every attempt landed in the boundary).
pub fn generic_element(
    alg: &ChevalleyAlgebra,
    grading: &Grading,
) -> Result<Sl2Triple, Error> {
    let basis = grading.piece(2);
    if basis.is_empty() {
        return Err(Error::NoTriple);
    }
    for k in 0..GENERIC_ATTEMPTS {
        let coeffs: SparseVec = basis
            .iter()
            .enumerate()
            .map(|(j, &b)| (b, q(perturbation(k, j))))
            .collect();
        match sl2_complete(alg, grading, &alg.element(coeffs)) {
            Ok(t) => return Ok(t),
            Err(Error::NoTriple) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoTriple)
}

/// Whether the diagram is the weighted diagram of some nilpotent orbit.
pub fn is_orbit_diagram(alg: &ChevalleyAlgebra, wd: &WeightedDiagram) -> Result<bool, Error> {
    if wd.labels().iter().all(|&l| l == 0) {
        return Ok(true);
    }
    let g = grading_from_diagram(alg, wd)?;
    match generic_element(alg, &g) {
        Ok(_) => Ok(true),
        Err(Error::NoTriple) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Weighted diagram of the orbit of `X_r`.
///
/// Uses the triple `(X_r, H_r, -X_{-r})` and moves `H_r` into the dominant
/// chamber with simple reflections.
pub fn diagram_of_root_vector_orbit(
    alg: &ChevalleyAlgebra,
    r: &Root,
) -> Result<WeightedDiagram, Error> {
    let rs = alg.root_system();
    let x = alg
        .x_root(r)
        .ok_or_else(|| Error::NotInSubspace("the root set"))?;
    let y = alg.x_root(&r.neg()).unwrap();
    let h = alg.coroot_element(r);
    let triple = Sl2Triple {
        n0: x,
        h: h.clone(),
        n1: -&y,
    };
    if !triple.verify(alg)? {
        return Err(Error::Inconsistent(format!("root triple through {r} fails")));
    }
    let l = alg.rank();
    let mut labels: Vec<i64> = (0..l)
        .map(|i| {
            let v = alg.root_value(&rs.simple_root(i), &h);
            crate::linalg::to_i64(&v).expect("integral on coroots")
        })
        .collect();
    let a = rs.cartan_matrix();
    while let Some(i) = labels.iter().position(|&v| v < 0) {
        let li = labels[i];
        for k in 0..l {
            labels[k] -= li * a[i][k];
        }
    }
    WeightedDiagram::new(alg.cartan_type(), labels)
}

/// Diagram of the minimal orbit: `alpha_i(H) = <alpha_i, theta^vee>`.
pub fn minimal_orbit_diagram(alg: &ChevalleyAlgebra) -> WeightedDiagram {
    let theta = alg.root_system().highest_root();
    diagram_of_root_vector_orbit(alg, &theta).expect("highest root is a root")
}

/// The three short-root-orbit diagrams (for the B-, C- and F4-shaped Dynkin
/// graphs), instantiated at rank `l`.
pub fn short_root_displays(rank: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut first = vec![0; rank];
    first[0] = 2;
    out.push(first);
    if rank >= 2 {
        let mut second = vec![0; rank];
        second[1] = 1;
        out.push(second);
    }
    if rank == 4 {
        out.push(vec![0, 0, 0, 1]);
    }
    out
}

/// Whether `wd` equals one of [`short_root_displays`].
///
/// `C2` is compared after reversing its nodes, which identifies it with
/// `B2`; the displays are drawn for chains of at least three nodes.
pub fn matches_short_root_display(wd: &WeightedDiagram) -> bool {
    let t = wd.cartan_type();
    let mut labels = wd.labels().to_vec();
    if t.family == Family::C && t.rank == 2 {
        labels.reverse();
    }
    short_root_displays(t.rank).contains(&labels)
}

/// `alpha(H)` values that identify the diagram's `H` on the highest root.
pub fn theta_value(alg: &ChevalleyAlgebra, wd: &WeightedDiagram) -> i64 {
    alg.root_system().highest_root().eval(wd.labels())
}

/// An element of `g` with coefficients `1` on the given basis indices.
pub fn sum_of_basis(alg: &ChevalleyAlgebra, indices: &[usize]) -> LieElement {
    alg.element(indices.iter().map(|&k| (k, Q::one())).collect())
}
