//! Root systems of the simple types, in Bourbaki numbering.
//!
//! Roots are integer vectors of coefficients over the simple roots. The
//! positive roots are generated from the Cartan matrix by root strings; the
//! negative roots are their opposites. Inner products come from the
//! symmetrized Cartan matrix, normalized so that long roots have squared
//! length 2.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{q, q_frac, to_i64, Q};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A simple Cartan type such as `B3` or `E8`; serialized as that string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    /// Dimension of the Lie algebra, from the closed-form root counts.
    pub fn algebra_dim(self) -> usize {
        let l = self.rank;
        let roots = match self.family {
            Family::A => l * (l + 1),
            Family::B | Family::C => 2 * l * l,
            Family::D => 2 * l * (l - 1),
            Family::E => match l {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        };
        roots + l
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl From<CartanType> for String {
    fn from(t: CartanType) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for CartanType {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::ParseType(s.to_string()))?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest
            .parse::<usize>()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// Integer coefficients of a root over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    /// Value on the Cartan element whose simple-root values are `labels`.
    pub fn eval(&self, labels: &[i64]) -> i64 {
        self.0.iter().zip(labels).map(|(c, l)| c * l).sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Bourbaki Cartan matrix, `a[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)`.
pub fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let l = t.rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match t.family {
        Family::A => {
            for i in 0..l - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..l - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_l short
            link(l - 2, l - 1, -1, -2);
        }
        Family::C => {
            for i in 0..l - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_l long
            link(l - 2, l - 1, -2, -1);
        }
        Family::D => {
            for i in 0..l - 2 {
                link(i, i + 1, -1, -1);
            }
            link(l - 3, l - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..l - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => {
            // alpha_1 short, alpha_2 long
            link(0, 1, -3, -1);
        }
    }
    a
}

/// Which family representation of the epsilon coordinates is available.
fn epsilon_simple_roots(t: CartanType) -> Option<Vec<Vec<Q>>> {
    let h = q_frac(1, 2);
    let mh = q_frac(-1, 2);
    match (t.family, t.rank) {
        (Family::F, 4) => {
            // alpha_1 = e2 - e3, alpha_2 = e3 - e4, alpha_3 = e4,
            // alpha_4 = (e1 - e2 - e3 - e4)/2
            Some(vec![
                vec![q(0), q(1), q(-1), q(0)],
                vec![q(0), q(0), q(1), q(-1)],
                vec![q(0), q(0), q(0), q(1)],
                vec![h.clone(), mh.clone(), mh.clone(), mh],
            ])
        }
        (Family::E, 8) => {
            // alpha_1 = (e1 + e8)/2 - (e2 + ... + e7)/2, alpha_2 = e1 + e2,
            // alpha_k = e_{k-1} - e_{k-2} for k = 3..8
            let mut simple = Vec::new();
            let mut a1 = vec![mh.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            simple.push(a1);
            let mut a2 = vec![q(0); 8];
            a2[0] = q(1);
            a2[1] = q(1);
            simple.push(a2);
            for k in 3..=8usize {
                let mut a = vec![q(0); 8];
                a[k - 2] = q(1);
                a[k - 3] = q(-1);
                simple.push(a);
            }
            Some(simple)
        }
        _ => None,
    }
}

/// All roots of a simple type with exact inner products.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    sym: Vec<Vec<Q>>,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    npos: usize,
    epsilon: Option<Vec<Vec<Q>>>,
}

impl RootSystem {
    pub fn new(t: CartanType) -> Result<Self, Error> {
        let t = CartanType::new(t.family, t.rank)?;
        let cartan = cartan_matrix(t);
        let sym = symmetrize(&cartan);
        let positive = positive_roots(&cartan);
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(Root::neg));
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.0.clone(), i))
            .collect();
        Ok(Self {
            cartan_type: t,
            cartan,
            sym,
            npos: positive.len(),
            roots,
            index,
            epsilon: epsilon_simple_roots(t),
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Inner products of simple roots.
    pub fn sym_form(&self) -> &[Vec<Q>] {
        &self.sym
    }

    /// Positive roots first (by height, then coefficients), then their negatives
    /// in the same order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.npos]
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    /// Index of `-roots[i]`.
    pub fn neg_index(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    pub fn inner_coords(&self, a: &[i64], b: &[i64]) -> Q {
        let mut acc = Q::zero();
        for (i, ai) in a.iter().enumerate() {
            if *ai == 0 {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if *bj == 0 {
                    continue;
                }
                acc += &self.sym[i][j] * q(ai * bj);
            }
        }
        acc
    }

    pub fn inner(&self, a: &Root, b: &Root) -> Q {
        self.inner_coords(&a.0, &b.0)
    }

    pub fn norm2(&self, r: &Root) -> Q {
        self.inner(r, r)
    }

    pub fn is_long(&self, r: &Root) -> bool {
        self.norm2(r) == q(2)
    }

    /// `<r, s^vee> = 2 (r, s) / (s, s)`.
    pub fn cartan_integer(&self, r: &Root, s: &Root) -> i64 {
        let v = q(2) * self.inner(r, s) / self.norm2(s);
        to_i64(&v).expect("Cartan integers are integral")
    }

    /// Simple reflection `s_i(r) = r - <r, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, r: &Root, i: usize) -> Root {
        let c: i64 = (0..self.rank()).map(|j| r.0[j] * self.cartan[i][j]).sum();
        let mut out = r.clone();
        out.0[i] -= c;
        out
    }

    /// Largest `p >= 0` with `s - p r` a root.
    pub fn string_down(&self, r: &Root, s: &Root) -> i64 {
        let mut p = 0;
        let mut cur = s.sub(r);
        while self.is_root(&cur.0) {
            p += 1;
            cur = cur.sub(r);
        }
        p
    }

    pub fn highest_root(&self) -> Root {
        let best = self
            .positive_roots()
            .iter()
            .max_by_key(|r| r.height())
            .expect("nonempty root system")
            .clone();
        debug_assert!(self
            .positive_roots()
            .iter()
            .all(|r| r.0.iter().zip(&best.0).all(|(a, b)| a <= b)));
        best
    }

    /// Highest root among the short roots; equals `highest_root` when all
    /// roots have one length.
    pub fn highest_short_root(&self) -> Root {
        self.positive_roots()
            .iter()
            .filter(|r| !self.is_long(r))
            .max_by_key(|r| r.height())
            .cloned()
            .unwrap_or_else(|| self.highest_root())
    }

    pub fn has_two_lengths(&self) -> bool {
        self.positive_roots().iter().any(|r| !self.is_long(r))
    }

    /// Neighbours of node `i` in the Dynkin graph.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (0..self.rank())
            .filter(|&j| j != i && self.cartan[i][j] != 0)
            .collect()
    }

    /// Nodes of degree one in the Dynkin graph.
    pub fn end_nodes(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.neighbours(i).len() == 1)
            .collect()
    }

    pub fn has_epsilon_realization(&self) -> bool {
        self.epsilon.is_some()
    }

    /// Coordinates of `r` in the Bourbaki orthonormal model (F4 and E8 only).
    pub fn epsilon_coords(&self, r: &Root) -> Option<Vec<Q>> {
        let simple = self.epsilon.as_ref()?;
        let dim = simple[0].len();
        let mut out = vec![Q::zero(); dim];
        for (c, e) in r.0.iter().zip(simple) {
            if *c == 0 {
                continue;
            }
            for (o, x) in out.iter_mut().zip(e) {
                *o += q(*c) * x;
            }
        }
        Some(out)
    }

    /// Simple-root coordinates of a vector given in epsilon coordinates.
    pub fn from_epsilon(&self, v: &[Q]) -> Option<Vec<Q>> {
        let simple = self.epsilon.as_ref()?;
        let l = self.rank();
        // Solve sum_i c_i simple[i] = v through the Gram system
        // sum_i c_i (alpha_i, alpha_j) = (v, alpha_j).
        let rows: Vec<crate::linalg::SparseVec> = (0..l)
            .map(|j| {
                (0..l)
                    .filter(|&i| !self.sym[i][j].is_zero())
                    .map(|i| (i, self.sym[i][j].clone()))
                    .collect()
            })
            .collect();
        let rhs: Vec<Q> = (0..l)
            .map(|j| {
                v.iter()
                    .zip(&simple[j])
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect();
        let sol = crate::linalg::solve_rows(&rows, &rhs, l)?;
        let coords: Vec<Q> = (0..l)
            .map(|i| sol.get(&i).cloned().unwrap_or_else(Q::zero))
            .collect();
        // reject vectors outside the span
        let mut back = vec![Q::zero(); v.len()];
        for (c, e) in coords.iter().zip(simple) {
            for (b, x) in back.iter_mut().zip(e) {
                *b += c * x;
            }
        }
        (back == v).then_some(coords)
    }

    pub fn epsilon_dot(a: &[Q], b: &[Q]) -> Q {
        a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
    }
}

/// Symmetrize a Cartan matrix: `d_i a_ij = d_j a_ji`, scaled so the longest
/// simple root has squared length 2.
fn symmetrize(a: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let l = a.len();
    let mut d: Vec<Option<Q>> = vec![None; l];
    d[0] = Some(Q::one());
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if j != i && a[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * q(a[i][j]) / q(a[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let max = d.iter().max().unwrap().clone();
    // (alpha_i, alpha_i) = 2 d_i / max
    (0..l)
        .map(|i| (0..l).map(|j| &d[i] / &max * q(a[i][j])).collect())
        .collect()
}

/// Positive roots by root strings: `beta + alpha_i` is a root iff the
/// `alpha_i`-string through `beta` extends upward, i.e. `p - <beta, alpha_i^vee> > 0`
/// where `p` is how far the string goes down.
fn positive_roots(a: &[Vec<i64>]) -> Vec<Root> {
    let l = a.len();
    let mut known: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut layers: Vec<Vec<Root>> = vec![(0..l).map(|i| Root::simple(l, i)).collect()];
    for r in &layers[0] {
        known.insert(r.0.clone(), ());
    }
    loop {
        let mut next: Vec<Root> = Vec::new();
        for beta in layers.last().unwrap() {
            for i in 0..l {
                let pairing: i64 = (0..l).map(|j| beta.0[j] * a[i][j]).sum();
                let mut p = 0;
                let mut cur = beta.0.clone();
                loop {
                    cur[i] -= 1;
                    if known.contains_key(&cur) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.0.clone();
                    up[i] += 1;
                    if !known.contains_key(&up) {
                        known.insert(up.clone(), ());
                        next.push(Root(up));
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    let mut all: Vec<Root> = layers.into_iter().flatten().collect();
    all.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| y.0.cmp(&x.0)));
    all
}

/// Sum of simple roots and the three branch ends of an E-type diagram.
#[derive(Clone, Debug, Serialize)]
pub struct SigmaFacts {
    pub sigma: Root,
    /// End nodes (0-based Bourbaki indices).
    pub ends: [usize; 3],
    pub sigma_is_root: bool,
    /// Whether `sigma - alpha_end` is a root, per end.
    pub sigma_minus_end_is_root: [bool; 3],
    /// For each pair of ends `(a, b)`: is `(sigma - alpha_a, sigma - alpha_b) = 0`.
    pub orthogonal: Vec<((usize, usize), bool)>,
}

impl SigmaFacts {
    pub fn all_roots(&self) -> bool {
        self.sigma_is_root && self.sigma_minus_end_is_root.iter().all(|&b| b)
    }
}

pub fn e_type_sigma_facts(rs: &RootSystem) -> Result<SigmaFacts, Error> {
    let t = rs.cartan_type();
    if t.family != Family::E {
        return Err(Error::WrongType {
            op: "e_type_sigma_facts",
            expected: "E6, E7 or E8",
            got: t,
        });
    }
    let l = rs.rank();
    let sigma = Root(vec![1; l]);
    let ends_vec = rs.end_nodes();
    let ends: [usize; 3] = ends_vec
        .as_slice()
        .try_into()
        .map_err(|_| Error::Inconsistent(format!("{t} has {} end nodes", ends_vec.len())))?;
    let diffs: Vec<Root> = ends
        .iter()
        .map(|&e| sigma.sub(&rs.simple_root(e)))
        .collect();
    let sigma_minus_end_is_root = [
        rs.is_root(&diffs[0].0),
        rs.is_root(&diffs[1].0),
        rs.is_root(&diffs[2].0),
    ];
    let mut orthogonal = Vec::new();
    for a in 0..3 {
        for b in a + 1..3 {
            orthogonal.push(((ends[a], ends[b]), rs.inner(&diffs[a], &diffs[b]).is_zero()));
        }
    }
    Ok(SigmaFacts {
        sigma_is_root: rs.is_root(&sigma.0),
        sigma,
        ends,
        sigma_minus_end_is_root,
        orthogonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn parse_and_rank_bounds() {
        assert_eq!("E8".parse::<CartanType>().unwrap().rank, 8);
        assert_eq!("b_3".parse::<CartanType>().unwrap().family, Family::B);
        assert!("B1".parse::<CartanType>().is_err());
        assert!("D2".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert!("F5".parse::<CartanType>().is_err());
        assert!("G3".parse::<CartanType>().is_err());
        assert!("X2".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
    }

    #[test]
    fn cartan_integers_and_lengths() {
        let g2 = rs("G2");
        assert!(!g2.is_long(&g2.simple_root(0)));
        assert!(g2.is_long(&g2.simple_root(1)));
        assert_eq!(g2.norm2(&g2.simple_root(0)), q_frac(2, 3));
        let b3 = rs("B3");
        assert!(!b3.is_long(&b3.simple_root(2)));
        let c3 = rs("C3");
        assert!(c3.is_long(&c3.simple_root(2)));
        assert!(!c3.is_long(&c3.simple_root(0)));
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("A1").highest_root(), Root(vec![1]));
        assert_eq!(rs("G2").highest_root(), Root(vec![3, 2]));
        assert_eq!(rs("F4").highest_root(), Root(vec![2, 3, 4, 2]));
        assert_eq!(rs("E8").highest_root(), Root(vec![2, 3, 4, 6, 5, 4, 3, 2]));
        assert_eq!(rs("B3").highest_root(), Root(vec![1, 2, 2]));
        assert_eq!(rs("C3").highest_root(), Root(vec![2, 2, 1]));
    }

    #[test]
    fn f4_roots_named_in_exclusion_argument() {
        let f4 = rs("F4");
        assert!(f4.is_root(&[1, 1, 1, 0]));
        assert!(f4.is_root(&[1, 2, 2, 2]));
        assert!(f4.is_root(&[1, 2, 4, 2]));
        assert!(!f4.is_long(&Root(vec![1, 1, 1, 0])));
        assert!(f4.is_long(&Root(vec![1, 2, 2, 2])));
    }

    #[test]
    fn epsilon_realization_matches_sym_form() {
        for name in ["F4", "E8"] {
            let r = rs(name);
            let eps: Vec<Vec<Q>> = r
                .roots()
                .iter()
                .map(|x| r.epsilon_coords(x).unwrap())
                .collect();
            for (i, a) in r.roots().iter().enumerate().step_by(3) {
                for (j, b) in r.roots().iter().enumerate().step_by(5) {
                    assert_eq!(
                        RootSystem::epsilon_dot(&eps[i], &eps[j]),
                        r.inner(a, b),
                        "{name}: {a} . {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn from_epsilon_inverts_epsilon_coords() {
        let e8 = rs("E8");
        let theta = e8.highest_root();
        let eps = e8.epsilon_coords(&theta).unwrap();
        let back = e8.from_epsilon(&eps).unwrap();
        assert_eq!(back, theta.0.iter().map(|&c| q(c)).collect::<Vec<_>>());
        // e8 + e7 is the highest root in this model
        let mut v = vec![q(0); 8];
        v[6] = q(1);
        v[7] = q(1);
        assert_eq!(eps, v);
    }

    #[test]
    fn e_sigma_facts() {
        for name in ["E6", "E7", "E8"] {
            let f = e_type_sigma_facts(&rs(name)).unwrap();
            assert!(f.all_roots(), "{name}");
            assert!(f.orthogonal.iter().all(|(_, o)| *o), "{name}");
        }
        assert!(e_type_sigma_facts(&rs("D5")).is_err());
    }

    #[test]
    fn end_nodes_bourbaki() {
        assert_eq!(rs("E6").end_nodes(), vec![0, 1, 5]);
        assert_eq!(rs("E8").end_nodes(), vec![0, 1, 7]);
        assert_eq!(rs("D5").end_nodes(), vec![0, 3, 4]);
    }
}
